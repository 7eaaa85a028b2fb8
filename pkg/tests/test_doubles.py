import pytest
from conftest import algebra, classical_qt, hf_of, red_qt_of

from hopffrob.builders import symmetric3
from hopffrob.doubles import (
    coordinate_dual,
    double_iso_check,
    drinfeld_double,
    rho_double_sides,
    rho_iso,
    yang_baxter_check,
)
from hopffrob.hopfcore import check_hopf, hopf_morphism_report
from hopffrob.tensorlin import LinMap, identity, kron, swap

SMALL = ["trivial", "cyclic:2", "cyclic:3", "taft:2", "sym:3"]


def test_group_double_against_conjugation_formula():
    # D(G) on k[G] (x) k^G: (a (x) d_x)(b (x) d_y) = [b^-1 x b = y] ab (x) d_y
    t = symmetric3()
    n = t.order
    D = classical_qt("sym:3").hopf
    mul, inv = t.table, t.inverse
    for a in range(n):
        for x in range(n):
            for b in range(n):
                for y in range(n):
                    col = ((a * n + x) * n + b) * n + y
                    conj = mul[mul[inv(b)][x]][b]
                    expected = {mul[a][b] * n + y: 1} if conj == y else {}
                    assert D.mult.col(col) == expected


@pytest.mark.parametrize("name", SMALL)
def test_classical_double(name):
    qt = classical_qt(name)
    h = algebra(name)
    D = qt.hopf
    assert D.dim == h.dim ** 2
    assert check_hopf(D).ok
    assert qt.report().ok
    d = h.dim
    K = coordinate_dual(h)
    # both factors embed as Hopf subalgebras
    assert not hopf_morphism_report(kron(identity(d), K.unit), h, D)
    assert not hopf_morphism_report(kron(h.unit, identity(d)), K, D)


@pytest.mark.parametrize("name", SMALL)
def test_red_double(name):
    qt = red_qt_of(name)
    hf = hf_of(name)
    assert check_hopf(qt.hopf).ok
    assert qt.report().ok
    d = hf.dim
    assert not hopf_morphism_report(kron(identity(d), hf.red_hopf.unit), hf.green_hopf, qt.hopf)


def test_double_of_abelian_group_is_commutative():
    D = classical_qt("cyclic:3").hopf
    assert D.is_commutative()
    assert not classical_qt("sym:3").hopf.is_commutative()


@pytest.mark.parametrize("name", ["taft:2", "sym:3", "cyclic:3"])
def test_yang_baxter(name):
    qt = classical_qt(name)
    assert yang_baxter_check(qt.hopf, qt.r_matrix)
    rq = red_qt_of(name)
    assert yang_baxter_check(rq.hopf, rq.r_matrix)


def test_wrong_r_matrix_rejected():
    qt = classical_qt("taft:2")
    n = qt.hopf.dim
    flipped = swap(n, n) @ qt.r_matrix
    assert not check_quasi(qt.hopf, flipped)
    assert not check_quasi(qt.hopf, qt.r_matrix * 2)


def check_quasi(h, R):
    from hopffrob.doubles import check_quasitriangular

    return check_quasitriangular(h, R).ok


@pytest.mark.parametrize("name", SMALL)
def test_rho_intertwines(name):
    hf = hf_of(name)
    rho, rho_inv = rho_iso(hf)
    assert rho @ rho_inv == identity(hf.dim)
    lhs, rhs = rho_double_sides(hf)
    assert lhs == rhs
    assert double_iso_check(hf)


def test_taft_double_is_not_trivially_a_product():
    D = drinfeld_double(algebra("taft:2"))
    h = algebra("taft:2")
    plain = kron(h.mult, coordinate_dual(h).mult) @ kron(identity(4), swap(4, 4), identity(4))
    assert D.mult != plain
    assert not D.is_commutative() and not D.is_cocommutative()


def test_cocommutative_trivial_r_matrix():
    from hopffrob.doubles import check_quasitriangular

    h = algebra("cyclic:2")
    one = kron(h.unit, h.unit)
    assert check_quasitriangular(h, one).ok
    assert yang_baxter_check(h, one)
    g = LinMap.column([0, 1])
    bad = check_quasitriangular(h, kron(h.unit, g))
    assert {"split_l", "split_r"} & bad.violated


def test_z2_double_commutative_and_cocommutative():
    D = classical_qt("cyclic:2").hopf
    assert D.dim == 4
    assert D.is_commutative() and D.is_cocommutative()


def test_rho_small_cases():
    rho, rho_inv = rho_iso(hf_of("trivial"))
    assert rho == identity(1) and rho_inv == identity(1)
    rho, rho_inv = rho_iso(hf_of("cyclic:2"))
    assert rho_inv @ rho == identity(2)
