from itertools import permutations

import pytest

from hopffrob.builders import (
    CayleyTable,
    cyclic_group,
    dihedral_group,
    function_algebra,
    group_algebra,
    preset,
    symmetric3,
    symmetric_group,
    taft,
)
from hopffrob.errors import NotAGroup, ParseError
from hopffrob.hopfcore import check_hopf
from hopffrob.scalars import primitive_root
from hopffrob.tensorlin import LinMap, kron


def test_cayley_rejects_non_groups():
    with pytest.raises(NotAGroup):
        CayleyTable(2, [[0, 1], [1, 1]], 0, "ab")
    with pytest.raises(NotAGroup):
        CayleyTable(2, [[0, 1], [1, 0]], 1, "ab")
    with pytest.raises(NotAGroup):
        CayleyTable(2, [[0, 1]], 0, "ab")
    # a loop that is not associative
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAGroup):
        CayleyTable(5, loop, 0, "abcde")


def test_symmetric3_matches_permutation_composition():
    t = symmetric3()
    assert t.order == 6
    assert t.names == ("e", "r", "r^2", "f", "fr", "fr^2")
    # r has order 3, f has order 2, f r f = r^-1
    r, f = 1, 3
    assert t.table[r][t.table[r][r]] == 0
    assert t.table[f][f] == 0
    assert t.table[t.table[f][r]][f] == t.inverse(r)


def test_symmetric_group_four():
    t = symmetric_group(4)
    perms = sorted(permutations(range(4)))
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            assert perms[t.table[i][j]] == tuple(p[q[k]] for k in range(4))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
def test_dihedral_orders(n):
    t = dihedral_group(n)
    assert t.order == 2 * n
    non_abelian = any(t.table[a][b] != t.table[b][a] for a in range(t.order) for b in range(t.order))
    assert non_abelian == (n >= 3)


def test_group_algebra_against_group():
    t = cyclic_group(4)
    h = group_algebra(t)
    for a in range(4):
        for b in range(4):
            assert h.mult.col(a * 4 + b) == {(a + b) % 4: 1}
        assert h.comult.col(a) == {a * 4 + a: 1}
        assert h.antipode.col(a) == {(-a) % 4: 1}
    assert not check_hopf(h)


def test_function_algebra_against_group():
    t = symmetric3()
    h = function_algebra(t)
    assert not check_hopf(h)
    for g in range(6):
        expected = {h_ * 6 + k: 1 for h_ in range(6) for k in range(6) if t.table[h_][k] == g}
        assert h.comult.col(g) == expected
    assert h.is_commutative() and not h.is_cocommutative()


def test_taft_relations():
    for n in (2, 3, 4):
        h = taft(n)
        z = primitive_root(n)
        M = h.mult
        g = LinMap.column([1 if i == n else 0 for i in range(n * n)])
        x = LinMap.column([1 if i == 1 else 0 for i in range(n * n)])

        def times(a, b):
            return M @ kron(a, b)

        assert times(x, g) == times(g, x) * z
        p = h.unit
        for _ in range(n):
            p = times(p, g)
        assert p == h.unit
        p = h.unit
        for _ in range(n):
            p = times(p, x)
        assert p.is_zero()
        assert h.comult @ x == kron(h.unit, x) + kron(x, g)


def test_taft_rejects_bad_q():
    with pytest.raises(ValueError):
        taft(4, q=-1)
    with pytest.raises(ValueError):
        taft(1)


def test_taft_other_root_is_hopf():
    z = primitive_root(3)
    assert not check_hopf(taft(3, q=z))


def test_presets():
    assert preset("trivial").dim == 1
    assert preset("cyclic:5").dim == 5
    assert preset("sym:4").dim == 24
    assert preset("dihedral:4").dim == 8
    assert preset("taft:3").dim == 9
    assert preset("dual:sym:3").dim == 6
    assert preset("dual:taft:2").dim == 4
    for bad in ["foo", "cyclic:x", "cyclic:0", "taft:1", "sym:9", "dual:"]:
        with pytest.raises(ParseError):
            preset(bad)
