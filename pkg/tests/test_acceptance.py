"""End-to-end acceptance checks, all exact.

Run under pytest (one test per criterion, summary printed at the end) or
directly with ``python tests/test_acceptance.py``.
"""

import json
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import algebra, classical_qt, hf_of, red_qt_of  # noqa: E402

from hopffrob.builders import taft  # noqa: E402
from hopffrob.cli import export_spec, fixture_path, main, parse_spec, run_pipeline  # noqa: E402
from hopffrob.doubles import double_iso_check, yang_baxter_check  # noqa: E402
from hopffrob.errors import Singular  # noqa: E402
from hopffrob.hopfcore import antipode_order, check_hopf, standard_cap, standard_cup  # noqa: E402
from hopffrob.hopffrobenius import (  # noqa: E402
    element_from_form,
    form_from_element,
    green_frobenius,
    rescale,
    scalar_equivalence,
    verify_hf,
)
from hopffrob.integrals import (  # noqa: E402
    antipode_inverse_formula,
    cointegral_space,
    frobenius_condition,
    integral_morphism,
    integral_space,
)
from hopffrob.scalars import invert, primitive_root  # noqa: E402
from hopffrob.tensorlin import LinMap, identity, invert_matrix, kernel_basis, kron  # noqa: E402

ALL_EXAMPLES = [
    "trivial",
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "cyclic:5",
    "sym:3",
    "dihedral:4",
    "taft:2",
    "taft:3",
    "taft:4",
    "dual:sym:3",
]

RESULTS = {}

# Taft algebra n = 2 on the basis (1, x, g, gx), transcribed from the worked tables.
TAFT2_MULT = {
    # row element times column element
    "1": ["1", "x", "g", "gx"],
    "x": ["x", "0", "-gx", "0"],
    "g": ["g", "gx", "1", "x"],
    "gx": ["gx", "0", "-x", "0"],
}
TAFT2_COMULT = {
    "1": [("1", "1", 1)],
    "x": [("1", "x", 1), ("x", "g", 1)],
    "g": [("g", "g", 1)],
    "gx": [("g", "gx", 1), ("gx", "1", 1)],
}
TAFT2_COUNIT = {"1": 1, "x": 0, "g": 1, "gx": 0}
TAFT2_ANTIPODE = {"1": "1", "x": "gx", "g": "g", "gx": "-x"}
BASIS = ["1", "x", "g", "gx"]


def _vec(term):
    sign = -1 if term.startswith("-") else 1
    name = term.lstrip("-")
    if name == "0":
        return [0] * 4
    return [sign if b == name else 0 for b in BASIS]


def criterion_1():
    h = taft(2)
    mult = LinMap.from_rows(
        [[_vec(TAFT2_MULT[a][j])[o] for a in BASIS for j in range(4)] for o in range(4)]
    )
    comult_cols = []
    for a in BASIS:
        col = [0] * 16
        for p, q, c in TAFT2_COMULT[a]:
            col[BASIS.index(p) * 4 + BASIS.index(q)] += c
        comult_cols.append(col)
    comult = LinMap.from_rows([[comult_cols[j][i] for j in range(4)] for i in range(16)])
    counit = LinMap.row([TAFT2_COUNIT[b] for b in BASIS])
    antipode = LinMap.from_rows([[_vec(TAFT2_ANTIPODE[b])[o] for b in BASIS] for o in range(4)])
    checks = {
        "basis": tuple(h.basis_names) == tuple(BASIS),
        "mult": h.mult == mult,
        "comult": h.comult == comult,
        "counit": h.counit == counit,
        "antipode": h.antipode == antipode,
        "unit": h.unit == LinMap.column([1, 0, 0, 0]),
    }
    return all(checks.values()), checks


def criterion_2():
    h = taft(2)
    L = LinMap.column([0, 1, 0, -1])
    l = LinMap.row([0, 1, 0, 0])
    pair = frobenius_condition(h)
    checks = {
        "cointegral_space": cointegral_space(h) == [L],
        "integral_space": integral_space(h) == [l],
        "cointegral": pair.cointegral == L,
        "integral": pair.integral == l,
        "normalised": pair.pairing() == 1,
    }
    return all(checks.values()), checks


def criterion_3():
    checks = {}
    for n in (2, 3, 4):
        h = taft(n)
        z = primitive_root(n)
        # sum_{i=1..n} z^{-i} g^i x^{n-1}; g^n = 1 so i = n lands on index n-1
        expected = [0] * (n * n)
        for i in range(1, n + 1):
            expected[(i % n) * n + (n - 1)] += invert(z) ** i
        pair = frobenius_condition(h)
        got = pair.cointegral.column_values()
        lead = next(i for i, v in enumerate(expected) if v != 0)
        k = got[lead] * invert(expected[lead])
        checks[n] = k != 0 and all(g == k * e for g, e in zip(got, expected))
    return all(checks.values()), checks


def criterion_4():
    checks = {f"taft:{n}": antipode_order(taft(n)) == 2 * n for n in (2, 3, 4)}
    checks["sym:3"] = antipode_order(algebra("sym:3")) == 2
    checks["trivial"] = antipode_order(algebra("trivial")) == 1
    return all(checks.values()), checks


def criterion_5():
    names = ["trivial", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "sym:3", "dihedral:4",
             "taft:2", "taft:3", "taft:4", "dual:sym:3"]
    checks = {}
    for name in names:
        report = verify_hf(hf_of(name))
        checks[name] = report.ok and len(report.checked) >= 20
    return all(checks.values()), checks


def criterion_6():
    checks = {}
    for name in ALL_EXAMPLES:
        h = algebra(name)
        checks[name] = antipode_inverse_formula(h, frobenius_condition(h)) == invert_matrix(h.antipode)
    return all(checks.values()), checks


def _random_invertible(rng, d):
    while True:
        A = LinMap.from_rows([[rng.randint(-2, 2) for _ in range(d)] for _ in range(d)])
        try:
            return A, invert_matrix(A)
        except Singular:
            continue


def criterion_7():
    rng = random.Random(20240517)
    checks = {}
    for name in ALL_EXAMPLES:
        h = algebra(name)
        d = h.dim
        I = identity(d)
        P = integral_morphism(h)
        pair = frobenius_condition(h)
        fixed = kernel_basis(P - I)
        cofixed = [v.T for v in kernel_basis((P - I).T)]
        ok = P @ P == P and P == pair.cointegral @ pair.integral
        ok = ok and fixed == cointegral_space(h) and cofixed == integral_space(h)
        for _ in range(2):
            A, Ainv = _random_invertible(rng, d)
            cap = kron(A, Ainv.T) @ standard_cap(d)
            cup = standard_cup(d) @ kron(A.T, Ainv)
            ok = ok and integral_morphism(h, cap, cup) == P
        checks[name] = ok
    return all(checks.values()), checks


def criterion_8():
    z3 = primitive_root(3)
    checks = {}
    for name, ks in [("taft:2", [2, -1]), ("taft:3", [2, -1, 1 + z3]), ("sym:3", [2, -1])]:
        hf = hf_of(name)
        for k in ks:
            checks[f"{name} k={k}"] = scalar_equivalence(hf, rescale(hf, k)) == k
    return all(checks.values()), checks


def criterion_9():
    checks = {}
    cases = [
        ("taft:2", [[0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1], [2, 0, -1, 3]]),
        ("cyclic:2", [[1, 0], [0, 1], [3, 1]]),
    ]
    for name, copoints in cases:
        frob = green_frobenius(hf_of(name))
        for vals in copoints:
            u = LinMap.row(vals)
            beta, cap = form_from_element(frob, u)
            back = element_from_form(frob, beta, cap)
            checks[f"{name} {vals}"] = back == u and form_from_element(frob, back) == (beta, cap)
    return all(checks.values()), checks


def criterion_10():
    dims = {"trivial": 1, "cyclic:2": 4, "sym:3": 36, "taft:2": 16}
    checks = {}
    for name, dim in dims.items():
        cq, rq = classical_qt(name), red_qt_of(name)
        checks[name] = (
            cq.hopf.dim == dim
            and rq.hopf.dim == dim
            and check_hopf(cq.hopf).ok
            and check_hopf(rq.hopf).ok
            and cq.report().ok
            and rq.report().ok
            and double_iso_check(hf_of(name))
            and yang_baxter_check(cq.hopf, cq.r_matrix)
            and yang_baxter_check(rq.hopf, rq.r_matrix)
        )
    return all(checks.values()), checks


def criterion_11():
    base = json.loads(fixture_path("taft2.json").read_text(encoding="utf-8"))
    assert run_pipeline(parse_spec(json.dumps(base))).ok
    checks = {}
    for table in ("mult", "comult", "counit", "unit", "antipode"):
        for pos, entry in enumerate(base[table]):
            data = json.loads(json.dumps(base))
            c = data[table][pos][-1]
            data[table][pos][-1] = c[1:] if c.startswith("-") else "-" + c
            report = run_pipeline(parse_spec(json.dumps(data)))
            checks[f"{table}{entry[:-1]}"] = not report.ok
    mult_flips = [k for k in checks if k.startswith("mult")]
    ok = all(checks.values()) and len(mult_flips) == 12
    return ok, {k: v for k, v in checks.items() if not v} or f"{len(checks)} flips detected"


def criterion_12():
    import contextlib
    import io

    checks = {}
    for name in ("taft:2", "taft:3", "sym:3"):
        text = export_spec(algebra(name))
        checks[f"round trip {name}"] = export_spec(parse_spec(text)) == text
    green = fixture_path("taft2.json")
    checks["fixture canonical"] = export_spec(parse_spec(green.read_text(encoding="utf-8"))) == green.read_text(
        encoding="utf-8"
    )
    sink = io.StringIO()
    with contextlib.redirect_stdout(sink), contextlib.redirect_stderr(sink):
        checks["exit green"] = main(["report", str(green)]) == 0
        checks["exit mutated"] = main(["report", str(fixture_path("taft2_mutated.json"))]) == 1
        checks["exit malformed"] = main(["report", str(fixture_path("taft2_malformed.json"))]) == 2
    return all(checks.values()), checks


CRITERIA = {
    1: ("Taft n=2 structure constants match the tables", criterion_1),
    2: ("Taft n=2 cointegral x - gx and integral delta_x", criterion_2),
    3: ("general Taft cointegral formula for n = 2, 3, 4", criterion_3),
    4: ("antipode orders", criterion_4),
    5: ("Hopf-Frobenius structure verifies on all examples", criterion_5),
    6: ("integral formula inverts the antipode", criterion_6),
    7: ("integral morphism properties and duality independence", criterion_7),
    8: ("uniqueness up to scalar", criterion_8),
    9: ("copoint and Frobenius form round trip", criterion_9),
    10: ("classical and red doubles, R-matrices, isomorphism", criterion_10),
    11: ("every sign flip in the Taft n=2 fixture is detected", criterion_11),
    12: ("CLI round trip and exit codes", criterion_12),
}


def evaluate(n):
    title, fn = CRITERIA[n]
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash counts as a failure, not an error in the harness
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    RESULTS[n] = (bool(ok), title)
    return bool(ok), detail


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    ok, detail = evaluate(n)
    print(f"ACCEPTANCE {n}: {'PASS' if ok else 'FAIL'}")
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for n in sorted(CRITERIA):
        ok, detail = evaluate(n)
        failed += not ok
        print(f"ACCEPTANCE {n}: {'PASS' if ok else 'FAIL'}  {CRITERIA[n][0]}")
        if not ok:
            print(f"    {detail}")
    sys.exit(1 if failed else 0)
