"""Command-line front end and the JSON algebra specification format.

A specification is a JSON object::

    {
      "field": {"kind": "cyclotomic", "order": 3},
      "dim": 2,
      "basis": ["e", "g"],
      "unit": [[0, "1"]],
      "counit": [[0, "1"], [1, "1"]],
      "mult": [[i, j, k, "c"], ...],      # b_i b_j contains c b_k
      "comult": [[i, j, k, "c"], ...],    # D(b_i) contains c b_j (x) b_k
      "antipode": [[i, k, "c"], ...]      # optional; S(b_i) contains c b_k
    }

Scalars are integers or strings such as ``"-1/2"`` or ``"1 - z^2"``.
Omitted entries are zero; listing the same position twice is an error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field as dc_field
from importlib import resources
from pathlib import Path

from .builders import PRESET_HELP, preset
from .doubles import (
    check_quasitriangular,
    double_iso_check,
    drinfeld_double,
    drinfeld_r_matrix,
    red_double,
    red_r_matrix,
    yang_baxter_check,
)
from .errors import FieldMismatch, HopfError, ParseError
from .hopfcore import BialgebraData, HopfData, check_bialgebra, check_hopf, solve_antipode
from .hopffrobenius import build_hf, verify_hf
from .integrals import cointegral_space, equaliser_dimension_check, frobenius_condition, integral_space
from .scalars import Field
from .tensorlin import LinMap

KEYS = ("field", "dim", "basis", "unit", "counit", "mult", "comult", "antipode")
REQUIRED = ("field", "dim", "mult", "unit", "comult", "counit")
# number of basis indices in each entry, before the scalar
ARITY = {"unit": 1, "counit": 1, "mult": 3, "comult": 3, "antipode": 2}


@dataclass
class AlgebraSpec:
    field: Field
    dim: int
    basis: tuple
    mult: dict
    unit: dict
    comult: dict
    counit: dict
    antipode: dict = None

    def bialgebra(self) -> BialgebraData:
        d = self.dim
        mult = LinMap.from_entries(d, d * d, {(k, i * d + j): c for (i, j, k), c in self.mult.items()})
        comult = LinMap.from_entries(d * d, d, {(j * d + k, i): c for (i, j, k), c in self.comult.items()})
        unit = LinMap.from_entries(d, 1, {(k, 0): c for (k,), c in self.unit.items()})
        counit = LinMap.from_entries(1, d, {(0, i): c for (i,), c in self.counit.items()})
        return BialgebraData(d, mult, unit, comult, counit, self.basis, self.field)

    def hopf(self) -> HopfData:
        """The Hopf algebra, solving for the antipode when none is given."""
        b = self.bialgebra()
        if self.antipode is None:
            return solve_antipode(b)
        d = self.dim
        S = LinMap.from_entries(d, d, {(k, i): c for (i, k), c in self.antipode.items()})
        return HopfData(b, S)


# ----------------------------------------------------------------------------
# parsing


def _line_col(text: str, pos: int):
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def _locate(text: str, key: str, index: int = None):
    """Offset of ``"key"`` in the top-level object, or of its ``index``-th element."""
    m = re.search(r'"' + re.escape(key) + r'"\s*:\s*', text)
    if m is None:
        return None
    pos = m.end()
    if index is None:
        return pos
    dec = json.JSONDecoder()
    ws = re.compile(r"[\s,]*")
    if pos >= len(text) or text[pos] != "[":
        return pos
    pos = ws.match(text, pos + 1).end()
    for _ in range(index):
        try:
            _, pos = dec.raw_decode(text, pos)
        except json.JSONDecodeError:
            return pos
        pos = ws.match(text, pos).end()
    return pos


class _Parser:
    def __init__(self, text: str):
        self.text = text

    def fail(self, message, key=None, index=None, exc=FieldMismatch):
        pos = _locate(self.text, key, index) if key else None
        line, col = _line_col(self.text, pos) if pos is not None else (None, None)
        if exc is FieldMismatch:
            where = f" (line {line}, column {col})" if line else ""
            err = FieldMismatch(message + where)
            err.line, err.column = line, col
            raise err
        raise ParseError(message, line, col)

    def error(self, message, key=None, index=None):
        self.fail(message, key, index, exc=ParseError)

    def load(self) -> dict:
        if not self.text.strip():
            raise ParseError("empty specification", 1, 1)

        def pairs(items):
            obj = {}
            for k, v in items:
                if k in obj:
                    raise ParseError(f"duplicate key {k!r}")
                obj[k] = v
            return obj

        try:
            raw = json.loads(self.text, object_pairs_hook=pairs)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
        if not isinstance(raw, dict):
            raise ParseError("specification must be a JSON object", 1, 1)
        return raw

    def parse(self) -> AlgebraSpec:
        raw = self.load()
        for k in raw:
            if k not in KEYS:
                self.error(f"unknown key {k!r}", k)
        for k in REQUIRED:
            if k not in raw:
                raise ParseError(f"missing key {k!r}")
        fld = self.parse_field(raw["field"])
        d = raw["dim"]
        if not isinstance(d, int) or isinstance(d, bool) or d < 1:
            self.error("dim must be a positive integer", "dim")
        basis = raw.get("basis", [f"e{i}" for i in range(d)])
        if (
            not isinstance(basis, list)
            or len(basis) != d
            or not all(isinstance(b, str) for b in basis)
        ):
            self.error(f"basis must be a list of {d} strings", "basis")
        if len(set(basis)) != d:
            self.error("basis names must be distinct", "basis")
        tables = {}
        for key in ARITY:
            if key in raw:
                tables[key] = self.parse_table(key, raw[key], d, fld)
        return AlgebraSpec(
            field=fld,
            dim=d,
            basis=tuple(basis),
            mult=tables["mult"],
            unit=tables["unit"],
            comult=tables["comult"],
            counit=tables["counit"],
            antipode=tables.get("antipode"),
        )

    def parse_field(self, spec) -> Field:
        if not isinstance(spec, dict) or set(spec) - {"kind", "order"}:
            self.error('field must be {"kind": ..., "order": ...}', "field")
        kind = spec.get("kind")
        if kind == "rational":
            if spec.get("order", 1) != 1:
                self.error("a rational field has order 1", "field")
            return Field(1)
        if kind == "cyclotomic":
            n = spec.get("order")
            if not isinstance(n, int) or isinstance(n, bool) or n < 2:
                self.error("cyclotomic field needs an integer order >= 2", "field")
            return Field(n)
        self.error(f"unknown field kind {kind!r}", "field")

    def parse_table(self, key, entries, d, fld: Field) -> dict:
        arity = ARITY[key]
        if not isinstance(entries, list):
            self.error(f"{key} must be a list", key)
        out = {}
        for n, entry in enumerate(entries):
            if not isinstance(entry, list) or len(entry) != arity + 1:
                self.error(f"{key} entries must have {arity} indices and a scalar", key, n)
            idx = entry[:arity]
            for i in idx:
                if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < d:
                    self.error(f"index {i!r} out of range for dimension {d}", key, n)
            try:
                value = fld.parse(entry[-1])
            except FieldMismatch as exc:
                self.fail(str(exc), key, n)
            except ParseError as exc:
                self.error(str(exc), key, n)
            idx = tuple(idx)
            if idx in out:
                self.error(f"{key} lists position {list(idx)} twice", key, n)
            if value != 0:
                out[idx] = value
        return out


def parse_spec(text: str) -> AlgebraSpec:
    return _Parser(text).parse()


# ----------------------------------------------------------------------------
# export


def _entries(table: dict, fld: Field):
    return [list(k) + [fld.format(v)] for k, v in sorted(table.items())]


def spec_from_hopf(h, include_antipode: bool = True) -> AlgebraSpec:
    b = h.bialgebra if isinstance(h, HopfData) else h
    d = b.dim
    mult = {(j // d, j % d, i): v for (i, j), v in b.mult.items()}
    comult = {(j, i // d, i % d): v for (i, j), v in b.comult.items()}
    unit = {(i,): v for (i, _), v in b.unit.items()}
    counit = {(j,): v for (_, j), v in b.counit.items()}
    antipode = None
    if include_antipode and isinstance(h, HopfData):
        antipode = {(j, i): v for (i, j), v in h.antipode.items()}
    return AlgebraSpec(b.field, d, tuple(b.basis_names), mult, unit, comult, counit, antipode)


def export_spec(x) -> str:
    """Canonical JSON text for a spec, bialgebra or Hopf algebra."""
    spec = x if isinstance(x, AlgebraSpec) else spec_from_hopf(x)
    fld = spec.field
    field_obj = {"kind": fld.kind} if fld.order == 1 else {"kind": fld.kind, "order": fld.order}
    sections = [
        ("field", json.dumps(field_obj)),
        ("dim", json.dumps(spec.dim)),
        ("basis", json.dumps(list(spec.basis), ensure_ascii=False)),
    ]
    tables = [("unit", spec.unit), ("counit", spec.counit), ("mult", spec.mult), ("comult", spec.comult)]
    if spec.antipode is not None:
        tables.append(("antipode", spec.antipode))
    for key, table in tables:
        rows = [json.dumps(e, ensure_ascii=False) for e in _entries(table, fld)]
        body = "[]" if not rows else "[\n    " + ",\n    ".join(rows) + "\n  ]"
        sections.append((key, body))
    return "{\n" + ",\n".join(f'  "{k}": {v}' for k, v in sections) + "\n}\n"


# ----------------------------------------------------------------------------
# pipeline

STAGES = ("bialgebra", "hopf", "integrals", "hf", "double", "red_double", "quasitriangular", "iso")
DEPENDS = {
    "bialgebra": (),
    "hopf": ("bialgebra",),
    "integrals": ("hopf",),
    "hf": ("integrals",),
    "double": ("hopf",),
    "red_double": ("hf",),
    "quasitriangular": ("double", "red_double"),
    "iso": ("double", "red_double"),
}


@dataclass
class StageResult:
    status: str  # ok, failed, skipped
    details: list = dc_field(default_factory=list)


@dataclass
class PipelineReport:
    source: str
    stages: dict = dc_field(default_factory=dict)
    values: dict = dc_field(default_factory=dict)
    # constructed structures, kept for export but never serialised
    artifacts: dict = dc_field(default_factory=dict, repr=False)

    @property
    def ok(self) -> bool:
        return all(s.status == "ok" for s in self.stages.values())

    def to_json(self) -> str:
        data = {
            "source": self.source,
            "ok": self.ok,
            "stages": {k: {"status": v.status, "details": v.details} for k, v in self.stages.items()},
            "values": self.values,
        }
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"source: {self.source}"]
        for name, res in self.stages.items():
            lines.append(f"{name:16s} {res.status}")
            lines.extend(f"    {d}" for d in res.details)
        for k, v in self.values.items():
            if isinstance(v, (str, int)):
                lines.append(f"{k}: {v}")
        lines.append("result: " + ("ok" if self.ok else "FAILED"))
        return "\n".join(lines) + "\n"


def linear_combination(vec: LinMap, names, fld: Field) -> str:
    """Render a column or row as ``c_1 name_1 + ...`` in basis order."""
    values = vec.column_values() if vec.src_dim == 1 else vec.row_values()
    parts = []
    for name, c in zip(names, values):
        if c == 0:
            continue
        text = fld.format(c)
        if text == "1":
            term, neg = name, False
        elif text == "-1":
            term, neg = name, True
        elif any(op in text.lstrip("-") for op in "+-") or " " in text:
            term, neg = f"({text}) {name}", False
        else:
            neg = text.startswith("-")
            term = f"{text.lstrip('-')} {name}"
        if not parts:
            parts.append(("-" if neg else "") + term)
        else:
            parts.append((" - " if neg else " + ") + term)
    return "".join(parts) or "0"


def _sparse(m: LinMap, fld: Field):
    return [[i, j, fld.format(v)] for (i, j), v in sorted(m.items())]


def run_pipeline(source, stages=STAGES, label: str = None) -> PipelineReport:
    """Run the requested stages (and whatever they depend on) in order.

    ``source`` is an :class:`AlgebraSpec`, a :class:`HopfData` or a
    :class:`BialgebraData`.  A failed stage marks every dependent stage skipped.
    """
    wanted = set()

    def need(s):
        if s not in wanted:
            wanted.add(s)
            for dep in DEPENDS[s]:
                need(dep)

    for s in stages:
        if s not in DEPENDS:
            raise ValueError(f"unknown stage {s!r}")
        need(s)
    report = PipelineReport(label or "<input>")
    state = report.artifacts

    if isinstance(source, AlgebraSpec):
        bialgebra = source.bialgebra()
        spec = source
    else:
        bialgebra = source.bialgebra if isinstance(source, HopfData) else source
        spec = spec_from_hopf(source) if isinstance(source, HopfData) else None
    fld = bialgebra.field
    names = bialgebra.basis_names

    def bialgebra_stage():
        r = check_bialgebra(bialgebra)
        return r.ok, [str(v) for v in r]

    def hopf_stage():
        if isinstance(source, HopfData):
            h = source
        elif spec is not None and spec.antipode is not None:
            h = spec.hopf()
        else:
            h = solve_antipode(bialgebra)
            report.values["antipode"] = "solved"
        r = check_hopf(h)
        state["hopf"] = h
        return r.ok, [str(v) for v in r]

    def integrals_stage():
        h = state["hopf"]
        details = [
            f"cointegral space dimension {len(cointegral_space(h))}",
            f"integral space dimension {len(integral_space(h))}",
        ]
        ok = equaliser_dimension_check(h)
        pair = frobenius_condition(h)
        state["pair"] = pair
        report.values["cointegral"] = linear_combination(pair.cointegral, names, fld)
        report.values["integral"] = linear_combination(pair.integral, [f"d_{n}" for n in names], fld)
        return ok, details

    def hf_stage():
        hf = build_hf(state["hopf"], state["pair"])
        state["hf"] = hf
        r = verify_hf(hf)
        report.values["green_comult"] = _sparse(hf.green_comult, fld)
        report.values["red_mult"] = _sparse(hf.red_mult, fld)
        report.values["red_antipode"] = _sparse(hf.red_antipode, fld)
        return r.ok, [str(v) for v in r]

    def double_stage():
        dd = drinfeld_double(state["hopf"])
        state["double"] = dd
        r = check_hopf(dd)
        return r.ok, [f"dimension {dd.dim}"] + [str(v) for v in r]

    def red_double_stage():
        rd = red_double(state["hf"])
        state["red_double"] = rd
        r = check_hopf(rd)
        return r.ok, [f"dimension {rd.dim}"] + [str(v) for v in r]

    def qt_stage():
        details = []
        ok = True
        pairs = [
            ("classical", state["double"], drinfeld_r_matrix(state["hopf"])),
            ("red", state["red_double"], red_r_matrix(state["hf"])),
        ]
        for label_, dd, R in pairs:
            r = check_quasitriangular(dd, R)
            ybe = yang_baxter_check(dd, R)
            ok = ok and r.ok and ybe
            details.append(f"{label_}: {'quasi-triangular' if r.ok else r}; yang-baxter {'ok' if ybe else 'fails'}")
        return ok, details

    def iso_stage():
        ok = double_iso_check(state["hf"])
        return ok, [] if ok else ["1 (x) rho is not an isomorphism of doubles"]

    runners = {
        "bialgebra": bialgebra_stage,
        "hopf": hopf_stage,
        "integrals": integrals_stage,
        "hf": hf_stage,
        "double": double_stage,
        "red_double": red_double_stage,
        "quasitriangular": qt_stage,
        "iso": iso_stage,
    }
    for name in STAGES:
        if name not in wanted:
            continue
        if any(report.stages[dep].status != "ok" for dep in DEPENDS[name]):
            report.stages[name] = StageResult("skipped")
            continue
        try:
            ok, details = runners[name]()
        except HopfError as exc:
            ok, details = False, [f"{type(exc).__name__}: {exc}"]
        report.stages[name] = StageResult("ok" if ok else "failed", details)
    return report


# ----------------------------------------------------------------------------
# command line


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("hopffrob") / "fixtures" / name))


def load_source(src: str):
    """``preset:<name>`` or a path to a specification file."""
    if src.startswith("preset:"):
        return preset(src[len("preset:") :])
    path = Path(src)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {src}: {exc.strerror}") from None
    return parse_spec(text)


def _emit(structure, path: str):
    Path(path).write_text(export_spec(structure), encoding="utf-8")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopffrob", description="Exact checks for finite-dimensional Hopf algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    src_help = f"spec file or preset:<name> ({PRESET_HELP})"
    for name, help_ in [
        ("verify", "check bialgebra and Hopf laws"),
        ("integrals", "compute integrals and the Frobenius condition"),
    ]:
        c = sub.add_parser(name, help=help_)
        c.add_argument("src", help=src_help)
    c = sub.add_parser("hf", help="build the Hopf-Frobenius structure")
    c.add_argument("src", help=src_help)
    c.add_argument("--emit", metavar="OUT", help="write the red Hopf algebra as a spec file")
    c = sub.add_parser("double", help="build a Drinfeld double")
    c.add_argument("src", help=src_help)
    kind = c.add_mutually_exclusive_group(required=True)
    kind.add_argument("--classic", action="store_true", help="the double on H (x) H*")
    kind.add_argument("--red", action="store_true", help="the red double on H (x) H")
    c.add_argument("--emit", metavar="OUT", help="write the double as a spec file")
    c = sub.add_parser("report", help="run every stage")
    c.add_argument("src", help=src_help)
    c.add_argument("--json", action="store_true", help="machine-readable output")
    return p


COMMAND_STAGES = {
    "verify": ("bialgebra", "hopf"),
    "integrals": ("integrals",),
    "hf": ("hf",),
    "report": STAGES,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        source = load_source(args.src)
    except (ParseError, FieldMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.command == "double":
        stages = ("double",) if args.classic else ("red_double",)
    else:
        stages = COMMAND_STAGES[args.command]
    report = run_pipeline(source, stages, label=args.src)
    if getattr(args, "json", False):
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    emit = getattr(args, "emit", None)
    if emit and report.ok:
        art = report.artifacts
        if args.command == "hf":
            _emit(art["hf"].red_hopf, emit)
        else:
            _emit(art["double"] if args.classic else art["red_double"], emit)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
