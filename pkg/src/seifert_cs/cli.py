"""Command-line front end: ``seifert-cs <subcommand> ...``.

Exit status: 0 on success, 2 on parse/validation errors, 1 on internal
failure. Rationals are always emitted as exact "p/q" strings; ``--approx``
adds float renderings next to them.
"""
from __future__ import annotations

import argparse
import json
import math
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from . import dedekind as dk
from .errors import ParseError, SeifertError
from .homology import flat_bundle_classes, homology_h1, n_exponent
from .invariants import PhaseExponent, grav_cs_adiabatic, phase, twist_framing
from .invariants import eta0 as eta0_of
from .report import PartitionReport, build_report
from .seifert import SeifertData, degree, render, validate, vol_isotropy_squared

# ---------------------------------------------------------------------------
# input grammar:  [g=<int>;] n=<int> [;] (a1,b1) (a2,b2) ...
# ---------------------------------------------------------------------------

_INT = re.compile(r"[+-]?\d+")


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token, what=None):
        self.skip()
        if not self.text.startswith(token, self.pos):
            raise ParseError(self.pos, what or repr(token), self.text)
        self.pos += len(token)

    def integer(self, what="integer"):
        self.skip()
        m = _INT.match(self.text, self.pos)
        if not m:
            raise ParseError(self.pos, what, self.text)
        self.pos = m.end()
        return int(m.group())


def parse_seifert(text: str) -> SeifertData:
    sc = _Scanner(text)
    genus = 0
    if sc.peek() == "g":
        sc.expect("g")
        sc.expect("=")
        genus = sc.integer("genus")
        sc.expect(";")
    sc.expect("n", "'n=<int>'")
    sc.expect("=")
    n = sc.integer()
    if sc.peek() == ";":
        sc.expect(";")
    pairs = []
    while sc.peek() == "(":
        sc.expect("(")
        a = sc.integer("alpha")
        sc.expect(",")
        b = sc.integer("beta")
        sc.expect(")")
        pairs.append((a, b))
    if sc.peek() == ";":
        sc.expect(";")
    if sc.peek():
        raise ParseError(sc.pos, "'(' or end of input", text)
    return validate(genus, n, pairs)


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    data: SeifertData
    notes: str


def load_catalog() -> dict[str, CatalogEntry]:
    raw = json.loads(resources.files("seifert_cs").joinpath("data/catalog.json").read_text())
    entries = {}
    for item in raw:
        if item["name"] in entries:
            raise ValueError(f"duplicate catalog entry {item['name']!r}")
        entries[item["name"]] = CatalogEntry(item["name"], parse_seifert(item["data"]), item["notes"])
    return entries


def resolve_data(text: str) -> SeifertData:
    """Seifert data from the input grammar, or from a catalog name."""
    catalog = load_catalog()
    if text.strip() in catalog:
        return catalog[text.strip()].data
    return parse_seifert(text)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def rat(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def phase_json(p: PhaseExponent) -> dict:
    return {"q": rat(p.q), "meaning": "exp(i*pi*q)"}


def seifert_json(sd: SeifertData) -> dict:
    return {"genus": sd.genus, "n": sd.n, "pairs": [list(p) for p in sd.pairs], "text": render(sd)}


def homology_json(sd: SeifertData, with_classes=False) -> dict:
    h = homology_h1(sd)
    out = {
        "b1": h.b1,
        "torsion_coefficients": list(h.torsion_coefficients),
        "torsion_order": h.torsion_order,
        "flat_class_count": h.flat_class_count,
        "n_exponent": rat(n_exponent(sd)),
    }
    if with_classes:
        out["flat_classes"] = [list(c) for c in flat_bundle_classes(h)]
    return out


def report_json(r: PartitionReport) -> dict:
    return {
        "seifert": seifert_json(r.seifert),
        "level_k": r.level_k,
        "framing": r.framing,
        "degree": rat(r.degree),
        "vol_h_squared": rat(r.vol_h_squared),
        "eta0": rat(r.eta0),
        "phase": phase_json(r.phase),
        "phase_exponent": rat(r.phase.q),
        "n_exponent": rat(r.n_exponent),
        "homology": {
            "b1": r.flat_classes.b1,
            "torsion_coefficients": list(r.flat_classes.torsion_coefficients),
            "torsion_order": r.flat_classes.torsion_order,
            "flat_class_count": r.flat_classes.flat_class_count,
        },
        "flat_classes": [list(c) for c in r.class_labels],
        "placeholders": [
            {
                "name": p.name,
                "expression": p.expression,
                **({"class": list(p.class_label)} if p.class_label is not None else {}),
                **({"aliases": list(p.aliases)} if p.aliases else {}),
            }
            for p in r.placeholders
        ],
        "notes": list(r.notes),
    }


def _with_approx(out: dict, keys) -> dict:
    for key in keys:
        if key in out and isinstance(out[key], str):
            out[key + "_approx"] = float(Fraction(out[key]))
    return out


# ---------------------------------------------------------------------------
# subcommands; each returns a JSON-able dict
# ---------------------------------------------------------------------------


def cmd_dedekind(args) -> dict:
    method = {"fast": dk.dedekind_fast, "sawtooth": dk.dedekind_sawtooth}
    if args.method == "cotangent":
        value = dk.dedekind_cotangent(args.alpha, args.beta, args.precision)
        return {"s": value, "alpha": args.alpha, "beta": args.beta, "method": "cotangent"}
    out = {"s": rat(method[args.method](args.alpha, args.beta)), "alpha": args.alpha, "beta": args.beta}
    return _with_approx(out, ["s"]) if args.approx else out


def cmd_degree(sd, args) -> dict:
    out = {"degree": rat(degree(sd))}
    return _with_approx(out, ["degree"]) if args.approx else out


def cmd_vol(sd, args) -> dict:
    v2 = vol_isotropy_squared(sd)
    out = {"vol_h_squared": rat(v2)}
    if args.approx:
        out["vol_h_approx"] = math.sqrt(float(v2))
    return out


def cmd_homology(sd, args) -> dict:
    return homology_json(sd, with_classes=args.classes)


def cmd_eta0(sd, args) -> dict:
    out = {"eta0": rat(eta0_of(sd, audit=args.audit))}
    return _with_approx(out, ["eta0"]) if args.approx else out


def cmd_phase(sd, args) -> dict:
    p = twist_framing(phase(eta0_of(sd)), args.framing)
    out = {"phase": phase_json(p), "framing": args.framing}
    if args.approx:
        z = p.to_complex()
        out["phase_approx"] = [z.real, z.imag]
    return out


def cmd_report(sd, args) -> dict:
    r = build_report(sd, args.k, args.framing).check()
    out = report_json(r)
    if args.approx:
        _with_approx(out, ["degree", "eta0", "phase_exponent", "n_exponent"])
    return out


def cmd_gravcs(args) -> dict:
    v = grav_cs_adiabatic(args.r_omega, args.f2_omega, args.epsilon)
    out = {
        "cs": rat(v),
        "int_r_omega": rat(args.r_omega),
        "int_f2_omega": rat(args.f2_omega),
        "epsilon": rat(args.epsilon),
    }
    return _with_approx(out, ["cs"]) if args.approx else out


def cmd_catalog(args):
    catalog = load_catalog()
    names = [args.name] if args.name else list(catalog)
    out = []
    for name in names:
        if name not in catalog:
            raise SeifertError(f"unknown catalog entry {name!r}; known: {', '.join(catalog)}")
        e = catalog[name]
        out.append(
            {
                "name": e.name,
                "data": render(e.data),
                "notes": e.notes,
                "degree": rat(degree(e.data)),
                "eta0": rat(eta0_of(e.data)),
            }
        )
    return out


DATA_COMMANDS = {
    "degree": cmd_degree,
    "vol": cmd_vol,
    "homology": cmd_homology,
    "eta0": cmd_eta0,
    "phase": cmd_phase,
    "report": cmd_report,
}


# ---------------------------------------------------------------------------
# text rendering
# ---------------------------------------------------------------------------


def _text_lines(obj, prefix=""):
    if isinstance(obj, dict):
        if set(obj) == {"q", "meaning"}:
            yield f"{prefix} = {obj['meaning']} with q = {obj['q']}"
            return
        for key, value in obj.items():
            yield from _text_lines(value, f"{prefix}.{key}" if prefix else key)
    elif isinstance(obj, list) and obj and isinstance(obj[0], dict):
        for i, value in enumerate(obj):
            yield from _text_lines(value, f"{prefix}[{i}]")
    else:
        if isinstance(obj, list):
            obj = json.dumps(obj)
        yield f"{prefix} = {obj}"


def emit(result, as_json, stream=None):
    stream = stream or sys.stdout
    if as_json:
        print(json.dumps(result), file=stream)
    elif isinstance(result, list):
        for i, item in enumerate(result):
            if i:
                print(file=stream)
            for line in _text_lines(item):
                print(line, file=stream)
    else:
        for line in _text_lines(result):
            print(line, file=stream)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--approx", action="store_true", help="add float renderings of exact values")

    data = argparse.ArgumentParser(add_help=False)
    data.add_argument("data", nargs="?", help='Seifert data, e.g. "g=0; n=0; (2,1)(3,1)", or a catalog name')
    data.add_argument("--batch", metavar="FILE", help="one Seifert datum per line; emits a JSON array")

    parser = argparse.ArgumentParser(prog="seifert-cs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dedekind", parents=[common], help="Dedekind sum s(alpha, beta)")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--method", choices=["fast", "sawtooth", "cotangent"], default="fast")
    p.add_argument("--precision", type=int, default=64, help="bits, cotangent method only")

    sub.add_parser("degree", parents=[common, data], help="degree d = n + sum b/a")
    sub.add_parser("vol", parents=[common, data], help="Vol(H)^2 of the isotropy circle")
    p = sub.add_parser("homology", parents=[common, data], help="H_1, Betti number, flat classes")
    p.add_argument("--classes", action="store_true", help="enumerate flat bundle classes")
    p = sub.add_parser("eta0", parents=[common, data], help="renormalized eta invariant")
    p.add_argument("--audit", action="store_true", help="recheck Dedekind sums by brute force")
    p = sub.add_parser("phase", parents=[common, data], help="partition function phase exp(i*pi*q)")
    p.add_argument("--framing", type=int, default=0)
    p = sub.add_parser("report", parents=[common, data], help="full partition function report")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--framing", type=int, default=0)

    p = sub.add_parser("gravcs", parents=[common], help="gravitational Chern-Simons along g_eps")
    p.add_argument("--r-omega", type=Fraction, required=True, help="integral of r*omega over the base")
    p.add_argument("--f2-omega", type=Fraction, required=True, help="integral of f^2*omega over the base")
    p.add_argument("--epsilon", type=Fraction, required=True)

    p = sub.add_parser("catalog", parents=[common], help="list the named manifolds")
    p.add_argument("name", nargs="?")
    return parser


def _run_batch(args, fn):
    results = []
    with open(args.batch) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                results.append(fn(resolve_data(line), args))
            except SeifertError as exc:
                raise SeifertError(f"{args.batch}:{lineno}: {exc}") from exc
    return results


def run(args) -> object:
    if args.command == "dedekind":
        return cmd_dedekind(args)
    if args.command == "gravcs":
        return cmd_gravcs(args)
    if args.command == "catalog":
        return cmd_catalog(args)
    fn = DATA_COMMANDS[args.command]
    if args.batch:
        args.json = True
        return _run_batch(args, fn)
    if args.data is None:
        raise SeifertError("missing Seifert data (or --batch FILE)")
    return fn(resolve_data(args.data), args)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = run(args)
    except (SeifertError, OSError) as exc:
        print(f"seifert-cs: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"seifert-cs: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    emit(result, args.json)
    return 0


if __name__ == "__main__":
    sys.exit(main())
