"""Command-line front end and the JSON input / manifest formats.

Input file schema::

    {"p": 101, "name": "optional label",
     "phi": [[row1_col1, row1_col2], [row2_col1, row2_col2], [row3_col1, row3_col2]]}

Each entry is a coefficient list of a binary form, from the y-pure monomial
to the x-pure one (position = x-exponent).  All entries of a column share
one degree.

Commands: validate, adegrees, generators, classify-sextic, andy, oracle,
verify.  Reports are deterministic JSON (sorted keys) or plain text.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import morley, oracle, structure
from .hb import (
    ExtensionRequired, HBMatrix, ValidationError, canonicalize_col1, generalized_zero_col1,
    random_hb, validate,
)
from .linkage import delta_minors, span_dim_in_sym
from .polyring import format_poly, substitute_T

DEFAULT_INPUT_PRIME = 101
COMMANDS = ("validate", "adegrees", "generators", "classify-sextic", "andy", "oracle", "verify")


# ------------------------------------------------------------------ input and manifests

def parse_input(data: dict, prime: int | None = None) -> HBMatrix:
    """Turn a parsed JSON document into a validated matrix."""
    if "phi" not in data:
        raise ValidationError("input has no 'phi' field")
    p = int(prime if prime is not None else data.get("p", DEFAULT_INPUT_PRIME))
    return validate(data["phi"], p, str(data.get("name", "")))


def load_input(path: str | Path, prime: int | None = None) -> HBMatrix:
    with open(path) as fh:
        return parse_input(json.load(fh), prime)


@dataclass
class Fixture:
    name: str
    family: str
    hb: HBMatrix
    expect: dict = field(default_factory=dict)
    pinned: dict = field(default_factory=dict)


def manifest_path() -> Path:
    return Path(str(resources.files("reesalg") / "fixtures" / "manifest.json"))


def load_manifest(path: str | Path | None = None) -> list[Fixture]:
    with open(path or manifest_path()) as fh:
        doc = json.load(fh)
    p = doc["p"]
    out = []
    for f in doc["fixtures"]:
        hb = validate(f["phi"], f.get("p", p), f["name"])
        out.append(Fixture(f["name"], f["family"], hb, f.get("expect", {}), f.get("pinned", {})))
    return out


def fixture_by_name(name: str, path: str | Path | None = None) -> Fixture:
    for f in load_manifest(path):
        if f.name == name:
            return f
    raise KeyError(f"no fixture named {name!r}")


def fixture_hash(hb: HBMatrix) -> str:
    blob = json.dumps(hb.to_json(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def multiset_json(ms: dict) -> list[list[int]]:
    return [[i, j, n] for (i, j), n in sorted(ms.items())]


def twists_json(ms: dict) -> list[list[int]]:
    return [[t, n] for t, n in sorted(ms.items())]


# ------------------------------------------------------------------ commands

def cmd_validate(hb: HBMatrix, args) -> dict:
    has_gz, mu1 = generalized_zero_col1(hb)
    return {"valid": True, "degrees": [hb.d1, hb.d2], "d": hb.d, "delta": hb.delta,
            "generalized_zero_col1": has_gz, "col1_span": mu1}


def cmd_adegrees(hb: HBMatrix, args) -> dict:
    imax = hb.delta if args.imax is None else args.imax
    per_i = oracle.minimal_generators(hb, "A_as_S_per_i", imax=imax, jmax=args.jmax)
    strands = []
    for i in range(imax + 1):
        entry = {"i": i, "generators": [[j, n] for (a, j), n in sorted(per_i.items()) if a == i]}
        if i <= hb.delta:
            entry["rank"] = structure.chart_prediction(hb, i).rank
        if hb.d1 < hb.d2 and generalized_zero_col1(hb)[0] and hb.d1 - 1 <= i <= hb.d2 - 1:
            entry["predicted"] = twists_json(structure.claudia_degrees(hb, i))
        strands.append(entry)
    return {"strands": strands}


def _explicit_generators(hb: HBMatrix) -> dict | None:
    if hb.d1 != 2 or hb.d2 <= 2 or not generalized_zero_col1(hb)[0]:
        return None
    canon, shape, _ = canonicalize_col1(hb)
    gens = morley.goal5_generators(canon)
    return {"shape": shape, "canonical_phi": canon.to_json()["phi"],
            "elements": [{"case": lab, "bidegree": list(bd), "poly": format_poly(g)}
                         for lab, bd, g in gens.gens]}


def cmd_generators(hb: HBMatrix, args) -> dict:
    res = oracle.resultant(hb)
    out = {
        "r": res.r,
        "implicit_equation": format_poly(res.F),
        "A_as_B": multiset_json(oracle.minimal_generators(hb, "A_as_B", imax=args.imax, jmax=args.jmax)),
        "J_as_B": multiset_json(oracle.minimal_generators(hb, "J_as_B", imax=args.imax, jmax=args.jmax)),
        "linkage": [{"i": i, "minors": [format_poly(f) for f in delta_minors(hb, i)]}
                    for i in range(hb.d2 - 1, hb.delta + 1)],
    }
    try:
        explicit = _explicit_generators(hb)
    except ExtensionRequired as exc:
        explicit = {"skipped": str(exc)}
    if explicit is not None:
        out["explicit"] = explicit
    return out


def cmd_classify_sextic(hb: HBMatrix, args) -> dict:
    rep = structure.sextic_classify(hb)
    return {"degrees": [rep.d1, rep.d2], "r": rep.r, "row": rep.row,
            "bidegrees": multiset_json(rep.bidegrees), "multiplicities": list(rep.multiplicities),
            "configuration": rep.configuration, "noether_sum": structure.noether_sum(rep.multiplicities)}


def cmd_andy(hb: HBMatrix, args) -> dict:
    ac = structure.andy_class(hb)
    return {"pair": list(ac.pair), "generators": twists_json(ac.generators),
            "syzygies": twists_json(ac.syzygies), "free": ac.free, "ecp_labels": list(ac.ecp_labels)}


def cmd_oracle(hb: HBMatrix, args) -> dict:
    imax = hb.delta + 1 if args.imax is None else args.imax
    res = oracle.resultant(hb)
    return {"r": res.r, "implicit_equation": format_poly(res.F),
            "a_dim": [[oracle.a_dim(hb, i, j) for j in range(args.jmax + 1)] for i in range(imax + 1)]}


def verify_suite(hb: HBMatrix, jmax: int = 6) -> list[tuple[str, bool]]:
    """Every applicable cross-check between the closed forms and the oracle."""
    checks: list[tuple[str, bool]] = []
    delta = hb.delta
    checks.append(("h_identity", morley.h_identity_holds(hb)))
    checks.append(("morley_delta", morley.morley_delta_check(hb)))
    if hb.d1 == 2:
        checks.append(("q_forms_d1_2", all(morley.q_forms(hb, i) == morley.q_forms_d1_2(hb, i)
                                           for i in range(1, hb.d2))))
    for i in range(hb.d2 - 1, delta + 1):
        mins = delta_minors(hb, i)
        ok = all(substitute_T(f, *hb.h).is_zero() for f in mins)
        ok = ok and span_dim_in_sym(hb, mins, i, 2) == hb.d - 1 - i == oracle.a_dim(hb, i, 2)
        checks.append((f"linkage_i{i}", ok))
    checks.append(("chart_a_dim", all(structure.chart_a_dim(hb, i, j) == oracle.a_dim(hb, i, j)
                                      for i in range(delta + 1) for j in range(jmax + 1))))
    checks.append(("sylvester_strand", all(oracle.a_dim(hb, delta, j) == (j * (j - 1) // 2)
                                           for j in range(2, jmax + 1))))
    checks.append(("vanishing_above_delta", all(oracle.a_dim(hb, delta + 1, j) == 0
                                                for j in range(jmax + 1))))
    checks.append(("pairing_injectivity", all(oracle.pairing_injectivity(hb, i, jmax)
                                              for i in range(delta + 1))))
    res = oracle.resultant(hb)
    checks.append(("rth_power_degree", oracle.rth_power_degree(hb, res.res) == res.r))
    has_gz = generalized_zero_col1(hb)[0]
    if hb.d1 < hb.d2 and has_gz:
        ok = True
        for i in range(hb.d1 - 1, hb.d2):
            pred = structure.claudia_degrees(hb, i)
            got = oracle.minimal_generators(hb, "A_as_S_per_i", imax=i, jmax=jmax + 2)
            got_i = {j: n for (a, j), n in got.items() if a == i}
            ok = ok and got_i == pred and structure.free_hilbert_matches(hb, i, pred, jmax, oracle.a_dim)
        checks.append(("degree_table", ok))
        t1 = structure.table1(hb)
        got = oracle.minimal_generators(hb, "A_as_B", jmax=max(jmax, hb.d // hb.d1 + 2), imin=hb.d1 - 1)
        checks.append(("b_generators", got == t1.b_generators))
    if hb.d1 == 2 and hb.d2 > 2 and has_gz:
        try:
            canon, _, _ = canonicalize_col1(hb)
            gens = morley.goal5_generators(canon)
            ok = all(substitute_T(g, *canon.h).is_zero() for _, _, g in gens.gens)
            ok = ok and gens.bidegrees() == morley.gens_bidegrees(canon.d2)
            checks.append(("explicit_generators", ok))
        except ExtensionRequired:
            pass
    if hb.d1 == hb.d2:
        try:
            ac = structure.andy_class(hb)
            ok = all(oracle.a_dim(hb, hb.d1 - 2, j)
                     == structure.resolution_hilbert_function(ac.generators, ac.syzygies, j)
                     for j in range(jmax + 1))
        except ValueError:
            ok = False
        checks.append(("balanced_resolution", ok))
    if hb.d == 6 and res.r == 1:
        rep = structure.sextic_classify(hb)
        checks.append(("sextic_table", rep.noether_ok and rep.bidegrees == structure.suppressed_j_generators(hb)))
    return checks


def cmd_verify(hb: HBMatrix, args) -> dict:
    checks = verify_suite(hb, args.jmax)
    return {"checks": [{"name": n, "ok": ok} for n, ok in checks], "ok": all(ok for _, ok in checks)}


HANDLERS = {
    "validate": cmd_validate,
    "adegrees": cmd_adegrees,
    "generators": cmd_generators,
    "classify-sextic": cmd_classify_sextic,
    "andy": cmd_andy,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
}


# ------------------------------------------------------------------ plumbing

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="reesalg", description=__doc__.split("\n\n")[0])
    ap.add_argument("command", choices=COMMANDS)
    src = ap.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="JSON file with p and phi")
    src.add_argument("--fixture", help="name of a fixture in the shipped manifest")
    src.add_argument("--random", metavar="D1,D2", help="sample a random valid phi of these degrees")
    ap.add_argument("--prime", type=int, default=None, help="override the prime of the input")
    ap.add_argument("--imax", type=int, default=None)
    ap.add_argument("--jmax", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0, help="seed for --random")
    ap.add_argument("--format", choices=("json", "text"), default="json")
    ap.add_argument("--timing", action="store_true", help="add wall-clock seconds to the report")
    return ap


def resolve_input(args) -> HBMatrix:
    if args.input:
        return load_input(args.input, args.prime)
    if args.fixture:
        hb = fixture_by_name(args.fixture).hb
        if args.prime is not None:
            return validate(hb.to_json()["phi"], args.prime, hb.name)
        return hb
    d1, d2 = (int(s) for s in args.random.split(","))
    p = args.prime or DEFAULT_INPUT_PRIME
    return random_hb(d1, d2, p, random.Random(args.seed), f"random-{d1}-{d2}-seed{args.seed}")


def render_text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in
                                                         (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines += render_text(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, sort_keys=True)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, dict):
                lines.append(f"{pad}-")
                lines += render_text(v, indent + 1)
            else:
                lines.append(f"{pad}- {json.dumps(v, sort_keys=True)}")
    else:
        lines.append(f"{pad}{obj}")
    return lines


def emit(report: dict, fmt: str, stream) -> None:
    if fmt == "json":
        stream.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    else:
        stream.write("\n".join(render_text(report)) + "\n")


def run(argv: list[str] | None = None, stream=None) -> int:
    stream = stream or sys.stdout
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        hb = resolve_input(args)
        payload = HANDLERS[args.command](hb, args)
    except (ValidationError, ExtensionRequired, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        emit({"command": args.command, "error": type(exc).__name__, "message": str(exc)}, args.format, stream)
        return 2
    report = {"command": args.command, "input": hb.name, "fixture_hash": fixture_hash(hb), "result": payload}
    if args.timing:
        report["seconds"] = round(time.perf_counter() - start, 3)
    emit(report, args.format, stream)
    if args.command == "verify" and not payload["ok"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
