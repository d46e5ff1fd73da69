"""Command-line interface: ``macq type|homology|quotient|verify|random``.

Exit codes: 0 success, 1 invalid input or resource bound, 2 verification
mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import spaces
from .chains import hochster_betti, homology, zk_chain_complex
from .complexes import SimplicialComplex, loads
from .errors import MacqError, InvalidParameter, ResourceLimit
from .quotient import freeness_violation, quotient_betti, quotient_matrix
from .verify import DEFAULT_M_MAX_BOUND, RANDOM_M_BOUND, run_random, run_verify

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MISMATCH = 2


@dataclass
class CommandResult:
    status: str  # "ok" | "mismatch" | "error"
    payload: dict = field(default_factory=dict)
    human_text: str = ""

    @property
    def exit_code(self) -> int:
        return {"ok": EXIT_OK, "mismatch": EXIT_MISMATCH}.get(self.status, EXIT_INVALID)


def _error(message: str) -> CommandResult:
    return CommandResult("error", {"error": message}, f"error: {message}")


def _describe(X: spaces.Space) -> tuple:
    poly = spaces.reduced_poincare(X)
    out = {"expr": spaces.to_json(X), "text": spaces.render(X), "poincare": poly.to_dict()}
    lines = [spaces.render(X)]
    try:
        nf = spaces.wedge_normal_form(X)
    except MacqError:
        nf = None
    if nf is not None:
        out["normal_form"] = spaces.render(nf)
        if out["normal_form"] != out["text"]:
            lines.append(f"  = {out['normal_form']}")
    lines.append(f"  poincare: {poly!r}")
    return out, lines


def cmd_type(m: int, k: int, family: str = "skeleton", j: int | None = None) -> CommandResult:
    payload: dict = {"family": family, "m": m, "k": k}
    text: list = []
    if family == "skeleton":
        z = spaces.skeleton_wedge(m, k)
        q = spaces.quotient_type(m, k) if 0 <= k <= m - 2 else None
        zname, qname = f"Z(D^{k}_{m})", f"Z(D^{k}_{m})/S^1_d"
    elif family == "lfamily":
        if j is None:
            raise InvalidParameter("--family lfamily needs --j")
        payload["j"] = j
        z = spaces.l_type(j, m, k)
        q = spaces.l_quotient_type(j, m, k)
        zname, qname = f"Z(L^{k}_{j},{m})", f"Z(L^{k}_{j},{m})/S^1_d"
    else:
        raise InvalidParameter(f"unknown family {family!r}")
    payload["z"], lines = _describe(z)
    text.append(f"{zname}: {lines[0]}")
    text.extend(lines[1:])
    if q is not None:
        payload["quotient"], lines = _describe(q)
        text.append(f"{qname}: {lines[0]}")
        text.extend(lines[1:])
    else:
        text.append(f"{qname}: no quotient formula outside 0 <= k <= m-2")
    return CommandResult("ok", payload, "\n".join(text))


def _betti_text(summary, show_torsion: bool) -> list:
    lines = [f"b_{n} = {b}" for n, b in sorted(summary.betti.items()) if b]
    if show_torsion:
        tors = {n: t for n, t in summary.torsion.items() if t}
        if tors:
            lines += [f"torsion H_{n}: " + " + ".join(f"Z/{d}" for d in t) for n, t in sorted(tors.items())]
        else:
            lines.append("torsion: none")
    return lines


def read_complex(path) -> SimplicialComplex:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InvalidParameter(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def cmd_homology(complex_path, torsion: bool = False, hochster: bool = False) -> CommandResult:
    K = read_complex(complex_path)
    summary = hochster_betti(K) if hochster else homology(zk_chain_complex(K), torsion=torsion)
    doc = summary.to_dict()
    if not torsion:
        doc.pop("torsion", None)
    doc["oracle"] = "hochster" if hochster else "cellular"
    return CommandResult("ok", doc, "\n".join(_betti_text(summary, torsion)))


def parse_weights(text: str | None, m: int) -> tuple:
    if text is None:
        return (1,) * m
    try:
        s = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InvalidParameter(f"weights must be comma-separated integers, got {text!r}") from None
    return s


def cmd_quotient(complex_path, weights: str | None = None, up_to: int | None = None) -> CommandResult:
    K = read_complex(complex_path)
    s = parse_weights(weights, K.ambient)
    bad = freeness_violation(K, s)
    if bad is not None:
        face, g = bad
        msg = f"action is not free: facet {list(face)} has complement weight gcd {g}"
        return CommandResult(
            "error", {"error": msg, "facet": list(face), "gcd": g, "weights": {"s": list(s)}}, f"error: {msg}"
        )
    Lam = quotient_matrix(s)
    summary = quotient_betti(K, s, up_to=up_to)
    doc = {"weights": {"s": list(s)}, "lambda": Lam, **summary.to_dict()}
    lines = ["lambda: " + json.dumps(Lam)] + _betti_text(summary, True)
    return CommandResult("ok", doc, "\n".join(lines))


def _betti_str(b: dict) -> str:
    return "{" + ", ".join(f"{d}:{v}" for d, v in sorted(b.items())) + "}"


def cmd_verify(m_max: int, families=("skeleton", "lfamily"), shifted_torus: bool = False) -> CommandResult:
    if m_max > DEFAULT_M_MAX_BOUND:
        raise ResourceLimit(f"--m-max {m_max} exceeds the bound {DEFAULT_M_MAX_BOUND}")
    if m_max < 2:
        raise InvalidParameter("--m-max must be at least 2")
    for fam in families:
        if fam not in ("skeleton", "lfamily"):
            raise InvalidParameter(f"unknown family {fam!r}")
    report = run_verify(m_max, families, shifted_torus)
    lines = []
    torus = "T^{m-k-1} (shifted variant)" if shifted_torus else "T^{m-k-2}"
    lines.append(f"quotient formula torus exponent: {torus}")
    for c in report.cases:
        mark = "ok" if c.ok else "MISMATCH"
        line = f"[{mark}] {c.family:8s} {c.side:5s} {c.label()}"
        if not c.ok:
            line += (
                f"  degrees {c.mismatched_degrees}: expected {_betti_str(c.expected)}"
                f" computed {_betti_str(c.computed)}"
            )
        lines.append(line)
    lines.append("")
    lines.append("torus exponent comparison (Koszul adjudicates):")
    lines.append(" m  k  dim  top(T^{m-k-2})  top(T^{m-k-1})  koszul_top  T^{m-k-2}  T^{m-k-1}")
    for r in report.torus_table:
        lines.append(
            f"{r.m:2d} {r.k:2d} {r.dim_bound:4d} {r.standard_top:14d} {r.shifted_top:15d} {r.koszul_top:11d}"
            f"  {'ok' if r.standard_ok else 'FAIL':9s}  {'ok' if r.shifted_ok else 'FAIL'}"
        )
    mism = report.mismatches
    lines.append("")
    lines.append(f"{len(report.cases) - len(mism)}/{len(report.cases)} cases match")
    payload = {
        "m_max": m_max,
        "families": list(families),
        "shifted_torus_exponent": shifted_torus,
        "cases": [c.to_dict() for c in report.cases],
        "mismatches": [c.to_dict() for c in mism],
        "torus_table": [r.to_dict() for r in report.torus_table],
    }
    return CommandResult("ok" if report.ok else "mismatch", payload, "\n".join(lines))


def cmd_random(m: int, count: int = 20, seed: int = 0) -> CommandResult:
    if m > RANDOM_M_BOUND:
        raise ResourceLimit(f"--m {m} exceeds the bound {RANDOM_M_BOUND}")
    if m < 1 or count < 0:
        raise InvalidParameter("--m must be >= 1 and --count >= 0")
    checks = run_random(m, count, seed)
    lines = []
    for i, c in enumerate(checks):
        flags = f"d^2=0:{'ok' if c.square_zero else 'FAIL'} hochster:{'ok' if c.hochster_ok else 'FAIL'} koszul:{'ok' if c.koszul_ok else 'FAIL'}"
        lines.append(f"#{i:3d} {json.dumps(c.complex.to_dict()['facets'])}  {flags}")
    failed = sum(not c.ok for c in checks)
    lines.append(f"{len(checks) - failed}/{len(checks)} complexes pass")
    payload = {"m": m, "count": count, "seed": seed, "checks": [c.to_dict() for c in checks]}
    return CommandResult("ok" if not failed else "mismatch", payload, "\n".join(lines))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="macq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("type", help="symbolic homotopy types of Z and Z/S^1_d")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--family", choices=("skeleton", "lfamily"), default="skeleton")
    p.add_argument("--j", type=int)
    add_format(p)

    p = sub.add_parser("homology", help="integer homology of Z_K")
    p.add_argument("--complex", required=True, help="complex JSON file")
    p.add_argument("--torsion", action="store_true")
    p.add_argument("--hochster", action="store_true", help="use the full-subcomplex sum")
    add_format(p)

    p = sub.add_parser("quotient", help="Betti numbers of Z_K/S^1 via the Koszul complex")
    p.add_argument("--complex", required=True)
    p.add_argument("--weights", help="comma-separated weights, default all ones")
    p.add_argument("--up-to", type=int, dest="up_to")
    add_format(p)

    p = sub.add_parser("verify", help="formula sweeps against both oracles")
    p.add_argument("--m-max", type=int, default=5, dest="m_max")
    p.add_argument("--families", default="skeleton,lfamily")
    p.add_argument("--use-intro-torus-exponent", action="store_true", dest="shifted_torus")
    add_format(p)

    p = sub.add_parser("random", help="property checks on seeded random complexes")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    add_format(p)
    return parser


def dispatch(args: argparse.Namespace) -> CommandResult:
    try:
        if args.command == "type":
            return cmd_type(args.m, args.k, args.family, args.j)
        if args.command == "homology":
            return cmd_homology(args.complex, args.torsion, args.hochster)
        if args.command == "quotient":
            return cmd_quotient(args.complex, args.weights, args.up_to)
        if args.command == "verify":
            families = tuple(f.strip() for f in args.families.split(",") if f.strip())
            return cmd_verify(args.m_max, families, args.shifted_torus)
        if args.command == "random":
            return cmd_random(args.m, args.count, args.seed)
    except MacqError as exc:
        return _error(str(exc))
    raise AssertionError(args.command)


def run(argv=None) -> CommandResult:
    return dispatch(build_parser().parse_args(argv))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    result = dispatch(args)
    if args.format == "json":
        print(json.dumps({"status": result.status, **result.payload}, indent=2))
    else:
        stream = sys.stderr if result.status == "error" else sys.stdout
        print(result.human_text, file=stream)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
