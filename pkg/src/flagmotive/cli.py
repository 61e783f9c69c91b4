"""Command-line interface.

    flagmotive weyl A2
    flagmotive motive A1 --json
    flagmotive assemble filtration.json --waiver
    flagmotive ktheory B2 --i 3
    flagmotive ktheory A2 --completed --precision 5
    flagmotive chow A2 --precision 4
    flagmotive complete --element "t^-1" --precision 3 T1
    flagmotive verify F4

Exit codes: 0 success, 1 invalid input, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .cellular import (
    assemble_motive,
    assemble_with_vanishing_waiver,
    check_strictness,
    flag_model,
    load_filtration,
)
from .character import DEFAULT_PRECISION, complete, parse_laurent
from .checks import run_checks
from .errors import FlagMotiveError, SpecSyntaxError, VerificationMismatch
from .realization import (
    chow_poincare,
    completed_k0_identity,
    equivariant_k_groups,
    kh_flag,
    rational_ki_presentation,
    report_json,
)
from .presentation import ModulePresentation
from .rootdata import parse_root_datum
from .weyl import poincare_polynomial, word_str


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p.add_argument("--i", type=int, default=0, help="K-theory degree")
    p.add_argument("--waiver", action="store_true", help="assume Hom(1<n>[-1],1)=0 for all n")
    p.add_argument("--max-rank", type=int, default=4, help="rank cap for the matrix oracle")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="flagmotive",
        description="Cellular decomposition of T-equivariant flag motives and its realizations.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, target="group", target_help="group spec, e.g. A2, B3xT1, G2"):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument(target, help=target_help)
        return p

    add("weyl", "Weyl group order, length census, Poincare polynomial")
    add("motive", "twist decomposition of the flag motive over BT")
    add("assemble", "assemble the motive of a filtration file", "file", "filtration JSON file")
    k = add("ktheory", "equivariant K-group presentations")
    k.add_argument("--completed", action="store_true", help="completed K_0 identity report")
    k.add_argument("--rational", action="store_true", help="rational K_i over a field")
    k.add_argument("--kh", action="store_true", help="KH decomposition")
    add("chow", "Chow Poincare polynomial and equivariant series")
    c = add("complete", "expand a character in the I_T-adic completion")
    c.add_argument("--element", required=True, help='Laurent polynomial, e.g. "t^-1"')
    add("verify", "run oracle cross-checks and invariants")
    return parser


# -- commands: each returns (json payload, text) -----------------------------


def _weyl(args):
    datum = parse_root_datum(args.group)
    model = flag_model(datum)
    w = model.weyl
    poly = poincare_polynomial(w)
    census = {str(d): c for d, c in sorted(w.length_census().items())}
    payload = {
        "group": datum.label,
        "order": w.order,
        "positive_roots": len(w.roots.positive_roots),
        "length_census": census,
        "poincare": poly.to_list(),
        "longest": word_str(w.longest.word),
        "longest_length": w.longest.length,
    }
    text = "\n".join(
        [
            f"group        {datum.label}",
            f"order        {w.order}",
            f"census       " + ", ".join(f"l={d}: {c}" for d, c in census.items()),
            f"poincare     {poly}",
            f"longest      {word_str(w.longest.word)} (length {w.longest.length})",
        ]
    )
    return payload, text


def _motive_text(motive) -> str:
    lines = [f"{'twist':>5}  {'mult':>5}"]
    lines += [f"{n:>5}  {k:>5}" for (n, _), k in motive.summands]
    lines.append(f"total  {motive.rank:>5}   ({motive})")
    lines += [f"note: {note}" for note in motive.notes]
    return "\n".join(lines)


def _motive(args):
    datum = parse_root_datum(args.group)
    model = flag_model(datum)
    if args.waiver:
        motive = assemble_with_vanishing_waiver(model.filtration, "BT")
    else:
        motive = assemble_motive(model.filtration, "BT")
    payload = {"group": datum.label, **motive.to_json()}
    if motive.notes:
        payload["notes"] = list(motive.notes)
    return payload, f"M_BT([T\\G/B]) for {datum.label}\n" + _motive_text(motive)


def _assemble(args):
    try:
        with open(args.file, encoding="utf-8") as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SpecSyntaxError(f"{args.file}: invalid JSON: {exc}") from None
    except OSError as exc:
        raise SpecSyntaxError(f"{args.file}: {exc.strerror}") from None
    scheme = load_filtration(obj)
    strict = check_strictness(scheme)
    if args.waiver:
        motive = assemble_with_vanishing_waiver(scheme, "BT")
    else:
        motive = assemble_motive(scheme, "BT")
    payload = {"label": scheme.label, "strict": strict, **motive.to_json()}
    if motive.notes:
        payload["notes"] = list(motive.notes)
    head = f"{scheme.label or args.file} (strict: {'yes' if strict else 'no'})"
    return payload, head + "\n" + _motive_text(motive)


def _presentation_text(title, pres) -> str:
    lines = [title, f"  module  {pres.describe()}", f"  ring    {pres.coefficient_ring}"]
    basis = ", ".join(pres.basis)
    lines.append(f"  basis   {basis}")
    lines += [f"  note    {n}" for n in pres.notes]
    return "\n".join(lines)


def _ktheory(args):
    datum = parse_root_datum(args.group)
    if args.completed:
        rep = completed_k0_identity(datum, args.precision)
        payload = report_json(
            datum.label,
            "K0-completed",
            rep.left,
            precision=rep.precision,
            left=rep.left.to_json(),
            right=rep.right.to_json(),
            ranks_equal=rep.ranks_equal,
            higher_tor={str(p): v for p, v in rep.higher_tor.items()},
            ideal_generators=[str(g) for g in rep.ideal_generators],
            holds=rep.holds,
        )
        text = "\n".join(
            [
                f"completed K_0 identity for {datum.label}, precision {rep.precision}",
                f"  left   rank {rep.left.rank} over {rep.coefficient_ring}",
                f"  right  rank {rep.right.rank}: {rep.right.coefficient_ring}",
                "  Tor_p  " + ", ".join(f"p={p}: {v}" for p, v in rep.higher_tor.items()),
                "  I_T    " + "; ".join(str(g) for g in rep.ideal_generators),
                f"  holds  {'yes' if rep.holds else 'NO'}",
            ]
        )
        if not rep.holds:
            raise VerificationMismatch(text)
        return payload, text
    if args.kh:
        pres = kh_flag(datum)
        return (
            report_json(datum.label, "KH", pres, grading=pres.to_json()["grading"]),
            _presentation_text(f"KH([T\\G/B]) for {datum.label}", pres),
        )
    if args.rational:
        pres = rational_ki_presentation(datum, args.i)
        return (
            report_json(datum.label, "Ki", pres, rational=True, i=args.i,
                        symbolic_factor=pres.symbolic_factor),
            _presentation_text(f"K_{args.i}^T(G/B)_Q for {datum.label}", pres),
        )
    pres = equivariant_k_groups(datum, args.i)
    return (
        report_json(datum.label, "Ki", pres, i=args.i),
        _presentation_text(f"K_{args.i}^T(G/B) for {datum.label}", pres),
    )


def _chow(args):
    datum = parse_root_datum(args.group)
    poly, series = chow_poincare(datum, args.precision)
    model = flag_model(datum)
    basis = tuple(f"[C_{word_str(w.word)}]" for w in model.weyl)
    pres = ModulePresentation(
        "A*_T(pt)_Q = Sym X*(T)_Q", basis, tuple(w.length for w in model.weyl)
    )
    payload = report_json(datum.label, "Chow", pres, series, poincare=poly.to_list())
    text = "\n".join(
        [
            f"Chow groups for {datum.label}",
            f"  A*(G/B)     {poly}",
            f"  A*_T(G/B)   {series}",
            f"  closed form {series.closed_form}",
        ]
    )
    return payload, text


def _complete(args):
    datum = parse_root_datum(args.group)
    elem = parse_laurent(args.element, datum.torus_rank)
    done = complete(elem, args.precision)
    payload = {
        "group": datum.label,
        "element": elem.to_json(),
        "completed": done.to_json(),
        "rendered": str(done),
    }
    return payload, f"{elem}  ->  {done}"


def _verify(args):
    datum = parse_root_datum(args.group)
    checks = run_checks(datum, max_rank=args.max_rank, precision=min(args.precision, 6))
    payload = {
        "group": datum.label,
        "checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in checks],
        "ok": all(c.ok for c in checks),
    }
    lines = [f"verify {datum.label}"]
    for c in checks:
        lines.append(f"  [{c.status:>4}] {c.name}" + (f"  ({c.detail})" if c.detail else ""))
    text = "\n".join(lines)
    if not payload["ok"]:
        raise VerificationMismatch(text)
    return payload, text


COMMANDS = {
    "weyl": _weyl,
    "motive": _motive,
    "assemble": _assemble,
    "ktheory": _ktheory,
    "chow": _chow,
    "complete": _complete,
    "verify": _verify,
}


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if args.precision < 0:
        print("ValueError: --precision must be nonnegative", file=stderr)
        return 1
    try:
        payload, text = COMMANDS[args.command](args)
    except VerificationMismatch as exc:
        print(f"VerificationMismatch: {exc}", file=stderr)
        return 2
    except FlagMotiveError as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return 1
    except ValueError as exc:
        print(f"ValueError: {exc}", file=stderr)
        return 1
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True), file=stdout)
    else:
        print(text, file=stdout)
    return 0
