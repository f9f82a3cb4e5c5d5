"""Command-line driver.

Exit codes: 0 success; 2 malformed or invalid input file; 3 a precondition
of the requested operation failed; 4 unknown verb or bad flags.  All
diagnostics go to stderr with the prefix "error:".  Output is plain text,
one fact per line, or JSON with --json; both are byte-deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys

from .discriminant import (
    discriminant_form_value,
    discriminant_group,
    two_elementary_invariants,
)
from .errors import InvalidInputFile, LatticeError
from .involutions import (
    da_degeneracy_scan,
    eigenlattices,
    involution_from_json_dict,
    involution_rank_sum_check,
    period_domain_summary,
)
from .k3 import (
    f4_checks,
    is_nondegenerate,
    model_degeneracy_scan,
    model_from_json_dict,
    s311_selfcheck,
)
from .lattices import (
    determinant,
    is_even,
    is_hyperbolic,
    lattice_from_json_dict,
    make_sublattice,
    signature,
)
from .roots import bounded_vectors_of_norm, constrained_roots, vectors_of_norm


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse calls sys.exit(2) on errors; route them to exit code 4 instead
    def error(self, message):
        raise _UsageError(message)


def _vector_list(text: str):
    vectors = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            raise argparse.ArgumentTypeError("empty vector in list")
        try:
            vectors.append(tuple(int(c) for c in part.split(",")))
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"cannot parse vector {part!r}; expected comma-separated integers"
            ) from None
    return tuple(vectors)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("bound must be a positive integer")
    return value


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(c) for c in v) + ")"


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _load_json_file(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInputFile(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInputFile(f"{path}: not valid JSON ({exc})") from None


# --- per-verb loaders (exit 2 territory) and executors (exit 3 territory) ---


def _load_lattice(args):
    return lattice_from_json_dict(_load_json_file(args.file))


def _load_involution(args):
    return involution_from_json_dict(_load_json_file(args.file))


def _load_model(args):
    return model_from_json_dict(_load_json_file(args.file))


def _load_nothing(args):
    return None


def _exec_invariants(args, L):
    sig = signature(L)
    lines = [
        f"rank: {L.rank}",
        f"determinant: {determinant(L)}",
        f"signature: {_fmt_vec(sig)}",
        f"even: {_yesno(is_even(L))}",
    ]
    doc = {
        "rank": L.rank,
        "determinant": determinant(L),
        "signature": list(sig),
        "even": is_even(L),
    }
    try:
        triple = two_elementary_invariants(L)
    except LatticeError:
        lines.append("two-elementary: NOT-2-ELEMENTARY")
        doc["two_elementary"] = None
    else:
        lines.append(
            f"two-elementary: (r,a,delta) = ({triple[0]},{triple[1]},{triple[2]})"
        )
        doc["two_elementary"] = list(triple)
    return lines, doc


def _exec_discriminant(args, L):
    dg = discriminant_group(L)
    lines = [
        f"order: {dg.order}",
        "invariant-factors: (" + ", ".join(str(f) for f in dg.invariant_factors) + ")",
    ]
    gens = []
    for i, g in enumerate(dg.generators, start=1):
        q = discriminant_form_value(L, g)
        coords = "(" + ", ".join(str(c) for c in g) + ")"
        lines.append(f"generator {i}: {coords}  q = {q}")
        gens.append({"coords": [str(c) for c in g], "q": str(q)})
    doc = {
        "order": dg.order,
        "invariant_factors": list(dg.invariant_factors),
        "generators": gens,
    }
    return lines, doc


def _exec_roots(args, L):
    if args.ortho is not None and args.bound is not None:
        raise _UsageError("--ortho cannot be combined with --bound")
    if args.bound is not None:
        result = bounded_vectors_of_norm(L, args.norm, args.bound)
    elif args.ortho is not None:
        result = constrained_roots(L, args.ortho, args.norm)
    else:
        result = vectors_of_norm(L, args.norm)
    lines = [f"count: {result.count}", f"complete: {_yesno(result.complete)}"]
    lines.extend(_fmt_vec(v) for v in result.vectors)
    doc = {
        "count": result.count,
        "complete": result.complete,
        "vectors": [list(v) for v in result.vectors],
    }
    return lines, doc


def _exec_involution(args, loaded):
    psi, s_from_file = loaded
    fixed, anti = eigenlattices(psi)
    lines = [
        f"rank: {psi.ambient.rank}",
        f"fixed-rank: {fixed.rank}",
        f"fixed-hyperbolic: {_yesno(is_hyperbolic(fixed.induced_lattice()))}",
        f"anti-rank: {anti.rank}",
        f"anti-hyperbolic: {_yesno(is_hyperbolic(anti.induced_lattice()))}",
        f"rank-sum-check: {'pass' if involution_rank_sum_check(psi) else 'fail'}",
    ]
    doc = {
        "rank": psi.ambient.rank,
        "fixed_rank": fixed.rank,
        "fixed_hyperbolic": is_hyperbolic(fixed.induced_lattice()),
        "anti_rank": anti.rank,
        "anti_hyperbolic": is_hyperbolic(anti.induced_lattice()),
        "rank_sum_check": involution_rank_sum_check(psi),
    }
    s = None
    if args.s_basis is not None:
        s = make_sublattice(psi.ambient, args.s_basis)
    elif s_from_file is not None:
        s = s_from_file
    if s is not None:
        summary = period_domain_summary(psi, s)
        undef = "undefined"
        lines.extend(
            [
                f"anti-s-rank: {summary.rank_anti_s}",
                f"anti-s-hyperbolic: {_yesno(summary.anti_s_hyperbolic)}",
                f"lambda-plus-dim: {summary.dim_lambda_plus if summary.dim_lambda_plus is not None else undef}",
                f"lambda-minus-dim: {summary.dim_lambda_minus if summary.dim_lambda_minus is not None else undef}",
            ]
        )
        doc["period_domain"] = {
            "rank_fixed": summary.rank_fixed,
            "rank_anti_s": summary.rank_anti_s,
            "fixed_hyperbolic": summary.fixed_hyperbolic,
            "anti_s_hyperbolic": summary.anti_s_hyperbolic,
            "dim_lambda_plus": summary.dim_lambda_plus,
            "dim_lambda_minus": summary.dim_lambda_minus,
        }
    return lines, doc


def _exec_k3_check(args, model):
    ok, witnesses = is_nondegenerate(model)
    verdict = "NONDEGENERATE" if ok else "DEGENERATE-POSSIBLE"
    neg_f = tuple(-c for c in model.f)
    labels = []
    for w in witnesses:
        if w == model.f:
            labels.append("+f")
        elif w == neg_f:
            labels.append("-f")
        else:
            labels.append(_fmt_vec(w))
    lines = [f"{verdict}; witnesses: {', '.join(labels)}"]
    doc = {
        "nondegenerate": ok,
        "verdict": verdict,
        "witnesses": [list(w) for w in witnesses],
        "labels": labels,
    }
    return lines, doc


def _exec_da_scan(args, model):
    if args.s_basis is not None:
        s = make_sublattice(model.lattice, args.s_basis)
        result = da_degeneracy_scan(model.lattice, s, args.bound)
    else:
        result = model_degeneracy_scan(model, args.bound)
    if result.found:
        lines = [
            "DEGENERATE",
            f"delta: {_fmt_vec(result.delta)}",
            f"delta1: {_fmt_vec(result.delta1)}",
            f"delta2: {_fmt_vec(result.delta2)}",
        ]
    else:
        lines = ["NO-WITNESS-WITHIN-BOUND"]
    doc = {
        "status": result.status,
        "delta": list(result.delta) if result.delta is not None else None,
        "delta1": list(result.delta1) if result.delta1 is not None else None,
        "delta2": list(result.delta2) if result.delta2 is not None else None,
    }
    return lines, doc


def _exec_demo(args, _):
    items = s311_selfcheck() + f4_checks()
    lines = []
    all_ok = True
    for item in items:
        status = "" if item.ok else " [FAILED]"
        lines.append(f"{item.name}: {item.detail}{status}")
        all_ok = all_ok and item.ok
    lines.append(f"all-ok: {_yesno(all_ok)}")
    doc = {
        "checks": [
            {"name": it.name, "detail": it.detail, "ok": it.ok} for it in items
        ],
        "all_ok": all_ok,
    }
    return lines, doc


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="zlattice",
        description="Exact computations on even integral lattices.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def add(name, help_text, load, execute):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.set_defaults(load=load, execute=execute)
        return p

    p = add("invariants", "rank, determinant, signature, parity data of a lattice file",
            _load_lattice, _exec_invariants)
    p.add_argument("file")

    p = add("discriminant", "invariant factors and quadratic form values of the discriminant group",
            _load_lattice, _exec_discriminant)
    p.add_argument("file")

    p = add("roots", "enumerate vectors of a given norm", _load_lattice, _exec_roots)
    p.add_argument("file")
    p.add_argument("--norm", type=int, required=True, help="target self-intersection")
    p.add_argument("--ortho", type=_vector_list, default=None, metavar="V;V;...",
                   help="restrict to the orthogonal complement of these vectors")
    p.add_argument("--bound", type=_positive_int, default=None,
                   help="scan a coordinate box instead of exact enumeration")

    p = add("involution", "eigenlattice data of an involution file",
            _load_involution, _exec_involution)
    p.add_argument("file")
    p.add_argument("--s-basis", type=_vector_list, default=None, metavar="V;V;...",
                   help="marked sublattice basis for the period-domain summary "
                        "(overrides the file's s_basis)")

    p = add("k3-check", "decide double-point nondegeneracy for a Picard model file",
            _load_model, _exec_k3_check)
    p.add_argument("file")

    p = add("da-scan", "bounded search for a degeneracy witness in a Picard model file",
            _load_model, _exec_da_scan)
    p.add_argument("file")
    p.add_argument("--bound", type=_positive_int, required=True,
                   help="max |coordinate| of scanned vectors")
    p.add_argument("--s-basis", type=_vector_list, default=None, metavar="V;V;...",
                   help="scan over this sublattice instead of the marked one")

    p = add("demo", "run the built-in consistency report", _load_nothing, _exec_demo)
    p.add_argument("target", choices=["s311"])

    return parser


def run(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    try:
        loaded = args.load(args)
    except LatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        lines, doc = args.execute(args, loaded)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except LatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
