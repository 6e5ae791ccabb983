"""Command-line front end.

Exit codes: 0 success, 2 failed hypothesis or precondition, 3 parse error,
4 evaluation budget exceeded, 1 anything else (including failed golden
examples).
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import codes as cd
from . import constructions as cs
from .codes import DEFAULT_BUDGET, LinearCode, ScalingVector
from .errors import (
    BudgetExceededError,
    DimensionError,
    FieldError,
    HullCodesError,
    HypothesisError,
    ParseError,
    ZeroCodeError,
)
from .gf import GF
from .golden import example_ids, run_examples
from .textio import parse_vector, read_code, render_code_text, render_matrix, write_code

EXIT_OK, EXIT_FAIL, EXIT_HYPOTHESIS, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3, 4


# --- report rendering ----------------------------------------------------------------

def _params(C: LinearCode, budget: int) -> str:
    try:
        return f"[{C.n},{C.k},{cd.minimum_distance(C, budget)}]"
    except BudgetExceededError:
        return f"[{C.n},{C.k}]"


def _matrix_block(name: str, M) -> list[str]:
    if M.rows == 0:
        return [f"{name}: (empty)"]
    return [f"{name}:", render_matrix(M, indent="  ")]


def render_report(rep: cs.ConstructionReport, budget: int = DEFAULT_BUDGET) -> str:
    out = [f"kind: {rep.kind}", f"input: {_params(rep.input_code, budget)}"]
    for h in rep.hypotheses:
        tail = f" ({h.witness})" if h.witness else ""
        out.append(f"hypothesis: {h.name} = {str(h.holds).lower()}{tail}")
    for key, value in rep.witnesses.items():
        out.append(f"witness {key}: {value}")
    for key, value in rep.scalars.items():
        out.append(f"scalar {key}: {value}")
    if rep.col_perm is not None:
        out.append("col_perm: " + " ".join(map(str, rep.col_perm)))
    if rep.scaling is not None:
        out.append("scaling: " + " ".join(map(str, rep.scaling)))
        out.append("scaling_original: " + " ".join(map(str, rep.scaling_original())))
    for c in rep.checks:
        tail = f" ({c.witness})" if c.witness else ""
        out.append(f"check: {c.name} = {str(c.holds).lower()}{tail}")
    if rep.predicted_hull is not None:
        out.append(f"predicted_hull: {rep.predicted_hull}")
    if rep.verified_hull is not None:
        out.append(f"verified_hull: {rep.verified_hull}")
    out.append(f"ok: {str(rep.ok).lower()}")
    if rep.output_code is not None:
        out.append(f"output: {_params(rep.output_code, budget)}")
        out += _matrix_block("output_generator", rep.output_code.G)
    return "\n".join(out)


def _emit(text: str) -> None:
    sys.stdout.write(text.rstrip("\n") + "\n")


def _maybe_write(C: LinearCode | None, path: str | None) -> None:
    if path and C is not None:
        write_code(C, path)


# --- subcommands ----------------------------------------------------------------------

def cmd_hull(args) -> int:
    C = read_code(args.file)
    h = cd.hull(C)
    lines = [f"n: {C.n}", f"k: {C.k}"]
    try:
        lines.append(f"d: {cd.minimum_distance(C, args.budget)}")
    except BudgetExceededError:
        lines.append("d: (over budget)")
    lines += [f"hull_dim: {h.dim}", f"lcd: {str(h.dim == 0).lower()}",
              f"self_orthogonal: {str(h.dim == C.k).lower()}"]
    lines += _matrix_block("hull_basis", h.basis)
    _emit("\n".join(lines))
    return EXIT_OK


def cmd_dual(args) -> int:
    C = read_code(args.file)
    D = cd.dual(C)
    if isinstance(D, cd.ZeroDual):
        _emit(f"dual: zero code of length {D.n}")
        return EXIT_OK
    _maybe_write(D, args.output)
    _emit(render_code_text(D))
    return EXIT_OK


def cmd_distance(args) -> int:
    C = read_code(args.file)
    d = cd.minimum_distance(C, args.budget)
    _emit(f"n: {C.n}\nk: {C.k}\nd: {d}\nmds: {str(d == C.n - C.k + 1).lower()}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    C = read_code(args.file)
    count = cd.orthogonal_count(C, args.budget)
    _emit(f"orthogonal_codewords: {count} of {C.field.q ** C.k}\n"
          f"oracle_hull_dim: {cd.hull_oracle(C, args.budget)}\nhull_dim: {cd.hull(C).dim}")
    return EXIT_OK


def cmd_scale(args) -> int:
    C = read_code(args.file)
    a = ScalingVector(C.field, parse_vector(C.field, args.by))
    out = cd.scale(C, a)
    _maybe_write(out, args.output)
    _emit(f"hull_dim: {cd.hull(out).dim}\n" + render_code_text(out))
    return EXIT_OK


def cmd_permute(args) -> int:
    C = read_code(args.file)
    sigma = [int(t) for t in args.sigma.replace(",", " ").split()]
    out = cd.permute(C, sigma)
    _maybe_write(out, args.output)
    _emit(f"hull_dim: {cd.hull(out).dim}\n" + render_code_text(out))
    return EXIT_OK


def _need(args, attr: str, kind: str):
    value = getattr(args, attr)
    if value is None:
        raise HypothesisError(f"construct {kind} needs --{attr.replace('_', '-')}")
    return value


def cmd_construct(args) -> int:
    C = read_code(args.file)
    kind = args.kind
    if kind in ("sum", "contain"):
        if args.other is None:
            raise HypothesisError(f"construct {kind} needs a second code file")
        C2 = read_code(args.other)
        fn = cs.sum_hull_predict if kind == "sum" else cs.containment_hull_bound
        rep = fn(C, C2)
    elif kind == "thm31":
        rep = cs.theorem31_construct(C)
    elif kind == "lemma31":
        rep = cs.lemma31_rescale(C)
    elif kind == "thm42":
        rep = cs.theorem42_construct(C)
    elif kind == "cor":
        rep = cs.corollary_lcd_to_one(C)
    elif kind == "con1":
        if args.search:
            rep = cs.construction1_search(C, args.trials, args.seed)
        else:
            alpha = _need(args, "alpha", kind)
            P = parse_vector(C.field, _need(args, "row", kind))
            (a,) = parse_vector(C.field, alpha)
            rep = cs.construction1_extend(C, a, P)
    elif kind == "extend":
        d = parse_vector(C.field, _need(args, "dual_word", kind))
        out = cd.extend_with_dual_word(C, d)
        rep = cs.ConstructionReport("extend", C, output_code=out,
                                    predicted_hull=cd.hull(C).dim + 1)
        rep.hypothesis("d in dual of C and 1 + <d,d> = 0", True)
        rep.verified_hull = cs.verify_hull(out)
    elif kind == "lemma3ab":
        j = _need(args, "coord", kind)
        (a,) = parse_vector(C.field, _need(args, "value", kind))
        rep = cs.lemma3ab_rescale(C, j, a)
    else:  # pragma: no cover - argparse restricts choices
        raise HypothesisError(f"unknown construction {kind!r}")
    _maybe_write(rep.output_code, args.output)
    _emit(render_report(rep, args.budget))
    return EXIT_OK if rep.ok else EXIT_HYPOTHESIS


def cmd_rs(args) -> int:
    field = GF(args.q)
    if args.points == "all":
        points = [x.value for x in field.nonzero_elements()]
    else:
        points = parse_vector(field, args.points)
    if len(points) > field.q - 1:
        raise HypothesisError(f"at most {field.q - 1} nonzero points exist")
    C = cs.rs_code(field, points, args.k)
    _maybe_write(C, args.output)
    _emit(f"parameters: {_params(C, args.budget)}\n" + render_code_text(C))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        results = run_examples(args.only)
    except KeyError as exc:
        raise HypothesisError(str(exc.args[0])) from None
    failed = 0
    for example, facts in results:
        ok = all(f.passed for f in facts)
        failed += not ok
        _emit(f"{'PASS' if ok else 'FAIL'}  {example.id}  {example.title}")
        for f in facts:
            if args.verbose or not f.passed:
                mark = "ok " if f.passed else "BAD"
                _emit(f"    {mark} [{f.source}] {f.name}: expected {f.expected}, got {f.actual}")
    _emit(f"{len(results) - failed}/{len(results)} examples pass")
    return EXIT_OK if failed == 0 else EXIT_FAIL


# --- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hullcodes", description=__doc__.splitlines()[0])
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="maximum number of messages enumerated (default 2^24)")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")
        p.set_defaults(func=fn)
        return p

    with_file("hull", cmd_hull, "hull dimension and basis")
    p = with_file("dual", cmd_dual, "dual code")
    p.add_argument("-o", "--output")
    with_file("distance", cmd_distance, "exact minimum distance")
    with_file("oracle", cmd_oracle, "hull dimension by codeword enumeration")
    p = with_file("scale", cmd_scale, "scale coordinates")
    p.add_argument("--by", required=True, help="n nonzero elements")
    p.add_argument("-o", "--output")
    p = with_file("permute", cmd_permute, "permute coordinates (1-based)")
    p.add_argument("--sigma", required=True, help="new coordinate i takes old coordinate sigma(i)")
    p.add_argument("-o", "--output")

    p = sub.add_parser("construct", help="run a hull construction")
    p.add_argument("kind", choices=["thm31", "lemma31", "thm42", "cor", "con1", "extend",
                                    "sum", "contain", "lemma3ab"])
    p.add_argument("file")
    p.add_argument("other", nargs="?", help="second code for sum / contain")
    p.add_argument("--dual-word", dest="dual_word")
    p.add_argument("--alpha")
    p.add_argument("--row", help="the vector P prepended after alpha")
    p.add_argument("--search", action="store_true", help="search for alpha and P")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--coord", type=int)
    p.add_argument("--value")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("rs", help="Reed-Solomon code")
    p.add_argument("q", type=int)
    p.add_argument("points", help="'all' or a quoted list of distinct nonzero elements")
    p.add_argument("k", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_rs)

    p = sub.add_parser("verify-examples", help="check the golden worked examples")
    p.add_argument("--only", choices=example_ids())
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except HypothesisError as exc:
        if exc.report is not None:
            _emit(render_report(exc.report, args.budget))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (FieldError, DimensionError, ZeroCodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (HullCodesError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
