"""Command-line front end.

One binary with subcommands; flags win over an optional JSON config file.
Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
exhaustion.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from sporbits.groebner import BudgetExceeded, GBBudget, buchberger
from sporbits.involutions import (
    FpfInvolution,
    basics_decomposition,
    enumerate_fpf,
    fpf_length,
    glb,
    in_basic_family,
    j_bar,
    odd_rank_constraint_holds,
    pair_statistics,
    poset_dot,
    symplectic_essential_boxes,
    upper_covers,
    wiring_ascii,
)
from sporbits.orders import antidiagonal_order, grevlex_order, lex_order
from sporbits.pairperms import conjugation_check, pair_permutations
from sporbits.permutations import Permutation, length
from sporbits.polynomials import VariableSet, parse_polynomial
from sporbits.symplectic import (
    NotInCatalog,
    classify_orbit,
    mat_mul,
    orbit_ideal,
    random_lower_triangular,
    random_symplectic,
    verify_degeneration,
    verify_knutson_miller,
)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

DEFAULT_BUDGET = GBBudget()
DEEP_BUDGET = GBBudget(max_pairs=2_000_000, max_degree=80, max_seconds=3600.0)


def _budget(args) -> GBBudget:
    base = DEEP_BUDGET if getattr(args, "deep", False) else GBBudget()

    def pick(name, fallback):
        value = getattr(args, name, None)
        return fallback if value is None else value

    return GBBudget(
        max_pairs=pick("max_pairs", base.max_pairs),
        max_degree=pick("max_degree", base.max_degree),
        max_seconds=pick("max_seconds", base.max_seconds),
    )


def _emit(args, payload: dict) -> None:
    if getattr(args, "format", "json") == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def _iota(text: str) -> FpfInvolution:
    return FpfInvolution.from_any(text)


def cmd_enumerate(args) -> int:
    items = enumerate_fpf(args.n, bound=max(args.n, 5))
    _emit(
        args,
        {
            "n": args.n,
            "count": len(items),
            "involutions": [list(i.word) for i in items],
        },
    )
    return EXIT_OK


def cmd_poset(args) -> int:
    if args.format == "dot":
        print(poset_dot(args.n))
        return EXIT_OK
    edges = []
    for iota in enumerate_fpf(args.n):
        for upper in sorted(upper_covers(iota), key=lambda k: k.word):
            edges.append([list(iota.word), list(upper.word)])
    _emit(args, {"n": args.n, "edges_lower_to_upper": edges})
    return EXIT_OK


def cmd_wiring(args) -> int:
    print(wiring_ascii(_iota(args.iota)))
    return EXIT_OK


def cmd_boxes(args) -> int:
    iota = _iota(args.iota)
    boxes = sorted(symplectic_essential_boxes(iota))
    _emit(
        args,
        {
            "iota": list(iota.word),
            "symplectic_essential_boxes": [list(b) for b in boxes],
            "odd_rank_constraint_holds": odd_rank_constraint_holds(iota),
        },
    )
    return EXIT_OK


def cmd_basics(args) -> int:
    iota = _iota(args.iota)
    parts = sorted(basics_decomposition(iota), key=lambda k: k.word)
    meet = glb(parts, n=iota.n)
    ok = meet == iota and all(in_basic_family(p) for p in parts)
    _emit(
        args,
        {
            "iota": list(iota.word),
            "decomposition": [list(p.word) for p in parts],
            "glb": list(meet.word),
            "glb_matches": ok,
        },
    )
    return EXIT_OK if ok else EXIT_VERIFICATION_FAILED


def cmd_pairperms(args) -> int:
    result = pair_permutations(_iota(args.iota))
    _emit(args, result.to_json())
    return EXIT_OK


def cmd_groebner(args) -> int:
    blob = json.loads(open(args.ideal).read())
    names = blob.get("variables")
    if names:
        vs = VariableSet(tuple(names), matrix_size=blob.get("matrix_size", 0))
    else:
        vs = VariableSet.matrix(blob["matrix_size"])
    gens = [parse_polynomial(vs, s) for s in blob["generators"]]
    if args.order == "antidiagonal":
        order = antidiagonal_order(vs)
    elif args.order == "grevlex":
        order = grevlex_order(vs)
    else:
        order = lex_order(vs)
    try:
        gb = buchberger(gens, order, _budget(args))
    except BudgetExceeded as exc:
        _emit(args, {"budget_exhausted": exc.reason, "stats": exc.stats})
        return EXIT_BUDGET
    _emit(args, {"order": order.name, "reduced_basis": [str(g) for g in gb]})
    return EXIT_OK


def cmd_orbit_ideal(args) -> int:
    try:
        ideal = orbit_ideal(_iota(args.iota))
    except NotInCatalog as exc:
        _emit(args, {"error": str(exc)})
        return EXIT_USAGE
    _emit(args, ideal.to_json())
    return EXIT_OK


def cmd_classify(args) -> int:
    rows = json.loads(open(args.matrix).read())
    M = [[Fraction(str(x)) for x in row] for row in rows]
    iota = classify_orbit(M)
    _emit(args, {"iota": list(iota.word)})
    return EXIT_OK


def cmd_verify_km(args) -> int:
    p = Permutation.from_any(args.pi)
    try:
        ok = verify_knutson_miller(p, _budget(args))
    except BudgetExceeded as exc:
        _emit(args, {"budget_exhausted": exc.reason, "stats": exc.stats})
        return EXIT_BUDGET
    _emit(args, {"pi": list(p.word), "groebner_basis": ok})
    return EXIT_OK if ok else EXIT_VERIFICATION_FAILED


def cmd_verify_degeneration(args) -> int:
    iota = _iota(args.iota)
    try:
        report = verify_degeneration(iota, _budget(args))
    except NotInCatalog as exc:
        _emit(args, {"error": str(exc)})
        return EXIT_USAGE
    _emit(args, report.to_json())
    if report.budget_exhausted:
        return EXIT_BUDGET
    return EXIT_OK if report.equal else EXIT_VERIFICATION_FAILED


def cmd_verify_all(args) -> int:
    """Batch invariant suite at combinatorial scale plus the 2n=4 catalog
    degenerations."""
    rng = random.Random(args.seed)
    failures: list[str] = []
    checks: list[list] = []

    def record(name: str, ok: bool, detail: str = ""):
        checks.append([name, bool(ok), detail])
        if not ok:
            failures.append(name)

    nmax = args.n
    for n in range(1, nmax + 1):
        items = enumerate_fpf(n, bound=max(nmax, 5))
        record(
            f"length_formula_2n={2*n}",
            all(fpf_length(i) == length(i.permutation()) for i in items),
        )
        record(
            f"odd_rank_constraint_2n={2*n}",
            all(odd_rank_constraint_holds(i) for i in items),
        )
        if n <= 4:
            ok = True
            for iota in items:
                parts = basics_decomposition(iota)
                if not all(in_basic_family(p) for p in parts):
                    ok = False
                    break
                if glb(parts, n=n) != iota:
                    ok = False
                    break
            record(f"basic_decomposition_2n={2*n}", ok)
        if n <= 3:
            ok = True
            for iota in items:
                stats = pair_statistics(iota)
                pp = pair_permutations(iota)
                if any(length(w) != stats.c + 2 * stats.r for w in pp.perms):
                    ok = False
                    break
                if any(not conjugation_check(w, iota) for w in pp.perms):
                    ok = False
                    break
            record(f"pair_permutation_length_2n={2*n}", ok)
    for word in ("2143", "3412", "4321"):
        report = verify_degeneration(_iota(word), _budget(args))
        record(
            f"degeneration_{word}",
            report.equal is True,
            report.budget_exhausted or "",
        )
    # classification is constant on orbits
    ok = True
    for _ in range(args.samples):
        b = random_lower_triangular(4, rng)
        s = random_symplectic(2, rng)
        base = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]
        if classify_orbit(mat_mul(mat_mul(b, base), s)) != j_bar(2):
            ok = False
            break
    record("classification_invariance_2n=4", ok)
    _emit(args, {"checks": checks, "failures": failures})
    return EXIT_OK if not failures else EXIT_VERIFICATION_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sporbits",
        description="Symplectic orbit combinatorics and degeneration checks",
    )
    parser.add_argument("--config", help="JSON config file; flags win", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, budget=False):
        p.add_argument("--format", choices=["json", "text", "dot"], default="json")
        if budget:
            p.add_argument("--deep", action="store_true", help="raise GB budgets")
            p.add_argument("--max-pairs", dest="max_pairs", type=int)
            p.add_argument("--max-degree", dest="max_degree", type=int)
            p.add_argument("--max-seconds", dest="max_seconds", type=float)

    p = sub.add_parser("enumerate", help="list fixed-point-free involutions")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("poset", help="opposite-Bruhat Hasse diagram")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("wiring", help="ASCII wiring diagram")
    p.add_argument("--iota", required=True)
    common(p)
    p.set_defaults(func=cmd_wiring)

    p = sub.add_parser("boxes", help="symplectic essential boxes")
    p.add_argument("--iota", required=True)
    common(p)
    p.set_defaults(func=cmd_boxes)

    p = sub.add_parser("basics", help="basic-element decomposition + glb check")
    p.add_argument("--iota", required=True)
    common(p)
    p.set_defaults(func=cmd_basics)

    p = sub.add_parser("pairperms", help="pair permutations P(iota)")
    p.add_argument("--iota", required=True)
    common(p)
    p.set_defaults(func=cmd_pairperms)

    p = sub.add_parser("groebner", help="reduced Groebner basis of an ideal file")
    p.add_argument("--ideal", required=True, help="JSON file with variables/generators")
    p.add_argument("--order", choices=["lex", "grevlex", "antidiagonal"], default="lex")
    common(p, budget=True)
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("orbit-ideal", help="catalog generators for I(Y_iota)")
    p.add_argument("--iota", required=True)
    common(p)
    p.set_defaults(func=cmd_orbit_ideal)

    p = sub.add_parser("classify", help="orbit of a numeric matrix")
    p.add_argument("--matrix", required=True, help="JSON array of rational strings")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-km", help="Knutson-Miller Groebner check")
    p.add_argument("--pi", required=True)
    common(p, budget=True)
    p.set_defaults(func=cmd_verify_km)

    p = sub.add_parser("verify-degeneration", help="full degeneration check")
    p.add_argument("--iota", required=True)
    common(p, budget=True)
    p.set_defaults(func=cmd_verify_degeneration)

    p = sub.add_parser("verify-all", help="batch invariant suite")
    p.add_argument("--n", type=int, default=4, help="max half-size for enumeration checks")
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--samples", type=int, default=20)
    common(p, budget=True)
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        # config values become parser-level defaults (on the subcommand
        # parsers too, since each parses into its own namespace), then a
        # second parse lets explicitly given flags win over them
        try:
            cfg = json.loads(open(args.config).read())
        except (OSError, json.JSONDecodeError) as exc:
            parser.error(f"bad config file: {exc}")
        defaults = {k.replace("-", "_"): v for k, v in cfg.items()}
        parser.set_defaults(**defaults)
        for action in parser._actions:
            if isinstance(action, argparse._SubParsersAction):
                for sub_parser in action.choices.values():
                    sub_parser.set_defaults(**defaults)
        args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(json.dumps({"budget_exhausted": exc.reason, "stats": exc.stats}))
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
