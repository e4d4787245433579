"""Command-line surface: counting, enumeration, transforms, verification.

All input and output is line-oriented plain text using the serialization
formats of the library modules, so results are stable byte for byte and
compose in shell pipelines.  Exit status: 0 on success (and on verification
pass), 1 on verification failure, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence

from .cumulants import (
    MomentFunctional,
    format_table,
    moment_functional_from_text,
    moments_to_cumulants,
    equivalence_reports,
)
from .families import named_sequence
from .partitions import iter_D, iter_partitions
from .peaks import factors_from_plot, peaks
from .rings import format_ring_elem, parse_ring_elem
from .series import Series, boolean_free_series_check, troupe_transform, inverse_troupe_transform
from .troupe import branch_series, builtin, from_table, random_branch_table
from .trees import encode, encode_labeled, enumerate_trees, stack_sort

DEFAULT_ORDER = 12


class CliError(Exception):
    """Usage or input error; reported on stderr with exit status 2."""


def _parse_word(text: str) -> tuple[int, ...]:
    try:
        items = tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError as exc:
        raise CliError(f"bad integer list {text!r}") from exc
    if not items:
        raise CliError("expected a nonempty integer list")
    return items


def _parse_permutation(text: str) -> tuple[int, ...]:
    word = _parse_word(text)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise CliError(f"{text!r} is not a permutation of 1..n")
    return word


TREE_KINDS = ("bpt", "branch", "dbpt")
PARTITION_KIND_NAMES = {
    "partition": "all",
    "interval": "interval",
    "noncrossing": "noncrossing",
    "nc-irreducible": "nc_irreducible",
    "nc-irreducible-min2": "nc_irreducible_min2",
}


def _family_items(kind: str, n: int | None, colors: tuple[int, ...] | None):
    kind = kind.lower()
    if kind in TREE_KINDS:
        if (n is None) == (colors is None):
            raise CliError("give exactly one of --n and --colors")
        if kind == "dbpt":
            items = enumerate_trees(kind, n=n, word=colors)
            return (encode_labeled(lt) for lt in items)
        items = enumerate_trees(kind, n=n, word=colors)
        return (encode(t) for t in items)
    if kind in PARTITION_KIND_NAMES:
        if n is None:
            raise CliError(f"--n is required for kind {kind!r}")
        return (str(p) for p in iter_partitions(n, PARTITION_KIND_NAMES[kind]))
    if kind == "d-permutations":
        if n is None:
            raise CliError("--n is required for kind 'd-permutations'")
        return (",".join(map(str, sigma)) for sigma in iter_D(n))
    raise CliError(
        f"unknown kind {kind!r}; expected one of "
        f"{TREE_KINDS + tuple(PARTITION_KIND_NAMES) + ('d-permutations',)}"
    )


def cmd_count(args) -> int:
    total = sum(1 for _ in _family_items(args.kind, args.n, args.colors))
    print(total)
    return 0


def cmd_enumerate(args) -> int:
    for line in _family_items(args.kind, args.n, args.colors):
        print(line)
    return 0


def cmd_transform(args) -> int:
    coeffs = [Fraction(0)]
    for chunk in args.coeffs.split(","):
        try:
            coeffs.append(parse_ring_elem(chunk))
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    order = args.order if args.order is not None else max(DEFAULT_ORDER, len(coeffs))
    series = Series(coeffs, order=order)
    if args.kind == "inverse":
        out = inverse_troupe_transform(series)
    else:
        out = troupe_transform(series)
    print(",".join(format_ring_elem(c) for c in out.coeffs[1:]))
    return 0


def cmd_cumulants(args) -> int:
    try:
        with open(args.moments, "r", encoding="utf-8") as fh:
            phi = moment_functional_from_text(fh.read())
    except OSError as exc:
        raise CliError(f"cannot read {args.moments}: {exc}") from exc
    except ValueError as exc:
        raise CliError(f"{args.moments}: {exc}") from exc
    for kind in ("classical", "free", "boolean"):
        table = moments_to_cumulants(phi, kind)
        print(f"# {kind}")
        sys.stdout.write(format_table(table.table))
    return 0


def cmd_verify(args) -> int:
    if args.troupe == "random":
        table = random_branch_table(args.seed, max_size=max(args.n - 1, 1),
                                    num_colors=args.num_colors)
        tau = from_table(table, name=f"random(seed={args.seed})")
        alphabet = range(args.num_colors)
    else:
        try:
            tau = builtin(args.troupe)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        alphabet = range(args.num_colors)
    failures = 0
    reports = equivalence_reports(tau, list(alphabet), args.n)
    for report in reports:
        status = "ok" if report.all_equal else "FAIL"
        if not report.all_equal:
            failures += 1
        cells = []
        for check in report.checks:
            cells.append(f"{check.kind}={format_ring_elem(check.enumeration)}")
        word = ",".join(map(str, report.word))
        print(f"{status} word {word}: " + " ".join(cells))

    order = args.order if args.order is not None else DEFAULT_ORDER
    bseries = branch_series(tau, order)
    tseries = troupe_transform(bseries)
    bool_ogf = -bseries.shift()
    free_ogf = -tseries.shift()
    series_ok = boolean_free_series_check(bool_ogf, free_ogf)
    print(f"{'ok' if series_ok else 'FAIL'} cumulant series identity to order {order}")
    if not series_ok:
        failures += 1
    print(f"{'PASS' if failures == 0 else 'FAIL'} ({len(reports)} words checked)")
    return 0 if failures == 0 else 1


def cmd_peaks(args) -> int:
    word = _parse_permutation(args.permutation)
    print("peaks: " + ",".join(map(str, peaks(word))))
    for factor in factors_from_plot(word):
        print(encode_labeled(factor))
    return 0


def cmd_sort(args) -> int:
    word = _parse_permutation(args.permutation)
    print(",".join(map(str, stack_sort(word))))
    return 0


def cmd_examples(args) -> int:
    try:
        seq = named_sequence(args.name)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    order = args.order if args.order is not None else DEFAULT_ORDER
    moments = seq.moments(order)
    print("# moments")
    for n, m in enumerate(moments):
        print(f"{n}: {format_ring_elem(m)}")
    classical = seq.classical_cumulants(order)
    print("# classical cumulants")
    for n, k in enumerate(classical, start=1):
        print(f"{n}: {format_ring_elem(k)}")
    alphabet = (0,)
    table = {}
    for length in range(1, order + 1):
        table[(0,) * length] = moments[length]
    phi = MomentFunctional.of(alphabet, order, table)
    for kind in ("free", "boolean"):
        cum = moments_to_cumulants(phi, kind)
        print(f"# {kind} cumulants")
        for length in range(1, order + 1):
            print(f"{length}: {format_ring_elem(cum.table[(0,) * length])}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="troupes",
        description="Exact tree enumeration, troupe transforms, and cumulants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family_flags(p):
        p.add_argument("--kind", required=True,
                       help="bpt, branch, dbpt, partition, interval, noncrossing, "
                            "nc-irreducible, nc-irreducible-min2, d-permutations")
        p.add_argument("--n", type=int, default=None, help="size (single color)")
        p.add_argument("--colors", type=_parse_word, default=None,
                       help="color word i1,i2,...,in")

    p = sub.add_parser("count", help="count a combinatorial family")
    add_family_flags(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list a combinatorial family")
    add_family_flags(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("transform", help="apply the branch-to-tree series transform")
    p.add_argument("--coeffs", required=True,
                   help="comma-separated coefficients of t^1,t^2,...")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--kind", choices=("forward", "inverse"), default="forward")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("cumulants", help="convert a moment table to cumulant tables")
    p.add_argument("--moments", required=True, help="moment table file")
    p.set_defaults(func=cmd_cumulants)

    p = sub.add_parser("verify", help="check the cumulant/tree-sum equivalences")
    p.add_argument("--troupe", required=True,
                   help="all, full, motzkin, colorset:J, rightmono:t1,t2, "
                        "colorcount:J, or random")
    p.add_argument("--n", type=int, default=6, help="maximum word length")
    p.add_argument("--order", type=int, default=None,
                   help="truncation order for the series identity")
    p.add_argument("--seed", type=int, default=0, help="seed for random troupes")
    p.add_argument("--num-colors", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("peaks", help="peaks and plot-extracted insertion factors")
    p.add_argument("permutation", help="e.g. 1,3,2")
    p.set_defaults(func=cmd_peaks)

    p = sub.add_parser("sort", help="one pass of the stack-sorting map")
    p.add_argument("permutation", help="e.g. 2,3,1")
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("examples", help="moments and cumulants of a named family")
    p.add_argument("name")
    p.add_argument("--order", type=int, default=None)
    p.set_defaults(func=cmd_examples)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
