"""Command-line front end.

Exit codes: 0 success, 1 input or parse error, 2 semantic precondition
violated (unranked base, cyclic base, bad meet family, size guard),
3 verification failure.  Enumeration commands stream one result per line
as it is produced; labels, never positions, appear in output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from . import formats
from .ccm import meet_irreducibles
from .critical import critical_base
from .dualization import Antichain, check_dual, reduce_dual_to_cmi
from .errors import (
    GeodualError,
    InputError,
    NotRankedError,
    PreconditionError,
    VerificationError,
)
from .implications import ImplicationalBase
from .oracle import (
    all_closed_sets,
    joins_brute,
    meets_brute,
    mingens_brute,
    random_acyclic_base,
    random_hypergraph,
    random_ranked_base,
    transversals_brute,
)
from .ranking import RankConflict, RankFunction, compute_rank
from .sets import ElementSet
from .sid import MeetFamily, iter_recovered_implications, partition_meets, recover_critical_base


def _println(line: str) -> None:
    sys.stdout.write(line + "\n")
    sys.stdout.flush()


def _print_sets(sets, as_json: bool) -> None:
    for s in sets:
        if as_json:
            _println(json.dumps({"set": list(s.labels())}))
        else:
            _println(formats.format_set(s))


def _load_base(path) -> ImplicationalBase:
    return formats.read_imp(path)


def _load_family(path):
    return formats.read_mf(path)


# -- subcommands -------------------------------------------------------------


def _ccm_job(payload):
    """Worker for --jobs: all meets avoiding one element, as masks."""
    base, j = payload
    from .ccm import RankedSet, _recurse, seed_region

    rho = compute_rank(base)
    k = rho.max_rank
    b = RankedSet(ElementSet(base.ground, 1 << j), rho.ranks[j])
    seed = seed_region(base, rho, b)
    return j, [m.mask for m in _recurse(base, rho, k, b, seed.mask, None)]


def cmd_ccm(args) -> int:
    base = _load_base(args.file)
    if args.jobs and args.jobs > 1:
        rho = compute_rank(base)
        if isinstance(rho, RankConflict):
            raise NotRankedError(f"base is not ranked: {rho.describe()}", conflict=rho)
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = pool.map(
                _ccm_job, [(base, j) for j in range(base.ground.size)]
            )
            stream = (
                (j, ElementSet(base.ground, mask))
                for j, masks in results
                for mask in masks
            )
            _emit_ccm(base, stream, args)
        return 0
    _emit_ccm(base, meet_irreducibles(base), args)
    return 0


def _emit_ccm(base, stream, args) -> None:
    labels = base.ground.labels
    for j, meet in stream:
        if args.json:
            _println(json.dumps({"element": labels[j], "meet": list(meet.labels())}))
        elif args.by_element:
            _println(f"{labels[j]}: {formats.format_set(meet)}")
        else:
            _println(formats.format_set(meet))


def _sid_job(payload):
    """Worker for --jobs: recovered premises for one conclusion, as masks."""
    family, j, j_up = payload
    from .hypergraphs import induced, minimal_transversals
    from .sid import complement_hypergraph, predecessors

    if not j_up:
        return j, []
    pred = predecessors(family, j, j_up)
    restricted = induced(complement_hypergraph(family, j, j_up), pred)
    return j, [t.mask for t in minimal_transversals(restricted)]


def cmd_sid(args) -> int:
    ground, sets = _load_family(args.file)
    family = MeetFamily(ground, sets)
    if args.verify or args.strict:
        base = recover_critical_base(family, verify=args.verify, strict=args.strict)
        sys.stdout.write(formats.format_imp(base))
        sys.stdout.flush()
        return 0
    _println("elements: " + " ".join(ground.labels))
    if args.jobs and args.jobs > 1:
        part = partition_meets(family)
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            payloads = [(family, j, part[j]) for j in range(ground.size)]
            for j, masks in pool.map(_sid_job, payloads):
                labels = ground.labels
                for mask in masks:
                    lhs = " ".join(labels[i] for i in ElementSet(ground, mask))
                    _println(f"{lhs} -> {labels[j]}")
        return 0
    for imp in iter_recovered_implications(family):
        _println(repr(imp))
    return 0


def cmd_critical_base(args) -> int:
    base = _load_base(args.file)
    sys.stdout.write(formats.format_imp(critical_base(base)))
    sys.stdout.flush()
    return 0


def cmd_rank_check(args) -> int:
    base = _load_base(args.file)
    result = compute_rank(base)
    if isinstance(result, RankFunction):
        if args.json:
            _println(
                json.dumps(
                    {
                        "ranked": True,
                        "ranks": {
                            label: result.ranks[pos]
                            for pos, label in enumerate(base.ground.labels)
                        },
                    }
                )
            )
        else:
            _println("ranked")
            for pos, label in enumerate(base.ground.labels):
                _println(f"{label}={result.ranks[pos]}")
        return 0
    if args.json:
        _println(
            json.dumps(
                {
                    "ranked": False,
                    "element": base.ground.labels[result.element],
                    "required_ranks": list(result.required_ranks),
                    "witnesses": [repr(w) for w in result.witness_implications],
                }
            )
        )
    else:
        _println("conflict")
        _println(f"element: {base.ground.labels[result.element]}")
        _println("ranks: {} vs {}".format(*result.required_ranks))
        for w in result.witness_implications:
            _println(f"witness: {w!r}")
    return 2


def _load_antichain(base, path) -> Antichain:
    ground, sets = _load_family(path)
    if ground != base.ground:
        raise InputError(
            f"{path}: element list differs from the base (order matters)"
        )
    rehosted = [ElementSet(base.ground, s.mask) for s in sets]
    return Antichain(base, rehosted)


def cmd_dual_check(args) -> int:
    base = _load_base(args.file)
    bplus = _load_antichain(base, args.plus)
    bminus = _load_antichain(base, args.minus)
    _println("dual" if check_dual(base, bplus, bminus) else "not dual")
    return 0


def cmd_reduce(args) -> int:
    base = _load_base(args.file)
    bplus = _load_antichain(base, args.plus)
    bminus = _load_antichain(base, args.minus)
    meets = None
    if args.meets:
        ground, sets = _load_family(args.meets)
        if ground != base.ground:
            raise InputError(f"{args.meets}: element list differs from the base")
        meets = MeetFamily(base.ground, [ElementSet(base.ground, s.mask) for s in sets])
    omega, family = reduce_dual_to_cmi(base, bplus, bminus, meets)
    formats.write_imp(omega, args.out_base)
    formats.write_mf(family.ground, family.meets, args.out_meets)
    _println(f"wrote {args.out_base} and {args.out_meets}")
    return 0


def cmd_roundtrip(args) -> int:
    base = _load_base(args.file)
    meets = MeetFamily(base.ground, [m for _, m in meet_irreducibles(base)])
    recovered = recover_critical_base(meets)
    expected = critical_base(base)
    if set(recovered.implications) == set(expected.implications):
        _println("roundtrip ok: {} meets, {} implications".format(
            len(meets), len(recovered.implications)
        ))
        return 0
    raise VerificationError(
        "roundtrip mismatch: recovered base differs from the critical base"
    )


def cmd_oracle(args) -> int:
    needs_file = args.oracle_command not in ("gen-ranked", "gen-acyclic", "gen-hypergraph")
    if needs_file and not args.file:
        raise InputError(f"oracle {args.oracle_command} requires an input file")
    if args.oracle_command == "mingens" and not args.target:
        raise InputError("oracle mingens requires --target")
    if args.oracle_command == "closed-sets":
        _print_sets(all_closed_sets(_load_base(args.file)), args.json)
    elif args.oracle_command == "meets":
        _print_sets(meets_brute(_load_base(args.file)), args.json)
    elif args.oracle_command == "joins":
        _print_sets(joins_brute(_load_base(args.file)), args.json)
    elif args.oracle_command == "mingens":
        base = _load_base(args.file)
        target = base.ground.position(args.target)
        _print_sets(mingens_brute(base, target), args.json)
    elif args.oracle_command == "transversals":
        _print_sets(transversals_brute(formats.read_hg(args.file)), args.json)
    elif args.oracle_command == "partition":
        ground, sets = _load_family(args.file)
        family = MeetFamily(ground, sets)
        for j, fam in sorted(partition_meets(family).items()):
            for m in fam:
                _println(f"{ground.labels[j]}: {formats.format_set(m)}")
    elif args.oracle_command == "gen-ranked":
        rng = random.Random(args.seed)
        base = random_ranked_base(
            rng, max_elements=args.max_elements, max_implications=args.max_implications
        )
        sys.stdout.write(formats.format_imp(base))
    elif args.oracle_command == "gen-acyclic":
        rng = random.Random(args.seed)
        base = random_acyclic_base(
            rng, max_elements=args.max_elements, max_implications=args.max_implications
        )
        sys.stdout.write(formats.format_imp(base))
    elif args.oracle_command == "gen-hypergraph":
        rng = random.Random(args.seed)
        sys.stdout.write(formats.format_hg(random_hypergraph(rng)))
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown oracle subcommand {args.oracle_command!r}")
    sys.stdout.flush()
    return 0


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geodual",
        description=(
            "Translate between unit implicational bases and families of "
            "meet-irreducible sets, for ranked convex geometries"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ccm", help="enumerate the meet-irreducible sets of a ranked base")
    p.add_argument("file", help=".imp input")
    p.add_argument("--by-element", action="store_true", help="prefix each meet with its element")
    p.add_argument("--json", action="store_true", help="one JSON object per line")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers over elements")
    p.set_defaults(func=cmd_ccm)

    p = sub.add_parser("sid", help="recover the critical base from a meet family")
    p.add_argument("file", help=".mf input")
    p.add_argument("--verify", action="store_true", help="recompute the meets of the output and compare")
    p.add_argument("--strict", action="store_true", help="validate the input is genuinely meet-irreducible")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers over conclusions")
    p.set_defaults(func=cmd_sid)

    p = sub.add_parser("critical-base", help="compute the critical base of an acyclic base")
    p.add_argument("file", help=".imp input")
    p.set_defaults(func=cmd_critical_base)

    p = sub.add_parser("rank-check", help="compute a rank function or report the conflict")
    p.add_argument("file", help=".imp input")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rank_check)

    p = sub.add_parser("dual-check", help="decide whether two antichains are dual in the closure lattice")
    p.add_argument("file", help=".imp input")
    p.add_argument("--plus", required=True, help=".mf with the positive antichain")
    p.add_argument("--minus", required=True, help=".mf with the negative antichain")
    p.set_defaults(func=cmd_dual_check)

    p = sub.add_parser("reduce", help="embed a duality question into a meet-family question")
    p.add_argument("file", help=".imp input with singleton premises")
    p.add_argument("--plus", required=True)
    p.add_argument("--minus", required=True)
    p.add_argument("--meets", help="known meet family of the base (.mf); brute-forced otherwise")
    p.add_argument("--out-base", required=True, help="output .imp path")
    p.add_argument("--out-meets", required=True, help="output .mf path")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("roundtrip", help="check ccm then sid reproduces the critical base")
    p.add_argument("file", help=".imp input")
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("oracle", help="brute-force references, for debugging")
    p.add_argument(
        "oracle_command",
        choices=[
            "closed-sets",
            "meets",
            "joins",
            "mingens",
            "transversals",
            "partition",
            "gen-ranked",
            "gen-acyclic",
            "gen-hypergraph",
        ],
    )
    p.add_argument("file", nargs="?", help="input file where applicable")
    p.add_argument("--target", help="target element label for mingens")
    p.add_argument("--seed", type=int, default=0, help="seed for the generators")
    p.add_argument("--max-elements", type=int, default=8)
    p.add_argument("--max-implications", type=int, default=16)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 3
    except NotRankedError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        if exc.conflict is not None:
            print(exc.conflict.describe(), file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 2
    except GeodualError as exc:  # pragma: no cover - catch-all for new subtypes
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
