"""Command-line front end.

Subcommands: ``check-op``, ``verify``, ``represent``, ``census``,
``find-counterexample``.  Exit codes are stable across commands:

* 0 — pass / found
* 1 — fail / exhausted without a find
* 2 — usage or parse error
* 3 — resource guard exceeded
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from pathlib import Path
from typing import Iterator

from . import algebra, census as census_mod, laws, transform
from .errors import DomainError, ResourceGuardError
from .transform import NPlaceTransformation

PROPERTY_CHECKS = {
    "contractive": transform.is_contractive,
    "idempotent": transform.is_idempotent,
    "isotone": transform.is_isotone,
    "interior": transform.is_interior,
    "union-dist": transform.is_union_distributive,
    "intersection-dist": transform.is_intersection_distributive,
    "full-union": transform.is_full_union_distributive,
    "full-intersection": transform.is_full_intersection_distributive,
    "eq2": transform.satisfies_eq2,
    "eq6": transform.satisfies_eq6,
}

LAWS = ("T1", "T2", "C1", "C2", "T3", "P1", "P2", "C5", "C9", "T4")
CLAIMS = ("composition-not-closed", "eq8-fails", "distributive-gap")


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot parse {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise DomainError(f"{path}: expected a JSON object")
    return data


# ---------------------------------------------------------------------------
# check-op


def cmd_check_op(args: argparse.Namespace) -> int:
    f = NPlaceTransformation.from_json(_load_json(args.path))
    witnesses = [PROPERTY_CHECKS[prop](f) for prop in args.properties]
    if args.format == "json":
        print(json.dumps([w.to_json() for w in witnesses]))
    else:
        for w in witnesses:
            if w.passed:
                print(f"PASS {w.check}")
            else:
                detail = f" indices={list(w.indices)}"
                if w.coord is not None:
                    detail += f" coord={w.coord}"
                print(f"FAIL {w.check}{detail}")
    return 0 if all(w.passed for w in witnesses) else 1


# ---------------------------------------------------------------------------
# verify


def _sub_seeds(seed: int, count: int) -> Iterator[int]:
    rng = random.Random(seed)
    for _ in range(count):
        yield rng.getrandbits(64)


def _single_stream(args: argparse.Namespace) -> Iterator[NPlaceTransformation]:
    if args.exhaustive:
        yield from census_mod.all_transformations(args.m, args.n, args.budget)
    else:
        for s in _sub_seeds(args.seed, args.count):
            yield census_mod.random_transformation(args.m, args.n, s)


def _interior_tuples(args: argparse.Namespace, width: int) -> Iterator[tuple[NPlaceTransformation, ...]]:
    if args.exhaustive:
        ops = list(census_mod.all_interior(args.m, args.n))
        yield from itertools.product(ops, repeat=width)
    else:
        for s in _sub_seeds(args.seed, args.count):
            rng = random.Random(s)
            yield tuple(
                census_mod.random_interior(args.m, args.n, rng.getrandbits(64))
                for _ in range(width)
            )


def _p1_instances(args: argparse.Namespace):
    """(f, gs, hs) triples whose hypotheses make Proposition 1 applicable."""
    m, n = args.m, args.n
    if args.exhaustive:
        everything = list(census_mod.all_transformations(m, n, args.budget))
        contractive = [f for f in everything if transform.is_contractive(f).passed]
        isotone = [f for f in everything if transform.is_isotone(f).passed]
        # (a) and (c), plus (b) with equal inner tuples.
        for f in contractive + isotone:
            for gs in itertools.product(everything, repeat=n):
                yield f, list(gs), list(gs)
        # (b) with strictly comparable inner tuples.
        for f in isotone:
            for g in everything:
                for h in everything:
                    if transform.preceq(g, h):
                        yield f, [g] * n, [h] * n
    else:
        meets = bytes(census_mod.K.meet_table(m, n))
        for s in _sub_seeds(args.seed, args.count):
            rng = random.Random(s)
            f_contr = NPlaceTransformation(
                m, n, bytes(v & meets[i] for i, v in enumerate(
                    census_mod.random_transformation(m, n, rng.getrandbits(64)).table))
            )
            f_iso = census_mod.random_interior(m, n, rng.getrandbits(64))
            gs = [census_mod.random_transformation(m, n, rng.getrandbits(64)) for _ in range(n)]
            hs = [
                NPlaceTransformation(m, n, bytes(
                    a | b for a, b in zip(g.table, census_mod.random_transformation(
                        m, n, rng.getrandbits(64)).table))
                )
                for g in gs
            ]
            yield f_contr, gs, gs
            yield f_iso, gs, hs
            yield f_iso, [f_contr] * n, [f_contr] * n


def _verify_t4(args: argparse.Namespace):
    """Round-trip every labeled semilattice at the requested size and rank."""
    checked = failures = 0
    for sgrp in census_mod.all_semilattices(args.q, args.budget):
        alg = algebra.derive_from_semigroup(sgrp, args.n)
        checked += 1
        ok = (
            algebra.check_superassociative(alg).passed
            and all(w.passed for w in algebra.check_identities(alg))
            and algebra.check_eq13(alg).passed
            and algebra.verify_representation(algebra.represent(alg)).passed
        )
        if not ok:
            failures += 1
            print(json.dumps({"semigroup": sgrp.to_json()}))
    return checked, failures


def cmd_verify(args: argparse.Namespace) -> int:
    if not args.exhaustive and args.seed is None:
        raise DomainError("randomized mode requires an explicit --seed")
    checked = failures = 0

    def note(report: laws.LawReport) -> None:
        nonlocal checked, failures
        checked += 1
        if not report.passed:
            failures += 1
            print(json.dumps(report.to_json()))

    if args.law == "T4":
        checked, failures = _verify_t4(args)
    elif args.law in ("T1", "T2", "C1", "C2", "C5"):
        fn = {
            "T1": laws.verify_theorem1,
            "T2": laws.verify_theorem2,
            "C1": laws.verify_corollary1,
            "C2": laws.verify_corollary2,
            "C5": laws.verify_n1_corollaries,
        }[args.law]
        for f in _single_stream(args):
            note(fn(f))
    elif args.law == "T3":
        for tup in _interior_tuples(args, args.n + 1):
            note(laws.verify_theorem3(tup[0], list(tup[1:])))
    elif args.law in ("P2", "C9"):
        fn = laws.verify_prop2 if args.law == "P2" else laws.verify_n1_corollaries
        for f, g in _interior_tuples(args, 2):
            note(fn(f, g))
    elif args.law == "P1":
        for f, gs, hs in _p1_instances(args):
            note(laws.verify_prop1(f, gs, hs))
    print(f"{args.law}: checked {checked} instances, {failures} failures")
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------------------
# represent


def cmd_represent(args: argparse.Namespace) -> int:
    alg = algebra.MengerAlgebra.from_json(_load_json(args.path))
    w = algebra.check_superassociative(alg)
    if not w.passed:
        print(f"FAIL superassociativity at {list(w.indices)}")
        return 1
    for w in algebra.check_identities(alg):
        if not w.passed:
            print(f"FAIL {w.check} at {list(w.indices)}")
            return 1
    rep = algebra.represent(alg)
    payload = json.dumps(rep.to_json(), indent=2)
    if args.out:
        Path(args.out).write_text(payload + "\n")
    else:
        print(payload)
    report = algebra.verify_representation(rep)
    if not report.passed:
        print(json.dumps(report.to_json()))
        return 1
    print(f"representation verified for q={alg.q}, n={alg.n}")
    return 0


# ---------------------------------------------------------------------------
# census


def cmd_census(args: argparse.Namespace) -> int:
    if args.klass == "standard":
        records = census_mod.standard_census(args.budget)
    else:
        m_or_q = args.q if args.klass in ("semilattices", "menger-identities") else args.m
        if m_or_q is None:
            raise DomainError(f"census class {args.klass!r} needs --m or --q")
        if args.klass not in ("semilattices",) and args.n is None:
            raise DomainError(f"census class {args.klass!r} needs --n")
        records = [census_mod.census(args.klass, m_or_q, args.n, args.budget)]
    text = "".join(r.csv_line() + "\n" for r in records)
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text)
    if args.golden:
        golden = Path(args.golden).read_text()
        if golden != text:
            print("golden mismatch", file=sys.stderr)
            return 1
    return 0


# ---------------------------------------------------------------------------
# find-counterexample


def _write_instance(out_dir: str, name: str, payload: dict) -> None:
    Path(out_dir).mkdir(parents=True, exist_ok=True)
    path = Path(out_dir) / name
    path.write_text(json.dumps(payload, indent=2) + "\n")
    print(f"wrote {path}")


def cmd_find_counterexample(args: argparse.Namespace) -> int:
    m, n = args.m, args.n
    ops = list(census_mod.all_interior(m, n))
    if args.claim == "distributive-gap":
        for f in ops:
            if not transform.is_union_distributive(f).passed:
                _write_instance(args.out, "gap_f.json", f.to_json())
                return 0
        print("no counterexample in range")
        return 1
    for tup in itertools.product(ops, repeat=n + 1):
        f, gs = tup[0], list(tup[1:])
        if args.claim == "composition-not-closed":
            hit = not transform.is_interior(transform.superpose(f, gs)).passed
        else:  # eq8-fails
            hit = not transform.satisfies_eq8(f, gs).passed
        if hit:
            _write_instance(args.out, "cex_f.json", f.to_json())
            for i, g in enumerate(gs):
                _write_instance(args.out, f"cex_g{i + 1}.json", g.to_json())
            return 0
    print("no counterexample in range")
    return 1


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="menger", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-op", help="check properties of a transformation file")
    p.add_argument("path")
    p.add_argument("properties", nargs="+", choices=sorted(PROPERTY_CHECKS))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_check_op)

    p = sub.add_parser("verify", help="run a law verifier over a generator stream")
    p.add_argument("law", choices=LAWS)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--q", type=int)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--random", action="store_true")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("represent", help="build and verify the interior-operation model of an algebra")
    p.add_argument("path")
    p.add_argument("--out")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("census", help="count a generator class")
    p.add_argument("klass", metavar="class",
                   choices=("transformations", "interior", "kernel", "semilattices", "menger-identities", "standard"))
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("--golden")
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv",), default="csv")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("find-counterexample", help="search for the first falsifying instance of a claim")
    p.add_argument("claim", choices=CLAIMS)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--out", default=".")
    p.set_defaults(func=cmd_find_counterexample)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceGuardError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
