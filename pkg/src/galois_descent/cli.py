"""Command-line driver.

Exit codes:
  0  success (classify: theorem matched; check: H gives a descendant)
  1  check: H does not give a descendant; ancestor: witness not verified
  2  usage or parse error
  3  classify: computed descendants differ from the closed-form prediction
  4  enumeration or closure bound exceeded
"""

from __future__ import annotations

import argparse
import logging
import os
import re
import sys

from . import fermat, takahashi
from .classify import ancestor_witness, survey
from .criteria import (
    Scenario,
    check_descent,
    check_inner_scenario,
    fermat_scenario,
    takahashi_a_scenario,
    takahashi_b_scenario,
)
from .custom import load_scenario_file
from .group import DEFAULT_ENUMERATION_BOUND, BoundExceeded, Group, GroupError, closure, enumerate_subgroups
from . import report as rep

log = logging.getLogger("galois_descent")

BOUND_ENV = "GALOIS_DESCENT_BOUND"
_K_RE = re.compile(r"^K_(\d+)$")


class UsageError(Exception):
    pass


def default_bound() -> int:
    raw = os.environ.get(BOUND_ENV)
    if raw is None:
        return DEFAULT_ENUMERATION_BOUND
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{BOUND_ENV}={raw!r} is not an integer") from None


def _param(args) -> int:
    value = args.d if args.family == "fermat" else args.m
    if value is None:
        other = args.m if args.family == "fermat" else args.d
        if other is None:
            raise UsageError(f"--{'d' if args.family == 'fermat' else 'm'} is required")
        value = other
    return value


def build_scenario(args) -> Scenario:
    n = _param(args)
    if args.family == "fermat":
        if n < 4:
            raise UsageError(f"Fermat classification needs d >= 4 (got d = {n})")
        return fermat_scenario(n)
    if n < 3:
        raise UsageError(f"Takahashi classification needs m >= 3 (got m = {n})")
    return takahashi_a_scenario(n) if args.model == "a" else takahashi_b_scenario(n)


def parse_subgroup(args, spec: str) -> Group:
    """Named subgroup (K_l, G1, G2, G3, aut) or whitespace-separated generators."""
    n = _param(args)
    fam = fermat if args.family == "fermat" else takahashi
    named = {
        "G1": lambda: fermat.galois_group_1(n) if fam is fermat else takahashi.g1(n),
        "G2": lambda: fermat.galois_group_2(n) if fam is fermat else takahashi.g2(n),
        "aut": lambda: fam.full_aut(n),
    }
    if fam is takahashi:
        named["G3"] = lambda: takahashi.g3(n)
    spec = spec.strip()
    if spec in named:
        return named[spec]()
    m = _K_RE.match(spec)
    try:
        if m:
            return fam.k_subgroup(n, int(m.group(1)))
        law = fam.law(n)
        gens = [law.parse(tok) for tok in spec.split()]
    except (ValueError, GroupError) as exc:
        raise UsageError(str(exc)) from None
    if not gens:
        raise UsageError("empty subgroup specification")
    return closure(gens, law, bound=args.bound)


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_classify(args) -> int:
    s = build_scenario(args)
    if s.ambient.order > args.bound:
        raise BoundExceeded(f"|Aut| = {s.ambient.order} exceeds enumeration bound {args.bound}")
    subgroups = enumerate_subgroups(s.ambient, bound=args.bound)
    results = survey(s, subgroups=subgroups)
    trivial = check_descent(s, Group.trivial(s.law))
    data = rep.classification_report(s, results, trivial, len(subgroups))
    if args.format == "json":
        text = rep.dumps_json(data)
    elif args.format == "csv":
        text = rep.classification_csv(data)
    else:
        text = rep.classification_markdown(data)
    _emit(args, text)
    return 0 if data["theorem_match"] else 3


def cmd_check(args) -> int:
    if args.scenario_file:
        try:
            s, h = load_scenario_file(args.scenario_file)
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"cannot load scenario file: {exc}") from None
        report = check_inner_scenario(s, h) if s.inner_points is not None else check_descent(s, h)
        label, quotient = "file", "unknown"
    else:
        if not args.subgroup:
            raise UsageError("check needs --subgroup or --scenario-file")
        s = build_scenario(args)
        h = parse_subgroup(args, args.subgroup)
        report = check_descent(s, h)
        label, quotient = args.subgroup, s.identify(h).label
    data = rep.check_report(s, h, report, quotient, label)
    if args.format == "json":
        text = rep.dumps_json(data)
    elif args.format == "csv":
        text = rep.check_csv(data)
    else:
        text = rep.check_markdown(data)
    _emit(args, text)
    return 0 if report.overall else 1


def cmd_genus(args) -> int:
    args.family = "fermat"
    d = _param(args)
    if d < 1:
        raise UsageError("d must be positive")
    h = parse_subgroup(args, args.subgroup)
    try:
        g = fermat.quotient_genus_diagonal(d, h)
    except ValueError as exc:
        raise UsageError(f"{exc}; genus is computed only for diagonal subgroups") from None
    if args.format == "json":
        _emit(args, rep.dumps_json({"d": d, "subgroup": args.subgroup, "order": h.order, "genus": g}))
    else:
        _emit(args, f"{g}\n")
    return 0


def cmd_ancestor(args) -> int:
    n = _param(args)
    w = ancestor_witness(args.family, n, args.model)
    data = w.to_json()
    if args.format == "json":
        _emit(args, rep.dumps_json(data))
    else:
        anc = data["ancestor"]
        status = "verified" if w.verified else "NOT verified"
        _emit(args, f"{anc['family']}({anc['param']}) with K_2 -> {data['quotient']} "
                    f"(target {data['target']}): {status}\n")
    return 0 if w.verified else 1


def cmd_dump_group(args) -> int:
    n = _param(args)
    if args.family == "fermat" and n < 4 and args.group == "aut":
        raise UsageError("Aut(F_d) is modelled for d >= 4")
    if args.family == "takahashi" and n < 3:
        raise UsageError("Takahashi groups are modelled for m >= 3")
    g = parse_subgroup(args, args.group)
    _emit(args, rep.dumps_json(g.to_json()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="galois-descent", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, family=True, fmt=("json", "csv", "md")):
        if family:
            p.add_argument("--family", choices=["fermat", "takahashi"], default="fermat")
            p.add_argument("--model", choices=["a", "b"], default="a", type=str.lower)
        p.add_argument("--d", type=int)
        p.add_argument("--m", type=int)
        p.add_argument("--format", choices=fmt, default="json")
        p.add_argument("--output", "-o")
        p.add_argument("--bound", type=int, default=None)

    p = sub.add_parser("classify", help="classify all descendants")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check", help="check conditions for one subgroup")
    common(p)
    p.add_argument("--subgroup")
    p.add_argument("--scenario-file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("genus", help="Riemann-Hurwitz genus of F_d/H for diagonal H")
    common(p, family=False, fmt=("text", "json"))
    p.add_argument("--subgroup", required=True)
    p.set_defaults(func=cmd_genus, format="text")

    p = sub.add_parser("ancestor", help="verify the in-family ancestor witness")
    common(p, fmt=("text", "json"))
    p.set_defaults(func=cmd_ancestor, format="text")

    p = sub.add_parser("dump-group", help="serialize a named group")
    common(p, fmt=("json",))
    p.add_argument("--group", default="aut")
    p.set_defaults(func=cmd_dump_group)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.bound is None:
            args.bound = default_bound()
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
