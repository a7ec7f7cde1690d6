"""Exhaustive descendant search over the subgroup lattice of Aut(X)."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .criteria import (
    ConditionReport,
    Scenario,
    check_descent,
    fermat_scenario,
    takahashi_a_scenario,
    takahashi_b_scenario,
)
from .curves import CONIC, CurveId, takahashi_curve
from .group import DEFAULT_ENUMERATION_BOUND, Group, enumerate_subgroups
from . import fermat, takahashi

log = logging.getLogger(__name__)


@dataclass
class SubgroupResult:
    group: Group
    report: ConditionReport
    quotient: CurveId

    @property
    def descendant(self) -> bool:
        return self.report.overall

    @property
    def generator_strings(self) -> list[str]:
        fmt = self.group.law.format
        return [fmt(g) for g in self.group.generators]


def _sort_key(r: SubgroupResult):
    return (r.group.order, ";".join(r.generator_strings))


def survey(s: Scenario, bound: int = DEFAULT_ENUMERATION_BOUND, subgroups=None) -> list[SubgroupResult]:
    """Run check_descent on every nontrivial subgroup of the ambient group."""
    if subgroups is None:
        subgroups = enumerate_subgroups(s.ambient, bound=bound)
    out = []
    for h in subgroups:
        if h.is_trivial():
            continue
        report = check_descent(s, h)
        out.append(SubgroupResult(h, report, s.identify(h) if s.identify else CurveId("unknown")))
    out.sort(key=_sort_key)
    log.info("%s: %d nontrivial subgroups checked, %d descendants",
             s.name, len(out), sum(r.descendant for r in out))
    return out


def classify_descendants(s: Scenario, bound: int = DEFAULT_ENUMERATION_BOUND, subgroups=None) -> list[SubgroupResult]:
    """All H != {1} with (d), (e), (f), sorted by order then generator string."""
    return [r for r in survey(s, bound, subgroups) if r.descendant]


def prediction(s: Scenario) -> dict[frozenset, CurveId]:
    """Closed-form descendant kernels, keyed by element set."""
    if s.predict is None:
        raise ValueError(f"no closed-form prediction for {s.name}")
    return {h.elements: curve for _, h, curve in s.predict()}


def theorem_match(s: Scenario, descendants: list[SubgroupResult]) -> bool:
    found = {r.group.elements: r.quotient for r in descendants}
    return found == prediction(s)


def is_minimal(s: Scenario, bound: int = DEFAULT_ENUMERATION_BOUND) -> bool:
    return not classify_descendants(s, bound)


def has_conic_only(s: Scenario, bound: int = DEFAULT_ENUMERATION_BOUND) -> bool:
    return all(r.quotient == CONIC for r in classify_descendants(s, bound))


@dataclass
class AncestorWitness:
    ancestor: Scenario
    kernel: Group
    report: ConditionReport
    quotient: CurveId
    target: CurveId

    @property
    def verified(self) -> bool:
        return self.report.overall and self.quotient == self.target

    def to_json(self) -> dict:
        return {
            "ancestor": self.ancestor.describe(),
            "kernel": "K_2",
            "kernel_order": self.kernel.order,
            "conditions": self.report.to_json(),
            "quotient": self.quotient.label,
            "target": self.target.label,
            "verified": self.verified,
        }


def ancestor_witness(family: str, param: int, model: str = "a") -> AncestorWitness:
    """The in-family ancestor showing X is not maximal: F_{2d} or T_{2m} with H = K_2."""
    if family == "fermat":
        anc = fermat_scenario(2 * param)
        kernel = fermat.k_subgroup(2 * param, 2)
        target = fermat.fermat_curve(param)
    elif family == "takahashi":
        factory = takahashi_a_scenario if model == "a" else takahashi_b_scenario
        anc = factory(2 * param)
        kernel = takahashi.k_subgroup(2 * param, 2)
        target = takahashi_curve(param)
    else:
        raise ValueError(f"unknown family {family!r}")
    report = check_descent(anc, kernel)
    return AncestorWitness(anc, kernel, report, anc.identify(kernel), target)
