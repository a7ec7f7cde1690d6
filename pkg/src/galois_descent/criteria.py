"""Checkers for the two-Galois-point criteria and their descent to X/H.

Outer configuration (G1, G2, Q):
  (a) X/G1 and X/G2 are rational, (b) G1 & G2 = {1},
  (c) sum_{G1} s(Q) = sum_{G2} t(Q).
Descent by H:
  (d) G_i not inside H, G_i H a group, H normal in G_i H (i = 1, 2),
  (e) G1H & G2H = H, (f) sum_{G1H} s(Q) = sum_{G2H} t(Q).
Inner configuration (G1, G2, P1, P2) adds (g) H.P1 != H.P2 and shifts the
divisor identities by P1, P2 (see :func:`check_inner`).

Condition (a) is recomputed only where a quotient-genus routine exists (the
diagonal Fermat groups); elsewhere it carries the status ``asserted``.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from functools import cached_property

from . import fermat, takahashi
from .curves import CONIC, CurveId, takahashi_curve
from .divisor import Action, Divisor, orbit, orbit_sum
from .group import (
    Group,
    GroupError,
    intersection,
    is_group,
    normality_witness,
    not_closed_witness,
    set_product,
)

HOLDS = "holds"
FAILS = "fails"
ASSERTED = "asserted"
NOT_EVALUATED = "not-evaluated"


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: object = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status in (HOLDS, ASSERTED)

    def to_json(self):
        out = {"status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class ConditionReport:
    verdicts: dict[str, Verdict]
    required: tuple[str, ...]

    @property
    def overall(self) -> bool:
        return all(self.verdicts[c].ok for c in self.required)

    def __getitem__(self, label: str) -> Verdict:
        return self.verdicts[label]

    def status(self, label: str) -> str:
        return self.verdicts[label].status

    def failed(self) -> list[str]:
        return [c for c in self.required if not self.verdicts[c].ok]

    def to_json(self) -> dict:
        return {c: self.verdicts[c].to_json() for c in sorted(self.verdicts)}


@dataclass
class Scenario:
    """A curve with two Galois groups and the base point(s) they are checked on."""

    family: str
    param: int | None
    g1: Group
    g2: Group
    act: Action
    points: tuple
    base: object = None
    inner_points: tuple | None = None
    ambient_factory: Callable[[], Group] | None = None
    assumed: frozenset = frozenset()
    quotient_genus: Callable[[Group], int] | None = None
    identify: Callable[[Group], CurveId] | None = None
    predict: Callable[[], list[tuple[int, Group, CurveId]]] | None = None
    format_point: Callable = str
    notes: tuple[str, ...] = ()
    labels: tuple[str, str] = ("G1", "G2")
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.g1 == self.g2:
            raise ValueError("G1 and G2 must be different subgroups")
        if self.g1.law is not self.g2.law:
            raise ValueError("G1 and G2 use different group laws")
        if self.base is None and self.inner_points is None:
            raise ValueError("scenario needs an outer base point or an inner pair")

    @property
    def law(self):
        return self.g1.law

    @property
    def name(self) -> str:
        return self.family if self.param is None else f"{self.family}({self.param})"

    @cached_property
    def ambient(self) -> Group:
        if self.ambient_factory is None:
            raise GroupError(f"scenario {self.name} has no ambient group")
        g = self.ambient_factory()
        if not (self.g1 <= g and self.g2 <= g):
            raise GroupError("G1, G2 must lie in the ambient group")
        return g

    @cached_property
    def base_report(self) -> ConditionReport:
        return check_outer_base(self)

    def swapped(self) -> Scenario:
        """The same configuration with the roles of G1 and G2 exchanged."""
        return Scenario(
            family=self.family,
            param=self.param,
            g1=self.g2,
            g2=self.g1,
            act=self.act,
            points=self.points,
            base=self.base,
            inner_points=self.inner_points[::-1] if self.inner_points else None,
            ambient_factory=self.ambient_factory,
            assumed=self.assumed,
            quotient_genus=self.quotient_genus,
            identify=self.identify,
            predict=self.predict,
            format_point=self.format_point,
            notes=self.notes,
            labels=self.labels[::-1],
            extra=self.extra,
        )

    def describe(self) -> dict:
        fmt = self.law.format
        out = {
            "family": self.family,
            "param": self.param,
            "G1": {"label": self.labels[0], "order": self.g1.order, "generators": [fmt(g) for g in self.g1.generators]},
            "G2": {"label": self.labels[1], "order": self.g2.order, "generators": [fmt(g) for g in self.g2.generators]},
            "assumed": sorted(self.assumed),
            "notes": list(self.notes),
        }
        if self.base is not None:
            out["base_point"] = self.format_point(self.base)
        if self.inner_points is not None:
            out["inner_points"] = [self.format_point(p) for p in self.inner_points]
        return out


# -- scenario factories -------------------------------------------------------

CHAR_ZERO_NOTE = "characteristic 0: the p-divisibility hypotheses hold vacuously"


def fermat_scenario(d: int, eta: int = 1) -> Scenario:
    """(G1^d, G2^d, Q^d) on F_d with Q^d = (zeta_{2d}^eta : 1 : 0)."""
    if d < 3:
        raise ValueError("Fermat scenarios need d >= 3")

    def predict():
        return [(l, fermat.k_subgroup(d, l), fermat.fermat_curve(d // l)) for l in fermat.divisors(d) if 1 < l < d]

    return Scenario(
        family="fermat",
        param=d,
        g1=fermat.galois_group_1(d),
        g2=fermat.galois_group_2(d),
        act=fermat.act,
        points=fermat.special_points(d),
        base=fermat.base_point(d, eta),
        ambient_factory=lambda: fermat.full_aut(d),
        quotient_genus=lambda h: fermat.quotient_genus_diagonal(d, h),
        identify=lambda h: fermat.identify_quotient(d, h),
        predict=predict,
        format_point=fermat.format_point,
        notes=(CHAR_ZERO_NOTE,),
    )


def _takahashi_predict(m: int):
    def predict():
        return [(l, takahashi.k_subgroup(m, l), CONIC if l == m else takahashi_curve(m // l))
                for l in fermat.divisors(m) if 1 < l <= m]

    return predict


_G2_NOTE = "G2 realized as the y-scalings fixing x (the projection from (0:1:0))"


def takahashi_a_scenario(m: int, eta: int = 1) -> Scenario:
    """(G1^m, G2^m, Q^m) on T_m with Q^m = (zeta_{4m}^eta : 1 : 0)."""
    if m < 3:
        raise ValueError("Takahashi scenarios need m >= 3")
    return Scenario(
        family="takahashi-a",
        param=m,
        g1=takahashi.g1(m),
        g2=takahashi.g2(m),
        act=takahashi.act_a,
        points=takahashi.points_a(m),
        base=takahashi.base_point_a(m, eta),
        ambient_factory=lambda: takahashi.full_aut(m),
        assumed=frozenset({"a"}),
        identify=lambda h: takahashi.identify_quotient(m, h),
        predict=_takahashi_predict(m),
        format_point=takahashi.format_point,
        notes=(CHAR_ZERO_NOTE, _G2_NOTE),
    )


def takahashi_b_scenario(m: int, val: int = 2) -> Scenario:
    """(G1^m, G3^m, R^m) on T_m with R^m = (zeta_{4m}^val, 0), val = 2 mod 4."""
    if m < 3:
        raise ValueError("Takahashi scenarios need m >= 3")
    return Scenario(
        family="takahashi-b",
        param=m,
        g1=takahashi.g1(m),
        g2=takahashi.g3(m),
        act=takahashi.act_b,
        points=takahashi.points_b(m),
        base=takahashi.base_point_b(m, val),
        ambient_factory=lambda: takahashi.full_aut(m),
        assumed=frozenset({"a"}),
        identify=lambda h: takahashi.identify_quotient(m, h),
        predict=_takahashi_predict(m),
        format_point=takahashi.format_point,
        notes=(CHAR_ZERO_NOTE, "mu fixed as zeta_{4m}"),
        labels=("G1", "G3"),
    )


# -- checkers -----------------------------------------------------------------


def _condition_a(groups, genus, assumed) -> Verdict:
    if genus is not None:
        try:
            genera = [genus(g) for g in groups]
        except ValueError:
            genera = None
        if genera is not None:
            bad = [(k + 1, gq) for k, gq in enumerate(genera) if gq != 0]
            if bad:
                return Verdict(FAILS, {"group": bad[0][0], "quotient_genus": bad[0][1]})
            return Verdict(HOLDS, note="quotient genera computed by Riemann-Hurwitz")
    if "a" in assumed:
        return Verdict(ASSERTED, note="rationality of X/G_i taken as a hypothesis")
    return Verdict(NOT_EVALUATED)


def _trivial_intersection(g1: Group, g2: Group) -> Verdict:
    common = intersection(g1, g2)
    if common.is_trivial():
        return Verdict(HOLDS)
    extra = min((x for x in common.elements if x != g1.law.identity), key=g1.law.key)
    return Verdict(FAILS, {"element": g1.law.format(extra)})


def _divisor_verdict(lhs: Divisor, rhs: Divisor, fmt) -> Verdict:
    diff = lhs.first_difference(rhs)
    if diff is None:
        return Verdict(HOLDS)
    p, a, b = diff
    return Verdict(FAILS, {"point": fmt(p), "lhs": a, "rhs": b, "lhs_degree": lhs.degree(), "rhs_degree": rhs.degree()})


def check_outer_base(s: Scenario) -> ConditionReport:
    """Conditions (a), (b), (c) for the triple (G1, G2, Q)."""
    if s.base is None:
        raise ValueError("scenario has no outer base point")
    verdicts = {
        "a": _condition_a((s.g1, s.g2), s.quotient_genus, s.assumed),
        "b": _trivial_intersection(s.g1, s.g2),
        "c": _divisor_verdict(
            orbit_sum(s.g1.elements, s.base, s.act),
            orbit_sum(s.g2.elements, s.base, s.act),
            s.format_point,
        ),
    }
    return ConditionReport(verdicts, ("a", "b", "c"))


def _condition_d(g1: Group, g2: Group, h: Group):
    """Verdict for (d) and the two set products G1H, G2H."""
    law = h.law
    fmt = law.format
    products = []
    witness = None
    for i, gi in ((1, g1), (2, g2)):
        prod = set_product(gi, h)
        products.append(prod)
        if witness is not None:
            continue
        if gi <= h:
            witness = {"i": i, "reason": f"G{i} is contained in H"}
        elif not is_group(law, prod):
            a, b = not_closed_witness(law, prod)
            witness = {"i": i, "reason": f"G{i}H is not a group", "a": fmt(a), "b": fmt(b)}
        else:
            bad = normality_witness(h, Group(law, prod))
            if bad is not None:
                x, y = bad
                witness = {"i": i, "reason": f"H is not normal in G{i}H", "g": fmt(x), "h": fmt(y)}
    verdict = Verdict(HOLDS) if witness is None else Verdict(FAILS, witness)
    return verdict, products


def _condition_e(prod1: frozenset, prod2: frozenset, h: Group) -> Verdict:
    extra = (prod1 & prod2) - h.elements
    if not extra:
        return Verdict(HOLDS)
    x = min(extra, key=h.law.key)
    return Verdict(FAILS, {"element": h.law.format(x), "intersection_order": len(prod1 & prod2), "h_order": h.order})


def check_descent(s: Scenario, h: Group) -> ConditionReport:
    """Conditions (d), (e), (f) for the 4-tuple (G1, G2, Q, H)."""
    if not s.base_report.overall:
        raise ValueError(f"(a)(b)(c) fail for {s.name}: {s.base_report.failed()}")
    if h.law is not s.law:
        raise GroupError("H uses a different group law")
    verdict_d, (prod1, prod2) = _condition_d(s.g1, s.g2, h)
    verdicts = {
        "d": verdict_d,
        "e": _condition_e(prod1, prod2, h),
        "f": _divisor_verdict(
            orbit_sum(prod1, s.base, s.act),
            orbit_sum(prod2, s.base, s.act),
            s.format_point,
        ),
    }
    return ConditionReport(verdicts, ("d", "e", "f"))


def check_inner(
    g1: Group,
    g2: Group,
    h: Group,
    p1,
    p2,
    act: Action,
    *,
    format_point: Callable = str,
    quotient_genus: Callable[[Group], int] | None = None,
    assumed=frozenset({"a"}),
) -> ConditionReport:
    """Conditions (a)-(g) for the 5-tuple (G1, G2, H, P1, P2) of inner points.

    (c) P1 + sum_{G1} s(P2) = P2 + sum_{G2} t(P1)
    (f) sum_H h(P1) + sum_{G1H} s(P2) = sum_H h(P2) + sum_{G2H} t(P1)
    (g) H.P1 != H.P2
    """
    if p1 == p2:
        raise ValueError("P1 and P2 must be different points")
    if g1 == g2:
        raise ValueError("G1 and G2 must be different subgroups")
    verdict_d, (prod1, prod2) = _condition_d(g1, g2, h)
    hp1 = orbit(h, p1, act)
    hp2 = orbit(h, p2, act)
    if hp1 != hp2:
        verdict_g = Verdict(HOLDS)
    else:
        verdict_g = Verdict(FAILS, {"orbit": [format_point(p) for p in hp1]})
    verdicts = {
        "a": _condition_a((g1, g2), quotient_genus, assumed),
        "b": _trivial_intersection(g1, g2),
        "c": _divisor_verdict(
            Divisor.point(p1) + orbit_sum(g1.elements, p2, act),
            Divisor.point(p2) + orbit_sum(g2.elements, p1, act),
            format_point,
        ),
        "d": verdict_d,
        "e": _condition_e(prod1, prod2, h),
        "f": _divisor_verdict(
            orbit_sum(h.elements, p1, act) + orbit_sum(prod1, p2, act),
            orbit_sum(h.elements, p2, act) + orbit_sum(prod2, p1, act),
            format_point,
        ),
        "g": verdict_g,
    }
    return ConditionReport(verdicts, ("a", "b", "c", "d", "e", "f", "g"))


def check_inner_scenario(s: Scenario, h: Group) -> ConditionReport:
    if s.inner_points is None:
        raise ValueError("scenario has no inner points")
    p1, p2 = s.inner_points
    return check_inner(
        s.g1, s.g2, h, p1, p2, s.act,
        format_point=s.format_point, quotient_genus=s.quotient_genus, assumed=s.assumed,
    )
