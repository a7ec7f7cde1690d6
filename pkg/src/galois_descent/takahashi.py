"""Takahashi's curve T_m, the smooth model of X^{2m} + X^m Z^m + Y^{2m} = 0.

In the affine chart Z = 1 the curve is x^{2m} + x^m + y^{2m} = 0.  Its
automorphisms are the maps

    (x, y) -> (c x^e y^{1-e}, u y),   e = +-1, c^m = 1, u^{2m} = 1,

4m^2 in all.  Scalars are stored as exponents over the scenario modulus 4m.
The product ``a * b`` is composition: apply b first, then a.

Two finite point sets carry every orbit the descent checks need:

* model A: the 2m points (eta : 1 : 0) at infinity, eta^{2m} = -1;
* model B: the m affine points (a, 0) with a^m = -1, plus the m points of
  the smooth model over the singular origin, one per branch x = z y^2 + ...
  with z^m = -1.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import NamedTuple

from .curves import CONIC, UNKNOWN, CurveId, takahashi_curve
from .fermat import divisors
from .group import Group, GroupError, GroupLaw, closure
from .roots import UnityExp, parse_unity


class TakAut(NamedTuple):
    m: int
    e: int  # +1 or -1
    c: int  # exponent over 4m
    u: int  # exponent over 4m

    @property
    def c_root(self) -> UnityExp:
        return UnityExp(4 * self.m, self.c)

    @property
    def u_root(self) -> UnityExp:
        return UnityExp(4 * self.m, self.u)


class TakPointA(NamedTuple):
    m: int
    eta: int  # odd exponent over 4m


class TakPointB(NamedTuple):
    m: int
    kind: str  # "aff" for (a, 0), "br" for the branch x ~ z y^2
    val: int  # exponent over 4m, = 2 mod 4


def is_member(m: int, e: int, c: int, u: int) -> bool:
    """Whether (e, c, u) preserves the curve: c^m = 1 and u^{2m} = 1 (exponents over 4m)."""
    n = 4 * m
    return e in (1, -1) and (c * m) % n == 0 and (u * 2 * m) % n == 0


class TakahashiLaw(GroupLaw):
    def __init__(self, m: int):
        if m < 1:
            raise ValueError("m must be positive")
        self.m = m
        self.n = 4 * m
        self.name = f"takahashi({m})"
        self.identity = TakAut(m, 1, 0, 0)
        self.mul = lru_cache(maxsize=None)(self._mul)

    def _mul(self, a: TakAut, b: TakAut) -> TakAut:
        # a(b(x, y)): c'' = c_a c_b^{e_a} u_b^{1 - e_a}
        n = self.n
        return TakAut(
            self.m,
            a.e * b.e,
            (a.c + a.e * b.c + (1 - a.e) * b.u) % n,
            (a.u + b.u) % n,
        )

    def inv(self, a: TakAut) -> TakAut:
        n = self.n
        if a.e == 1:
            return TakAut(self.m, 1, -a.c % n, -a.u % n)
        return TakAut(self.m, -1, (a.c - 2 * a.u) % n, -a.u % n)

    def key(self, a: TakAut):
        return (-a.e, a.c, a.u)

    def format(self, a: TakAut) -> str:
        return format_aut(a)

    def parse(self, text: str) -> TakAut:
        return parse_aut(self.m, text)


@lru_cache(maxsize=None)
def law(m: int) -> TakahashiLaw:
    return TakahashiLaw(m)


def aut(m: int, e: int, c: int, u: int) -> TakAut:
    """Validated constructor; c and u are exponents over 4m."""
    n = 4 * m
    c, u = c % n, u % n
    if not is_member(m, e, c, u):
        raise ValueError(f"(e={e}, c=zeta({n})^{c}, u=zeta({n})^{u}) does not preserve T_{m}")
    return TakAut(m, e, c, u)


def sigma(m: int) -> TakAut:
    """(x, y) -> (zeta_m x, y)."""
    return aut(m, 1, 4, 0)


def tau(m: int) -> TakAut:
    """(x, y) -> (y^2 / x, y)."""
    return aut(m, -1, 0, 0)


def y_scaling(m: int) -> TakAut:
    """(x, y) -> (x, zeta_{2m} y)."""
    return aut(m, 1, 0, 2)


def mu(m: int) -> UnityExp:
    """The fixed solution zeta_{4m} of mu^{2m} = -1."""
    return UnityExp(4 * m, 1)


def sigma_prime(m: int) -> TakAut:
    """(x, y) -> (zeta_m x, zeta_m y)."""
    return aut(m, 1, 4, 4)


def tau_prime(m: int) -> TakAut:
    """(x, y) -> (y^2 / x, y / mu^2)."""
    return aut(m, -1, 0, -2 * mu(m).exponent)


def act_a(g: TakAut, p: TakPointA) -> TakPointA:
    """Action on the points at infinity: eta -> (c/u) eta^e."""
    n = 4 * g.m
    eta = (g.c - g.u + g.e * p.eta) % n
    if eta % 2 == 0:
        raise GroupError(f"{format_aut(g)} moves a point off T_{g.m} at infinity")
    return TakPointA(g.m, eta)


def act_b(g: TakAut, p: TakPointB) -> TakPointB:
    """Action on the points over y = 0.

    e = +1: (a, 0) -> (c a, 0), branch z -> c z / u^2.
    e = -1: (a, 0) -> branch c / (a u^2), branch z -> (c / z, 0).
    """
    n = 4 * g.m
    if g.e == 1:
        if p.kind == "aff":
            out = TakPointB(g.m, "aff", (g.c + p.val) % n)
        else:
            out = TakPointB(g.m, "br", (g.c + p.val - 2 * g.u) % n)
    else:
        if p.kind == "aff":
            out = TakPointB(g.m, "br", (g.c - p.val - 2 * g.u) % n)
        else:
            out = TakPointB(g.m, "aff", (g.c - p.val) % n)
    if out.val % 4 != 2:
        raise GroupError(f"{format_aut(g)} moves a point off T_{g.m} over y = 0")
    return out


def points_a(m: int) -> tuple[TakPointA, ...]:
    return tuple(TakPointA(m, k) for k in range(1, 4 * m, 2))


def points_b(m: int) -> tuple[TakPointB, ...]:
    vals = range(2, 4 * m, 4)
    return tuple(TakPointB(m, "aff", v) for v in vals) + tuple(TakPointB(m, "br", v) for v in vals)


def base_point_a(m: int, eta: int = 1) -> TakPointA:
    """Q^m = (zeta_{4m}^eta : 1 : 0)."""
    if eta % 2 == 0:
        raise ValueError("eta exponent must be odd")
    return TakPointA(m, eta % (4 * m))


def base_point_b(m: int, val: int = 2) -> TakPointB:
    """R^m = (zeta_{2m}, 0) by default."""
    if val % 4 != 2:
        raise ValueError("need a^m = -1")
    return TakPointB(m, "aff", val % (4 * m))


def g1(m: int) -> Group:
    """Galois group at (1:0:0), dihedral of order 2m."""
    return closure([sigma(m), tau(m)], law(m))


def g2(m: int) -> Group:
    """Galois group at (0:1:0): the y-scalings fixing x, cyclic of order 2m."""
    return closure([y_scaling(m)], law(m))


def g3(m: int) -> Group:
    """<sigma', tau'>, cyclic of order 2m."""
    return closure([sigma_prime(m), tau_prime(m)], law(m))


def full_aut(m: int, bound: int = 100_000) -> Group:
    """Aut(T_m) = G1 G2, order 4m^2."""
    if m < 3:
        raise ValueError("Aut(T_m) = G1 G2 needs m >= 3")
    g = closure([sigma(m), tau(m), y_scaling(m)], law(m), bound=bound)
    if g.order != 4 * m * m:
        raise AssertionError(f"|Aut(T_{m})| = {g.order}, expected {4 * m * m}")
    return g


def all_members(m: int) -> list[TakAut]:
    n = 4 * m
    return [TakAut(m, e, c, u) for e in (1, -1) for c in range(0, n, 4) for u in range(0, n, 2)]


def k_subgroup(m: int, l: int) -> Group:
    """K_l = {(x, y) -> (zeta_l^i x, zeta_l^j y)}, order l^2; needs l | m."""
    if l < 1 or m % l:
        raise GroupError(f"l = {l} does not divide m = {m}")
    step = 4 * m // l
    return Group(law(m), (TakAut(m, 1, i * step, j * step) for i in range(l) for j in range(l)))


def identify_quotient(m: int, h: Group) -> CurveId:
    """T_m/K_l = T_{m/l} for l < m, T_m/K_m is a conic, anything else unknown."""
    for l in divisors(m):
        if l * l == h.order and h == k_subgroup(m, l):
            return CONIC if l == m else takahashi_curve(m // l)
    return UNKNOWN


_AUT_RE = re.compile(r"^\s*e\s*:\s*([+-]?1)\s*;\s*c\s*:\s*(\S+?)\s*;\s*u\s*:\s*(\S+?)\s*$")
_POINT_RE = re.compile(r"^\s*(inf|aff|br)\s*:\s*(\S+)\s*$")


def format_aut(a: TakAut) -> str:
    n = 4 * a.m
    sign = "+1" if a.e == 1 else "-1"
    return f"e:{sign};c:zeta({n})^{a.c};u:zeta({n})^{a.u}"


def parse_aut(m: int, text: str) -> TakAut:
    match = _AUT_RE.match(text)
    if not match:
        raise ValueError(f"cannot parse Takahashi automorphism {text!r}")
    n = 4 * m
    c = parse_unity(match.group(2)).exponent_in(n)
    u = parse_unity(match.group(3)).exponent_in(n)
    return aut(m, int(match.group(1)), c, u)


def format_point(p) -> str:
    n = 4 * p.m
    if isinstance(p, TakPointA):
        return f"inf:zeta({n})^{p.eta}"
    return f"{p.kind}:zeta({n})^{p.val}"


def parse_point(m: int, text: str):
    match = _POINT_RE.match(text)
    if not match:
        raise ValueError(f"cannot parse Takahashi point {text!r}")
    kind = match.group(1)
    k = parse_unity(match.group(2)).exponent_in(4 * m)
    if kind == "inf":
        if k % 2 == 0:
            raise ValueError(f"eta^{2 * m} != -1 for {text!r}")
        return TakPointA(m, k)
    if k % 4 != 2:
        raise ValueError(f"value^{m} != -1 for {text!r}")
    return TakPointB(m, kind, k)
