"""The Fermat curve X^d + Y^d + Z^d = 0 and its automorphism group K_d x| S_3.

An automorphism is the monomial matrix ``P_perm . diag(z^i, z^j, 1)`` with
``z = zeta_d``, acting on column vectors.  The permutation matrix sends basis
vector e_k to e_perm(k), so the coordinate in slot k moves to slot perm(k).
Permutations are named in cycle notation on slots: ``xy`` swaps X and Y,
``xyz`` moves X->Y->Z->X, i.e. (X:Y:Z) -> (Z:X:Y).

Special points are the 3d points of the curve on the coordinate lines.  On the
line where slot k vanishes the point has slot k+1 equal to eta and slot k+2
equal to 1 (indices mod 3), with eta^d = -1; eta is stored as an odd exponent
over the scenario modulus 2d.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import NamedTuple

from .curves import UNKNOWN, CurveId, fermat_curve, fermat_genus
from .group import Group, GroupError, GroupLaw, closure
from .roots import UnityExp, parse_unity

AXES = "XYZ"

PERMS: dict[str, tuple[int, int, int]] = {
    "id": (0, 1, 2),
    "xy": (1, 0, 2),
    "yz": (0, 2, 1),
    "zx": (2, 1, 0),
    "xyz": (1, 2, 0),
    "xzy": (2, 0, 1),
}
PERM_NAMES = {v: k for k, v in PERMS.items()}
_PERM_RANK = {name: r for r, name in enumerate(PERMS)}


def _compose(p, q):
    """Slot permutation p o q."""
    return (p[q[0]], p[q[1]], p[q[2]])


def _invert(p):
    out = [0, 0, 0]
    for k in range(3):
        out[p[k]] = k
    return tuple(out)


class FermatAut(NamedTuple):
    d: int
    i: int
    j: int
    perm: str = "id"

    @property
    def is_diagonal(self) -> bool:
        return self.perm == "id"

    def diagonal(self) -> tuple[UnityExp, UnityExp]:
        return UnityExp(self.d, self.i), UnityExp(self.d, self.j)


class FermatPoint(NamedTuple):
    d: int
    axis: int  # slot that vanishes, 0..2 for X, Y, Z
    eta: int  # odd exponent over 2d

    @property
    def eta_root(self) -> UnityExp:
        return UnityExp(2 * self.d, self.eta)

    def coordinates(self) -> tuple:
        """Homogeneous coordinates as exponents over 2d, ``None`` for zero."""
        v: list = [None, None, None]
        v[(self.axis + 1) % 3] = self.eta
        v[(self.axis + 2) % 3] = 0
        return tuple(v)


def point_from_coordinates(d: int, v) -> FermatPoint:
    zeros = [k for k in range(3) if v[k] is None]
    if len(zeros) != 1:
        raise ValueError(f"{v} is not on a coordinate line")
    k = zeros[0]
    eta = (v[(k + 1) % 3] - v[(k + 2) % 3]) % (2 * d)
    if eta % 2 == 0:
        raise ValueError(f"{v} is not on the Fermat curve of degree {d}")
    return FermatPoint(d, k, eta)


class FermatLaw(GroupLaw):
    """Composition of monomial automorphisms of F_d, normalized projectively."""

    def __init__(self, d: int):
        if d < 1:
            raise ValueError("degree must be positive")
        self.d = d
        self.name = f"fermat({d})"
        self.identity = FermatAut(d, 0, 0, "id")
        self.mul = lru_cache(maxsize=None)(self._mul)

    def _mul(self, a: FermatAut, b: FermatAut) -> FermatAut:
        # P1 D1 P2 D2 = (P1 P2)(P2^-1 D1 P2) D2, and (P^-1 D P)_k = D_perm(k)
        d = self.d
        pb = PERMS[b.perm]
        da = (a.i, a.j, 0)
        v = [da[pb[k]] for k in range(3)]
        v[0] += b.i
        v[1] += b.j
        return FermatAut(d, (v[0] - v[2]) % d, (v[1] - v[2]) % d, PERM_NAMES[_compose(PERMS[a.perm], pb)])

    def inv(self, a: FermatAut) -> FermatAut:
        # (P D)^-1 = P^-1 (P D^-1 P^-1), and (P D P^-1)_perm(k) = D_k
        d = self.d
        p = PERMS[a.perm]
        da = (a.i, a.j, 0)
        v = [0, 0, 0]
        for k in range(3):
            v[p[k]] = -da[k]
        return FermatAut(d, (v[0] - v[2]) % d, (v[1] - v[2]) % d, PERM_NAMES[_invert(p)])

    def key(self, a: FermatAut):
        return (_PERM_RANK[a.perm], a.i, a.j)

    def format(self, a: FermatAut) -> str:
        return format_aut(a)

    def parse(self, text: str) -> FermatAut:
        return parse_aut(self.d, text)


@lru_cache(maxsize=None)
def law(d: int) -> FermatLaw:
    return FermatLaw(d)


def aut(d: int, i: int = 0, j: int = 0, perm: str = "id") -> FermatAut:
    if perm not in PERMS:
        raise ValueError(f"unknown permutation {perm!r}")
    return FermatAut(d, i % d, j % d, perm)


def act(g: FermatAut, p: FermatPoint) -> FermatPoint:
    """Image of a special point: slot k of the image is z^{a_k} v_k placed at perm(k)."""
    d = g.d
    if p.d != d:
        raise ValueError("degree mismatch")
    perm = PERMS[g.perm]
    da = (g.i, g.j, 0)
    v = p.coordinates()
    w: list = [None, None, None]
    for k in range(3):
        if v[k] is not None:
            w[perm[k]] = v[k] + 2 * da[k]
    return point_from_coordinates(d, w)


def special_points(d: int) -> tuple[FermatPoint, ...]:
    return tuple(FermatPoint(d, axis, eta) for axis in range(3) for eta in range(1, 2 * d, 2))


def section(d: int, axis: int = 2) -> tuple[FermatPoint, ...]:
    return tuple(FermatPoint(d, axis, eta) for eta in range(1, 2 * d, 2))


def base_point(d: int, eta: int = 1) -> FermatPoint:
    """The point (zeta_{2d}^eta : 1 : 0) of F_d on Z = 0."""
    if eta % 2 == 0:
        raise ValueError("eta exponent must be odd")
    return FermatPoint(d, 2, eta % (2 * d))


def galois_group_1(d: int) -> Group:
    """Galois group at (1:0:0): diag(z^i, 1, 1)."""
    return Group(law(d), (FermatAut(d, i, 0) for i in range(d)))


def galois_group_2(d: int) -> Group:
    """Galois group at (0:1:0): diag(1, z^j, 1)."""
    return Group(law(d), (FermatAut(d, 0, j) for j in range(d)))


def k_subgroup(d: int, l: int) -> Group:
    """K_l = {diag(zeta_l^i, zeta_l^j, 1)}, order l^2; needs l | d."""
    if l < 1 or d % l:
        raise GroupError(f"l = {l} does not divide d = {d}")
    step = d // l
    return Group(law(d), (FermatAut(d, i * step, j * step) for i in range(l) for j in range(l)))


def full_aut(d: int, bound: int = 100_000) -> Group:
    """Aut(F_d) for d >= 4, generated by K_d and the two coordinate permutations."""
    if d < 4:
        raise ValueError("Aut(F_d) = K_d x| S_3 needs d >= 4")
    gens = [FermatAut(d, 1, 0), FermatAut(d, 0, 1), FermatAut(d, 0, 0, "xzy"), FermatAut(d, 0, 0, "xy")]
    g = closure(gens, law(d), bound=bound)
    if g.order != 6 * d * d:
        raise AssertionError(f"|Aut(F_{d})| = {g.order}, expected {6 * d * d}")
    return g


def stabilizer_order(h: Group, p: FermatPoint) -> int:
    return sum(1 for g in h.elements if act(g, p) == p)


def quotient_genus_diagonal(d: int, h: Group) -> int:
    """Genus of F_d/H for a group of diagonal automorphisms, by Riemann-Hurwitz.

    A nontrivial diagonal automorphism fixes no point with XYZ != 0, so all
    ramification sits on the 3d special points.
    """
    for g in h.elements:
        if g.d != d or not g.is_diagonal:
            raise ValueError(f"{format_aut(g)} is not a diagonal automorphism of F_{d}")
    gx = fermat_genus(d)
    ramification = sum(stabilizer_order(h, p) - 1 for p in special_points(d))
    num = 2 * gx - 2 - ramification
    n = h.order
    if num % n or (num // n + 2) % 2:
        raise ArithmeticError(
            f"Riemann-Hurwitz gives non-integral genus: (2g-2) = {num}/{n}"
        )
    return (num // n + 2) // 2


def fixes_generic_point(g: FermatAut) -> bool:
    """Whether a diagonal g fixes a point with all coordinates nonzero.

    diag(a, b, 1) fixes (x : y : 1), xy != 0, exactly when a = b = 1.
    """
    if not g.is_diagonal:
        raise ValueError("only diagonal automorphisms are handled")
    return g.i == 0 and g.j == 0


def identify_quotient(d: int, h: Group) -> CurveId:
    """F_d/K_l is F_{d/l}; every other subgroup is reported as unknown."""
    n = h.order
    for l in divisors(d):
        if l * l != n:
            continue
        if h == k_subgroup(d, l):
            # invariant map (x, y) -> (x^l, y^l) has degree det diag(l, l)
            assert l * l == n
            return fermat_curve(d // l)
    return UNKNOWN


def divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


_AUT_RE = re.compile(r"^\s*diag\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*;\s*perm\(\s*(\w+)\s*\)\s*$")
_POINT_RE = re.compile(r"^\s*axis\s*:\s*([XYZ])\s*,\s*eta\s*:\s*(.+?)\s*$")


def format_aut(a: FermatAut) -> str:
    return f"diag({a.i},{a.j});perm({a.perm})"


def parse_aut(d: int, text: str) -> FermatAut:
    m = _AUT_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse Fermat automorphism {text!r}")
    perm = m.group(3)
    if perm not in PERMS:
        raise ValueError(f"unknown permutation {perm!r}")
    return aut(d, int(m.group(1)), int(m.group(2)), perm)


def format_point(p: FermatPoint) -> str:
    return f"axis:{AXES[p.axis]},eta:zeta({2 * p.d})^{p.eta}"


def parse_point(d: int, text: str) -> FermatPoint:
    m = _POINT_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse Fermat point {text!r}")
    eta = parse_unity(m.group(2)).exponent_in(2 * d)
    if eta % 2 == 0:
        raise ValueError(f"eta^{d} != -1 for {text!r}")
    return FermatPoint(d, AXES.index(m.group(1)), eta)
