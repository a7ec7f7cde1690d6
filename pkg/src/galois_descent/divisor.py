"""Divisors on a finite set of special points, and transport along X -> X/H.

A point of X/H is labelled by its H-orbit, stored as the sorted tuple of the
orbit's points.  Orbit sums always run over group *elements*, so a point fixed
by k elements of S appears with multiplicity k in ``orbit_sum(S, Q)``.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Iterable, Mapping

from .group import CosetGroup, Group


class Divisor:
    """Finite formal sum of points with integer coefficients; zero terms dropped."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping | Iterable | None = None):
        if coeffs is None:
            counts: dict = {}
        elif isinstance(coeffs, Mapping):
            counts = dict(coeffs)
        else:
            counts = Counter(coeffs)
        self._coeffs = {p: k for p, k in counts.items() if k}

    @classmethod
    def point(cls, p, k: int = 1) -> Divisor:
        return cls({p: k})

    def __getitem__(self, p) -> int:
        return self._coeffs.get(p, 0)

    def __iter__(self):
        return iter(sorted(self._coeffs))

    def items(self) -> list[tuple]:
        return sorted(self._coeffs.items())

    def support(self) -> frozenset:
        return frozenset(self._coeffs)

    def degree(self) -> int:
        return sum(self._coeffs.values())

    def is_effective(self) -> bool:
        return all(k > 0 for k in self._coeffs.values())

    def __eq__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: Divisor) -> Divisor:
        out = dict(self._coeffs)
        for p, k in other._coeffs.items():
            out[p] = out.get(p, 0) + k
        return Divisor(out)

    def __neg__(self) -> Divisor:
        return Divisor({p: -k for p, k in self._coeffs.items()})

    def __sub__(self, other: Divisor) -> Divisor:
        return self + (-other)

    def __mul__(self, k: int) -> Divisor:
        return Divisor({p: k * c for p, c in self._coeffs.items()})

    __rmul__ = __mul__

    def divide(self, k: int) -> Divisor:
        """Exact division of every coefficient; ValueError if one is not divisible."""
        bad = [p for p, c in self._coeffs.items() if c % k]
        if bad:
            raise ValueError(f"coefficient at {min(bad)} not divisible by {k}")
        return Divisor({p: c // k for p, c in self._coeffs.items()})

    def first_difference(self, other: Divisor):
        """``(p, self[p], other[p])`` for the smallest point where they differ, else None."""
        keys = sorted(set(self._coeffs) | set(other._coeffs))
        for p in keys:
            if self[p] != other[p]:
                return p, self[p], other[p]
        return None

    def __repr__(self):
        terms = " + ".join(f"{k}*{p}" for p, k in self.items())
        return f"Divisor({terms or '0'})"


Action = Callable[[object, object], object]


def orbit_sum(elements: Iterable, q, act: Action) -> Divisor:
    """The divisor sum over sigma in S of sigma(Q), counted per element."""
    return Divisor(Counter(act(g, q) for g in elements))


def orbit(h: Group | Iterable, q, act: Action) -> tuple:
    elems = h.elements if isinstance(h, Group) else h
    return tuple(sorted({act(g, q) for g in elems}))


def orbit_label(h: Group, q, act: Action) -> tuple:
    """The point of X/H under Q."""
    return orbit(h, q, act)


def pushforward(h: Group, divisor: Divisor, act: Action) -> Divisor:
    """Image under the quotient map: each point goes to its H-orbit label."""
    out: Counter = Counter()
    for p, k in divisor.items():
        out[orbit_label(h, p, act)] += k
    return Divisor(out)


def pullback(h: Group, divisor: Divisor, act: Action) -> Divisor:
    """Each orbit label pulls back to the sum over h in H of h(Q) for a representative Q."""
    out = Divisor()
    for label, k in divisor.items():
        out = out + k * orbit_sum(h.elements, label[0], act)
    return out


def coset_orbit_sum(quot: CosetGroup, q, act: Action) -> Divisor:
    """Sum over cosets H sigma of the image label of sigma(Q) on X/H.

    The induced action of H sigma on labels is [P] -> [sigma P]; every coset
    representative gives the same label because H is normal.
    """
    h = quot.kernel
    out: Counter = Counter()
    for coset in quot.cosets:
        rep = quot.law.rep(coset)
        out[orbit_label(h, act(rep, q), act)] += 1
    return Divisor(out)


def induced_action(h: Group, act: Action) -> Action:
    """Action of G/H on orbit labels, for cosets given as frozensets."""

    def act_bar(coset, label):
        rep = min(coset, key=h.law.key)
        return orbit_label(h, act(rep, label[0]), act)

    return act_bar
