"""Exact roots of unity stored as exponents.

A value ``UnityExp(N, e)`` stands for ``zeta_N ** e`` where ``zeta_N`` is a
fixed primitive N-th root of unity, chosen compatibly so that
``zeta_{MN} ** M == zeta_N``.  Every scalar used by the curve models is of this
form, so all arithmetic reduces to integer arithmetic on exponents.
"""

from __future__ import annotations

import math
import re

DEFAULT_MODULUS_BOUND = 10**6

_TEXT_RE = re.compile(r"^\s*zeta\(\s*(\d+)\s*\)\s*(?:\^\s*(-?\d+))?\s*$")


class ModulusOverflow(ValueError):
    """Raised when a modulus grows past the configured bound."""


class UnityExp:
    """The root of unity ``zeta_N ** e``; immutable."""

    __slots__ = ("modulus", "exponent")

    def __init__(self, modulus: int, exponent: int = 0, bound: int = DEFAULT_MODULUS_BOUND):
        if modulus < 1:
            raise ValueError(f"modulus must be positive, got {modulus}")
        if modulus > bound:
            raise ModulusOverflow(f"modulus {modulus} exceeds bound {bound}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "exponent", exponent % modulus)

    def __setattr__(self, name, value):
        raise AttributeError("UnityExp is immutable")

    @classmethod
    def one(cls, modulus: int = 1) -> UnityExp:
        return cls(modulus, 0)

    def reduced(self) -> tuple[int, int]:
        """Return ``(N, e)`` in lowest terms, the canonical form used for equality."""
        g = math.gcd(self.modulus, self.exponent)
        return self.modulus // g, self.exponent // g

    def __eq__(self, other):
        if not isinstance(other, UnityExp):
            return NotImplemented
        # e/N == e'/N' as fractions mod 1
        return self.exponent * other.modulus == other.exponent * self.modulus

    def __hash__(self):
        return hash(self.reduced())

    def __repr__(self):
        return f"UnityExp({self.modulus}, {self.exponent})"

    def __str__(self):
        return format_unity(self)

    def mul(self, other: UnityExp, bound: int = DEFAULT_MODULUS_BOUND) -> UnityExp:
        n = math.lcm(self.modulus, other.modulus)
        if n > bound:
            raise ModulusOverflow(f"product modulus {n} exceeds bound {bound}")
        e = self.exponent * (n // self.modulus) + other.exponent * (n // other.modulus)
        return UnityExp(n, e, bound)

    __mul__ = mul

    def inv(self) -> UnityExp:
        return UnityExp(self.modulus, -self.exponent)

    def __truediv__(self, other: UnityExp) -> UnityExp:
        return self.mul(other.inv())

    def pow(self, k: int) -> UnityExp:
        return UnityExp(self.modulus, self.exponent * k)

    __pow__ = pow

    def order(self) -> int:
        return self.modulus // math.gcd(self.modulus, self.exponent)

    def rescale(self, new_modulus: int) -> UnityExp:
        """Rewrite the same root over ``new_modulus``, which must be a multiple of N."""
        if new_modulus % self.modulus:
            raise ValueError(f"{new_modulus} is not a multiple of {self.modulus}")
        return UnityExp(new_modulus, self.exponent * (new_modulus // self.modulus))

    def exponent_in(self, modulus: int) -> int:
        """Exponent of this root over ``modulus``; the root must be a ``modulus``-th root."""
        if (self.exponent * modulus) % self.modulus:
            raise ValueError(f"{self} is not a {modulus}-th root of unity")
        return self.exponent * modulus // self.modulus

    def is_one(self) -> bool:
        return self.exponent == 0

    def to_complex(self) -> complex:
        # only for float cross-checks; never used by the exact code paths
        import cmath

        return cmath.exp(2j * cmath.pi * self.exponent / self.modulus)


def zeta(modulus: int, exponent: int = 1) -> UnityExp:
    return UnityExp(modulus, exponent)


def format_unity(a: UnityExp) -> str:
    return f"zeta({a.modulus})^{a.exponent}"


def parse_unity(text: str) -> UnityExp:
    """Parse ``zeta(N)^e`` (or bare ``zeta(N)``, meaning e = 1)."""
    m = _TEXT_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse root of unity {text!r}")
    modulus = int(m.group(1))
    exponent = int(m.group(2)) if m.group(2) is not None else 1
    return UnityExp(modulus, exponent)
