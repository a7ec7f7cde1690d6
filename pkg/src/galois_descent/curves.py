"""Identification tags for quotient curves."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CurveId:
    """Identification of a quotient curve."""

    tag: str  # "fermat", "takahashi", "conic", "unknown"
    n: int | None = None
    genus: int | None = None

    @property
    def label(self) -> str:
        if self.tag == "fermat":
            return f"F_{self.n}"
        if self.tag == "takahashi":
            return f"T_{self.n}"
        return self.tag


def fermat_genus(n: int) -> int:
    return (n - 1) * (n - 2) // 2


def fermat_curve(n: int) -> CurveId:
    return CurveId("fermat", n, fermat_genus(n))


UNKNOWN = CurveId("unknown")


def takahashi_curve(n: int) -> CurveId:
    return CurveId("takahashi", n)


CONIC = CurveId("conic", None, 0)
