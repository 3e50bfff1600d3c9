"""Floer spectra of S^3, the Poincare sphere, lens spaces L(n,1) and Sigma(2,3,6n+-1).

Everything here goes through :func:`build_from_morse`: the functions below
only transcribe critical points, indices and flow counts.

Brieskorn spheres ``-Sigma(2,3,r)`` (the orientation computed directly):

    r = 12j - 1   reducible of index 0, 2j irreducibles of index -2,
                  one flow line (mod T) from the reducible to each
    r = 12j - 5   the same, every index raised by 2
    r = 12j + 1   reducible and 2j irreducibles all of index 0, the
                  reducible on the higher energy level
    r = 12j + 5   the same, every index lowered by 2

For ``j > 1`` the irreducibles sit on distinct energy levels; the flows
between them are not counted because their attaching maps live in
vanishing groups.  ``Sigma(2,3,r)`` itself is the dual.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidBrieskornParameter
from .spectrum import (
    CriticalPoint,
    MorseData,
    PointKind,
    SpectrumPresentation,
    build_from_morse,
    dualize,
)


class Orientation(str, enum.Enum):
    POSITIVE = "pos"
    NEGATIVE = "neg"


@dataclass(frozen=True)
class LensParams:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 1 or not 0 <= self.k < self.n:
            raise ValueError(f"need n >= 1 and 0 <= k < n, got n={self.n}, k={self.k}")


@dataclass(frozen=True)
class BrieskornParams:
    r: int
    orientation: Orientation = Orientation.NEGATIVE

    def __post_init__(self):
        object.__setattr__(self, "orientation", Orientation(self.orientation))
        if self.r < 5 or self.r % 6 not in (1, 5):
            raise InvalidBrieskornParameter(f"r must be of the form 6n +- 1 with r >= 5, got {self.r}")

    @property
    def residue(self) -> tuple[int, int]:
        """``(offset, j)`` with ``r = 12 j + offset`` and offset in {-5, -1, 1, 5}."""
        for offset in (-5, -1, 1, 5):
            if (self.r - offset) % 12 == 0:
                return offset, (self.r - offset) // 12
        raise AssertionError("unreachable")


def n_invariant_lens(p: LensParams) -> Fraction:
    """``((n - 2k)^2 - n) / 8n`` for the spin^c structure c_k on L(n,1)."""
    return Fraction((p.n - 2 * p.k) ** 2 - p.n, 8 * p.n)


def reducible_only(index) -> MorseData:
    """A positive scalar curvature flow: the reducible is the only critical point."""
    return MorseData((CriticalPoint("theta", PointKind.REDUCIBLE, Fraction(index)),))


def swf_sphere() -> SpectrumPresentation:
    return build_from_morse(reducible_only(0))


def swf_poincare() -> SpectrumPresentation:
    """Sigma(2,3,5) with its boundary orientation: the reducible has index 2."""
    return build_from_morse(reducible_only(2))


def swf_lens(p: LensParams) -> SpectrumPresentation:
    return build_from_morse(reducible_only(-2 * n_invariant_lens(p)))


def brieskorn_morse_data(r: int) -> MorseData:
    """Critical points and flows for ``-Sigma(2,3,r)``, r = 12j +- 1 or 12j +- 5."""
    offset, j = BrieskornParams(r).residue
    if j < 1:
        raise InvalidBrieskornParameter(f"r = {r} is not covered by the Brieskorn cases")
    shift = {-1: 0, -5: 2, 1: 0, 5: -2}[offset]
    ids = [f"a{i + 1}" for i in range(2 * j)]
    if offset in (-1, -5):
        # reducible above 2j irreducibles two indices lower, one flow line to each
        irr_index = shift - 2
        levels = [None] * (2 * j) if j == 1 else [Fraction(irr_index) - 1 - i for i in range(2 * j)]
        red = CriticalPoint("theta", PointKind.REDUCIBLE, shift)
        irr = [CriticalPoint(a, PointKind.IRREDUCIBLE, irr_index, lv) for a, lv in zip(ids, levels)]
        counts = {("theta", a): 1 for a in ids}
    else:
        # all of index `shift`, the reducible on the highest energy level
        red = CriticalPoint("theta", PointKind.REDUCIBLE, shift, Fraction(shift) + 1)
        irr = [
            CriticalPoint(a, PointKind.IRREDUCIBLE, shift, Fraction(shift) if j == 1 else Fraction(shift) - i)
            for i, a in enumerate(ids)
        ]
        counts = {}
    return MorseData(tuple([red] + irr), counts)


def swf_brieskorn(p: BrieskornParams) -> SpectrumPresentation:
    if p.r == 5:
        pos = swf_poincare()
    else:
        neg = build_from_morse(brieskorn_morse_data(p.r))
        if p.orientation is Orientation.NEGATIVE:
            return neg
        pos = dualize(neg)
    return pos if p.orientation is Orientation.POSITIVE else dualize(pos)


def supported_brieskorn(limit: int) -> list[int]:
    return [r for r in range(5, limit + 1) if r % 6 in (1, 5)]
