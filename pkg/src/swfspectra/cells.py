"""Stable cells for a semifree circle action and the maps between them.

Two kinds of cell occur.  A *trivial* cell is a representation sphere
``S^{mR + nC}`` on which the circle acts through the complex summand; ``n``
may be a rational number because the reducible critical point carries a
fractional index.  A *free* cell is ``Sigma^m(T+)``.  Forgetting the action,
``T+`` splits as ``S^1 v S^0``, so a free cell becomes the two spheres
``S^m`` and ``S^{m+1}``.

Morphism groups are computed with the following rules, with ``|c|`` the
total real dimension of a cell:

* maps out of a free cell are nonequivariant maps out of its bottom sphere,
  ``[Sigma^a T+, X]^T = [S^a, X]``, so they land in ``pi_{a-|X|}``;
* maps from a trivial cell into a free cell are dual (Wirthmueller,
  ``D(Sigma^m T+) = Sigma^{-m-1} T+``) to maps out of a free cell, so
  ``[S^V, Sigma^b T+]^T = pi_{|V|-b-1}``.  With ``V = R^{-1}`` and
  ``b = -2`` this gives ``Z``, as in the Sigma(2,3,11) triangle;
* maps between trivial cells with the same complex part are maps between
  their fixed spheres.  Unequal complex parts are not handled.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import stems
from .errors import NonIntegralDimension, UnsupportedMorphismGroup
from .zlinalg import FGAbelianGroup, direct_sum


class CellKind(str, enum.Enum):
    TRIVIAL = "trivial"
    FREE = "free"


@dataclass(frozen=True)
class Cell:
    kind: CellKind
    real: int
    complex: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "kind", CellKind(self.kind))
        object.__setattr__(self, "real", int(self.real))
        object.__setattr__(self, "complex", Fraction(self.complex))
        if self.kind is CellKind.FREE and self.complex != 0:
            raise ValueError("free cells carry only an integer degree")

    @classmethod
    def sphere(cls, real: int, complex=0) -> "Cell":
        return cls(CellKind.TRIVIAL, real, Fraction(complex))

    @classmethod
    def free(cls, degree: int) -> "Cell":
        return cls(CellKind.FREE, degree)

    @property
    def is_free(self) -> bool:
        return self.kind is CellKind.FREE

    @property
    def total_dim(self) -> Fraction:
        return self.real + 2 * self.complex

    def integral_dim(self) -> int:
        d = self.total_dim
        if d.denominator != 1:
            raise NonIntegralDimension(f"{self} has non-integral dimension {d}")
        return int(d)

    def shifted(self, real: int = 0, complex=0) -> "Cell":
        complex = Fraction(complex)
        if self.is_free:
            shift = real + 2 * complex
            if shift.denominator != 1:
                raise NonIntegralDimension(f"cannot shift a free cell by {shift}")
            return Cell.free(self.real + int(shift))
        return Cell.sphere(self.real + real, self.complex + complex)

    def __str__(self) -> str:
        if self.is_free:
            return f"T+[{self.real}]"
        if self.complex == 0:
            return f"S^{self.real}"
        c = self.complex
        sign = "-" if c < 0 else "+"
        return f"S^{{{self.real} {sign} {abs(c)}C}}"


def dual_cell(c: Cell) -> Cell:
    if c.is_free:
        return Cell.free(-c.real - 1)
    return Cell.sphere(-c.real, -c.complex)


def forget_cell(c: Cell) -> list[int]:
    """Degrees of the spheres making up ``c`` once the action is forgotten."""
    if c.is_free:
        return [c.real, c.real + 1]
    return [c.integral_dim()]


def equivariant_stem(src: Cell, dst: Cell) -> int:
    """The stem k with ``[src, dst]^T = pi_k(S^0)``."""
    if src.is_free:
        return src.real - dst.integral_dim()
    if dst.is_free:
        return src.integral_dim() - dst.real - 1
    if src.complex != dst.complex:
        raise UnsupportedMorphismGroup(
            f"equivariant maps {src} -> {dst} between spheres with different complex parts"
        )
    return src.real - dst.real


def morphism_group(src: Cell, dst: Cell, equivariant: bool = True) -> FGAbelianGroup:
    if equivariant:
        return stems.stable_stem(equivariant_stem(src, dst))
    parts = [stems.stable_stem(a - b) for a in forget_cell(src) for b in forget_cell(dst)]
    return direct_sum(*parts).group


def wedge_morphism_group(srcs: Sequence[Cell], dst: Cell, equivariant: bool = True) -> FGAbelianGroup:
    """Maps out of a wedge: the direct sum over its summands."""
    return direct_sum(*(morphism_group(s, dst, equivariant) for s in srcs)).group


class D2Verdict(str, enum.Enum):
    NO_MAP = "NoMap"
    UNIQUE_INCLUSION_CLASS = "UniqueInclusionClass"
    IDENTITY_CLASS = "IdentityClass"


def d2_admissible(m: int, n: int, d) -> D2Verdict:
    """Equivariant maps ``(R^m + C^{n+d})^+ -> (R^m + C^n)^+`` of fixed-point degree one.

    Such a map exists only for ``d <= 0`` and is then homotopic to the
    inclusion; ``d = 0`` is the identity.
    """
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    if d > 0:
        return D2Verdict.NO_MAP
    if d == 0:
        return D2Verdict.IDENTITY_CLASS
    return D2Verdict.UNIQUE_INCLUSION_CLASS


def trivial_mapping_group_is_torsion(d) -> bool:
    """Whether ``pi^1_T(S^{dC})`` is a torsion group.  It is, for every d."""
    Fraction(d)
    return True
