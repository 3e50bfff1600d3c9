"""Gluing along a 3-manifold at the level of homotopy classes.

A relative invariant of a 4-manifold with boundary Y is recorded as a class
in ``pi_k`` of a presentation of the Floer spectrum of Y.  Gluing two such
pieces along Y and -Y evaluates the duality pairing

    pi_a(swf(Y)) x pi_b(swf(-Y)) -> pi_{a+b}(S^0),

which on wedges of spheres is the sum over dual summand pairs
``S^d``/``S^{-d}`` of the stem products of the two components.  For
``Y = -Sigma(2,3,11)``, ``a = -1`` and ``b = 4`` this reads

    (a1, b1, c1) x (a2, b2, c2) -> 12 (a1 a2 + b1 b2) + c1 c2  mod 24,

the two degree -2 summands pairing through eta * eta^2 = 12 nu and the
degree -1 summand through iota * nu.  (The formula is sometimes quoted
with primes on a1, b1; they stand for the second argument's a2, b2.)
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import stems
from .cells import Cell, equivariant_stem
from .errors import BasisMismatch, DegreeMismatch
from .homotopy import HomotopyGroup, forgetful_on_classes, homotopy_group
from .spectrum import SpectrumPresentation, _swap_part, suspend
from .stems import StemElement
from .zlinalg import GroupElement


@dataclass(frozen=True)
class RelativeInvariantClass:
    homotopy: HomotopyGroup
    value: GroupElement

    def __post_init__(self):
        if self.value.group != self.homotopy.group:
            raise ValueError("value does not belong to the class's homotopy group")

    @classmethod
    def create(cls, spectrum: SpectrumPresentation, degree: int, coords: Sequence[int],
               equivariant: bool = False) -> "RelativeInvariantClass":
        hg = homotopy_group(spectrum, degree, equivariant)
        return cls(hg, hg.element(coords))

    @property
    def spectrum(self) -> SpectrumPresentation:
        return self.homotopy.presentation

    @property
    def degree(self) -> int:
        return self.homotopy.degree

    @property
    def equivariant(self) -> bool:
        return self.homotopy.equivariant

    def nonequivariant(self) -> "RelativeInvariantClass":
        hg, x = forgetful_on_classes(self.homotopy, self.value)
        return RelativeInvariantClass(hg, x)


@dataclass(frozen=True)
class CobordismDegreeData:
    b_plus: int
    d_shift: Fraction

    def __post_init__(self):
        object.__setattr__(self, "d_shift", Fraction(self.d_shift))
        if 8 % self.d_shift.denominator:
            raise ValueError("d(X) has denominator dividing 8")

    @classmethod
    def from_characteristic(cls, b_plus: int, c_squared: int, signature: int) -> "CobordismDegreeData":
        return cls(b_plus, Fraction(c_squared - signature, 8))


def _sphere_components(x: RelativeInvariantClass) -> tuple[SpectrumPresentation, dict[str, int]]:
    x = x.nonequivariant()
    p = x.spectrum
    if not p.is_wedge():
        raise BasisMismatch("pairing needs a presentation that forgets to a wedge of spheres")
    return p, x.homotopy.cell_components(x.value)


def duality_pairing(x: RelativeInvariantClass, y: RelativeInvariantClass) -> StemElement:
    """Evaluate ``x`` against ``y`` where y lives on the dual spectrum."""
    k = x.degree + y.degree
    if k > stems.MAX_STEM:
        raise stems.UnsupportedStem(f"pairing lands in pi_{k}(S^0)")
    px, cx = _sphere_components(x)
    py, cy = _sphere_components(y)
    deg_y = {lab: c.integral_dim() for lab, c in zip(py.labels, py.cells)}
    if len(px.cells) != len(py.cells):
        raise BasisMismatch("spectra have different numbers of summands")
    total = StemElement(k, 0)
    for lab, cell in zip(px.labels, px.cells):
        d = cell.integral_dim()
        partner = _swap_part(lab)
        if deg_y.get(partner) != -d:
            raise BasisMismatch(f"no dual summand S^{-d} labelled {partner!r} for {lab!r}")
        a, b = cx.get(lab, 0), cy.get(partner, 0)
        sa, sb = x.degree - d, y.degree + d
        if a and b:
            total = total + stems.stem_product(StemElement(sa, a), StemElement(sb, b))
    return total


def glue(psi1: RelativeInvariantClass, psi2: RelativeInvariantClass) -> StemElement:
    """Invariant of the glued manifold from its two pieces, as a stable stem element.

    Equivariant classes are first pushed to their nonequivariant images.
    """
    return duality_pairing(psi1, psi2)


def compose_cobordism(d1: RelativeInvariantClass, d2: RelativeInvariantClass,
                      deg1: CobordismDegreeData) -> RelativeInvariantClass:
    """Composite ``(Sigma^{b,-d} D2) o D1`` of two cobordism maps.

    ``d1`` maps ``S^{k1}`` into a single-cell spectrum; suspended by
    ``(b_plus, -d_shift)`` that cell must be the source sphere ``S^{k2}``
    of ``d2``.  The result is a class on d2's target, in degree
    ``k2 + (k1 - dim of d1's cell)``.
    """
    target = d1.spectrum
    if len(target.cells) != 1 or target.cells[0].is_free:
        raise DegreeMismatch("composition needs d1 to land in a single trivial cell")
    moved = suspend(target, deg1.b_plus, -deg1.d_shift).cells[0]
    if d1.equivariant:
        matches = moved.complex == 0 and moved.real == d2.degree
    else:
        matches = moved.total_dim == d2.degree
    if not matches:
        raise DegreeMismatch(
            f"Sigma^({deg1.b_plus}, {-deg1.d_shift}) of {target.cells[0]} is {moved}, "
            f"not the source S^{d2.degree} of the second map"
        )
    scalar = d1.value.coords[0] if d1.value.coords else 0
    s1 = d1.degree - target.cells[0].integral_dim()
    if s1 == 0:
        return RelativeInvariantClass(d2.homotopy, d2.value * scalar)
    out = homotopy_group(d2.spectrum, d2.degree + s1, d2.equivariant)
    p = d2.spectrum
    new = {}
    for lab, c in d2.homotopy.cell_components(d2.value).items():
        s2 = equivariant_stem(Cell.sphere(d2.degree), p.cells[p.label_index(lab)])
        new[lab] = stems.multiply(s2, c, s1, scalar)
    return RelativeInvariantClass(out, out.from_cell_components(new))


def identity_class(spectrum: SpectrumPresentation | None = None) -> RelativeInvariantClass:
    """The unit ``iota`` in ``pi_0`` of ``S^0``."""
    from .catalog import swf_sphere

    spectrum = swf_sphere() if spectrum is None else spectrum
    return RelativeInvariantClass.create(spectrum, 0, [1], equivariant=False)

