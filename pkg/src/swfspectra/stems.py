"""Stable stems pi_k(S^0) for k <= 3 and their composition products.

Every supported stem is cyclic, so an element is stored as an integer
multiple of the stem's generator:

    k = 0   Z      iota
    k = 1   Z/2    eta
    k = 2   Z/2    eta^2
    k = 3   Z/24   nu

The only nontrivial products needed are iota as the unit, eta * eta = eta^2
and eta * eta^2 = 12 nu.  The last is imported from classical homotopy
theory rather than computed; it is what makes the Sigma(2,3,11) pairing
carry the coefficient 12 on its degree -2 summands.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedStem
from .zlinalg import FGAbelianGroup, GroupElement

MAX_STEM = 3

_STEMS = {
    0: (0, "iota"),
    1: (2, "eta"),
    2: (2, "eta^2"),
    3: (24, "nu"),
}

# (stem_a, stem_b) -> multiple of the generator of stem_a + stem_b
_PRODUCTS = {
    (1, 1): 1,
    (1, 2): 12,
    (2, 1): 12,
}


def _check(k: int) -> None:
    if k > MAX_STEM:
        raise UnsupportedStem(f"pi_{k}(S^0) is outside the supported range k <= {MAX_STEM}")


def stem_order(k: int) -> int:
    """Order of the generator of pi_k(S^0): 0 for Z, 1 for the trivial group."""
    _check(k)
    if k < 0:
        return 1
    return _STEMS[k][0]


def stable_stem(k: int) -> FGAbelianGroup:
    _check(k)
    if k < 0:
        return FGAbelianGroup(0, (), ())
    order, name = _STEMS[k]
    if order == 0:
        return FGAbelianGroup(1, (), (name,))
    return FGAbelianGroup(0, (order,), (name,))


def reduce(k: int, value: int) -> int:
    order = stem_order(k)
    return value % order if order else value


@dataclass(frozen=True)
class StemElement:
    stem: int
    value: int = 0

    def __post_init__(self):
        object.__setattr__(self, "value", reduce(self.stem, int(self.value)))

    @property
    def coord(self) -> GroupElement:
        g = stable_stem(self.stem)
        return g.element((self.value,) if g.ngens else ())

    def __add__(self, other: "StemElement") -> "StemElement":
        if other.stem != self.stem:
            raise ValueError("adding elements of different stems")
        return StemElement(self.stem, self.value + other.value)

    def __mul__(self, other: "StemElement") -> "StemElement":
        return stem_product(self, other)

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        if self.stem < 0 or self.value == 0:
            return f"0 in pi_{self.stem}"
        name = _STEMS[self.stem][1]
        return name if self.value == 1 else f"{self.value}*{name}"


def product_coefficient(a: int, b: int) -> int:
    """Multiple of the generator of stem a+b represented by gen_a * gen_b."""
    if a < 0 or b < 0:
        return 0
    _check(a + b)
    if a == 0 or b == 0:
        return 1
    return _PRODUCTS.get((a, b), 0)


def stem_product(x: StemElement, y: StemElement) -> StemElement:
    """Composition product pi_a x pi_b -> pi_{a+b}."""
    k = x.stem + y.stem
    _check(k)
    if x.stem < 0 or y.stem < 0:
        return StemElement(k, 0)
    return StemElement(k, x.value * y.value * product_coefficient(x.stem, y.stem))


def multiply(a: int, x: int, b: int, y: int) -> int:
    """Integer form of :func:`stem_product` on raw coefficients ``x`` in stem a, ``y`` in stem b."""
    if x == 0 or y == 0:
        return 0
    return stem_product(StemElement(a, x), StemElement(b, y)).value
