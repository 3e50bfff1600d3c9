"""Topological applications as executable checks.

* the relative Seiberg-Witten series of the exotic nuclei ``N(2)_{p,q}``
  and the contradiction showing K3#K3#K3 contains none of them;
* the two adjunction-type statements for embedded spheres.

The Bauer-Furuta values of K3#K3#K3 are inputs, not computed here; see
:data:`KNOWN_INVARIANTS`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .catalog import BrieskornParams, Orientation, swf_brieskorn
from .cells import D2Verdict, d2_admissible, trivial_mapping_group_is_torsion
from .errors import NonCoprimeParameters, ParityViolation
from .gluing import RelativeInvariantClass, glue
from .homotopy import HomotopyGroup, homotopy_group
from .laurent import LaurentPolynomial

# Nonequivariant Bauer-Furuta invariants of K3#K3#K3 in pi_3(S^0) = Z/24,
# from the connected sum formula for these invariants: 12 for the trivial spin^c
# structure c0 and zero for every other one.
KNOWN_INVARIANTS = {
    ("K3#K3#K3", "c0"): 12,
    ("K3#K3#K3", "other"): 0,
}
PI3_ORDER = 24


class Verdict(str, enum.Enum):
    CONTRADICTION = "Contradiction"
    NO_OBSTRUCTION = "NoObstruction"
    NO_BASIC_CLASSES = "NoBasicClasses"
    ALLOWED = "Allowed"
    EXCLUDED = "Excluded"


@dataclass(frozen=True)
class NucleusParams:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError(f"p and q must be positive, got ({self.p}, {self.q})")
        if gcd(self.p, self.q) != 1:
            raise NonCoprimeParameters(f"gcd({self.p}, {self.q}) = {gcd(self.p, self.q)}")

    @property
    def c1_exponent(self) -> int:
        return 2 * self.p * self.q - self.p - self.q


def relative_sw_series(params: NucleusParams) -> LaurentPolynomial:
    """``s(pq)^2 / (s(p) s(q))`` with ``s(k) = t^k - t^-k`` and ``t = exp(P)``."""
    p, q = params.p, params.q
    s = LaurentPolynomial.sinh_numerator
    num = s(p * q) ** 2
    try:
        return num.exact_div(s(p)).exact_div(s(q))
    except ArithmeticError as exc:
        raise NonCoprimeParameters(f"series for ({p}, {q}) is not a Laurent polynomial") from exc


@dataclass(frozen=True)
class ObstructionReport:
    params: NucleusParams
    x0: int
    x1: int
    z: int | None
    c0_value: int | None
    c1_value: int | None
    verdict: Verdict

    def as_dict(self) -> dict:
        return {
            "p": self.params.p,
            "q": self.params.q,
            "x0": self.x0,
            "x1": self.x1,
            "z": self.z,
            "c0Value": self.c0_value,
            "c1Value": self.c1_value,
            "verdict": self.verdict.value,
        }


@lru_cache(maxsize=None)
def _gluing_pieces() -> tuple[RelativeInvariantClass, HomotopyGroup]:
    """Forgetful image of the generator of pi_{-1}^T(swf(Y)), and pi_4(swf(-Y))."""
    y = swf_brieskorn(BrieskornParams(11, Orientation.NEGATIVE))
    minus_y = swf_brieskorn(BrieskornParams(11, Orientation.POSITIVE))
    generator = RelativeInvariantClass.create(y, -1, [1], equivariant=True).nonequivariant()
    return generator, homotopy_group(minus_y, 4, equivariant=False)


@lru_cache(maxsize=None)
def _psi(x: int, z: int) -> int:
    """Glue ``x`` times the generator of pi_{-1}^T(swf(Y)) to ``(0, 0, z)`` in pi_4(swf(-Y))."""
    generator, outside = _gluing_pieces()
    inside = RelativeInvariantClass(generator.homotopy, generator.value * x)
    return glue(inside, RelativeInvariantClass(outside, outside.element([0, 0, z]))).value


def exotic_nuclei_check(params: NucleusParams) -> ObstructionReport:
    """Test whether K3#K3#K3 = N(2)_{p,q} u X_2 is consistent with the known invariants.

    ``z`` is the Z/24 component of the invariant of ``X_2``; it is unknown,
    so every value is tried against both gluing constraints.
    """
    series = relative_sw_series(params)
    x0, x1 = series[0], series[params.c1_exponent]
    if (params.p, params.q) != (1, 1) and x1 != 1:
        raise AssertionError(f"coefficient at {params.c1_exponent} is {x1}, expected 1")
    # for (1, 1) the structure c1 is c0 itself and carries no separate constraint
    distinct = params.c1_exponent != 0
    target_c0 = KNOWN_INVARIANTS[("K3#K3#K3", "c0")] % PI3_ORDER
    target_c1 = KNOWN_INVARIANTS[("K3#K3#K3", "other")] % PI3_ORDER

    c1_ok = [z for z in range(PI3_ORDER) if not distinct or _psi(x1, z) == target_c1]
    solutions = [z for z in c1_ok if _psi(x0, z) == target_c0]
    z = solutions[0] if solutions else (c1_ok[0] if c1_ok else None)
    return ObstructionReport(
        params,
        x0,
        x1,
        z,
        None if z is None else _psi(x0, z),
        None if z is None else _psi(x1, z),
        Verdict.NO_OBSTRUCTION if solutions else Verdict.CONTRADICTION,
    )


@dataclass(frozen=True)
class PositiveSphereReport:
    square: int
    verdict: Verdict
    certificate: tuple[str, ...] = field(default=())

    def as_dict(self) -> dict:
        return {"square": self.square, "verdict": self.verdict.value, "certificate": list(self.certificate)}


def adjunction_positive_check(b_plus_greater_than_one: bool, sphere_square: int) -> PositiveSphereReport:
    """Embedded sphere of positive square in a manifold with ``b+ > 1``."""
    if not b_plus_greater_than_one:
        raise ValueError("needs b+(X) > 1")
    if sphere_square <= 0:
        raise ValueError("sphere square must be positive")
    # the disc bundle has b+ = 1; its invariant lies in pi^1_T(S^{dC}) for some d
    witness = Fraction(0)
    if not trivial_mapping_group_is_torsion(witness):
        raise AssertionError("pi^1_T(S^{dC}) is torsion for every d")
    chain = (
        f"neighbourhood: disc bundle D({sphere_square}), b+ = 1, boundary L({sphere_square},1)",
        f"swf(L({sphere_square},1), c_k) = S^(-n_k C) for every k",
        "relative invariant in pi^1_T(S^(dC)): torsion [trivial_mapping_group_is_torsion]",
        "glued invariant torsion, hence SW(X, c) = 0 for every c",
    )
    return PositiveSphereReport(sphere_square, Verdict.NO_BASIC_CLASSES, chain)


@dataclass(frozen=True)
class NegativeSphereReport:
    n: int
    pairing: int
    j: int
    k: int
    index: int
    d2: D2Verdict
    verdict: Verdict

    def as_dict(self) -> dict:
        return {
            "N": self.n,
            "pairing": self.pairing,
            "j": self.j,
            "k": self.k,
            "i": self.index,
            "d2": self.d2.value,
            "verdict": self.verdict.value,
        }


def adjunction_negative_check(n: int, pairing: int, simple_type: bool = True) -> NegativeSphereReport:
    """Basic class ``c`` against a sphere of square ``-N`` in a simple type manifold.

    ``c([S]) = -N + 2j`` fixes the spin^c structure on the disc bundle,
    ``k = j mod N`` the one on its lens space boundary, and
    ``i = ((N - 2k)^2 - (N - 2j)^2) / 8N`` the complex index.  A nonzero
    ``i`` would produce a second basic class of different square.
    """
    if n < 1:
        raise ValueError("N must be positive")
    if not simple_type:
        raise ValueError("the check assumes X has simple type")
    if (pairing - n) % 2:
        raise ParityViolation(f"c([S]) = {pairing} must have the parity of N = {n}")
    j = (pairing + n) // 2
    k = j % n
    i = Fraction((n - 2 * k) ** 2 - (n - 2 * j) ** 2, 8 * n)
    if i.denominator != 1:
        raise AssertionError(f"index {i} is not an integer")
    i = int(i)
    # the disc bundle invariant is a map S^{iC} -> S^0 of fixed-point degree one
    d2 = d2_admissible(0, max(0, -i), i)
    return NegativeSphereReport(n, pairing, j, k, i, d2, Verdict.EXCLUDED if i else Verdict.ALLOWED)
