"""Integer Laurent polynomials in one variable t, with exact division."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping


@dataclass(frozen=True)
class LaurentPolynomial:
    """Finitely supported map exponent -> coefficient; zero coefficients are dropped."""

    coeffs: tuple[tuple[int, int], ...] = ()

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        items = sorted((int(e), int(c)) for e, c in (coeffs or {}).items() if c)
        object.__setattr__(self, "coeffs", tuple(items))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coeff})

    @classmethod
    def sinh_numerator(cls, k: int) -> "LaurentPolynomial":
        """``t^k - t^-k``, twice sinh(kP) with t = exp(P)."""
        return cls({k: 1, -k: -1}) if k else cls()

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def __getitem__(self, exponent: int) -> int:
        return self.as_dict().get(exponent, 0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def min_exponent(self) -> int:
        return self.coeffs[0][0]

    @property
    def max_exponent(self) -> int:
        return self.coeffs[-1][0]

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = self.as_dict()
        for e, c in other.coeffs:
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self.coeffs})

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    def __pow__(self, n: int) -> "LaurentPolynomial":
        out = LaurentPolynomial({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def divmod(self, divisor: "LaurentPolynomial") -> tuple["LaurentPolynomial", "LaurentPolynomial"]:
        """Long division from the top exponent down, over the integers.

        Stops once the remainder's span is shorter than the divisor's or its
        leading coefficient is not divisible.
        """
        if not divisor:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        lead_e, lead_c = divisor.coeffs[-1]
        span = divisor.max_exponent - divisor.min_exponent
        quotient: dict[int, int] = {}
        rem = self
        while rem and rem.max_exponent - rem.min_exponent >= span:
            e, c = rem.coeffs[-1]
            if c % lead_c:
                break
            term = LaurentPolynomial.monomial(e - lead_e, c // lead_c)
            quotient[e - lead_e] = quotient.get(e - lead_e, 0) + c // lead_c
            rem = rem - term * divisor
        return LaurentPolynomial(quotient), rem

    def exact_div(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        q, r = self.divmod(divisor)
        if r:
            raise ArithmeticError("Laurent division is not exact")
        return q

    def evaluate_at_one(self) -> int:
        return sum(c for _, c in self.coeffs)

    def is_symmetric(self) -> bool:
        return all(self[-e] == c for e, c in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e, c in reversed(self.coeffs):
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            terms.append(("-" if c < 0 else "+", body))
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text
