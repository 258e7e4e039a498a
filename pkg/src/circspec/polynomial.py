"""Integer polynomials recovered from power sums."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class IntPolynomial:
    # highest degree first; coefficients[0] is the leading coefficient
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_monic(self) -> bool:
        return self.coefficients[0] == 1

    def __call__(self, x):
        acc = 0 * x
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def zero_root_multiplicity(self) -> int:
        m = 0
        for c in reversed(self.coefficients):
            if c:
                break
            m += 1
        return m

    def deflate_zero(self, multiplicity: int | None = None) -> "IntPolynomial":
        """Divide by x^m, m the multiplicity of the root 0 unless given."""
        m = self.zero_root_multiplicity() if multiplicity is None else multiplicity
        if m and any(self.coefficients[-m:]):
            raise ArithmeticError(f"x^{m} does not divide {self}")
        return IntPolynomial(self.coefficients[: len(self.coefficients) - m] if m else self.coefficients)

    def __str__(self):
        terms = []
        d = self.degree
        for i, c in enumerate(self.coefficients):
            e = d - i
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if e == 1 else f"x^{e}")
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def newton_polynomial(power_sums: Sequence[int], degree: int) -> IntPolynomial:
    """Monic polynomial whose roots have power sums p_1..p_degree.

    Uses k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i over exact rationals and
    insists every coefficient comes out integral.
    """
    if len(power_sums) < degree:
        raise ValueError(f"need {degree} power sums, got {len(power_sums)}")
    e = [Fraction(1)]
    for k in range(1, degree + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            term = e[k - i] * power_sums[i - 1]
            acc += term if i % 2 else -term
        e.append(acc / k)
    coeffs = []
    for k, ek in enumerate(e):
        if ek.denominator != 1:
            raise ArithmeticError(f"non-integral coefficient {ek} at x^{degree - k}")
        coeffs.append(int(ek) if k % 2 == 0 else -int(ek))
    return IntPolynomial(tuple(coeffs))
