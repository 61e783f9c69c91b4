"""Univariate integer polynomials and truncated power series in q."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping


def _fmt_terms(coeffs: Mapping[int, int], var: str = "q") -> str:
    parts = []
    for d in sorted(coeffs):
        c = coeffs[d]
        if d == 0:
            mono = str(abs(c))
        else:
            power = var if d == 1 else f"{var}^{d}"
            mono = power if abs(c) == 1 else f"{abs(c)}{power}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, mono))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, mono in parts[1:]:
        out += f" {sign} {mono}"
    return out


class QPolynomial:
    """Integer polynomial sum_d c_d q^d, stored sparsely without zeros.

    Used both for Weyl-group Poincaré polynomials and for the twist generating
    function of a shift-free Tate motive.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        for d, x in (coeffs or {}).items():
            if d < 0:
                raise ValueError("negative degree in QPolynomial")
            if x:
                c[int(d)] = int(x)
        self._c = dict(sorted(c.items()))

    @classmethod
    def from_list(cls, coeffs) -> QPolynomial:
        return cls(dict(enumerate(coeffs)))

    def coefficient(self, d: int) -> int:
        return self._c.get(d, 0)

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._c)

    @property
    def degree(self) -> int:
        return max(self._c, default=-1)

    def to_list(self) -> list[int]:
        return [self.coefficient(d) for d in range(self.degree + 1)]

    def __call__(self, q):
        return sum(c * q**d for d, c in self._c.items())

    def __add__(self, other: QPolynomial) -> QPolynomial:
        out = dict(self._c)
        for d, x in other._c.items():
            out[d] = out.get(d, 0) + x
        return QPolynomial(out)

    def __mul__(self, other: QPolynomial) -> QPolynomial:
        out: dict[int, int] = {}
        for d1, x1 in self._c.items():
            for d2, x2 in other._c.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + x1 * x2
        return QPolynomial(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, QPolynomial) and self._c == other._c

    def __hash__(self):
        return hash(tuple(self._c.items()))

    def is_palindromic(self) -> bool:
        top = self.degree
        return all(self.coefficient(d) == self.coefficient(top - d) for d in range(top + 1))

    def __str__(self) -> str:
        return _fmt_terms(self._c)

    def __repr__(self) -> str:
        return f"QPolynomial({self})"


@dataclass(frozen=True)
class PoincareSeries:
    """Power series in q known through degree ``precision``."""

    coefficients: tuple[int, ...]
    closed_form: str | None = None

    @property
    def precision(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, d: int) -> int:
        if d > self.precision:
            raise ValueError(f"degree {d} beyond precision {self.precision}")
        return self.coefficients[d]

    def __mul__(self, other: PoincareSeries) -> PoincareSeries:
        n = min(self.precision, other.precision)
        out = [
            sum(self.coefficients[k] * other.coefficients[d - k] for k in range(d + 1))
            for d in range(n + 1)
        ]
        return PoincareSeries(tuple(out))

    def __str__(self) -> str:
        body = _fmt_terms(dict(enumerate(self.coefficients)))
        return f"{body} + O(q^{self.precision + 1})"


def series_from_polynomial(p: QPolynomial, precision: int) -> PoincareSeries:
    return PoincareSeries(tuple(p.coefficient(d) for d in range(precision + 1)))


def inverse_power_of_one_minus_q(r: int, precision: int) -> PoincareSeries:
    """1/(1-q)^r through degree ``precision``; coefficient C(d+r-1, r-1)."""
    if r < 0 or precision < 0:
        raise ValueError("r and precision must be nonnegative")
    if r == 0:
        coeffs = tuple(int(d == 0) for d in range(precision + 1))
    else:
        coeffs = tuple(comb(d + r - 1, r - 1) for d in range(precision + 1))
    return PoincareSeries(coeffs, f"1/(1-q)^{r}")


def divide_by_one_minus_q(s: PoincareSeries, times: int) -> PoincareSeries:
    """Divide by (1-q) ``times`` times via running partial sums."""
    coeffs = list(s.coefficients)
    for _ in range(times):
        acc = 0
        for d, c in enumerate(coeffs):
            acc += c
            coeffs[d] = acc
    return PoincareSeries(tuple(coeffs))
