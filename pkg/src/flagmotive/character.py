"""The representation ring R(T) = Z[X*(T)] and its completion at the augmentation ideal.

Elements of R(T) are Laurent polynomials in t_1..t_r.  The completion is
realized as power series in x_i = 1 - t_i, truncated at a total degree.
Coefficients are Python ints, or ``Fraction`` for the rational variant.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb
from numbers import Rational
from typing import Iterable, Mapping

from .errors import RankMismatch, SpecSyntaxError
from .presentation import ModulePresentation

DEFAULT_PRECISION = 10

Exponent = tuple[int, ...]


def _clean(terms: Mapping[Exponent, Rational]) -> dict[Exponent, Rational]:
    out = {}
    for e, c in terms.items():
        if c:
            if isinstance(c, Fraction) and c.denominator == 1:
                c = c.numerator
            out[tuple(e)] = c
    return dict(sorted(out.items()))


def _fmt_coef(c) -> str:
    return str(c)


def _render(terms: Mapping[Exponent, Rational], names: list[str], order_key) -> str:
    if not terms:
        return "0"
    pieces = []
    for e in sorted(terms, key=order_key):
        c = terms[e]
        mono = "*".join(
            (n if k == 1 else f"{n}^{k}") for n, k in zip(names, e) if k
        )
        mag = abs(c)
        if not mono:
            body = _fmt_coef(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt_coef(mag)}*{mono}"
        pieces.append(("-" if c < 0 else "+", body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def variable_names(prefix: str, rank: int) -> list[str]:
    return [prefix] if rank == 1 else [f"{prefix}{i + 1}" for i in range(rank)]


class CharacterRingElement:
    """Laurent polynomial sum c_lambda t^lambda over the character lattice Z^rank."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Exponent, Rational] | None = None):
        self.rank = rank
        for e in terms or {}:
            if len(e) != rank:
                raise RankMismatch(f"exponent {e} does not have length {rank}")
        self.terms = _clean(terms or {})

    @classmethod
    def constant(cls, rank: int, c=1) -> CharacterRingElement:
        return cls(rank, {(0,) * rank: c})

    @classmethod
    def character(cls, exponent: Iterable[int], c=1) -> CharacterRingElement:
        e = tuple(exponent)
        return cls(len(e), {e: c})

    @classmethod
    def variable(cls, rank: int, i: int) -> CharacterRingElement:
        return cls.character(tuple(int(j == i) for j in range(rank)))

    def _coerce(self, other) -> CharacterRingElement:
        if isinstance(other, CharacterRingElement):
            if other.rank != self.rank:
                raise RankMismatch(f"torus ranks differ: {self.rank} vs {other.rank}")
            return other
        if isinstance(other, Rational):
            return CharacterRingElement.constant(self.rank, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return CharacterRingElement(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return CharacterRingElement(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials are invertible in R(T)")
            ((e, c),) = self.terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials +-t^lambda are invertible")
            return CharacterRingElement(self.rank, {tuple(-x * -k for x in e): c**-k})
        out = CharacterRingElement.constant(self.rank)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = CharacterRingElement.constant(self.rank, other)
        return (
            isinstance(other, CharacterRingElement)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.rank, tuple(self.terms.items())))

    def __str__(self):
        return _render(
            self.terms,
            variable_names("t", self.rank),
            lambda e: (sum(e), tuple(-x for x in e)),
        )

    def __repr__(self):
        return f"CharacterRingElement({self})"

    def to_json(self) -> dict:
        return {"terms": [{"exp": list(e), "coef": str(c)} for e, c in self.terms.items()]}


def multiply(a: CharacterRingElement, b: CharacterRingElement) -> CharacterRingElement:
    if a.rank != b.rank:
        raise RankMismatch(f"torus ranks differ: {a.rank} vs {b.rank}")
    out: dict[Exponent, Rational] = {}
    for e1, c1 in a.terms.items():
        for e2, c2 in b.terms.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return CharacterRingElement(a.rank, out)


def augmentation(a: CharacterRingElement):
    """Virtual rank: evaluate every t_i at 1."""
    return sum(a.terms.values())


# -- completion -----------------------------------------------------------


class CompletedElement:
    """Power series in x_i = 1 - t_i, known modulo total degree > precision."""

    __slots__ = ("rank", "precision", "series")

    def __init__(self, rank: int, precision: int, series: Mapping[Exponent, Rational]):
        if precision < 0:
            raise ValueError("precision must be nonnegative")
        self.rank = rank
        self.precision = precision
        self.series = _clean({e: c for e, c in series.items() if sum(e) <= precision})

    @classmethod
    def one(cls, rank: int, precision: int) -> CompletedElement:
        return cls(rank, precision, {(0,) * rank: 1})

    def truncate(self, precision: int) -> CompletedElement:
        if precision > self.precision:
            raise ValueError("cannot raise precision by truncation")
        return CompletedElement(self.rank, precision, self.series)

    def constant_term(self):
        return self.series.get((0,) * self.rank, 0)

    def __mul__(self, other: CompletedElement) -> CompletedElement:
        if other.rank != self.rank:
            raise RankMismatch(f"torus ranks differ: {self.rank} vs {other.rank}")
        n = min(self.precision, other.precision)
        out: dict[Exponent, Rational] = {}
        for e1, c1 in self.series.items():
            d1 = sum(e1)
            for e2, c2 in other.series.items():
                if d1 + sum(e2) > n:
                    continue
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return CompletedElement(self.rank, n, out)

    def __add__(self, other: CompletedElement) -> CompletedElement:
        if other.rank != self.rank:
            raise RankMismatch(f"torus ranks differ: {self.rank} vs {other.rank}")
        out = dict(self.series)
        for e, c in other.series.items():
            out[e] = out.get(e, 0) + c
        return CompletedElement(self.rank, min(self.precision, other.precision), out)

    def __eq__(self, other):
        return (
            isinstance(other, CompletedElement)
            and self.rank == other.rank
            and self.precision == other.precision
            and self.series == other.series
        )

    def __hash__(self):
        return hash((self.rank, self.precision, tuple(self.series.items())))

    def __str__(self):
        body = _render(
            self.series,
            variable_names("x", self.rank),
            lambda e: (sum(e), tuple(-x for x in e)),
        )
        return f"{body} + O(deg {self.precision + 1})"

    def __repr__(self):
        return f"CompletedElement({self})"

    def to_json(self) -> dict:
        return {
            "precision": self.precision,
            "terms": [{"exp": list(e), "coef": str(c)} for e, c in self.series.items()],
        }


@lru_cache(maxsize=None)
def _power_of_one_minus_x(k: int, precision: int) -> tuple[int, ...]:
    """Coefficients of (1 - x)^k through x^precision, for any integer k."""
    if k >= 0:
        return tuple((-1) ** j * comb(k, j) for j in range(precision + 1))
    m = -k
    return tuple(comb(m + j - 1, j) for j in range(precision + 1))


def complete(a: CharacterRingElement, precision: int = DEFAULT_PRECISION) -> CompletedElement:
    """Image of ``a`` in the I_T-adic completion, truncated at total degree ``precision``."""
    if precision < 0:
        raise ValueError("precision must be nonnegative")
    r = a.rank
    out: dict[Exponent, Rational] = {}
    for e, c in a.terms.items():
        factors = [_power_of_one_minus_x(k, precision) for k in e]
        for idx in product(range(precision + 1), repeat=r):
            if sum(idx) > precision:
                continue
            coef = c
            for f, j in zip(factors, idx):
                coef *= f[j]
                if not coef:
                    break
            if coef:
                out[idx] = out.get(idx, 0) + coef
    return CompletedElement(r, precision, out)


def augmentation_generators(rank: int) -> list[CharacterRingElement]:
    """1 - t_i, which generate I_T."""
    return [1 - CharacterRingElement.variable(rank, i) for i in range(rank)]


def free_module_presentation(
    rank_count: int,
    torus_rank: int,
    basis: Iterable[str] | None = None,
    grading: Iterable[int] | None = None,
    coefficient_ring: str | None = None,
) -> ModulePresentation:
    if rank_count < 0:
        raise ValueError("rank_count must be nonnegative")
    labels = tuple(basis) if basis is not None else tuple(f"b{k}" for k in range(rank_count))
    if len(labels) != rank_count:
        raise ValueError(f"expected {rank_count} basis labels, got {len(labels)}")
    ring = coefficient_ring or f"R(T) = Z[t1^+-1..t{torus_rank}^+-1]"
    return ModulePresentation(ring, labels, tuple(grading) if grading is not None else ())


# -- parsing ------------------------------------------------------------------


def parse_laurent(text: str, rank: int) -> CharacterRingElement:
    """Parse e.g. ``"t^-1"``, ``"3*t1 - 2"``, ``"(t1 + t2)*(t1 - t2)"``.

    Multiplication must be explicit.  ``t`` names the single variable when
    ``rank == 1``; otherwise use ``t1 .. tr``.  Division is allowed only by
    nonzero constants, giving rational coefficients.
    """
    names = {f"t{i + 1}": i for i in range(rank)}
    if rank == 1:
        names["t"] = 0
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise SpecSyntaxError(f"cannot parse element {text!r}: {exc.msg}") from None

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return CharacterRingElement.constant(rank, node.value)
        if isinstance(node, ast.Name):
            if node.id not in names:
                raise SpecSyntaxError(f"unknown variable {node.id!r} for torus rank {rank}")
            return CharacterRingElement.variable(rank, names[node.id])
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            left = ev(node.left)
            if isinstance(node.op, ast.Pow):
                k = _const_int(node.right)
                try:
                    return left**k
                except ValueError as exc:
                    raise SpecSyntaxError(str(exc)) from None
            right = ev(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                d = _as_constant(right)
                if d is None or d == 0:
                    raise SpecSyntaxError("division only by nonzero constants")
                return CharacterRingElement(
                    rank, {e: Fraction(c) / d for e, c in left.terms.items()}
                )
        raise SpecSyntaxError(f"unsupported syntax in element {text!r}")

    def _const_int(node) -> int:
        sign = 1
        while isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            if isinstance(node.op, ast.USub):
                sign = -sign
            node = node.operand
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return sign * node.value
        raise SpecSyntaxError("exponents must be integer literals")

    return ev(tree)


def _as_constant(a: CharacterRingElement):
    if not a.terms:
        return 0
    if list(a.terms) == [(0,) * a.rank]:
        return a.terms[(0,) * a.rank]
    return None
