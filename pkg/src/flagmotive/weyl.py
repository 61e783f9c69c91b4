"""Weyl group enumeration, lengths, Bruhat order and Poincaré polynomials.

Elements are integer matrices acting on simple-root coordinates.  Words are
tuples of 0-based simple-reflection indices; they are printed 1-based
(``s1s2``) for humans.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field

from .errors import BudgetExceeded
from .polynomial import QPolynomial
from .rootdata import Matrix, RootSystem, Vector

DEFAULT_BUDGET = 10**7
ORACLE_MAX_RANK = 4

PoincarePolynomial = QPolynomial


def default_budget() -> int:
    raw = os.environ.get("FLAGMOTIVE_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def identity(n: int) -> Matrix:
    return tuple(tuple(int(r == c) for c in range(n)) for r in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b)) if b else []
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def apply(m: Matrix, v: Vector) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def _times_simple(m: Matrix, cartan_row: tuple[int, ...], i: int) -> Matrix:
    # Right multiplication by s_i: column j picks up -a_ij times column i.
    return tuple(
        tuple(x - a * row[i] for x, a in zip(row, cartan_row)) for row in m
    )


def word_str(word: tuple[int, ...]) -> str:
    return "".join(f"s{i + 1}" for i in word) or "e"


@dataclass(frozen=True)
class WeylElement:
    word: tuple[int, ...]
    matrix: Matrix = field(compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return word_str(self.word)


@dataclass(frozen=True)
class WeylGroup:
    roots: RootSystem
    elements: tuple[WeylElement, ...]
    _index: dict = field(repr=False, compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def longest(self) -> WeylElement:
        return self.elements[-1]

    @property
    def rank(self) -> int:
        return self.roots.rank

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def element(self, matrix: Matrix) -> WeylElement:
        return self._index[matrix]

    def from_word(self, word) -> WeylElement:
        m = identity(self.rank)
        for i in word:
            m = matmul(m, self.roots.simple_reflections[i])
        return self._index[m]

    def multiply(self, u: WeylElement, w: WeylElement) -> WeylElement:
        return self._index[matmul(u.matrix, w.matrix)]

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.from_word(tuple(reversed(w.word)))

    def length_census(self) -> Counter:
        return Counter(w.length for w in self.elements)


def generate_weyl_group(roots: RootSystem, budget: int | None = None) -> WeylGroup:
    """Breadth-first closure under right multiplication by simple reflections.

    Each level is kept in lexicographic order of words and extended by s_i in
    increasing i, so the first word reaching an element is its lexicographically
    least reduced word and the BFS depth is its length.
    """
    budget = default_budget() if budget is None else budget
    n = roots.rank
    cartan = roots.datum.cartan.entries
    e = WeylElement((), identity(n))
    index: dict[Matrix, WeylElement] = {e.matrix: e}
    elements = [e]
    level = [e]
    while level:
        nxt = []
        for u in level:
            for i in range(n):
                m = _times_simple(u.matrix, cartan[i], i)
                if m in index:
                    continue
                v = WeylElement(u.word + (i,), m)
                index[m] = v
                nxt.append(v)
                elements.append(v)
                if len(elements) > budget:
                    raise BudgetExceeded(
                        f"|W| exceeds the enumeration budget of {budget}"
                    )
        level = nxt
    return WeylGroup(roots, tuple(elements), index)


def length(w: WeylElement) -> int:
    return w.length


def inversion_count(roots: RootSystem, m: Matrix) -> int:
    """#{alpha > 0 : w(alpha) < 0}."""
    count = 0
    for alpha in roots.positive_roots:
        if any(x < 0 for x in apply(m, alpha)):
            count += 1
    return count


def has_right_descent(m: Matrix, i: int) -> bool:
    # w s_i < w  iff  w(alpha_i) < 0; column i of m is w(alpha_i).
    return any(row[i] < 0 for row in m)


def left_greedy_word(roots: RootSystem, m: Matrix) -> tuple[int, ...]:
    """Lexicographically least reduced word, built from left descents."""
    word = []
    n = roots.rank
    while m != identity(n):
        # s_i is a left descent iff it lowers the inversion count.
        base = inversion_count(roots, m)
        for i in range(n):
            cand = matmul(roots.simple_reflections[i], m)
            if inversion_count(roots, cand) < base:
                word.append(i)
                m = cand
                break
    return tuple(word)


def poincare_polynomial(group: WeylGroup) -> QPolynomial:
    return QPolynomial(group.length_census())


def bruhat_leq(group: WeylGroup, u: WeylElement, w: WeylElement) -> bool:
    """u <= w in Bruhat order.

    Walks the canonical reduced word of w from the right.  With s the current
    last letter: if s is a right descent of u then u <= w iff us <= ws,
    otherwise u <= w iff u <= ws.  The result is u <= e, i.e. u reduced to e.
    """
    if u.length > w.length:
        return False
    cartan = group.roots.datum.cartan.entries
    m = u.matrix
    for i in reversed(w.word):
        if has_right_descent(m, i):
            m = _times_simple(m, cartan[i], i)
    return m == identity(group.rank)


def oracle_weyl_group(
    roots: RootSystem, budget: int | None = None, max_rank: int = ORACLE_MAX_RANK
) -> set[Matrix]:
    """Brute-force matrix closure; no words, no lengths.  Used for cross-checks."""
    if roots.rank > max_rank:
        raise ValueError(f"oracle limited to rank <= {max_rank}, got {roots.rank}")
    budget = default_budget() if budget is None else budget
    gens = roots.simple_reflections
    found = {identity(roots.rank)}
    frontier = list(found)
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                b = matmul(g, a)
                if b not in found:
                    found.add(b)
                    new.append(b)
                    if len(found) > budget:
                        raise BudgetExceeded(f"|W| exceeds the enumeration budget of {budget}")
        frontier = new
    return found


def oracle_length_histogram(roots: RootSystem, matrices) -> Counter:
    return Counter(inversion_count(roots, m) for m in matrices)
