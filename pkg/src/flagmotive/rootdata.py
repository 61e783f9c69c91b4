"""Root data: parsing, validation and root-system generation.

A split reductive group is encoded by its semisimple Cartan matrix plus the
rank of the character lattice; the difference is the central torus.  All
coordinates are exact integers in the simple-root basis.

Cartan convention: ``cartan[i][j] = <alpha_i^vee, alpha_j>``, so that
``s_i(alpha_j) = alpha_j - cartan[i][j] * alpha_i``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidMatrix, NotFiniteType, SpecSyntaxError

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True)
class CartanMatrix:
    entries: Matrix

    def __post_init__(self):
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        _validate_cartan(entries)

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


@dataclass(frozen=True)
class RootDatum:
    cartan: CartanMatrix
    torus_rank: int
    label: str

    def __post_init__(self):
        if self.torus_rank < self.cartan.size:
            raise InvalidMatrix(
                f"torus_rank {self.torus_rank} is smaller than the semisimple "
                f"rank {self.cartan.size}"
            )

    @property
    def semisimple_rank(self) -> int:
        return self.cartan.size

    @property
    def central_rank(self) -> int:
        return self.torus_rank - self.cartan.size


@dataclass(frozen=True)
class RootSystem:
    datum: RootDatum
    positive_roots: tuple[Vector, ...]
    simple_reflections: tuple[Matrix, ...]

    @property
    def rank(self) -> int:
        return self.datum.semisimple_rank


# -- Cartan validation -------------------------------------------------------


def leading_principal_minors(entries: Matrix) -> list[Fraction]:
    """Exact leading principal minors via fraction-free-enough elimination."""
    n = len(entries)
    a = [[Fraction(x) for x in row] for row in entries]
    minors = []
    det = Fraction(1)
    for k in range(n):
        pivot = a[k][k]
        # A zero pivot means the k-th minor vanishes; later minors are moot.
        if pivot == 0:
            minors.append(Fraction(0))
            minors.extend(Fraction(0) for _ in range(k + 1, n))
            return minors
        det *= pivot
        minors.append(det)
        for r in range(k + 1, n):
            f = a[r][k] / pivot
            if f:
                for c in range(k, n):
                    a[r][c] -= f * a[k][c]
    return minors


def _validate_cartan(entries: Matrix) -> None:
    n = len(entries)
    if any(len(row) != n for row in entries):
        raise InvalidMatrix("Cartan matrix must be square")
    for i in range(n):
        if entries[i][i] != 2:
            raise InvalidMatrix(f"diagonal entry ({i},{i}) is {entries[i][i]}, expected 2")
        for j in range(n):
            if i == j:
                continue
            if entries[i][j] > 0:
                raise InvalidMatrix(f"off-diagonal entry ({i},{j}) is positive")
            if (entries[i][j] == 0) != (entries[j][i] == 0):
                raise InvalidMatrix(f"entries ({i},{j}) and ({j},{i}) disagree on vanishing")
    minors = leading_principal_minors(entries)
    for k, m in enumerate(minors):
        if m <= 0:
            raise NotFiniteType(
                f"leading principal minor of order {k + 1} is {m}; not of finite type"
            )


# -- named types ---------------------------------------------------------------


def _chain(n: int) -> list[list[int]]:
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 2
        if i + 1 < n:
            m[i][i + 1] = m[i + 1][i] = -1
    return m


def named_cartan(cls: str, rank: int) -> Matrix:
    """Standard (Bourbaki-numbered) Cartan matrix of a simple type."""
    cls = cls.upper()
    if cls in _MIN_RANK:
        if rank < _MIN_RANK[cls]:
            raise SpecSyntaxError(f"type {cls} needs rank >= {_MIN_RANK[cls]}, got {rank}")
    elif cls in _EXCEPTIONAL:
        if rank not in _EXCEPTIONAL[cls]:
            raise SpecSyntaxError(f"no exceptional type {cls}{rank}")
    else:
        raise SpecSyntaxError(f"unknown Cartan type {cls!r}")

    if cls == "A":
        m = _chain(rank)
    elif cls == "B":
        m = _chain(rank)
        m[rank - 1][rank - 2] = -2
    elif cls == "C":
        m = _chain(rank)
        m[rank - 2][rank - 1] = -2
    elif cls == "D":
        m = _chain(rank)
        m[rank - 2][rank - 1] = m[rank - 1][rank - 2] = 0
        m[rank - 3][rank - 1] = m[rank - 1][rank - 3] = -1
    elif cls == "E":
        # Bourbaki: 1-3-4-5-6-7-8 chain with node 2 attached to node 4.
        m = [[0] * rank for _ in range(rank)]
        for i in range(rank):
            m[i][i] = 2
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
        for a, b in edges:
            if a <= rank and b <= rank:
                m[a - 1][b - 1] = m[b - 1][a - 1] = -1
    elif cls == "F":
        m = _chain(4)
        m[2][1] = -2
    else:  # G2
        m = [[2, -3], [-1, 2]]
    return tuple(tuple(row) for row in m)


def block_diagonal(blocks: list[Matrix]) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return tuple(tuple(row) for row in out)


_TYPE_RE = re.compile(r"([A-GT])(\d+)$")


def _parse_named(spec: str) -> RootDatum:
    parts = spec.strip().upper().split("X")
    if not parts or any(not p for p in parts):
        raise SpecSyntaxError(f"malformed group spec {spec!r}")
    simple: list[tuple[str, int]] = []
    torus = 0
    for k, part in enumerate(parts):
        m = _TYPE_RE.match(part)
        if m is None:
            raise SpecSyntaxError(f"malformed factor {part!r} in {spec!r}")
        cls, rank = m.group(1), int(m.group(2))
        if cls == "T":
            if k != len(parts) - 1:
                raise SpecSyntaxError("central torus factor 'T<k>' must come last")
            if rank < 1:
                raise SpecSyntaxError("central torus rank must be positive")
            torus = rank
        else:
            simple.append((cls, rank))
    blocks = [named_cartan(c, r) for c, r in simple]
    cartan = CartanMatrix(block_diagonal(blocks))
    return RootDatum(cartan, cartan.size + torus, format_named(simple, torus))


def format_named(simple: list[tuple[str, int]], torus: int = 0) -> str:
    pieces = [f"{c}{r}" for c, r in simple]
    if torus:
        pieces.append(f"T{torus}")
    return "x".join(pieces)


def _parse_json(spec: str) -> RootDatum:
    try:
        obj = json.loads(spec)
    except json.JSONDecodeError as exc:
        raise SpecSyntaxError(f"invalid JSON group spec: {exc}") from None
    if isinstance(obj, list):
        obj = {"cartan": obj}
    if not isinstance(obj, dict) or "cartan" not in obj:
        raise SpecSyntaxError('JSON group spec needs a "cartan" field')
    rows = obj["cartan"]
    if not isinstance(rows, list) or not all(
        isinstance(r, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in r)
        for r in rows
    ):
        raise SpecSyntaxError("cartan must be a list of integer lists")
    cartan = CartanMatrix(tuple(tuple(r) for r in rows))
    torus_rank = obj.get("torus_rank", cartan.size)
    if not isinstance(torus_rank, int) or isinstance(torus_rank, bool):
        raise SpecSyntaxError("torus_rank must be an integer")
    label = obj.get("label") or "cartan" + json.dumps(rows, separators=(",", ":"))
    return RootDatum(cartan, torus_rank, str(label))


def parse_root_datum(spec: str) -> RootDatum:
    """Parse ``"A2"``, ``"A1xB2xT1"``, ``"T2"`` or a JSON Cartan matrix.

    >>> parse_root_datum("a1xa1").label
    'A1xA1'
    """
    if not isinstance(spec, str) or not spec.strip():
        raise SpecSyntaxError("empty group spec")
    s = spec.strip()
    if s[0] in "[{":
        return _parse_json(s)
    return _parse_named(s)


# -- roots -------------------------------------------------------------------


def reflection_matrix(cartan: CartanMatrix, i: int) -> Matrix:
    """Matrix of s_i on root coordinates; only row i differs from identity."""
    n = cartan.size
    return tuple(
        tuple((1 if r == c else 0) - (cartan[i, c] if r == i else 0) for c in range(n))
        for r in range(n)
    )


def reflect(cartan: CartanMatrix, i: int, v: Vector) -> Vector:
    pairing = sum(cartan[i, j] * v[j] for j in range(len(v)))
    return v[:i] + (v[i] - pairing,) + v[i + 1 :]


def is_positive(v: Vector) -> bool:
    return all(x >= 0 for x in v) and any(x > 0 for x in v)


def generate_root_system(datum: RootDatum) -> RootSystem:
    cartan = datum.cartan
    n = cartan.size
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = list(simple)
    while queue:
        beta = queue.pop()
        for i in range(n):
            gamma = reflect(cartan, i, beta)
            if is_positive(gamma) and gamma not in seen:
                seen.add(gamma)
                queue.append(gamma)
    roots = tuple(sorted(seen, key=lambda v: (sum(v), tuple(-x for x in v))))
    reflections = tuple(reflection_matrix(cartan, i) for i in range(n))
    return RootSystem(datum, roots, reflections)
