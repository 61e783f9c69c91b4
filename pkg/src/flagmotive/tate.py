"""Finite direct sums of Tate twists 1<n>[m] over a fixed base."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .errors import BaseMismatch, ShiftPresent
from .polynomial import QPolynomial

TwistPolynomial = QPolynomial


def tate_weight_and_shift(n: int, m: int = 0) -> tuple[int, int]:
    """Rewrite 1<n>[m] as 1(n)[2n + m], using <n> = (n)[2n]."""
    return n, 2 * n + m


def vanishing_guard(n: int, m: int) -> bool:
    """True iff Hom(1<n>[m], 1) is known to vanish, i.e. iff n >= 0.

    Nothing is claimed for n < 0.
    """
    return n >= 0


@dataclass(frozen=True)
class TateMotive:
    """Multiset of summands 1<twist>[shift] stored as ((twist, shift), mult) pairs."""

    summands: tuple[tuple[tuple[int, int], int], ...] = ()
    base: str = "BT"
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        counts: Counter = Counter()
        for (n, m), k in self.summands:
            if k < 0:
                raise ValueError("negative multiplicity")
            counts[(int(n), int(m))] += int(k)
        object.__setattr__(
            self, "summands", tuple(sorted((key, k) for key, k in counts.items() if k))
        )

    @classmethod
    def from_twists(cls, twists: Iterable[int], base: str = "BT", notes=()) -> TateMotive:
        return cls(tuple(((n, 0), 1) for n in twists), base, tuple(notes))

    @classmethod
    def zero(cls, base: str = "BT") -> TateMotive:
        return cls((), base)

    @classmethod
    def unit(cls, base: str = "BT") -> TateMotive:
        return cls((((0, 0), 1),), base)

    @property
    def counts(self) -> Counter:
        return Counter(dict(self.summands))

    @property
    def rank(self) -> int:
        return sum(k for _, k in self.summands)

    @property
    def is_shift_free(self) -> bool:
        return all(m == 0 for (_, m), _ in self.summands)

    def twists(self) -> list[int]:
        """Sorted list of twists with multiplicity (shifts ignored)."""
        return sorted(n for (n, _), k in self.summands for _ in range(k))

    def twist_polynomial(self) -> QPolynomial:
        if not self.is_shift_free:
            raise ShiftPresent("twist polynomial is only defined for shift-free motives")
        if any(n < 0 for (n, _), _ in self.summands):
            raise ValueError("negative twist has no twist-polynomial degree")
        return QPolynomial({n: k for (n, _), k in self.summands})

    def with_notes(self, *notes: str) -> TateMotive:
        return TateMotive(self.summands, self.base, self.notes + notes)

    def __add__(self, other: TateMotive) -> TateMotive:
        return direct_sum(self, other)

    def __mul__(self, other: TateMotive) -> TateMotive:
        return tensor(self, other)

    def __str__(self) -> str:
        if not self.summands:
            return "0"
        parts = []
        for (n, m), k in self.summands:
            s = f"1_{self.base}<{n}>" + (f"[{m}]" if m else "")
            parts.append(s if k == 1 else f"{s}^{k}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        out = []
        for (n, m), k in self.summands:
            entry = {"twist": n, "mult": k}
            if m:
                entry["shift"] = m
            out.append(entry)
        return {"base": self.base, "summands": out}


def _same_base(a: TateMotive, b: TateMotive) -> None:
    if a.base != b.base:
        raise BaseMismatch(f"motives over different bases: {a.base!r} vs {b.base!r}")


def direct_sum(a: TateMotive, b: TateMotive) -> TateMotive:
    _same_base(a, b)
    return TateMotive(a.summands + b.summands, a.base)


def tensor(a: TateMotive, b: TateMotive) -> TateMotive:
    _same_base(a, b)
    out: Counter = Counter()
    for (na, ma), ka in a.summands:
        for (nb, mb), kb in b.summands:
            out[(na + nb, ma + mb)] += ka * kb
    return TateMotive(tuple(out.items()), a.base)
