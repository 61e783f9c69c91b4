"""Strict linear schemes and the localization-splitting assembly of their motives.

A scheme enters only through its stratification: level n lists the ranks of
the vector-bundle pieces of ``X_n minus X_{n-1}``.  When consecutive levels
have strictly increasing ranks, every connecting map lands in a group killed
by :func:`~flagmotive.tate.vanishing_guard`, and the motive is the direct sum
of the twists of all strata.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotProper, SpecSyntaxError, SplittingNotCertified
from .polynomial import PoincareSeries, QPolynomial, inverse_power_of_one_minus_q
from .rootdata import RootDatum, generate_root_system
from .tate import TateMotive, vanishing_guard
from .weyl import WeylGroup, generate_weyl_group

WAIVER_NOTE = "vanishing waiver: Hom(1<n>[-1], 1) = 0 assumed for all n"


@dataclass(frozen=True)
class StratumDescriptor:
    ranks: tuple[int, ...]

    def __post_init__(self):
        ranks = tuple(sorted(int(r) for r in self.ranks))
        if any(r < 0 for r in ranks):
            raise ValueError("stratum ranks must be nonnegative")
        object.__setattr__(self, "ranks", ranks)

    def __bool__(self) -> bool:
        return bool(self.ranks)


@dataclass(frozen=True)
class StrictLinearScheme:
    levels: tuple[StratumDescriptor, ...]
    proper: bool = True
    label: str = ""

    @classmethod
    def from_ranks(cls, levels: Sequence[Sequence[int]], proper: bool = True, label: str = ""):
        return cls(tuple(StratumDescriptor(tuple(lv)) for lv in levels), proper, label)

    @property
    def stratum_count(self) -> int:
        return sum(len(lv.ranks) for lv in self.levels)

    def to_json(self) -> dict:
        return {
            "proper": self.proper,
            "levels": [list(lv.ranks) for lv in self.levels],
            "label": self.label,
        }


def load_filtration(obj) -> StrictLinearScheme:
    """Build a scheme from the filtration JSON object."""
    if not isinstance(obj, dict):
        raise SpecSyntaxError("filtration must be a JSON object")
    levels = obj.get("levels")
    proper = obj.get("proper")
    if not isinstance(proper, bool):
        raise SpecSyntaxError('filtration needs a boolean "proper" field')
    if not isinstance(levels, list) or not all(
        isinstance(lv, list)
        and all(isinstance(r, int) and not isinstance(r, bool) and r >= 0 for r in lv)
        for lv in levels
    ):
        raise SpecSyntaxError('"levels" must be a list of lists of nonnegative integers')
    return StrictLinearScheme.from_ranks(levels, proper, str(obj.get("label", "")))


@dataclass(frozen=True)
class FlagVarietyModel:
    datum: RootDatum
    weyl: WeylGroup
    filtration: StrictLinearScheme


def check_strictness(scheme: StrictLinearScheme) -> bool:
    """max(ranks of level n-1) < min(ranks of level n) across nonempty levels.

    Ranks are compared globally over all components of a level.  Empty levels
    are skipped.
    """
    previous = None
    for level in scheme.levels:
        if not level:
            continue
        if previous is not None and max(previous.ranks) >= min(level.ranks):
            return False
        previous = level
    return True


def _require_proper(scheme: StrictLinearScheme) -> None:
    if not scheme.proper:
        raise NotProper(
            f"scheme {scheme.label or '<unnamed>'} is not proper; compactly supported "
            "and plain motives cannot be identified"
        )


def _fold(scheme: StrictLinearScheme, base_label: str, certify: bool) -> TateMotive:
    _require_proper(scheme)
    motive = TateMotive.zero(base_label)
    seen: set[int] = set()
    for n, level in enumerate(scheme.levels):
        new = set(level.ranks)
        if certify:
            # Connecting map 1<i_n> -> 1<i_k>[1] lives in Hom(1<i_n - i_k>[-1], 1).
            for i_k in seen:
                for i_n in new:
                    if not vanishing_guard(i_n - i_k, -1):
                        raise SplittingNotCertified(
                            f"level {n}: Hom(1<{i_n - i_k}>[-1], 1) is not known to vanish"
                        )
        motive = motive + TateMotive.from_twists(level.ranks, base_label)
        seen |= new
    return motive


def assemble_motive(scheme: StrictLinearScheme, base_label: str = "BT") -> TateMotive:
    """Motive of ``[X/H]`` over ``BH`` as a sum of twists, one per stratum."""
    _require_proper(scheme)
    if not check_strictness(scheme):
        raise SplittingNotCertified(
            "filtration is not strict and no vanishing waiver was given; "
            "the localization sequences are not known to split"
        )
    return _fold(scheme, base_label, certify=True)


def assemble_with_vanishing_waiver(
    scheme: StrictLinearScheme, base_label: str = "BT"
) -> TateMotive:
    """Same sum, trusting the caller that Hom(1<n>[-1], 1) = 0 for every n."""
    return _fold(scheme, base_label, certify=False).with_notes(WAIVER_NOTE)


def flag_model(datum: RootDatum, budget: int | None = None) -> FlagVarietyModel:
    weyl = generate_weyl_group(generate_root_system(datum), budget)
    census = weyl.length_census()
    top = max(census)
    levels = [[n] * census.get(n, 0) for n in range(top + 1)]
    filtration = StrictLinearScheme.from_ranks(levels, True, f"{datum.label} flag variety")
    return FlagVarietyModel(datum, weyl, filtration)


def flag_motive(datum: RootDatum, budget: int | None = None) -> TateMotive:
    """Motive of ``[T\\G/B]`` over ``BT``: one summand 1<l(w)> per Weyl element."""
    model = flag_model(datum, budget)
    return assemble_motive(model.filtration, "BT")


def kunneth_factorization(
    datum: RootDatum, precision: int = 10, budget: int | None = None
) -> tuple[QPolynomial, PoincareSeries]:
    """(twist polynomial of M(G/B), Poincaré series of M(BT) to ``precision``)."""
    poly = flag_motive(datum, budget).twist_polynomial()
    return poly, inverse_power_of_one_minus_q(datum.torus_rank, precision)
