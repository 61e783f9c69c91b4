"""Cross-checks run by ``flagmotive verify``."""

from __future__ import annotations

from dataclasses import dataclass

from .cellular import assemble_with_vanishing_waiver, check_strictness, flag_model
from .realization import chow_poincare, completed_k0_identity, equivariant_k_groups
from .rootdata import RootDatum
from .weyl import (
    identity,
    inversion_count,
    left_greedy_word,
    matmul,
    oracle_length_histogram,
    oracle_weyl_group,
    poincare_polynomial,
)

# Exhaustive per-element checks stop here; F4 fits, E6 does not.
EXHAUSTIVE_LIMIT = 5000


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def _check(name: str, cond: bool, detail: str = "") -> Check:
    return Check(name, "pass" if cond else "fail", detail)


def run_checks(
    datum: RootDatum, max_rank: int = 4, precision: int = 6, budget: int | None = None
) -> list[Check]:
    model = flag_model(datum, budget)
    weyl = model.weyl
    roots = weyl.roots
    poly = poincare_polynomial(weyl)
    out: list[Check] = []

    n = roots.rank
    out.append(
        _check(
            "reflections are involutions",
            all(matmul(s, s) == identity(n) for s in roots.simple_reflections),
        )
    )

    if n <= max_rank:
        mats = oracle_weyl_group(roots, budget, max_rank=max_rank)
        out.append(
            _check(
                "oracle matrix set",
                mats == {w.matrix for w in weyl},
                f"|oracle| = {len(mats)}, |W| = {weyl.order}",
            )
        )
        out.append(
            _check(
                "oracle length histogram",
                oracle_length_histogram(roots, mats) == weyl.length_census(),
            )
        )
    else:
        out.append(Check("oracle matrix set", "skip", f"rank {n} > --max-rank {max_rank}"))

    out.append(
        _check(
            "l(w0) = number of positive roots",
            weyl.longest.length == len(roots.positive_roots),
            f"l(w0) = {weyl.longest.length}",
        )
    )
    out.append(
        _check(
            "w0 is the unique longest element",
            sum(w.length == weyl.longest.length for w in weyl) == 1,
        )
    )

    if weyl.order <= EXHAUSTIVE_LIMIT:
        out.append(
            _check(
                "l(w) = inversion count",
                all(w.length == inversion_count(roots, w.matrix) for w in weyl),
            )
        )
        out.append(
            _check(
                "canonical word = left-greedy lex-least word",
                all(w.word == left_greedy_word(roots, w.matrix) for w in weyl),
            )
        )
        out.append(
            _check(
                "l(w s_i) = l(w) +- 1",
                all(
                    abs(weyl.element(matmul(w.matrix, s)).length - w.length) == 1
                    for w in weyl
                    for s in roots.simple_reflections
                ),
            )
        )
    else:
        out.append(Check("per-element checks", "skip", f"|W| = {weyl.order}"))

    out.append(_check("Poincare polynomial palindromic", poly.is_palindromic()))
    out.append(_check("Poincare coefficients sum to |W|", poly(1) == weyl.order))
    out.append(
        _check(
            "Poincare end coefficients are 1",
            poly.coefficient(0) == 1 and poly.coefficient(poly.degree) == 1,
        )
    )

    out.append(_check("flag filtration strict", check_strictness(model.filtration)))
    motive = assemble_with_vanishing_waiver(model.filtration)
    out.append(
        _check("flag motive twists = Poincare polynomial", motive.twist_polynomial() == poly)
    )

    w_poly, series = chow_poincare(datum, precision, budget)
    out.append(_check("Chow series = W(q)/(1-q)^r", w_poly == poly, str(series)))
    out.append(
        _check(
            "K_i^T rank = |W|", equivariant_k_groups(datum, 0, budget).rank == weyl.order
        )
    )
    report = completed_k0_identity(datum, precision, budget)
    out.append(_check("completed K_0 identity", report.holds))
    return out
