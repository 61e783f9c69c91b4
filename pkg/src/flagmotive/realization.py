"""Realizations of the flag motive: KH, equivariant K-groups, completed K_0, Chow.

Every module produced here is free with basis the Schubert classes [C_w];
only ranks, gradings and coefficient-ring descriptors are computed.  Higher
K-groups of the base stay symbolic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cellular import FlagVarietyModel, flag_model, assemble_motive
from .character import (
    CompletedElement,
    augmentation_generators,
    complete,
    free_module_presentation,
)
from .errors import NegativeDegree, ShiftPresent, VerificationMismatch
from .polynomial import (
    PoincareSeries,
    QPolynomial,
    divide_by_one_minus_q,
    inverse_power_of_one_minus_q,
    series_from_polynomial,
)
from .presentation import ModulePresentation
from .rootdata import RootDatum
from .tate import TateMotive
from .weyl import word_str

BOTT_NOTE = "grading collapsed by Bott periodicity"
TOR_CHECK_DEGREE = 3


def schubert_basis(model: FlagVarietyModel) -> tuple[tuple[str, ...], tuple[int, ...]]:
    labels = tuple(f"[C_{word_str(w.word)}]" for w in model.weyl)
    return labels, tuple(w.length for w in model.weyl)


def kh_decomposition(motive: TateMotive, labels=None) -> ModulePresentation:
    """One KH(base) generator per summand; twists survive only as a recorded grading."""
    if not motive.is_shift_free:
        raise ShiftPresent("KH decomposition expects a shift-free motive")
    twists = motive.twists()
    if labels is None:
        labels = [f"1<{n}>#{k}" for k, n in enumerate(twists)]
    labels = tuple(labels)
    if len(labels) != len(twists):
        raise ValueError("one label per summand required")
    return ModulePresentation(
        f"KH({motive.base})", labels, tuple(twists), notes=(BOTT_NOTE,) if twists else ()
    )


def kh_flag(datum: RootDatum, budget: int | None = None) -> ModulePresentation:
    model = flag_model(datum, budget)
    motive = assemble_motive(model.filtration, "BT")
    labels, _ = schubert_basis(model)
    # Summands of the motive come out sorted by twist, as do the Weyl elements.
    return kh_decomposition(motive, labels)


def equivariant_k_groups(
    datum: RootDatum, i: int = 0, budget: int | None = None
) -> ModulePresentation:
    """K_i^T(G/B) as the free K_i^T(S)-module on the Schubert classes."""
    if i < 0:
        raise NegativeDegree(f"K_{i}: only connective degrees i >= 0 are described")
    model = flag_model(datum, budget)
    labels, grading = schubert_basis(model)
    ring = "K_0^T(S) = R(T)" if i == 0 else f"K_{i}^T(S)"
    return free_module_presentation(len(labels), datum.torus_rank, labels, grading, ring)


def rational_ki_presentation(
    datum: RootDatum, i: int = 0, base_is_field: bool = True, budget: int | None = None
) -> ModulePresentation:
    """K_i^T(G/B)_Q over a field: K_i(k)_Q (x)_Q R(T)_Q^|W|, the first factor symbolic."""
    if not base_is_field:
        raise ValueError("the rational presentation is only stated over a field")
    if i < 0:
        raise NegativeDegree(f"K_{i}: only connective degrees i >= 0 are described")
    model = flag_model(datum, budget)
    labels, grading = schubert_basis(model)
    return ModulePresentation(
        "R(T)_Q",
        labels,
        grading,
        symbolic_factor=None if i == 0 else f"K_{i}(k)_Q",
        notes=("K_0(k)_Q = Q",) if i == 0 else ("K_i(k)_Q is not computed",),
    )


def completed_ring_descriptor(torus_rank: int, precision: int) -> str:
    if torus_rank == 0:
        return "Q"
    xs = "x" if torus_rank == 1 else ",".join(f"x{k + 1}" for k in range(torus_rank))
    return f"Q[[{xs}]] / (deg > {precision})"


@dataclass(frozen=True)
class IdentityReport:
    group: str
    precision: int
    left: ModulePresentation
    right: ModulePresentation
    coefficient_ring: str
    ideal_generators: tuple[CompletedElement, ...]
    higher_tor: dict = field(default_factory=dict)

    @property
    def ranks_equal(self) -> bool:
        return self.left.rank == self.right.rank

    @property
    def tor_vanishes(self) -> bool:
        return all(v == 0 for v in self.higher_tor.values())

    @property
    def holds(self) -> bool:
        return self.ranks_equal and self.tor_vanishes


def completed_k0_identity(
    datum: RootDatum, precision: int = 10, budget: int | None = None
) -> IdentityReport:
    """Compare both sides of the completed K_0 tensor identity at rank level.

    Left: the completion of the free R(T)-module K_0^T(G/B).  Right: the
    non-equivariant K_0(G/B)_Q, free on the Schubert classes, tensored with
    the completed coefficient ring.  Freeness of the right factor makes every
    higher Tor vanish, so the Tor spectral sequence collapses to the tensor.
    """
    if precision < 0:
        raise ValueError("precision must be nonnegative")
    model = flag_model(datum, budget)
    ring = completed_ring_descriptor(datum.torus_rank, precision)

    equivariant = equivariant_k_groups(datum, 0, budget)
    left = ModulePresentation(
        f"({equivariant.coefficient_ring})^ completed = {ring}",
        equivariant.basis,
        equivariant.grading,
        equivariant.relations,
    )

    # K_0(G/B)_Q is free over K_0(S)_Q = Q on the cells: rank = W(1).
    nonequivariant = assemble_motive(model.filtration, "S")
    labels, grading = schubert_basis(model)
    k0 = ModulePresentation("K_0(S)_Q = Q", labels, grading)
    if k0.rank != nonequivariant.rank:
        raise VerificationMismatch("Schubert basis and cellular motive disagree in rank")
    right = ModulePresentation(
        f"K_0(G/B)_Q (x)_Q {ring}", k0.basis, k0.grading, k0.relations
    )

    gens = tuple(complete(g, precision) for g in augmentation_generators(datum.torus_rank))
    if any(g.constant_term() != 0 for g in gens):
        raise VerificationMismatch("augmentation ideal does not map into the maximal ideal")

    return IdentityReport(
        datum.label,
        precision,
        left,
        right,
        ring,
        gens,
        k0.higher_tor(TOR_CHECK_DEGREE),
    )


def chow_poincare(
    datum: RootDatum, precision: int = 10, budget: int | None = None
) -> tuple[QPolynomial, PoincareSeries]:
    """(W(q), W(q)/(1-q)^r through q^precision) for A*(G/B) and A*_T(G/B).

    The series is computed twice, by repeated division by (1-q) and as the
    product with the expansion of 1/(1-q)^r; a disagreement is an error.
    """
    if precision < 0:
        raise ValueError("precision must be nonnegative")
    model = flag_model(datum, budget)
    poly = assemble_motive(model.filtration, "S").twist_polynomial()
    r = datum.torus_rank
    by_division = divide_by_one_minus_q(series_from_polynomial(poly, precision), r)
    by_product = series_from_polynomial(poly, precision) * inverse_power_of_one_minus_q(
        r, precision
    )
    if by_division.coefficients != by_product.coefficients:
        raise VerificationMismatch("equivariant Chow series disagrees with W(q)/(1-q)^r")
    closed = f"({poly})/(1-q)^{r}" if r else str(poly)
    return poly, PoincareSeries(by_product.coefficients, closed)


def series_json(series: PoincareSeries) -> dict:
    return {
        "precision": series.precision,
        "coefficients": list(series.coefficients),
        "closed_form": series.closed_form,
    }


def report_json(
    group: str,
    theory: str,
    presentation: ModulePresentation,
    series: PoincareSeries | None = None,
    **extra,
) -> dict:
    out = {
        "group": group,
        "theory": theory,
        "rank": presentation.rank,
        "basis": list(presentation.basis),
        "coefficient_ring": presentation.coefficient_ring,
        "series": series_json(series) if series is not None else {},
    }
    out.update(extra)
    return out
