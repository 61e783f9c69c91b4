"""T-equivariant motives of flag varieties, computed from a root datum."""

from .cellular import (
    StrictLinearScheme,
    assemble_motive,
    assemble_with_vanishing_waiver,
    check_strictness,
    flag_motive,
    kunneth_factorization,
)
from .character import CharacterRingElement, CompletedElement, augmentation, complete
from .realization import (
    chow_poincare,
    completed_k0_identity,
    equivariant_k_groups,
    kh_decomposition,
    rational_ki_presentation,
)
from .rootdata import RootDatum, generate_root_system, parse_root_datum
from .tate import TateMotive, direct_sum, tensor, vanishing_guard
from .weyl import bruhat_leq, generate_weyl_group, oracle_weyl_group, poincare_polynomial

__version__ = "0.1.0"
