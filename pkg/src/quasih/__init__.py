"""Exact affine extensions of the noncrystallographic Coxeter groups
H2, H3, H4 and the finite quasicrystal fragments they generate."""

from .golden import CycloInt, GoldenInt, GoldenRational, TAU, TAU_CONJ, xi_pow
from .rootsystem import (
    AlphaVector,
    CartanMatrix,
    GroupId,
    OmegaVector,
    alpha_from_omega,
    cartan,
    cartan_inverse,
    cartesian,
    cyclo_from_omega,
    highest_root,
    norm_sq,
    omega_from_alpha,
    omega_from_cyclo,
    roots,
    roots_omega,
)
from .affine import (
    AffineOperator,
    a2_lattice_demo,
    reference_diff,
    reference_table,
    enumerate_generalized,
    extended_cartan,
    operators,
    verify_conditions,
    verify_identities,
)
from .fragment import (
    Fragment,
    OrbitRecord,
    ResourceLimitError,
    Shell,
    check_tenfold,
    generate,
    generate_rootsum,
    orbits,
    shells,
    to_dominant,
)
from .lineanalysis import (
    LineSet,
    Window1D,
    decompose,
    deficiencies_1d,
    levels,
    line_bruteforce,
    line_closed_form,
    line_contains,
    min_distance_compare,
    mn_nn,
    rootsum_witnesses,
    scaling_check,
    sigma_1d,
)
from .cutproject import (
    CutProjectSet2D,
    DecagonWindow,
    decagon_contains,
    decagon_contains_exact,
    deficiencies_2d,
    sigma_2d,
)

__version__ = "0.1.0"

__all__ = [
    "AffineOperator",
    "AlphaVector",
    "CartanMatrix",
    "CutProjectSet2D",
    "CycloInt",
    "DecagonWindow",
    "Fragment",
    "GoldenInt",
    "GoldenRational",
    "GroupId",
    "LineSet",
    "OmegaVector",
    "OrbitRecord",
    "ResourceLimitError",
    "Shell",
    "TAU",
    "TAU_CONJ",
    "Window1D",
    "a2_lattice_demo",
    "alpha_from_omega",
    "reference_diff",
    "reference_table",
    "cartan",
    "cartan_inverse",
    "cartesian",
    "check_tenfold",
    "cyclo_from_omega",
    "decagon_contains",
    "decagon_contains_exact",
    "decompose",
    "deficiencies_1d",
    "deficiencies_2d",
    "enumerate_generalized",
    "extended_cartan",
    "generate",
    "generate_rootsum",
    "highest_root",
    "levels",
    "line_bruteforce",
    "line_closed_form",
    "line_contains",
    "min_distance_compare",
    "mn_nn",
    "norm_sq",
    "omega_from_alpha",
    "omega_from_cyclo",
    "operators",
    "orbits",
    "roots",
    "roots_omega",
    "rootsum_witnesses",
    "scaling_check",
    "shells",
    "sigma_1d",
    "sigma_2d",
    "to_dominant",
    "verify_conditions",
    "verify_identities",
    "xi_pow",
]
