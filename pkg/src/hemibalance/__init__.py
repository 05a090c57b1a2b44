"""Hemispheres, equator balance, and balance probabilities on the N-sphere.

A configuration is a finite set of unit vectors in R^(N+1).  The library
finds the best closed or open hemisphere whose boundary passes through N
of the points, tests the equator-balance property that makes the closed
bound sharp, constructs balanced families exactly, and estimates or
derives the probability that a uniform random configuration is balanced.
"""

from .circle import (
    BudgetExceededError,
    NonGenericError,
    angles_of_configuration,
    configuration_of_angles,
    exact_probability,
    flip_enumeration_count,
    is_balanced_circle,
    sweep_sequence,
)
from .configio import (
    ConfigFileError,
    dumps_configuration,
    loads_configuration,
    read_configuration,
    write_configuration,
)
from .constructions import (
    ExactConfiguration,
    antipodal_config,
    vandermonde_config,
    verify_vandermonde,
)
from .geometry import (
    DegenerateSubsetError,
    Side,
    antipode,
    check_sphere_point,
    cofactor_normals,
    exact_det_sign,
    hyperplane_normal,
    sample_uniform_point,
    side_of,
)
from .hemisphere import (
    BalanceVerdict,
    Configuration,
    GeneralPositionViolation,
    HemisphereReport,
    OpenReport,
    RetriesExhaustedError,
    SideCount,
    best_open_hemisphere,
    closed_bound,
    find_avoiding_pole,
    is_equator_balanced,
    max_closed_hemisphere,
)
from .montecarlo import MonteCarloEstimate, estimate, precision_check, trial

__version__ = "0.1.0"

__all__ = [
    "BalanceVerdict",
    "BudgetExceededError",
    "ConfigFileError",
    "Configuration",
    "DegenerateSubsetError",
    "ExactConfiguration",
    "GeneralPositionViolation",
    "HemisphereReport",
    "MonteCarloEstimate",
    "NonGenericError",
    "OpenReport",
    "RetriesExhaustedError",
    "Side",
    "SideCount",
    "angles_of_configuration",
    "antipodal_config",
    "antipode",
    "best_open_hemisphere",
    "check_sphere_point",
    "closed_bound",
    "cofactor_normals",
    "configuration_of_angles",
    "dumps_configuration",
    "estimate",
    "exact_det_sign",
    "exact_probability",
    "find_avoiding_pole",
    "flip_enumeration_count",
    "hyperplane_normal",
    "is_balanced_circle",
    "is_equator_balanced",
    "loads_configuration",
    "max_closed_hemisphere",
    "precision_check",
    "read_configuration",
    "sample_uniform_point",
    "side_of",
    "sweep_sequence",
    "trial",
    "vandermonde_config",
    "verify_vandermonde",
    "write_configuration",
]
