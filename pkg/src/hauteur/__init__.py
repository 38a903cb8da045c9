from __future__ import annotations

from .compositum import (
    ExtensionMultiset,
    check_invariants,
    crude_bound,
    equality_case,
    inertia_bound,
    inertia_factor,
    ramification_bound,
    two_field_inertia_bound,
)
from .config import Config, configure, get_config
from .density import DensityQuery, conjecture_gap, natural_density
from .exactmath import Factorization, a_r, gcd_of_products, lcm_list, valuation
from .exceptions import (
    CensusLimitError,
    HauteurError,
    InputError,
    NonPositiveBoundError,
    PrecisionError,
    ScenarioError,
)
from .heightbound import (
    BaseFieldData,
    BoundReport,
    TowerScenario,
    evaluate_scenario,
    find_k,
    height_bound,
    lambda_beta,
)
from .heightoracle import AlgebraicNumber, is_root_of_unity, northcott_census, weil_height
from .krasner import (
    ExtensionProfile,
    LocalField,
    bound_N_e,
    count_extensions,
    count_totally_ramified,
    count_with_profile,
    enumerate_profiles,
)
from .scenario import load_scenario
from .types import DensityKind, ExactRational

__all__ = [
    "AlgebraicNumber",
    "BaseFieldData",
    "BoundReport",
    "CensusLimitError",
    "Config",
    "DensityKind",
    "DensityQuery",
    "ExactRational",
    "ExtensionMultiset",
    "ExtensionProfile",
    "Factorization",
    "HauteurError",
    "InputError",
    "LocalField",
    "NonPositiveBoundError",
    "PrecisionError",
    "ScenarioError",
    "TowerScenario",
    "a_r",
    "bound_N_e",
    "check_invariants",
    "configure",
    "conjecture_gap",
    "count_extensions",
    "count_totally_ramified",
    "count_with_profile",
    "crude_bound",
    "enumerate_profiles",
    "equality_case",
    "evaluate_scenario",
    "find_k",
    "gcd_of_products",
    "get_config",
    "height_bound",
    "inertia_bound",
    "inertia_factor",
    "is_root_of_unity",
    "lambda_beta",
    "lcm_list",
    "load_scenario",
    "natural_density",
    "northcott_census",
    "ramification_bound",
    "two_field_inertia_bound",
    "valuation",
    "weil_height",
]

__version__ = "2026.10.19"
