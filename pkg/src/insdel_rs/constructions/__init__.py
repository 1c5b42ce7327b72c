from .abc import AbcParams, abc_params, construct_abc, verify_abc
from .bounds import field_size_lower_bound
from .k2 import K2Construction, build_k2, construct_k2, evaluation_points, four_wise_independent, k2_construction
from .parity import ParityMatrix, construct_parity_check, every_t_columns_independent
from .random_search import field_of_order, random_construction
from .sidon import SidonSpace, ambient_field, construct_sidon, is_sidon, span, subfield_basis

__all__ = [
    "AbcParams",
    "K2Construction",
    "ParityMatrix",
    "SidonSpace",
    "abc_params",
    "ambient_field",
    "build_k2",
    "construct_abc",
    "construct_k2",
    "construct_parity_check",
    "construct_sidon",
    "evaluation_points",
    "every_t_columns_independent",
    "field_of_order",
    "field_size_lower_bound",
    "four_wise_independent",
    "is_sidon",
    "k2_construction",
    "random_construction",
    "span",
    "subfield_basis",
    "verify_abc",
]
