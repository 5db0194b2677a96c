"""Linear completely regular codes with covering radius 1: constructions,
exact analytics, regularity oracles and classification certificates."""

from .classify import (Case, ClassificationCertificate, build_automorphisms, classify,
                       extract_block_codes, extract_hamming_core, peel_repeats,
                       weight2_partition)
from .code import (CosetTable, LinearCode, code_from_generator, code_from_json,
                   code_from_parity_check, code_to_json, coset_table, covering_radius, dual,
                   min_distance, monomial_image, packing_radius, weight_distribution)
from .config import Budgets, budgets
from .constructions import direct, hamming, kron_code, q_repeat, repetition
from .gf import FieldElement, FieldSpec, elements, field_new, gf
from .linalg import MatrixGF, MonomialMap, VectorGF, apply_monomial, kernel_basis, kron, rref
from .regularity import (CodeSet, RegularityProfile, covering_set, cr_oracle_set,
                         is_completely_regular, is_completely_transitive,
                         repeat_recurrence_check)

__version__ = "0.1.0"
