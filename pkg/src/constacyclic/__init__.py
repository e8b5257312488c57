"""Constacyclic code construction and minimum-distance certification."""

from .codes import ConstacyclicCode, DefiningSet, code_from_defining_set, \
    code_from_descriptor, defining_set
from .distance import (DistanceResult, WeightEnumerator, certify,
                       certify_pair, exhaustive_enumerator, low_weight_search,
                       macwilliams_transform, sparse_message_probe)
from .families import (BchWitness, ClosedFormReport, FamilyParams, bch_search,
                       closed_form_bounds, cprm_defining_set, family_code,
                       family_defining_set, parity_defining_set,
                       qweight_defining_set, subcode_defining_set)
from .galois import (ONE, ZERO, ExtensionTower, FieldSpec, build_tower,
                     tower_for)
from .polyring import Poly, factor_xn_minus_lambda, minimal_polynomial, \
    reciprocal, xn_minus_lambda
from .qadic import (CyclotomicCoset, DigitProfile, IndexUniverse,
                    cyclotomic_coset, digit_profile, index_universe)

__version__ = "0.1.0"
