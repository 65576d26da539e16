"""Differential spectra of power functions over odd-characteristic finite fields."""

from .closed_forms import (
    expected_image_cardinalities,
    expected_image_relations,
    exponent_thm1,
    exponent_thm2,
    helleseth_bound,
    spectrum_thm1,
    spectrum_thm2,
    uniformity_cor1,
    uniformity_cor2,
)
from .cyclotomy import (
    build_partition,
    count_residue_pairs,
    cyclotomic_number_closed,
    gcd_power_forms,
    parametrize_Eij,
)
from .derivative import (
    ExponentParams,
    Family,
    Spectrum,
    count_solutions,
    derivative,
    restricted_images,
    spectrum_bruteforce,
    uniformity_bruteforce,
    verify_lemma11,
)
from .field import FieldCtx, Repr, build_field, build_quadratic_extension
from .kernels import BACKEND

__version__ = "0.1.0"
