"""Exact computations for K-moduli and VGIT wall crossing of curves on quadric surfaces."""
from .errors import InputError, KwallError, MathRefusal
from .forms import Bidegree, Homogeneous, MultiForm, change_coordinates, parse_form, reduce_mod_quadric
from .hm import OnePS, hm_weight, instability_measure, torus_semistable, weight_polytope

__version__ = "0.1.0"

__all__ = [
    "Bidegree", "Homogeneous", "MultiForm", "OnePS", "InputError", "KwallError", "MathRefusal",
    "change_coordinates", "hm_weight", "instability_measure", "parse_form", "reduce_mod_quadric",
    "torus_semistable", "weight_polytope", "__version__",
]
