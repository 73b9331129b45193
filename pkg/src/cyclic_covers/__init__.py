"""
Exact Lyapunov spectra of square-tiled cyclic covers of the sphere, and
tools for origamis (square-tiled surfaces): strata, automorphisms,
quotients, cylinders, homology and SL(2, Z)-orbits.
"""

from .errors import (CoverParamsError, InvalidInput, OrbitTooLarge, OrigamiError,
                     ParseError, UnknownFormat)
from .spectra import (CoverParams, SpectrumMultiset, block_classification, check_identities,
                      cusp_orders, degree_d, double_cover_params, eigen_block, eigen_dims,
                      frac_profile, genus, is_abelian_square, lyapunov_spectrum,
                      minus_spectrum, t_sum, validate_params)
from .origami import (Origami, Stratum, automorphisms, canonical_form, cover_involution,
                      cyclic_cover_origami, deck_generator, genus_of, isomorphic,
                      make_origami, quotient, stairs, stratum, stratum_from_params, torus)
from .homology import (cylinders, homological_dim_surface, homology_rank, intersection,
                       intersection_rank_check, waist_classes)
from .orbit import OrbitGraph, act_S, act_T, export_orbit, homological_dim_curve

__version__ = "0.1.0"
