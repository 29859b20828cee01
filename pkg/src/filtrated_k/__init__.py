"""Natural transformations of filtrated K-theory over finite T0 spaces and
homological algebra over the resulting category rings."""

from .category import CategoryRing, compose, nil_index, nil_ss_split, odd_odd_vanishes, validate_ring
from .cohomology import cohomology_of_pair, graded_k_theory, hom_group
from .constructions import counterexample, counterexample_mod, lift_restriction, refined_lift, simple_module
from .errors import *  # noqa: F401,F403
from .groups import AbelianGroup, GradedAbelianGroup, Presented, graded, parse_graded
from .homological import (ext, free_cover, free_resolution, hom_modules, is_exact, is_free, nil_submodule,
                          ss_part, tor1_ss, two_out_of_three_check, verify_resolution)
from .intmat import smith_normal_form
from .modfile import format_module, parse_module
from .module import (Module, ModuleHom, cokernel, direct_sum, free_module, kernel, quotient_mod_k, shift,
                     validate_module)
from .order_complex import m_of, M_of, open_simplex_filter, order_complex, relative_S
from .poset import (FinitePoset, LCSet, chain_poset, closure_ops, components, connected_lc_sets, d4_poset,
                    min_open, open_sets, parse_poset)
from .rings import chain_category, d4_category, d4_opposite_category, d4_refined_category, ring_by_name
