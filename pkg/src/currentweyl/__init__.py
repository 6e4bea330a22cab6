"""Weight characters of local Weyl modules for sl(r+1) current algebras, computed exactly."""
from .coinvariants import RankConfig, coinvariant_dims, invariant_coinvariant_dims
from .combinat import (catalan, enumerate_A, enumerate_parking_functions, enumerate_raney,
                       higher_catalan, hoggatt_conjecture_dim, narayana, raney_weight_census)
from .exactla import SparseMatrix, crosscheck_rank, rank
from .symfunc import (SymFuncExpr, e_to_schur, frobenius_transform, h_to_schur, irrep_dim,
                      irrep_weight_character, kostka, parking_frobenius, parking_weight_character,
                      tensor_sign)
from .uea import anr_check, enumerate_servings, martini_check, normal_order_apply
from .weylmod import (PointMultiset, WeightCharacter, origin_weyl_character,
                      points_weyl_character, truncation_stability_check,
                      verify_tensor_factorization)

__version__ = "0.1.0"
