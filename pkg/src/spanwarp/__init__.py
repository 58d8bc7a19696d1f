"""Finite-model engine for monads, warpings and wreaths in Span, with skew variants."""

from .atoms import Pair, Path, Star, Unit, atom_key, render_atom
from .fincore import (FinCategory, FinFunction, FinFunctor, FinNatTrans, FinSet,
                      StructureError, ValidationReport, Violation, enumerate_functions,
                      enumerate_functors, finfunction, finfunctor, finnattrans, finset,
                      identity_function, identity_functor, monoid_category,
                      product_category, validate_category, validate_functor,
                      validate_nat_trans)
from .spaneng import (Cell2, PastingTypeError, Span, SpanError, cell, cells_equal,
                      compose_spans, compose_word, eval_pasting, identity_cell,
                      identity_span, restrict_star, span, star_map_of, vcompose, whisker)
from .monadwarp import (InvalidStructure, MwMonad, SpanMonad, Warping, Wreath,
                        category_to_monad, identity_warping, identity_wreath,
                        monad_laws_report, monad_to_category, mw_monad, mw_to_warping,
                        mw_view, span_monad, validate_mw_monad, validate_warping,
                        validate_wreath)
from .correspond import (EFamily, EMAlgebra, MonadOnAB, WarpAlgebra, algebra_as_e_family,
                         algebra_to_em_algebra, e_family, e_family_to_algebra,
                         em_algebra_to_e_family, enumerate_ab_monads, enumerate_e_families,
                         enumerate_em_algebras, enumerate_mw_monads, enumerate_warpings,
                         enumerate_wreaths, kleisli_category, monad_to_warping,
                         self_algebra, validate_algebra, validate_e_family,
                         warping_to_monad, warping_to_wreath, wreath_to_monad,
                         wreath_to_warping)
from .skew import (SkewAlgebra, SkewBicategory, SkewMonoidalData, SkewWarping,
                   enumerate_skew_warpings, identity_skew_warping, one_object_view,
                   self_skew_algebra, skew_kleisli, skew_monoidal_of,
                   validate_skew_algebra, validate_skew_bicategory,
                   validate_skew_warping)

__version__ = "0.1.0"
