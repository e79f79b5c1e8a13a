"""Weak Harder-Narasimhan filtrations of FDH functions on the projective plane."""

from .analysis import Analysis, analyze
from .fdh import (Chang, Classification, DeficiencyUndefinedForTorsion, FdhFunction, NotFdh,
                  SupportSeq, WindowTooNarrow, classify, deficiency, evaluate_h, evaluate_r,
                  fdh_from_hilbert, fdh_from_presentation, filtration_points, is_filterable_at,
                  rank_degree)
from .filtration import (GradedPiece, NotFilterableAt, NotTrivialWhn, OrderRelation, OrderUndefined,
                         RankOnePiece, WhnGraded, check_compar_chain, check_rank_one,
                         check_trivial_whn, fdh_order_compare, rank_one_decompose, split_at,
                         whn_graded)
from .sheaf_model import (Certificate, CertificateKind, IdealPiece, ModelGroup, ModelSheaf, Reason,
                          build_model, ext1_restriction_certificates, hn_compatibility_certificate,
                          hom_vanishing_certificates, resolution_reassembly_check, restriction_type)
from .whn import INF, WhnResult, candidate_set, check_combin, htilde_t_reference, whn_effective, whn_reference

__version__ = "0.1.0"
