"""Computational intuitionistic fuzzy normed linear spaces.

Builds graded norms from crisp ones, verifies their defining conditions
by seeded sampling, extracts crisp level norms numerically, and turns the
convergence, completeness, compactness and continuity statements of the
theory into executable desk-scale checks with re-evaluable witnesses.
"""

from .algebra import (TriangularNorm, TriangularConorm, tnorm, tconorm,
                      eval_tnorm, eval_tconorm, check_algebra_axioms,
                      separation_witness, diagonal_witness, idempotency_report)
from .alpha import (AlphaNormResult, alpha_norm_membership,
                    alpha_norm_nonmembership, closed_form_standard,
                    verify_alpha_norm_axioms, verify_ascending_family,
                    estimate_comparability_constant)
from .config import ToleranceConfig, DEFAULT_CONFIG
from .continuity import (SampledMap, builtin_map, geometric_probe_sequences,
                         check_sequential_ifc_at, check_strong_ifc_at,
                         check_ifc_at, verify_strong_implies_sequential,
                         verify_ifc_sequential_agreement, compact_image_check)
from .corpus import KINDS, generate_corpus, known_limit
from .errors import (IFNLSError, DomainError, WitnessNotFound, BracketError,
                     DegenerateBasis, TailNotSettled, PreconditionFailed,
                     SchemaError)
from .sequences import (VectorSequence, read_sequence_csv, parse_sequence_csv,
                        write_sequence_csv, check_convergence_to, check_cauchy,
                        check_bounded, verify_limit_uniqueness,
                        verify_limit_arithmetic, check_subsequence_inheritance,
                        crisp_fuzzy_equivalence, findim_limit_extraction,
                        completeness_via_subsequence)
from .spaces import (DegreePair, CrispNorm, StandardIFN, CustomIFN, IFNSpace,
                     standard_space, custom_space, space_from_dict,
                     space_to_dict, load_space, verify_ifn_axioms,
                     verify_extended_conditions, degrees_batch, as_vector)
from .topology import (SampledSet, set_from_dict, set_to_dict, load_set,
                       bounded_witness, check_set_bounded, closure_membership,
                       compactness_verdict, finite_sample_subsequence_check)
from .verdicts import (Verdict, ConvergenceVerdict, ContinuityVerdict,
                       PASS, FAIL, INCONCLUSIVE, CONVERGES, DIVERGES)

__version__ = "0.1.0"
