"""Directional Hamming statistics of binary codes and decoding error
bounds for binary asymmetric channels."""

__version__ = "0.1.0"

from .core import (BidistanceDistribution, BidistancePair, CapExceeded, Code,
                   ParseError, Word, bidistance_distribution, dir_distances,
                   multiset_repr, solve_directional_system,
                   weights_from_bidistance)
from .channel import (ChannelParams, DecodeResult, RegimeError,
                      exact_error_probability, likelihood, llr, mld_decode,
                      monte_carlo_error_probability, parse_probability)
from .bounds import (BoundReport, LatticePoint, ahb_union_bound, discrepancy,
                     discrepancy_bound, lattice_word_count, min_discrepancy,
                     min_symmetric_discrepancy, pairwise_error_probability,
                     symmetric_discrepancy, symmetric_discrepancy_bound)
from .algebra import (BinaryField, GeneratorMatrix, coset_distribution_matrix,
                      defining_set_code, distinct_row_count, dual_code,
                      generator_from_code, golay_code, is_projective,
                      relative_trace, trace_code_27_6, weight_distribution)
from .designs import (DIFFERENCE_SETS, IncidenceDesign, SchemeParams, SrgParams,
                      catalog_design, dimension_from_weights, sbibd_ahb,
                      sbibd_codes, sbibd_from_difference_set,
                      scheme_from_three_weight, srg_from_two_weight,
                      three_weight_ahb, two_weight_ahb, verify_srg,
                      with_zero_word)

__all__ = [name for name in dir() if not name.startswith("_")]
