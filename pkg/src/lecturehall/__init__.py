"""Exact computation of inflated s-Eulerian polynomials of lecture hall cones,
their quotients by 1 + x + ... + x^(s_n - 1), and contractibility checks."""
from .cone_oracle import (LatticePoint, count_lecture_hall, count_odd_parts,
                          enumerate_parallelepiped, oracle_inflated_eulerian)
from .contractibility import (ContractReport, classify_prefix,
                              is_n_contractible_bruteforce,
                              is_n_contractible_fast, is_n_contractible_fiber)
from .errors import CapExceeded, NotDivisible
from .eulerian import (Permutation, chung_graham_P, inflated_eulerian,
                       perm_to_inversion, quotient_by_division,
                       quotient_polynomial)
from .polynomial import (IntPolynomial, divide_exact_ones,
                         from_exponent_multiset, mul_ones,
                         nonzero_coeff_sequence)
from .seqcore import (InversionSeq, SignatureSeq, ascent_set,
                      enumerate_inversion_sequences, qstat, stat)

__version__ = "0.1.0"
