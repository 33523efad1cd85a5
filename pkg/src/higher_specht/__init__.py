"""Higher Specht polynomials in two sets of variables and hook Garsia-Haiman modules."""

from .combinatorics import (Cell, CochargeLabeling, MuCochargePair, Partition, Tableau, cocharge,
                            descent_data, enumerate_fillings, enumerate_partitions, maj_comaj_range,
                            mu_cocharge_tableaux, phi, reading_word, rsk_insert, standardize,
                            word_transform)
from .errors import InternalInconsistency, InvalidArgument
from .exactlinalg import RationalMatrix, kernel, member, rank, rref
from .frobenius import (NABLA_E3, SchurSeries, compare_series, formula_series, quotient_frobenius,
                        series_hilbert)
from .polyring import (DiagonalPolynomial, Monomial, Permutation, apply_diff, coefficient_of,
                       delta_mu, diagonal_act, elementary_symmetric, homogeneous_component, hook_e,
                       mu_monomial, pairing, polarized_power_sum, tableau_monomial)
from .quotients import (GradedPieceBasis, IdealSpec, apolar_kernel, graded_ideal_basis,
                        harmonic_dim, hilbert_table, ideal_spec, independent_mod, normal_form,
                        quotient_dim, quotient_trace)
from .specht import (GarnirSpec, SpechtExpansion, aty_higher_specht, characters, epsilon_apply,
                     garnir_apply, higher_specht, hook_higher_specht, psi_shift, rep_matrix,
                     row_column_groups, specht_poly, straighten)

__version__ = "0.1.0"
