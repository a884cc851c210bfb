"""eisres: exact computation of weight-variable Eisenstein families, their
residues at the boundary, p-adic Dirichlet L-series, cusp combinatorics of
modular curves, and truncated Iwasawa-algebra utilities.

Everything is computed in exact arithmetic: cyclotomic rationals on the
archimedean side, precision-tracked unramified p-adics on the other, with
every closed formula realized as a checked computation at finite precision.
"""

__version__ = "1.0.0"

from .padics import PadicRing, PadicScalar, s_exponent, teichmuller
from .cyclotomic import Cyc, embed_padic
from .series import (LambdaSeries, binom_series, log_series,
                     compose_involution, PrecisionExhausted, NonUnitError)
from .characters import (DirichletCharacter, omega, quadratic_character,
                         twist, xi_of_pair, is_exceptional, is_even_pair,
                         gauss_sum_cyc, gauss_sum_padic, needed_embedding_order)
from .lvalues import (bernoulli_number, bernoulli_generalized,
                      dirichlet_L_negative, Lp_negative)
from .klseries import (kl_series, kl_series_stickelberger, kl_series_interpolate,
                       stickelberger_data, regulator_factor, a_series, a_twist,
                       b_ell, g_series, delta_factor, admissibility, AFactorization)
from .eisenstein import (QExpansion, lambda_eis, classical_eis, specialize,
                         classical_specialization, embed_expansion, hecke_Tn,
                         tdd_classical, tdd_family, family_eigenvalue_Tl,
                         decompose_imprimitive, congruence_criterion,
                         congruence_bruteforce, tau_coefficients, sigma)
from .cusps import (CuspLabel, CuspDivisor, canonicalize, enumerate_A,
                    enumerate_classes, cusp_count_formula, crt_split, crt_join,
                    diamond_action, Tp_action, apply_Tp, ordinary_projection,
                    ordinary_projection_oracle, width, fricke_cusp,
                    enumerate_A0, enumerate_St, st_factorization, make_st_label,
                    st_width, st_fricke_point)
from .residues import (constant_term_E2, residue_at, total_residue,
                       e_divisor, verify_res_identity, ResidueReport,
                       lemma_C_constant, gauss_ratio)
from .iwasawa import (WeierstrassData, weierstrass_prepare, newton_polygon,
                      iwasawa_invariants, PresentedModule, fitting_ideal,
                      char_ideal_cyclic_sum, resultant_valuation)
