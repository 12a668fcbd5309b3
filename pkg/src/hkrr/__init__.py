"""Exact-arithmetic Riemann-Roch polynomials, Chern-class algebra and the
Chern-number solver for the known hyperkahler deformation families."""

from .algebra import (
    Poly,
    Series,
    bernoulli,
    binomial_poly,
    chebyshev_t,
    modified_bernoulli,
    rational_roots,
    todd_series,
)
from .chern import (
    ChernNumbers,
    GradedClass,
    IntegralForm,
    RingSpec,
    adams,
    chern_character,
    chern_from_power_sums,
    chi_p_form,
    class_from_power_sums,
    class_to_power_sums,
    exterior_power_ch,
    generator,
    integrate,
    monomial_label,
    power_sum,
    power_sums,
    todd_class,
)
from .families import (
    OG6,
    OG6_DIVISORS,
    OG10,
    BBGram,
    DivisorDatum,
    HKFamily,
    c2_fujiki_constant,
    chi_line_bundle,
    chi_of_divisor_bundle,
    chi_omega_of_smooth,
    fujiki_constant,
    fujiki_polarized,
    h0_theta_fiber,
    huybrechts_constants,
    iter_matchings,
    k3n,
    kummer,
    lambda_q_ratio,
    rr_polynomial,
    rr_polynomial_lambda,
    solve_og6_coefficients,
    solve_og10_shift,
)
from .solver import (
    HODGE_CHI,
    OG10_MONOMIALS,
    OG10_RING,
    LinearSystem,
    assemble_hodge_equations,
    assemble_rr_equations,
    binomial_chi_expansion,
    chern_chi_expansion,
    euler_characteristic_check,
    og10_chern_numbers,
    solve,
)

__version__ = "0.1.0"
