"""Asymptotic side: Bernoulli data, Bessel values and the coefficient estimates."""

from .bernoulli import bernoulli
from .bessel import bessel_I
from .estimates import (
    ProfileRow,
    bernoulli_integral,
    bernoulli_integral_with_bound,
    beta,
    corollary_diff,
    log_pk_asymptotic,
    log_ratio,
    pk_asymptotic,
    profile_P,
    profile_window,
    theorem1_estimate,
    theorem2_ratio,
)
from .taylor import (
    AsymExpansion,
    d_coeff,
    d_coeff_series,
    expansion,
    g_m1_coeff,
    g_m1_coeff_series,
)
from .xfloat import DEFAULT_PRECISION, context

__all__ = [
    "bernoulli", "bessel_I", "beta", "d_coeff", "d_coeff_series", "g_m1_coeff",
    "g_m1_coeff_series", "expansion", "AsymExpansion", "theorem1_estimate",
    "corollary_diff", "pk_asymptotic", "log_pk_asymptotic", "log_ratio",
    "profile_P", "profile_window", "theorem2_ratio", "ProfileRow",
    "bernoulli_integral", "bernoulli_integral_with_bound",
    "DEFAULT_PRECISION", "context",
]
