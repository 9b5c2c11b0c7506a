from .core import (  # noqa: F401
    Monomial,
    TruncatedSeries,
    add,
    constant,
    dissect,
    divide,
    first_mismatch,
    inverse,
    make_series,
    monomial_series,
    mul,
    neg,
    negate_q,
    one,
    pow_series,
    reduce_mod,
    scale,
    shift_div,
    shift_mul,
    sub,
    substitute_power,
    truncate,
    zero,
)
from .special import (  # noqa: F401
    D_series,
    E_series,
    EtaQuotient,
    eta_f,
    eta_quotient,
    f_pos,
    phi,
    phi_eta,
    phi_neg,
    pochhammer,
    theta_f,
)
