"""Untyped lambda-calculus normalizers over a higher-order representation,
checked against a substitution-based normal-order oracle."""

from .cps import CpsVariant, cps_cbn, cps_cbv, observe_cps
from .normalizers import (
    NotCPS,
    Strategy,
    app_cps,
    app_sem,
    eval_whnf,
    interp,
    nbe,
    norm_cbn,
    norm_cbv,
    norm_cps,
    norm_residual,
    normalize,
)
from .oracle import (
    Budget,
    Diverged,
    Normalized,
    OutOfFuel,
    beta_step_normal_order,
    oracle_normalize,
    oracle_whnf,
    subst,
)
from .representation import RApp, RLam, RVar, e_nf, quote, readback
from .syntax import (
    App,
    Lam,
    ParseError,
    Var,
    alpha_eq,
    free_vars,
    is_neutral,
    is_normal,
    is_strict_cps,
    parse,
    parse_env,
    pretty,
    to_debruijn,
)
