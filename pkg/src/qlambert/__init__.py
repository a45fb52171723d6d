"""Exact truncated q-series engine for Lambert series identity verification."""

from .series import (
    TruncSeries,
    NotAUnit,
    OrderExceeded,
    from_coeffs,
    geometric,
    monomial,
    one,
    zero,
)
from .qproducts import (
    EtaQuotientSpec,
    E_series,
    eta_quotient,
    omega_series,
    pochhammer_finite,
    pochhammer_inf,
)
from .lambert import (
    DoubleLambertSpec,
    LambertSpec,
    SpecInvalid,
    TriangularSpec,
    A_series,
    D_series,
    L_series,
    N_series,
    X_series,
    Y_series,
    Z_series,
    double_lambert,
    lambert_single,
    triangular_sum,
)
from .partitions import (
    congruence_scan,
    partition_count,
    pw_count,
    pw_omega_crosscheck,
    pwbar_count,
)
from .identities import (
    IdentityRecord,
    UnknownIdentity,
    VerifyReport,
    lookup,
    registry,
    verify,
    verify_all,
)

__all__ = [
    "TruncSeries", "NotAUnit", "OrderExceeded",
    "from_coeffs", "geometric", "monomial", "one", "zero",
    "EtaQuotientSpec", "E_series", "eta_quotient", "omega_series",
    "pochhammer_finite", "pochhammer_inf",
    "DoubleLambertSpec", "LambertSpec", "SpecInvalid", "TriangularSpec",
    "A_series", "D_series", "L_series", "N_series",
    "X_series", "Y_series", "Z_series",
    "double_lambert", "lambert_single", "triangular_sum",
    "congruence_scan", "partition_count", "pw_count",
    "pw_omega_crosscheck", "pwbar_count",
    "IdentityRecord", "UnknownIdentity", "VerifyReport",
    "lookup", "registry", "verify", "verify_all",
]
