"""Seifert-matrix invariants of hypersurface singularity links."""

from ._hypersig import (
    CalibrationError,
    Error,
    InputError,
    OffCircleError,
    PrecisionError,
    SeifertMatrix,
    SingularMatrixError,
    UnsupportedError,
    alexander,
    brieskorn,
    brieskorn_spectrum_oracle,
    catalog,
    check,
    check_local,
    invariants,
    mod2_reduce,
    murasugi_kawauchi,
    n0,
    nullity,
    parse_seifert_json,
    profile_csv,
    signature,
    spectrum,
)

__all__ = [name for name in dir() if not name.startswith("_")]
