"""Spectra and boundary-condition audits for the infinite spherical well."""

from ._core import *  # noqa: F401,F403
from ._core import (
    AdmissibilityError,
    BracketError,
    DomainError,
    NonNormalizableError,
    QuadratureError,
    StepSizeError,
)

__all__ = [name for name in dir() if not name.startswith("_")]
