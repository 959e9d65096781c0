"""Dilogarithm-family special functions, integral transforms, and a
machine-checked identity suite.

Public surface:

* series evaluators -- :func:`li2`, :func:`li3`, :func:`chi2`, :func:`chi3`,
  :func:`ti2`, :func:`ti3`, plus Wallis-ratio helpers and the reference
  constants table;
* Maclaurin machinery -- :class:`SeriesExpansion` builders for powers of
  arcsin/arsinh and the coefficient-level operations on them;
* quadrature transforms -- the averaging operator :func:`wallis_transform`,
  its generalized form, the arccos-kernel transform, and the fixed
  closed-form integrals;
* the verification suite -- :func:`register_all` / :func:`run` over every
  identity, inequality, and summation case.

The hot kernels run on a compiled backend when available; set
``DILOGKIT_BACKEND=python`` to force the pure-Python implementation and
``DILOGKIT_PANELS`` to override the default quadrature panel count.
"""

from ._backend import BACKEND
from .expansions import (
    DEFAULT_ORDER,
    SeriesExpansion,
    SeriesSource,
    arcsin_series,
    arsinh_series,
    convolve,
    evaluate_series,
    integrate_over_y,
)
from .quadrature import (
    MENU,
    Integrand,
    QuadratureConfig,
    QuadResult,
    arccos_kernel_transform,
    arctan_arccot_integral,
    arctan_squared_integral,
    cot_kernel_integral,
    default_config,
    generalized_wallis_transform,
    lemma4_transform,
    monomial_integrand,
    wallis_coefficient_weights,
    wallis_transform,
)
from .series import (
    Constant,
    ConstantsTable,
    PrecisionWarning,
    WallisCoefficient,
    chi2,
    chi3,
    constants_table,
    double_factorial,
    harmonic,
    li2,
    li3,
    odd_harmonic2,
    ti2,
    ti3,
    wallis_coefficient,
    wallis_value,
    wallis_value_array,
    zeta_oracle,
)
from .suite import (
    SUITE_VERSION,
    EulerSumSpec,
    IdentityCase,
    VerificationReport,
    euler_sum,
    register_all,
    run,
)

__version__ = "1.0.0"

__all__ = [
    "BACKEND",
    "Constant",
    "ConstantsTable",
    "DEFAULT_ORDER",
    "EulerSumSpec",
    "IdentityCase",
    "Integrand",
    "MENU",
    "PrecisionWarning",
    "QuadResult",
    "QuadratureConfig",
    "SUITE_VERSION",
    "SeriesExpansion",
    "SeriesSource",
    "VerificationReport",
    "WallisCoefficient",
    "__version__",
    "arccos_kernel_transform",
    "arcsin_series",
    "arctan_arccot_integral",
    "arctan_squared_integral",
    "arsinh_series",
    "chi2",
    "chi3",
    "constants_table",
    "convolve",
    "cot_kernel_integral",
    "default_config",
    "double_factorial",
    "euler_sum",
    "evaluate_series",
    "generalized_wallis_transform",
    "harmonic",
    "integrate_over_y",
    "lemma4_transform",
    "li2",
    "li3",
    "monomial_integrand",
    "odd_harmonic2",
    "register_all",
    "run",
    "ti2",
    "ti3",
    "wallis_coefficient",
    "wallis_coefficient_weights",
    "wallis_transform",
    "wallis_value",
    "wallis_value_array",
    "zeta_oracle",
]
