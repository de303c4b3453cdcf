"""Python surface of the k-union-closed verification toolkit.

Thin re-export of the C++ extension; all heavy lifting (exact rational
arithmetic, Sturm chains, certified intervals) happens in `_kuc`.
"""

__all__ = [
    "phi",
    "table",
    "mu",
    "z",
    "bound",
    "h",
    "f_k",
    "big_f_k",
    "m_k",
    "p_coefficients",
    "unit_interval_root_count",
    "derivative_root_pattern",
    "discriminant_sign_pattern",
    "verify_appendix",
    "verify_fk_nonneg",
    "verify_entropy_product",
    "simulate",
]

try:
    # wheel layout: the extension lives inside the package
    from ._kuc import *  # noqa: F401,F403
except ImportError:
    # build-tree layout: the extension sits next to the package directory
    from _kuc import *  # noqa: F401,F403
