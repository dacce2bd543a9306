"""Exact analysis of curves of bidegree (k,k) on the quadric surface.

The heavy lifting happens in the C++ extension ``etaq._core``: exact
arithmetic over Q, Q(z_m) and F_p, a chartwise smoothness certifier,
Cech cohomology of line bundles on P^1 x P^1, the grid/torsion/grilled
decision procedures, and the intersection tables of the second symmetric
product.  All reports come back as plain dictionaries with scalars encoded
as exact literal strings.
"""

from etaq._core import (
    Error,
    analyze,
    canonical_expression,
    grid_test,
    grilled,
    h0,
    h1_dim,
    sample_grid,
    secant_rank,
    sigma_family,
    smoothness,
    survey_fp,
    symprod_table,
    torsion,
)

__version__ = "0.1.0"

__all__ = [
    "Error",
    "analyze",
    "canonical_expression",
    "grid_test",
    "grilled",
    "h0",
    "h1_dim",
    "sample_grid",
    "secant_rank",
    "sigma_family",
    "smoothness",
    "survey_fp",
    "symprod_table",
    "torsion",
    "__version__",
]
