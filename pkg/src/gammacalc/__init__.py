"""Exact calculator for truncated point schemes of connected graded algebras.

Given r generators and relations of degrees d_1 <= ... <= d_s, the
package computes the Chow class of the n-th truncated point scheme in
the product of projective spaces (P^{r-1})^n, its point count with
multiplicity and multidegrees, and verifies the numbers through two
independent routes: a combinatorial choice-function census with explicit
point realization for split (product-of-linear-forms) relations, and an
exhaustive finite-field scan.
"""

__version__ = "0.1.0"

from .shapes import AlgebraShape, Window  # noqa: F401
from .chow import ChowClass  # noqa: F401
