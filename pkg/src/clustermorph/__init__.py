"""Cluster morphism categories of finite-type hereditary algebras."""

__version__ = "0.1.0"

from .quiver import QuiverSpec, euler_form, positive_roots, validate_finite_type  # noqa: E402
from .modcat import ClusterObject, WideSubcat, ext, hom, perp_category  # noqa: E402

__all__ = [
    "ClusterObject",
    "QuiverSpec",
    "WideSubcat",
    "euler_form",
    "ext",
    "hom",
    "perp_category",
    "positive_roots",
    "validate_finite_type",
]
