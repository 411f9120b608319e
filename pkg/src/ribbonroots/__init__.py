"""Descent polynomials via Naruse's formula on ribbons, with root certification."""
__version__ = "0.1.0"

from .shapes import Cell, DescentSet, Partition, SkewShape  # noqa: E402

__all__ = ["Cell", "DescentSet", "Partition", "SkewShape", "__version__"]
