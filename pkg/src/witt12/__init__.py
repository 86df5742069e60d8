"""Exact computations around the 12-point set K in PG(5,3), Witt's design W12 and M12."""

from witt12.veronese import KSet, VeroneseConfig, construct_K

__all__ = ["KSet", "VeroneseConfig", "construct_K"]
__version__ = "0.1.0"
