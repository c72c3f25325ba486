"""Braid-theoretic invariants of plane curve singularities and braided surfaces."""

__version__ = "0.1.0"
