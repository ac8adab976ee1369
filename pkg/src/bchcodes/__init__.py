"""Construction and verification of narrow-sense BCH codes C(q, m, lambda, l0, l1)."""

__version__ = "0.1.0"
