"""Exact invariants of non-commutative K3 surfaces."""
