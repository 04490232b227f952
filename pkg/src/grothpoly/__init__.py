"""Exact computation of refined canonical stable Grothendieck polynomials,
their duals, flagged skew generalizations, and the identities relating their
determinantal, tableau, and lattice-path descriptions."""

__version__ = "0.1.0"
