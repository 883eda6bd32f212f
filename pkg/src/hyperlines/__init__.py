"""Chern classes, Schubert calculus and degenerations of lines on hypersurfaces."""

__version__ = "0.1.0"
