"""Homological invariants of finite-dimensional algebras: replicated
algebras, SGC extensions, Serre-functor orbits, Nakayama combinatorics,
Geigle-Lenzing grading groups, and an exact brute-force module-category
oracle over the rationals."""

__version__ = "0.1.0"

from . import dynkin, gl, nakayama, replicated, serre, snf

__all__ = ["dynkin", "gl", "nakayama", "replicated", "serre", "snf", "__version__"]
