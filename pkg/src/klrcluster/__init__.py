"""Exact cluster mutation and dominant-word parameters for type A quiver Hecke algebras."""

from .cluster import ExchangeMatrix, Quiver, dominance_compare, mutate_matrix
from .errors import ClusterError
from .kernels import BACKEND
from .laurent import LaurentPolynomial, SymbolicSeed, f_and_g, mutate_symbolic
from .mutation import ParamSeed, check_compatible, hat_mu, initial_seed, mutate_parameters
from .words import Word, canonical_factorization, parse_word

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ClusterError",
    "ExchangeMatrix",
    "LaurentPolynomial",
    "ParamSeed",
    "Quiver",
    "SymbolicSeed",
    "Word",
    "canonical_factorization",
    "check_compatible",
    "dominance_compare",
    "f_and_g",
    "hat_mu",
    "initial_seed",
    "mutate_matrix",
    "mutate_parameters",
    "mutate_symbolic",
    "parse_word",
]
