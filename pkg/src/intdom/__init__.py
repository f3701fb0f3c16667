"""Minimum {k}-dominating multisets of graphs and Cartesian products.

The package computes gamma_k exactly and builds checkable certificates for
gamma_k(G) * gamma_k(H) <= 2k * gamma_k(G x H) on concrete graph pairs.
"""

from .certificate import (Certificate, build_certificate, parse_certificate, serialize_certificate,
                          verify_certificate)
from .graph import Graph, dominates, generate, parse_edge_list, serialize_edge_list
from .multiset import Multiset
from .partition import KPartition, build_k_partition, validate_k_partition
from .product import ProductGraph, cartesian_product, phi_projection, psi_projection
from .solver import SolveResult, gamma_bnb, gamma_brute, greedy_upper, is_k_dominating, lower_bound

__all__ = [
    "Certificate", "Graph", "KPartition", "Multiset", "ProductGraph", "SolveResult",
    "build_certificate", "build_k_partition", "cartesian_product", "dominates", "gamma_bnb",
    "gamma_brute", "generate", "greedy_upper", "is_k_dominating", "lower_bound", "parse_certificate",
    "parse_edge_list", "phi_projection", "psi_projection", "serialize_certificate",
    "serialize_edge_list", "validate_k_partition", "verify_certificate",
]

__version__ = "0.1.0"
