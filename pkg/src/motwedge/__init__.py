"""Wedge families in the h1-localized Ext of the motivic Steenrod algebra over C."""

from .binary import alpha, split_into_parts
from .grading import TriDegree, degree_of, lookup_generator, wedge_member_degree
from .wedge import Status, Verdict, family_status, parse_descriptor

__all__ = [
    "TriDegree", "Status", "Verdict", "alpha", "degree_of", "family_status",
    "lookup_generator", "parse_descriptor", "split_into_parts", "wedge_member_degree",
]
__version__ = "0.1.0"
