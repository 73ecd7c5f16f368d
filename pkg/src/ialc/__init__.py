"""Reasoner for intuitionistic ALC with hybrid assertions.

Subpackages: syntax (grammar/AST/printer), semantics (constructive
interpretations and validity), modelgen (model enumeration and random
generation), hilbert (axiomatic proofs), sequent (sequent calculus,
proof search, countermodels), cli (command line).
"""

__version__ = "0.1.0"
