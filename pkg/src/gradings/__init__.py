"""Exact computational machinery for gradings on finite-dimensional algebras.

Algebras are given by structure constants over an exact field (rationals,
cyclotomic extensions, or small prime fields).  The library computes universal
(abelian) groups of gradings, induced group-gradings, product and loop-algebra
constructions, centroids and graded centroids, semisimple and graded-simple
decompositions, and fineness/equivalence certificates, all with exact
arithmetic and explicit witnesses.
"""

from .errors import GradingsError  # noqa: F401
from .scalar import ExactField, ExactScalar, make_field, root_of_unity  # noqa: F401

__version__ = "0.1.0"
