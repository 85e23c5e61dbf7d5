"""Exact computations for bound quiver algebras, their derived and 2-periodic
categories, Grothendieck-group forms, and Ringel-Hall Lie algebras over F_q."""

from .errors import RootcatError
from .linalg import QQ, PrimeField, make_field
from .quiver import BoundAlgebra, load_algebra, load_bundled, parse_algebra
from .representation import Representation, canonical_modules

__version__ = "0.1.0"
