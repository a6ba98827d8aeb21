"""Length functions of unital nonassociative algebras."""

from .algebra import Algebra, assoc_family, multiply, zero_mult
from .length import algebra_length, char_seq, graded_basis, set_length, span_chain
from .linalg import GF, GF2, QQ, Field
from .maxlen import find_long_basis, is_max_length, long_basis_algebra
from .protoseq import CharSeq, ProtoWitness, enumerate_sequences, realizable_lengths, validate
from .realizer import realize

__version__ = "0.1.0"
