"""Linear-time anticommutation counting for sparse k-local Pauli strings."""

from .baseline import list_edges, pairwise_count, pairwise_witness
from .counters import OpCounters
from .engine import BatchReport, anti_degree_profile, certify, count_all_anticommuting_pairs
from .pauli import (
    PauliLetter,
    SparsePauliString,
    SymplecticPair,
    anticommutes,
    conflict_set,
    normalize,
    symplectic_anticommutes,
    to_symplectic,
)
from .table import (
    BACKEND,
    LabeledPattern,
    PatternCountTable,
    anti_count_against_previous,
    conflicting_assignments,
    insert,
    make_table,
    zeta_identity_check,
)
from .workload import InstanceSpec, generate, parse_dense_line, parse_sparse_line, serialize

__version__ = "0.1.0"
