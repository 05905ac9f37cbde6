# Forbidden patterns
from .embedding import (
    PatternEmbedding,
    find_forbidden_zero_sublattice,
    find_zero_sublattice_embedding,
    verify_embedding,
)
from .harness import CorpusFailure, CorpusRun, run_corpus
from .theorem1 import lattice_conditions, theorem1_report
from .witness import (
    TernaryWitness,
    WitnessClassification,
    classify_witness,
    embedding_from_witness,
    find_ternary_witness,
    is_ternary_witness,
    witness_from_failure,
)

__all__ = [
    "CorpusFailure",
    "CorpusRun",
    "PatternEmbedding",
    "TernaryWitness",
    "WitnessClassification",
    "classify_witness",
    "embedding_from_witness",
    "find_forbidden_zero_sublattice",
    "find_ternary_witness",
    "find_zero_sublattice_embedding",
    "is_ternary_witness",
    "lattice_conditions",
    "run_corpus",
    "theorem1_report",
    "verify_embedding",
    "witness_from_failure",
]
