"""Shortlex injective source code for a four-symbol constrained Markov source.

Admissible strings are ordered by information cost, length and
lexicographic order and mapped to binary words in shortlex order.  All
counting, ranking and expectation routines are exact.
"""

from .analysis import (
    McEstimate,
    SavingReport,
    expected_length,
    expected_length_bruteforce,
    gap_table,
    monte_carlo_length,
    saving_probability,
)
from .codec import (
    Codebook,
    binary_rank,
    binary_unrank,
    brute_force_codebook,
    code_length,
    decode,
    encode,
    source_rank,
    source_unrank,
)
from .source import (
    InadmissibleError,
    block_probability,
    information_cost,
    is_admissible,
    sample_block,
)

__all__ = [
    "Codebook",
    "InadmissibleError",
    "McEstimate",
    "SavingReport",
    "binary_rank",
    "binary_unrank",
    "block_probability",
    "brute_force_codebook",
    "code_length",
    "decode",
    "encode",
    "expected_length",
    "expected_length_bruteforce",
    "gap_table",
    "information_cost",
    "is_admissible",
    "monte_carlo_length",
    "sample_block",
    "saving_probability",
    "source_rank",
    "source_unrank",
]
