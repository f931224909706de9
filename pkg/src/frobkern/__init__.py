"""Exact cohomology multiplicity counts for Frobenius kernels of SL2.

The package computes, with exact integer arithmetic throughout:

* the weight multiplicities of Borel- and full-kernel cohomology and
  their quantum analogs, via a memoized digit recursion (``counting``);
* the same numbers by brute-force lattice enumeration, as ground truth
  (``oracle``);
* weight characters, per-degree decompositions and Poincare series
  assembled from the counts (``characters``);
* the free-module basis and Hilbert series of the reduced Borel-kernel
  cohomology ring (``reduced_ring``);
* golden-table runs comparing the two engines (``bench``), also exposed
  through the ``frobkern`` command line tool (``cli``).
"""

from .bench import BenchReport, TableSpec, named_table_spec, run_table
from .characters import (
    CharacterPoly,
    GradedCharacter,
    char_Br,
    char_Gr,
    char_quantum_Br,
    char_quantum_Gr,
    graded_char_Br,
    poincare_Ur,
    weyl_char_sl2,
)
from .counting import (
    CountParams,
    DigitEquation,
    count_digit_equation,
    graded_count,
    graded_counts,
    is_prime,
    n_classical,
    n_classical_alt_odd,
    n_classical_p2,
    n_quantum,
)
from .oracle import (
    FORCE_THRESHOLD,
    OracleRefused,
    SolutionTuple,
    brute_count,
    brute_graded,
    brute_quantum,
    candidate_box_size,
    enumerate_quantum_solutions,
    enumerate_solutions,
)
from .reduced_ring import ReducedBasis, basis, hilbert_coeffs, hilbert_coeffs_rational

__version__ = "0.1.0"

__all__ = [
    "BenchReport",
    "CharacterPoly",
    "CountParams",
    "DigitEquation",
    "FORCE_THRESHOLD",
    "GradedCharacter",
    "OracleRefused",
    "ReducedBasis",
    "SolutionTuple",
    "TableSpec",
    "basis",
    "brute_count",
    "brute_graded",
    "brute_quantum",
    "candidate_box_size",
    "char_Br",
    "char_Gr",
    "char_quantum_Br",
    "char_quantum_Gr",
    "count_digit_equation",
    "enumerate_quantum_solutions",
    "enumerate_solutions",
    "graded_char_Br",
    "graded_count",
    "graded_counts",
    "hilbert_coeffs",
    "hilbert_coeffs_rational",
    "is_prime",
    "n_classical",
    "n_classical_alt_odd",
    "n_classical_p2",
    "n_quantum",
    "named_table_spec",
    "poincare_Ur",
    "run_table",
    "weyl_char_sl2",
]
