from .polynomial import (
    DEGREE_OF_ZERO,
    ONE,
    T,
    ZERO,
    IntPolynomial,
    ModPolynomial,
    add,
    derivative,
    divide_exact,
    evaluate,
    geometric,
    mul,
    reduce_mod,
    reverse,
)
from .congruence import AffineTriple, CongruenceSpec
from .family import FamilyId
from .report import (
    CheckpointState,
    ConjectureCell,
    ConjectureReport,
    Counterexample,
    IdentityReport,
    MinedTriple,
    MiningReport,
    SearchReport,
    SweepReport,
    TableRow,
    TypoEntry,
)

__all__ = [
    "DEGREE_OF_ZERO",
    "ONE",
    "T",
    "ZERO",
    "IntPolynomial",
    "ModPolynomial",
    "add",
    "derivative",
    "divide_exact",
    "evaluate",
    "geometric",
    "mul",
    "reduce_mod",
    "reverse",
    "AffineTriple",
    "CongruenceSpec",
    "FamilyId",
    "CheckpointState",
    "ConjectureCell",
    "ConjectureReport",
    "Counterexample",
    "IdentityReport",
    "MinedTriple",
    "MiningReport",
    "SearchReport",
    "SweepReport",
    "TableRow",
    "TypoEntry",
]
