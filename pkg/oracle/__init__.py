from oracle.brute_force import OracleResult, brute_force_optimal, build_conflict_graph, is_sperner
from oracle.cross_check import CrossValidation, cross_validate

__all__ = [
    "CrossValidation",
    "OracleResult",
    "brute_force_optimal",
    "build_conflict_graph",
    "cross_validate",
    "is_sperner",
]
