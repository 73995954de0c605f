from .models import (
    BallReport,
    BallVertex,
    ConditionReport,
    CoxeterReport,
    GarsideReport,
    GarsideStructureFile,
    GraphCheckReport,
    HellyCheckReport,
    OracleKind,
    SyntheticCell,
    SyntheticComplexFile,
    Verdict,
    VerifyReport,
)

__all__ = [
    "BallReport",
    "BallVertex",
    "ConditionReport",
    "CoxeterReport",
    "GarsideReport",
    "GarsideStructureFile",
    "GraphCheckReport",
    "HellyCheckReport",
    "OracleKind",
    "SyntheticCell",
    "SyntheticComplexFile",
    "Verdict",
    "VerifyReport",
]
