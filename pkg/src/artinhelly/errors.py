from enum import Enum


class ErrorCode(str, Enum):
    INPUT_ERROR = "INPUT_ERROR"
    NOT_FINITE_WITHIN_CAP = "NOT_FINITE_WITHIN_CAP"
    NO_JOIN = "NO_JOIN"
    UNKNOWN_ATOM = "UNKNOWN_ATOM"
    NOT_SIMPLE = "NOT_SIMPLE"
    STRUCTURE_VIOLATION = "STRUCTURE_VIOLATION"
    NOT_PAIRWISE_INTERSECTING = "NOT_PAIRWISE_INTERSECTING"
    PROOF_CLAIM_VIOLATION = "PROOF_CLAIM_VIOLATION"
    NOT_FC = "NOT_FC"
    CAP_EXCEEDED = "CAP_EXCEEDED"
    ORACLE_UNSUPPORTED = "ORACLE_UNSUPPORTED"
    MARGIN_TOO_SMALL = "MARGIN_TOO_SMALL"


class ExitCode:
    OK = 0
    INPUT = 1
    OUT_OF_SCOPE = 2
    UNSUPPORTED_ORACLE = 3
    VERIFICATION_FAILED = 4


class ArtinHellyError(Exception):
    code: ErrorCode = ErrorCode.INPUT_ERROR
    exit_code: int = ExitCode.INPUT

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class InputError(ArtinHellyError):
    code = ErrorCode.INPUT_ERROR


class NotFiniteWithinCap(ArtinHellyError):
    code = ErrorCode.NOT_FINITE_WITHIN_CAP
    exit_code = ExitCode.OUT_OF_SCOPE

    def __init__(self, cap: int, message: str | None = None) -> None:
        super().__init__(message or f"not finite within cap={cap}")
        self.cap = cap


class NoJoin(ArtinHellyError):
    code = ErrorCode.NO_JOIN


class UnknownAtom(ArtinHellyError):
    code = ErrorCode.UNKNOWN_ATOM


class NotSimple(ArtinHellyError):
    code = ErrorCode.NOT_SIMPLE


class StructureViolation(ArtinHellyError):
    code = ErrorCode.STRUCTURE_VIOLATION

    def __init__(self, invariant: str, detail: str = "") -> None:
        text = f"violated invariant '{invariant}'"
        super().__init__(f"{text}: {detail}" if detail else text)
        self.invariant = invariant


class NotPairwiseIntersecting(ArtinHellyError):
    code = ErrorCode.NOT_PAIRWISE_INTERSECTING


class ProofClaimViolation(ArtinHellyError):
    code = ErrorCode.PROOF_CLAIM_VIOLATION


class NotFC(ArtinHellyError):
    code = ErrorCode.NOT_FC
    exit_code = ExitCode.OUT_OF_SCOPE

    def __init__(self, clique: tuple[str, ...]) -> None:
        super().__init__(f"clique {{{', '.join(clique)}}} is not spherical")
        self.clique = clique


class CapExceeded(ArtinHellyError):
    code = ErrorCode.CAP_EXCEEDED
    exit_code = ExitCode.OUT_OF_SCOPE


class OracleUnsupported(ArtinHellyError):
    code = ErrorCode.ORACLE_UNSUPPORTED
    exit_code = ExitCode.UNSUPPORTED_ORACLE


class MarginTooSmall(ArtinHellyError):
    code = ErrorCode.MARGIN_TOO_SMALL

    def __init__(self, margin: int, required: int) -> None:
        super().__init__(
            f"margin {margin} is smaller than the longest Garside element "
            f"length {required}"
        )
        self.margin = margin
        self.required = required
