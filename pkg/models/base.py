from enum import Enum


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class CheckStatus(Enum):
    PASSED = "passed"
    FAILED = "failed"
    ERROR = "error"


class Provenance(Enum):
    """Where the t_j(n) coefficients of a representation formula come from."""
    THETA = "theta"
    ETA_PRODUCT = "eta_product"
