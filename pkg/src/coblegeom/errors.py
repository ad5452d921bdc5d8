"""Domain errors. Each carries the machine-readable ``code`` the CLI reports."""


class DomainError(ValueError):
    code = "domain error"

    def __init__(self, detail: str = ""):
        super().__init__(detail or self.code)
        self.detail = detail or self.code

    def as_dict(self) -> dict:
        return {"error": self.code, "detail": self.detail}


class DimensionMismatch(DomainError):
    code = "dimension mismatch"


class ArityMismatch(DomainError):
    code = "arity mismatch"


class DegenerateConfiguration(DomainError):
    code = "degenerate configuration"


class RowDegenerate(DomainError):
    code = "row degenerate"


class InsufficientGeneralPosition(DomainError):
    code = "insufficient general position"


class SingularPoint(DomainError):
    code = "singular point"


class CoincidentPoints(DomainError):
    code = "coincident points"


class RankDeficiency(DomainError):
    code = "rank deficiency"


class NonuniqueCubic(DomainError):
    code = "nonunique cubic"


class NonuniqueQuartic(DomainError):
    code = "nonunique quartic"


class SupportOnBigDiagonal(DomainError):
    code = "support on big diagonal"


class Unsupported(DomainError):
    code = "unsupported"


class VanishingInvariants(DomainError):
    code = "vanishing invariants"
