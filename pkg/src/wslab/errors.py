"""Exception types shared across the package."""


class WslabError(Exception):
    """Base class for all package-specific errors."""


class InvalidDimensionError(WslabError):
    pass


class InvalidModelError(WslabError):
    pass


class InvalidPartitionError(WslabError):
    pass


class IllConditionedCouplingError(WslabError):
    def __init__(self, condition: float):
        super().__init__(f"coupling solve ill-conditioned (condition estimate {condition:.3e})")
        self.condition = condition


class AbsorptionRequiredError(WslabError):
    pass


class NonContractionInputError(WslabError):
    pass


class OutOfSupportError(WslabError):
    pass


class UnsupportedRepresentationError(WslabError):
    pass


class QuadratureFailureError(WslabError):
    pass


class UnsupportedFieldError(WslabError):
    pass


class InfeasibleSupportError(WslabError):
    def __init__(self, msg: str, min_value: float = float("nan"), at: float = float("nan")):
        super().__init__(msg)
        self.min_value = min_value
        self.at = at


class SolverDivergedError(WslabError):
    def __init__(self, msg: str, residual_history=None):
        super().__init__(msg)
        self.residual_history = list(residual_history or [])


class SupportAnsatzViolatedError(WslabError):
    pass


class InvalidStateError(WslabError):
    pass


class InsufficientInputError(WslabError):
    pass


class SampleSizeError(WslabError):
    pass


class OutsideAsymptoticRegimeError(WslabError):
    pass
