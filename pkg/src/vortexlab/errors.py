class DomainError(ValueError):
    """Input violates a mathematical precondition of an operation."""


class ShapeMismatchError(DomainError):
    pass


class BranchSafetyError(DomainError):
    """Plaquette angles would leave the principal branch."""


class InconsistentWeightsError(DomainError):
    """Fixed-point weight data that no split bundle with a lifted action can carry."""


class UnstableError(DomainError):
    """The complexified orbit contains no zero of the shifted moment map."""


class NonFiniteEnergyError(DomainError):
    """NaN or Inf met during descent, usually a blow-up after a bad step."""


class SchemaError(DomainError):
    """A JSON document is missing a field or carries one of the wrong type."""

    def __init__(self, field, message=None):
        self.field = field
        super().__init__(message or f"Missing or invalid field `{field}`.")
