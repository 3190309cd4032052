"""Exception types shared across the package.

The CLI and the HTTP service map these onto exit codes / report statuses,
so raising the right class matters more than the message text.
"""


class SingularMatrixError(ValueError):
    """A matrix required to be invertible has determinant zero."""


class ConditionError(ValueError):
    """An exponent matrix fails one of the admissibility conditions.

    ``condition`` is 1 (invertibility), 2 (positive weights) or
    3 (no atomic decomposition / bad monomial pattern).
    """

    def __init__(self, condition: int, message: str):
        super().__init__(f"condition ({condition}): {message}")
        self.condition = condition


class NotAnAutomorphismError(ValueError):
    """A phase vector does not leave the potential invariant."""


class NotSpecialLinearError(ValueError):
    """SL violation: a symmetry group escapes the determinant-one subgroup."""


class RestrictionError(ValueError):
    """A sector restriction is neither zero nor a quasi-smooth potential."""


class EnumerationLimitError(RuntimeError):
    """A group is too large for element-by-element enumeration."""
