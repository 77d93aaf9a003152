"""Exception types shared across the package."""


class ParityError(ValueError):
    """An exponent vector or character does not satisfy the required parity."""


class ArityError(ValueError):
    """Too few exponents were supplied."""


class BudgetExceeded(RuntimeError):
    """A brute-force character sum would enumerate too many tuples."""
