"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed user input (bad JSON, unknown labels, wrong shapes)."""


class MismatchError(InputError):
    """Operands belong to different hyperfields or ground sets."""


class GPInconsistencyError(ValueError):
    """A Grassmann-Pluecker function produced contradictory derived data."""


class InvalidDualPairError(ValueError):
    """Circuit/cocircuit input does not form a dual pair."""


class RatioInconsistencyError(ValueError):
    """Cocircuit ratios disagree across defining choices."""


class ConsistencyError(RuntimeError):
    """Two checkers that must agree produced different verdicts."""
