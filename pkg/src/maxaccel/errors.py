"""Exception types shared by the whole toolkit.

Every domain error raised on purpose derives from ToolkitError so callers
(and the CLI) can distinguish precondition violations from bugs.
"""


class ToolkitError(Exception):
    """Base class for all domain errors raised by this package."""


class DimensionMismatchError(ToolkitError):
    """Arithmetic or comparison attempted between incompatible dimensions."""


class NoDisplayUnitError(ToolkitError):
    """No SI display unit is registered for the requested dimension."""


class UnknownConstantError(ToolkitError):
    """Constant name not present in the pinned table."""


class CausalityError(ToolkitError):
    """A velocity-type quantity exceeded the speed of light."""


class RealityConditionError(ToolkitError):
    """Square-root argument of a field bound went negative."""


class OutOfDomainError(ToolkitError):
    """Input outside the documented domain of an operation."""


class ScanSizingError(ToolkitError):
    """Orthogonality scan window empty or too long for the required step."""


class InvalidStateError(ToolkitError):
    """Malformed quantum state, material, or grid description."""


class ConfigError(ToolkitError):
    """Malformed run configuration."""
