"""Exception types shared across the planner, mapped to CLI exit codes."""


class PlannerError(Exception):
    """Base class for all planner failures."""

    exit_code = 1


class ConfigError(PlannerError):
    """Scenario file cannot be parsed or fails validation."""

    exit_code = 2


class DataError(PlannerError):
    """Weather data is missing, malformed, or insufficient."""

    exit_code = 3


class DomainError(PlannerError, ValueError):
    """Numeric input outside the model's domain of validity."""

    exit_code = 4
