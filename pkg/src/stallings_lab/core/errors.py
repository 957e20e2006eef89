"""
Exception hierarchy for the lab.
Every failure the library reports on purpose derives from StallingsLabError.
"""

from typing import Optional


class StallingsLabError(Exception):
    """Base class for all library errors."""


class AlphabetError(StallingsLabError, ValueError):
    """A letter index lies outside the alphabet of the ambient free group."""
    def __init__(self, index: int, rank: int):
        super().__init__(f"Letter index {index} is outside the alphabet of rank {rank}")
        self.index = index
        self.rank = rank


class ContractViolation(StallingsLabError):
    """An operation was called with input that breaks its precondition."""


class RankMismatchError(StallingsLabError):
    """Two subgroups live in free groups of different rank."""
    def __init__(self, left: int, right: int):
        super().__init__(f"Ambient ranks differ: {left} != {right}")
        self.left = left
        self.right = right


class NotASubgroupError(StallingsLabError):
    """relative_index was asked about a pair that is not nested."""


class FormatError(StallingsLabError):
    """Malformed graph or subgroup text."""
    def __init__(self, message: str, line_number: Optional[int] = None):
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{prefix}{message}")
        self.line_number = line_number


class SamplingError(StallingsLabError):
    """The rejection sampler ran out of attempts."""
    def __init__(self, message: str, attempts: int, parameter: Optional[int] = None):
        if parameter is not None:
            message = f"{message} (parameter {parameter})"
        super().__init__(message)
        self.attempts = attempts
        self.parameter = parameter


class ConfigError(StallingsLabError):
    """Invalid configuration file."""
