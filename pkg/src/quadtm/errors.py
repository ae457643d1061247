"""Exception types shared across the package."""


class TMError(Exception):
    """Base class for all errors raised by this package."""


class MachineSyntaxError(TMError):
    """A machine source file could not be parsed."""


class DeterminismError(TMError):
    """Two rules fire on the same (state, scanned-symbol) pair."""


class MalformedCodeError(TMError):
    """A bit stream is structurally broken: a length prefix runs off the
    end, or fewer rule-field bits remain than the header promises."""


class InvalidMachineError(TMError):
    """A bit stream parsed cleanly but does not describe a canonical
    machine (bad field code, non-contiguous state codes, non-minimal
    field width, duplicate rule key, ...)."""


class UndefinedInputError(TMError):
    """An input falls outside a partial function's domain (e.g. the
    universal machine was fed a string with no valid machine prefix)."""


class BudgetError(TMError):
    """A search or enumeration exceeded its configured resource budget."""
