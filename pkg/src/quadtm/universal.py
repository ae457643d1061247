"""The universal evaluator: decode a machine code off the front of the
input, then run the decoded machine on what remains.

Feeding it code(T) + p behaves exactly like running T on p, step counts
included.  Streams with no valid code prefix are outside its domain.
"""

from __future__ import annotations

from typing import Callable, Optional

from .codec import decode_machine
from .errors import InvalidMachineError, MalformedCodeError, UndefinedInputError
from .machine import Configuration, DEFAULT_FUEL, Machine, Outcome, run


def split_program(stream: str) -> tuple[Machine, str]:
    """Split code(T)·p into (T, p); UndefinedInputError if no valid
    machine code starts the stream."""
    try:
        return decode_machine(stream)
    except (MalformedCodeError, InvalidMachineError) as exc:
        raise UndefinedInputError("no machine code prefix: %s" % exc) from exc


def universal_run(
    stream: str,
    fuel: int = DEFAULT_FUEL,
    trace: Optional[Callable[[int, Configuration], None]] = None,
) -> tuple[Machine, Outcome]:
    """Run the machine encoded at the front of `stream` on the rest."""
    machine, rest = split_program(stream)
    return machine, run(machine, rest, fuel, trace)
