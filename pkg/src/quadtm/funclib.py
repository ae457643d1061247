"""Number-function conventions and the stock machine library.

A machine computes f(a_1..a_k) when, started on the concatenation of the
wrapped arguments delim(numeral(a_i)), it halts; the value read back is
the numeral block under the head (0 when the head rests on a blank).
Divergence within the step budget reports as such rather than hanging.

The pair-stream machines (left_g, right_h, eq_pred) use a rawer calling
convention: their one argument is an undecomposed stream delim(x)·y.
Streams whose front is not a complete delim(x) are outside their domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from . import fixtures
from .codec import bits_to_nat, nat_to_bits, self_delim, split_self_delim
from .errors import MalformedCodeError
from .machine import Configuration, DEFAULT_FUEL, Machine, Sym, run


def encode_args(args: Sequence[int]) -> str:
    """The input string for an argument tuple: wrapped numerals, joined."""
    return "".join(self_delim(nat_to_bits(a)) for a in args)


def block_value(tape: Mapping[int, Sym], head: int) -> int:
    """Read the output convention off a tape: the numeral value of the
    maximal non-blank block containing `head`, or 0 from a blank cell."""
    if tape.get(head, Sym.BLANK) is Sym.BLANK:
        return 0
    lo = head
    while tape.get(lo - 1, Sym.BLANK) is not Sym.BLANK:
        lo -= 1
    hi = head
    while tape.get(hi + 1, Sym.BLANK) is not Sym.BLANK:
        hi += 1
    return bits_to_nat("".join("01"[tape[i]] for i in range(lo, hi + 1)))


def read_output(config: Configuration) -> int:
    return block_value(config.tape, config.head)


@dataclass(frozen=True)
class FnResult:
    """Outcome of evaluating a partial function: a value, divergence
    (no halt within fuel), or an input outside the domain."""

    status: str  # "value" | "diverged" | "undefined"
    value: Optional[int] = None

    @classmethod
    def of(cls, value: int) -> "FnResult":
        return cls("value", value)

    @classmethod
    def diverged(cls) -> "FnResult":
        return cls("diverged")

    @classmethod
    def undefined(cls) -> "FnResult":
        return cls("undefined")

    @property
    def is_value(self) -> bool:
        return self.status == "value"


def eval_fn(machine: Machine, args: Sequence[int], fuel: int = DEFAULT_FUEL) -> FnResult:
    """Evaluate a machine under the argument-tuple convention."""
    outcome = run(machine, encode_args(args), fuel)
    if not outcome.halted:
        return FnResult.diverged()
    return FnResult.of(read_output(outcome.config))


def eval_stream_fn(machine: Machine, stream: str, fuel: int = DEFAULT_FUEL) -> FnResult:
    """Evaluate a pair-stream machine on delim(x)·y.  Undefined when the
    stream has no complete first component."""
    try:
        split_self_delim(stream)
    except MalformedCodeError:
        return FnResult.undefined()
    outcome = run(machine, stream, fuel)
    if not outcome.halted:
        return FnResult.diverged()
    return FnResult.of(read_output(outcome.config))


@dataclass(frozen=True)
class LibraryEntry:
    name: str
    machine: Machine
    convention: str  # "args" or "stream"
    arity: int

    def __call__(self, *args, fuel: int = DEFAULT_FUEL) -> FnResult:
        if self.convention == "stream":
            (stream,) = args
            return eval_stream_fn(self.machine, stream, fuel)
        return eval_fn(self.machine, list(args), fuel)


def _build_library() -> dict[str, LibraryEntry]:
    lib = {}
    for name, (convention, arity, quads) in fixtures.stock_tables().items():
        lib[name] = LibraryEntry(name, fixtures.build(quads), convention, arity)
    return lib


LIBRARY: dict[str, LibraryEntry] = _build_library()


def library(name: str) -> LibraryEntry:
    try:
        return LIBRARY[name]
    except KeyError:
        raise KeyError(
            "no library machine %r (have: %s)" % (name, ", ".join(sorted(LIBRARY)))
        ) from None


def library_names() -> list[str]:
    return sorted(LIBRARY)
