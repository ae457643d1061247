"""Binary-string numerals, self-delimiting codes, and machine codes.

Numerals: natural numbers correspond to binary strings by enumerating
all strings in length-then-lexicographic order,

    0 <-> "", 1 <-> "0", 2 <-> "1", 3 <-> "00", 4 <-> "01", ...

so n maps to the n-th string and back; both directions are cheap closed
forms.

Self-delimiting codes: a string x becomes 1^|x| 0 x, which a reader can
strip off the front of any stream without knowing where it ends.  Pairing
prepends the self-delimited first component to the raw second component.

A machine is serialised as

    delim(numeral(s)) delim(numeral(r)) then 4r fields of s bits each

where r is the rule count and s the common field width.  Fields encode,
per rule, state / scanned symbol / action / next state.  Symbols take
codes 0..2, actions 0..4, and states take codes from 5 up in order of
first appearance in the rule list, so the start state is always code 5.
The width s must be exactly the bits needed for the largest state code,
making the whole code canonical: machine -> code -> machine is the
identity, and so is code -> machine -> code on valid codes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from .errors import InvalidMachineError, MalformedCodeError
from .machine import Act, Machine, Rule, Sym, validate_bits

SYMBOL_CODES = 3  # tape symbols occupy codes 0..2
ACTION_CODES = 5  # actions occupy codes 0..4
FIRST_STATE_CODE = 5


def nat_to_bits(n: int) -> str:
    """The n-th binary string in length-then-lexicographic order."""
    if n < 0:
        raise ValueError("expected a natural number")
    length = (n + 1).bit_length() - 1
    if length == 0:
        return ""
    return format(n + 1 - (1 << length), "0%db" % length)


def bits_to_nat(bits: str) -> int:
    """Position of `bits` in length-then-lexicographic order."""
    validate_bits(bits)
    rank = int(bits, 2) if bits else 0
    return (1 << len(bits)) - 1 + rank


def self_delim(bits: str) -> str:
    """1^|x| 0 x: readable from a stream without an external length."""
    validate_bits(bits)
    return "1" * len(bits) + "0" + bits


def split_self_delim(stream: str) -> tuple[str, str]:
    """Strip one self-delimited string off the front; returns (payload,
    rest).  Raises MalformedCodeError when the stream is too short."""
    validate_bits(stream)
    n = 0
    while n < len(stream) and stream[n] == "1":
        n += 1
    if n >= len(stream):
        raise MalformedCodeError("stream ends before the length prefix does")
    start = n + 1
    if start + n > len(stream):
        raise MalformedCodeError("stream ends inside the payload")
    return stream[start : start + n], stream[start + n :]


def pair_bits(x: str, y: str) -> str:
    """Pair two strings; the first component is recoverable by
    `split_self_delim`, the second is whatever follows."""
    return self_delim(x) + y


def split_pair(stream: str) -> tuple[str, str]:
    return split_self_delim(stream)


def pair_nats(x: int, y: int) -> int:
    """The pairing map on numbers: pair their numerals, read as a numeral."""
    return bits_to_nat(pair_bits(nat_to_bits(x), nat_to_bits(y)))


def encode_tuple(items: Iterable[str], scheme: Literal["nested", "flat"] = "nested") -> str:
    """Tuple codes.

    nested: right-fold of the pair, so the last component rides raw.
    flat:   every component self-delimited and concatenated, which stays
            decodable when the arity is not known in advance.
    A single component encodes as itself under the nested scheme.
    """
    items = list(items)
    if scheme == "flat":
        return "".join(self_delim(x) for x in items)
    if not items:
        raise ValueError("nested tuple code needs at least one component")
    out = items[-1]
    validate_bits(out)
    for x in reversed(items[:-1]):
        out = pair_bits(x, out)
    return out


def decode_flat_tuple(stream: str) -> list[str]:
    """Inverse of the flat scheme: split a whole stream into components."""
    out = []
    while stream:
        x, stream = split_self_delim(stream)
        out.append(x)
    return out


@dataclass(frozen=True)
class CodeLayout:
    """Geometry of a machine's code: the field width, the rule count, and
    machine state ids listed in field-code order (ids[i] has code 5+i)."""

    field_bits: int
    rule_count: int
    state_order: tuple[int, ...]

    @property
    def total_bits(self) -> int:
        s, r = self.field_bits, self.rule_count
        return len(self_delim(nat_to_bits(s))) + len(self_delim(nat_to_bits(r))) + 4 * r * s


def _state_order(machine: Machine) -> tuple[int, ...]:
    order: list[int] = []
    seen = set()
    for rule in machine.rules:
        for sid in (rule.state, rule.succ):
            if sid not in seen:
                seen.add(sid)
                order.append(sid)
    return tuple(order)


def code_layout(machine: Machine) -> CodeLayout:
    order = _state_order(machine)
    field_bits = (len(order) + FIRST_STATE_CODE - 1).bit_length()
    return CodeLayout(field_bits, len(machine.rules), order)


def encode_machine(machine: Machine) -> str:
    layout = code_layout(machine)
    s = layout.field_bits
    code_of = {sid: FIRST_STATE_CODE + i for i, sid in enumerate(layout.state_order)}
    parts = [self_delim(nat_to_bits(s)), self_delim(nat_to_bits(len(machine.rules)))]
    for rule in machine.rules:
        for value in (code_of[rule.state], int(rule.scan), int(rule.act), code_of[rule.succ]):
            parts.append(format(value, "0%db" % s))
    return "".join(parts)


def decode_machine(stream: str) -> tuple[Machine, str]:
    """Read one machine code off the front of `stream`.

    Returns (machine, rest).  MalformedCodeError means the stream is
    structurally short; InvalidMachineError means it parsed but is not
    the canonical code of any machine.
    """
    s_bits, stream = split_self_delim(stream)
    r_bits, stream = split_self_delim(stream)
    s = bits_to_nat(s_bits)
    r = bits_to_nat(r_bits)
    if r < 1:
        raise InvalidMachineError("rule count is zero")
    if s < 1:
        raise InvalidMachineError("field width is zero")
    body_len = 4 * r * s
    if len(stream) < body_len:
        raise MalformedCodeError(
            "need %d rule-field bits, have %d" % (body_len, len(stream))
        )
    body, rest = stream[:body_len], stream[body_len:]

    fields = [int(body[i * s : (i + 1) * s], 2) for i in range(4 * r)]
    next_new = FIRST_STATE_CODE
    rules = []
    for j in range(r):
        p, sym, act, q = fields[4 * j : 4 * j + 4]
        for c in (p, q):
            if c < FIRST_STATE_CODE:
                raise InvalidMachineError("state field holds code %d < 5" % c)
        if sym >= SYMBOL_CODES:
            raise InvalidMachineError("symbol field holds code %d" % sym)
        if act >= ACTION_CODES:
            raise InvalidMachineError("action field holds code %d" % act)
        if p > next_new:
            raise InvalidMachineError("state code %d skips ahead of first-appearance order" % p)
        if p == next_new:
            next_new += 1
        if q > next_new:
            raise InvalidMachineError("state code %d skips ahead of first-appearance order" % q)
        if q == next_new:
            next_new += 1
        rules.append((p, sym, act, q))
    n_states = next_new - FIRST_STATE_CODE
    if s != (next_new - 1).bit_length():
        raise InvalidMachineError(
            "field width %d is not minimal for %d states" % (s, n_states)
        )
    seen = set()
    for p, sym, _, _ in rules:
        if (p, sym) in seen:
            raise InvalidMachineError("duplicate rule key (%d, %d)" % (p, sym))
        seen.add((p, sym))

    names = tuple("q%d" % (i + 1) for i in range(n_states))
    machine = Machine(
        tuple(
            Rule(p - FIRST_STATE_CODE, Sym(sym), Act(act), q - FIRST_STATE_CODE)
            for p, sym, act, q in rules
        ),
        names,
    )
    return machine, rest
