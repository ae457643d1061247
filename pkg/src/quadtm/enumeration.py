"""Indexing machines by their codes.

Valid codes, ordered by length and lexicographically within a length,
enumerate all machines: index n (1-based) belongs to the n-th code.  The
enumerator here *generates* codes group by group instead of testing every
bit string: a group is a (field-width, rule-count) pair, groups are
emitted in code order (the header is a prefix-free code, so comparing
headers settles ties in total length), and within a group the rule fields
are filled in ascending numeric order, which is lexicographic order of
the body bits.  The brute-force scan in `kernels` provides the same list
the slow way and is used to cross-check this module.

Every operation takes a code-length budget; the default covers the first
30 machines (all of them 20-bit, one-rule codes).  Exceeding a budget
raises BudgetError rather than silently searching forever.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .codec import (
    FIRST_STATE_CODE,
    decode_machine,
    encode_machine,
    nat_to_bits,
    self_delim,
)
from .errors import BudgetError, InvalidMachineError, MalformedCodeError
from .machine import Machine

DEFAULT_MAX_CODE_LEN = 24


def is_valid_code(bits: str) -> bool:
    """Is `bits` exactly the canonical code of some machine?"""
    try:
        _, rest = decode_machine(bits)
    except (MalformedCodeError, InvalidMachineError):
        return False
    return rest == ""


def _groups(max_len: int):
    """All (total_len, header, s, r) with 4rs + |header| <= max_len, in
    code order: by total length, then lexicographically by header (the
    two header fields are prefix-free, so header order is well-defined
    within a length class)."""
    groups = []
    s = 1
    while True:
        s_hdr = self_delim(nat_to_bits(s))
        if len(s_hdr) + 3 + 4 * s > max_len:  # 3 = shortest possible r header
            break
        r = 1
        while True:
            header = s_hdr + self_delim(nat_to_bits(r))
            total = len(header) + 4 * r * s
            if total > max_len:
                break
            groups.append((total, header, s, r))
            r += 1
        s += 1
    groups.sort(key=lambda g: (g[0], g[1]))
    return groups


def _bodies(s: int, r: int) -> Iterator[tuple]:
    """Yield rule-field tuples (p, sym, act, q)*r for every canonical
    body of a width-s, r-rule code, in lexicographic body order."""
    maxcode = (1 << s) - 1
    # smallest state count for which width s is minimal
    min_states = max(1, (1 << (s - 1)) - FIRST_STATE_CODE + 1)
    rules: list = []
    used: set = set()

    def rec(j: int, next_new: int) -> Iterator[tuple]:
        if j == r:
            if (next_new - 1).bit_length() == s:
                yield tuple(rules)
            return
        # at most two new states per remaining rule
        if next_new - FIRST_STATE_CODE + 2 * (r - j) < min_states:
            return
        for p in range(FIRST_STATE_CODE, min(next_new, maxcode) + 1):
            nn1 = next_new + 1 if p == next_new else next_new
            for sym in range(3):
                if (p, sym) in used:
                    continue
                used.add((p, sym))
                for act in range(5):
                    for q in range(FIRST_STATE_CODE, min(nn1, maxcode) + 1):
                        nn2 = nn1 + 1 if q == nn1 else nn1
                        rules.append((p, sym, act, q))
                        yield from rec(j + 1, nn2)
                        rules.pop()
                used.discard((p, sym))

    yield from rec(0, FIRST_STATE_CODE)


def enumerate_codes(max_code_len: Optional[int] = None) -> Iterator[str]:
    """Every valid code of length <= the budget, in code order."""
    budget = DEFAULT_MAX_CODE_LEN if max_code_len is None else max_code_len
    for _, header, s, r in _groups(budget):
        for rules in _bodies(s, r):
            body = "".join(
                format(field, "0%db" % s) for rule in rules for field in rule
            )
            yield header + body


def enumerate_machines(
    max_code_len: Optional[int] = None,
) -> Iterator[tuple[int, Machine]]:
    """Yield (index, machine), index counting valid codes from 1."""
    for idx, code in enumerate(enumerate_codes(max_code_len), 1):
        machine, _ = decode_machine(code)
        yield idx, machine


def godel_number(machine: Machine, max_code_len: Optional[int] = None) -> int:
    """The 1-based position of this machine's code among all valid codes."""
    budget = DEFAULT_MAX_CODE_LEN if max_code_len is None else max_code_len
    code = encode_machine(machine)
    if len(code) > budget:
        raise BudgetError(
            "code is %d bits but the length budget is %d" % (len(code), budget)
        )
    for idx, c in enumerate(enumerate_codes(len(code)), 1):
        if c == code:
            return idx
    raise AssertionError("canonical code missing from its own enumeration")


def machine_of_index(index: int, max_code_len: Optional[int] = None) -> Machine:
    """The machine whose code sits at 1-based position `index`."""
    if index < 1:
        raise ValueError("indices start at 1")
    for idx, machine in enumerate_machines(max_code_len):
        if idx == index:
            return machine
    budget = DEFAULT_MAX_CODE_LEN if max_code_len is None else max_code_len
    raise BudgetError(
        "only %d machines have codes within %d bits"
        % (sum(1 for _ in enumerate_codes(budget)), budget)
    )
