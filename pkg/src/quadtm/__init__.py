"""Quadruple-rule Turing machines as concrete objects: binary-string
numerals and self-delimiting codes, a canonical machine code with its
enumeration, a universal evaluator, a stock library of arithmetic
machines, multitape and nondeterministic execution with time/space
metering, a space-bounded decider by recursive halving, and a
dovetailing semi-decider for the halting set.
"""

__version__ = "0.1.0"

from .codec import (
    bits_to_nat,
    decode_machine,
    encode_machine,
    encode_tuple,
    nat_to_bits,
    pair_bits,
    pair_nats,
    self_delim,
    split_self_delim,
)
from .errors import (
    BudgetError,
    DeterminismError,
    InvalidMachineError,
    MachineSyntaxError,
    MalformedCodeError,
    TMError,
    UndefinedInputError,
)
from .machine import (
    Act,
    Configuration,
    Machine,
    Outcome,
    Rule,
    Sym,
    build_machine,
    parse_machine,
    run,
    serialize_machine,
    step,
)
from .enumeration import (
    enumerate_codes,
    enumerate_machines,
    godel_number,
    is_valid_code,
    machine_of_index,
)
from .universal import split_program, universal_run
from .funclib import (
    LIBRARY,
    FnResult,
    encode_args,
    eval_fn,
    eval_stream_fn,
    library,
    library_names,
    read_output,
)
from .multitape import (
    MultiMachine,
    Verdict,
    accepts,
    meter,
    mt_run,
    nd_accepts,
    parse_multi_machine,
    serialize_multi_machine,
)
from .savitch import BoundedSpace, SavitchResult, savitch_accepts, savitch_decide
from .halting import HaltPair, dovetail, halts_within
