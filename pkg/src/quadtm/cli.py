"""The `tm` command-line tool.

Machines travel as text files (or stdin with "-"), codes and inputs as
strings of ASCII 0/1.  Exit codes: 0 success (including a clean
"reject"), 1 usage error, 2 invalid machine or code, 3 fuel exhausted,
4 budget exceeded, 5 input outside a partial function's domain.
"""

from __future__ import annotations

import argparse
import sys

from .codec import decode_machine, encode_machine
from .enumeration import (
    DEFAULT_MAX_CODE_LEN,
    enumerate_machines,
    godel_number,
    machine_of_index,
)
from .errors import (
    BudgetError,
    DeterminismError,
    InvalidMachineError,
    MachineSyntaxError,
    MalformedCodeError,
    UndefinedInputError,
)
from .funclib import eval_fn, library, read_output
from .halting import dovetail
from .machine import DEFAULT_FUEL, SYM_CHARS, parse_machine, run, serialize_machine
from .multitape import Verdict, accepts, meter, nd_accepts, parse_multi_machine
from .savitch import DEFAULT_CONFIG_BUDGET, savitch_decide
from .universal import split_program

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_FUEL = 3
EXIT_BUDGET = 4
EXIT_UNDEFINED = 5


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage by default; this tool reserves 2 for
    # invalid machines
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _print_outcome(machine, outcome) -> int:
    if outcome.halted:
        print("halted steps=%d output=%d" % (outcome.steps, read_output(outcome.config)))
        return EXIT_OK
    print("fuel-exhausted steps=%d" % outcome.steps)
    return EXIT_FUEL


def _tracer(machine):
    def emit(n, config):
        print(
            "step=%d state=%s head=%d scan=%s"
            % (n, machine.names[config.state], config.head, SYM_CHARS[config.scanned()])
        )

    return emit


def _cmd_run(args) -> int:
    machine = parse_machine(_read_source(args.machine))
    trace = _tracer(machine) if args.trace else None
    outcome = run(machine, args.input, args.fuel, trace)
    return _print_outcome(machine, outcome)


def _cmd_eval(args) -> int:
    machine = parse_machine(_read_source(args.machine))
    values = [int(a) for a in args.args.split(",")] if args.args else []
    result = eval_fn(machine, values, args.fuel)
    if result.is_value:
        print(result.value)
        return EXIT_OK
    print(result.status)
    return EXIT_FUEL if result.status == "diverged" else EXIT_UNDEFINED


def _cmd_lib(args) -> int:
    try:
        entry = library(args.name)
    except KeyError as exc:
        print("error: %s" % exc.args[0], file=sys.stderr)
        return EXIT_USAGE
    print(serialize_machine(entry.machine), end="")
    return EXIT_OK


def _cmd_encode(args) -> int:
    machine = parse_machine(_read_source(args.machine))
    print(encode_machine(machine))
    return EXIT_OK


def _cmd_decode(args) -> int:
    code = args.code if args.code != "-" else sys.stdin.read().strip()
    machine, rest = decode_machine(code)
    if rest:
        raise InvalidMachineError("%d trailing bits after the machine code" % len(rest))
    print(serialize_machine(machine), end="")
    return EXIT_OK


def _cmd_enum(args) -> int:
    shown = 0
    for idx, machine in enumerate_machines(args.max_len):
        summary = "; ".join(serialize_machine(machine).strip().splitlines())
        print("%d\t%s\t%s" % (idx, encode_machine(machine), summary))
        shown += 1
        if args.count is not None and shown >= args.count:
            break
    return EXIT_OK


def _cmd_nth(args) -> int:
    print(serialize_machine(machine_of_index(args.index, args.max_len)), end="")
    return EXIT_OK


def _cmd_index(args) -> int:
    machine = parse_machine(_read_source(args.machine))
    try:
        print(godel_number(machine, args.max_len))
    except BudgetError:
        print("out-of-budget")
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_univ(args) -> int:
    machine, program = split_program(args.tape)
    trace = _tracer(machine) if args.trace else None
    outcome = run(machine, program, args.fuel, trace)
    return _print_outcome(machine, outcome)


def _cmd_accept(args) -> int:
    machine = parse_multi_machine(_read_source(args.machine))
    if args.nondet:
        verdict = nd_accepts(machine, args.input, args.fuel)
    else:
        verdict = accepts(machine, args.input, args.fuel)
    print(verdict.value)
    return EXIT_FUEL if verdict is Verdict.OUT_OF_FUEL else EXIT_OK


def _cmd_meter(args) -> int:
    machine = parse_multi_machine(_read_source(args.machine))
    text = _read_source(args.inputs_from)
    inputs = [line.strip() for line in text.splitlines()]
    for row in meter(machine, inputs, args.fuel):
        line = "%d\t%d\t%d" % (row.n, row.max_steps, row.max_work_cells)
        if not row.complete:
            line += "\t!"
        print(line)
    return EXIT_OK


def _cmd_savitch(args) -> int:
    machine = parse_multi_machine(_read_source(args.machine))
    result = savitch_decide(machine, args.input, args.space, args.budget)
    print("accept" if result.accepted else "reject")
    return EXIT_OK


def _cmd_dovetail(args) -> int:
    for pair in dovetail(args.stages, args.max_len):
        print("%d\t%d\t%d\t%d" % (pair.x, pair.y, pair.code, pair.stage))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tm", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    def add_fuel(p):
        p.add_argument("--fuel", type=int, default=DEFAULT_FUEL, help="step budget")

    def add_max_len(p):
        p.add_argument(
            "--max-len",
            type=int,
            default=DEFAULT_MAX_CODE_LEN,
            help="code-length budget for the enumeration",
        )

    p = cmd("run", _cmd_run, "run a machine on an input string")
    p.add_argument("machine")
    p.add_argument("--input", default="", help="tape contents, a 0/1 string")
    p.add_argument("--trace", action="store_true", help="print one line per step")
    add_fuel(p)

    p = cmd("trace", _cmd_run, "run with a per-step trace (same as run --trace)")
    p.add_argument("machine")
    p.add_argument("--input", default="")
    add_fuel(p)
    p.set_defaults(trace=True)

    p = cmd("eval", _cmd_eval, "evaluate a machine as a number function")
    p.add_argument("machine")
    p.add_argument("--args", default="", help="comma-separated natural numbers")
    add_fuel(p)

    p = cmd("lib", _cmd_lib, "print a stock library machine")
    p.add_argument("name")

    p = cmd("encode", _cmd_encode, "print a machine's binary code")
    p.add_argument("machine")

    p = cmd("decode", _cmd_decode, "rebuild a machine from its code")
    p.add_argument("code", help="bit string, or - for stdin")

    p = cmd("enum", _cmd_enum, "list machines in code order")
    p.add_argument("--count", type=int, default=None, help="stop after this many")
    add_max_len(p)

    p = cmd("nth", _cmd_nth, "print the machine at a 1-based index")
    p.add_argument("index", type=int)
    add_max_len(p)

    p = cmd("index", _cmd_index, "print a machine's position in the enumeration")
    p.add_argument("machine")
    add_max_len(p)

    p = cmd("univ", _cmd_univ, "run the universal evaluator on code+input bits")
    p.add_argument("--tape", required=True, help="machine code followed by its input")
    p.add_argument("--trace", action="store_true")
    add_fuel(p)

    p = cmd("accept", _cmd_accept, "decide acceptance of an input word")
    p.add_argument("machine")
    p.add_argument("--input", default="")
    p.add_argument("--nondet", action="store_true", help="explore all computation paths")
    add_fuel(p)

    p = cmd("meter", _cmd_meter, "tabulate worst-case steps/cells by input length")
    p.add_argument("machine")
    p.add_argument("--inputs-from", required=True, help="file of input words, one per line")
    add_fuel(p)

    p = cmd("savitch", _cmd_savitch, "decide space-bounded acceptance by halving")
    p.add_argument("machine")
    p.add_argument("--input", default="")
    p.add_argument("--space", type=int, required=True, help="work-tape window, in cells")
    p.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_CONFIG_BUDGET,
        help="largest configuration universe to attempt",
    )

    p = cmd("dovetail", _cmd_dovetail, "interleave all machines and report halts")
    p.add_argument("--stages", type=int, required=True)
    add_max_len(p)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (MachineSyntaxError, DeterminismError, InvalidMachineError, MalformedCodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INVALID
    except BudgetError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except UndefinedInputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_UNDEFINED
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
