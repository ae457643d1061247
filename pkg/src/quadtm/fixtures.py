"""Hand-built rule tables for the stock machine library.

Every table is a list of (state, scan, action, next-state) quadruples in
the same four-column format the text loader accepts.  States named
"halt" never appear on a left-hand side, so reaching one stops the
machine.  Inputs follow the argument conventions in `funclib`: each
argument arrives as delim(numeral(arg)), i.e. 1^k 0 followed by the
k-bit numeral, arguments simply concatenated.

Design notes that apply throughout:

* With only three tape symbols there is no room for markers, so the
  machines work by erasing what they have consumed and keeping regions
  separated by single blank gaps.
* "Numerals" are the length-then-lexicographic strings of `codec`; the
  value 1 is the block "0", so predicates answer by writing a lone 0 on
  an otherwise isolated cell (true) or halting over a blank (false).
* The pair walkers (`RIGHT_H`, `LEFT_G`, `EQ_PRED`) read one raw stream
  delim(x)·y.  RIGHT_H erases delim(x) and halts on the first cell of y.
  LEFT_G copies x to the left of the stream, erases everything else, and
  halts on the copy.  EQ_PRED builds the same copy, then zig-zags
  comparing it with y bit by bit.
"""

from __future__ import annotations

from .machine import Machine, build_machine

Quad = tuple[str, str, str, str]

# x+1 in numeral arithmetic: strip the argument wrapper, then binary
# increment right-to-left; carrying off the left end appends a digit,
# which is exactly how the numeral system rolls over (e.g. "11" -> "000").
SUCCESSOR: list[Quad] = [
    ("strip", "1", "B", "strip_m"),
    ("strip_m", "B", "R", "strip"),
    ("strip", "0", "B", "dstrip"),
    ("dstrip", "B", "R", "seek"),
    ("seek", "0", "R", "seek"),
    ("seek", "1", "R", "seek"),
    ("seek", "B", "L", "inc"),
    ("inc", "0", "1", "halt"),
    ("inc", "1", "0", "carry"),
    ("carry", "0", "L", "inc"),
    ("inc", "B", "0", "halt"),
]

# Constant zero of any arity: step off the input onto the blank cell to
# its left and halt there.  (On an empty tape it halts immediately.)
ZERO: list[Quad] = [
    ("start", "0", "L", "park"),
    ("start", "1", "L", "park"),
]

# The identity on the *wrapped* argument: the single rule can never fire
# on a wrapped input (cell 0 is never blank), so the machine halts at
# step 0 with the whole delim(numeral(x)) string as its output block.
BAR_FN: list[Quad] = [
    ("start", "B", "B", "start"),
]

# |numeral(x)|: the wrapper 1^k 0 already carries k in unary, so erase
# the payload, then transfer the unary run into a binary counter kept
# left of cell 0 (one blank gap as separator), incrementing once per 1.
LENGTH: list[Quad] = [
    ("start", "1", "R", "skips"),
    ("start", "0", "B", "wz1"),
    ("wz1", "B", "R", "wz2"),
    ("wz2", "0", "B", "wz1"),
    ("wz2", "1", "B", "wz1"),
    ("skips", "1", "R", "skips"),
    ("skips", "0", "B", "wp1"),
    ("wp1", "B", "R", "wp2"),
    ("wp2", "0", "B", "wp1"),
    ("wp2", "1", "B", "wp1"),
    ("wp2", "B", "L", "back"),
    ("back", "B", "L", "back"),
    ("back", "1", "B", "tolft"),
    ("tolft", "B", "L", "cl"),
    ("cl", "1", "L", "cl"),
    ("cl", "B", "L", "inc"),
    ("inc", "0", "1", "ret"),
    ("inc", "1", "0", "car"),
    ("inc", "B", "0", "ret"),
    ("car", "0", "L", "inc"),
    ("ret", "0", "R", "ret"),
    ("ret", "1", "R", "ret"),
    ("ret", "B", "R", "chk"),
    ("chk", "1", "R", "run2"),
    ("chk", "B", "L", "dn1"),
    ("run2", "1", "R", "run2"),
    ("run2", "B", "L", "eat"),
    ("eat", "1", "B", "tolft"),
    ("dn1", "B", "L", "dn2"),
]

# Drop delim(x) off the front of delim(x)·y and halt on y's first cell.
# Cycle: erase two run 1s, write a 1 over the delimiter (the run slides
# right by one net -1), and turn the next payload bit into the new
# delimiter; when the run is down to its last 1 the "two" probe hits the
# delimiter instead and the final branch erases delimiter + last payload
# bit.  Each payload bit is consumed exactly once, so after |x| cycles
# the head stands on y.
RIGHT_H: list[Quad] = [
    ("start", "1", "B", "gap1"),
    ("start", "0", "B", "done0"),
    ("done0", "B", "R", "halt"),
    ("gap1", "B", "R", "two"),
    ("two", "1", "B", "gap2"),
    ("two", "0", "B", "fin1"),
    ("gap2", "B", "R", "seek0"),
    ("seek0", "1", "R", "seek0"),
    ("seek0", "0", "1", "gap3"),
    ("gap3", "1", "R", "eat"),
    ("eat", "0", "0", "back0"),
    ("eat", "1", "0", "back0"),
    ("back0", "0", "L", "back"),
    ("back", "1", "L", "back"),
    ("back", "B", "R", "start"),
    ("fin1", "B", "R", "fin2"),
    ("fin2", "0", "B", "fin3"),
    ("fin2", "1", "B", "fin3"),
    ("fin3", "B", "R", "halt"),
]


def _copy_phase(on_zero: str, on_one: str) -> list[Quad]:
    """Core of LEFT_G and EQ_PRED: transport x's bits, one per cycle,
    from the payload of delim(x) onto the erased run cells at the left.

    Invariant entering cycle j (0-based): copy bits sit on cells 0..j-1,
    cell j is blank (the frontier), the remaining run 1s follow, then
    blanks, then the current delimiter 0, then the unread payload.  The
    walker erases the delimiter, turns the payload bit behind it into
    the new delimiter while remembering its value, carries that value
    left across run and blanks to the frontier, writes it, and erases
    one more run 1.  When the run empties, a right walk fetches the last
    payload bit and hands it to the caller's `on_zero`/`on_one` states,
    which see the head on the (now erased) last payload cell.
    """
    return [
        ("wb", "1", "R", "wb"),
        ("wb", "B", "R", "wg"),
        ("wb", "0", "B", "d2"),
        ("wg", "B", "R", "wg"),
        ("wg", "0", "B", "d2"),
        ("d2", "B", "R", "d3"),
        ("d3", "0", "0", "l0"),
        ("d3", "1", "0", "l1"),
        ("l0", "0", "L", "l0b"),
        ("l0b", "B", "L", "l0b"),
        ("l0b", "1", "L", "l0c"),
        ("l0c", "1", "L", "l0c"),
        ("l0c", "B", "0", "wr"),
        ("l1", "0", "L", "l1b"),
        ("l1b", "B", "L", "l1b"),
        ("l1b", "1", "L", "l1c"),
        ("l1c", "1", "L", "l1c"),
        ("l1c", "B", "1", "wr"),
        ("wr", "0", "R", "fk"),
        ("wr", "1", "R", "fk"),
        ("fk", "1", "B", "fm"),
        ("fm", "B", "R", "fp"),
        ("fp", "1", "R", "wb"),
        ("fp", "B", "R", "wa"),
        ("wa", "B", "R", "wa"),
        ("wa", "0", "B", "e2"),
        ("e2", "B", "R", "e3"),
        ("e3", "0", "B", on_zero),
        ("e3", "1", "B", on_one),
    ]


# x (as a number) from delim(x)·y.  Copies x to cells 0..|x|-1, erases
# the rest of the stream's wrapper, wipes y only in the x = empty case
# (where the answer 0 must be a halt-on-blank), and halts on the copy.
LEFT_G: list[Quad] = [
    ("start", "1", "B", "i1"),
    ("start", "0", "B", "z1"),
    ("z1", "B", "R", "z2"),
    ("z2", "0", "B", "z1"),
    ("z2", "1", "B", "z1"),
    ("i1", "B", "R", "i2"),
    ("i2", "0", "B", "n1"),
    ("i2", "1", "R", "wb"),
    ("n1", "B", "R", "n2"),
    ("n2", "0", "B", "m0"),
    ("n2", "1", "B", "m1"),
    ("m0", "B", "L", "p0"),
    ("p0", "B", "0", "halt"),
    ("m1", "B", "L", "p1"),
    ("p1", "B", "1", "halt"),
    *_copy_phase("f0", "f1"),
    ("f0", "B", "L", "f0b"),
    ("f0b", "B", "L", "f0b"),
    ("f0b", "0", "R", "f0c"),
    ("f0b", "1", "R", "f0c"),
    ("f0c", "B", "0", "halt"),
    ("f1", "B", "L", "f1b"),
    ("f1b", "B", "L", "f1b"),
    ("f1b", "0", "R", "f1c"),
    ("f1b", "1", "R", "f1c"),
    ("f1c", "B", "1", "halt"),
]

# [x = y] on a stream delim(x)·y, answering 1 (an isolated "0" block)
# or 0 (halt over a blank).  Same copy phase as LEFT_G, but the last
# fetched bit is only written back after peeking that y is nonempty;
# then the comparison loop repeatedly erases the copy's first bit,
# crosses to y's first surviving bit, and checks they agree.  All the
# length mismatches fall out of which probe hits a blank first.
EQ_PRED: list[Quad] = [
    ("start", "1", "B", "i1"),
    ("start", "0", "B", "za"),
    ("za", "B", "R", "zb"),
    ("zb", "B", "0", "halt"),
    ("zb", "0", "L", "rj"),
    ("zb", "1", "L", "rj"),
    ("i1", "B", "R", "i2"),
    ("i2", "0", "B", "n1"),
    ("i2", "1", "R", "wb"),
    ("n1", "B", "R", "n2"),
    ("n2", "0", "B", "m0"),
    ("n2", "1", "B", "m1"),
    ("m0", "B", "R", "c0"),
    ("m1", "B", "R", "c1"),
    ("c0", "0", "B", "v1"),
    ("c0", "1", "L", "rj"),
    ("c1", "1", "B", "v1"),
    ("c1", "0", "L", "rj"),
    ("v1", "B", "R", "v2"),
    ("v2", "B", "0", "halt"),
    ("v2", "0", "L", "rj"),
    ("v2", "1", "L", "rj"),
    *_copy_phase("y0", "y1"),
    ("y0", "B", "R", "k0"),
    ("y1", "B", "R", "k1"),
    ("k0", "0", "L", "f0b"),
    ("k0", "1", "L", "f0b"),
    ("k1", "0", "L", "f1b"),
    ("k1", "1", "L", "f1b"),
    ("f0b", "B", "L", "f0b"),
    ("f0b", "0", "R", "f0c"),
    ("f0b", "1", "R", "f0c"),
    ("f0c", "B", "0", "qa"),
    ("f1b", "B", "L", "f1b"),
    ("f1b", "0", "R", "f1c"),
    ("f1b", "1", "R", "f1c"),
    ("f1c", "B", "1", "qa"),
    ("qa", "0", "L", "qa"),
    ("qa", "1", "L", "qa"),
    ("qa", "B", "R", "fa"),
    ("fa", "0", "B", "g0"),
    ("fa", "1", "B", "g1"),
    ("g0", "B", "R", "h0"),
    ("g1", "B", "R", "h1"),
    ("h0", "0", "R", "w0"),
    ("h0", "1", "R", "w0"),
    ("h0", "B", "R", "u0"),
    ("h1", "0", "R", "w1"),
    ("h1", "1", "R", "w1"),
    ("h1", "B", "R", "u1"),
    ("w0", "0", "R", "w0"),
    ("w0", "1", "R", "w0"),
    ("w0", "B", "R", "x0"),
    ("w1", "0", "R", "w1"),
    ("w1", "1", "R", "w1"),
    ("w1", "B", "R", "x1"),
    ("x0", "B", "R", "x0"),
    ("x0", "0", "B", "cm"),
    ("x0", "1", "L", "rj"),
    ("x1", "B", "R", "x1"),
    ("x1", "1", "B", "cm"),
    ("x1", "0", "L", "rj"),
    ("cm", "B", "R", "bp"),
    ("bp", "0", "L", "bw"),
    ("bp", "1", "L", "bw"),
    ("bw", "B", "L", "bw"),
    ("bw", "0", "L", "aw"),
    ("bw", "1", "L", "aw"),
    ("aw", "0", "L", "aw"),
    ("aw", "1", "L", "aw"),
    ("aw", "B", "R", "fa"),
    ("u0", "B", "R", "u0"),
    ("u0", "0", "B", "uc"),
    ("u0", "1", "L", "rj"),
    ("u1", "B", "R", "u1"),
    ("u1", "1", "B", "uc"),
    ("u1", "0", "L", "rj"),
    ("uc", "B", "R", "fz"),
    ("fz", "B", "0", "halt"),
    ("fz", "0", "L", "rj"),
    ("fz", "1", "L", "rj"),
]


def chain(*tables: list[Quad]) -> list[Quad]:
    """Sequence fixture passes: run the first table, and where it would
    reach "halt", start the next one from the current head position.
    State names get a per-pass prefix to keep the passes disjoint."""
    out: list[Quad] = []
    for i, table in enumerate(tables):
        prefix = "s%d_" % i
        last = i == len(tables) - 1
        next_start = None if last else "s%d_%s" % (i + 1, tables[i + 1][0][0])
        for p, scan, act, q in table:
            if q == "halt" and not last:
                succ = next_start
            else:
                succ = prefix + q
            out.append((prefix + p, scan, act, succ))
    return out


# Projections.  LEFT_G already ignores everything after the first
# argument block, so selecting argument m of n means skipping m-1 blocks
# with RIGHT_H passes and then reading one with LEFT_G.
_PROJ_TABLES: dict[str, list[Quad]] = {
    "proj_1_1": LEFT_G,
    "proj_1_2": LEFT_G,
    "proj_1_3": LEFT_G,
    "proj_2_2": chain(RIGHT_H, LEFT_G),
    "proj_2_3": chain(RIGHT_H, LEFT_G),
    "proj_3_3": chain(RIGHT_H, RIGHT_H, LEFT_G),
}


def stock_tables() -> dict[str, tuple[str, int, list[Quad]]]:
    """name -> (convention, arity, quads) for the whole stock library.
    Convention "args" means the machine reads wrapped argument blocks;
    "stream" means it reads one raw delim(x)·y stream."""
    tables: dict[str, tuple[str, int, list[Quad]]] = {
        "successor": ("args", 1, SUCCESSOR),
        "zero_1": ("args", 1, ZERO),
        "zero_2": ("args", 2, ZERO),
        "zero_3": ("args", 3, ZERO),
        "length": ("args", 1, LENGTH),
        "bar_fn": ("args", 1, BAR_FN),
        "left_g": ("stream", 1, LEFT_G),
        "right_h": ("stream", 1, RIGHT_H),
        "eq_pred": ("stream", 1, EQ_PRED),
    }
    for name, quads in _PROJ_TABLES.items():
        arity = int(name.split("_")[2])
        tables[name] = ("args", arity, quads)
    return tables


def build(quads: list[Quad]) -> Machine:
    return build_machine(quads)
