"""Pure-Python implementations of the two hot loops.

`kernels` re-exports either this module or the compiled `_kernels`
extension; both expose the same functions with identical semantics:

* run_encoded  -- the single-tape interpreter inner loop over dense
  action/successor tables,
* scan_valid_codes -- brute-force enumeration of every canonical machine
  code up to a length bound, working on integers rather than strings.

Symbols are encoded 0, 1, 2 (blank); actions 0/1/2 (write symbol),
3 (left), 4 (right); action value 5 marks "no rule" in the dense table.
"""

IMPL = "pure"

_BLANK = 2
_NO_RULE = 5


def run_encoded(start, act, nxt, tape, fuel):
    """Run the dense-table machine on `tape` (bytes of cell symbols laid
    out from cell 0) for at most `fuel` steps.

    Returns (halted, state, head, steps, buf, lo) where `buf` is the
    final tape window as bytes and `lo` is the cell number of buf[0].

    The halt test precedes the fuel test: a machine that halts after
    exactly `fuel` steps is still reported Halted, and fuel 0 detects an
    immediate halt.  Fuel only bounds executed steps.
    """
    buf = bytearray(b"\x02" * 32) + bytes(tape) + b"\x02" * 32
    lo = -32
    head = 0
    state = start
    steps = 0
    while True:
        idx = state * 3 + buf[head - lo]
        a = act[idx]
        if a == _NO_RULE:
            return True, state, head, steps, bytes(buf), lo
        if steps >= fuel:
            return False, state, head, steps, bytes(buf), lo
        if a < 3:
            buf[head - lo] = a
        elif a == 3:
            head -= 1
            if head < lo:
                buf = bytearray(b"\x02" * len(buf)) + buf
                lo -= len(buf) // 2
        else:
            head += 1
            if head - lo >= len(buf):
                buf.extend(b"\x02" * len(buf))
        state = nxt[idx]
        steps += 1


def code_bits_valid(v, length):
    """Does the `length`-bit big-endian expansion of `v` spell a complete
    canonical machine code?  Mirrors the string-level decoder exactly but
    works on the integer, which keeps the exhaustive scan cheap.
    """
    # self-delimited width field
    i = 0
    ones = 0
    while i < length and (v >> (length - 1 - i)) & 1:
        ones += 1
        i += 1
    if i >= length:
        return False
    i += 1
    if i + ones > length:
        return False
    val = 0
    for _ in range(ones):
        val = val << 1 | (v >> (length - 1 - i)) & 1
        i += 1
    s = (1 << ones) - 1 + val

    # self-delimited rule-count field
    ones = 0
    while i < length and (v >> (length - 1 - i)) & 1:
        ones += 1
        i += 1
    if i >= length:
        return False
    i += 1
    if i + ones > length:
        return False
    val = 0
    for _ in range(ones):
        val = val << 1 | (v >> (length - 1 - i)) & 1
        i += 1
    r = (1 << ones) - 1 + val

    rem = length - i
    if s < 1 or s > rem // 4:
        return False
    if r < 1 or r > rem // (4 * s):
        return False
    if 4 * r * s != rem:
        return False

    next_new = 5
    used = set()
    p = 0
    for f in range(4 * r):
        c = 0
        for _ in range(s):
            c = c << 1 | (v >> (length - 1 - i)) & 1
            i += 1
        k = f & 3
        if k == 0 or k == 3:
            # state field: codes 5.. in order of first appearance
            if c < 5 or c > next_new:
                return False
            if c == next_new:
                next_new += 1
            if k == 0:
                p = c
        elif k == 1:
            if c > 2:
                return False
            if (p, c) in used:
                return False
            used.add((p, c))
        else:
            if c > 4:
                return False
    # width must be minimal for the number of states actually used
    return s == (next_new - 1).bit_length()


def scan_valid_codes(max_len):
    """All canonical machine codes of length <= max_len, shortest first
    and in numeric order within a length (= lexicographic order)."""
    out = []
    for length in range(1, max_len + 1):
        for v in range(1 << length):
            if code_bits_valid(v, length):
                out.append(format(v, "0{}b".format(length)))
    return out


def reach_accepts(indptr, indices, start, target, j0):
    """Is there a path start -> target of length <= 2^j0 in the graph
    (CSR arrays indptr/indices over n = len(indptr)-1 nodes)?

    Middle-first recursion: a path of 2^j steps exists iff some midpoint
    splits it into two of 2^(j-1).  Memoizes monotone thresholds per
    node pair (smallest j known reachable / largest j known not).
    Returns (reached, max_depth) with max_depth the deepest recursion
    level entered, counting the root call as 1.
    """
    n = len(indptr) - 1
    true_thr = {}
    false_thr = {}
    max_depth = 0

    def go(a, b, j, depth):
        nonlocal max_depth
        if depth > max_depth:
            max_depth = depth
        if a == b:
            return True
        key = a * n + b
        t = true_thr.get(key)
        if t is not None and j >= t:
            return True
        f = false_thr.get(key)
        if f is not None and j <= f:
            return False
        if j == 0:
            res = b in indices[indptr[a] : indptr[a + 1]]
        else:
            # midpoint b first: catches paths shorter than 2^j cheaply
            res = go(a, b, j - 1, depth + 1)
            if not res:
                for m in range(n):
                    if m == a or m == b:
                        continue
                    if go(a, m, j - 1, depth + 1) and go(m, b, j - 1, depth + 1):
                        res = True
                        break
        if res:
            if t is None or j < t:
                true_thr[key] = j
        else:
            if f is None or j > f:
                false_thr[key] = j
        return res

    ok = go(start, target, j0, 1)
    return ok, max_depth
