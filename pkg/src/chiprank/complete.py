"""Linear-time rank machinery on complete graphs.

On K_n a configuration is pinned by its residues mod n and its degree, and
parking configurations correspond to words with n b's and n-1 a's whose
strict prefixes never go b-heavy (the i-th a sits after value-of-vertex-i
b's).  Everything here runs in O(n) integer operations: normalization,
parking via the cyclic lemma, and a closed-form rank.  Words travel as ASCII
strings at the API boundary; the pipelines themselves work on value
histograms so no strings are built unless asked for.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .dyck import is_dn_word, theta, to_dn_word, to_dyck_word

__all__ = [
    "SortedParking",
    "is_equiv_kn",
    "is_equiv_zero_kn",
    "compact_normalize",
    "is_compact_sorted",
    "phi1",
    "decode_word",
    "parking_via_cyclic_lemma",
    "rank_step_zero_coordinate",
    "rank_greedy",
    "rank_formula",
    "rank_formula_details",
    "theta_iterate",
    "t_operator",
]


class SortedParking(NamedTuple):
    """A sorted parking configuration on K_n: the word encoding its first
    n - 1 values (weakly increasing) plus the sink entry."""

    word: str
    sink: int


class OpCounter:
    """Tallies elementary integer operations (+ - * // %) for complexity
    demonstrations; each pipeline loop adds its per-iteration cost."""

    __slots__ = ("ops",)

    def __init__(self):
        self.ops = 0

    def add(self, k: int) -> None:
        self.ops += k


def _as_config(f: Sequence[int]) -> tuple:
    f = tuple(int(x) for x in f)
    if not f:
        raise ValueError("configuration must not be empty")
    return f


# ---------- toppling equivalence on K_n ----------


def is_equiv_kn(f: Sequence[int], g: Sequence[int]) -> bool:
    """f ~ g on K_n: equal degree and all entrywise differences congruent
    mod n (firing a vertex shifts every entry by -1 mod n)."""
    f, g = _as_config(f), _as_config(g)
    if len(f) != len(g):
        raise ValueError("configurations live on different complete graphs")
    n = len(f)
    if sum(f) != sum(g):
        return False
    r = (f[0] - g[0]) % n
    return all((x - y) % n == r for x, y in zip(f, g))


def is_equiv_zero_kn(f: Sequence[int]) -> bool:
    """Is f toppling-equivalent to the all-zero configuration?"""
    f = _as_config(f)
    return is_equiv_kn(f, (0,) * len(f))


def compact_normalize(f: Sequence[int], counter: OpCounter | None = None) -> tuple:
    """The equivalent configuration with non-sink entries reduced mod n
    relative to the first entry (so they land in 0..n-1, first entry 0) and
    the degree balanced onto the sink."""
    f = _as_config(f)
    n = len(f)
    if n == 1:
        return f
    base = f[0]
    body = [(x - base) % n for x in f[:-1]]
    total = sum(f)
    if counter is not None:
        counter.add(4 * n)  # subtract+mod per entry, two running sums
    return tuple(body) + (total - sum(body),)


def is_compact_sorted(f: Sequence[int]) -> bool:
    """Weakly increasing non-sink entries with spread at most n."""
    f = _as_config(f)
    body = f[:-1]
    if any(x > y for x, y in zip(body, body[1:])):
        return False
    return not body or body[-1] - body[0] <= len(f)


# ---------- words ----------


def phi1(values: Sequence[int], n: int) -> str:
    """Word of a weakly increasing value list: the i-th a is preceded by
    values[i] b's, padded to n b's total."""
    values = [int(v) for v in values]
    if len(values) != n - 1:
        raise ValueError(f"need {n - 1} values for n = {n}")
    if any(x > y for x, y in zip(values, values[1:])) or any(
        not 0 <= v <= n for v in values
    ):
        raise ValueError("values must be weakly increasing within 0..n")
    out = []
    emitted = 0
    for v in values:
        out.append("b" * (v - emitted))
        out.append("a")
        emitted = v
    out.append("b" * (n - emitted))
    return "".join(out)


def decode_word(word: str) -> tuple:
    """Inverse of phi1: number of b's before each a."""
    if not is_dn_word(word):
        raise ValueError("expected a word with one trailing extra b")
    values = []
    b = 0
    for c in word:
        if c == "a":
            values.append(b)
        else:
            b += 1
    return tuple(values)


# ---------- parking via the cyclic lemma ----------


def _pipeline(f: Sequence[int], counter: OpCounter | None = None):
    """Shared O(n) reduction: histogram of parking values plus sink.

    Returns (n, hist, sink) where hist[v] counts non-sink vertices parked at
    value v, plus the per-vertex shift data (q, normalized body) so callers
    can also reconstruct vertex-order results.
    """
    f = _as_config(f)
    n = len(f)
    g = compact_normalize(f, counter)
    if n == 1:
        return n, [], g[-1], 0, ()
    body = g[:-1]
    hist = [0] * n
    for v in body:
        hist[v] += 1
    # Walk the word phi1(sorted(body)) without building it: for each value v
    # come hist[v] a's, then the (v+1)-th b.  Track the first position where
    # the height reaches its minimum; that prefix u (p a's, q b's) rotates to
    # the back, which is exactly the cyclic lemma's conjugation.
    best = 0
    p = q = 0
    a_seen = 0
    for v in range(n):
        a_seen += hist[v]
        h = a_seen - (v + 1)
        if h < best:
            best = h
            p, q = a_seen, v + 1
    if counter is not None:
        counter.add(5 * n)  # histogram fill + height walk
    parked = [0] * n
    for v in range(n):
        if hist[v]:
            parked[v - q if v >= q else v + n - q] += hist[v]
    sink = g[-1] + n * (q - p) - q
    if counter is not None:
        counter.add(2 * n + 5)
    return n, parked, sink, q, body


def parking_via_cyclic_lemma(f: Sequence[int]) -> tuple:
    """Parking representative on K_n, by rotating the encoding word.

    Returns ``(SortedParking, parking_config)``: the sorted form as a word
    plus sink, and the parking configuration in original vertex order (each
    normalized value shifts by -q mod n, q the number of b's rotated away;
    the result is toppling-equivalent to f, not merely a permutation).
    """
    n, hist, sink, q, body = _pipeline(f)
    if n == 1:
        return SortedParking("b", sink), (sink,)
    values = [v for v in range(n) for _ in range(hist[v])]
    word = phi1(values, n)
    vertex_order = tuple(c - q if c >= q else c + n - q for c in body) + (sink,)
    return SortedParking(word, sink), vertex_order


# ---------- rank ----------


def rank_step_zero_coordinate(sp: SortedParking) -> SortedParking:
    """One reduction step on a sorted parking pair with a zero coordinate.

    Rotates the word's first return block to the back (theta on the balanced
    part) and charges the sink for the a's that block contained.
    """
    word, sink = sp
    if not is_dn_word(word) or word == "b":
        raise ValueError("expected a sorted parking word with a zero coordinate")
    inner = to_dyck_word(word)
    h = 0
    for pos, c in enumerate(inner):
        h += 1 if c == "a" else -1
        if h == 0:
            break
    cost = 1 + inner[1:pos].count("a")  # a's of the rotated block a u b
    return SortedParking(to_dn_word(theta(inner)), sink - cost)


def rank_greedy(f: Sequence[int]) -> int:
    """Rank on K_n by repeated zero-coordinate steps.

    Parks f, then peels first-return blocks while the sink stays
    non-negative; hitting the staircase word short-circuits to
    steps + sink, and a negative sink ends the search at steps - 1.
    """
    f = _as_config(f)
    n = len(f)
    if n == 1:
        return f[0] if f[0] >= 0 else -1
    sp, _ = parking_via_cyclic_lemma(f)
    stair = "ab" * (n - 1) + "b"
    steps = 0
    while True:
        if sp.sink < 0:
            return steps - 1
        if sp.word == stair:
            return steps + sp.sink
        sp = rank_step_zero_coordinate(sp)
        steps += 1


def rank_formula(f: Sequence[int], count_ops: bool = False):
    """Closed-form rank on K_n in O(n) integer operations.

    Parks f, writes sink + 1 = q(n-1) + r, and sums the positive parts of
    q - eta_i + [i <= r] over the word's heights; the rank is that sum minus
    one.  With ``count_ops=True`` returns ``(rank, ops)`` where ops tallies
    the elementary integer operations used end to end.
    """
    counter = OpCounter() if count_ops else None
    f = _as_config(f)
    n = len(f)
    if n == 1:
        r = f[0] if f[0] >= 0 else -1
        return (r, 1) if count_ops else r
    _, hist, sink, _, _ = _pipeline(f, counter)
    q, r = divmod(sink + 1, n - 1)
    total = 0
    i = 1
    for v in range(n):
        for _ in range(hist[v]):
            term = q - (i - 1) + v + (1 if i <= r else 0)
            if term > 0:
                total += term
            i += 1
    if counter is not None:
        counter.add(5 * (n - 1) + 3)
    rank = total - 1
    if count_ops:
        return rank, counter.ops
    return rank


def rank_formula_details(f: Sequence[int]) -> dict:
    """The formula's intermediate data, for inspection: quotient q,
    remainder r, the heights, the per-position terms, and the rank."""
    f = _as_config(f)
    n = len(f)
    if n == 1:
        return {
            "q": None,
            "r": None,
            "heights": [],
            "terms": [],
            "rank": f[0] if f[0] >= 0 else -1,
        }
    _, hist, sink, _, _ = _pipeline(f)
    q, r = divmod(sink + 1, n - 1)
    eta = []
    terms = []
    i = 1
    for v in range(n):
        for _ in range(hist[v]):
            eta.append((i - 1) - v)
            terms.append(q - eta[-1] + (1 if i <= r else 0))
            i += 1
    rank = sum(t for t in terms if t > 0) - 1
    return {"q": q, "r": r, "heights": eta, "terms": terms, "rank": rank}


def theta_iterate(word: str, sink: int, k: int) -> tuple:
    """Apply the zero-coordinate step k times to (word, sink)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    sp = SortedParking(word, int(sink))
    if not is_dn_word(sp.word):
        raise ValueError("expected a sorted parking word")
    for _ in range(k):
        sp = rank_step_zero_coordinate(sp)
    return (sp.word, sp.sink)


# ---------- the T operator ----------


def t_operator(f: Sequence[int], inverse: bool = False) -> tuple:
    """Topple the largest non-sink entry of a compact sorted configuration
    and re-sort (or undo that).  Keeps the compact sorted shape; n - 1
    forward applications add the sink's Laplacian row."""
    f = _as_config(f)
    n = len(f)
    if n < 2:
        raise ValueError("the T operator needs at least one non-sink vertex")
    if not is_compact_sorted(f):
        raise ValueError("expected weakly increasing entries with spread <= n")
    body, sink = f[:-1], f[-1]
    if inverse:
        return tuple(x - 1 for x in body[1:]) + (body[0] + (n - 1), sink - 1)
    return (body[-1] - (n - 1),) + tuple(x + 1 for x in body[:-1]) + (sink + 1,)
