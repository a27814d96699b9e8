"""Pure-Python kernels for stabilization, burning, and parking reduction.

These are the inner loops shared by the dynamics layer and the rank engine.
A compiled twin lives in ``chiprank._kernels``; both expose the same three
functions over (n, degs, flat) graph buffers, where ``flat`` is the row-major
multiplicity matrix.  Everything is exact integer arithmetic; the pure
versions accept arbitrarily large entries.
"""

from __future__ import annotations

# Safety valve against runaway loops on adversarial inputs; generous compared
# to anything the library itself generates.
MAX_ROUNDS = 10_000_000


def stabilize(n, degs, flat, cfg):
    """Topple unstable non-sink vertices (batched) until none remain.

    Mutates ``cfg`` in place and returns the odometer (times toppled, one
    entry per vertex; the sink never topples).  Entries may be negative:
    only vertices with cfg[i] >= deg(i) fire, so debt just sits still.
    """
    odo = [0] * n
    rounds = 0
    active = True
    while active:
        active = False
        for i in range(n - 1):
            d = degs[i]
            if cfg[i] >= d:
                q = cfg[i] // d
                odo[i] += q
                cfg[i] -= q * d
                row = i * n
                for j in range(n):
                    e = flat[row + j]
                    if e and j != i:
                        cfg[j] += q * e
                active = True
        rounds += 1
        if rounds > MAX_ROUNDS:
            raise RuntimeError("stabilization did not settle (input too extreme)")
    return odo


def burning_test(n, degs, flat, cfg):
    """Dhar burning closure from the sink.

    Returns the list of vertices (0-based) that stay unburnt; empty means the
    fire consumed everything.  ``cfg`` is read only.  A non-sink vertex burns
    once its chips cannot cover the edges arriving from burnt territory.
    """
    burnt = [False] * n
    burnt[n - 1] = True
    heat = [flat[(n - 1) * n + k] for k in range(n)]  # edges from burnt set
    changed = True
    while changed:
        changed = False
        for k in range(n - 1):
            if not burnt[k] and cfg[k] < heat[k]:
                burnt[k] = True
                row = k * n
                for j in range(n):
                    heat[j] += flat[row + j]
                changed = True
    return [k for k in range(n - 1) if not burnt[k]]


def parking_reduce(n, degs, flat, cfg):
    """Reduce ``cfg`` (in place) to the parking configuration of its class.

    Phase 1: while some non-sink entry is negative, fire the sink once and
    stabilize the non-sink vertices.  Phase 2: repeatedly run the burning
    closure; the unburnt set is legal to fire as a block (every member keeps
    a non-negative count), and firing maximal legal blocks drives the
    configuration down to the unique parking representative, reached exactly
    when the fire consumes every vertex.
    """
    if n == 1:
        return
    rounds = 0
    while any(cfg[i] < 0 for i in range(n - 1)):
        row = (n - 1) * n
        cfg[n - 1] -= degs[n - 1]
        for j in range(n - 1):
            cfg[j] += flat[row + j]
        stabilize(n, degs, flat, cfg)
        rounds += 1
        if rounds > MAX_ROUNDS:
            raise RuntimeError("parking reduction did not settle (input too extreme)")
    while True:
        unburnt = burning_test(n, degs, flat, cfg)
        if not unburnt:
            return
        inside = [False] * n
        for k in unburnt:
            inside[k] = True
        for k in unburnt:
            row = k * n
            out = 0
            for j in range(n):
                if not inside[j]:
                    out += flat[row + j]
                    cfg[j] += flat[row + j]
            cfg[k] -= out
        rounds += 1
        if rounds > MAX_ROUNDS:
            raise RuntimeError("parking reduction did not settle (input too extreme)")
