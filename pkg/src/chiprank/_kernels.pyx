# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: machine-integer twins of ``chiprank._pykernels``.

Same three entry points over (n, degs, flat, cfg) buffers.  Inputs whose
magnitudes could overflow signed 64-bit arithmetic raise OverflowError
*before* any mutation, so the caller can replay the call on the pure-Python
kernels with unchanged state.
"""

from libc.stdlib cimport free, malloc

cdef long long MAX_ROUNDS = 10_000_000
# All intermediate values are bounded by twice (total |chips| + total degree);
# see the magnitude guard below.  2**60 leaves three spare bits.
cdef long long SAFE_MAGNITUDE = 1152921504606846976  # 2**60


cdef struct Buffers:
    long long *degs
    long long *flat
    long long *cfg


cdef int _load(Buffers *b, long long n, object degs, object flat, object cfg) except -1:
    """Copy Python lists into C buffers, enforcing the magnitude guard.

    Raises OverflowError (too big for the compiled path) or propagates
    conversion errors; nothing Python-visible has been mutated yet.
    """
    cdef long long i, v, total = 0
    b.degs = <long long *> malloc(n * sizeof(long long))
    b.flat = <long long *> malloc(n * n * sizeof(long long))
    b.cfg = <long long *> malloc(n * sizeof(long long))
    if b.degs == NULL or b.flat == NULL or b.cfg == NULL:
        _unload(b)
        raise MemoryError()
    try:
        for i in range(n):
            v = degs[i]
            b.degs[i] = v
            total += v
        for i in range(n * n):
            b.flat[i] = flat[i]
        for i in range(n):
            v = cfg[i]
            b.cfg[i] = v
            total += v if v >= 0 else -v
    except BaseException:
        _unload(b)
        raise
    if total > SAFE_MAGNITUDE:
        _unload(b)
        raise OverflowError("input magnitude beyond the compiled kernel's range")
    return 0


cdef void _unload(Buffers *b) noexcept:
    free(b.degs)
    free(b.flat)
    free(b.cfg)
    b.degs = b.flat = b.cfg = NULL


cdef long long _stabilize_c(long long n, long long *degs, long long *flat,
                            long long *cfg, long long *odo) except -1:
    cdef long long i, j, d, q, e, row, rounds = 0
    cdef bint active = True
    for i in range(n):
        odo[i] = 0
    while active:
        active = False
        for i in range(n - 1):
            d = degs[i]
            if cfg[i] >= d:
                q = cfg[i] / d
                odo[i] += q
                cfg[i] -= q * d
                row = i * n
                for j in range(n):
                    e = flat[row + j]
                    if e != 0 and j != i:
                        cfg[j] += q * e
                active = True
        rounds += 1
        if rounds > MAX_ROUNDS:
            raise RuntimeError("stabilization did not settle (input too extreme)")
    return 0


cdef long long _burning_c(long long n, long long *flat, long long *cfg,
                          long long *heat, char *burnt) noexcept:
    """Run the burning closure; returns the number of unburnt non-sinks.
    ``burnt`` and ``heat`` are scratch, overwritten."""
    cdef long long k, j, row, unburnt = n - 1
    cdef bint changed = True
    for k in range(n):
        burnt[k] = 0
        heat[k] = flat[(n - 1) * n + k]
    burnt[n - 1] = 1
    while changed:
        changed = False
        for k in range(n - 1):
            if not burnt[k] and cfg[k] < heat[k]:
                burnt[k] = 1
                unburnt -= 1
                row = k * n
                for j in range(n):
                    heat[j] += flat[row + j]
                changed = True
    return unburnt


def stabilize(n, degs, flat, cfg):
    """Compiled twin of ``_pykernels.stabilize`` (mutates cfg, returns odometer)."""
    cdef long long nn = n
    cdef Buffers b
    cdef long long *odo
    cdef long long i
    _load(&b, nn, degs, flat, cfg)
    odo = <long long *> malloc(nn * sizeof(long long))
    if odo == NULL:
        _unload(&b)
        raise MemoryError()
    try:
        _stabilize_c(nn, b.degs, b.flat, b.cfg, odo)
        result = [odo[i] for i in range(nn)]
        for i in range(nn):
            cfg[i] = b.cfg[i]
        return result
    finally:
        free(odo)
        _unload(&b)


def burning_test(n, degs, flat, cfg):
    """Compiled twin of ``_pykernels.burning_test`` (cfg read-only)."""
    cdef long long nn = n
    cdef Buffers b
    cdef long long *heat
    cdef char *burnt
    cdef long long k
    _load(&b, nn, degs, flat, cfg)
    heat = <long long *> malloc(nn * sizeof(long long))
    burnt = <char *> malloc(nn * sizeof(char))
    if heat == NULL or burnt == NULL:
        free(heat)
        free(burnt)
        _unload(&b)
        raise MemoryError()
    try:
        _burning_c(nn, b.flat, b.cfg, heat, burnt)
        return [k for k in range(nn - 1) if not burnt[k]]
    finally:
        free(heat)
        free(burnt)
        _unload(&b)


def parking_reduce(n, degs, flat, cfg):
    """Compiled twin of ``_pykernels.parking_reduce`` (mutates cfg in place)."""
    cdef long long nn = n
    cdef Buffers b
    cdef long long *odo
    cdef long long *heat
    cdef char *burnt
    cdef long long i, j, k, row, out, rounds = 0, unburnt
    cdef bint negative
    if nn == 1:
        return
    _load(&b, nn, degs, flat, cfg)
    odo = <long long *> malloc(nn * sizeof(long long))
    heat = <long long *> malloc(nn * sizeof(long long))
    burnt = <char *> malloc(nn * sizeof(char))
    if odo == NULL or heat == NULL or burnt == NULL:
        free(odo)
        free(heat)
        free(burnt)
        _unload(&b)
        raise MemoryError()
    try:
        while True:
            negative = False
            for i in range(nn - 1):
                if b.cfg[i] < 0:
                    negative = True
                    break
            if not negative:
                break
            row = (nn - 1) * nn
            b.cfg[nn - 1] -= b.degs[nn - 1]
            for j in range(nn - 1):
                b.cfg[j] += b.flat[row + j]
            _stabilize_c(nn, b.degs, b.flat, b.cfg, odo)
            rounds += 1
            if rounds > MAX_ROUNDS:
                raise RuntimeError("parking reduction did not settle (input too extreme)")
        while True:
            unburnt = _burning_c(nn, b.flat, b.cfg, heat, burnt)
            if unburnt == 0:
                break
            for k in range(nn - 1):
                if burnt[k]:
                    continue
                row = k * nn
                out = 0
                for j in range(nn):
                    if burnt[j] or j == nn - 1:
                        out += b.flat[row + j]
                        b.cfg[j] += b.flat[row + j]
                b.cfg[k] -= out
            rounds += 1
            if rounds > MAX_ROUNDS:
                raise RuntimeError("parking reduction did not settle (input too extreme)")
        for i in range(nn):
            cfg[i] = b.cfg[i]
    finally:
        free(odo)
        free(heat)
        free(burnt)
        _unload(&b)
