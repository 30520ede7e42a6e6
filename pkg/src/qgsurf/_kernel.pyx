# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exhaustive scan over bounded linear chains.

Walks every chain [b1..bl] with 1 <= l <= max_len and 2 <= bi <= max_entry
(depth-first, sharing prefixes) and, per chain, in 64-bit integers:

 * evaluates the minus continued fraction b1 - 1/(b2 - 1/(...)) as m/q via
   the numerator/denominator recurrence,
 * tests the cyclic-quotient recognition m = d*n^2, q = d*n*a - 1,
 * checks the leading principal minors of the chain's intersection matrix
   alternate in sign (negative definiteness),
 * re-expands m/q and compares digits against the chain (round trip).

The pure-Python twin lives in qgsurf._kernel_py; both must return identical
results for equal bounds.
"""

from libc.stdint cimport int64_t

DEF MAXDEPTH = 40


cdef inline int64_t gcd64(int64_t a, int64_t b) nogil:
    cdef int64_t t
    while b:
        t = a % b
        a = b
        b = t
    return a


def scan_chains(int max_len, int max_entry):
    """Exhaustive bounded chain scan.

    Returns (total, class_t, negdef_failures, roundtrip_failures) where
    class_t is the list of accepted chains in discovery (DFS) order.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    if max_entry < 2:
        raise ValueError("max_entry must be >= 2")
    if max_len >= MAXDEPTH:
        raise ValueError("max_len too large for the compiled kernel")
    # continued-fraction numerators are < max_entry ** max_len; keep the
    # intermediate product b * P below 2**62
    cdef double bound = 1.0
    cdef int i
    for i in range(max_len + 1):
        bound *= max_entry
    if bound >= 4.6e18:
        raise ValueError("bounds overflow the 64-bit kernel")

    cdef int64_t[MAXDEPTH + 2] P, Q, D
    cdef int[MAXDEPTH + 2] barr, nextb
    cdef int depth = 1
    cdef int64_t total = 0, negdef_fail = 0, round_fail = 0
    cdef int64_t m, q, qq, g, n, bb2, t
    cdef int bb, i2, ok

    # index shift: P[k+1] holds the value for the depth-k prefix
    P[0] = 0
    P[1] = 1
    Q[0] = -1
    Q[1] = 0
    D[0] = 0
    D[1] = 1

    out = []
    nextb[1] = 2
    while depth > 0:
        if nextb[depth] > max_entry:
            depth -= 1
            continue
        bb = nextb[depth]
        nextb[depth] += 1
        barr[depth] = bb
        P[depth + 1] = bb * P[depth] - P[depth - 1]
        Q[depth + 1] = bb * Q[depth] - Q[depth - 1]
        D[depth + 1] = -bb * D[depth] - D[depth - 1]
        total += 1

        # leading minor of order `depth` must have sign (-1)**depth
        if depth & 1:
            if D[depth + 1] >= 0:
                negdef_fail += 1
        else:
            if D[depth + 1] <= 0:
                negdef_fail += 1

        m = P[depth + 1]
        q = Q[depth + 1]

        # recognition: g = gcd(m, q+1), n = m/g, a = (q+1)/g, d = g/n
        qq = q + 1
        g = gcd64(m, qq)
        n = m / g
        if n >= 2 and qq / g < n and g % n == 0:
            out.append(tuple(barr[i2] for i2 in range(1, depth + 1)))

        # round trip: expand m/q by ceil division and compare digits
        ok = 1
        i2 = 1
        while q > 0:
            bb2 = (m + q - 1) / q
            if i2 > depth or bb2 != barr[i2]:
                ok = 0
                break
            t = q
            q = bb2 * q - m
            m = t
            i2 += 1
        if ok and i2 != depth + 1:
            ok = 0
        if not ok:
            round_fail += 1

        if depth < max_len:
            depth += 1
            nextb[depth] = 2

    return total, out, negdef_fail, round_fail
