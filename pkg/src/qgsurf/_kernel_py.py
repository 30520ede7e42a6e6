"""Pure-Python twin of the compiled chain-scan kernel.

Same contract as ``qgsurf._kernel.scan_chains``; used automatically when the
extension is not built.  Orders of magnitude slower at large bounds, so tests
exercise it at reduced depth and the benchmark compares both.
"""

from math import gcd


def scan_chains(max_len: int, max_entry: int):
    """Exhaustive bounded chain scan; see the compiled kernel's docstring."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    if max_entry < 2:
        raise ValueError("max_entry must be >= 2")

    # index shift: slot k+1 holds the value for the depth-k prefix
    size = max_len + 2
    P = [0] * size
    Q = [0] * size
    D = [0] * size
    P[1] = 1
    Q[0] = -1
    D[1] = 1
    barr = [0] * size
    nextb = [0] * size

    total = 0
    negdef_fail = 0
    round_fail = 0
    out = []

    depth = 1
    nextb[1] = 2
    while depth > 0:
        bb = nextb[depth]
        if bb > max_entry:
            depth -= 1
            continue
        nextb[depth] = bb + 1
        barr[depth] = bb
        P[depth + 1] = bb * P[depth] - P[depth - 1]
        Q[depth + 1] = bb * Q[depth] - Q[depth - 1]
        D[depth + 1] = -bb * D[depth] - D[depth - 1]
        total += 1

        d = D[depth + 1]
        if (d >= 0) if (depth & 1) else (d <= 0):
            negdef_fail += 1

        m = P[depth + 1]
        q = Q[depth + 1]

        qq = q + 1
        g = gcd(m, qq)
        n = m // g
        if n >= 2 and qq // g < n and g % n == 0:
            out.append(tuple(barr[1 : depth + 1]))

        ok = True
        i = 1
        while q > 0:
            b2 = -(-m // q)
            if i > depth or b2 != barr[i]:
                ok = False
                break
            m, q = q, b2 * q - m
            i += 1
        if ok and i != depth + 1:
            ok = False
        if not ok:
            round_fail += 1

        if depth < max_len:
            depth += 1
            nextb[depth] = 2

    return total, out, negdef_fail, round_fail
