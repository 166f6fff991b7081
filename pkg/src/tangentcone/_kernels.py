"""Compiled inner loops.

Everything here works on plain int64/uint8 numpy arrays so numba can type it;
the public modules wrap these with validation and friendlier return values.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def dp_tables(gens, limit):
    in_s = np.zeros(limit + 1, dtype=np.uint8)
    max_len = np.full(limit + 1, -1, dtype=np.int64)
    in_s[0] = 1
    max_len[0] = 0
    k = gens.shape[0]
    for m in range(1, limit + 1):
        best = -1
        for i in range(k):
            n = gens[i]
            if n <= m:
                prev = max_len[m - n]
                if prev >= 0 and prev + 1 > best:
                    best = prev + 1
        if best >= 0:
            in_s[m] = 1
            max_len[m] = best
    return in_s, max_len


@njit(cache=True)
def membership(gens, limit):
    """Boolean membership table for the monoid generated by ``gens``."""
    table = np.zeros(limit + 1, dtype=np.uint8)
    table[0] = 1
    for m in range(1, limit + 1):
        for i in range(gens.shape[0]):
            n = gens[i]
            if n <= m and table[m - n]:
                table[m] = 1
                break
    return table


@njit(cache=True)
def representable(target, gens):
    """True when ``target`` is a non-negative combination of ``gens`` (len 3)."""
    a, b, c = gens[0], gens[1], gens[2]
    r0 = target
    while r0 >= 0:
        r1 = r0
        while r1 >= 0:
            if r1 % c == 0:
                return True
            r1 -= b
        r0 -= a
    return False


@njit(cache=True)
def count_factorizations(gens, m, cap):
    count = 0
    n1, n2, n3, n4 = gens[0], gens[1], gens[2], gens[3]
    for u4 in range(m // n4 + 1):
        r4 = m - u4 * n4
        for u3 in range(r4 // n3 + 1):
            r3 = r4 - u3 * n3
            for u2 in range(r3 // n2 + 1):
                r2 = r3 - u2 * n2
                if r2 % n1 == 0:
                    count += 1
                    if count > cap:
                        return -1
    return count


@njit(cache=True)
def fill_factorizations(gens, m, out):
    k = 0
    n1, n2, n3, n4 = gens[0], gens[1], gens[2], gens[3]
    for u4 in range(m // n4 + 1):
        r4 = m - u4 * n4
        for u3 in range(r4 // n3 + 1):
            r3 = r4 - u3 * n3
            for u2 in range(r3 // n2 + 1):
                r2 = r3 - u2 * n2
                if r2 % n1 == 0:
                    out[k, 0] = r2 // n1
                    out[k, 1] = u2
                    out[k, 2] = u3
                    out[k, 3] = u4
                    k += 1
    return k


@njit(cache=True)
def sweep_box(gens, lo, hi, in_s, max_len, strict):
    """Scan exponent triples (v2, v3, v4) with lo <= v < hi.

    A triple is bad when its S-degree m has m - n1 in S but
    v2 + v3 + v4 > 1 + max_len[m - n1].  With ``strict`` set, a triple whose
    degree is not in n1 + S is bad as well.  Iteration is v4 outer, v2 inner,
    so the first bad triple returned is the smallest in (v4, v3, v2) order.
    Returns (found, v2, v3, v4, m, bound) where bound = 1 + max_len[m - n1]
    (or -1 when m - n1 is not in S).
    """
    n1, n2, n3, n4 = gens[0], gens[1], gens[2], gens[3]
    for v4 in range(lo[2], hi[2]):
        for v3 in range(lo[1], hi[1]):
            base = v3 * n3 + v4 * n4 - n1
            s34 = v3 + v4
            for v2 in range(lo[0], hi[0]):
                r = base + v2 * n2
                if r >= 0 and in_s[r]:
                    if v2 + s34 > 1 + max_len[r]:
                        return True, v2, v3, v4, r + n1, 1 + max_len[r]
                elif strict:
                    return True, v2, v3, v4, r + n1, -1
    return False, 0, 0, 0, 0, 0


@njit(cache=True)
def count_standard(gens, horizon):
    """Number of monomials of each degree 0..horizon outside a monomial ideal."""
    out = np.zeros(horizon + 1, dtype=np.int64)
    k = gens.shape[0]
    for d in range(horizon + 1):
        c = 0
        for e1 in range(d + 1):
            for e2 in range(d - e1 + 1):
                for e3 in range(d - e1 - e2 + 1):
                    e4 = d - e1 - e2 - e3
                    hit = False
                    for j in range(k):
                        if (gens[j, 0] <= e1 and gens[j, 1] <= e2
                                and gens[j, 2] <= e3 and gens[j, 3] <= e4):
                            hit = True
                            break
                    if not hit:
                        c += 1
        out[d] = c
    return out


@njit(cache=True)
def inclusion_exclusion(gens, max_degree):
    """Coefficients of sum over subsets T of (-1)^|T| t^deg(lcm T)."""
    k = gens.shape[0]
    coeffs = np.zeros(max_degree + 1, dtype=np.int64)
    lcm = np.zeros((k + 1, 4), dtype=np.int64)
    # iterative DFS over subsets; stack holds the next index to try per depth
    idx = np.zeros(k + 1, dtype=np.int64)
    coeffs[0] += 1
    depth = 0
    idx[0] = 0
    while depth >= 0:
        j = idx[depth]
        if j >= k:
            depth -= 1
            if depth >= 0:
                idx[depth] += 1
            continue
        for v in range(4):
            a = lcm[depth, v]
            b = gens[j, v]
            lcm[depth + 1, v] = a if a > b else b
        d = lcm[depth + 1, 0] + lcm[depth + 1, 1] + lcm[depth + 1, 2] + lcm[depth + 1, 3]
        if (depth + 1) % 2 == 1:
            coeffs[d] -= 1
        else:
            coeffs[d] += 1
        depth += 1
        idx[depth] = j + 1
    return coeffs


@njit(cache=True)
def least_multiple(gens, i, bound):
    """Least a in 1..bound with a * gens[i] generated by the other entries, else -1."""
    k = gens.shape[0]
    others = np.empty(k - 1, dtype=np.int64)
    r = 0
    for j in range(k):
        if j != i:
            others[r] = gens[j]
            r += 1
    n = gens[i]
    table = membership(others, bound * n)
    for a in range(1, bound + 1):
        if table[a * n]:
            return a
    return -1


@njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(cache=True)
def fiber_components(gens, s):
    """Connected components of the fiber of s, monomials joined when they share a variable.

    Components are tracked through the variables: every monomial lies in
    the class of its support, so the count is the number of variable classes
    in use.  Returns 0 when s is not in the semigroup.
    """
    if s == 0:
        return 1
    parent = np.arange(4)
    used = np.zeros(4, dtype=np.bool_)
    n1, n2, n3, n4 = gens[0], gens[1], gens[2], gens[3]
    u = np.zeros(4, dtype=np.int64)
    found = False
    for u4 in range(s // n4 + 1):
        r4 = s - u4 * n4
        for u3 in range(r4 // n3 + 1):
            r3 = r4 - u3 * n3
            for u2 in range(r3 // n2 + 1):
                r2 = r3 - u2 * n2
                if r2 % n1 == 0:
                    found = True
                    u[0] = r2 // n1
                    u[1] = u2
                    u[2] = u3
                    u[3] = u4
                    first = -1
                    for v in range(4):
                        if u[v] > 0:
                            used[v] = True
                            if first < 0:
                                first = v
                            else:
                                a = _find(parent, first)
                                b = _find(parent, v)
                                if a != b:
                                    parent[b] = a
    if not found:
        return 0
    count = 0
    for v in range(4):
        if used[v] and _find(parent, v) == v:
            count += 1
    return count


@njit(cache=True)
def betti_scan(gens, candidates):
    out = np.zeros(candidates.shape[0], dtype=np.int64)
    for k in range(candidates.shape[0]):
        out[k] = fiber_components(gens, candidates[k])
    return out
