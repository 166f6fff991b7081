"""Compiled binomial Groebner and standard basis engines.

A binomial is an int64 row of length 8: leading exponents then trailing
exponents.  Orders are matrix orders: ``W`` has four independent rows and
monomials are compared lexicographically on ``W @ u``.  Local orders simply
have a negative first row.
"""

import numpy as np
from numba import njit

OK = 0
BUDGET = 1


@njit(cache=True)
def cmp(W, u, v):
    for r in range(W.shape[0]):
        s = 0
        for k in range(4):
            s += W[r, k] * (u[k] - v[k])
        if s > 0:
            return 1
        if s < 0:
            return -1
    return 0


@njit(cache=True)
def orient(h, W):
    """Put the larger term first; returns False when the terms coincide."""
    s = cmp(W, h[:4], h[4:])
    if s == 0:
        return False
    if s < 0:
        for k in range(4):
            t = h[k]
            h[k] = h[4 + k]
            h[4 + k] = t
    return True


@njit(cache=True)
def divides(a, b):
    for k in range(4):
        if a[k] > b[k]:
            return False
    return True


@njit(cache=True)
def coprime(a, b):
    for k in range(4):
        if a[k] > 0 and b[k] > 0:
            return False
    return True


@njit(cache=True)
def strip_gcd(h):
    for k in range(4):
        g = min(h[k], h[4 + k])
        h[k] -= g
        h[4 + k] -= g


@njit(cache=True)
def spoly(f, g, out):
    """S-polynomial of two oriented binomials, unoriented."""
    for k in range(4):
        l = max(f[k], g[k])
        out[k] = l - f[k] + f[4 + k]
        out[4 + k] = l - g[k] + g[4 + k]


@njit(cache=True)
def _grow_rows(a, n):
    b = np.zeros((max(2 * a.shape[0], 8), a.shape[1]), dtype=a.dtype)
    b[:n] = a[:n]
    return b


@njit(cache=True)
def _grow_vec(a, n):
    b = np.zeros(max(2 * a.shape[0], 8), dtype=a.dtype)
    b[:n] = a[:n]
    return b


@njit(cache=True)
def _pair_key(G, i, j, W):
    s = 0
    for k in range(4):
        s += W[0, k] * max(G[i, k], G[j, k])
    return s


@njit(cache=True)
def top_reduce(h, G, n, W, budget):
    """Reduce the leading term of h against G[:n] until it is irreducible.

    Returns (nonzero, steps); steps > budget signals exhaustion.
    """
    steps = 0
    while True:
        hit = -1
        for k in range(n):
            if divides(G[k, :4], h[:4]):
                hit = k
                break
        if hit < 0:
            return True, steps
        for c in range(4):
            h[c] = h[c] - G[hit, c] + G[hit, 4 + c]
        if not orient(h, W):
            return False, steps
        steps += 1
        if steps > budget:
            return True, steps


@njit(cache=True)
def mono_normal_form(u, G, n, budget):
    """Standard monomial reached from u by rewriting leads to tails."""
    u = u.copy()
    steps = 0
    while True:
        hit = -1
        for k in range(n):
            if divides(G[k, :4], u):
                hit = k
                break
        if hit < 0:
            return u, steps
        for c in range(4):
            u[c] = u[c] - G[hit, c] + G[hit, 4 + c]
        steps += 1
        if steps > budget:
            return u, steps


@njit(cache=True)
def interreduce(G, n, W):
    """Minimal, tail-reduced basis from an oriented basis G[:n]."""
    keep = np.ones(n, dtype=np.bool_)
    for i in range(n):
        for j in range(n):
            if i != j and keep[j] and divides(G[j, :4], G[i, :4]):
                same = True
                for k in range(4):
                    if G[j, k] != G[i, k]:
                        same = False
                if not same or j < i:
                    keep[i] = False
                    break
    m = 0
    for i in range(n):
        if keep[i]:
            m += 1
    R = np.zeros((m, 8), dtype=np.int64)
    r = 0
    for i in range(n):
        if keep[i]:
            R[r] = G[i]
            r += 1
    for i in range(m):
        changed = True
        while changed:
            changed = False
            for k in range(m):
                if k != i and divides(R[k, :4], R[i, 4:]):
                    for c in range(4):
                        R[i, 4 + c] = R[i, 4 + c] - R[k, c] + R[k, 4 + c]
                    changed = True
                    break
    return R


@njit(cache=True)
def buchberger(G0, W, budget, product_criterion):
    """Groebner basis of the binomials G0 under the global order W.

    Returns (status, reduced basis, reduction steps used).
    """
    n = 0
    G = np.zeros((max(16, 4 * G0.shape[0]), 8), dtype=np.int64)
    h = np.zeros(8, dtype=np.int64)
    steps = 0
    for r in range(G0.shape[0]):
        h[:] = G0[r]
        if not orient(h, W):
            continue
        nz, s = top_reduce(h, G, n, W, budget - steps)
        steps += s
        if steps > budget:
            return BUDGET, G[:n].copy(), steps
        if nz:
            if n == G.shape[0]:
                G = _grow_rows(G, n)
            G[n] = h
            n += 1
    pa = np.zeros(64, dtype=np.int64)
    pb = np.zeros(64, dtype=np.int64)
    pk = np.zeros(64, dtype=np.int64)
    npairs = 0
    for j in range(n):
        for i in range(j):
            if npairs == pa.shape[0]:
                pa = _grow_vec(pa, npairs)
                pb = _grow_vec(pb, npairs)
                pk = _grow_vec(pk, npairs)
            pa[npairs] = i
            pb[npairs] = j
            pk[npairs] = _pair_key(G, i, j, W)
            npairs += 1
    while npairs > 0:
        best = 0
        for p in range(1, npairs):
            if pk[p] < pk[best]:
                best = p
        i = pa[best]
        j = pb[best]
        npairs -= 1
        pa[best] = pa[npairs]
        pb[best] = pb[npairs]
        pk[best] = pk[npairs]
        if product_criterion and coprime(G[i, :4], G[j, :4]):
            continue
        spoly(G[i], G[j], h)
        if not orient(h, W):
            continue
        nz, s = top_reduce(h, G, n, W, budget - steps)
        steps += s
        if steps > budget:
            return BUDGET, G[:n].copy(), steps
        if not nz:
            continue
        if n == G.shape[0]:
            G = _grow_rows(G, n)
        G[n] = h
        for i2 in range(n):
            if npairs == pa.shape[0]:
                pa = _grow_vec(pa, npairs)
                pb = _grow_vec(pb, npairs)
                pk = _grow_vec(pk, npairs)
            pa[npairs] = i2
            pb[npairs] = n
            pk[npairs] = _pair_key(G, i2, n, W)
            npairs += 1
        n += 1
    return OK, interreduce(G, n, W), steps


@njit(cache=True)
def _ecart(h):
    a = h[0] + h[1] + h[2] + h[3]
    b = h[4] + h[5] + h[6] + h[7]
    return max(a, b) - a


@njit(cache=True)
def mora_normal_form(h, G, n, W, budget):
    """Weak normal form of h modulo G[:n] with ecart-driven selection.

    h is modified in place.  Returns (nonzero, steps).
    """
    cap = n + 8
    T = np.zeros((cap, 8), dtype=np.int64)
    ec = np.zeros(cap, dtype=np.int64)
    for k in range(n):
        T[k] = G[k]
        ec[k] = _ecart(G[k])
    tn = n
    steps = 0
    while True:
        best = -1
        beste = 1 << 62
        for k in range(tn):
            if ec[k] < beste and divides(T[k, :4], h[:4]):
                best = k
                beste = ec[k]
        if best < 0:
            return True, steps
        eh = _ecart(h)
        if beste > eh:
            if tn == T.shape[0]:
                T = _grow_rows(T, tn)
                ec = _grow_vec(ec, tn)
            T[tn] = h
            ec[tn] = eh
            tn += 1
        for c in range(4):
            h[c] = h[c] - T[best, c] + T[best, 4 + c]
        if not orient(h, W):
            return False, steps
        steps += 1
        if steps > budget:
            return True, steps


@njit(cache=True)
def mora(G0, W, budget, prime):
    """Standard basis under a local order W (Mora's tangent cone algorithm).

    With ``prime`` set, common monomial factors are cancelled from new
    elements, which is valid for ideals containing no monomial zero divisors.
    Returns (status, basis, steps); the basis is not minimalized.
    """
    n = 0
    G = np.zeros((max(16, 4 * G0.shape[0]), 8), dtype=np.int64)
    for r in range(G0.shape[0]):
        G[n] = G0[r]
        if orient(G[n], W):
            n += 1
    h = np.zeros(8, dtype=np.int64)
    steps = 0
    pa = np.zeros(64, dtype=np.int64)
    pb = np.zeros(64, dtype=np.int64)
    pk = np.zeros(64, dtype=np.int64)
    npairs = 0
    for j in range(n):
        for i in range(j):
            if npairs == pa.shape[0]:
                pa = _grow_vec(pa, npairs)
                pb = _grow_vec(pb, npairs)
                pk = _grow_vec(pk, npairs)
            pa[npairs] = i
            pb[npairs] = j
            s = 0
            for k in range(4):
                s += max(G[i, k], G[j, k])
            pk[npairs] = s
            npairs += 1
    while npairs > 0:
        best = 0
        for p in range(1, npairs):
            if pk[p] < pk[best]:
                best = p
        i = pa[best]
        j = pb[best]
        npairs -= 1
        pa[best] = pa[npairs]
        pb[best] = pb[npairs]
        pk[best] = pk[npairs]
        spoly(G[i], G[j], h)
        if not orient(h, W):
            continue
        nz, s = mora_normal_form(h, G, n, W, budget - steps)
        steps += s
        if steps > budget:
            return BUDGET, G[:n].copy(), steps
        if not nz:
            continue
        if prime:
            strip_gcd(h)
        if n == G.shape[0]:
            G = _grow_rows(G, n)
        G[n] = h
        for i2 in range(n):
            if npairs == pa.shape[0]:
                pa = _grow_vec(pa, npairs)
                pb = _grow_vec(pb, npairs)
                pk = _grow_vec(pk, npairs)
            pa[npairs] = i2
            pb[npairs] = n
            s2 = 0
            for k in range(4):
                s2 += max(G[i2, k], G[n, k])
            pk[npairs] = s2
            npairs += 1
        n += 1
    return OK, G[:n].copy(), steps


@njit(cache=True)
def minimal_leads(G, n):
    """Indices of rows whose leading monomial is minimal (first of equals)."""
    keep = np.ones(n, dtype=np.bool_)
    for i in range(n):
        for j in range(n):
            if i != j and divides(G[j, :4], G[i, :4]):
                same = True
                for k in range(4):
                    if G[j, k] != G[i, k]:
                        same = False
                if not same or j < i:
                    keep[i] = False
                    break
    return np.flatnonzero(keep)
