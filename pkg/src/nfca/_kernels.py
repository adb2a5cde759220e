"""Compiled backtracking kernels for exhaustive minimal-automaton search.

Both kernels branch only on transition rows; final states are never guessed.
Any state reached by a rejected word must be non-final, and making every
other state final can only help, so the final set is derived at the end.
Rows are bitmasks over states, ``-1`` while undecided.  A new row may only
mention untouched states as a prefix of the untouched block, which fixes
state numbering by order of first use.

Status codes: 1 found, 0 exhausted, -1 deadline reached.

The recursive drivers are not disk-cached: numba cannot reload recursive
functions from its cache reliably.
"""

import time

import numpy as np
from numba import njit, objmode

_CHECK_EVERY = 1 << 14


@njit(cache=True)
def _clock():
    with objmode(t="float64"):
        t = time.monotonic()
    return t


@njit(cache=True)
def _tick(ctl):
    # ctl: [nodes, deadline, aborted]
    ctl[0] += 1
    if ctl[2] != 0.0:
        return True
    if int(ctl[0]) % _CHECK_EVERY == 0 and ctl[1] > 0.0 and _clock() > ctl[1]:
        ctl[2] = 1.0
    return ctl[2] != 0.0


# ---------------------------------------------------------------- unary


@njit(cache=True)
def _uimage(succ, R, upper, full):
    out = 0
    s = 0
    while R:
        if R & 1:
            r = succ[s]
            if r < 0:
                if upper:
                    return full
            else:
                out |= r
        R >>= 1
        s += 1
    return out


@njit(cache=True)
def _ufeasible(succ, traj, t, tmask, ell, full, his):
    bad = 0
    for u in range(t + 1):
        if not (tmask >> u) & 1:
            bad |= traj[u]
    lo = traj[t]
    hi = traj[t]
    for u in range(t + 1, ell + 1):
        lo = _uimage(succ, lo, False, full)
        if hi != full:
            hi = _uimage(succ, hi, True, full)
        his[u] = hi
        if not (tmask >> u) & 1:
            bad |= lo
    for u in range(t + 1):
        if (tmask >> u) & 1 and traj[u] & ~bad == 0:
            return False
    for u in range(t + 1, ell + 1):
        if (tmask >> u) & 1 and his[u] & ~bad == 0:
            return False
    return True


@njit
def _urec(n, ell, tmask, succ, traj, t, touched, und, ui, nund, his, ctl):
    if _tick(ctl):
        return False
    full = (1 << n) - 1
    if ui == nund[t]:
        t1 = t + 1
        traj[t1] = _uimage(succ, traj[t], False, full)
        if not _ufeasible(succ, traj, t1, tmask, ell, full, his):
            return False
        if t1 == ell:
            return True
        k = 0
        R = traj[t1]
        s = 0
        while R:
            if R & 1 and succ[s] < 0:
                und[t1, k] = s
                k += 1
            R >>= 1
            s += 1
        nund[t1] = k
        return _urec(n, ell, tmask, succ, traj, t1, touched, und, 0, nund, his, ctl)
    s = und[t, ui]
    low = (1 << touched) - 1
    for k in range(n - touched + 1):
        newbits = ((1 << (touched + k)) - 1) ^ low
        for old in range(1 << touched):
            succ[s] = old | newbits
            if not _ufeasible(succ, traj, t, tmask, ell, full, his):
                continue
            if _urec(n, ell, tmask, succ, traj, t, touched + k, und, ui + 1, nund, his, ctl):
                return True
            if ctl[2] != 0.0:
                return False
    succ[s] = -1
    return False


def unary_search(lengths, ell, n, deadline=0.0):
    """Look for an ``n``-state unary NFA accepting exactly ``lengths`` below ``ell + 1``.

    Returns ``(status, succ, finals_mask, nodes)``; ``deadline`` is an absolute
    ``time.monotonic()`` value, 0 for none.
    """
    if n > 62 or ell > 62:
        raise ValueError("unary kernel supports at most 62 states and ell <= 62")
    tmask = 0
    for t in lengths:
        tmask |= 1 << t
    full = (1 << n) - 1
    succ = -np.ones(n, np.int64)
    traj = np.zeros(ell + 2, np.int64)
    traj[0] = 1
    und = np.zeros((ell + 2, n), np.int64)
    nund = np.zeros(ell + 2, np.int64)
    his = np.zeros(ell + 2, np.int64)
    ctl = np.array([0.0, float(deadline), 0.0])
    if not _ufeasible(succ, traj, 0, tmask, ell, full, his):
        return 0, None, 0, 0
    if ell == 0:
        found = True
    else:
        und[0, 0] = 0
        nund[0] = 1
        found = _urec(n, ell, tmask, succ, traj, 0, 1, und, 0, nund, his, ctl)
    if not found:
        return (-1 if ctl[2] else 0), None, 0, int(ctl[0])
    bad = 0
    for u in range(ell + 1):
        if not (tmask >> u) & 1:
            bad |= int(traj[u])
    rows = [max(int(r), 0) for r in succ]
    return 1, rows, full & ~bad, int(ctl[0])


# ---------------------------------------------------------------- word tree


@njit(cache=True)
def _timage(rows, R, a, upper, full):
    out = 0
    s = 0
    while R:
        if R & 1:
            r = rows[s, a]
            if r < 0:
                if upper:
                    return full
            else:
                out |= r
        R >>= 1
        s += 1
    return out


@njit(cache=True)
def _tfeasible(rows, S, cur, W, parent, sym, inl, leaf, full, equal, lo, hi):
    bad = 0
    for i in range(cur + 1):
        if not inl[i]:
            bad |= S[i]
    for i in range(cur + 1, W):
        p = parent[i]
        if p <= cur:
            plo = S[p]
            phi = S[p]
        else:
            plo = lo[p]
            phi = hi[p]
        lo[i] = _timage(rows, plo, sym[i], False, full)
        hi[i] = full if phi == full else _timage(rows, phi, sym[i], True, full)
        if not inl[i]:
            bad |= lo[i]
    for i in range(W):
        if inl[i]:
            m = S[i] if i <= cur else hi[i]
            if m & ~bad == 0:
                return False
    if equal:
        dead = 0
        for i in range(W):
            if leaf[i]:
                dead |= S[i] if i <= cur else lo[i]
        s = 0
        k = rows.shape[1]
        while dead:
            if dead & 1:
                for a in range(k):
                    if rows[s, a] > 0:
                        return False
            dead >>= 1
            s += 1
    return True


@njit
def _trec(n, i, ui, touched, rows, S, W, parent, sym, inl, leaf, equal, lo, hi, und, nund, ctl):
    if _tick(ctl):
        return False
    full = (1 << n) - 1
    if ui == nund[i]:
        S[i] = _timage(rows, S[parent[i]], sym[i], False, full)
        if not _tfeasible(rows, S, i, W, parent, sym, inl, leaf, full, equal, lo, hi):
            return False
        if i == W - 1:
            return True
        j = i + 1
        k = 0
        R = S[parent[j]]
        s = 0
        while R:
            if R & 1 and rows[s, sym[j]] < 0:
                und[j, k] = s
                k += 1
            R >>= 1
            s += 1
        nund[j] = k
        return _trec(n, j, 0, touched, rows, S, W, parent, sym, inl, leaf, equal, lo, hi, und, nund, ctl)
    s = und[i, ui]
    a = sym[i]
    low = (1 << touched) - 1
    for k in range(n - touched + 1):
        newbits = ((1 << (touched + k)) - 1) ^ low
        for old in range(1 << touched):
            rows[s, a] = old | newbits
            if not _tfeasible(rows, S, i - 1, W, parent, sym, inl, leaf, full, equal, lo, hi):
                continue
            if _trec(n, i, ui + 1, touched + k, rows, S, W, parent, sym, inl, leaf, equal, lo, hi, und, nund, ctl):
                return True
            if ctl[2] != 0.0:
                return False
    rows[s, a] = -1
    return False


def tree_search(k, ell, members, n, equal, deadline=0.0):
    """Look for an ``n``-state NFA over ``k`` symbols for a finite language.

    ``members[i]`` says whether the ``i``-th word of length at most ``ell``
    (shortlex numbering, so word ``i`` extends word ``(i - 1) // k`` by symbol
    ``(i - 1) % k``) belongs to the language.  With ``equal`` the automaton
    must also reject every longer word; this relies on every state being
    useful, which holds for minimal automata when sizes are tried in
    increasing order.

    Returns ``(status, rows, finals_mask, nodes)`` with ``rows[s][a]`` bitmasks.
    """
    if n > 62:
        raise ValueError("tree kernel supports at most 62 states")
    W = len(members)
    parent = np.zeros(W, np.int64)
    sym = np.zeros(W, np.int64)
    depth = np.zeros(W, np.int64)
    for i in range(1, W):
        parent[i] = (i - 1) // k
        sym[i] = (i - 1) % k
        depth[i] = depth[parent[i]] + 1
    inl = np.array(members, dtype=np.bool_)
    leaf = depth == ell
    rows = -np.ones((n, k), np.int64)
    S = np.zeros(W, np.int64)
    S[0] = 1
    lo = np.zeros(W, np.int64)
    hi = np.zeros(W, np.int64)
    und = np.zeros((W, n), np.int64)
    nund = np.zeros(W, np.int64)
    ctl = np.array([0.0, float(deadline), 0.0])
    full = (1 << n) - 1
    if not _tfeasible(rows, S, 0, W, parent, sym, inl, leaf, full, equal, lo, hi):
        return 0, None, 0, 0
    if W == 1:
        found = True
    else:
        nund[1] = 1
        und[1, 0] = 0
        found = _trec(n, 1, 0, 1, rows, S, W, parent, sym, inl, leaf, equal, lo, hi, und, nund, ctl)
    if not found:
        return (-1 if ctl[2] else 0), None, 0, int(ctl[0])
    bad = 0
    for i in range(W):
        if not inl[i]:
            bad |= int(S[i])
    table = [[max(int(rows[s, a]), 0) for a in range(k)] for s in range(n)]
    return 1, table, full & ~bad, int(ctl[0])
