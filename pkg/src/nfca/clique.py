"""Exact maximum clique by branch and bound with a greedy-colouring bound.

Graphs are adjacency lists of bitmasks: bit ``j`` of ``adjacency[i]`` is set
when ``i`` and ``j`` are adjacent.  The adjacency must be symmetric and
irreflexive.
"""


def _greedy_clique(adj, order):
    best = []
    for start in order:
        clique = [start]
        cand = adj[start]
        for v in order:
            if cand >> v & 1:
                clique.append(v)
                cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def _colour_classes(P, adj):
    """Greedy colouring of the vertex set ``P``; yields (vertex, colour) by colour."""
    out = []
    colour = 0
    while P:
        colour += 1
        Q = P
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            Q &= ~low & ~adj[v]
            P &= ~low
            out.append((v, colour))
    return out


def max_clique(adjacency):
    """Return the vertices of one maximum clique, as a sorted list."""
    n = len(adjacency)
    if n == 0:
        return []
    # relabel so that high-degree vertices take the low bits
    order = sorted(range(n), key=lambda v: (-bin(adjacency[v]).count("1"), v))
    pos = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        m = 0
        for u in range(n):
            if adjacency[v] >> u & 1:
                m |= 1 << pos[u]
        adj.append(m)

    best = _greedy_clique(adj, range(n))

    def expand(R, P):
        nonlocal best
        for v, colour in reversed(_colour_classes(P, adj)):
            if len(R) + colour <= len(best):
                return
            R.append(v)
            P2 = P & adj[v]
            if P2:
                expand(R, P2)
            elif len(R) > len(best):
                best = list(R)
            R.pop()
            P &= ~(1 << v)

    expand([], (1 << n) - 1)
    return sorted(order[v] for v in best)
