#!/usr/bin/env python3
"""Regenerate data/gewirtz.g6 and data/subdivided_k23.g6.

The Gewirtz graph is built from PG(2,4): take the 168 hyperovals (6-arcs),
split them into the three families in which distinct hyperovals meet in an
even number of points, and join two hyperovals of one family when they are
disjoint.  The result is a strongly regular graph with parameters
(56, 10, 0, 2), which identifies it uniquely.
"""

import itertools
import sys

# GF(4) as bit pairs: 0, 1, w, w^2 with w^2 = w + 1. Addition is XOR.
MUL = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
]


def f4_mul(a, b):
    return MUL[a][b]


def normalize(v):
    for c in v:
        if c != 0:
            inv = next(x for x in range(4) if f4_mul(c, x) == 1)
            return tuple(f4_mul(inv, x) for x in v)
    return None


def pg24_points():
    pts = set()
    for v in itertools.product(range(4), repeat=3):
        n = normalize(v)
        if n is not None:
            pts.add(n)
    return sorted(pts)


def det3(p, q, r):
    a, b, c = p
    d, e, f = q
    g, h, i = r
    # char 2: subtraction == addition
    t1 = f4_mul(a, f4_mul(e, i) ^ f4_mul(f, h))
    t2 = f4_mul(b, f4_mul(d, i) ^ f4_mul(f, g))
    t3 = f4_mul(c, f4_mul(d, h) ^ f4_mul(e, g))
    return t1 ^ t2 ^ t3


def graph6(n, adj):
    assert n < 63
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if adj[i][j] else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def main():
    pts = pg24_points()
    assert len(pts) == 21
    idx = {p: i for i, p in enumerate(pts)}
    collinear = set()
    for trip in itertools.combinations(range(21), 3):
        if det3(pts[trip[0]], pts[trip[1]], pts[trip[2]]) == 0:
            collinear.add(trip)

    hyperovals = []
    for combo in itertools.combinations(range(21), 6):
        if all(t not in collinear for t in itertools.combinations(combo, 3)):
            hyperovals.append(frozenset(combo))
    assert len(hyperovals) == 168, len(hyperovals)

    # Even-intersection components: 3 families of 56.
    parent = list(range(168))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in itertools.combinations(range(168), 2):
        if len(hyperovals[a] & hyperovals[b]) % 2 == 0:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

    comps = {}
    for i in range(168):
        comps.setdefault(find(i), []).append(i)
    sizes = sorted(len(c) for c in comps.values())
    assert sizes == [56, 56, 56], sizes

    family = sorted(comps[find(0)], key=lambda i: sorted(hyperovals[i]))
    n = 56
    adj = [[False] * n for _ in range(n)]
    for a, b in itertools.combinations(range(n), 2):
        if not (hyperovals[family[a]] & hyperovals[family[b]]):
            adj[a][b] = adj[b][a] = True

    deg = [sum(adj[v]) for v in range(n)]
    assert all(d == 10 for d in deg), deg
    for a, b in itertools.combinations(range(n), 2):
        common = sum(1 for c in range(n) if adj[a][c] and adj[b][c])
        if adj[a][b]:
            assert common == 0, (a, b, common)
        else:
            assert common == 2, (a, b, common)
    print("srg(56,10,0,2) verified", file=sys.stderr)

    with open("data/gewirtz.g6", "w") as fh:
        fh.write(graph6(n, adj) + "\n")

    # Subdivided K_{2,3}: K_{2,3} with one edge split by a new vertex.
    # Vertices: 0,1 = large side; 2,3,4 = small side; 5 subdivides edge 0-2.
    sk = [[False] * 6 for _ in range(6)]
    for u, v in [(0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (0, 5), (5, 2)]:
        sk[u][v] = sk[v][u] = True
    with open("data/subdivided_k23.g6", "w") as fh:
        fh.write(graph6(6, sk) + "\n")
    print("wrote data/gewirtz.g6 and data/subdivided_k23.g6", file=sys.stderr)


if __name__ == "__main__":
    main()
