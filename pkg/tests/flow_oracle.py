"""Independent combinatorial oracles for flow polyhedra {u >= 0 : Bu = theta}.

The incidence columns of an arc set are linearly independent exactly when the
arcs are acyclic in the underlying undirected multigraph, so a nonnegative
flow is a vertex of the polyhedron precisely when its support is a forest.
Extreme rays of the recession cone {u >= 0 : Bu = 0} are the characteristic
vectors of elementary directed cycles.  Vertices therefore biject with
forests whose components each route theta with strictly positive flow, and
they can be counted with a rooted-tree dynamic program over vertex subsets,
with no polyhedral computation at all.  These oracles certify the double
description output on lifted flow polyhedra.
"""

from fractions import Fraction


def _flow_balance(quiver, u):
    """Net inflow at every quiver vertex for the arrow flow u."""
    bal = [Fraction(0)] * quiver.r
    for idx, a in enumerate(quiver.arrows):
        f = Fraction(u[idx])
        bal[a.head] += f
        bal[a.tail] -= f
    return bal


def is_feasible_forest_flow(quiver, theta, u) -> bool:
    """True iff u is a vertex of the flow polyhedron: feasible, forest support."""
    if any(Fraction(x) < 0 for x in u):
        return False
    if _flow_balance(quiver, u) != [Fraction(t) for t in theta]:
        return False
    parent = list(range(quiver.r))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for idx, val in enumerate(u):
        if Fraction(val) == 0:
            continue
        a = quiver.arrows[idx]
        if a.tail == a.head:
            return False
        ru, rv = find(a.tail), find(a.head)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_elementary_circulation(quiver, u) -> bool:
    """True iff u is a constant positive flow around one elementary cycle."""
    support = [idx for idx, val in enumerate(u) if Fraction(val) != 0]
    if not support:
        return False
    values = {Fraction(u[idx]) for idx in support}
    if len(values) != 1 or values.pop() <= 0:
        return False
    succ = {}
    for idx in support:
        a = quiver.arrows[idx]
        if a.tail in succ:
            return False
        succ[a.tail] = a.head
    start = quiver.arrows[support[0]].tail
    seen = set()
    v = start
    while v not in seen:
        seen.add(v)
        if v not in succ:
            return False
        v = succ[v]
    return v == start and seen == set(succ)


def count_elementary_cycles(quiver) -> int:
    """Number of elementary directed cycles, counted by anchored DFS."""
    out = [[] for _ in range(quiver.r)]
    for a in quiver.arrows:
        if a.tail != a.head:
            out[a.tail].append(a.head)
    count = 0
    for start in range(quiver.r):
        stack = [(start, iter(out[start]))]
        onpath = {start}
        while stack:
            v, it = stack[-1]
            advanced = False
            for h in it:
                if h == start:
                    count += 1
                    continue
                if h < start or h in onpath:
                    continue
                stack.append((h, iter(out[h])))
                onpath.add(h)
                advanced = True
                break
            if not advanced:
                stack.pop()
                onpath.discard(v)
    return count


def count_flow_vertices(quiver, theta) -> int:
    """Exact vertex count of {u >= 0 : Bu = theta} by subset dynamic program.

    Counts forests with strictly positive determined flow.  R[S][v] is the
    number of positive-flow trees on vertex subset S rooted at v; a tree
    splits off the child subtree containing the smallest non-root element,
    and the flow on the connecting arc is the theta-sum of that subtree,
    with sign matching the arc orientation.
    """
    r = quiver.r
    if r > 16:
        raise ValueError("subset dynamic program supports at most 16 vertices")
    th = [Fraction(t) for t in theta]
    arcs_to = [[0] * r for _ in range(r)]
    for a in quiver.arrows:
        if a.tail != a.head:
            arcs_to[a.tail][a.head] += 1

    tsum = [Fraction(0)] * (1 << r)
    for s in range(1, 1 << r):
        low = (s & -s).bit_length() - 1
        tsum[s] = tsum[s & (s - 1)] + th[low]

    R = [dict() for _ in range(1 << r)]
    for v in range(r):
        R[1 << v][v] = 1
    for s in sorted(range(1, 1 << r), key=lambda m: bin(m).count("1")):
        if s & (s - 1) == 0:
            continue
        for v in range(r):
            if not (s >> v) & 1:
                continue
            rest = s & ~(1 << v)
            anchor = (rest & -rest).bit_length() - 1
            total = 0
            a = rest
            while True:
                if (a >> anchor) & 1:
                    ta = tsum[a]
                    if ta != 0:
                        rv = R[s & ~a].get(v, 0)
                        if rv:
                            acc = 0
                            for c, cnt in R[a].items():
                                # arc head lies on the side receiving the flow
                                n_arcs = arcs_to[v][c] if ta > 0 else arcs_to[c][v]
                                if n_arcs:
                                    acc += cnt * n_arcs
                            total += acc * rv
                if a == 0:
                    break
                a = (a - 1) & rest
            if total:
                R[s][v] = total

    # assemble forests: components are zero-sum trees; a vertex outside the
    # support needs theta zero and stands as a singleton block
    F = [0] * (1 << r)
    F[0] = 1
    for s in range(1, 1 << r):
        low = (s & -s).bit_length() - 1
        acc = 0
        a = s
        while True:
            if (a >> low) & 1 and tsum[a] == 0:
                if a & (a - 1) == 0:
                    trees = 1 if th[low] == 0 else 0
                else:
                    members = [i for i in range(r) if (a >> i) & 1]
                    trees = R[a].get(members[0], 0)
                if trees:
                    acc += trees * F[s & ~a]
            if a == 0:
                break
            a = (a - 1) & s
        F[s] = acc
    return F[(1 << r) - 1]
