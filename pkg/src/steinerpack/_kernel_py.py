"""Pure-Python search kernels.

Same API as the compiled module (_kernel_cy); the package selects one at
import time.  Everything here works on (n, rows) where rows is a sequence
of int bitmasks, so the hot loops are single-word bit operations.

Kernels:
  steiner_max_packing  -- exact max packing of edge-disjoint or internally
                          disjoint Steiner trees (iterative deepening)
  spanning_max_packing -- max edge-disjoint spanning trees (matroid partition)
  canonical_rows       -- canonical labelling by refinement + backtracking
  nw_max_trees / nw_first_violation -- Nash-Williams/Tutte partition scans
"""

from __future__ import annotations

from collections import deque

BACKEND = "python"

STATUS_OK = 0
STATUS_BUDGET = 1


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _reach(rows, start, allowed):
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def max_trees_by_edges(es: int, eb: int, k: int) -> int:
    """Edge-counting ceiling on the number of disjoint S-trees.

    A tree inside G[S] uses k-1 edges of E(G[S]) u E[S,S~]; any other
    uses at least k.  Maximises y over x trees of the first kind with
    (k-1)x + k(y-x) <= es+eb, x <= floor(es/(k-1)), y >= x.
    """
    if k < 2:
        return es + eb
    total = es + eb
    xcap = es // (k - 1)
    best = 0
    for x in range(xcap + 1):
        y = (total + x) // k
        if y >= x and y > best:
            best = y
    return best


class _Budget(Exception):
    pass


def steiner_max_packing(n, rows, smask, vertex_mode, lower_bound, upper_bound, budget):
    """Exact maximum number of disjoint minimal S-trees with certificates.

    vertex_mode True means internally disjoint (each non-terminal owned by
    at most one tree); False means edge-disjoint only.  Search: iterative
    deepening on the tree count starting above the caller-confirmed
    lower_bound; each tree grows from the lowest terminal by always
    branching on which crossing edge is the minimal tree edge, which
    enumerates every minimal S-tree exactly once.  Trees within a packing
    are ordered by their first edge at the root terminal.

    Returns (value, trees, status); value >= lower_bound, and trees is
    empty when no packing beyond lower_bound was found (the caller keeps
    its own witnesses then).  status STATUS_BUDGET means the budget ran
    out and value is only a confirmed lower bound.
    """
    full = (1 << n) - 1
    k = smask.bit_count()
    s0 = (smask & -smask).bit_length() - 1
    adj = list(rows)
    owned = 0  # non-terminals consumed by committed trees (vertex mode)
    nodes = 0
    trees: list[list[tuple[int, int]]] = []
    snapshot: list[list[tuple[int, int]]] = []

    def bounds_ok(r, avail):
        # every terminal keeps >= r usable edges
        for v in _bits(smask):
            if (adj[v] & avail).bit_count() < r:
                return False
        # S connected within the available vertices
        if smask & ~_reach(adj, s0, avail):
            return False
        es = 0
        eb = 0
        out = avail & ~smask
        for v in _bits(smask):
            es += (adj[v] & smask).bit_count()
            eb += (adj[v] & out).bit_count()
        es //= 2
        if max_trees_by_edges(es, eb, k) < r:
            return False
        if vertex_mode and k >= 2:
            # trees not inside G[S] each own at least one pool vertex
            if es // (k - 1) + out.bit_count() < r:
                return False
        return True

    def search_tree(i, t, min_w):
        nonlocal snapshot
        if i == t:
            snapshot = [list(tr) for tr in trees]
            return True
        avail = full & ~owned
        r = t - i
        if not bounds_ok(r, avail):
            return False
        # remaining trees use distinct first edges (s0, w) with growing w
        high = adj[s0] & avail & -(1 << (min_w + 1))
        if high.bit_count() < r:
            return False

        banned = [0] * n
        treedeg = [0] * n
        cur: list[tuple[int, int]] = []
        rleft = r - 1  # trees still needed after the current one

        def grow(comp, first_w):
            nonlocal owned, nodes
            if not smask & ~comp:
                # complete minimal S-tree: non-terminal leaves are dead weight
                for v in _bits(comp & ~smask):
                    if treedeg[v] == 1:
                        return False
                for u, v in cur:
                    adj[u] &= ~(1 << v)
                    adj[v] &= ~(1 << u)
                owned_save = owned
                if vertex_mode:
                    owned |= comp & ~smask
                trees.append(cur)
                ok = search_tree(i + 1, t, first_w)
                trees.pop()
                owned = owned_save
                for u, v in cur:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                return ok
            cands = []
            for u in _bits(comp):
                for v in _bits(adj[u] & avail & ~comp & ~banned[u]):
                    a, b = (u, v) if u < v else (v, u)
                    cands.append((a << 6 | b, u, v))
            cands.sort()
            undo = []
            if comp == 1 << s0:
                # first edges up to min_w belong to earlier trees of the
                # packing; they may not appear anywhere in this tree
                for c in cands:
                    if c[2] <= min_w:
                        banned[s0] |= 1 << c[2]
                        banned[c[2]] |= 1 << s0
                        undo.append((s0, c[2]))
                cands = [c for c in cands if c[2] > min_w]
            ok = False
            try:
                for eid, u, v in cands:
                    nodes += 1
                    if nodes > budget:
                        raise _Budget
                    # a terminal whose residual degree this tree would eat
                    # below the demand of the remaining trees is a dead end
                    if (
                        smask >> u & 1
                        and (adj[u] & avail).bit_count() - treedeg[u] - 1 < rleft
                    ) or (
                        smask >> v & 1
                        and (adj[v] & avail).bit_count() - treedeg[v] - 1 < rleft
                    ):
                        banned[u] |= 1 << v
                        banned[v] |= 1 << u
                        undo.append((u, v))
                        continue
                    treedeg[u] += 1
                    treedeg[v] += 1
                    cur.append((u, v) if u < v else (v, u))
                    if grow(comp | 1 << v, v if comp == 1 << s0 else first_w):
                        ok = True
                    cur.pop()
                    treedeg[u] -= 1
                    treedeg[v] -= 1
                    if ok:
                        break
                    # not the minimal crossing tree edge; dead for this tree
                    banned[u] |= 1 << v
                    banned[v] |= 1 << u
                    undo.append((u, v))
            finally:
                for bu, bv in undo:
                    banned[bu] &= ~(1 << bv)
                    banned[bv] &= ~(1 << bu)
            return ok

        return grow(1 << s0, -1)

    value = max(lower_bound, 0)
    status = STATUS_OK
    try:
        t = value + 1
        while t <= upper_bound:
            if not search_tree(0, t, -1):
                break
            value = t
            t += 1
    except _Budget:
        status = STATUS_BUDGET
    return value, snapshot, status


def spanning_max_packing(n, rows):
    """Maximum edge-disjoint spanning tree packing via matroid partition.

    Forests are grown with Edmonds-style augmenting sequences; the packing
    for t trees exists iff the t-fold union saturates t(n-1) edges.
    Returns (count, trees) with trees a list of edge lists.
    """
    edges = []
    eid = {}
    for u in range(n):
        row = rows[u] >> (u + 1) << (u + 1)
        for v in _bits(row):
            eid[(u, v)] = len(edges)
            edges.append((u, v))
    m = len(edges)
    if n < 2:
        return 0, []
    color = [-1] * m
    forests: list[list[int]] = []
    sizes: list[int] = []

    def forest_path(f, a, b):
        """Edge ids on the a..b path in forest f, or None if disconnected."""
        fr = forests[f]
        parent = {a: -1}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if x == b:
                path = []
                while parent[x] != -1:
                    p = parent[x]
                    path.append(eid[(p, x) if p < x else (x, p)])
                    x = p
                return path
            for y in _bits(fr[x]):
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
        return None

    def augment(e0):
        label = {e0: None}
        queue = deque([e0])
        while queue:
            f = queue.popleft()
            fu, fv = edges[f]
            for i in range(len(forests)):
                if color[f] == i:
                    continue
                path = forest_path(i, fu, fv)
                if path is None:
                    cur, tgt = f, i
                    while True:
                        prev = color[cur]
                        color[cur] = tgt
                        u, v = edges[cur]
                        forests[tgt][u] |= 1 << v
                        forests[tgt][v] |= 1 << u
                        sizes[tgt] += 1
                        if prev == -1:
                            return True
                        forests[prev][u] &= ~(1 << v)
                        forests[prev][v] &= ~(1 << u)
                        sizes[prev] -= 1
                        cur, tgt = label[cur], prev
                for g in path or ():
                    if g not in label:
                        label[g] = f
                        queue.append(g)
        return False

    best: list[list[tuple[int, int]]] = []
    while True:
        t = len(forests) + 1
        if t * (n - 1) > m:
            return t - 1, best
        forests.append([0] * n)
        sizes.append(0)
        for e in range(m):
            if color[e] == -1:
                augment(e)
        if any(sizes[i] != n - 1 for i in range(t)):
            return t - 1, best
        best = [[] for _ in range(t)]
        for e in range(m):
            if color[e] != -1:
                best[color[e]].append(edges[e])


def canonical_rows(n, rows):
    """Canonical adjacency rows: the lexicographically largest relabelling.

    Individualisation-refinement backtracking over an equitable ordered
    partition.  Cells whose vertices are mutually interchangeable (equal
    outside-neighbourhoods, complete or empty inside) never branch, which
    keeps complete-ish graphs and their complements cheap.
    """
    if n == 1:
        return (0,)

    def refine(cells):
        cells = [list(c) for c in cells]
        changed = True
        while changed:
            changed = False
            masks = [sum(1 << v for v in c) for c in cells]
            for ci, cell in enumerate(cells):
                if len(cell) == 1:
                    continue
                keys = {}
                for v in cell:
                    key = tuple((rows[v] & cm).bit_count() for cm in masks)
                    keys.setdefault(key, []).append(v)
                if len(keys) > 1:
                    parts = [keys[key] for key in sorted(keys)]
                    cells[ci : ci + 1] = parts
                    changed = True
                    break
        return cells

    def homogeneous(cell):
        cm = sum(1 << v for v in cell)
        inner0 = rows[cell[0]] & cm
        if inner0 != 0 and inner0 != cm & ~(1 << cell[0]):
            return False
        outer0 = rows[cell[0]] & ~cm
        for v in cell[1:]:
            inner = rows[v] & cm
            if inner0 == 0:
                if inner != 0:
                    return False
            elif inner != cm & ~(1 << v):
                return False
            if rows[v] & ~cm != outer0:
                return False
        return True

    best = None

    def leaf(cells):
        nonlocal best
        perm = [v for cell in cells for v in cell]
        pos = [0] * n
        for i, v in enumerate(perm):
            pos[v] = i
        out = []
        for v in perm:
            row = 0
            for w in _bits(rows[v]):
                row |= 1 << pos[w]
            out.append(row)
        cand = tuple(out)
        if best is None or cand > best:
            best = cand

    def rec(cells):
        cells = refine(cells)
        for ci, cell in enumerate(cells):
            if len(cell) > 1 and not homogeneous(cell):
                for v in cell:
                    rest = [w for w in cell if w != v]
                    rec(cells[:ci] + [[v], rest] + cells[ci + 1 :])
                return
        leaf(cells)

    rec([list(range(n))])
    return best


def nw_max_trees(n, rows):
    """min over partitions with >= 2 blocks of floor(cross / (blocks-1)).

    By Nash-Williams/Tutte this equals the max number of edge-disjoint
    spanning trees.  Partitions are enumerated as restricted growth
    strings.  n == 1 has no 2-block partition; returns 0 then.
    """
    if n == 1:
        return 0
    best = n * n  # above any possible packing
    blocks = []

    def rec(v, assigned, cross):
        nonlocal best
        if v == n:
            if len(blocks) >= 2:
                q = cross // (len(blocks) - 1)
                if q < best:
                    best = q
            return
        for b in range(len(blocks)):
            add = (rows[v] & assigned & ~blocks[b]).bit_count()
            blocks[b] |= 1 << v
            rec(v + 1, assigned | 1 << v, cross + add)
            blocks[b] &= ~(1 << v)
        add = (rows[v] & assigned).bit_count()
        blocks.append(1 << v)
        rec(v + 1, assigned | 1 << v, cross + add)
        blocks.pop()

    rec(0, 0, 0)
    return best


def nw_first_violation(n, rows, l):
    """First partition (restricted-growth lex order) violating the
    Nash-Williams/Tutte condition cross >= l*(blocks-1), or None."""
    blocks = []
    hit = []

    def rec(v, assigned, cross):
        if hit:
            return
        if v == n:
            if len(blocks) >= 2 and cross < l * (len(blocks) - 1):
                hit.append(list(blocks))
            return
        for b in range(len(blocks)):
            add = (rows[v] & assigned & ~blocks[b]).bit_count()
            blocks[b] |= 1 << v
            rec(v + 1, assigned | 1 << v, cross + add)
            blocks[b] &= ~(1 << v)
            if hit:
                return
        add = (rows[v] & assigned).bit_count()
        blocks.append(1 << v)
        rec(v + 1, assigned | 1 << v, cross + add)
        blocks.pop()

    rec(0, 0, 0)
    return hit[0] if hit else None
