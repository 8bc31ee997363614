# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same API and same results as _kernel_py.

The algorithms are direct ports of the pure-Python module: the minimal-
S-tree packing search, the matroid-partition spanning packer, canonical
labelling and the Nash-Williams partition scans, with graph rows held in
C uint64 arrays.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memset

BACKEND = "cython"

STATUS_OK = 0
STATUS_BUDGET = 1

ctypedef unsigned long long u64
ctypedef long long i64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef inline int popcount(u64 x) nogil:
    return __builtin_popcountll(x)

cdef inline int lsb(u64 x) nogil:
    return __builtin_ctzll(x)

cdef u64 reach(u64* rows, int start, u64 allowed) nogil:
    cdef u64 seen = (<u64>1) << start
    cdef u64 frontier = seen
    cdef u64 nxt, f
    cdef int v
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = lsb(f)
            f &= f - 1
            nxt |= rows[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


cdef int c_max_trees_by_edges(int es, int eb, int k) nogil:
    cdef int total = es + eb
    cdef int xcap, x, y, best
    if k < 2:
        return total
    xcap = es // (k - 1)
    best = 0
    for x in range(xcap + 1):
        y = (total + x) // k
        if y >= x and y > best:
            best = y
    return best


def max_trees_by_edges(int es, int eb, int k):
    """Edge-counting ceiling on the number of disjoint S-trees."""
    return c_max_trees_by_edges(es, eb, k)


# -- Steiner packing -------------------------------------------------------

cdef struct SS:
    int n
    int k
    int s0
    int t
    bint vertex_mode
    u64 full
    u64 smask
    u64 owned
    u64 adj[64]
    unsigned long long nodes
    unsigned long long budget
    bint budget_hit
    # committed trees plus the growing tree: edges, segment boundaries
    int tree_start[66]
    int ntrees
    int eu[2048]
    int ev[2048]
    # best confirmed packing
    int best_tree_start[66]
    int best_ntrees
    int best_eu[2048]
    int best_ev[2048]
    # candidate/undo arena shared across the recursion
    int* cand_u
    int* cand_v


cdef inline int s_nedges(SS* s) nogil:
    return s.tree_start[s.ntrees + 1]


cdef bint bounds_ok(SS* s, int r, u64 avail) nogil:
    cdef u64 rem = s.smask
    cdef u64 out = avail & ~s.smask
    cdef int v, es = 0, eb = 0
    while rem:
        v = lsb(rem)
        rem &= rem - 1
        if popcount(s.adj[v] & avail) < r:
            return False
    if s.smask & ~reach(s.adj, s.s0, avail):
        return False
    rem = s.smask
    while rem:
        v = lsb(rem)
        rem &= rem - 1
        es += popcount(s.adj[v] & s.smask)
        eb += popcount(s.adj[v] & out)
    es >>= 1
    if c_max_trees_by_edges(es, eb, s.k) < r:
        return False
    if s.vertex_mode and s.k >= 2:
        if es // (s.k - 1) + popcount(out) < r:
            return False
    return True


cdef bint grow(SS* s, int i, int min_w, u64 comp, int first_w,
               u64* banned, signed char* treedeg, int tree_base,
               long arena) nogil:
    cdef u64 m, targets, above, avail
    cdef int v, a, b, e, j, ncand0, ncand, nundo, nedges, new_v, endpt
    cdef long ulog, child
    cdef bint ok
    cdef u64 owned_save

    if not (s.smask & ~comp):
        # complete minimal S-tree: no non-terminal leaves allowed
        m = comp & ~s.smask
        while m:
            v = lsb(m)
            m &= m - 1
            if treedeg[v] == 1:
                return False
        nedges = s.tree_start[s.ntrees + 1]
        for e in range(tree_base, nedges):
            s.adj[s.eu[e]] &= ~((<u64>1) << s.ev[e])
            s.adj[s.ev[e]] &= ~((<u64>1) << s.eu[e])
        owned_save = s.owned
        if s.vertex_mode:
            s.owned |= comp & ~s.smask
        s.ntrees += 1
        s.tree_start[s.ntrees + 1] = nedges  # next tree starts empty
        ok = search_tree(s, i + 1, first_w, arena)
        s.ntrees -= 1
        s.owned = owned_save
        for e in range(tree_base, nedges):
            s.adj[s.eu[e]] |= (<u64>1) << s.ev[e]
            s.adj[s.ev[e]] |= (<u64>1) << s.eu[e]
        return ok

    avail = s.full & ~s.owned
    # crossing candidates in global edge-id order (low endpoint ascending)
    ncand0 = 0
    for a in range(s.n):
        above = ~(((<u64>1) << a) - 1) ^ ((<u64>1) << a)
        if (comp >> a) & 1:
            targets = s.adj[a] & avail & ~comp & ~banned[a] & above
        elif (avail >> a) & 1:
            targets = s.adj[a] & comp & ~banned[a] & above
        else:
            continue
        while targets:
            b = lsb(targets)
            targets &= targets - 1
            s.cand_u[arena + ncand0] = a
            s.cand_v[arena + ncand0] = b
            ncand0 += 1
    ulog = arena + ncand0
    child = ulog + ncand0
    nundo = 0
    ncand = ncand0
    if comp == (<u64>1) << s.s0:
        # first tree edge: endpoints up to min_w belong to earlier trees
        # and may not appear anywhere in this tree
        j = 0
        for e in range(ncand0):
            a = s.cand_u[arena + e]
            b = s.cand_v[arena + e]
            endpt = b if a == s.s0 else a
            if endpt <= min_w:
                banned[a] |= (<u64>1) << b
                banned[b] |= (<u64>1) << a
                s.cand_u[ulog + nundo] = a
                s.cand_v[ulog + nundo] = b
                nundo += 1
            else:
                s.cand_u[arena + j] = a
                s.cand_v[arena + j] = b
                j += 1
        ncand = j
    ok = False
    cdef int rleft = s.t - i - 1  # trees still needed after this one
    for j in range(ncand):
        a = s.cand_u[arena + j]
        b = s.cand_v[arena + j]
        s.nodes += 1
        if s.nodes > s.budget:
            s.budget_hit = True
            break
        # a terminal whose residual degree this tree would eat below the
        # demand of the remaining trees is a dead end
        if (((s.smask >> a) & 1 and
             popcount(s.adj[a] & avail) - treedeg[a] - 1 < rleft) or
            ((s.smask >> b) & 1 and
             popcount(s.adj[b] & avail) - treedeg[b] - 1 < rleft)):
            banned[a] |= (<u64>1) << b
            banned[b] |= (<u64>1) << a
            s.cand_u[ulog + nundo] = a
            s.cand_v[ulog + nundo] = b
            nundo += 1
            continue
        new_v = b if (comp >> a) & 1 else a
        treedeg[a] += 1
        treedeg[b] += 1
        nedges = s.tree_start[s.ntrees + 1]
        s.eu[nedges] = a if a < b else b
        s.ev[nedges] = b if a < b else a
        s.tree_start[s.ntrees + 1] = nedges + 1
        if grow(s, i, min_w, comp | ((<u64>1) << new_v),
                new_v if comp == ((<u64>1) << s.s0) else first_w,
                banned, treedeg, tree_base, child):
            ok = True
        s.tree_start[s.ntrees + 1] = nedges
        treedeg[a] -= 1
        treedeg[b] -= 1
        if ok or s.budget_hit:
            break
        # not the minimal crossing tree edge later; dead for this tree
        banned[a] |= (<u64>1) << b
        banned[b] |= (<u64>1) << a
        s.cand_u[ulog + nundo] = a
        s.cand_v[ulog + nundo] = b
        nundo += 1
    for e in range(nundo):
        a = s.cand_u[ulog + e]
        b = s.cand_v[ulog + e]
        banned[a] &= ~((<u64>1) << b)
        banned[b] &= ~((<u64>1) << a)
    return ok


cdef bint search_tree(SS* s, int i, int min_w, long arena) nogil:
    cdef int r = s.t - i
    cdef u64 avail, high
    cdef u64 banned[64]
    cdef signed char treedeg[64]
    if i == s.t:
        s.best_ntrees = s.ntrees
        memcpy(s.best_tree_start, s.tree_start, sizeof(int) * (s.ntrees + 2))
        memcpy(s.best_eu, s.eu, sizeof(int) * s_nedges(s))
        memcpy(s.best_ev, s.ev, sizeof(int) * s_nedges(s))
        return True
    avail = s.full & ~s.owned
    if not bounds_ok(s, r, avail):
        return False
    high = s.adj[s.s0] & avail
    if min_w >= 0:
        high &= ~(((<u64>1) << (min_w + 1)) - 1)
    if popcount(high) < r:
        return False
    memset(banned, 0, sizeof(banned))
    memset(treedeg, 0, sizeof(treedeg))
    return grow(s, i, min_w, (<u64>1) << s.s0, -1, banned, treedeg,
                s_nedges(s), arena)


cdef _collect_trees(SS* s, int value, int status):
    trees = []
    cdef int ti, e
    if value > 0 and s.best_ntrees == value:
        for ti in range(s.best_ntrees):
            tr = []
            for e in range(s.best_tree_start[ti], s.best_tree_start[ti + 1]):
                tr.append((s.best_eu[e], s.best_ev[e]))
            trees.append(tr)
    return value, trees, status


def steiner_max_packing(int n, rows, u64 smask, bint vertex_mode,
                        int lower_bound, int upper_bound,
                        unsigned long long budget):
    """Exact maximum number of disjoint minimal S-trees with certificates.

    Returns (value, trees, status); see the pure kernel for the contract.
    """
    cdef SS s
    cdef int v, t
    cdef long arena_cap
    cdef bint found
    s.n = n
    s.full = (((<u64>1) << n) - 1) if n < 64 else <u64>0xFFFFFFFFFFFFFFFF
    s.smask = smask
    s.k = popcount(smask)
    s.s0 = lsb(smask)
    s.vertex_mode = vertex_mode
    s.owned = 0
    s.nodes = 0
    s.budget = budget
    s.budget_hit = False
    s.ntrees = 0
    s.tree_start[0] = 0
    s.tree_start[1] = 0
    s.best_ntrees = -1
    for v in range(n):
        s.adj[v] = rows[v]
    if upper_bound > 63:
        upper_bound = 63
    # one grow frame per added edge or tree start; each needs 2*ncand slots
    arena_cap = (<long>(n + 2)) * (upper_bound + 1) * (n * n // 2 + 4) + 64
    s.cand_u = <int*>malloc(sizeof(int) * arena_cap)
    s.cand_v = <int*>malloc(sizeof(int) * arena_cap)
    if s.cand_u == NULL or s.cand_v == NULL:
        free(s.cand_u)
        free(s.cand_v)
        raise MemoryError()

    cdef int value = lower_bound if lower_bound > 0 else 0
    try:
        t = value + 1
        while t <= upper_bound:
            s.t = t
            with nogil:
                found = search_tree(&s, 0, -1, 0)
            if s.budget_hit:
                return _collect_trees(&s, value, STATUS_BUDGET)
            if not found:
                break
            value = t
            t += 1
        return _collect_trees(&s, value, STATUS_OK)
    finally:
        free(s.cand_u)
        free(s.cand_v)


# -- spanning tree packing -------------------------------------------------

def spanning_max_packing(int n, rows):
    """Maximum edge-disjoint spanning trees via matroid partition."""
    cdef u64 radj[64]
    cdef int eid_mat[4096]
    cdef int eu[2016]
    cdef int ev[2016]
    cdef int color[2016]
    cdef u64 frows[64][64]
    cdef int sizes[64]
    cdef int lab_par[2016]
    cdef int queue[2016]
    cdef int prev_v[64]
    cdef int prev_e[64]
    cdef int vqueue[64]
    cdef int m = 0, u, v, t, e, e2, qh, qt, f, i, fu, fv, x, y, cur, tgt, prev
    cdef int ntrees = 0
    cdef bint advanced, complete
    cdef u64 row, mm

    if n < 2:
        return 0, []
    for u in range(n):
        radj[u] = rows[u]
    for u in range(n):
        row = radj[u] >> (u + 1) << (u + 1)
        while row:
            v = lsb(row)
            row &= row - 1
            eid_mat[(u << 6) | v] = m
            eid_mat[(v << 6) | u] = m
            eu[m] = u
            ev[m] = v
            m += 1
    for e in range(m):
        color[e] = -1

    best = []
    while True:
        t = ntrees + 1
        if t * (n - 1) > m or t > 63:
            return ntrees, best
        memset(&frows[t - 1][0], 0, sizeof(u64) * 64)
        sizes[t - 1] = 0
        for e in range(m):
            if color[e] != -1:
                continue
            for i in range(m):
                lab_par[i] = -2
            lab_par[e] = -1
            queue[0] = e
            qh = 0
            qt = 1
            advanced = False
            while qh < qt and not advanced:
                f = queue[qh]
                qh += 1
                fu = eu[f]
                fv = ev[f]
                for i in range(t):
                    if color[f] == i:
                        continue
                    # BFS path fu..fv inside forest i
                    for x in range(n):
                        prev_v[x] = -2
                    prev_v[fu] = -1
                    vqueue[0] = fu
                    x = 0
                    y = 1
                    while x < y:
                        u = vqueue[x]
                        x += 1
                        if u == fv:
                            break
                        mm = frows[i][u]
                        while mm:
                            v = lsb(mm)
                            mm &= mm - 1
                            if prev_v[v] == -2:
                                prev_v[v] = u
                                prev_e[v] = eid_mat[(u << 6) | v]
                                vqueue[y] = v
                                y += 1
                    if prev_v[fv] == -2:
                        # forest i stays acyclic: apply the augmenting chain
                        cur = f
                        tgt = i
                        while True:
                            prev = color[cur]
                            color[cur] = tgt
                            u = eu[cur]
                            v = ev[cur]
                            frows[tgt][u] |= (<u64>1) << v
                            frows[tgt][v] |= (<u64>1) << u
                            sizes[tgt] += 1
                            if prev == -1:
                                break
                            frows[prev][u] &= ~((<u64>1) << v)
                            frows[prev][v] &= ~((<u64>1) << u)
                            sizes[prev] -= 1
                            cur = lab_par[cur]
                            tgt = prev
                        advanced = True
                        break
                    # label the fu..fv forest path edges
                    v = fv
                    while prev_v[v] != -1:
                        e2 = prev_e[v]
                        if lab_par[e2] == -2:
                            lab_par[e2] = f
                            queue[qt] = e2
                            qt += 1
                        v = prev_v[v]
        complete = True
        for i in range(t):
            if sizes[i] != n - 1:
                complete = False
                break
        if not complete:
            return ntrees, best
        ntrees = t
        best = [[] for _ in range(t)]
        for e in range(m):
            if color[e] != -1:
                best[color[e]].append((eu[e], ev[e]))


# -- canonical labelling ---------------------------------------------------

cdef struct Canon:
    int n
    u64 rows[64]
    u64 best[64]
    bint has_best


cdef void refine(Canon* c, int* vert, int* cstart, int* clen, int* ncells) nogil:
    """Equitable refinement, mirroring the pure version: split the first
    cell that separates under the vector of neighbour counts into every
    cell; subcells ordered by key vector ascending."""
    cdef u64 masks[64]
    cdef int keys[4096]
    cdef int bounds[65]
    cdef int ci, cj, i, j, v, sz, base, nc, nsub, tmp
    cdef bint changed = True, all_same, gt, diff
    while changed:
        changed = False
        nc = ncells[0]
        for ci in range(nc):
            masks[ci] = 0
            for i in range(cstart[ci], cstart[ci] + clen[ci]):
                masks[ci] |= (<u64>1) << vert[i]
        for ci in range(nc):
            sz = clen[ci]
            if sz == 1:
                continue
            base = cstart[ci]
            for i in range(sz):
                v = vert[base + i]
                for cj in range(nc):
                    keys[i * nc + cj] = popcount(c.rows[v] & masks[cj])
            all_same = True
            for i in range(1, sz):
                for cj in range(nc):
                    if keys[i * nc + cj] != keys[cj]:
                        all_same = False
                        break
                if not all_same:
                    break
            if all_same:
                continue
            # stable insertion sort of cell members by key vector
            for i in range(1, sz):
                j = i
                while j > 0:
                    gt = False
                    for cj in range(nc):
                        if keys[(j - 1) * nc + cj] != keys[j * nc + cj]:
                            gt = keys[(j - 1) * nc + cj] > keys[j * nc + cj]
                            break
                    if not gt:
                        break
                    for cj in range(nc):
                        tmp = keys[(j - 1) * nc + cj]
                        keys[(j - 1) * nc + cj] = keys[j * nc + cj]
                        keys[j * nc + cj] = tmp
                    tmp = vert[base + j - 1]
                    vert[base + j - 1] = vert[base + j]
                    vert[base + j] = tmp
                    j -= 1
            nsub = 1
            bounds[0] = 0
            for i in range(1, sz):
                diff = False
                for cj in range(nc):
                    if keys[i * nc + cj] != keys[(i - 1) * nc + cj]:
                        diff = True
                        break
                if diff:
                    bounds[nsub] = i
                    nsub += 1
            bounds[nsub] = sz
            for i in range(nc - 1, ci, -1):
                cstart[i + nsub - 1] = cstart[i]
                clen[i + nsub - 1] = clen[i]
            for i in range(nsub):
                cstart[ci + i] = base + bounds[i]
                clen[ci + i] = bounds[i + 1] - bounds[i]
            ncells[0] = nc + nsub - 1
            changed = True
            break


cdef bint homogeneous(Canon* c, int* vert, int start, int sz) nogil:
    cdef u64 cm = 0
    cdef int i, v
    cdef u64 inner0, outer0, inner
    for i in range(start, start + sz):
        cm |= (<u64>1) << vert[i]
    v = vert[start]
    inner0 = c.rows[v] & cm
    if inner0 != 0 and inner0 != (cm & ~((<u64>1) << v)):
        return False
    outer0 = c.rows[v] & ~cm
    for i in range(start + 1, start + sz):
        v = vert[i]
        inner = c.rows[v] & cm
        if inner0 == 0:
            if inner != 0:
                return False
        elif inner != (cm & ~((<u64>1) << v)):
            return False
        if (c.rows[v] & ~cm) != outer0:
            return False
    return True


cdef void leaf(Canon* c, int* vert) nogil:
    cdef int pos[64]
    cdef u64 out[64]
    cdef int i, v, w
    cdef u64 row, m
    cdef bint better = False, decided = False
    for i in range(c.n):
        pos[vert[i]] = i
    for i in range(c.n):
        v = vert[i]
        row = 0
        m = c.rows[v]
        while m:
            w = lsb(m)
            m &= m - 1
            row |= (<u64>1) << pos[w]
        out[i] = row
        if c.has_best and not decided:
            if row > c.best[i]:
                decided = True
                better = True
            elif row < c.best[i]:
                return
    if not c.has_best or better:
        memcpy(c.best, out, sizeof(u64) * c.n)
        c.has_best = True


cdef void canon_rec(Canon* c, int* vert, int* cstart, int* clen, int ncells) nogil:
    cdef int vv[64]
    cdef int cs[65]
    cdef int cl[65]
    cdef int vv2[64]
    cdef int cs2[65]
    cdef int cl2[65]
    cdef int nc = ncells
    cdef int ci, i, j, v, tgt
    memcpy(vv, vert, sizeof(int) * c.n)
    memcpy(cs, cstart, sizeof(int) * ncells)
    memcpy(cl, clen, sizeof(int) * ncells)
    refine(c, vv, cs, cl, &nc)
    tgt = -1
    for ci in range(nc):
        if cl[ci] > 1 and not homogeneous(c, vv, cs[ci], cl[ci]):
            tgt = ci
            break
    if tgt < 0:
        leaf(c, vv)
        return
    for i in range(cl[tgt]):
        memcpy(vv2, vv, sizeof(int) * c.n)
        memcpy(cs2, cs, sizeof(int) * nc)
        memcpy(cl2, cl, sizeof(int) * nc)
        v = vv2[cs[tgt] + i]
        for j in range(cs[tgt] + i, cs[tgt], -1):
            vv2[j] = vv2[j - 1]
        vv2[cs[tgt]] = v
        for j in range(nc - 1, tgt, -1):
            cs2[j + 1] = cs2[j]
            cl2[j + 1] = cl2[j]
        cs2[tgt] = cs[tgt]
        cl2[tgt] = 1
        cs2[tgt + 1] = cs[tgt] + 1
        cl2[tgt + 1] = cl[tgt] - 1
        canon_rec(c, vv2, cs2, cl2, nc + 1)


def canonical_rows(int n, rows):
    """Canonical adjacency rows: the lexicographically largest relabelling."""
    cdef Canon c
    cdef int vert[64]
    cdef int cstart[65]
    cdef int clen[65]
    cdef int i
    if n == 1:
        return (0,)
    c.n = n
    c.has_best = False
    for i in range(n):
        c.rows[i] = rows[i]
        vert[i] = i
    cstart[0] = 0
    clen[0] = n
    with nogil:
        canon_rec(&c, vert, cstart, clen, 1)
    return tuple(int(c.best[i]) for i in range(n))


# -- Nash-Williams scans ---------------------------------------------------

cdef struct NW:
    int n
    u64 rows[64]
    u64 blocks[64]
    int nblocks
    int best
    i64 l
    bint stop
    int viol_nblocks
    u64 viol_blocks[64]


cdef void nw_rec_max(NW* s, int v, u64 assigned, int cross) nogil:
    cdef int b, add, q
    if v == s.n:
        if s.nblocks >= 2:
            q = cross // (s.nblocks - 1)
            if q < s.best:
                s.best = q
        return
    for b in range(s.nblocks):
        add = popcount(s.rows[v] & assigned & ~s.blocks[b])
        s.blocks[b] |= (<u64>1) << v
        nw_rec_max(s, v + 1, assigned | ((<u64>1) << v), cross + add)
        s.blocks[b] &= ~((<u64>1) << v)
    add = popcount(s.rows[v] & assigned)
    s.blocks[s.nblocks] = (<u64>1) << v
    s.nblocks += 1
    nw_rec_max(s, v + 1, assigned | ((<u64>1) << v), cross + add)
    s.nblocks -= 1


cdef void nw_rec_viol(NW* s, int v, u64 assigned, int cross) nogil:
    cdef int b, add, i
    if s.stop:
        return
    if v == s.n:
        if s.nblocks >= 2 and cross < s.l * (s.nblocks - 1):
            s.stop = True
            s.viol_nblocks = s.nblocks
            for i in range(s.nblocks):
                s.viol_blocks[i] = s.blocks[i]
        return
    for b in range(s.nblocks):
        add = popcount(s.rows[v] & assigned & ~s.blocks[b])
        s.blocks[b] |= (<u64>1) << v
        nw_rec_viol(s, v + 1, assigned | ((<u64>1) << v), cross + add)
        s.blocks[b] &= ~((<u64>1) << v)
        if s.stop:
            return
    add = popcount(s.rows[v] & assigned)
    s.blocks[s.nblocks] = (<u64>1) << v
    s.nblocks += 1
    nw_rec_viol(s, v + 1, assigned | ((<u64>1) << v), cross + add)
    s.nblocks -= 1


def nw_max_trees(int n, rows):
    """min over partitions with >= 2 blocks of floor(cross/(blocks-1))."""
    cdef NW s
    cdef int i
    if n == 1:
        return 0
    s.n = n
    s.nblocks = 0
    s.best = n * n
    for i in range(n):
        s.rows[i] = rows[i]
    with nogil:
        nw_rec_max(&s, 0, 0, 0)
    return s.best


def nw_first_violation(int n, rows, long long l):
    """First partition (restricted-growth lex order) with cross below
    l*(blocks-1), or None."""
    cdef NW s
    cdef int i
    s.n = n
    s.nblocks = 0
    s.l = l
    s.stop = False
    for i in range(n):
        s.rows[i] = rows[i]
    with nogil:
        nw_rec_viol(&s, 0, 0, 0)
    if not s.stop:
        return None
    return [int(s.viol_blocks[i]) for i in range(s.viol_nblocks)]
