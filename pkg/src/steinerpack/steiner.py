"""Exact generalized local connectivity: kappa(S), lambda(S) and profiles.

kappa(S) is the maximum number of internally disjoint S-Steiner trees
(pairwise edge-disjoint, pairwise vertex intersection exactly S);
lambda(S) drops the vertex condition.  Values are computed by a complete
iterative-deepening search over minimal S-trees with edge-counting,
terminal-degree and connectivity pruning; every call may carry a node
budget and raises BudgetExceededError instead of ever guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional

from . import kernel
from .errors import BudgetExceededError, GraphInputError
from .graphs import Graph, TreeCertificate, bits, boundary_edge_count, mask_of
from .spanning import PackingCertificate, max_spanning_tree_packing

DEFAULT_BUDGET = 10**8
_UNLIMITED = 1 << 62

MODES = ("edge", "vertex")


@dataclass(frozen=True)
class ConnectivityProfile:
    """Min/max of kappa(S) or lambda(S) over all k-sets, with witnesses."""

    k: int
    mode: str
    min_value: int
    max_value: int
    argmin_set: int
    argmax_set: int


@dataclass(frozen=True)
class ClauseBound:
    """Strict upper bound on max lambda over (n-1)-sets of K_n minus M."""

    clause: str
    bound: Fraction
    requires_second_min_degree_at_most: Optional[int] = None


def _check_query(g: Graph, smask: int, min_size: int = 2) -> int:
    if smask & ~g.full_mask:
        raise GraphInputError("terminal set outside the vertex range")
    k = smask.bit_count()
    if k < min_size:
        raise GraphInputError(f"terminal set needs at least {min_size} vertices")
    if not g.is_connected():
        raise GraphInputError("graph must be connected")
    return k


def packing_upper_bound(g: Graph, smask: int) -> int:
    """Cheap ceiling on lambda(S): terminal degrees, edge counting and the
    complete-graph value n - ceil(k/2)."""
    k = smask.bit_count()
    ub = min(g.degree(v) for v in bits(smask))
    ub = min(ub, lemma4_bound(g, smask))
    if k >= 3:
        ub = min(ub, g.n - (k + 1) // 2)
    return ub


def _spanning_warm_start(g: Graph, smask: int, mode: str):
    """Polynomial lower bound with witnesses.

    Spanning trees of G[S] are internally disjoint S-trees; so is a full
    star at any non-terminal adjacent to all of S, and the two kinds are
    mutually disjoint.  Spanning trees of g itself give a further
    edge-disjoint (only) bound."""
    packed = 0
    warm: list = []
    sub, omap = g.induced_subgraph(smask)
    if sub.is_connected():
        packed, raw = kernel.spanning_max_packing(sub.n, sub.rows)
        warm = [
            [(min(omap[a], omap[b]), max(omap[a], omap[b])) for a, b in tr]
            for tr in raw
        ]
    for v in bits(g.full_mask & ~smask):
        if g.rows[v] & smask == smask:
            packed += 1
            warm.append([(min(v, s), max(v, s)) for s in bits(smask)])
    best = packed
    if mode == "edge":
        t, raw = kernel.spanning_max_packing(g.n, g.rows)
        if t > best:
            best, warm = t, raw
    return best, warm


def _exact_packing(
    g: Graph,
    smask: int,
    mode: str,
    budget: Optional[int],
    upper_hint: Optional[int] = None,
) -> tuple[int, PackingCertificate]:
    k = _check_query(g, smask)
    if mode not in MODES:
        raise GraphInputError(f"mode must be one of {MODES}")
    if k == g.n:
        # every vertex is a terminal: S-trees are spanning trees and the
        # vertex condition is vacuous
        value, cert = max_spanning_tree_packing(g)
        return value, PackingCertificate(cert.trees, mode, smask)
    ub = packing_upper_bound(g, smask)
    if upper_hint is not None:
        ub = min(ub, upper_hint)
    lb, warm = _spanning_warm_start(g, smask, mode)
    if lb >= ub:
        trees = tuple(TreeCertificate(frozenset(tr), smask) for tr in warm)
        return lb, PackingCertificate(trees, mode, smask)
    value, raw, status = kernel.steiner_max_packing(
        g.n, g.rows, smask, mode == "vertex", lb, ub, budget or _UNLIMITED
    )
    if status == kernel.STATUS_BUDGET:
        raise BudgetExceededError(
            f"node budget exhausted with {value} trees confirmed"
        )
    trees = tuple(
        TreeCertificate(frozenset(tr), smask) for tr in (raw if raw else warm)
    )
    return value, PackingCertificate(trees, mode, smask)


def lambda_S(
    g: Graph, s, budget: Optional[int] = DEFAULT_BUDGET
) -> tuple[int, PackingCertificate]:
    """Exact maximum number of pairwise edge-disjoint S-Steiner trees."""
    smask = s if isinstance(s, int) else mask_of(s)
    return _exact_packing(g, smask, "edge", budget)


def kappa_S(
    g: Graph, s, budget: Optional[int] = DEFAULT_BUDGET
) -> tuple[int, PackingCertificate]:
    """Exact maximum number of pairwise internally disjoint S-Steiner trees."""
    smask = s if isinstance(s, int) else mask_of(s)
    return _exact_packing(g, smask, "vertex", budget)


def local_packing_interval(
    g: Graph, s, mode: str, budget: Optional[int] = DEFAULT_BUDGET
) -> tuple[int, int]:
    """Certified interval [lo, hi] containing kappa(S)/lambda(S).

    lo comes from explicit packings (warm start plus any search progress),
    hi from the proven upper bounds.  Exhausting the budget never raises
    here; it just leaves lo < hi.  lo == hi means the value is exact.
    """
    smask = s if isinstance(s, int) else mask_of(s)
    k = _check_query(g, smask)
    if mode not in MODES:
        raise GraphInputError(f"mode must be one of {MODES}")
    if k == g.n:
        v = max_spanning_tree_packing(g)[0]
        return v, v
    ub = packing_upper_bound(g, smask)
    lb, _ = _spanning_warm_start(g, smask, mode)
    if lb >= ub:
        return lb, lb
    value, _, status = kernel.steiner_max_packing(
        g.n, g.rows, smask, mode == "vertex", lb, ub, budget or _UNLIMITED
    )
    if status == kernel.STATUS_BUDGET:
        return value, ub
    return value, value


def max_local_interval(
    g: Graph, k: int, mode: str, budget: Optional[int] = DEFAULT_BUDGET
) -> tuple[int, int]:
    """Certified interval for the max of kappa(S)/lambda(S) over k-sets."""
    if not 2 <= k <= g.n:
        raise GraphInputError(f"terminal size {k} outside [2, {g.n}]")
    lo = hi = 0
    for combo in combinations(range(g.n), k):
        a, b = local_packing_interval(g, mask_of(combo), mode, budget)
        lo = max(lo, a)
        hi = max(hi, b)
    return lo, hi


def local_value_exceeds(
    g: Graph, smask: int, l: int, mode: str, budget: Optional[int] = DEFAULT_BUDGET
) -> bool:
    """True iff kappa(S)/lambda(S) is at least l+1 (search capped at l+1)."""
    k = _check_query(g, smask)
    if k == g.n:
        return max_spanning_tree_packing(g)[0] > l
    ub = packing_upper_bound(g, smask)
    if ub <= l:
        return False
    lb, _ = _spanning_warm_start(g, smask, mode)
    if lb > l:
        return True
    value, _, status = kernel.steiner_max_packing(
        g.n, g.rows, smask, mode == "vertex", lb, min(ub, l + 1), budget or _UNLIMITED
    )
    if status == kernel.STATUS_BUDGET:
        raise BudgetExceededError("node budget exhausted")
    return value > l


def profile(
    g: Graph, k: int, mode: str, budget: Optional[int] = DEFAULT_BUDGET
) -> ConnectivityProfile:
    """Min and max of kappa(S) (mode "vertex") or lambda(S) (mode "edge")
    over all k-element terminal sets, with lexicographically smallest
    witness sets on ties."""
    if not 2 <= k <= g.n:
        raise GraphInputError(f"terminal size {k} outside [2, {g.n}]")
    if mode not in MODES:
        raise GraphInputError(f"mode must be one of {MODES}")
    if not g.is_connected():
        raise GraphInputError("graph must be connected")
    best_min = None
    best_max = None
    argmin = argmax = 0
    for combo in combinations(range(g.n), k):
        smask = mask_of(combo)
        value, _ = _exact_packing(g, smask, mode, budget)
        if best_min is None or value < best_min:
            best_min, argmin = value, smask
        if best_max is None or value > best_max:
            best_max, argmax = value, smask
    return ConnectivityProfile(k, mode, best_min, best_max, argmin, argmax)


def lemma4_bound(g: Graph, s) -> int:
    """Edge-counting upper bound on lambda(S).

    Trees inside G[S] use k-1 edges of E(G[S]) u E[S,S~]; all others use
    at least k of them.  Maximises the total tree count y over the split.
    """
    smask = s if isinstance(s, int) else mask_of(s)
    k = smask.bit_count()
    if k < 2:
        raise GraphInputError("terminal set needs at least 2 vertices")
    es = sum((g.rows[v] & smask).bit_count() for v in bits(smask)) // 2
    eb = boundary_edge_count(g, smask) if smask != g.full_mask else 0
    return kernel.max_trees_by_edges(es, eb, k)


def lemma56_upper_bounds(n: int, m_size: int) -> list[ClauseBound]:
    """Strict upper bounds on max lambda over (n-1)-sets of K_n minus M.

    Returns every clause whose arithmetic hypothesis on (n, |M|) holds;
    the lemma6-2 clause additionally requires a second minimal degree
    vertex of degree at most (n-4)/2, recorded in the result for the
    caller to check on the actual graph.  Empty list when nothing applies.
    """
    out = []
    if n >= 5 and n % 2 == 1 and m_size >= 1:
        out.append(ClauseBound("lemma5-1", Fraction(n + 1, 2)))
    if n >= 4 and n % 2 == 0 and m_size >= n // 2:
        out.append(ClauseBound("lemma5-2", Fraction(n, 2)))
    if n >= 10 and n % 2 == 0 and 2 * m_size >= 3 * n - 4:
        out.append(ClauseBound("lemma6-1", Fraction(n - 1, 2)))
    if n >= 10 and n % 2 == 0 and n + 1 <= m_size and 2 * m_size <= 3 * n - 6:
        out.append(
            ClauseBound(
                "lemma6-2",
                Fraction(n - 2, 2),
                requires_second_min_degree_at_most=(n - 4) // 2,
            )
        )
    if n >= 9 and n % 2 == 1 and m_size >= n - 1:
        out.append(ClauseBound("lemma6-3", Fraction(n - 1, 2)))
    return out


def greedy_star_tree(g: Graph, v: int) -> Optional[TreeCertificate]:
    """Star-plus-matching tree for S = V minus {v}.

    Star v to all its neighbours S1, then repeatedly attach the remaining
    vertex of maximum current degree (smallest index on ties) to its
    neighbour in S1 of maximum current degree (smallest index on ties),
    deleting the chosen edge from the working graph.  Returns None when
    some remaining vertex has no neighbour in S1.
    """
    if not 0 <= v < g.n:
        raise GraphInputError(f"vertex {v} out of range")
    if not g.is_connected():
        raise GraphInputError("graph must be connected")
    smask = g.full_mask & ~(1 << v)
    s1 = g.rows[v]
    work = list(g.rows)
    edges = [(min(v, u), max(v, u)) for u in bits(s1)]
    remaining = smask & ~s1
    while remaining:
        pick = -1
        pick_deg = -1
        for u in bits(remaining):
            d = work[u].bit_count()
            if d > pick_deg:
                pick, pick_deg = u, d
        anchors = work[pick] & s1
        if not anchors:
            return None
        anchor = -1
        anchor_deg = -1
        for w in bits(anchors):
            d = work[w].bit_count()
            if d > anchor_deg:
                anchor, anchor_deg = w, d
        edges.append((min(pick, anchor), max(pick, anchor)))
        work[pick] &= ~(1 << anchor)
        work[anchor] &= ~(1 << pick)
        remaining &= ~(1 << pick)
    return TreeCertificate(frozenset(edges), smask)


def peel_lower_bound(g: Graph, v: int) -> tuple[int, PackingCertificate]:
    """Heuristic lower bound for kappa(V minus {v}).

    Builds the greedy star tree, removes its edges, packs spanning trees
    in the residual graph induced on S and returns both together; the
    star tree is skipped (no +1) when the greedy procedure fails.  Never
    exceeds kappa_S.
    """
    if g.n < 3:
        raise GraphInputError("peeling needs at least 3 vertices")
    if not g.is_connected():
        raise GraphInputError("graph must be connected")
    smask = g.full_mask & ~(1 << v)
    star = greedy_star_tree(g, v)
    residual = g.delete_edges(star.edges) if star is not None else g
    sub, omap = residual.induced_subgraph(smask)
    trees: list[TreeCertificate] = [star] if star is not None else []
    if sub.is_connected():
        _, cert = max_spanning_tree_packing(sub)
        for t in cert.trees:
            mapped = frozenset(
                (min(omap[a], omap[b]), max(omap[a], omap[b])) for a, b in t.edges
            )
            trees.append(TreeCertificate(mapped, smask))
    return len(trees), PackingCertificate(tuple(trees), "vertex", smask)
