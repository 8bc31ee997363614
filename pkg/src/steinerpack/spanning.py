"""Edge-disjoint spanning tree packing.

The Nash-Williams/Tutte partition condition acts as the exact checker:
a graph has l edge-disjoint spanning trees iff every vertex partition P
has at least l*(|P|-1) cross edges.  A constructive matroid-partition
packer produces certificates; the partition scan is the independent
oracle used by the tests.  Sufficient-condition hypotheses from the
density lemmas are evaluated by check_sufficiency.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from . import kernel
from .errors import BudgetExceededError, GraphInputError
from .graphs import Graph, TreeCertificate, bits, mask_of, validate_tree_certificate

NW_ENUMERATION_CAP = 13  # Bell(13) partitions is the enumeration budget


@dataclass(frozen=True)
class Partition:
    """Vertex partition; blocks are masks sorted by smallest member."""

    blocks: tuple[int, ...]

    def size(self) -> int:
        return len(self.blocks)


def partition_from_blocks(g: Graph, blocks) -> Partition:
    masks = []
    for b in blocks:
        masks.append(b if isinstance(b, int) else mask_of(b))
    if any(m == 0 for m in masks):
        raise GraphInputError("empty partition block")
    union = 0
    for m in masks:
        if union & m:
            raise GraphInputError("partition blocks overlap")
        union |= m
    if union != g.full_mask:
        raise GraphInputError("partition does not cover the vertex set")
    masks.sort(key=lambda m: m & -m)
    return Partition(tuple(masks))


@dataclass(frozen=True)
class PackingCertificate:
    """A family of disjoint trees witnessing a packing lower bound."""

    trees: tuple[TreeCertificate, ...]
    mode: str  # "edge" (edge-disjoint) or "vertex" (internally disjoint)
    terminals: int


def validate_packing(g: Graph, cert: PackingCertificate) -> tuple[bool, str]:
    """Mechanical soundness check for a packing certificate."""
    if cert.mode not in ("edge", "vertex"):
        return False, "bad-mode"
    seen_edges: set = set()
    for t in cert.trees:
        ok, reason = validate_tree_certificate(g, t)
        if not ok:
            return False, reason
        if t.terminals != cert.terminals:
            return False, "terminal-mismatch"
        if seen_edges & t.edges:
            return False, "shared-edge"
        seen_edges |= t.edges
    if cert.mode == "vertex":
        trees = cert.trees
        for i in range(len(trees)):
            for j in range(i + 1, len(trees)):
                inter = trees[i].vertex_mask() & trees[j].vertex_mask()
                if inter != cert.terminals:
                    return False, "shared-internal-vertex"
    return True, "ok"


def cross_edge_count(g: Graph, p: Partition) -> int:
    """Number of edges of g between distinct blocks of p."""
    partition_from_blocks(g, p.blocks)  # re-validate against this graph
    internal = 0
    for bm in p.blocks:
        internal += sum((g.rows[v] & bm).bit_count() for v in bits(bm)) // 2
    return g.edge_count() - internal


def nash_williams_check(g: Graph, l: int) -> tuple[bool, Optional[Partition]]:
    """Exact Nash-Williams/Tutte test for l edge-disjoint spanning trees.

    Enumerates every partition (restricted-growth strings, lex order) and
    returns (True, None), or (False, witness) for the first partition with
    fewer than l*(|P|-1) cross edges.
    """
    if g.n > NW_ENUMERATION_CAP:
        raise BudgetExceededError(
            f"partition enumeration capped at n = {NW_ENUMERATION_CAP}"
        )
    if l < 0:
        raise GraphInputError("tree count must be nonnegative")
    viol = kernel.nw_first_violation(g.n, g.rows, l)
    if viol is None:
        return True, None
    return False, Partition(tuple(viol))


def max_spanning_tree_packing(g: Graph) -> tuple[int, PackingCertificate]:
    """Maximum number of edge-disjoint spanning trees plus certificates.

    Constructive matroid-partition augmentation; the value always equals
    the partition bound min_P floor(cross(P)/(|P|-1)).
    """
    if not g.is_connected():
        raise GraphInputError("graph is disconnected; no spanning tree exists")
    if g.n == 1:
        raise GraphInputError("spanning packing needs at least 2 vertices")
    value, raw_trees = kernel.spanning_max_packing(g.n, g.rows)
    full = g.full_mask
    trees = tuple(
        TreeCertificate(frozenset(tr), full) for tr in raw_trees
    )
    return value, PackingCertificate(trees, "edge", full)


def check_sufficiency(
    g: Graph, condition: str, l: Optional[int] = None
) -> tuple[bool, Optional[int]]:
    """Evaluate one sufficient-condition hypothesis exactly as stated.

    condition is one of "lemma2" (needs l), "lemma7-1", "lemma7-2",
    "lemma10" (needs l).  For the lemma7/lemma10 conditions the argument
    graph plays the role of the order-(n-1) graph H and n is inferred as
    |V(H)|+1.  Returns (hypothesis_holds, promised_tree_count); the
    promise is only meaningful when the hypothesis holds, and callers
    verify it through max_spanning_tree_packing.
    """
    if not g.is_connected():
        raise GraphInputError("sufficiency hypotheses assume a connected graph")
    e = g.edge_count()
    dmin = g.min_degree()

    def no_adjacent_pair_of_degree(d: int) -> bool:
        verts = [v for v in range(g.n) if g.degree(v) == d]
        return not any(
            g.has_edge(u, v) for i, u in enumerate(verts) for v in verts[i + 1 :]
        )

    if condition == "lemma2":
        if l is None:
            raise GraphInputError("lemma2 needs the tree budget l")
        n = g.n
        holds = (
            n >= 5
            and 1 <= l <= (n - 4) // 2
            and e >= comb(n - 1, 2) + l
            and dmin >= l + 1
        )
        return holds, l + 1 if holds else None

    if condition == "lemma7-1":
        n = g.n + 1
        holds = (
            n >= 5
            and n % 2 == 1
            and e >= comb(n - 2, 2)
            and dmin >= (n - 3) // 2
            and no_adjacent_pair_of_degree((n - 3) // 2)
        )
        return holds, (n - 3) // 2 if holds else None

    if condition == "lemma7-2":
        n = g.n + 1
        holds = (
            n >= 8
            and n % 2 == 0
            and e >= comb(n - 2, 2) - (n - 2) // 2
            and dmin >= (n - 4) // 2
            and no_adjacent_pair_of_degree((n - 4) // 2)
        )
        return holds, (n - 4) // 2 if holds else None

    if condition == "lemma10":
        if l is None:
            raise GraphInputError("lemma10 needs the tree budget l")
        n = g.n + 1
        holds = (
            n >= 12
            and 1 <= l <= (n - 5) // 2
            and e == comb(n - 2, 2) + 2 * l - (n - 1)
            and dmin >= l
            and no_adjacent_pair_of_degree(l)
        )
        return holds, l if holds else None

    raise GraphInputError(f"unknown sufficiency condition {condition!r}")
