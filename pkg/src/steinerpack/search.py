"""Isomorph-reduced exhaustive search and brute-force extremal values.

Graphs are generated one representative per isomorphism class by
extending each (n-1)-vertex representative with every possible
neighbourhood and deduplicating on a canonical form (a naive full
enumeration is kept as the test oracle at small orders).  Brute-force
extremal values scan connected graphs in descending edge count and stop
at the first count admitting a feasible graph, which the edge-addition
monotonicity of the connectivity parameters justifies.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import combinations
from math import comb
from multiprocessing import Pool
from typing import Iterator, Optional

from . import kernel
from .errors import BudgetExceededError, GraphInputError, RegimeError
from .families import characterization_predicate, f_closed_form
from .graphs import Graph, mask_of, write_graph6
from .spanning import max_spanning_tree_packing
from .steiner import DEFAULT_BUDGET, local_value_exceeds, profile

ENUMERATION_CAP = 9
NAIVE_CAP = 6
ISO_CAP = 12

# iso-class counts used as generation self-checks (verified against the
# naive oracle in the test suite)
KNOWN_ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
KNOWN_CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def canonical_graph(g: Graph) -> Graph:
    return Graph(g.n, kernel.canonical_rows(g.n, g.rows))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test via canonical forms (orders <= 12)."""
    if g.n > ISO_CAP or h.n > ISO_CAP:
        raise RegimeError(f"isomorphism test capped at n = {ISO_CAP}")
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(r.bit_count() for r in g.rows) != sorted(
        r.bit_count() for r in h.rows
    ):
        return False
    return kernel.canonical_rows(g.n, g.rows) == kernel.canonical_rows(h.n, h.rows)


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[tuple[int, ...], ...]:
    """Canonical rows of every isomorphism class of order n, sorted."""
    if n == 1:
        return ((0,),)
    out = set()
    for rows in _classes(n - 1):
        for nb in range(1 << (n - 1)):
            new = [r | ((nb >> v & 1) << (n - 1)) for v, r in enumerate(rows)]
            new.append(nb)
            out.add(kernel.canonical_rows(n, new))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _classes_naive(n: int) -> tuple[tuple[int, ...], ...]:
    """Oracle enumeration: all 2^C(n,2) graphs deduplicated."""
    pairs = list(combinations(range(n), 2))
    out = set()
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        out.add(kernel.canonical_rows(n, rows))
    return tuple(sorted(out))


def enumerate_graphs(
    n: int,
    which: str = "all",
    min_edges: Optional[int] = None,
    method: str = "augment",
) -> Iterator[Graph]:
    """Stream one canonical representative per isomorphism class.

    which is "all" or "connected"; method "augment" (default) or the
    "naive" oracle (n <= 6).  Graphs come out sorted by (edge count,
    canonical rows).
    """
    if which not in ("all", "connected"):
        raise GraphInputError(f"unknown filter {which!r}")
    if method == "augment":
        if n > ENUMERATION_CAP:
            raise RegimeError(f"enumeration capped at n = {ENUMERATION_CAP}")
        classes = _classes(n)
    elif method == "naive":
        if n > NAIVE_CAP:
            raise RegimeError(f"naive enumeration capped at n = {NAIVE_CAP}")
        classes = _classes_naive(n)
    else:
        raise GraphInputError(f"unknown method {method!r}")
    graphs = [Graph(n, rows) for rows in classes]
    graphs.sort(key=lambda g: (g.edge_count(), g.rows))
    for g in graphs:
        if min_edges is not None and g.edge_count() < min_edges:
            continue
        if which == "connected" and not g.is_connected():
            continue
        yield g


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    k: int
    l: int
    mode: str
    brute_value: Optional[int]
    formula_value: Optional[int]
    witnesses: tuple[str, ...]
    characterization_match: Optional[bool]
    graphs_scanned: int
    elapsed_seconds: float
    status: str  # "complete" or "incomplete"


def _graph_feasible(g: Graph, k: int, l: int, mode: str, budget: Optional[int]) -> bool:
    """True iff every k-set S of g has local connectivity at most l."""
    if k == g.n:
        return max_spanning_tree_packing(g)[0] <= l
    for combo in combinations(range(g.n), k):
        if local_value_exceeds(g, mask_of(combo), l, mode, budget):
            return False
    return True


def _feasible_worker(args) -> bool:
    n, rows, k, l, mode, budget = args
    return _graph_feasible(Graph(n, rows), k, l, mode, budget)


def _scan_level(graphs, k, l, mode, budget, jobs):
    if jobs > 1 and len(graphs) > 1:
        with Pool(jobs) as pool:
            flags = pool.map(
                _feasible_worker,
                [(g.n, g.rows, k, l, mode, budget) for g in graphs],
                chunksize=max(1, len(graphs) // (4 * jobs)),
            )
        return list(flags)
    return [_graph_feasible(g, k, l, mode, budget) for g in graphs]


def brute_force_extremal(
    n: int,
    k: int,
    l: int,
    mode: str,
    budget: Optional[int] = DEFAULT_BUDGET,
    jobs: int = 1,
) -> ExtremalReport:
    """Maximum edge count of a connected n-vertex graph whose max local
    connectivity over k-sets is at most l, with all extremal witnesses.

    Scans isomorphism classes by descending edge count; within a count
    graphs stream in canonical order, so witness lists are reproducible.
    """
    if n > 8:
        raise RegimeError("brute force capped at n = 8")
    if not 2 <= k <= n:
        raise RegimeError(f"terminal size {k} outside [2, {n}]")
    if not 1 <= l <= n - (k + 1) // 2:
        raise RegimeError(f"l={l} outside [1, n - ceil(k/2)]")
    start = time.monotonic()
    try:
        formula_value: Optional[int] = f_closed_form(n, k, l, mode).value
    except RegimeError:
        formula_value = None

    by_edges: dict[int, list[Graph]] = {}
    for g in enumerate_graphs(n, "connected"):
        by_edges.setdefault(g.edge_count(), []).append(g)

    scanned = 0
    status = "complete"
    brute_value: Optional[int] = None
    witnesses: tuple[str, ...] = ()
    try:
        for e in sorted(by_edges, reverse=True):
            level = by_edges[e]
            flags = _scan_level(level, k, l, mode, budget, jobs)
            scanned += len(level)
            if any(flags):
                brute_value = e
                witnesses = tuple(
                    sorted(write_graph6(g) for g, ok in zip(level, flags) if ok)
                )
                break
    except BudgetExceededError:
        status = "incomplete"
        brute_value = None
        witnesses = ()

    report = ExtremalReport(
        n=n,
        k=k,
        l=l,
        mode=mode,
        brute_value=brute_value,
        formula_value=formula_value,
        witnesses=witnesses,
        characterization_match=None,
        graphs_scanned=scanned,
        elapsed_seconds=time.monotonic() - start,
        status=status,
    )
    if status == "complete":
        try:
            match = verify_characterization(report)
        except RegimeError:
            match = None
        report = replace(report, characterization_match=match)
    return report


def verify_characterization(report: ExtremalReport) -> bool:
    """Witness set equals the characterized family, up to isomorphism.

    The predicted set is every connected graph at the extremal edge count
    satisfying the characterization predicate for (n, k, l, mode).
    """
    if report.status != "complete" or report.brute_value is None:
        raise RegimeError("report is incomplete")
    predicted = set()
    for g in enumerate_graphs(report.n, "connected", min_edges=report.brute_value):
        if g.edge_count() != report.brute_value:
            continue
        if characterization_predicate(report.n, report.l, report.k, report.mode, g):
            predicted.add(write_graph6(g))
    return predicted == set(report.witnesses)


# -- observation suite ---------------------------------------------------


def _profile_worker(args):
    n, rows, budget = args
    g = Graph(n, rows)
    out = {}
    for k in range(3, n + 1):
        pe = profile(g, k, "edge", budget)
        pv = profile(g, k, "vertex", budget)
        out[k] = (pv.min_value, pv.max_value, pe.min_value, pe.max_value)
    return out


def verify_observations(
    n: int, budget: Optional[int] = DEFAULT_BUDGET, jobs: int = 1
) -> list[str]:
    """Check the four parameter observations on every connected graph of
    order n; returns human-readable violations (expected: none).

    Per graph and k in [3, n]: kappa_k <= lambda_k, kbar_k <= lbar_k,
    kappa_k <= kbar_k, lambda_k <= lbar_k, and 1 <= kbar_k <= lbar_k <=
    n - ceil(k/2).  Monotonicity under single-edge addition is checked
    for every (graph, graph+e) pair of order n.
    """
    if n > 7:
        raise RegimeError("observation suite capped at n = 7")
    if n < 3:
        return []
    graphs = list(enumerate_graphs(n, "connected"))
    args = [(g.n, g.rows, budget) for g in graphs]
    if jobs > 1:
        with Pool(jobs) as pool:
            results = pool.map(_profile_worker, args, chunksize=4)
    else:
        results = [_profile_worker(a) for a in args]

    table = {g.rows: res for g, res in zip(graphs, results)}
    violations = []
    for g, res in zip(graphs, results):
        g6 = write_graph6(g)
        for k, (kmin, kmax, lmin, lmax) in res.items():
            ceiling = n - (k + 1) // 2
            if kmin > lmin or kmax > lmax:
                violations.append(f"{g6} k={k}: kappa exceeds lambda")
            if kmin > kmax or lmin > lmax:
                violations.append(f"{g6} k={k}: min exceeds max")
            if not (1 <= kmax <= ceiling and 1 <= lmax <= ceiling):
                violations.append(f"{g6} k={k}: bounds 1..{ceiling} violated")
    # single-edge monotonicity
    for g, res in zip(graphs, results):
        g6 = write_graph6(g)
        for u in range(n):
            for v in range(u + 1, n):
                if g.has_edge(u, v):
                    continue
                h = g.add_edges([(u, v)])
                hres = table[kernel.canonical_rows(n, h.rows)]
                for k in res:
                    if any(a > b for a, b in zip(res[k], hres[k])):
                        violations.append(
                            f"{g6} +({u},{v}) k={k}: parameter decreased"
                        )
    return violations
