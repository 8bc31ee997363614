"""Extremal graph families and closed-form edge-count extremal functions.

Families: a clique K_{n-1} plus one vertex of degree l (class Gn), a
clique K_{n-2} plus two nonadjacent vertices of degree l (class Hn), the
general-k construction (clique K_{k-1} plus n-k+1 pairwise nonadjacent
vertices of degree l), and K_n minus an explicit edge set M.  The closed
forms give the maximum edge count of an n-vertex graph whose max local
connectivity over k-sets stays at most l, for k = n, n-1 and (k=3, l=2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from .errors import GraphInputError, RegimeError
from .graphs import (
    Graph,
    bits,
    complete_graph,
    mask_of,
    second_min_degree_value,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class FamilySpec:
    """Serializable description of one family instance."""

    family: str  # "Gn" | "Hn" | "Kn" | "KnMinusM" | "remark"
    n: int
    l: int = 0
    k: int = 0  # remark only
    m: tuple[Edge, ...] = ()  # KnMinusM only
    attach: tuple[int, ...] = ()
    attach2: tuple[int, ...] = ()


@dataclass(frozen=True)
class ClosedFormResult:
    value: int
    regime: str


def _check_attach(attach, size: int, limit: int, what: str) -> int:
    if attach is None:
        return mask_of(range(size))
    m = mask_of(attach)
    if m.bit_count() != size:
        raise GraphInputError(f"{what} must contain exactly {size} vertices")
    if m >> limit:
        raise GraphInputError(f"{what} must lie inside the clique part")
    return m


def construct_Gn(n: int, l: int, attach: Optional[Sequence[int]] = None) -> Graph:
    """K_{n-1} on vertices 0..n-2 plus vertex n-1 joined to l clique vertices."""
    if n < 2:
        raise GraphInputError("Gn needs n >= 2")
    if not 1 <= l <= n - 1:
        raise GraphInputError(f"attachment budget l={l} outside [1, {n-1}]")
    am = _check_attach(attach, l, n - 1, "attach")
    g = complete_graph(n).delete_edges(
        (u, n - 1) for u in range(n - 1) if not am >> u & 1
    )
    return g


def construct_Hn(
    n: int,
    l: int,
    attach1: Optional[Sequence[int]] = None,
    attach2: Optional[Sequence[int]] = None,
) -> Graph:
    """K_{n-2} on 0..n-3 plus two nonadjacent vertices, each of degree l."""
    if n < 4:
        raise GraphInputError("Hn needs n >= 4")
    if not 1 <= l <= n - 2:
        raise GraphInputError(f"attachment budget l={l} outside [1, {n-2}]")
    a1 = _check_attach(attach1, l, n - 2, "attach1")
    a2 = _check_attach(attach2, l, n - 2, "attach2")
    dele = [(u, n - 2) for u in range(n - 2) if not a1 >> u & 1]
    dele += [(u, n - 1) for u in range(n - 2) if not a2 >> u & 1]
    dele.append((n - 2, n - 1))
    return complete_graph(n).delete_edges(dele)


def construct_remark(
    n: int, k: int, l: int, attach: Optional[Sequence[Sequence[int]]] = None
) -> Graph:
    """K_{k-1} on 0..k-2; each of the other n-k+1 vertices joined to l
    clique vertices; the attached vertices are pairwise nonadjacent."""
    if not 3 <= k <= n:
        raise GraphInputError(f"need 3 <= k <= n, got k={k}, n={n}")
    if not 1 <= l <= (k - 1) // 2:
        raise GraphInputError(f"attachment budget l={l} outside [1, {(k-1)//2}]")
    extras = n - k + 1
    if attach is not None and len(attach) != extras:
        raise GraphInputError(f"need {extras} attachment sets")
    dele: list[Edge] = []
    for i in range(extras):
        v = k - 1 + i
        am = _check_attach(attach[i] if attach else None, l, k - 1, f"attach[{i}]")
        dele += [(u, v) for u in range(k - 1) if not am >> u & 1]
        dele += [(v, w) for w in range(v + 1, n)]
    return complete_graph(n).delete_edges(dele)


def construct_Kn_minus(n: int, m: Sequence[Edge]) -> Graph:
    return complete_graph(n).delete_edges(m)


def build_family(spec: FamilySpec) -> Graph:
    if spec.family == "Gn":
        return construct_Gn(spec.n, spec.l, spec.attach or None)
    if spec.family == "Hn":
        return construct_Hn(spec.n, spec.l, spec.attach or None, spec.attach2 or None)
    if spec.family == "Kn":
        return complete_graph(spec.n)
    if spec.family == "KnMinusM":
        return construct_Kn_minus(spec.n, spec.m)
    if spec.family == "remark":
        return construct_remark(spec.n, spec.k, spec.l)
    raise GraphInputError(f"unknown family {spec.family!r}")


# -- closed forms --------------------------------------------------------


def f_closed_form(n: int, k: int, l: int, mode: str = "vertex") -> ClosedFormResult:
    """Exact extremal edge count for max local connectivity at most l.

    Supported regimes: k = n (n >= 6), k = n-1 (n >= 12), both modes and
    identical values; k = 3 with l = 2, vertex mode only.  Anything else
    raises RegimeError rather than extrapolating.  Small k can coincide
    with n or n-1; every matching regime is tried.
    """
    if mode not in ("vertex", "edge"):
        raise GraphInputError(f"unknown mode {mode!r}")
    errors = []
    for kind in ("n", "n-1", "3"):
        if (kind == "n" and k == n) or (kind == "n-1" and k == n - 1) or (
            kind == "3" and k == 3
        ):
            try:
                return _f_closed_form_one(n, kind, l, mode)
            except RegimeError as exc:
                errors.append(str(exc))
    raise RegimeError(
        "; ".join(errors) if errors else f"no closed form for k={k} (supported: n, n-1, 3)"
    )


def _f_closed_form_one(n: int, kind: str, l: int, mode: str) -> ClosedFormResult:
    if kind == "n":
        if n < 6:
            raise RegimeError("k = n formulas require n >= 6")
        if not 1 <= l <= n // 2:
            raise RegimeError(f"l={l} outside [1, floor(n/2)]")
        if l <= (n - 4) // 2:
            return ClosedFormResult(comb(n - 1, 2) + l, "1 <= l <= floor((n-4)/2)")
        if n % 2 == 1 and l == (n - 2) // 2:
            return ClosedFormResult(comb(n - 1, 2) + l, "l = floor((n-2)/2), n odd")
        if n % 2 == 0 and l == (n - 2) // 2:
            return ClosedFormResult(
                comb(n - 1, 2) + 2 * l, "l = floor((n-2)/2), n even"
            )
        return ClosedFormResult(comb(n, 2), "l = floor(n/2)")
    if kind == "n-1":
        if n < 12:
            raise RegimeError("k = n-1 formulas require n >= 12")
        if not 1 <= l <= (n + 1) // 2:
            raise RegimeError(f"l={l} outside [1, floor((n+1)/2)]")
        if l <= (n - 5) // 2:
            return ClosedFormResult(comb(n - 2, 2) + 2 * l, "1 <= l <= floor((n-5)/2)")
        if l == (n - 3) // 2:
            if n % 2 == 0:
                return ClosedFormResult(
                    comb(n - 2, 2) + 2 * l, "l = floor((n-3)/2), n even"
                )
            return ClosedFormResult(
                comb(n - 2, 2) + 2 * l + 1, "l = floor((n-3)/2), n odd"
            )
        if l == (n - 1) // 2:
            if n % 2 == 0:
                return ClosedFormResult(comb(n - 1, 2) + l, "l = floor((n-1)/2), n even")
            return ClosedFormResult(
                comb(n - 1, 2) + 2 * l - 1, "l = floor((n-1)/2), n odd"
            )
        return ClosedFormResult(comb(n, 2), "l = floor((n+1)/2)")
    if mode != "vertex":
        raise RegimeError("k = 3 value known for the vertex mode only")
    if l != 2:
        raise RegimeError("k = 3 exact value known for l = 2 only")
    if n < 3:
        raise RegimeError("k = 3 requires n >= 3")
    if n == 4:
        return ClosedFormResult(2 * n - 2, "k = 3, l = 2, n = 4")
    return ClosedFormResult(2 * n - 3, "k = 3, l = 2, n != 4")


def h_from_f(fval: int) -> int:
    """Edge threshold forcing l+1 disjoint trees on some k-set: f + 1."""
    return fval + 1


def remark_lower_bound(n: int, k: int, l: int) -> int:
    """Edge count of the general-k construction, a sharp lower bound."""
    if not 3 <= k <= n:
        raise RegimeError(f"need 3 <= k <= n, got k={k}, n={n}")
    if not 1 <= l <= (k - 1) // 2:
        raise RegimeError(f"l={l} outside [1, floor((k-1)/2)]")
    return comb(k - 1, 2) + (n - k + 1) * l


def k3_lower_bound(n: int, l: int) -> Fraction:
    """General-l lower bound on the k = 3 extremal function (a bound,
    not the exact value): (l+2)(n-2)/2 + 1/2 for n odd, else + 1."""
    if n < 3 or l < 1:
        raise RegimeError("k = 3 lower bound needs n >= 3 and l >= 1")
    base = Fraction(l + 2, 2) * (n - 2)
    return base + (Fraction(1, 2) if n % 2 == 1 else 1)


# -- characterization predicates -----------------------------------------


def is_in_Gn(g: Graph, l: int) -> bool:
    """Membership in class Gn(l) up to isomorphism: some vertex of degree
    l whose removal leaves a complete graph."""
    n = g.n
    if n < 2 or g.edge_count() != comb(n - 1, 2) + l:
        return False
    for v in range(n):
        if g.degree(v) != l:
            continue
        rest = g.full_mask & ~(1 << v)
        if all(
            (g.rows[u] | 1 << u | 1 << v) & rest == rest for u in bits(rest)
        ):
            return True
    return False


def is_in_Hn(g: Graph, l: int) -> bool:
    """Membership in class Hn(l) up to isomorphism: two nonadjacent
    vertices of degree l whose removal leaves a complete graph."""
    n = g.n
    if n < 4 or g.edge_count() != comb(n - 2, 2) + 2 * l:
        return False
    degl = [v for v in range(n) if g.degree(v) == l]
    for i, u in enumerate(degl):
        for w in degl[i + 1 :]:
            if g.has_edge(u, w):
                continue
            rest = g.full_mask & ~(1 << u) & ~(1 << w)
            if all(
                (g.rows[x] | 1 << x | 1 << u | 1 << w) & rest == rest
                for x in bits(rest)
            ):
                return True
    return False


def _is_Kn_minus(g: Graph, m_sizes) -> bool:
    return comb(g.n, 2) - g.edge_count() in m_sizes


def characterization_predicate(n: int, l: int, k: int, mode: str, g: Graph) -> bool:
    """Does g belong to the characterized class for (n, k, l, mode)?

    For k = n these are the equality families of the edge-extremal bound
    (n >= 6).  For k = n-1 the top two l values use the level-set
    characterizations of max local connectivity (n >= 4 resp. n >= 11,
    including the second-minimal-degree condition), and the remaining l
    use the edge-extremal families (n >= 12).  Vertex and edge modes are
    characterized identically in every supported regime.
    """
    if mode not in ("vertex", "edge"):
        raise GraphInputError(f"unknown mode {mode!r}")
    if g.n != n:
        raise GraphInputError("graph order does not match n")
    if not g.is_connected():
        return False
    if k == n:
        if n < 6:
            raise RegimeError("k = n characterization requires n >= 6")
        if not 1 <= l <= n // 2:
            raise RegimeError(f"l={l} outside [1, floor(n/2)]")
        if l <= (n - 4) // 2:
            return is_in_Gn(g, l)
        if l == (n - 2) // 2:
            if n % 2 == 0:
                return _is_Kn_minus(g, {1})
            return _is_Kn_minus(g, {(n + 1) // 2})
        return _is_Kn_minus(g, {0})
    if k == n - 1:
        if l == (n + 1) // 2:
            # graphs attaining the ceiling of max local connectivity
            if n < 4:
                raise RegimeError("ceiling characterization requires n >= 4")
            if n % 2 == 1:
                return _is_Kn_minus(g, {0})
            return _is_Kn_minus(g, range(0, (n - 2) // 2 + 1))
        if l == (n - 1) // 2:
            if n < 11:
                raise RegimeError("near-ceiling characterization requires n >= 11")
            msize = comb(n, 2) - g.edge_count()
            if n % 2 == 1:
                return 1 <= msize <= n - 2
            if n // 2 <= msize <= n:
                return True
            if n + 1 <= msize <= (3 * n - 6) // 2:
                return second_min_degree_value(g) >= (n - 2) // 2
            return False
        if n < 12:
            raise RegimeError("k = n-1 extremal families require n >= 12")
        if not 1 <= l <= (n + 1) // 2:
            raise RegimeError(f"l={l} outside [1, floor((n+1)/2)]")
        if l <= (n - 5) // 2:
            return is_in_Hn(g, l)
        # remaining case: l = floor((n-3)/2)
        if n % 2 == 0:
            return is_in_Hn(g, l)
        return _is_Kn_minus(g, {n - 1})
    raise RegimeError(f"no characterization for k={k}")
