"""The gap 1/2 - sigma(S) by three routes, named bounds, and the
construction audit.

For an independent set S with complement Sbar, exact arithmetic gives the
same number three ways:

    direct:    1/2 - sum_{v in S} x_v^2
    rayleigh:  q / (4 lambda - 2 q),  q the Rayleigh quotient on Sbar
    edge sum:  (1/lambda) sum_{uv in E(G[Sbar])} x_u x_v

so their computed spread is a pure rounding/residual diagnostic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from mpmath import mpf, sqrt, workprec

from .errors import (
    EmptySet,
    InvalidParams,
    NotAConstruction,
    NotApplicable,
    NotIndependent,
)
from .families import LabeledGraph
from .graph import Graph, VertexSet, complement_set, distances_from, is_independent, vertex_set
from .precision import check_precision_bits, identity_tolerance
from .spectral import PerronResult, rayleigh_restricted


def perron_mass(pr: PerronResult, s: VertexSet) -> mpf:
    """sum_{v in s} x_v^2, accumulated in sorted vertex order."""
    with workprec(pr.precision_bits):
        acc = mpf(0)
        for v in sorted(s):
            acc += pr.vector[v] * pr.vector[v]
        return acc


@dataclass(frozen=True)
class GapBreakdown:
    """The gap computed three independent ways plus their spread."""

    sigma_s: mpf
    gap_direct: mpf
    q: mpf
    gap_rayleigh: mpf
    edge_sum: mpf
    gap_edge: mpf
    agreement: mpf
    agreement_budget: mpf


def gap_all_ways(g: Graph, pr: PerronResult, s: VertexSet) -> GapBreakdown:
    """Fill every field of :class:`GapBreakdown` for an independent set."""
    ms = vertex_set(g, s)
    if not is_independent(g, ms):
        raise NotIndependent(f"set {ms} spans an edge")
    if g.edge_count == 0:
        raise InvalidParams("gap identities need at least one edge (lambda > 0)")
    sbar = complement_set(g, ms)
    x = pr.vector
    with workprec(pr.precision_bits):
        lam = pr.spectral_radius
        sigma = perron_mass(pr, ms)
        gap_direct = mpf(1) / 2 - sigma
        q = rayleigh_restricted(g, pr, sbar)
        gap_rayleigh = q / (4 * lam - 2 * q)
        inside = set(sbar)
        edge_sum = mpf(0)
        for u in sbar:
            for v in g.adj[u]:
                if v > u and v in inside:
                    edge_sum += x[u] * x[v]
        gap_edge = edge_sum / lam
        gaps = (gap_direct, gap_rayleigh, gap_edge)
        agreement = max(abs(a - b) for a in gaps for b in gaps)
        budget = identity_tolerance(pr.precision_bits, g.n, lam)
    return GapBreakdown(sigma, gap_direct, q, gap_rayleigh, edge_sum, gap_edge,
                        agreement, budget)


# ---------------------------------------------------------------------------
# Closed-form bound evaluators.


def split_graph_gap(n: int, k: int, precision_bits: int = 64) -> mpf:
    """Gap attained by the split graph K_{k-1} joined to n-k+1 isolated
    vertices: (k-2) / (2 sqrt((k-2)^2 + 4(k-1)(n-k+1))).

    This is the conjectured universal lower bound that the odd cycles and
    the path construction refute.
    """
    if k < 3:
        raise InvalidParams(f"split bound needs k >= 3, got {k}")
    if n < k:
        raise InvalidParams(f"split bound needs n >= k, got n={n}, k={k}")
    check_precision_bits(precision_bits)
    with workprec(precision_bits):
        disc = (k - 2) ** 2 + 4 * (k - 1) * (n - k + 1)
        return mpf(k - 2) / (2 * sqrt(mpf(disc)))


def split_graph_independent_mass(n: int, k: int, precision_bits: int = 64) -> mpf:
    """Closed-form independent Perron mass of the split graph: 1/2 minus
    :func:`split_graph_gap`."""
    with workprec(precision_bits):
        return mpf(1) / 2 - split_graph_gap(n, k, precision_bits)


def construction_gap_upper(m: int, ell: int, k: int, epsilon: int = 0,
                           precision_bits: int = 64) -> mpf:
    """Upper bound 30k/(m-1)^(2L+3) for the construction's canonical gap,
    with path length L = 2*ell + epsilon.

    The constant doubles to 60k for the odd-path variant (epsilon = 1);
    that constant is this artifact's choice, not a sharp value.
    """
    if k < 3 or ell < 2 or m < 2 * k:
        raise InvalidParams(
            f"hypotheses k>=3, ell>=2, m>=2k violated: m={m}, ell={ell}, k={k}")
    if epsilon not in (0, 1):
        raise InvalidParams(f"epsilon must be 0 or 1, got {epsilon}")
    check_precision_bits(precision_bits)
    path_len = 2 * ell + epsilon
    constant = 30 * k * (2 if epsilon else 1)
    with workprec(precision_bits):
        return mpf(constant) / mpf((m - 1) ** (2 * path_len + 3))


def construction_weak_upper(m: int, precision_bits: int = 64) -> mpf:
    """The coarse bound 6/m on the construction's canonical gap."""
    if m < 6:
        raise InvalidParams(f"weak bound needs m >= 6, got {m}")
    check_precision_bits(precision_bits)
    with workprec(precision_bits):
        return mpf(6) / m


def nonbipartite_gap_floor(n: int, precision_bits: int = 64) -> mpf:
    """Universal floor 1/(2 n^(2n+2)) for the gap of any independent set in
    a connected non-bipartite graph on n vertices."""
    if n < 3:
        raise InvalidParams(f"floor needs n >= 3, got {n}")
    check_precision_bits(precision_bits)
    with workprec(precision_bits):
        return mpf(1) / (2 * mpf(n) ** (2 * n + 2))


def distance_weighted_lower(g: Graph, pr: PerronResult, s: VertexSet,
                            lam_override: Optional[mpf] = None) -> mpf:
    """(1/n) sum over E(G[Sbar]) of lambda^-(rho(u)+rho(v)+1), with rho the
    hop distance to the vertex of maximum Perron weight (ties broken to the
    lowest index)."""
    ms = vertex_set(g, s)
    if not is_independent(g, ms):
        raise NotIndependent(f"set {ms} spans an edge")
    x = pr.vector
    v_star = 0
    for v in range(1, g.n):
        if x[v] > x[v_star]:
            v_star = v
    rho = distances_from(g, v_star)
    sbar = complement_set(g, ms)
    inside = set(sbar)
    with workprec(pr.precision_bits):
        lam = pr.spectral_radius if lam_override is None else lam_override
        acc = mpf(0)
        for u in sbar:
            for v in g.adj[u]:
                if v > u and v in inside:
                    acc += lam ** (-(rho[u] + rho[v] + 1))
        return acc / g.n


def chromatic_diameter_lower(n: int, k: int, lam: mpf, diam: int,
                             precision_bits: int = 64) -> mpf:
    """Lower bound C(k-1,2) / (n lambda^(2D+1)) for chromatic number k >= 3."""
    if k < 3:
        raise NotApplicable(f"diameter bound needs chromatic number >= 3, got {k}")
    check_precision_bits(precision_bits)
    with workprec(precision_bits):
        binom = (k - 1) * (k - 2) // 2
        return mpf(binom) / (n * mpf(lam) ** (2 * diam + 1))


def chromatic_coarse_lower(n: int, k: int, precision_bits: int = 64) -> mpf:
    """Coarse lower bound (k-2) / n^(2n-2k+5) for chromatic number k >= 3."""
    if k < 3:
        raise NotApplicable(f"coarse bound needs chromatic number >= 3, got {k}")
    if n < k:
        raise InvalidParams(f"coarse bound needs n >= k, got n={n}, k={k}")
    check_precision_bits(precision_bits)
    with workprec(precision_bits):
        return mpf(k - 2) / mpf(n) ** (2 * n - 2 * k + 5)


def conjectured_poly_scale(n: int, k: int, precision_bits: int = 64) -> mpf:
    """The refuted polynomial scale k^5/n^3 (reported for trend tables)."""
    check_precision_bits(precision_bits)
    with workprec(precision_bits):
        return mpf(k) ** 5 / mpf(n) ** 3


# ---------------------------------------------------------------------------
# Construction audit.


@dataclass(frozen=True)
class AuditCheck:
    """One audited inequality or identity with its numeric slack.

    For inequalities the slack is bound minus value (positive = holds
    strictly); for identities it is tolerance minus |lhs - rhs|.
    """

    name: str
    kind: str  # "inequality" or "identity"
    passed: bool
    slack: mpf


@dataclass(frozen=True)
class ConstructionAudit:
    """Coordinate profile of the construction plus all decay checks."""

    m: int
    ell: int
    k: int
    spectral_radius: mpf
    sa_coordinate: mpf
    ya_coordinate: mpf
    ystar_coordinate: mpf
    path_ratios: tuple[mpf, ...]
    clique_entry_ratio: mpf
    clique_sum: mpf
    tail_mass: mpf
    identity_tol: mpf
    checks: tuple[AuditCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> AuditCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _safe_div(a: mpf, b: mpf) -> mpf:
    if b == 0:
        return mpf("+inf") if a >= 0 else mpf("-inf")
    return a / b


def _check_structure(lg: LabeledGraph) -> None:
    g = lg.graph
    p = lg.params
    if g.n != p.order:
        raise NotAConstruction("vertex count does not match the role layout")
    path = lg.path_vertices
    cq = lg.clique_vertices
    if not g.has_edge(lg.y_star, path[0]):
        raise NotAConstruction("missing anchor edge from y* to p_1")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise NotAConstruction("broken path chain")
    if not g.has_edge(path[-1], cq[0]):
        raise NotAConstruction("missing bridge edge from the path to the clique")
    for i, a in enumerate(cq):
        for b in cq[i + 1:]:
            if not g.has_edge(a, b):
                raise NotAConstruction("clique labels do not induce a complete subgraph")
    if g.degree(lg.sa_vertices[0]) != p.m:
        raise NotAConstruction("SA vertex degree does not match the bipartite block")


def construction_decay_audit(lg: LabeledGraph, pr: PerronResult) -> ConstructionAudit:
    """Verify the decay inequalities and local eigenvector identities of the
    even-path construction, recording numeric slack per check."""
    if lg.epsilon != 0:
        raise NotAConstruction("decay audit applies to the even-path variant only")
    _check_structure(lg)
    g = lg.graph
    m, ell, k, n = lg.m, lg.ell, lg.k, lg.graph.n
    x = pr.vector
    if len(x) != n:
        raise NotAConstruction("Perron vector length does not match the graph")
    checks: list[AuditCheck] = []
    with workprec(pr.precision_bits):
        lam = pr.spectral_radius
        tol = identity_tolerance(pr.precision_bits, n, lam)

        sa_vals = [x[v] for v in lg.sa_vertices]
        ya_vals = [x[v] for v in lg.ya_plain_vertices]
        alpha = sa_vals[0]
        beta = ya_vals[0]
        beta_star = x[lg.y_star]
        xp = [beta_star] + [x[v] for v in lg.path_vertices]  # xp[i] = x_{p_i}
        xc = [x[v] for v in lg.clique_vertices]
        last = xp[2 * ell]
        ratios = tuple(_safe_div(xp[i], xp[i - 1]) for i in range(1, 2 * ell + 1))
        clique_sum = mpf(0)
        for c in xc:
            clique_sum += c
        tail = mpf(0)
        for c in xp[1:]:
            tail += c * c
        for c in xc:
            tail += c * c

        def ineq(name: str, slack: mpf) -> None:
            checks.append(AuditCheck(name, "inequality", bool(slack > 0), slack))

        def ident(name: str, err: mpf, tolerance: mpf = tol) -> None:
            checks.append(AuditCheck(name, "identity", bool(err <= tolerance),
                                     tolerance - err))

        # (a) spectral radius strictly between m and m+1
        ineq("spectral_radius_window", min(lam - m, (m + 1) - lam))
        # (b) every path ratio below 1/(lambda - 1)
        cap = _safe_div(mpf(1), lam - 1)
        ineq("path_ratio_bound", min(cap - r for r in ratios))
        # (c) every clique coordinate below x_{p_last}/(lambda - k + 1)
        cbound = _safe_div(last, lam - k + 1)
        ineq("clique_coordinate_bound", min(cbound - c for c in xc))
        # (d) coordinate windows on the bipartite block
        root = _safe_div(mpf(1), sqrt(mpf(m)))
        ineq("sa_coordinate_window", min(alpha - root / 3, root - alpha))
        ineq("ya_coordinate_window", min(beta - root / 4, root - beta))
        ineq("ystar_coordinate_window", min(beta_star - root / 4, 4 * root - beta_star))
        # (e) tail decay
        decay = mpf(m - 1) ** (-2 * ell) / sqrt(mpf(m - 1))
        ineq("path_tail_bound", 4 * decay - last)
        cdecay = 8 * mpf(m - 1) ** (-2 * ell - 1) / sqrt(mpf(m - 1))
        ineq("clique_tail_bound", min(cdecay - c for c in xc))
        # (g) total path+clique mass below 5k/m^2
        ineq("tail_mass_bound", mpf(5 * k) / m ** 2 - tail)

        # (f) local eigenvector identities
        ident("ya_eigen_identity", abs(beta - m * alpha / lam))
        ident("ystar_eigen_identity", abs(beta_star - (beta + xp[1] / lam)))
        ident("path_entry_identity", abs((lam * lam - m * m) * alpha - xp[1]))
        gamma = (lam - k + 2) / ((lam + 1) * (lam - k + 1))
        ident("clique_entry_identity", abs(xc[0] - gamma * last))
        ident("clique_sum_identity", abs(clique_sum - _safe_div(last, lam - k + 1)))
        # ratio recurrence in multiplicative form; the tolerance scales with
        # the coordinate the division hides
        rec_slack = None
        rec_ok = True
        for i in range(1, 2 * ell):
            err = abs(ratios[i - 1] * (lam - ratios[i]) - 1)
            tol_i = _safe_div(tol, xp[i - 1])
            rec_ok = rec_ok and bool(err <= tol_i)
            slack_i = tol_i - err
            if rec_slack is None or slack_i < rec_slack:
                rec_slack = slack_i
        checks.append(AuditCheck("path_ratio_recurrence", "identity", rec_ok, rec_slack))
        # symmetry classes must share one coordinate (the iteration preserves
        # the automorphisms exactly, so any spread signals a corrupted vector)
        ident("sa_class_coherence", max(sa_vals) - min(sa_vals))
        ident("ya_class_coherence", max(ya_vals) - min(ya_vals))
        tail_vals = xc[1:]
        ident("clique_class_coherence", max(tail_vals) - min(tail_vals))

        return ConstructionAudit(
            m, ell, k, lam, alpha, beta, beta_star, ratios,
            _safe_div(xc[0], last), clique_sum, tail, tol, tuple(checks))


@dataclass(frozen=True)
class EdgeSumCheck:
    """Complement edge-sum versus its decay bound for the construction."""

    edge_sum: mpf
    bound: mpf
    constant: int
    artifact_constant: bool  # True when the doubled odd-path constant is used
    complement_edge_count: int
    expected_edge_count: int
    passed: bool

    @property
    def structure_ok(self) -> bool:
        return self.complement_edge_count == self.expected_edge_count


def complement_edge_sum_bound(lg: LabeledGraph, pr: PerronResult) -> EdgeSumCheck:
    """sum over E(G[Sbar]) of x_u x_v against constant*k*(m-1)^-(2L+2) where
    Sbar is the complement of the canonical independent set."""
    _check_structure(lg)
    from .families import canonical_independent_set

    g = lg.graph
    m, k, eps = lg.m, lg.k, lg.epsilon
    path_len = lg.params.path_length
    s = canonical_independent_set(lg)
    sbar = complement_set(g, s)
    inside = set(sbar)
    with workprec(pr.precision_bits):
        x = pr.vector
        acc = mpf(0)
        count = 0
        for u in sbar:
            for v in g.adj[u]:
                if v > u and v in inside:
                    acc += x[u] * x[v]
                    count += 1
        constant = 30 * k * (2 if eps else 1)
        bound = mpf(constant) / mpf((m - 1) ** (2 * path_len + 2))
        expected = k * (k - 1) // 2 + (1 if eps == 0 else 0)
        return EdgeSumCheck(acc, bound, constant, bool(eps), count, expected,
                            bool(acc <= bound))


# ---------------------------------------------------------------------------
# Bound sheet assembly.


@dataclass(frozen=True)
class BoundValue:
    value: Optional[mpf]
    applicable: bool
    note: str = ""


@dataclass(frozen=True)
class BoundSheet:
    """Every named bound evaluated on one instance, with applicability."""

    split_gap: BoundValue
    split_mass: BoundValue
    poly_scale: BoundValue
    construction_upper: BoundValue
    weak_upper: BoundValue
    floor_lower: BoundValue
    distance_lower: BoundValue
    diameter_lower: BoundValue
    coarse_lower: BoundValue

    def as_dict(self) -> dict[str, BoundValue]:
        return {
            "split_gap": self.split_gap,
            "split_mass": self.split_mass,
            "poly_scale": self.poly_scale,
            "construction_upper": self.construction_upper,
            "weak_upper": self.weak_upper,
            "floor_lower": self.floor_lower,
            "distance_lower": self.distance_lower,
            "diameter_lower": self.diameter_lower,
            "coarse_lower": self.coarse_lower,
        }


def bound_sheet(
    g: Graph,
    pr: PerronResult,
    s: VertexSet,
    chi: Optional[int] = None,
    bipartite: Optional[bool] = None,
    construction: Optional[LabeledGraph] = None,
) -> BoundSheet:
    """Evaluate every applicable bound for one (graph, independent set) pair."""
    bits = pr.precision_bits
    n = g.n
    na = BoundValue(None, False, "hypotheses not met")

    if chi is not None and chi >= 3 and n >= chi:
        split = BoundValue(split_graph_gap(n, chi, bits), True)
        mass = BoundValue(split_graph_independent_mass(n, chi, bits), True)
        poly = BoundValue(conjectured_poly_scale(n, chi, bits), True,
                          "refuted conjectured scale, informational")
        coarse = BoundValue(chromatic_coarse_lower(n, chi, bits), True)
    else:
        split = mass = poly = coarse = na

    if bipartite is False and n >= 3:
        floor = BoundValue(nonbipartite_gap_floor(n, bits), True)
    else:
        floor = BoundValue(None, False, "graph is bipartite or too small")

    distance = BoundValue(distance_weighted_lower(g, pr, s), True)

    if chi is not None and chi >= 3:
        from .graph import diameter as graph_diameter

        diam = graph_diameter(g)
        diam_bound = BoundValue(
            chromatic_diameter_lower(n, chi, pr.spectral_radius, diam, bits), True)
    else:
        diam_bound = na

    if construction is not None:
        p = construction.params
        upper = BoundValue(
            construction_gap_upper(p.m, p.ell, p.k, p.epsilon, bits), True)
        weak = BoundValue(construction_weak_upper(p.m, bits), True)
    else:
        upper = BoundValue(None, False, "not a construction instance")
        weak = BoundValue(None, False, "not a construction instance")

    return BoundSheet(split, mass, poly, upper, weak, floor, distance,
                      diam_bound, coarse)
