"""Certified Perron pairs via arbitrary-precision shifted power iteration.

Convergence is always declared on the a-posteriori residual
``max_v |(Ax)_v - lambda x_v|``, never on iterate movement.  The iteration
runs on ``A + (Delta(G)+1) I``: near-bipartite graphs have an eigenvalue
near ``-lambda`` that defeats unshifted iteration, while the shifted
operator is positive definite with the Perron eigenvalue strictly
dominant.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mpf, sqrt, workprec

from .errors import EmptySet, InvalidParams, NoConvergence, NotConnected
from .graph import (
    Graph,
    VertexSet,
    degree_extrema,
    induced_subgraph,
    is_connected,
    vertex_set,
)
from .precision import check_precision_bits, default_tolerance

DEFAULT_MAX_ITERS = 10 ** 6


@dataclass(frozen=True)
class PerronResult:
    """A residual-certified approximate Perron pair.

    ``residual`` is the max norm of ``A x - lambda x``; for the symmetric
    adjacency matrix this places some eigenvalue within
    ``sqrt(n) * residual`` of ``spectral_radius``.
    """

    spectral_radius: mpf
    vector: tuple[mpf, ...]
    residual: mpf
    iterations: int
    precision_bits: int

    @property
    def n(self) -> int:
        return len(self.vector)

    def lambda_error_bound(self) -> mpf:
        with workprec(self.precision_bits):
            return sqrt(mpf(self.n)) * self.residual


def _adjacency_apply(g: Graph, x: list) -> list:
    # Neighbor lists are sorted, so each coordinate accumulates in a fixed order.
    zero = mpf(0)
    out = []
    for row in g.adj:
        acc = zero
        for u in row:
            acc = acc + x[u]
        out.append(acc)
    return out


def residual(g: Graph, lam: mpf, x: list | tuple, precision_bits: int = 256) -> mpf:
    """max_v |(Ax)_v - lam * x_v| evaluated at the given precision."""
    if len(x) != g.n:
        raise InvalidParams(f"vector has {len(x)} entries for n={g.n}")
    check_precision_bits(precision_bits)
    with workprec(precision_bits):
        ax = _adjacency_apply(g, list(x))
        worst = mpf(0)
        for v in range(g.n):
            err = abs(ax[v] - lam * x[v])
            if err > worst:
                worst = err
        return worst


def _coerce_tolerance(tolerance, precision_bits: int) -> mpf:
    if tolerance is None:
        return default_tolerance(precision_bits)
    tol = mpf(tolerance)
    if not tol > 0:
        raise InvalidParams(f"tolerance must be positive, got {tolerance}")
    return tol


def _power_iterate(g: Graph, start: list, shift: mpf, tol: mpf, max_iters: int):
    """Iterate x <- normalize((A + shift I) x) until the residual of the
    A-eigenpair (Rayleigh quotient) meets ``tol``.

    Returns (rayleigh_quotient, unit_vector, residual, iterations).
    """
    norm = sqrt(sum(c * c for c in start))
    x = [c / norm for c in start]
    for it in range(max_iters + 1):
        ax = _adjacency_apply(g, x)
        num = mpf(0)
        den = mpf(0)
        for v in range(g.n):
            num += x[v] * ax[v]
            den += x[v] * x[v]
        lam = num / den
        worst = mpf(0)
        for v in range(g.n):
            err = abs(ax[v] - lam * x[v])
            if err > worst:
                worst = err
        if worst <= tol:
            return lam, tuple(x), worst, it
        y = [ax[v] + shift * x[v] for v in range(g.n)]
        norm = sqrt(sum(c * c for c in y))
        x = [c / norm for c in y]
    raise NoConvergence(
        f"residual {worst} above tolerance {tol} after {max_iters} iterations"
    )


def perron(
    g: Graph,
    precision_bits: int = 256,
    tolerance=None,
    max_iters: int = DEFAULT_MAX_ITERS,
) -> PerronResult:
    """Residual-certified Perron pair of a connected graph.

    Power iteration on ``A + (Delta(G)+1) I`` from the all-ones vector
    (strictly positive, hence never orthogonal to the Perron direction),
    renormalizing every step; the eigenvalue estimate is the Rayleigh
    quotient of the adjacency matrix itself.
    """
    if g.n < 1:
        raise InvalidParams("perron requires n >= 1")
    if not is_connected(g):
        raise NotConnected("perron requires a connected graph")
    check_precision_bits(precision_bits)
    with workprec(precision_bits):
        tol = _coerce_tolerance(tolerance, precision_bits)
        shift = mpf(degree_extrema(g)[1] + 1)
        ones = [mpf(1)] * g.n
        lam, x, res, iters = _power_iterate(g, ones, shift, tol, max_iters)
    return PerronResult(lam, x, res, iters, precision_bits)


def rayleigh_restricted(g: Graph, pr: PerronResult, sbar: VertexSet) -> mpf:
    """Rayleigh quotient of the Perron vector restricted to ``sbar``:
    (2 sum_{uv in E(G[sbar])} x_u x_v) / sum_{v in sbar} x_v^2.
    """
    ms = vertex_set(g, sbar)
    if not ms:
        raise EmptySet("rayleigh_restricted requires a nonempty set")
    inside = set(ms)
    x = pr.vector
    with workprec(pr.precision_bits):
        num = mpf(0)
        for u in ms:
            for v in g.adj[u]:
                if v > u and v in inside:
                    num += x[u] * x[v]
        den = mpf(0)
        for v in ms:
            den += x[v] * x[v]
        return (2 * num) / den


def _components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def _parity_signs(g: Graph, comp: list[int]) -> dict[int, int]:
    # BFS-level parity from the lowest-index vertex of the component.  On a
    # bipartite component the sign-flipped Perron vector is exactly the
    # minimum eigenvector, so this start provably overlaps it.
    from collections import deque

    level = {comp[0]: 0}
    queue = deque([comp[0]])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if v not in level:
                level[v] = level[u] + 1
                queue.append(v)
    return {v: (1 if level[v] % 2 == 0 else -1) for v in comp}


def min_eigenvalue_induced(
    g: Graph,
    sbar: VertexSet,
    precision_bits: int = 256,
    tolerance=None,
    max_iters: int = DEFAULT_MAX_ITERS,
) -> mpf:
    """Smallest adjacency eigenvalue of the induced subgraph ``G[sbar]``.

    Computed per connected component as ``c - max_eig(c I - A)`` with
    ``c = Delta + 1``; the shifted operator is positive definite.  Two
    deterministic start vectors are iterated (BFS-parity signs, and a
    tilted copy that breaks accidental orthogonality) and the larger
    certified eigenvalue wins.
    """
    ms = vertex_set(g, sbar)
    if not ms:
        raise EmptySet("min_eigenvalue_induced requires a nonempty set")
    check_precision_bits(precision_bits)
    sub, _ = induced_subgraph(g, ms)
    with workprec(precision_bits):
        tol = _coerce_tolerance(tolerance, precision_bits)
        best = None
        for comp in _components(sub):
            if all(len(sub.adj[v]) == 0 for v in comp):
                mu = mpf(0)
            else:
                comp_graph, _ = induced_subgraph(sub, comp)
                c = mpf(degree_extrema(comp_graph)[1] + 1)
                signs = _parity_signs(comp_graph, list(range(comp_graph.n)))
                size = comp_graph.n
                starts = [
                    [mpf(signs[v]) for v in range(size)],
                    [mpf(signs[v]) * (1 + mpf(v + 1) / (2 * size)) for v in range(size)],
                ]
                theta = None
                for start in starts:
                    t, _, _, _ = _negated_power(comp_graph, start, c, tol, max_iters)
                    if theta is None or t > theta:
                        theta = t
                mu = c - theta
            if best is None or mu < best:
                best = mu
        return best


def _negated_power(g: Graph, start: list, c: mpf, tol: mpf, max_iters: int):
    """Power iteration for the largest eigenvalue of c*I - A(g)."""
    norm = sqrt(sum(v * v for v in start))
    x = [v / norm for v in start]
    for it in range(max_iters + 1):
        ax = _adjacency_apply(g, x)
        mx = [c * x[v] - ax[v] for v in range(g.n)]
        num = mpf(0)
        den = mpf(0)
        for v in range(g.n):
            num += x[v] * mx[v]
            den += x[v] * x[v]
        theta = num / den
        worst = mpf(0)
        for v in range(g.n):
            err = abs(mx[v] - theta * x[v])
            if err > worst:
                worst = err
        if worst <= tol:
            return theta, tuple(x), worst, it
        norm = sqrt(sum(v * v for v in mx))
        x = [v / norm for v in mx]
    raise NoConvergence(
        f"residual {worst} above tolerance {tol} after {max_iters} iterations"
    )
