"""Dense min-plus sweep solvers for the single-target shortest-route problem.

Both solvers repeat full passes of

    v[i] <- min over j of (a[i][j] + v[j])

on the dense cost matrix, starting from the vector that is 0 at the
target (node n) and INF everywhere else, and stop as soon as a pass
leaves the vector unchanged. They differ only in how a pass reads v:

* ``bk_classic`` recomputes every row from the previous pass's vector
  (simultaneous, Jacobi-style order);
* ``bk_accelerated`` walks rows n-1 down to 1 updating in place, so each
  row already sees the values refreshed earlier in the same pass
  (Gauss-Seidel-style order), which can only shorten the descent.

Counting convention used by every counter downstream: ``sweeps`` is the
number of executed passes, including the final confirming pass (the one
that detects no change); ``relaxations`` is sweeps * (n-1) * n, since a
pass evaluates all n candidate terms for each of the n-1 non-target
rows. The diagonal zero makes row i's own value one of its candidates,
so entries never increase, and with non-negative weights at most n
passes are ever needed (n-1 productive plus one confirming).
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import add
from typing import Sequence

from .graph import INF, CostMatrix, Weight


class ConvergenceError(RuntimeError):
    """No fixed point within n sweeps; impossible for valid non-negative input."""


class NoRouteError(ValueError):
    """Route extraction was asked for a node that cannot reach the target."""


@dataclass(frozen=True)
class SolveResult:
    """Final distance vector plus the work counters behind it.

    distances[k] is the cost from node k+1 to node n, so the vector reads
    in node order, distances[-1] is always 0, and INF marks "no route".
    """

    distances: tuple[Weight, ...]
    sweeps: int
    relaxations: int
    converged: bool
    method: str


@dataclass(frozen=True)
class Route:
    """A concrete path to node n: 1-based node sequence plus its total cost."""

    nodes: tuple[int, ...]
    cost: int


def bk_classic(
    a: CostMatrix,
    *,
    checked: bool = False,
    trace: list[tuple[Weight, ...]] | None = None,
) -> SolveResult:
    """Solve by simultaneous (Jacobi-order) sweeps.

    ``checked`` enables per-sweep monotonicity assertions; ``trace``, when
    given a list, receives the vector snapshot after every executed sweep.
    """
    n = a.n
    body = a.rows[:-1]
    v: list[Weight] = [INF] * n
    v[n - 1] = 0
    for sweep in range(1, n + 1):
        new: list[Weight] = [min(map(add, row, v)) for row in body]
        new.append(0)
        if checked:
            assert all(x <= y for x, y in zip(new, v)), "entry increased during sweep"
        if trace is not None:
            trace.append(tuple(new))
        if new == v:
            return SolveResult(tuple(v), sweep, sweep * (n - 1) * n, True, "classic")
        v = new
    raise ConvergenceError(
        f"no fixed point within {n} sweeps; the matrix violates its invariants"
    )


def bk_accelerated(
    a: CostMatrix,
    *,
    checked: bool = False,
    trace: list[tuple[Weight, ...]] | None = None,
) -> SolveResult:
    """Solve by bottom-up in-place (Gauss-Seidel-order) sweeps.

    Returns the same distances as bk_classic, in at most as many sweeps.
    """
    n = a.n
    rows = a.rows
    v: list[Weight] = [INF] * n
    v[n - 1] = 0
    for sweep in range(1, n + 1):
        changed = False
        for i in range(n - 2, -1, -1):
            b = min(map(add, rows[i], v))
            if checked:
                assert b <= v[i], "entry increased during sweep"
            if b != v[i]:
                v[i] = b
                changed = True
        if trace is not None:
            trace.append(tuple(v))
        if not changed:
            return SolveResult(
                tuple(v), sweep, sweep * (n - 1) * n, True, "accelerated"
            )
    raise ConvergenceError(
        f"no fixed point within {n} sweeps; the matrix violates its invariants"
    )


def extract_route(a: CostMatrix, distances: Sequence[Weight]) -> Route:
    """Read one optimal route from node 1 off a solved distance vector.

    From each node i the successor is the smallest j not already on the
    route whose arc satisfies distances[i] == a[i][j] + distances[j], so
    ties resolve deterministically. Because every hop satisfies that
    relation, the summed cost telescopes to distances[0] exactly.
    """
    n = a.n
    if distances[0] == INF:
        raise NoRouteError("node 1 cannot reach the target")
    rows = a.rows
    nodes = [1]
    visited = {1}
    cost = 0
    i = 1
    while i != n:
        di = distances[i - 1]
        row = rows[i - 1]
        nxt = 0
        for j in range(1, n + 1):
            if j in visited:
                continue
            w = row[j - 1]
            if w != INF and w + distances[j - 1] == di:
                nxt = j
                break
        if nxt == 0:
            raise ValueError(
                f"no consistent successor from node {i}; vector is not a fixed point"
            )
        cost += row[nxt - 1]
        nodes.append(nxt)
        visited.add(nxt)
        i = nxt
    return Route(tuple(nodes), cost)
