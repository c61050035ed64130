"""The quantum Bruhat graph on the rank-n Weyl group.

For x in W and a positive root alpha = eps_i - eps_j there is an edge
x -> x*s_alpha when either

  (B) length goes up by exactly 1 (a Bruhat edge), or
  (Q) length goes down by exactly 2<rho, alpha^vee> - 1 (a quantum edge).

The two cases are mutually exclusive since <rho, alpha^vee> >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .weyl import Perm, Root, all_perms, length, rho_pair, right_transposition

BRUHAT = "B"
QUANTUM = "Q"


@dataclass(frozen=True)
class QBGEdge:
    source: Perm
    label: Root
    kind: str
    target: Perm


def positive_roots(n: int) -> tuple[Root, ...]:
    return tuple((i, j) for i in range(1, n + 2) for j in range(i + 1, n + 2))


@lru_cache(maxsize=None)
def edge_table(n: int) -> dict:
    """Map (source, label) -> (kind, target) over all edges of the graph."""
    table = {}
    roots = positive_roots(n)
    for x in all_perms(n):
        lx = length(x)
        for root in roots:
            y = right_transposition(x, root)
            d = length(y) - lx
            if d == 1:
                table[(x, root)] = (BRUHAT, y)
            elif d == 1 - 2 * rho_pair(root):
                table[(x, root)] = (QUANTUM, y)
    return table


def edge_kind(x: Perm, root: Root) -> str | None:
    """'B', 'Q', or None when x -> x*s_root is not an edge."""
    hit = edge_table(len(x) - 1).get((x, root))
    return hit[0] if hit else None


def all_edges(n: int) -> tuple[QBGEdge, ...]:
    return tuple(
        QBGEdge(x, root, kind, y)
        for (x, root), (kind, y) in sorted(edge_table(n).items())
    )


def path_end(w: Perm, labels) -> Perm | None:
    """Endpoint of the path following `labels` from w, or None if it breaks."""
    table = edge_table(len(w) - 1)
    x = w
    for root in labels:
        hit = table.get((x, tuple(root)))
        if hit is None:
            return None
        x = hit[1]
    return x
