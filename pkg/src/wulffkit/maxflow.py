"""Dinic max-flow on integer capacities.

Small, dependency-free solver used as the reference engine for the
finite-window interface problem.  Large windows are normally routed to
scipy's sparse max-flow (same algorithm, compiled); the two engines are
cross-checked in the test suite.
"""

from __future__ import annotations

from collections import deque

__all__ = ["Dinic"]


class Dinic:
    """Max-flow / min-cut with adjacency lists and integer capacities."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int, rcap: int = 0) -> None:
        """Arc u->v with capacity cap and reverse capacity rcap."""
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(rcap)

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for e in self.head[u]:
                v = self.to[e]
                if self.cap[e] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    q.append(v)
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return flow
            it = [0] * self.n
            # iterative blocking-flow DFS
            while True:
                path = [s]
                edges: list[int] = []
                found = False
                while path:
                    u = path[-1]
                    if u == t:
                        found = True
                        break
                    advanced = False
                    while it[u] < len(self.head[u]):
                        e = self.head[u][it[u]]
                        v = self.to[e]
                        if self.cap[e] > 0 and level[v] == level[u] + 1:
                            path.append(v)
                            edges.append(e)
                            advanced = True
                            break
                        it[u] += 1
                    if not advanced and not found:
                        path.pop()
                        if edges:
                            edges.pop()
                        if path:
                            it[path[-1]] += 1
                if not found:
                    break
                push = min(self.cap[e] for e in edges)
                for e in edges:
                    self.cap[e] -= push
                    self.cap[e ^ 1] += push
                flow += push

    def source_side(self, s: int) -> list[bool]:
        """Residual-reachable nodes after max_flow: the min-cut source side."""
        seen = [False] * self.n
        seen[s] = True
        q = deque([s])
        while q:
            u = q.popleft()
            for e in self.head[u]:
                v = self.to[e]
                if self.cap[e] > 0 and not seen[v]:
                    seen[v] = True
                    q.append(v)
        return seen
