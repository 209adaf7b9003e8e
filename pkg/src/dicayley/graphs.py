"""Cayley graphs over Dic(A, y), distance matrices and distance powers."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .dicyclic import ConnectionSet, DicElement, DicyclicGroup


@dataclass(frozen=True, eq=False)
class Graph:
    vertices: tuple[DicElement, ...]
    adjacency: np.ndarray  # int64 0/1, symmetric, zero diagonal

    def __post_init__(self) -> None:
        adj = self.adjacency
        if adj.shape != (len(self.vertices),) * 2:
            raise ValueError("adjacency shape does not match vertex count")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency matrix must be symmetric")
        if np.any(np.diag(adj)):
            raise ValueError("graph has self-loops")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def edges(self) -> list[tuple[int, int]]:
        rows, cols = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(rows.tolist(), cols.tolist()))


def cayley_graph(G: DicyclicGroup, S: ConnectionSet) -> Graph:
    """g ~ h iff g^-1 h in S; vertices are all (0, a) then all (1, a), lex order."""
    S.require()
    n = G.order
    table = G.mul_table
    inv = G.inv_table
    in_s = np.zeros(n, dtype=bool)
    for g in S.elements:
        in_s[G.index[g]] = True
    adj = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        row = table[inv[i]]
        adj[i] = in_s[list(row)]
    return Graph(G.elements, adj)


def bfs_distances(adjacency: np.ndarray) -> np.ndarray:
    """All-pairs BFS by simultaneous frontier expansion; -1 marks unreachable pairs."""
    n = adjacency.shape[0]
    adj = adjacency.astype(bool)
    dist = np.full((n, n), -1, dtype=np.int64)
    reached = np.eye(n, dtype=bool)
    frontier = reached.copy()
    np.fill_diagonal(dist, 0)
    depth = 0
    while frontier.any():
        depth += 1
        nxt = (frontier.astype(np.int64) @ adj.astype(np.int64)) > 0
        nxt &= ~reached
        dist[nxt] = depth
        reached |= nxt
        frontier = nxt
    return dist


def is_connected(graph: Graph) -> bool:
    return bool((bfs_distances(graph.adjacency) >= 0).all())


def distance_matrix(graph: Graph) -> np.ndarray:
    dist = bfs_distances(graph.adjacency)
    if (dist < 0).any():
        raise ValueError("graph is disconnected; distance matrix undefined")
    return dist


def diameter(graph: Graph) -> int:
    return int(distance_matrix(graph).max())


def distance_power(graph: Graph, D: Iterable[int]) -> Graph:
    D = sorted(set(D))
    if not D:
        raise ValueError("distance set D must be non-empty")
    if any(d < 1 for d in D):
        raise ValueError("distance set D must contain positive integers")
    dist = distance_matrix(graph)
    adj = np.isin(dist, D).astype(np.int64)
    return Graph(graph.vertices, adj)


def write_matrix_csv(matrix: np.ndarray, path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        for row in np.asarray(matrix).tolist():
            writer.writerow(row)


def edge_list_text(graph: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in graph.edges())


def write_edge_list(graph: Graph, path: str | Path) -> None:
    Path(path).write_text(edge_list_text(graph))


def complete_graph(vertices: Sequence[DicElement] | int) -> np.ndarray:
    n = vertices if isinstance(vertices, int) else len(vertices)
    return np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64)
