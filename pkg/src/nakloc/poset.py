"""Finite poset covers and DOT emission for the Hasse quivers."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class HasseQuiver:
    """Arrows run from larger to smaller element (cover relations)."""

    labels: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]

    def as_dot(self, name: str = "hasse") -> str:
        lines = [f"digraph {name} {{"]
        for label in self.labels:
            lines.append(f'  "{label}";')
        for i, j in self.edges:
            lines.append(f'  "{self.labels[i]}" -> "{self.labels[j]}";')
        lines.append("}")
        return "\n".join(lines)

    def as_json(self) -> dict:
        return {"nodes": list(self.labels), "edges": [list(e) for e in self.edges]}


def cover_edges(keys: list[frozenset]) -> tuple[tuple[int, int], ...]:
    """Cover pairs (i, j) with keys[i] > keys[j] under strict inclusion."""
    edges = []
    for i, big in enumerate(keys):
        for j, small in enumerate(keys):
            if small < big and not any(
                small < mid < big for mid in keys if mid is not big and mid is not small
            ):
                edges.append((i, j))
    return tuple(sorted(edges))


def hasse_quiver(keys: list[frozenset], labels: list[str]) -> HasseQuiver:
    return HasseQuiver(tuple(labels), cover_edges(keys))
