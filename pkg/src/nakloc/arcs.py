"""Non-crossing arc diagrams for the uniform line and cycle families.

A deformed minimal trivial set over A_n^h or its cyclic cousin is drawn on n
points: a non-projective M(i, l) becomes an arc from point i + l back to i
(length l = the path distance), a projective P_k a loop at k.  Validity is
exactly the deformed-set property list; its geometric shadow (arcs pairwise
disjoint or strictly nested, all endpoints distinct, loops off endpoints) is
kept as an independent validator and cross-checked in the tests.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import Indec, NakayamaAlgebra, build_cycle, build_line
from .localise import wtilde_property_violation


class NotUniformFamily(ValueError):
    """Arc diagrams are defined for the two uniform families only."""


@dataclass(frozen=True)
class ArcDiagram:
    shape: str  # "line" | "circle"
    points: int
    arcs: tuple[tuple[int, int], ...]  # (source j, target i), length = dist i -> j
    loops: tuple[int, ...]

    def as_json(self) -> dict:
        return {
            "shape": self.shape,
            "n": self.points,
            "arcs": [list(arc) for arc in self.arcs],
            "loops": list(self.loops),
        }

    def as_ascii(self) -> str:
        """Plain-text rendering: one row per nesting level, loops as 'o'."""
        n = self.points
        width = 3
        levels: list[list[tuple[int, int]]] = []
        for arc in sorted(self.arcs, key=lambda a: _span(self, a)):
            for level in levels:
                if all(not _overlaps(self, arc, other) for other in level):
                    level.append(arc)
                    break
            else:
                levels.append([arc])
        rows = []
        for level in reversed(levels):
            row = [" "] * (n * width)
            for (j, i) in level:
                cells = _covered_cells(self, i, j)
                for c in cells:
                    row[c * width + 1] = "-"
                    nxt = (c + 1) % n if self.shape == "circle" else c + 1
                    if nxt < n and nxt in cells:
                        row[c * width + 2] = "-"
                        row[nxt * width] = "-"
                row[(i - 1) * width + 1] = "."
                row[(j - 1) * width + 1] = "."
            rows.append("".join(row).rstrip())
        loop_row = [" "] * (n * width)
        for k in self.loops:
            loop_row[(k - 1) * width + 1] = "o"
        if self.loops:
            rows.append("".join(loop_row).rstrip())
        rows.append("".join(f"{v:^3d}" for v in range(1, n + 1)))
        if self.shape == "circle":
            rows.append(f"(circle: point {n} precedes point 1)")
        return "\n".join(rows)


def _span(diagram: ArcDiagram, arc: tuple[int, int]) -> int:
    j, i = arc
    if diagram.shape == "line":
        return j - i
    return (j - i) % diagram.points


def _covered_cells(diagram: ArcDiagram, i: int, j: int) -> list[int]:
    length = _span(diagram, (j, i))
    if diagram.shape == "line":
        return list(range(i - 1, i - 1 + length + 1))
    return [((i - 1) + k) % diagram.points for k in range(length + 1)]


def _overlaps(diagram: ArcDiagram, a: tuple[int, int], b: tuple[int, int]) -> bool:
    return bool(set(_covered_cells(diagram, a[1], a[0])) & set(_covered_cells(diagram, b[1], b[0])))


def _uniform_family(algebra: NakayamaAlgebra) -> tuple[str, int, int]:
    """(shape, n, h) of a uniform-family algebra, else NotUniformFamily."""
    if len(algebra.components) != 1:
        raise NotUniformFamily("need a connected uniform-family algebra")
    comp = algebra.components[0]
    n = comp.size
    if comp.shape == "cycle":
        if len(set(comp.kupisch)) != 1:
            raise NotUniformFamily(f"cycle series {comp.kupisch} is not constant")
        return "circle", n, comp.kupisch[0]
    if n == 1:
        return "line", 1, 2
    h = comp.kupisch[0]
    if comp.kupisch != tuple(min(h, n - i) for i in range(n)):
        raise NotUniformFamily(f"line series {comp.kupisch} is not min(h, n-i+1)")
    return "line", n, h


def to_arc_diagram(algebra: NakayamaAlgebra, wtilde) -> ArcDiagram:
    shape, n, _ = _uniform_family(algebra)
    arcs = []
    loops = []
    for x in wtilde:
        if algebra.is_projective(x):
            loops.append(x.vertex)
        else:
            src = algebra.shift(x.vertex, x.length)
            assert src is not None
            arcs.append((src, x.vertex))
    return ArcDiagram(shape, n, tuple(sorted(arcs)), tuple(sorted(loops)))


def from_arc_diagram(algebra: NakayamaAlgebra, diagram: ArcDiagram) -> frozenset[Indec]:
    shape, n, _ = _uniform_family(algebra)
    if (shape, n) != (diagram.shape, diagram.points):
        raise NotUniformFamily("diagram does not match the algebra")
    out = {algebra.projective(k) for k in diagram.loops}
    for (j, i) in diagram.arcs:
        out.add(algebra.check_module(Indec(i, _span(diagram, (j, i)))))
    return frozenset(out)


def _family_algebra(shape: str, n: int, h: int) -> NakayamaAlgebra:
    if shape in ("line",):
        return build_line(n, h)
    if shape in ("circle", "cycle"):
        return build_cycle(n, h)
    raise NotUniformFamily(f"unknown shape {shape!r}")


@lru_cache(maxsize=None)
def enumerate_arc_diagrams(shape: str, n: int, h: int) -> tuple[ArcDiagram, ...]:
    """All valid diagrams, by backtracking over candidate arcs and loops;
    validity is deferred to the deformed-set properties."""
    algebra = _family_algebra(shape, n, h)
    bound = min(n - 1, h - 1)
    candidates: list[Indec] = []
    for v in algebra.vertices():
        candidates.append(algebra.projective(v))
        for length in range(1, min(bound, algebra.c(v) - 1) + 1):
            candidates.append(Indec(v, length))
    found: list[frozenset] = []

    def extend(chosen: list[Indec], start: int) -> None:
        found.append(frozenset(chosen))
        for i in range(start, len(candidates)):
            chosen.append(candidates[i])
            if wtilde_property_violation(algebra, chosen) is None:
                extend(chosen, i + 1)
            chosen.pop()

    extend([], 0)
    diagrams = tuple(to_arc_diagram(algebra, wt) for wt in found)
    return tuple(sorted(diagrams, key=lambda d: (d.arcs, d.loops)))


def count_noncrossing(shape: str, n: int, h: int) -> int:
    return len(enumerate_arc_diagrams(shape, n, h))


def geometric_violation(diagram: ArcDiagram) -> str | None:
    """The drawing rules, independent of the property list: length bound,
    pairwise distinct endpoints, loops off endpoints, and every arc pair
    disjoint or strictly nested (covered span inside the other's interior)."""
    n = diagram.points
    endpoints: list[int] = []
    for (j, i) in diagram.arcs:
        length = _span(diagram, (j, i))
        if not 1 <= length <= n - 1:
            return f"arc ({j},{i}) has length {length}"
        endpoints.extend((i, j))
    if len(set(endpoints)) != len(endpoints):
        return "shared arc endpoint"
    if set(diagram.loops) & set(endpoints):
        return "loop on an arc endpoint"
    if len(set(diagram.loops)) != len(diagram.loops):
        return "duplicate loop"
    covered = {arc: set(_covered_points(diagram, arc)) for arc in diagram.arcs}
    for a in diagram.arcs:
        for b in diagram.arcs:
            if a is b or b < a:
                continue
            ca, cb = covered[a], covered[b]
            if not ca & cb:
                continue
            ia = ca - {a[0], a[1]}
            ib = cb - {b[0], b[1]}
            if not (ca <= ib or cb <= ia):
                return f"arcs {a} and {b} cross"
    return None


def _covered_points(diagram: ArcDiagram, arc: tuple[int, int]) -> list[int]:
    j, i = arc
    return [
        ((i - 1) + k) % diagram.points + 1 if diagram.shape == "circle" else i + k
        for k in range(_span(diagram, arc) + 1)
    ]
