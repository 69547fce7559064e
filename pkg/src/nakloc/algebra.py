"""Nakayama algebras presented by Kupisch series.

An algebra is an ordered list of connected components, each a bound path
algebra of a linear quiver ``1 -> 2 -> ... -> m`` or a cyclic quiver of the
same shape with an extra arrow ``m -> 1``.  The component datum is the
Kupisch series ``c[i]``, the Loewy length of the indecomposable projective
at vertex ``i``.  Vertices are numbered globally ``1..n`` across components,
following the arrow direction inside each component.

Every indecomposable module is uniserial and written ``M(a, t)`` for the
quotient of the projective at vertex ``a`` by the ``t``-th radical power,
``1 <= t <= c[a]``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property


class InvalidKupisch(ValueError):
    """Kupisch datum violating a Nakayama admissibility constraint."""


@dataclass(frozen=True, order=True)
class Indec:
    """Indecomposable module M(vertex, length) = P_vertex / rad^length."""

    vertex: int
    length: int

    def __repr__(self) -> str:
        return f"M({self.vertex},{self.length})"


@dataclass(frozen=True)
class Component:
    shape: str  # "line" | "cycle"
    kupisch: tuple[int, ...]

    def __post_init__(self) -> None:
        m = len(self.kupisch)
        if self.shape not in ("line", "cycle"):
            raise InvalidKupisch(f"unknown shape {self.shape!r}")
        if m == 0:
            raise InvalidKupisch("empty component")
        c = self.kupisch
        if any(ci < 1 for ci in c):
            raise InvalidKupisch(f"{self.shape} {c}: Loewy lengths must be >= 1")
        if self.shape == "line":
            if c[m - 1] != 1:
                raise InvalidKupisch(f"line {c}: last projective must be simple (c[m]=1)")
            for i in range(m - 1):
                if c[i] < 2:
                    raise InvalidKupisch(f"line {c}: c[{i + 1}]={c[i]} < 2 puts an arrow in the ideal")
                if c[i] > m - i:
                    raise InvalidKupisch(f"line {c}: c[{i + 1}]={c[i]} exceeds longest path {m - i}")
                if c[i] > c[i + 1] + 1:
                    raise InvalidKupisch(f"line {c}: c[{i + 1}]={c[i]} > c[{i + 2}]+1={c[i + 1] + 1}")
        else:
            for i in range(m):
                if c[i] < 2:
                    raise InvalidKupisch(f"cycle {c}: c[{i + 1}]={c[i]} < 2 is not admissible")
                if c[i] > c[(i + 1) % m] + 1:
                    raise InvalidKupisch(
                        f"cycle {c}: c[{i + 1}]={c[i]} > c[{(i + 1) % m + 1}]+1={c[(i + 1) % m] + 1}"
                    )

    @property
    def size(self) -> int:
        return len(self.kupisch)


@dataclass(frozen=True)
class NakayamaAlgebra:
    """A (possibly disconnected) Nakayama algebra; the zero algebra is ()."""

    components: tuple[Component, ...]

    @cached_property
    def n(self) -> int:
        return sum(comp.size for comp in self.components)

    @cached_property
    def _starts(self) -> tuple[int, ...]:
        starts, v = [], 1
        for comp in self.components:
            starts.append(v)
            v += comp.size
        return tuple(starts)

    @cached_property
    def _comp_of(self) -> tuple[int, ...]:
        out: list[int] = []
        for k, comp in enumerate(self.components):
            out.extend([k] * comp.size)
        return tuple(out)

    @cached_property
    def kupisch(self) -> tuple[int, ...]:
        """Global Kupisch series indexed by vertex-1."""
        out: list[int] = []
        for comp in self.components:
            out.extend(comp.kupisch)
        return tuple(out)

    def c(self, v: int) -> int:
        return self.kupisch[v - 1]

    def component_index(self, v: int) -> int:
        return self._comp_of[v - 1]

    def component_of(self, v: int) -> Component:
        return self.components[self.component_index(v)]

    def shift(self, v: int, k: int) -> int | None:
        """Vertex k arrow-steps after v, or None when walking off a line."""
        ci = self.component_index(v)
        comp, start = self.components[ci], self._starts[ci]
        local = v - start
        if comp.shape == "cycle":
            return start + (local + k) % comp.size
        if 0 <= local + k < comp.size:
            return start + local + k
        return None

    def vertices(self) -> range:
        return range(1, self.n + 1)

    # -- modules ---------------------------------------------------------

    def is_valid_module(self, x: Indec) -> bool:
        return 1 <= x.vertex <= self.n and 1 <= x.length <= self.c(x.vertex)

    def check_module(self, x: Indec) -> Indec:
        if not self.is_valid_module(x):
            raise ValueError(f"{x} is not a module over this algebra (kupisch {self.kupisch})")
        return x

    def projective(self, v: int) -> Indec:
        return Indec(v, self.c(v))

    def simple(self, v: int) -> Indec:
        return Indec(v, 1)

    def is_projective(self, x: Indec) -> bool:
        return x.length == self.c(x.vertex)

    def is_injective(self, x: Indec) -> bool:
        """No longer uniserial shares the socle: nothing extends x on top."""
        prev = self.shift(x.vertex, -1)
        return prev is None or x.length + 1 > self.c(prev)

    def factor(self, x: Indec, k: int) -> int:
        """Vertex of the k-th composition factor of x, top to socle."""
        v = self.shift(x.vertex, k)
        assert v is not None
        return v

    def factors(self, x: Indec) -> tuple[int, ...]:
        return tuple(self.factor(x, k) for k in range(x.length))

    def projectives(self) -> tuple[Indec, ...]:
        return tuple(self.projective(v) for v in self.vertices())

    def simples(self) -> tuple[Indec, ...]:
        return tuple(self.simple(v) for v in self.vertices())

    def as_json(self) -> dict:
        return {
            "components": [
                {"shape": comp.shape, "kupisch": list(comp.kupisch)} for comp in self.components
            ]
        }

    def as_text(self) -> str:
        parts = [f"{comp.shape}={','.join(map(str, comp.kupisch))}" for comp in self.components]
        return "kupisch:" + ";".join(parts)

    def __repr__(self) -> str:
        return f"NakayamaAlgebra({self.as_text()!r})"


def from_kupisch(spec: list[tuple[str, list[int] | tuple[int, ...]]]) -> NakayamaAlgebra:
    """Build and validate an algebra from (shape, kupisch) pairs."""
    return NakayamaAlgebra(tuple(Component(shape, tuple(kup)) for shape, kup in spec))


def build_line(n: int, h: int) -> NakayamaAlgebra:
    """The quotient of the linear A_n path algebra by the h-th arrow power.

    c[i] = min(h, n - i + 1); h >= n gives the hereditary path algebra.
    """
    if n < 1:
        raise InvalidKupisch("need n >= 1")
    if h < 2 and n > 1:
        raise InvalidKupisch("need h >= 2 (arrow ideal power must be admissible)")
    return from_kupisch([("line", [min(h, n - i) for i in range(n)])])


def build_cycle(n: int, h: int) -> NakayamaAlgebra:
    """The self-injective cyclic Nakayama algebra with constant series h."""
    if n < 1:
        raise InvalidKupisch("need n >= 1")
    if h < 2:
        raise InvalidKupisch("need h >= 2")
    return from_kupisch([("cycle", [h] * n)])


@dataclass(frozen=True)
class VertexEmbedding:
    """Fully faithful embedding of a quotient module category into the parent's.

    ``parent_vertex[i]`` is the parent vertex of quotient vertex ``i+1``;
    modules embed with unchanged length.
    """

    parent_vertex: tuple[int, ...]

    @cached_property
    def _inverse(self) -> dict[int, int]:
        return {p: q + 1 for q, p in enumerate(self.parent_vertex)}

    def module(self, x: Indec) -> Indec:
        return Indec(self.parent_vertex[x.vertex - 1], x.length)

    def preimage(self, x: Indec) -> Indec:
        return Indec(self._inverse[x.vertex], x.length)

    def has_preimage(self, x: Indec) -> bool:
        return x.vertex in self._inverse


def quotient_by_vertices(
    algebra: NakayamaAlgebra, killed: frozenset[int] | set[int]
) -> tuple[NakayamaAlgebra, VertexEmbedding]:
    """The idempotent quotient killing the given vertices.

    Surviving maximal runs of consecutive vertices become line components with
    Loewy lengths capped by the distance to the next cut; a cycle survives as
    a cycle only when untouched.  Killing everything yields the zero algebra.
    """
    killed = frozenset(killed)
    for v in killed:
        if not 1 <= v <= algebra.n:
            raise ValueError(f"vertex {v} out of range")
    comps: list[Component] = []
    vertex_map: list[int] = []
    for ci, comp in enumerate(algebra.components):
        start = algebra._starts[ci]
        local_killed = sorted(v - start for v in killed if algebra.component_index(v) == ci)
        if not local_killed:
            comps.append(comp)
            vertex_map.extend(range(start, start + comp.size))
            continue
        runs: list[list[int]] = []
        if comp.shape == "line":
            run: list[int] = []
            for i in range(comp.size):
                if i in local_killed:
                    if run:
                        runs.append(run)
                    run = []
                else:
                    run.append(i)
            if run:
                runs.append(run)
        else:
            # cut the circle after each killed vertex, walk each gap
            killed_set = set(local_killed)
            for k in local_killed:
                run = []
                i = (k + 1) % comp.size
                while i not in killed_set:
                    run.append(i)
                    i = (i + 1) % comp.size
                if run:
                    runs.append(run)
            runs.sort(key=lambda r: r[0])
        for run in runs:
            newc = tuple(
                min(comp.kupisch[i], len(run) - pos) for pos, i in enumerate(run)
            )
            comps.append(Component("line", newc))
            vertex_map.extend(start + i for i in run)
    return NakayamaAlgebra(tuple(comps)), VertexEmbedding(tuple(vertex_map))


def list_indecomposables(algebra: NakayamaAlgebra) -> tuple[Indec, ...]:
    """All M(a, t), 1 <= t <= c[a], sorted by (vertex, length)."""
    return tuple(
        Indec(v, t) for v in algebra.vertices() for t in range(1, algebra.c(v) + 1)
    )


# -- text / JSON parsing -------------------------------------------------

_MODULE_RE = re.compile(r"M\(\s*(\d+)\s*,\s*(\d+)\s*\)|([SP])(\d+)")


def parse_algebra(text: str) -> NakayamaAlgebra:
    """Parse ``line:n,h`` | ``cycle:n,h`` | ``kupisch:line=2,2,1;cycle=3,3``
    or the JSON form ``{"components":[{"shape":...,"kupisch":[...]}]}``."""
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        return from_kupisch([(c["shape"], c["kupisch"]) for c in data["components"]])
    kind, _, rest = text.partition(":")
    kind = kind.strip().lower()
    if kind in ("line", "cycle"):
        try:
            n, h = (int(p) for p in rest.split(","))
        except ValueError:
            raise InvalidKupisch(f"expected {kind}:n,h, got {text!r}") from None
        return build_line(n, h) if kind == "line" else build_cycle(n, h)
    if kind == "kupisch":
        spec = []
        for part in rest.split(";"):
            shape, _, nums = part.partition("=")
            spec.append((shape.strip().lower(), [int(x) for x in nums.split(",")]))
        return from_kupisch(spec)
    raise InvalidKupisch(f"cannot parse algebra spec {text!r}")


def module_label(algebra: NakayamaAlgebra, x: Indec) -> str:
    """P_a / S_a / P_a-over-radical-power rendering used for display.

    Simple projectives print as P_a, matching the usual Hasse labelling.
    """
    if algebra.is_projective(x):
        return f"P{x.vertex}"
    if x.length == 1:
        return f"S{x.vertex}"
    return f"P{x.vertex}/rad^{x.length}P{x.vertex}"


def parse_modules(algebra: NakayamaAlgebra, text: str) -> frozenset[Indec]:
    """Parse comma/plus-separated module literals M(a,t), S3, P2, or the
    JSON form [{"vertex": a, "length": t}, ...]."""
    out = set()
    text = text.strip()
    if not text or text == "0":
        return frozenset()
    if text.startswith("[") or text.startswith("{"):
        data = json.loads(text)
        if isinstance(data, dict):
            data = [data]
        return frozenset(
            algebra.check_module(Indec(m["vertex"], m["length"])) for m in data
        )
    pos = 0
    while pos < len(text):
        if text[pos] in ",+ ":
            pos += 1
            continue
        m = _MODULE_RE.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse module list {text!r} at offset {pos}")
        if m.group(3):
            v = int(m.group(4))
            x = algebra.simple(v) if m.group(3) == "S" else algebra.projective(v)
        else:
            x = Indec(int(m.group(1)), int(m.group(2)))
        out.add(algebra.check_module(x))
        pos = m.end()
    return frozenset(out)


def sort_modules(mods) -> tuple[Indec, ...]:
    return tuple(sorted(mods))
