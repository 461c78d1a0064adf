"""Planar link diagrams from PD codes.

A diagram is a 4-valent plane graph with over/under data at each vertex,
encoded in PD convention: each crossing is a counterclockwise 4-tuple of
edge labels starting at the incoming under-strand.  Zero-crossing closed
components are carried separately as loops.  Faces come from rotation-system
traversal and planarity is enforced (Euler check per connected component).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    DiagramValidityError,
    EmbeddingError,
    PDSyntaxError,
)

#: A dart is one of the four edge-ends at a crossing: (crossing index, slot).
Dart = tuple[int, int]


@dataclass(frozen=True)
class Face:
    """One complementary region of the diagram.

    ``boundary`` lists (edge label, side) pairs in traversal order; ``side``
    is 0 or 1 and names which of the edge's two sides this face lies on, so
    each (edge, side) pair belongs to exactly one face.  ``corners`` lists
    the crossing corners the face touches as (crossing, k) meaning the corner
    between slots k and k+1 (empty for the two faces of a bare loop).
    """

    boundary: tuple[tuple[int, int], ...]
    corners: tuple[Dart, ...]

    @property
    def degree(self) -> int:
        return len(self.boundary)

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.boundary)

    def is_bigon(self) -> bool:
        return self.degree == 2


@dataclass(frozen=True)
class PlanarDiagram:
    """Validated planar diagram (immutable; derived data is cached).

    Prefer :meth:`build` or :func:`parse_pd` over the raw constructor: they
    normalize each tuple so slot 0 really is the incoming under-strand.
    """

    crossings: tuple[tuple[int, int, int, int], ...]
    loops: tuple[int, ...] = ()
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(c) for c in self.crossings))
        object.__setattr__(self, "loops", tuple(self.loops))
        self._validate_structure()
        self._validate_embedding()

    # -- construction ----------------------------------------------------

    @classmethod
    def build(
        cls,
        crossings: Iterable[Iterable[int]],
        loops: Iterable[int] = (),
        name: str | None = None,
    ) -> "PlanarDiagram":
        """Construct a diagram, rotating tuples by 2 where needed so that the
        slot-0 edge is incoming under the derived strand orientation."""
        cross = [tuple(int(x) for x in c) for c in crossings]
        for c in cross:
            if len(c) != 4:
                raise DiagramValidityError(f"crossing tuple {c} is not 4-valent")
        ends = _edge_ends(cross)
        heads = _orient(cross, ends)
        fixed = []
        for ci, tup in enumerate(cross):
            if heads[tup[0]] == (ci, 0):
                fixed.append(tup)
            elif heads[tup[2]] == (ci, 2):
                fixed.append((tup[2], tup[3], tup[0], tup[1]))
            else:
                raise DiagramValidityError(
                    f"crossing {ci}: no incoming under-strand on the (0,2) axis"
                )
        return cls(tuple(fixed), tuple(int(k) for k in loops), name)

    # -- validation ------------------------------------------------------

    def _validate_structure(self) -> None:
        counts: dict[int, int] = {}
        for c in self.crossings:
            if len(c) != 4:
                raise DiagramValidityError(f"crossing tuple {c} is not 4-valent")
            for e in c:
                if not isinstance(e, int) or e <= 0:
                    raise DiagramValidityError(f"edge label {e!r} is not a positive integer")
                counts[e] = counts.get(e, 0) + 1
        for e, n in counts.items():
            if n != 2:
                raise DiagramValidityError(
                    f"edge label {e} appears {n} time(s); every edge must appear exactly twice"
                )
        seen_loops = set()
        for k in self.loops:
            if not isinstance(k, int) or k <= 0:
                raise DiagramValidityError(f"loop label {k!r} is not a positive integer")
            if k in counts or k in seen_loops:
                raise DiagramValidityError(f"loop label {k} collides with another edge label")
            seen_loops.add(k)

    def _validate_embedding(self) -> None:
        # Planarity: V - E + F = 2 on each connected component of the
        # 4-valent graph, with F counted from rotation-system face orbits.
        comp_of = self._crossing_component_map
        n_comp = (max(comp_of.values()) + 1) if comp_of else 0
        v = [0] * n_comp
        e = [0] * n_comp
        f = [0] * n_comp
        for ci in range(len(self.crossings)):
            v[comp_of[ci]] += 1
        for label, (a, _b) in self.edge_ends.items():
            e[comp_of[a[0]]] += 1
        for face in self.faces:
            if face.corners:
                f[comp_of[face.corners[0][0]]] += 1
        for i in range(n_comp):
            euler = v[i] - e[i] + f[i]
            if euler != 2:
                raise EmbeddingError(
                    f"rotation system is not planar: component {i} has "
                    f"V-E+F = {v[i]}-{e[i]}+{f[i]} = {euler} (expected 2)"
                )

    # -- derived combinatorics --------------------------------------------

    @cached_property
    def edge_ends(self) -> dict[int, tuple[Dart, Dart]]:
        """Edge label -> its two (crossing, slot) ends, lexicographically ordered."""
        return _edge_ends(self.crossings)

    @property
    def edges(self) -> tuple[int, ...]:
        """All edge labels (loops included), sorted."""
        return tuple(sorted(self.edge_ends)) + tuple(sorted(self.loops))

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_edges(self) -> int:
        return len(self.edge_ends) + len(self.loops)

    def other_end(self, label: int, dart: Dart) -> Dart:
        a, b = self.edge_ends[label]
        return b if dart == a else a

    def edge_at(self, dart: Dart) -> int:
        return self.crossings[dart[0]][dart[1]]

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        """All faces from rotation-system traversal; each loop adds its two
        disk faces."""
        faces = []
        seen: set[Dart] = set()
        for ci in range(len(self.crossings)):
            for p in range(4):
                start = (ci, p)
                if start in seen:
                    continue
                boundary = []
                corners = []
                d = start
                while True:
                    seen.add(d)
                    label = self.edge_at(d)
                    a, _b = self.edge_ends[label]
                    boundary.append((label, 0 if d == a else 1))
                    corners.append((d[0], (d[1] - 1) % 4))
                    o = self.other_end(label, d)
                    d = (o[0], (o[1] + 1) % 4)
                    if d == start:
                        break
                faces.append(Face(tuple(boundary), tuple(corners)))
        for k in sorted(self.loops):
            faces.append(Face(((k, 0),), ()))
            faces.append(Face(((k, 1),), ()))
        return tuple(faces)

    @cached_property
    def edge_faces(self) -> dict[int, tuple[int, int]]:
        """Edge label -> (face index on side 0, face index on side 1)."""
        sides: dict[int, list[int]] = {e: [-1, -1] for e in self.edges}
        for fi, face in enumerate(self.faces):
            for label, side in face.boundary:
                sides[label][side] = fi
        return {e: (s[0], s[1]) for e, s in sides.items()}

    @cached_property
    def corner_face(self) -> dict[Dart, int]:
        """(crossing, k) -> index of the face at the corner between slots k, k+1."""
        out: dict[Dart, int] = {}
        for fi, face in enumerate(self.faces):
            for corner in face.corners:
                out[corner] = fi
        return out

    def incident_edges(self, ci: int) -> tuple[int, int, int, int]:
        return self.crossings[ci]

    @cached_property
    def _orientation(self) -> dict[int, Dart]:
        """Edge label -> head dart (the end the strand points into)."""
        return _orient(self.crossings, self.edge_ends)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Partition of edge labels into link components (strand orbits);
        each loop is its own component.  Order: by smallest member label."""
        comp: list[tuple[int, ...]] = []
        assigned: set[int] = set()
        heads = self._orientation
        for label in sorted(self.edge_ends):
            if label in assigned:
                continue
            cycle = [label]
            assigned.add(label)
            d = heads[label]
            while True:
                exit_dart = (d[0], (d[1] + 2) % 4)
                nxt = self.edge_at(exit_dart)
                if nxt in assigned:
                    break
                cycle.append(nxt)
                assigned.add(nxt)
                d = self.other_end(nxt, exit_dart)
            comp.append(tuple(cycle))
        for k in sorted(self.loops):
            comp.append((k,))
        return tuple(sorted(comp, key=lambda c: min(c)))

    @cached_property
    def component_of_edge(self) -> dict[int, int]:
        return {e: i for i, comp in enumerate(self.components) for e in comp}

    @cached_property
    def signs(self) -> tuple[int, ...]:
        """Derived crossing signs (+1/-1); convention-relative, see PD docs."""
        heads = self._orientation
        out = []
        for ci, tup in enumerate(self.crossings):
            if heads[tup[3]] == (ci, 3):
                out.append(+1)
            elif heads[tup[1]] == (ci, 1):
                out.append(-1)
            else:  # pragma: no cover - excluded by orientation consistency
                raise DiagramValidityError(f"crossing {ci}: over-strand has no incoming end")
        return tuple(out)

    @cached_property
    def _crossing_component_map(self) -> dict[int, int]:
        """Crossing index -> connected component id of the 4-valent graph."""
        n = len(self.crossings)
        comp = {}
        nxt = 0
        for start in range(n):
            if start in comp:
                continue
            stack = [start]
            comp[start] = nxt
            while stack:
                c = stack.pop()
                for e in self.crossings[c]:
                    for (c2, _p) in self.edge_ends[e]:
                        if c2 not in comp:
                            comp[c2] = nxt
                            stack.append(c2)
            nxt += 1
        return comp

    def is_connected(self) -> bool:
        """True when the diagram is a single linked piece: one component of
        the 4-valent graph and no detached loops (or a single bare loop)."""
        n_graph = (max(self._crossing_component_map.values()) + 1) if self.crossings else 0
        if n_graph == 0:
            return len(self.loops) == 1
        return n_graph == 1 and not self.loops

    # -- serialization -----------------------------------------------------

    def to_text(self) -> str:
        parts = []
        if self.name:
            parts.append(f"name: {self.name}\n")
        tokens = ["X[%d,%d,%d,%d]" % c for c in self.crossings]
        tokens += [f"O[{k}]" for k in self.loops]
        parts.append(" ".join(tokens))
        parts.append("\n")
        return "".join(parts)

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "crossings": [list(c) for c in self.crossings],
            "loops": list(self.loops),
        }

    def relabeled(self, mapping: Mapping[int, int]) -> "PlanarDiagram":
        """Apply an edge-label bijection (no structural change)."""
        cross = tuple(tuple(mapping.get(e, e) for e in c) for c in self.crossings)
        loops = tuple(mapping.get(k, k) for k in self.loops)
        return PlanarDiagram(cross, loops, self.name)

    def canonical_relabel(self) -> "PlanarDiagram":
        """Rename edges 1..E by first appearance; use to compare diagrams
        up to relabeling (crossing order preserved)."""
        mapping: dict[int, int] = {}
        for c in self.crossings:
            for e in c:
                if e not in mapping:
                    mapping[e] = len(mapping) + 1
        for k in self.loops:
            if k not in mapping:
                mapping[k] = len(mapping) + 1
        return self.relabeled(mapping)


# -- free helpers ---------------------------------------------------------


def _edge_ends(crossings: list | tuple) -> dict[int, tuple[Dart, Dart]]:
    occ: dict[int, list[Dart]] = {}
    for ci, tup in enumerate(crossings):
        for p, e in enumerate(tup):
            occ.setdefault(e, []).append((ci, p))
    out = {}
    for e, ends in occ.items():
        if len(ends) != 2:
            raise DiagramValidityError(
                f"edge label {e} appears {len(ends)} time(s); every edge must appear exactly twice"
            )
        a, b = sorted(ends)
        out[e] = (a, b)
    return out


def _orient(crossings, ends) -> dict[int, Dart]:
    """Assign each edge a head dart by strand traversal.

    Components that go under somewhere are seeded at a slot-0 dart (the PD
    convention); purely-over components are seeded at their smallest dart.
    """
    heads: dict[int, Dart] = {}

    def run(start_label: int, start_head: Dart) -> None:
        heads[start_label] = start_head
        d = start_head
        label = start_label
        while True:
            exit_dart = (d[0], (d[1] + 2) % 4)
            ci, p = exit_dart
            nxt = crossings[ci][p]
            a, b = ends[nxt]
            nxt_head = b if exit_dart == a else a
            if nxt in heads:
                if heads[nxt] != nxt_head and nxt != start_label:
                    raise DiagramValidityError(
                        f"inconsistent strand orientation at edge {nxt}"
                    )
                break
            heads[nxt] = nxt_head
            d = nxt_head
            label = nxt

    for ci in range(len(crossings)):
        e0 = crossings[ci][0]
        if e0 not in heads:
            run(e0, (ci, 0))
    for e in sorted(ends):
        if e not in heads:
            run(e, ends[e][0])
    return heads


# -- PD text format ---------------------------------------------------------

_X_RE = re.compile(r"X\[(\d+),(\d+),(\d+),(\d+)\]$")
_O_RE = re.compile(r"O\[(\d+)\]$")


def parse_pd(text: str) -> PlanarDiagram:
    """Parse the PD text format.

    Whitespace-separated tokens ``X[a,b,c,d]`` (counterclockwise from the
    incoming under-strand) and ``O[k]`` (a zero-crossing closed component);
    ``#`` starts a comment; an optional ``name: <string>`` header line names
    the diagram.
    """
    crossings: list[tuple[int, int, int, int]] = []
    loops: list[int] = []
    name: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("name:"):
            name = stripped[len("name:"):].strip() or None
            continue
        for m in re.finditer(r"\S+", line):
            token = m.group(0)
            col = m.start() + 1
            xm = _X_RE.match(token)
            if xm:
                crossings.append(tuple(int(g) for g in xm.groups()))
                continue
            om = _O_RE.match(token)
            if om:
                loops.append(int(om.group(1)))
                continue
            raise PDSyntaxError(
                f"unrecognized token {token!r} (expected X[a,b,c,d] or O[k])",
                lineno,
                col,
            )
    return PlanarDiagram.build(crossings, loops, name)


def parse_json(text: str) -> PlanarDiagram:
    """Parse the JSON mirror of the PD format."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PDSyntaxError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    if not isinstance(obj, dict):
        raise DiagramValidityError("top-level JSON value must be an object")
    crossings = obj.get("crossings", [])
    loops = obj.get("loops", [])
    name = obj.get("name")
    return PlanarDiagram.build(crossings, loops, name)


def face_structure(d: PlanarDiagram) -> list[Face]:
    """All faces of the diagram (rotation-system traversal)."""
    return list(d.faces)
