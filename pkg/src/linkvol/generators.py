"""Programmatic diagram builders used by the corpus, CLI and tests.

All builders return validated :class:`~linkvol.diagram.PlanarDiagram` values;
the wiring tables below were fixed by checking face counts against the
published trefoil and figure-eight PD codes.
"""

from __future__ import annotations

from .diagram import Dart, PlanarDiagram
from .errors import DiagramValidityError, DomainError


def _assemble(n_crossings: int, arcs: list[tuple[Dart, Dart]], name: str | None = None) -> PlanarDiagram:
    slots: dict[Dart, int] = {}
    for label, (d1, d2) in enumerate(arcs, start=1):
        if d1 in slots or d2 in slots:
            raise DiagramValidityError(f"slot wired twice: {d1} / {d2}")
        slots[d1] = label
        slots[d2] = label
    crossings = [tuple(slots[(ci, p)] for p in range(4)) for ci in range(n_crossings)]
    return PlanarDiagram.build(crossings, name=name)


def _chain_arcs(ids: list[int]) -> list[tuple[Dart, Dart]]:
    # Twist chain: consecutive crossings joined by two parallel edges (a bigon);
    # first crossing keeps slots (0,1) free, last keeps (2,3).
    arcs = []
    for j in range(len(ids) - 1):
        arcs.append(((ids[j], 2), (ids[j + 1], 1)))
        arcs.append(((ids[j], 3), (ids[j + 1], 0)))
    return arcs


def torus_chain(c: int, name: str | None = None) -> PlanarDiagram:
    """Closed chain of c crossings: the standard (2,c) torus-link diagram.

    One twist region of c crossings; c=3 gives the usual trefoil diagram,
    c=1 the one-crossing curl.
    """
    if c < 1:
        raise DomainError("torus_chain needs c >= 1")
    ids = list(range(c))
    arcs = _chain_arcs(ids)
    arcs.append(((ids[-1], 2), (ids[0], 1)))
    arcs.append(((ids[-1], 3), (ids[0], 0)))
    return _assemble(c, arcs, name or f"torus-chain-{c}")


def double_twist(a: int, b: int, name: str | None = None) -> PlanarDiagram:
    """Two twist regions of a and b crossings wired like the standard
    figure-eight diagram (a=b=2 reproduces its combinatorics)."""
    if a < 1 or b < 1:
        raise DomainError("double_twist needs a, b >= 1")
    A = list(range(a))
    B = list(range(a, a + b))
    arcs = _chain_arcs(A) + _chain_arcs(B)
    a0, al, b0, bl = A[0], A[-1], B[0], B[-1]
    arcs += [
        ((a0, 0), (b0, 0)),
        ((a0, 1), (bl, 3)),
        ((al, 2), (bl, 2)),
        ((al, 3), (b0, 1)),
    ]
    return _assemble(a + b, arcs, name or f"double-twist-{a}-{b}")


def pretzel(*column_sizes: int, name: str | None = None) -> PlanarDiagram:
    """Pretzel diagram: vertical twist columns joined by top and bottom arcs.

    With every column size >= 2 and at least 3 columns the twist regions are
    exactly the columns.  (Two columns merge into a single region through the
    closure bigons, matching the torus-chain picture.)
    """
    if not column_sizes or any(c < 1 for c in column_sizes):
        raise DomainError("pretzel needs column sizes >= 1")
    cols: list[list[int]] = []
    nid = 0
    for c in column_sizes:
        cols.append(list(range(nid, nid + c)))
        nid += c
    arcs: list[tuple[Dart, Dart]] = []
    for col in cols:
        arcs += _chain_arcs(col)
    k = len(cols)
    tops = [col[0] for col in cols]
    bots = [col[-1] for col in cols]
    if k == 1:
        # caps; degenerate (adds a curl at each end) but valid
        arcs.append(((tops[0], 0), (tops[0], 1)))
        arcs.append(((bots[0], 2), (bots[0], 3)))
    else:
        for i in range(k - 1):
            arcs.append(((tops[i], 0), (tops[i + 1], 1)))
            arcs.append(((bots[i], 3), (bots[i + 1], 2)))
        arcs.append(((tops[0], 1), (tops[k - 1], 0)))
        arcs.append(((bots[0], 2), (bots[k - 1], 3)))
    label = name or ("pretzel-" + "-".join(str(c) for c in column_sizes))
    return _assemble(nid, arcs, label)


def connect_sum(
    d1: PlanarDiagram,
    d2: PlanarDiagram,
    edge1: int | None = None,
    edge2: int | None = None,
    name: str | None = None,
) -> PlanarDiagram:
    """Connected sum: cut one edge in each diagram and cross-join the strands
    (orientations respected).  Defaults to the smallest edge label of each."""
    if not d1.crossings or not d2.crossings:
        raise DomainError("connect_sum needs two diagrams with crossings")
    edge1 = edge1 if edge1 is not None else min(d1.edge_ends)
    edge2 = edge2 if edge2 is not None else min(d2.edge_ends)
    if edge1 not in d1.edge_ends or edge2 not in d2.edge_ends:
        raise DomainError("edge to splice is not in the diagram")

    off_c = len(d1.crossings)
    off_e = max(list(d1.edge_ends) + list(d1.loops) + [0])
    h1 = d1._orientation[edge1]
    t1 = d1.other_end(edge1, h1)
    h2r = d2._orientation[edge2]
    t2r = d2.other_end(edge2, h2r)
    h2 = (h2r[0] + off_c, h2r[1])
    t2 = (t2r[0] + off_c, t2r[1])

    new_a = off_e + len(d2.edge_ends) + len(d2.loops) + 1  # t1 -> h2
    new_b = new_a + 1  # t2 -> h1

    grid: dict[Dart, int] = {}
    for ci, tup in enumerate(d1.crossings):
        for p, e in enumerate(tup):
            grid[(ci, p)] = e
    for ci, tup in enumerate(d2.crossings):
        for p, e in enumerate(tup):
            grid[(ci + off_c, p)] = e + off_e
    grid[t1] = new_a
    grid[h2] = new_a
    grid[t2] = new_b
    grid[h1] = new_b

    crossings = [tuple(grid[(ci, p)] for p in range(4)) for ci in range(off_c + len(d2.crossings))]
    loops = tuple(d1.loops) + tuple(k + off_e for k in d2.loops)
    return PlanarDiagram.build(crossings, loops, name or "connect-sum")


def insert_crossing(d: PlanarDiagram, edge_a: int, edge_b: int, name: str | None = None) -> PlanarDiagram:
    """Insert a half twist across two co-facial edges (edge_a goes under).

    The two strands are cut and cross-joined over a new crossing, so the
    tail of each old edge continues into the head of the other; this is the
    planar way to make two parallel strands cross once.  Both rotation
    placements of the new crossing are attempted and the one giving a planar
    rotation system is kept.
    """
    if edge_a == edge_b:
        raise DomainError("need two distinct edges")
    for e in (edge_a, edge_b):
        if e not in d.edge_ends:
            raise DomainError(f"edge {e} is not a crossing-to-crossing edge of the diagram")
    if not set(d.edge_faces[edge_a]) & set(d.edge_faces[edge_b]):
        raise DomainError(f"edges {edge_a} and {edge_b} do not share a face")

    x = len(d.crossings)
    off_e = max(list(d.edge_ends) + list(d.loops))
    p1, p2, p3, p4 = off_e + 1, off_e + 2, off_e + 3, off_e + 4
    ha = d._orientation[edge_a]
    ta = d.other_end(edge_a, ha)
    hb = d._orientation[edge_b]
    tb = d.other_end(edge_b, hb)

    last_err: Exception | None = None
    for over_in_slot in (3, 1):
        grid: dict[Dart, int] = {}
        for ci, tup in enumerate(d.crossings):
            for p, e in enumerate(tup):
                grid[(ci, p)] = e
        # under strand: ta -> (x,0), (x,2) -> hb (strands swap sides)
        grid[ta] = p1
        grid[(x, 0)] = p1
        grid[(x, 2)] = p2
        grid[hb] = p2
        # over strand: tb -> (x, over_in), (x, over_out) -> ha
        grid[tb] = p3
        grid[(x, over_in_slot)] = p3
        grid[(x, (over_in_slot + 2) % 4)] = p4
        grid[ha] = p4
        crossings = [tuple(grid[(ci, p)] for p in range(4)) for ci in range(x + 1)]
        try:
            return PlanarDiagram.build(crossings, d.loops, name or d.name)
        except DiagramValidityError as exc:
            last_err = exc
    raise DomainError(f"no planar placement crosses edges {edge_a} and {edge_b}") from last_err
