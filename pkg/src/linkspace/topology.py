"""Surface classification of the assembled mesh.

Components come from union-find on the vertex graph.  Orientability is
decided by orientation propagation: walk the face-adjacency graph, choosing
a direction for each face cycle so that every shared edge is traversed in
opposite directions by its two faces; a forced contradiction means the
component is non-orientable.  Genus follows from the Euler characteristic
for orientable components.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .cwcomplex import build_complex, euler_characteristic
from .geometry import SurfaceMesh, perform_surgery
from .linkage import Linkage
from .partitions import cell_vertices


class NotClosed(RuntimeError):
    """An edge of the analyzed complex is not shared by exactly two faces."""


@dataclass(frozen=True)
class ComponentReport:
    vertex_count: int
    edge_count: int
    face_count: int
    euler_characteristic: int
    orientable: bool | None
    genus: int | None


@dataclass(frozen=True)
class TopologyReport:
    component_count: int
    components: tuple[ComponentReport, ...]
    f_vector: tuple[int, ...]
    euler_characteristic: int
    classification: str


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _component_name(chi: int, orientable: bool) -> str:
    if not orientable:
        return f"non-orientable (chi={chi})"
    genus = (2 - chi) // 2
    if genus == 0:
        return "sphere"
    if genus == 1:
        return "torus"
    return f"genus-{genus} surface"


def _plural(name: str) -> str:
    if name == "torus":
        return "tori"
    if name.startswith("non-orientable"):
        return f"{name} components"
    return name + "s"


def _combine(names: list[str]) -> str:
    if len(names) == 1:
        return names[0]
    if len(set(names)) == 1:
        return f"{len(names)} {_plural(names[0])}"
    return " + ".join(sorted(names))


def classify_surface(
    num_vertices: int,
    edges: Sequence[tuple[int, int]],
    faces: Sequence[Sequence[int]],
) -> TopologyReport:
    """Classify a closed polygonal 2-complex given by vertex count, edge
    endpoint pairs and face vertex cycles.  Raises NotClosed unless every
    edge lies in exactly two faces."""
    edge_id = {frozenset(e): i for i, e in enumerate(edges)}
    faces_of_edge: dict[int, list[int]] = defaultdict(list)
    for f, cycle in enumerate(faces):
        for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
            i = edge_id.get(frozenset((a, b)))
            if i is None:
                raise NotClosed(f"face {f} uses segment {a}-{b} that is not an edge")
            faces_of_edge[i].append(f)
    for i, e in enumerate(edges):
        if len(faces_of_edge[i]) != 2:
            raise NotClosed(
                f"edge {e} lies in {len(faces_of_edge[i])} faces, expected 2"
            )

    uf = _UnionFind(num_vertices)
    for a, b in edges:
        uf.union(a, b)

    # Orientation propagation over the face-adjacency graph, per component.
    # sign[f] = +1 keeps the stored cycle direction, -1 reverses it; two
    # faces sharing an edge must traverse it in opposite directions.
    def traversal(face: int, a: int, b: int) -> int:
        cycle = faces[face]
        k = len(cycle)
        for idx in range(k):
            if cycle[idx] == a and cycle[(idx + 1) % k] == b:
                return 1
            if cycle[idx] == b and cycle[(idx + 1) % k] == a:
                return -1
        raise AssertionError(f"edge {a}-{b} not on face {face}")

    sign: dict[int, int] = {}
    orientable_of_face_root: dict[int, bool] = {}
    for f0 in range(len(faces)):
        if f0 in sign:
            continue
        sign[f0] = 1
        orientable = True
        stack = [f0]
        while stack:
            f = stack.pop()
            cycle = faces[f]
            for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
                i = edge_id[frozenset((a, b))]
                for g in faces_of_edge[i]:
                    if g == f:
                        continue
                    required = -sign[f] * traversal(f, a, b) * traversal(g, a, b)
                    if g not in sign:
                        sign[g] = required
                        stack.append(g)
                    elif sign[g] != required:
                        orientable = False
        orientable_of_face_root[uf.find(faces[f0][0])] = (
            orientable_of_face_root.get(uf.find(faces[f0][0]), True) and orientable
        )

    per_root_v: dict[int, int] = defaultdict(int)
    per_root_e: dict[int, int] = defaultdict(int)
    per_root_f: dict[int, int] = defaultdict(int)
    for v in range(num_vertices):
        per_root_v[uf.find(v)] += 1
    for a, _ in edges:
        per_root_e[uf.find(a)] += 1
    for cycle in faces:
        per_root_f[uf.find(cycle[0])] += 1

    components = []
    for root in sorted(per_root_v, key=lambda r: min(v for v in range(num_vertices) if uf.find(v) == r)):
        v, e, f = per_root_v[root], per_root_e[root], per_root_f[root]
        chi = v - e + f
        orientable = orientable_of_face_root.get(root, True)
        genus = (2 - chi) // 2 if orientable else None
        components.append(
            ComponentReport(v, e, f, chi, orientable, genus)
        )
    names = [_component_name(c.euler_characteristic, c.orientable) for c in components]
    total_chi = sum(c.euler_characteristic for c in components)
    return TopologyReport(
        component_count=len(components),
        components=tuple(components),
        f_vector=(num_vertices, len(edges), len(faces)),
        euler_characteristic=total_chi,
        classification=_combine(names),
    )


def analyze(mesh: SurfaceMesh) -> TopologyReport:
    return classify_surface(
        len(mesh.vertices),
        [e.endpoints for e in mesh.edges],
        [f.cycle for f in mesh.faces],
    )


def _classify_curves(linkage: Linkage) -> TopologyReport:
    """n=4: the complex is a disjoint union of circles (each vertex has
    exactly two admissible adjacent merges)."""
    complex_ = build_complex(linkage)
    vertex_index = {c.label: i for i, c in enumerate(complex_.cells_by_dim[0])}
    edges = []
    for cell in complex_.cells_by_dim[1]:
        u, w = (vertex_index[v] for v in cell_vertices(cell.label))
        edges.append((min(u, w), max(u, w)))
    degree = [0] * len(vertex_index)
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    if any(d != 2 for d in degree):
        raise NotClosed("quadrilateral complex is not a union of circles")
    uf = _UnionFind(len(vertex_index))
    for a, b in edges:
        uf.union(a, b)
    per_root_v: dict[int, int] = defaultdict(int)
    per_root_e: dict[int, int] = defaultdict(int)
    for v in range(len(vertex_index)):
        per_root_v[uf.find(v)] += 1
    for a, _ in edges:
        per_root_e[uf.find(a)] += 1
    components = tuple(
        ComponentReport(per_root_v[r], per_root_e[r], 0, 0, None, None)
        for r in sorted(per_root_v)
    )
    k = len(components)
    return TopologyReport(
        component_count=k,
        components=components,
        f_vector=complex_.f_vector(),
        euler_characteristic=0,
        classification="circle" if k == 1 else f"{k} circles",
    )


def classify_linkage(linkage: Linkage) -> TopologyReport:
    """End-to-end pipeline: build, realize, classify.

    Pentagons get the full surface classification; quadrilaterals report
    their circle decomposition; n >= 6 reports the f-vector and Euler
    characteristic only (the complex has dimension >= 3).
    """
    if linkage.n == 5:
        return analyze(perform_surgery(linkage))
    if linkage.n == 4:
        return _classify_curves(linkage)
    complex_ = build_complex(linkage)
    vertex_count = len(complex_.cells_by_dim[0])
    uf = _UnionFind(vertex_count)
    vertex_index = {c.label: i for i, c in enumerate(complex_.cells_by_dim[0])}
    for cell in complex_.cells_by_dim[1]:
        u, w = (vertex_index[v] for v in cell_vertices(cell.label))
        uf.union(u, w)
    roots = {uf.find(v) for v in range(vertex_count)}
    return TopologyReport(
        component_count=len(roots),
        components=(),
        f_vector=complex_.f_vector(),
        euler_characteristic=euler_characteristic(complex_),
        classification="unclassified (dim >= 3)",
    )
