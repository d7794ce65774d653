"""Simple undirected graphs, face certificates, and triangulation editing moves.

Graphs are immutable values (vertices 0..n-1, normalized edge pairs); every
edit returns a new graph. Planarity is certificate-based: generators build
face lists alongside graphs, and ``validate_triangulation`` checks the
certificate invariants rather than running a planarity test.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import (
    EdgeNotFlippable,
    EdgeNotPresent,
    FaceNotPresent,
    FlipWouldCreateParallelEdge,
    InvalidParameter,
    NotATriangle,
)

Edge = tuple[int, int]
Face = tuple[int, int, int]


def _norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise InvalidParameter(f"loop edge ({u},{v}) not allowed")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameter("vertex count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise InvalidParameter(f"edge ({u},{v}) out of range or unnormalized")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, frozenset(_norm_edge(u, v) for u, v in edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def adjacency(self) -> list:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, obj: dict) -> "Graph":
        return cls.from_edges(int(obj["n"]), obj["edges"])


@dataclass(frozen=True)
class FaceCertificate:
    """Oriented triangular face list, including the outer face."""

    faces: tuple

    @classmethod
    def from_faces(cls, faces: Iterable[Sequence[int]]) -> "FaceCertificate":
        return cls(tuple(tuple(f) for f in faces))

    def __len__(self):
        return len(self.faces)

    def find(self, face: Sequence[int]) -> Optional[Face]:
        """Return the stored face matching ``face`` as an unordered triple."""
        want = frozenset(face)
        for f in self.faces:
            if frozenset(f) == want:
                return f
        return None

    def to_json(self) -> dict:
        return {"faces": [list(f) for f in self.faces]}

    @classmethod
    def from_json(cls, obj: dict) -> "FaceCertificate":
        return cls.from_faces(obj["faces"])


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failures: tuple
    n: int
    e: int
    f: int


# -- standard graphs -----------------------------------------------------------


def path_graph(m: int) -> Graph:
    if m < 1:
        raise InvalidParameter("path needs at least one vertex")
    return Graph.from_edges(m, [(i, i + 1) for i in range(m - 1)])


def cycle_graph(l: int) -> Graph:
    if l < 3:
        raise InvalidParameter("cycle needs at least three vertices")
    return Graph.from_edges(l, [(i, (i + 1) % l) for i in range(l)])


def complete_graph(p: int) -> Graph:
    if p < 1:
        raise InvalidParameter("complete graph needs at least one vertex")
    return Graph.from_edges(p, [(i, j) for i in range(p) for j in range(i + 1, p)])


def empty_graph(p: int) -> Graph:
    if p < 1:
        raise InvalidParameter("empty graph needs at least one vertex")
    return Graph(p, frozenset())


def build_standard(kind: str, size: int) -> Graph:
    """Dispatcher used by the CLI: kind in {path, cycle, complete, empty}."""
    builders = {
        "path": path_graph,
        "cycle": cycle_graph,
        "complete": complete_graph,
        "empty": empty_graph,
    }
    if kind not in builders:
        raise InvalidParameter(f"unknown standard graph kind {kind!r}")
    return builders[kind](size)


# -- editing primitives ----------------------------------------------------------


def graph_join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all cross edges; h's vertices are shifted by g.n."""
    off = g.n
    edges = set(g.edges)
    edges.update((u + off, v + off) for u, v in h.edges)
    edges.update((a, b + off) for a in range(g.n) for b in range(h.n))
    return Graph.from_edges(g.n + h.n, edges)


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    e = _norm_edge(*e)
    if e not in g.edges:
        raise EdgeNotPresent(f"edge {e} not in graph")
    return Graph(g.n, g.edges - {e})


def contract_edge(g: Graph, e: Sequence[int]) -> Graph:
    """Contract e, merging parallel edges; the result is always simple.

    Contracting an edge of a simple graph cannot produce a loop, so no
    LoopProduced outcome exists: the simplified graph is returned directly.
    """
    u, v = _norm_edge(*e)
    if (u, v) not in g.edges:
        raise EdgeNotPresent(f"edge {(u, v)} not in graph")

    def relabel(x: int) -> int:
        if x == v:
            x = u
        return x - 1 if x > v else x

    edges = set()
    for a, b in g.edges:
        ra, rb = relabel(a), relabel(b)
        if ra != rb:
            edges.add(_norm_edge(ra, rb))
    return Graph(g.n - 1, frozenset(edges))


def _check_triangle(g: Graph, t: Sequence[int]) -> tuple:
    t = tuple(t)
    if len(t) != 3 or len(set(t)) != 3:
        raise NotATriangle(f"{t} is not a vertex triple")
    a, b, c = t
    for x, y in ((a, b), (a, c), (b, c)):
        if not g.has_edge(x, y):
            raise NotATriangle(f"{t} is not a triangle: edge ({x},{y}) missing")
    return t


def glue_on_triangle(g: Graph, tg: Sequence[int], h: Graph, th: Sequence[int]) -> Graph:
    """Identify triangle th of h with triangle tg of g, vertexwise in order."""
    tg = _check_triangle(g, tg)
    th = _check_triangle(h, th)
    mapping = dict(zip(th, tg))
    nxt = g.n
    for w in range(h.n):
        if w not in mapping:
            mapping[w] = nxt
            nxt += 1
    edges = set(g.edges)
    edges.update(_norm_edge(mapping[a], mapping[b]) for a, b in h.edges)
    return Graph(nxt, frozenset(edges))


def glue_on_face(
    g: Graph,
    cert_g: FaceCertificate,
    face_g: Sequence[int],
    h: Graph,
    cert_h: FaceCertificate,
    face_h: Sequence[int],
) -> tuple:
    """Certificate-aware gluing: face_g is replaced by the faces of h except
    face_h. Both faces must appear in their certificates."""
    fg = cert_g.find(face_g)
    fh = cert_h.find(face_h)
    if fg is None:
        raise FaceNotPresent(f"{tuple(face_g)} not a certified face")
    if fh is None:
        raise FaceNotPresent(f"{tuple(face_h)} not a certified face")
    glued = glue_on_triangle(g, fg, h, fh)
    mapping = dict(zip(fh, fg))
    nxt = g.n
    for w in range(h.n):
        if w not in mapping:
            mapping[w] = nxt
            nxt += 1
    faces = [f for f in cert_g.faces if f != fg]
    faces.extend(
        tuple(mapping[x] for x in f) for f in cert_h.faces if f != fh
    )
    return glued, FaceCertificate.from_faces(faces)


def apollonian_insert(
    g: Graph, cert: FaceCertificate, face: Sequence[int]
) -> tuple:
    """Add one vertex inside a certified face, joined to its three corners."""
    f = cert.find(face)
    if f is None:
        raise FaceNotPresent(f"{tuple(face)} not a certified face")
    a, b, c = f
    x = g.n
    edges = set(g.edges)
    edges.update(_norm_edge(a, x) for a in f)
    faces = [ff for ff in cert.faces if ff != f]
    faces.extend([(a, b, x), (b, c, x), (c, a, x)])
    return Graph(g.n + 1, frozenset(edges)), FaceCertificate.from_faces(faces)


def diagonal_flip(g: Graph, cert: FaceCertificate, e: Sequence[int]) -> tuple:
    """Replace edge e by the opposite diagonal of the quadrilateral formed by
    the two faces sharing e."""
    u, v = _norm_edge(*e)
    if (u, v) not in g.edges:
        raise EdgeNotPresent(f"edge {(u, v)} not in graph")
    incident = [f for f in cert.faces if u in f and v in f]
    if len(incident) != 2:
        raise EdgeNotFlippable(f"edge {(u, v)} lies in {len(incident)} faces, need 2")
    f1, f2 = incident
    (a,) = [x for x in f1 if x not in (u, v)]
    (b,) = [x for x in f2 if x not in (u, v)]
    if a == b:
        raise EdgeNotFlippable("the two incident faces share their apex")
    if g.has_edge(a, b):
        raise FlipWouldCreateParallelEdge(f"diagonal ({a},{b}) already present")
    edges = set(g.edges)
    edges.remove((u, v))
    edges.add(_norm_edge(a, b))
    faces = [f for f in cert.faces if f not in (f1, f2)]
    faces.extend([(u, a, b), (v, b, a)])
    return Graph(g.n, frozenset(edges)), FaceCertificate.from_faces(faces)


def flippable_edges(g: Graph, cert: FaceCertificate) -> list:
    """Edges whose flip keeps the graph simple, in sorted order."""
    out = []
    for e in g.sorted_edges():
        u, v = e
        incident = [f for f in cert.faces if u in f and v in f]
        if len(incident) != 2:
            continue
        (a,) = [x for x in incident[0] if x not in e]
        (b,) = [x for x in incident[1] if x not in e]
        if a != b and not g.has_edge(a, b):
            out.append(e)
    return out


def validate_triangulation(g: Graph, cert: FaceCertificate) -> ValidationReport:
    """Check all certificate invariants; failures are report entries."""
    failures = []
    n, e, f = g.n, g.edge_count, len(cert.faces)

    edge_use = {}
    for face in cert.faces:
        if len(face) != 3 or len(set(face)) != 3:
            failures.append(f"face {face} is not a triple of distinct vertices")
            continue
        for x in face:
            if not 0 <= x < n:
                failures.append(f"face {face} has out-of-range vertex {x}")
        a, b, c = face
        for pair in ((a, b), (b, c), (a, c)):
            uv = tuple(sorted(pair))
            if uv not in g.edges:
                failures.append(f"face {face} uses missing edge {uv}")
            edge_use[uv] = edge_use.get(uv, 0) + 1

    for uv in g.sorted_edges():
        cnt = edge_use.get(uv, 0)
        if cnt != 2:
            failures.append(f"edge {uv} lies in {cnt} faces, expected 2")

    if n - e + f != 2:
        failures.append(f"Euler relation violated: {n} - {e} + {f} != 2")
    if e != 3 * n - 6:
        failures.append(f"edge count {e} != 3n-6 = {3 * n - 6}")

    return ValidationReport(ok=not failures, failures=tuple(failures), n=n, e=e, f=f)


# -- small canonical triangulations ------------------------------------------------


def triangle_with_certificate() -> tuple:
    g = complete_graph(3)
    cert = FaceCertificate.from_faces([(0, 1, 2), (0, 2, 1)])
    return g, cert


def k4_with_certificate() -> tuple:
    g = complete_graph(4)
    cert = FaceCertificate.from_faces([(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)])
    return g, cert


# -- seeded random walks (used by property runs and the CLI) ------------------------


def random_flip_walk(
    g: Graph, cert: FaceCertificate, steps: int, rng: random.Random
):
    """Yield (graph, certificate) after each of ``steps`` random flips."""
    for _ in range(steps):
        candidates = flippable_edges(g, cert)
        if not candidates:
            return
        e = candidates[rng.randrange(len(candidates))]
        g, cert = diagonal_flip(g, cert, e)
        yield g, cert


def random_apollonian_walk(
    g: Graph, cert: FaceCertificate, steps: int, rng: random.Random
):
    """Yield (graph, certificate) after each of ``steps`` random inserts."""
    for _ in range(steps):
        face = cert.faces[rng.randrange(len(cert.faces))]
        g, cert = apollonian_insert(g, cert, face)
        yield g, cert
