"""Seeded generators of test corpora: triangulation walks and small random graphs.

Everything here is deterministic given the seed, so property runs are
reproducible in CI and from the command line.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Optional

from .chromatic import MemoCache, chromatic_poly
from .exactmath import IntPoly
from .families import FamilySpec, family_graph, family_poly
from .graphs import (
    FaceCertificate,
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    graph_join,
    k4_with_certificate,
    path_graph,
    random_apollonian_walk,
    random_flip_walk,
    triangle_with_certificate,
)


@dataclass(frozen=True)
class TriangulationCase:
    """A corpus member: validated triangulation plus its exact polynomial."""

    name: str
    graph: Graph
    certificate: FaceCertificate
    poly: IntPoly


def _family_members(max_r: int, max_tc: int, max_b: int, max_i: int):
    yield "K3", *triangle_with_certificate(), None
    yield "K4", *k4_with_certificate(), None
    for m in range(1, max_r + 1):
        spec = FamilySpec("R", m)
        g, c = family_graph(spec)
        yield f"R_{m}", g, c, family_poly(spec)
    for m in range(2, max_tc + 1):
        spec = FamilySpec("TC", m)
        g, c = family_graph(spec)
        yield f"TC_{m}", g, c, family_poly(spec)
    for n in range(5, max_b + 1):
        spec = FamilySpec("B", n)
        g, c = family_graph(spec)
        yield f"B_{n}", g, c, family_poly(spec)
    for m in range(1, max_i + 1):
        spec = FamilySpec("I", m)
        g, c = family_graph(spec)
        yield f"I_{m}", g, c, family_poly(spec)


def triangulation_corpus(
    count: int,
    seed: int,
    max_r: int = 10,
    max_tc: int = 6,
    max_b: int = 20,
    max_i: int = 1,
    cache: Optional[MemoCache] = None,
) -> Iterator[TriangulationCase]:
    """Yield ``count`` validated triangulations with exact polynomials.

    Family members come first (closed forms), then alternating Apollonian
    and diagonal-flip walks (engine-computed) fill the remainder.
    """
    rng = random.Random(seed)
    if cache is None:
        cache = MemoCache()
    produced = 0
    for name, g, c, p in _family_members(max_r, max_tc, max_b, max_i):
        if produced >= count:
            return
        if p is None:
            p = chromatic_poly(g, cache=cache)
        yield TriangulationCase(name, g, c, p)
        produced += 1

    apo_bases = [("K4", k4_with_certificate()), ("TC_2", family_graph(FamilySpec("TC", 2)))]
    flip_bases = [
        ("TC_2", family_graph(FamilySpec("TC", 2))),
        ("TC_3", family_graph(FamilySpec("TC", 3))),
        ("TC_4", family_graph(FamilySpec("TC", 4))),
    ]
    walk_id = 0
    while produced < count:
        walk_id += 1
        if walk_id % 2:
            base_name, (g, c) = apo_bases[rng.randrange(len(apo_bases))]
            steps = rng.randint(4, 20)
            walk = random_apollonian_walk(g, c, steps, rng)
            kind = "apo"
        else:
            base_name, (g, c) = flip_bases[rng.randrange(len(flip_bases))]
            steps = rng.randint(4, 16)
            walk = random_flip_walk(g, c, steps, rng)
            kind = "flip"
        for i, (g2, c2) in enumerate(walk):
            if produced >= count:
                return
            p = chromatic_poly(g2, cache=cache)
            yield TriangulationCase(f"{kind}({base_name})#{walk_id}.{i}", g2, c2, p)
            produced += 1


def small_graph_corpus(count: int, seed: int) -> Iterator[Graph]:
    """Yield ``count`` simple graphs with n <= 8, drawn from joins, diagonal
    flips, Apollonian inserts, and family members."""
    rng = random.Random(seed)
    part_builders = (path_graph, cycle_graph, complete_graph, empty_graph)
    flip_bases = [
        ("oct", family_graph(FamilySpec("TC", 2))),
        ("B7", family_graph(FamilySpec("B", 7))),
        ("B8", family_graph(FamilySpec("B", 8))),
    ]
    family_pool = [
        family_graph(FamilySpec("R", m))[0] for m in range(1, 7)
    ] + [
        family_graph(FamilySpec("TC", 2))[0],
    ] + [
        family_graph(FamilySpec("B", n))[0] for n in range(5, 9)
    ]

    produced = 0
    while produced < count:
        kind = rng.randrange(4)
        if kind == 0:
            # join of two small standard parts, total n <= 7
            while True:
                na = rng.randint(1, 5)
                nb = rng.randint(1, 5)
                if 4 <= na + nb <= 7:
                    break
            ga = _random_part(rng, part_builders, na)
            gb = _random_part(rng, part_builders, nb)
            yield graph_join(ga, gb)
        elif kind == 1:
            _, (g, c) = flip_bases[rng.randrange(len(flip_bases))]
            last = g
            for g2, _ in random_flip_walk(g, c, rng.randint(1, 10), rng):
                last = g2
            yield last
        elif kind == 2:
            g, c = (
                triangle_with_certificate() if rng.random() < 0.3 else k4_with_certificate()
            )
            last = g
            for g2, _ in random_apollonian_walk(g, c, rng.randint(1, 8 - g.n), rng):
                last = g2
            yield last
        else:
            yield family_pool[rng.randrange(len(family_pool))]
        produced += 1


def _random_part(rng: random.Random, builders, n: int) -> Graph:
    builder = builders[rng.randrange(len(builders))]
    if builder is cycle_graph and n < 3:
        builder = path_graph
    return builder(n)
