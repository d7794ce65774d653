"""Recursive triangulation families: explicit graphs and closed-form polynomials.

Four families (R, TC, I, B) come with vertex-level constructions plus face
certificates; H, CM and CE12 exist only through their closed forms, which is
deliberate: guessing adjacency not defined by the construction would be worse
than refusing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InvalidParameter, UnsupportedFamily
from .exactmath import IntPoly
from .graphs import (
    FaceCertificate,
    Graph,
    cycle_graph,
    empty_graph,
    glue_on_face,
    graph_join,
    path_graph,
)

FAMILY_NAMES = ("R", "TC", "I", "B", "H", "CM", "CE12")

_Q = IntPoly((0, 1))

#: P(K_3,q) = q(q-1)(q-2)
PK3 = _Q * IntPoly((-1, 1)) * IntPoly((-2, 1))
#: P(K_4,q)
PK4 = PK3 * IntPoly((-3, 1))

#: Octahedron-strip base: lambda_TC = q^3 - 9q^2 + 29q - 32
LAMBDA_TC = IntPoly((-32, 29, -9, 1))

#: Degree-8 cofactor of the icosahedron polynomial
ICOSA_OCTIC = IntPoly((20170, -40240, 36408, -19698, 6999, -1670, 260, -24, 1))
#: f_I = (q-3) * (degree-8 cofactor); P(I_m,q) = q(q-1)(q-2) f_I^m
F_I = IntPoly((-3, 1)) * ICOSA_OCTIC

#: Single-power base of the CM family (octic with complex pair nearest tau+1)
F_CM = IntPoly((13360, -30250, 30418, -17818, 6674, -1641, 259, -24, 1))

#: Degree-8 cofactor of the 12-vertex Woodall counterexample polynomial
CE12_OCTIC = IntPoly((14314, -31915, 31668, -18337, 6800, -1658, 260, -24, 1))

#: Cubic q^3 - 9q^2 + 30q - 35 whose unique real root bounds the Woodall interval
WOODALL_CUBIC = IntPoly((-35, 30, -9, 1))

_PARAM_NAME = {
    "R": "m",
    "TC": "m",
    "I": "m",
    "B": "n",
    "H": "n",
    "CM": "m",
    "CE12": None,
}

_PARAM_MIN = {"R": 1, "TC": 2, "I": 1, "B": 5, "H": 8, "CM": 1}

# n = alpha * param + beta
_N_AFFINE = {
    "R": (1, 2),
    "TC": (3, 0),
    "I": (9, 3),
    "B": (1, 0),
    "H": (1, 0),
    "CM": (8, 3),
    "CE12": (0, 12),
}


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its member parameter (None for the fixed CE12)."""

    family: str
    param: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILY_NAMES:
            raise InvalidParameter(f"unknown family {self.family!r}")
        if self.family == "CE12":
            if self.param is not None:
                raise InvalidParameter("CE12 is a single graph, param must be absent")
            return
        if self.param is None:
            raise InvalidParameter(f"family {self.family} needs a parameter")
        lo = _PARAM_MIN[self.family]
        if self.param < lo:
            raise InvalidParameter(
                f"family {self.family} needs {_PARAM_NAME[self.family]} >= {lo}"
            )


@dataclass(frozen=True)
class FormTerm:
    """One term c(q) * lam(q)^(slope*param + offset) of a chromatic form."""

    coeff: IntPoly
    base: IntPoly
    exp_slope: int
    exp_offset: int

    def exponent(self, param: Optional[int]) -> int:
        return self.exp_slope * (param or 0) + self.exp_offset


@dataclass(frozen=True)
class ChromaticForm:
    """Sum of coefficient-weighted powers representing a family's polynomials."""

    terms: tuple
    param_name: Optional[str]

    def expand(self, param: Optional[int]) -> IntPoly:
        total = IntPoly()
        for t in self.terms:
            e = t.exponent(param)
            if e < 0:
                raise InvalidParameter(
                    f"parameter {param} gives negative exponent {e}"
                )
            total = total + t.coeff * t.base ** e
        return total

    def to_json(self) -> dict:
        return {
            "terms": [
                {
                    "c": t.coeff.to_json(),
                    "lambda": t.base.to_json(),
                    "exp": {"a": t.exp_slope, "b": t.exp_offset},
                }
                for t in self.terms
            ],
            "param": self.param_name,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ChromaticForm":
        terms = tuple(
            FormTerm(
                IntPoly.from_json(t["c"]),
                IntPoly.from_json(t["lambda"]),
                int(t["exp"]["a"]),
                int(t["exp"]["b"]),
            )
            for t in obj["terms"]
        )
        return cls(terms, obj.get("param"))


def family_n(spec: FamilySpec) -> int:
    """Vertex count alpha*param + beta of the family member."""
    alpha, beta = _N_AFFINE[spec.family]
    return alpha * (spec.param or 0) + beta


def family_alpha(family: str) -> int:
    """Growth rate of n per unit of the family parameter."""
    if family == "CE12":
        raise InvalidParameter("CE12 is not a growing family")
    return _N_AFFINE[family][0]


def family_form(spec: FamilySpec) -> ChromaticForm:
    """The family's closed-form chromatic polynomial."""
    fam = spec.family
    if fam == "R":
        return ChromaticForm((FormTerm(PK3, IntPoly((-3, 1)), 1, -1),), "m")
    if fam == "TC":
        return ChromaticForm((FormTerm(PK3, LAMBDA_TC, 1, -1),), "m")
    if fam == "I":
        return ChromaticForm((FormTerm(PK3, F_I, 1, 0),), "m")
    if fam == "B":
        return ChromaticForm(
            (
                FormTerm(_Q, IntPoly((-2, 1)), 1, -2),
                FormTerm(_Q * IntPoly((-1, 1)), IntPoly((-3, 1)), 1, -2),
                FormTerm(_Q * IntPoly((1, -3, 1)), IntPoly((-1,)), 1, -2),
            ),
            "n",
        )
    if fam == "H":
        return ChromaticForm(
            (
                FormTerm(_Q * IntPoly((-3, 1)) ** 3, IntPoly((-2, 1)), 1, -5),
                FormTerm(_Q * IntPoly((-1, 1)) * WOODALL_CUBIC, IntPoly((-3, 1)), 1, -5),
                FormTerm(
                    -(_Q * IntPoly((-3, 1)) * IntPoly((-5, 1)) * IntPoly((1, -3, 1))),
                    IntPoly((-1,)),
                    1,
                    -5,
                ),
            ),
            "n",
        )
    if fam == "CM":
        return ChromaticForm((FormTerm(PK3, F_CM, 1, 0),), "m")
    if fam == "CE12":
        return ChromaticForm(
            (FormTerm(PK3 * IntPoly((-3, 1)), CE12_OCTIC, 0, 1),), None
        )
    raise InvalidParameter(f"unknown family {fam!r}")


def form_expand(form: ChromaticForm, param: Optional[int]) -> IntPoly:
    return form.expand(param)


def family_poly(spec: FamilySpec) -> IntPoly:
    """Expand the family's closed form at its parameter (degree = family_n)."""
    p = family_form(spec).expand(spec.param)
    if p.degree != family_n(spec):
        raise InvalidParameter(
            f"expansion degree {p.degree} != n = {family_n(spec)} for {spec}"
        )
    return p


# -- explicit graphs with face certificates ----------------------------------------


def _r_family(m: int) -> tuple:
    g = graph_join(path_graph(m), path_graph(2))
    a, b = m, m + 1
    faces = [(a, b, 0), (b, a, m - 1)]
    for i in range(m - 1):
        faces.append((a, i, i + 1))
        faces.append((b, i + 1, i))
    return g, FaceCertificate.from_faces(faces)


def _tc_family(m: int) -> tuple:
    # 3-vertex layers around a cylinder: v(i,j) = 3i+j, i = 0..m-1, j in Z_3
    def v(i, j):
        return 3 * i + j % 3

    edges = []
    for i in range(m):
        for j in range(3):
            edges.append((v(i, j), v(i, (j + 1) % 3)))
    for i in range(m - 1):
        for j in range(3):
            edges.append((v(i, j), v(i + 1, j)))
            edges.append((v(i, j), v(i + 1, (j + 1) % 3)))
    faces = [(v(0, 0), v(0, 2), v(0, 1))]
    for i in range(m - 1):
        for j in range(3):
            faces.append((v(i, j), v(i + 1, j), v(i + 1, (j + 1) % 3)))
            faces.append((v(i, j), v(i + 1, (j + 1) % 3), v(i, (j + 1) % 3)))
    faces.append((v(m - 1, 0), v(m - 1, 1), v(m - 1, 2)))
    return Graph.from_edges(3 * m, edges), FaceCertificate.from_faces(faces)


def icosahedron() -> tuple:
    """The 5-regular 12-vertex icosahedron graph with its 20 faces.

    Vertex 0 on top, upper pentagon 1..5, lower pentagon 6..10, vertex 11 on
    the bottom.
    """
    up = [1 + k for k in range(5)]
    lo = [6 + k for k in range(5)]
    edges = []
    faces = []
    for k in range(5):
        k1 = (k + 1) % 5
        edges += [
            (0, up[k]),
            (up[k], up[k1]),
            (up[k], lo[k]),
            (up[k], lo[k1]),
            (lo[k], lo[k1]),
            (11, lo[k]),
        ]
        faces += [
            (0, up[k], up[k1]),
            (up[k], lo[k], lo[k1]),
            (up[k], lo[k1], up[k1]),
            (11, lo[k1], lo[k]),
        ]
    return Graph.from_edges(12, edges), FaceCertificate.from_faces(faces)


def _i_family(m: int) -> tuple:
    g, cert = icosahedron()
    for _ in range(m - 1):
        ico, ico_cert = icosahedron()
        # deterministic choice: glue onto the lexicographically smallest face
        face = min(tuple(sorted(f)) for f in cert.faces)
        g, cert = glue_on_face(g, cert, face, ico, ico_cert, ico_cert.faces[0])
    return g, cert


def _b_family(n: int) -> tuple:
    g = graph_join(empty_graph(2), cycle_graph(n - 2))
    k = n - 2
    faces = []
    for i in range(k):
        a, b = 2 + i, 2 + (i + 1) % k
        faces.append((0, a, b))
        faces.append((1, b, a))
    return g, FaceCertificate.from_faces(faces)


def family_graph(spec: FamilySpec) -> tuple:
    """Explicit (Graph, FaceCertificate) for families that define one."""
    fam = spec.family
    if fam == "R":
        return _r_family(spec.param)
    if fam == "TC":
        return _tc_family(spec.param)
    if fam == "I":
        return _i_family(spec.param)
    if fam == "B":
        return _b_family(spec.param)
    raise UnsupportedFamily(
        f"family {fam} has no vertex-level construction; use family_form"
    )
