"""The reflexive Newton simplex of the family and its combinatorics.

Exact 3-dimensional lattice polytope computations: facets, duality, lattice
point enumeration by bounding box against facet inequalities, edge lattice
lengths (surface singularity types), and facet interior points (curve
genera).  Also exposes the 19-curve incidence tree of the resolved family
member, which this module owns as a constant: the incidence structure is
fixed, and no triangulation engine is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import gcd

from . import constants as c
from .lattice import CurveGraph

Vec3 = tuple[int, int, int]


def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _reduce(v):
    g = gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]))
    return v if g in (0, 1) else (v[0] // g, v[1] // g, v[2] // g)


@dataclass(frozen=True)
class Facet:
    """Supporting inequality dot(normal, x) <= offset, tight on the facet."""

    normal: Vec3
    offset: int
    vertex_indices: tuple[int, ...]


@dataclass(frozen=True)
class LatticePolytope:
    vertices: tuple

    def __post_init__(self):
        if any(len(v) != 3 or any(not isinstance(x, int) for x in v)
               for v in self.vertices):
            raise ValueError("vertices must be integer 3-vectors")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertices")
        if _affine_rank(self.vertices) != 3:
            raise ValueError("polytope is not 3-dimensional")
        for i, v in enumerate(self.vertices):
            if not self._is_vertex(i):
                raise ValueError(f"{v} is not a vertex of the hull")

    def facets(self) -> list[Facet]:
        verts = self.vertices
        found = {}
        for i, j, k in combinations(range(len(verts)), 3):
            n = _cross(_sub(verts[j], verts[i]), _sub(verts[k], verts[i]))
            if n == (0, 0, 0):
                continue
            d = _dot(n, verts[i])
            values = [_dot(n, v) for v in verts]
            if all(x <= d for x in values):
                pass
            elif all(x >= d for x in values):
                n = (-n[0], -n[1], -n[2])
                d = -d
                values = [-x for x in values]
            else:
                continue
            n = _reduce(n)
            d = _dot(n, verts[i])
            on = tuple(m for m, v in enumerate(verts) if _dot(n, v) == d)
            found[(n, d)] = Facet(n, d, on)
        return sorted(found.values(), key=lambda f: (f.normal, f.offset))

    def _is_vertex(self, i: int) -> bool:
        # a generating point is a vertex iff the facet normals through it
        # span all of R^3
        verts = self.vertices
        normals = [f.normal for f in self.facets() if i in f.vertex_indices]
        return _affine_rank([(0, 0, 0)] + normals) == 3 if normals else False

    def edges(self) -> list[tuple[int, int]]:
        """Vertex index pairs joined by a 1-face (two facets in common)."""
        facets = self.facets()
        out = []
        for i, j in combinations(range(len(self.vertices)), 2):
            common = [f for f in facets
                      if i in f.vertex_indices and j in f.vertex_indices]
            if len({f.normal for f in common}) >= 2:
                out.append((i, j))
        return out

    def contains(self, point) -> bool:
        return all(_dot(f.normal, point) <= f.offset for f in self.facets())

    def strictly_contains(self, point) -> bool:
        return all(_dot(f.normal, point) < f.offset for f in self.facets())


def _affine_rank(points) -> int:
    if not points:
        return -1
    base = points[0]
    rows = [[Fraction(x) for x in _sub(p, base)] for p in points[1:]]
    rank = 0
    for col in range(3):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def delta() -> LatticePolytope:
    """The Newton simplex; the vertex relation v1 + v2 + 4 v3 + 6 v4 = 0
    reflects the weights (1, 1, 4, 6)."""
    v1, v2, v3, v4 = c.DELTA_VERTICES
    relation = tuple(
        v1[i] + v2[i] + 4 * v3[i] + 6 * v4[i] for i in range(3)
    )
    if relation != (0, 0, 0):
        raise AssertionError("vertex weight relation violated")
    return LatticePolytope(c.DELTA_VERTICES)


def dual_polytope(p: LatticePolytope) -> LatticePolytope:
    """{y : <y, x> >= -1 for all x in p}, for p with the origin interior."""
    if not p.strictly_contains((0, 0, 0)):
        raise ValueError("origin is not interior to the polytope")
    duals = []
    for f in p.facets():
        if f.offset <= 0:
            raise ValueError("origin is not interior to the polytope")
        n = f.normal
        if any(x % f.offset for x in n):
            raise ValueError("dual vertex is not integral; polytope not reflexive")
        duals.append((-n[0] // f.offset, -n[1] // f.offset, -n[2] // f.offset))
    return LatticePolytope(tuple(duals))


def lattice_points(p: LatticePolytope) -> list:
    """All integer points of p: bounding box filtered by facet inequalities."""
    facets = p.facets()
    lo = [min(v[i] for v in p.vertices) for i in range(3)]
    hi = [max(v[i] for v in p.vertices) for i in range(3)]
    out = []
    for point in product(*(range(lo[i], hi[i] + 1) for i in range(3))):
        if all(_dot(f.normal, point) <= f.offset for f in facets):
            out.append(point)
    return out


def interior_lattice_points(p: LatticePolytope) -> list:
    facets = p.facets()
    return [q for q in lattice_points(p)
            if all(_dot(f.normal, q) < f.offset for f in facets)]


@dataclass(frozen=True)
class EdgeReport:
    endpoints: tuple
    lattice_length: int
    singularity: str  # "A<k>" or "smooth"


def edge_reports(p: LatticePolytope) -> list[EdgeReport]:
    """Lattice length (gcd of coordinate differences) per edge.

    Length L corresponds to an A_{L-1} surface singularity along the dual
    stratum; length 1 is smooth.
    """
    out = []
    for i, j in p.edges():
        a, b = p.vertices[i], p.vertices[j]
        d = _sub(b, a)
        length = gcd(gcd(abs(d[0]), abs(d[1])), abs(d[2]))
        sing = "smooth" if length == 1 else f"A{length - 1}"
        out.append(EdgeReport((a, b), length, sing))
    return out


def facet_genus(p: LatticePolytope, facet_vertices) -> int:
    """Number of lattice points in the relative interior of a facet."""
    want = set(facet_vertices)
    match = None
    for f in p.facets():
        if {p.vertices[i] for i in f.vertex_indices} == want:
            match = f
            break
    if match is None:
        raise ValueError(f"{facet_vertices} is not a facet")
    facet_verts = [p.vertices[i] for i in match.vertex_indices]
    edge_pairs = [(p.vertices[i], p.vertices[j]) for i, j in p.edges()
                  if i in match.vertex_indices and j in match.vertex_indices]
    count = 0
    for q in lattice_points(p):
        if _dot(match.normal, q) != match.offset:
            continue
        if any(q == v for v in facet_verts):
            continue
        if any(_on_segment(q, a, b) for a, b in edge_pairs):
            continue
        count += 1
    return count


def _on_segment(q, a, b) -> bool:
    d = _sub(b, a)
    r = _sub(q, a)
    if _cross(d, r) != (0, 0, 0):
        return False
    t_num = _dot(r, d)
    t_den = _dot(d, d)
    return 0 <= t_num <= t_den


def support_shift():
    """The translation taking the hypersurface monomial support into the
    Newton simplex, with z, 1/z, x^3, y^2 landing on the four vertices."""
    dd = delta()
    shifts = set()
    for mono, vidx in c.SUPPORT_VERTEX_MAP:
        m = c.SUPPORT_MONOMIALS[mono]
        v = c.DELTA_VERTICES[vidx]
        shifts.add(_sub(v, m))
    if len(shifts) != 1:
        raise ValueError(f"vertex correspondences disagree: {shifts}")
    (s,) = shifts
    for mono, e in c.SUPPORT_MONOMIALS.items():
        shifted = (e[0] + s[0], e[1] + s[1], e[2] + s[2])
        if not dd.contains(shifted):
            raise ValueError(f"shifted monomial {mono} falls outside the simplex")
    return s


def shifted_support_points() -> dict:
    s = support_shift()
    return {
        mono: (e[0] + s[0], e[1] + s[1], e[2] + s[2])
        for mono, e in c.SUPPORT_MONOMIALS.items()
    }


# ---------------------------------------------------------------------------
# The 19-curve tree on the resolved family member
# ---------------------------------------------------------------------------


def x_curve_graph() -> CurveGraph:
    """Two chains of eight (-2)-curves with branch nodes (the fibers over
    z = 0 and z = infinity) joined through the section.

    Node order: z=0 chain, its branch, the section, z=infinity chain, its
    branch.  The trivalent chain nodes are the genus-0 coordinate curves;
    the others resolve one A11, two A2 and two A1 singularities.
    """
    return CurveGraph.build(c.X_TREE_NODES, c.X_TREE_EDGES)


def _weight_vector(chain_weights, branch_weight, side: str) -> list[int]:
    w = {f"{side}_{i}": chain_weights[i - 1] for i in range(1, 9)}
    w[f"{side}_b"] = branch_weight
    return [w.get(node, 0) for node in c.X_TREE_NODES]


def fiber_class_at_zero() -> list[int]:
    return _weight_vector(c.E8_AFFINE_CHAIN_WEIGHTS, c.E8_AFFINE_BRANCH_WEIGHT, "z0")


def fiber_class_at_infinity() -> list[int]:
    return _weight_vector(c.E8_AFFINE_CHAIN_WEIGHTS, c.E8_AFFINE_BRANCH_WEIGHT, "zi")


def section_class() -> list[int]:
    return [1 if node == "sec" else 0 for node in c.X_TREE_NODES]


def e8_side_nodes(side: str) -> tuple:
    """The eight nodes generating one E8 summand: the chain minus its
    multiplicity-one end, plus the branch node."""
    if side not in ("z0", "zi"):
        raise ValueError("side must be 'z0' or 'zi'")
    return tuple(f"{side}_{i}" for i in range(2, 9)) + (f"{side}_b",)


def genus1_curve_class() -> list[int]:
    both = {}
    for side in ("z0", "zi"):
        for i in range(1, 9):
            both[f"{side}_{i}"] = c.GENUS1_CHAIN_WEIGHTS[i - 1]
        both[f"{side}_b"] = c.GENUS1_BRANCH_WEIGHT
    both["sec"] = c.GENUS1_SECTION_WEIGHT
    return [both[node] for node in c.X_TREE_NODES]


def genus2_curve_class() -> list[int]:
    both = {}
    for side in ("z0", "zi"):
        for i in range(1, 9):
            both[f"{side}_{i}"] = c.GENUS2_CHAIN_WEIGHTS[i - 1]
        both[f"{side}_b"] = c.GENUS2_BRANCH_WEIGHT
    both["sec"] = c.GENUS2_SECTION_WEIGHT
    return [both[node] for node in c.X_TREE_NODES]
