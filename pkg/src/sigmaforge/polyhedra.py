"""Exact rational polyhedral kernel in rank <= 2.

Newton polytopes, lower-hull regular subdivisions from coefficient lifts and
Minkowski summand enumeration.  Convex hulls use Andrew's monotone chain with
integer cross products; there is no floating point anywhere in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import TooLarge, UnsupportedRank, ZeroPolynomial
from .laurent import CoefficientValuation, LaurentPolynomial, ValuationKind


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_2d(points):
    """Extreme points of a 2D point set, counterclockwise, starting at the
    lexicographically smallest vertex.  Collinear non-extreme points dropped."""
    pts = sorted(set(points))
    if len(pts) == 1:
        return pts
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        hull = hull[:1]
    return hull


def _affine_dim(points):
    pts = sorted(set(points))
    if len(pts) <= 1:
        return 0
    if len(pts[0]) == 1:
        return 1
    base = pts[0]
    for p in pts[1:]:
        for q in pts[1:]:
            if _cross(base, p, q) != 0:
                return 2
    return 1


class LatticePolytope:
    """Vertices in convex position; counterclockwise when 2-dimensional."""

    __slots__ = ("vertices", "dim", "rank")

    def __init__(self, points):
        pts = [tuple(int(c) for c in p) for p in points]
        if not pts:
            raise ValueError("empty point set")
        rank = len(pts[0])
        if rank > 2:
            raise UnsupportedRank(f"rank {rank} > 2")
        if any(len(p) != rank for p in pts):
            raise ValueError("mixed arities")
        if rank == 1:
            lo = min(p[0] for p in pts)
            hi = max(p[0] for p in pts)
            verts = [(lo,)] if lo == hi else [(lo,), (hi,)]
            dim = 0 if lo == hi else 1
        else:
            dim = _affine_dim(pts)
            if dim == 0:
                verts = [pts[0]]
            elif dim == 1:
                verts = [min(pts), max(pts)]
            else:
                verts = convex_hull_2d(pts)
        object.__setattr__(self, "vertices", tuple(verts))
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "rank", rank)

    def __setattr__(self, *a):
        raise AttributeError("LatticePolytope is immutable")

    def __eq__(self, other):
        return isinstance(other, LatticePolytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"LatticePolytope({list(self.vertices)})"

    def translated(self, shift):
        return LatticePolytope([tuple(a + b for a, b in zip(v, shift)) for v in self.vertices])

    def normalized_translation(self):
        """Translate so the lexicographically smallest vertex is the origin."""
        base = min(self.vertices)
        return self.translated(tuple(-c for c in base))

    def area2(self):
        """Twice the Euclidean area (exact integer; 0 for dim < 2)."""
        if self.dim < 2:
            return 0
        v = self.vertices
        s = 0
        for i in range(len(v)):
            x1, y1 = v[i]
            x2, y2 = v[(i + 1) % len(v)]
            s += x1 * y2 - x2 * y1
        return s

    def edge_vectors(self):
        """Counterclockwise boundary edges as (primitive direction, lattice length)."""
        if self.dim == 0:
            return []
        if self.dim == 1:
            a, b = self.vertices
            d = tuple(x - y for x, y in zip(b, a))
            g = math.gcd(*[abs(c) for c in d])
            return [(tuple(c // g for c in d), g)]
        out = []
        v = self.vertices
        for i in range(len(v)):
            a = v[i]
            b = v[(i + 1) % len(v)]
            d = (b[0] - a[0], b[1] - a[1])
            g = math.gcd(abs(d[0]), abs(d[1]))
            out.append(((d[0] // g, d[1] // g), g))
        return out

    def contains(self, point):
        """Exact membership for rational points."""
        if self.rank == 1:
            lo = self.vertices[0][0]
            hi = self.vertices[-1][0]
            return lo <= point[0] <= hi
        if self.dim == 0:
            return tuple(point) == self.vertices[0]
        if self.dim == 1:
            a, b = self.vertices
            if _cross(a, b, point) != 0:
                return False
            return all(
                min(a[i], b[i]) <= point[i] <= max(a[i], b[i]) for i in range(2)
            )
        v = self.vertices
        for i in range(len(v)):
            if _cross(v[i], v[(i + 1) % len(v)], point) < 0:
                return False
        return True

    def lattice_points(self):
        if self.rank == 1:
            lo = self.vertices[0][0]
            hi = self.vertices[-1][0]
            return [(t,) for t in range(lo, hi + 1)]
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        pts = []
        for x in range(min(xs), max(xs) + 1):
            for y in range(min(ys), max(ys) + 1):
                if self.contains((x, y)):
                    pts.append((x, y))
        return pts


def minkowski_sum(p: LatticePolytope, q: LatticePolytope) -> LatticePolytope:
    return LatticePolytope(
        [tuple(a + b for a, b in zip(u, v)) for u in p.vertices for v in q.vertices]
    )


@dataclass(frozen=True)
class LiftedSubdivision:
    """Regular subdivision of a Newton polytope from a coefficient lift."""

    cells: tuple
    heights: dict

    def polytope(self):
        return LatticePolytope([v for c in self.cells for v in c.vertices])


def newton_polytope(f: LaurentPolynomial) -> LatticePolytope:
    if f.is_zero():
        raise ZeroPolynomial("Newton polytope of the zero polynomial")
    if f.rank > 2:
        raise UnsupportedRank(f"rank {f.rank} > 2")
    return LatticePolytope(f.support())


def _lower_hull_1d(points):
    """Lower convex hull of (t, height) pairs with t integer, heights Fraction.
    Returns consecutive breakpoints t_0 < ... < t_k of the hull."""
    pts = sorted(points)
    hull = []
    for t, h in pts:
        while len(hull) >= 2:
            (t1, h1), (t2, h2) = hull[-2], hull[-1]
            # keep (t2,h2) only if it lies strictly below segment (t1,h1)-(t,h)
            if (h2 - h1) * (t - t1) <= (h - h1) * (t2 - t1):
                break
            hull.pop()
        # drop points vertically above an existing one
        if hull and hull[-1][0] == t:
            if h >= hull[-1][1]:
                continue
            hull.pop()
        hull.append((t, h))
    # second pass to remove non-vertices created by equal slopes is NOT done:
    # collinear lifted points belong to one lower face, merged by the caller.
    return hull


def regular_subdivision(f: LaurentPolynomial, v: CoefficientValuation) -> LiftedSubdivision:
    """Project the lower faces of the lifted support {(e, v(coeff_e))}.

    The zero valuation produces the trivial subdivision.
    """
    if f.is_zero():
        raise ZeroPolynomial("subdivision of the zero polynomial")
    if f.rank > 2:
        raise UnsupportedRank(f"rank {f.rank} > 2")
    if v.kind not in (ValuationKind.ZERO, ValuationKind.P_ADIC):
        raise ValueError("regular subdivisions lift the zero or a p-adic valuation")
    heights = {e: v.of_int(c) for e, c in f.terms.items()}
    np_ = newton_polytope(f)
    if v.kind is ValuationKind.ZERO:
        return LiftedSubdivision((np_,), heights)

    support = sorted(heights)
    if np_.dim == 0:
        return LiftedSubdivision((np_,), heights)

    if np_.dim == 1 or f.rank == 1:
        if f.rank == 1:
            base = min(support)
            direction = (1,)
            param = {e: e[0] - base[0] for e in support}
        else:
            base = min(support)
            d = None
            for e in support:
                if e != base:
                    diff = tuple(a - b for a, b in zip(e, base))
                    g = math.gcd(*[abs(c) for c in diff])
                    d = tuple(c // g for c in diff)
                    break
            direction = d
            param = {}
            for e in support:
                diff = tuple(a - b for a, b in zip(e, base))
                # diff = t * direction
                t = diff[0] // direction[0] if direction[0] else diff[1] // direction[1]
                param[e] = t
        hull = _lower_hull_1d([(param[e], heights[e]) for e in support])
        inv = {param[e]: e for e in support}
        cells = []
        # merge collinear consecutive hull segments into single faces
        segs = []
        for (t1, h1), (t2, h2) in zip(hull, hull[1:]):
            slope = Fraction(h2 - h1, t2 - t1)
            if segs and segs[-1][2] == slope:
                segs[-1] = (segs[-1][0], t2, slope)
            else:
                segs.append((t1, t2, slope))
        for t1, t2, _ in segs:
            cells.append(LatticePolytope([inv[t1], inv[t2]]))
        if not cells:
            cells = [np_]
        return LiftedSubdivision(tuple(cells), heights)

    # genuinely 2-dimensional support: scan planes through lifted triples
    denom = math.lcm(*[h.denominator for h in heights.values()]) if heights else 1
    lifted = {e: (e[0], e[1], int(heights[e] * denom)) for e in support}
    pts = list(lifted.values())
    facets = {}
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                p, q, r = pts[i], pts[j], pts[k]
                u = (q[0] - p[0], q[1] - p[1], q[2] - p[2])
                w = (r[0] - p[0], r[1] - p[1], r[2] - p[2])
                nx = u[1] * w[2] - u[2] * w[1]
                ny = u[2] * w[0] - u[0] * w[2]
                nz = u[0] * w[1] - u[1] * w[0]
                if nz == 0:
                    continue
                if nz < 0:
                    nx, ny, nz = -nx, -ny, -nz
                # lower facet: every lifted point on or above the plane
                on_plane = []
                ok = True
                for e, s in lifted.items():
                    val = nx * (s[0] - p[0]) + ny * (s[1] - p[1]) + nz * (s[2] - p[2])
                    if val < 0:
                        ok = False
                        break
                    if val == 0:
                        on_plane.append(e)
                if ok and len(on_plane) >= 3:
                    cell = LatticePolytope(on_plane)
                    if cell.dim == 2:
                        facets[frozenset(cell.vertices)] = cell
    cells = tuple(sorted(facets.values(), key=lambda c: c.vertices))
    if not cells:
        cells = (np_,)
    return LiftedSubdivision(cells, heights)


def _walk_polygon(edge_parts):
    """Build a polytope from CCW edge vectors (direction, count); counts may be 0."""
    pos = (0, 0)
    verts = [pos]
    for d, c in edge_parts:
        if c == 0:
            continue
        pos = (pos[0] + d[0] * c, pos[1] + d[1] * c)
        verts.append(pos)
    return LatticePolytope(verts).normalized_translation()


def minkowski_summand_pairs(
    P: LatticePolytope, max_lattice_points: int = 64
) -> list[tuple[LatticePolytope, LatticePolytope]]:
    """All unordered pairs (P1, P2) with P1 + P2 = P, up to translation,
    including the trivial pair (point, P).

    Enumerates edge-vector partitions: each edge splits as a nonnegative
    integer combination between the two summands, subject to closing up.
    """
    if len(P.lattice_points()) > max_lattice_points:
        raise TooLarge(f"more than {max_lattice_points} lattice points")
    point = LatticePolytope([(0,) * P.rank])
    P0 = P.normalized_translation()
    if P.dim == 0:
        return [(point, point)]
    if P.dim == 1:
        (d, length) = P.edge_vectors()[0]
        out = []
        for a in range(0, length // 2 + 1):
            p1 = _walk_polygon([(d, a)])
            p2 = _walk_polygon([(d, length - a)])
            out.append((p1, p2))
        return out

    edges = P.edge_vectors()
    seen = set()
    out = []
    counts = [0] * len(edges)

    def rec(i, sx, sy):
        if i == len(edges):
            if sx == 0 and sy == 0:
                p1 = _walk_polygon(list(zip([d for d, _ in edges], counts)))
                p2 = _walk_polygon(
                    [(d, L - c) for (d, L), c in zip(edges, counts)]
                )
                key = tuple(sorted([p1.vertices, p2.vertices]))
                if key not in seen:
                    seen.add(key)
                    out.append((LatticePolytope(key[0]), LatticePolytope(key[1])))
            return
        d, L = edges[i]
        for c in range(L + 1):
            counts[i] = c
            rec(i + 1, sx + d[0] * c, sy + d[1] * c)
        counts[i] = 0

    rec(0, 0, 0)
    # sanity: each pair must sum back to P (up to translation)
    out = [
        (p1, p2)
        for p1, p2 in out
        if minkowski_sum(p1, p2).normalized_translation() == P0
    ]
    return out
