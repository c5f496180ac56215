"""Tropical corner loci under coefficient valuations and the spherical
complement they assemble into.

For f = sum_e c_e x^e and a valuation v of the coefficients, the corner locus
is the set of characters chi where min_e (chi.e + v(c_e)) is attained at
least twice.  The complement Sigma^c is the spherical projection of the union
of the corner loci over the zero valuation, the p-adic valuations at the
exceptional primes, and the residue-zero loci of the irreducible factors of
f mod p.  Everything is exact: vertices are rationals, directions are
primitive integer vectors, arcs are closed.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from .errors import (
    FactorizationIncomplete,
    UnitPolynomialWarning,
    UnsupportedRank,
    WholeSphere,
    ZeroPolynomial,
    ZeroResidue,
)
from .laurent import (
    CoefficientValuation,
    LaurentPolynomial,
    ResiduePolynomial,
    ValuationKind,
    ZeroIdeal,
    content,
    prime_factors,
    reduce_mod_p,
)

VAL_ZERO = CoefficientValuation.zero()


# ---------------------------------------------------------------------------
# directions
# ---------------------------------------------------------------------------


def primitive_direction(vec):
    """Primitive integer vector with the same orientation as ``vec``."""
    fracs = [Fraction(v) for v in vec]
    if all(v == 0 for v in fracs):
        raise ValueError("zero vector has no direction")
    denom = math.lcm(*[v.denominator for v in fracs])
    ints = [int(v * denom) for v in fracs]
    g = math.gcd(*[abs(v) for v in ints])
    return tuple(v // g for v in ints)


def canonical_line_direction(vec):
    """Primitive vector with the first nonzero component positive (used for
    undirected lines, where d and -d describe the same object)."""
    d = primitive_direction(vec)
    for c in d:
        if c > 0:
            return d
        if c < 0:
            return tuple(-v for v in d)
    raise ValueError("zero vector")


def negate(d):
    return tuple(-c for c in d)


@dataclass(frozen=True)
class Character:
    """A nonzero homomorphism Q -> R, stored by its values on the basis."""

    coords: tuple

    def __init__(self, coords):
        coords = tuple(Fraction(c) for c in coords)
        object.__setattr__(self, "coords", coords)

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def direction(self):
        return primitive_direction(self.coords)


# ---------------------------------------------------------------------------
# tropical complexes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Piece:
    """One polyhedron of a corner locus.

    kind      'point' | 'segment' | 'ray' | 'line' | 'full_space'
    vertex    base point (rational tuple); None for full_space
    direction primitive integer generator for ray/line; None otherwise
    end       second endpoint for segments; None otherwise
    """

    kind: str
    vertex: tuple = None
    direction: tuple = None
    end: tuple = None

    def dim(self):
        if self.kind == "point":
            return 0
        if self.kind == "full_space":
            return None
        return 1


_KIND_ORDER = {"point": 0, "segment": 1, "ray": 2, "line": 3, "full_space": 4}


def _piece_sort_key(p):
    return (
        _KIND_ORDER[p.kind],
        p.vertex or (),
        p.direction or (),
        p.end or (),
    )


@dataclass(frozen=True)
class TropicalComplex:
    """Canonical union of points, segments, rays and lines in R^rank."""

    rank: int
    valuation: CoefficientValuation
    pieces: tuple

    def is_empty(self):
        return not self.pieces

    def is_full_space(self):
        return any(p.kind == "full_space" for p in self.pieces)

    def same_point_set(self, other):
        return self.rank == other.rank and self.pieces == other.pieces

    def contains(self, chi):
        chi = tuple(Fraction(c) for c in chi)
        for p in self.pieces:
            if _piece_contains(p, chi):
                return True
        return False


def _piece_contains(piece, chi):
    if piece.kind == "full_space":
        return True
    if piece.kind == "point":
        return tuple(piece.vertex) == chi
    v = piece.vertex
    if piece.kind == "segment":
        d = tuple(Fraction(b) - Fraction(a) for a, b in zip(v, piece.end))
    else:
        d = piece.direction
    # chi = v + t d for admissible t
    rel = tuple(Fraction(c) - Fraction(a) for c, a in zip(chi, v))
    if len(v) == 2 and rel[0] * d[1] - rel[1] * d[0] != 0:
        return False
    dd = sum(Fraction(c) * c for c in d)
    t = sum(r * c for r, c in zip(rel, d)) / dd
    if tuple(Fraction(a) + t * c for a, c in zip(v, d)) != chi:
        return False
    if piece.kind == "segment":
        return 0 <= t <= 1
    if piece.kind == "ray":
        return t >= 0
    return True


def _line_key(normal_vec, offset):
    """Canonical (primitive normal, rational offset) for the line n.chi = c."""
    n = canonical_line_direction(normal_vec)
    # scale the offset consistently with the primitivisation + sign flip
    raw = tuple(Fraction(v) for v in normal_vec)
    scale = None
    for a, b in zip(raw, n):
        if b != 0:
            scale = a / b
            break
    return n, Fraction(offset) / scale


def _line_frame(n, c):
    """Base point closest to the origin and a direction spanning the line."""
    nn = Fraction(n[0] * n[0] + n[1] * n[1])
    p0 = (c * n[0] / nn, c * n[1] / nn)
    d = (-n[1], n[0])
    return p0, d


def _merge_intervals(intervals):
    """Union of closed intervals given as (lo, hi) with None = infinite."""

    def lo_key(iv):
        return (0,) if iv[0] is None else (1, iv[0])

    out = []
    for lo, hi in sorted(intervals, key=lo_key):
        if out:
            plo, phi = out[-1]
            touches = phi is None or lo is None or lo <= phi
            if touches:
                if phi is not None and (hi is None or hi > phi):
                    out[-1] = (plo, hi)
                continue
        out.append((lo, hi))
    return out


def _pieces_from_lines(lines, points, rank):
    """Assemble canonical pieces from per-line interval unions plus candidate
    isolated points; points lying on one-dimensional pieces are dropped."""
    pieces = []
    frames = {}
    merged = {}
    for key, intervals in lines.items():
        merged[key] = _merge_intervals(intervals)
        frames[key] = _line_frame(*key)
    stray = list(points)
    for key, intervals in merged.items():
        p0, d = frames[key]
        for lo, hi in intervals:
            if lo is None and hi is None:
                pieces.append(Piece("line", p0, canonical_line_direction(d)))
            elif lo is None:
                base = tuple(a + hi * b for a, b in zip(p0, d))
                pieces.append(Piece("ray", base, negate(d)))
            elif hi is None:
                base = tuple(a + lo * b for a, b in zip(p0, d))
                pieces.append(Piece("ray", base, tuple(d)))
            elif lo == hi:
                stray.append(tuple(a + lo * b for a, b in zip(p0, d)))
            else:
                a = tuple(x + lo * y for x, y in zip(p0, d))
                b = tuple(x + hi * y for x, y in zip(p0, d))
                pieces.append(Piece("segment", a, None, b))
    kept = []
    for pt in dict.fromkeys(stray):
        if not any(_piece_contains(p, pt) for p in pieces):
            kept.append(Piece("point", pt))
    pieces.extend(kept)
    return tuple(sorted(pieces, key=_piece_sort_key))


def _support_heights(f, v):
    if isinstance(f, ResiduePolynomial):
        if v.kind is not ValuationKind.RESIDUE_ZERO or v.p != f.prime:
            raise ValueError("residue polynomials pair with their residue-zero valuation")
        return {e: Fraction(0) for e in f.terms}
    if v.kind is ValuationKind.RESIDUE_ZERO:
        raise ValueError("residue-zero valuation requires a residue polynomial factor")
    return {e: v.of_int(c) for e, c in f.terms.items()}


def _min_attained_twice(support, chi):
    best = None
    count = 0
    for e, h in support.items():
        val = h + sum(Fraction(c) * x for c, x in zip(chi, e))
        if best is None or val < best:
            best, count = val, 1
        elif val == best:
            count += 1
    return count >= 2


def corner_locus(f, v: CoefficientValuation = VAL_ZERO) -> TropicalComplex:
    """Exact corner locus of the lifted support of f under v.

    A unit (+-monomial) yields the empty complex and a warning, the zero
    ideal yields full space.
    """
    if isinstance(f, ZeroIdeal):
        if f.rank > 2:
            raise UnsupportedRank(f"rank {f.rank} > 2")
        return TropicalComplex(f.rank, v, (Piece("full_space"),))
    if f.is_zero():
        raise ZeroPolynomial("corner locus of the zero polynomial")
    if f.rank > 2:
        raise UnsupportedRank(f"rank {f.rank} > 2")
    support = _support_heights(f, v)
    if len(support) == 1:
        if (isinstance(f, ResiduePolynomial) and f.is_monomial()) or (
            isinstance(f, LaurentPolynomial) and f.is_unit()
        ):
            warnings.warn(
                "corner locus of a unit is empty: the quotient A is the zero ring",
                UnitPolynomialWarning,
                stacklevel=2,
            )
        return TropicalComplex(f.rank, v, ())

    exps = sorted(support)
    if f.rank == 1:
        points = []
        for i in range(len(exps)):
            for j in range(i + 1, len(exps)):
                e1, e2 = exps[i], exps[j]
                chi = (Fraction(support[e2] - support[e1], e1[0] - e2[0]),)
                if _min_attained_twice(support, chi):
                    points.append(chi)
        pieces = tuple(
            Piece("point", pt) for pt in sorted(dict.fromkeys(points))
        )
        return TropicalComplex(1, v, pieces)

    lines = {}
    for i in range(len(exps)):
        for j in range(i + 1, len(exps)):
            e1, e2 = exps[i], exps[j]
            h1, h2 = support[e1], support[e2]
            nvec = tuple(a - b for a, b in zip(e1, e2))
            key = _line_key(nvec, h2 - h1)
            p0, d = _line_frame(*key)
            lo, hi = None, None
            empty = False
            for e, h in support.items():
                if e == e1 or e == e2:
                    continue
                a = sum(x * (p - q) for x, p, q in zip(d, e1, e))
                b = (h - h1) - sum(x * (p - q) for x, p, q in zip(p0, e1, e))
                if a == 0:
                    if b < 0:
                        empty = True
                        break
                elif a > 0:
                    bound = Fraction(b, a)
                    if hi is None or bound < hi:
                        hi = bound
                else:
                    bound = Fraction(b, a)
                    if lo is None or bound > lo:
                        lo = bound
            if empty:
                continue
            if lo is not None and hi is not None and lo > hi:
                continue
            lines.setdefault(key, []).append((lo, hi))
    return TropicalComplex(2, v, _pieces_from_lines(lines, [], 2))


def union_complexes(complexes, rank, valuation=None) -> TropicalComplex:
    """Union of corner loci as a point set, re-canonicalised."""
    valuation = valuation if valuation is not None else VAL_ZERO
    if any(tc.is_full_space() for tc in complexes):
        return TropicalComplex(rank, valuation, (Piece("full_space"),))
    lines = {}
    points = []
    for tc in complexes:
        for p in tc.pieces:
            if p.kind == "point":
                points.append(tuple(p.vertex))
                continue
            if p.kind == "segment":
                dvec = tuple(
                    Fraction(b) - Fraction(a) for a, b in zip(p.vertex, p.end)
                )
            else:
                dvec = p.direction
            if rank == 1:
                points.append(tuple(p.vertex))
                continue
            n = (-dvec[1], dvec[0])
            c = sum(Fraction(x) * y for x, y in zip(n, p.vertex))
            key = _line_key(n, c)
            p0, d = _line_frame(*key)
            dd = Fraction(d[0] * d[0] + d[1] * d[1])

            def param(pt):
                return sum((Fraction(a) - b) * c for a, b, c in zip(pt, p0, d)) / dd

            if p.kind == "line":
                lines.setdefault(key, []).append((None, None))
            elif p.kind == "ray":
                t = param(p.vertex)
                fwd = sum(a * b for a, b in zip(p.direction, d)) > 0
                lines.setdefault(key, []).append((t, None) if fwd else (None, t))
            else:
                t1, t2 = sorted((param(p.vertex), param(p.end)))
                lines.setdefault(key, []).append((t1, t2))
    if rank == 1:
        pieces = tuple(Piece("point", pt) for pt in sorted(dict.fromkeys(points)))
        return TropicalComplex(1, valuation, pieces)
    return TropicalComplex(rank, valuation, _pieces_from_lines(lines, points, rank))


def residue_branches(f: LaurentPolynomial, p: int) -> list[TropicalComplex]:
    """One residue-zero corner locus per irreducible factor of f mod p.

    Monomial factors contribute nothing; an identically-zero reduction means
    p divides the content and is reported upstream as torsion.
    """
    fbar = reduce_mod_p(f, p)
    if fbar.is_zero():
        raise ZeroResidue(f"f vanishes mod {p}: {p} divides the content")
    from .rings import factor_mod_p

    v = CoefficientValuation.residue_zero(p)
    out = []
    for g in factor_mod_p(f, p):
        if g.is_monomial():
            continue
        out.append(corner_locus(g, v))
    return out


def candidate_primes(f: LaurentPolynomial) -> list[int]:
    """Primes dividing some coefficient; the only possible exceptional primes."""
    primes = set()
    for c in f.terms.values():
        primes.update(prime_factors(c))
    return sorted(primes)


def exceptional_primes(f: LaurentPolynomial) -> list[int]:
    """Primes where the p-adic corner locus or the residue branches differ
    from the zero-valuation locus."""
    if f.is_zero():
        raise ZeroPolynomial("exceptional primes of the zero polynomial")
    delta0 = corner_locus(f, VAL_ZERO)
    out = []
    cont = content(f)
    for p in candidate_primes(f):
        if cont % p == 0:
            out.append(p)
            continue
        if not corner_locus(f, CoefficientValuation.p_adic(p)).same_point_set(delta0):
            out.append(p)
            continue
        branches = residue_branches(f, p)
        union = union_complexes(branches, f.rank)
        if not union.same_point_set(
            union_complexes([delta0], f.rank)
        ):
            out.append(p)
    return out


def verify_nonexceptional(f: LaurentPolynomial, bound: int = 13) -> list[int]:
    """Test hook: re-check primes up to ``bound`` that divide no coefficient;
    returns any that unexpectedly behave exceptionally (should be empty)."""
    from .laurent import is_prime

    delta0 = corner_locus(f, VAL_ZERO)
    cands = set(candidate_primes(f))
    bad = []
    for p in range(2, bound + 1):
        if not is_prime(p) or p in cands:
            continue
        if not corner_locus(f, CoefficientValuation.p_adic(p)).same_point_set(delta0):
            bad.append(p)
            continue
        union = union_complexes(residue_branches(f, p), f.rank)
        if not union.same_point_set(union_complexes([delta0], f.rank)):
            bad.append(p)
    return bad


# ---------------------------------------------------------------------------
# spherical sets
# ---------------------------------------------------------------------------


def _half(d):
    x, y = d
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def angle_lt(a, b):
    """Strict counterclockwise order of distinct directions, starting at (1,0)."""
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha < hb
    return a[0] * b[1] - a[1] * b[0] > 0


def _angle_cmp(a, b):
    if a == b:
        return 0
    return -1 if angle_lt(a, b) else 1


ANGLE_KEY = cmp_to_key(_angle_cmp)


def arc_contains(start, end, d):
    """Membership in the closed CCW arc from start to end (start != end)."""
    if d == start or d == end:
        return True
    if angle_lt(start, end):
        return angle_lt(start, d) and angle_lt(d, end)
    return angle_lt(start, d) or angle_lt(d, end)


@dataclass(frozen=True)
class SphericalSet:
    """Closed subset of the character sphere: isolated points plus closed
    counterclockwise arcs, normalised (arcs merged, points absorbed)."""

    rank: int
    points: tuple = ()
    arcs: tuple = ()
    whole: bool = False

    @classmethod
    def assemble(cls, rank, points=(), arcs=(), whole=False):
        points = [tuple(p) for p in points]
        arcs = [(tuple(s), tuple(e)) for s, e in arcs if tuple(s) != tuple(e)]
        if rank == 1:
            pts = sorted(dict.fromkeys(points), reverse=True)
            if whole or len(pts) == 2:
                return cls(1, ((1,), (-1,)), (), True)
            return cls(1, tuple(pts), (), False)
        if whole:
            return cls(2, (), (), True)
        if not arcs:
            pts = sorted(dict.fromkeys(points), key=ANGLE_KEY)
            return cls(2, tuple(pts), (), False)
        dirs = sorted(
            dict.fromkeys([d for a in arcs for d in a] + points), key=ANGLE_KEY
        )
        rank_of = {d: i for i, d in enumerate(dirs)}
        m = len(dirs)
        covered_pt = [False] * m
        covered_gap = [False] * m
        for s, e in arcs:
            i, j = rank_of[s], rank_of[e]
            k = i
            covered_pt[k] = True
            while k != j:
                covered_gap[k] = True
                k = (k + 1) % m
                covered_pt[k] = True
        for p in points:
            covered_pt[rank_of[p]] = True
        if all(covered_gap):
            return cls(2, (), (), True)
        # maximal cyclic runs of covered gaps
        merged = []
        in_run = set()
        for i in range(m):
            if covered_gap[i] and not covered_gap[(i - 1) % m]:
                j = i
                while covered_gap[j % m]:
                    j += 1
                run_pts = [(k % m) for k in range(i, j + 1)]
                in_run.update(run_pts)
                merged.append((dirs[i], dirs[j % m]))
        isolated = [
            dirs[i] for i in range(m) if covered_pt[i] and i not in in_run
        ]
        merged.sort(key=lambda a: ANGLE_KEY(a[0]))
        isolated.sort(key=ANGLE_KEY)
        return cls(2, tuple(isolated), tuple(merged), False)

    def normalized(self):
        return SphericalSet.assemble(self.rank, self.points, self.arcs, self.whole)

    def is_empty(self):
        return not self.whole and not self.points and not self.arcs

    def contains(self, d):
        d = tuple(d)
        if self.whole:
            return True
        if d in self.points:
            return True
        if self.rank == 1:
            return False
        return any(arc_contains(s, e, d) for s, e in self.arcs)

    def directions(self):
        """Isolated points plus arc endpoints, in angular order."""
        dirs = list(self.points) + [d for a in self.arcs for d in a]
        if self.rank == 1:
            return sorted(dict.fromkeys(dirs), reverse=True)
        return sorted(dict.fromkeys(dirs), key=ANGLE_KEY)


def project_complex(tc: TropicalComplex):
    """Spherical projection of a corner locus: (points, arcs, whole).

    Pieces through the origin land on antipodal direction pairs; other pieces
    sweep arcs whose open limit endpoints are added by closure.
    """
    points = []
    arcs = []
    whole = False
    for p in tc.pieces:
        if p.kind == "full_space":
            whole = True
            continue
        if tc.rank == 1:
            if p.kind == "point":
                (x,) = p.vertex
                if x != 0:
                    points.append((1,) if x > 0 else (-1,))
            else:
                whole = True
            continue
        if p.kind == "point":
            if any(c != 0 for c in p.vertex):
                points.append(primitive_direction(p.vertex))
            continue
        if p.kind == "segment":
            a, b = p.vertex, p.end
            az = all(c == 0 for c in a)
            bz = all(c == 0 for c in b)
            if az and bz:
                continue
            if az:
                points.append(primitive_direction(b))
                continue
            if bz:
                points.append(primitive_direction(a))
                continue
            da, db = primitive_direction(a), primitive_direction(b)
            cr = a[0] * b[1] - a[1] * b[0]
            if cr == 0:
                if da == db:
                    points.append(da)
                else:  # origin interior to the segment
                    points.extend([da, db])
            elif cr > 0:
                arcs.append((da, db))
            else:
                arcs.append((db, da))
            continue
        if p.kind == "ray":
            base, d = p.vertex, p.direction
            if all(c == 0 for c in base):
                points.append(tuple(d))
                continue
            cr = base[0] * d[1] - base[1] * d[0]
            if cr == 0:
                dot = sum(Fraction(a) * b for a, b in zip(base, d))
                if dot > 0:
                    points.append(tuple(d))
                else:  # origin in the relative interior
                    points.extend([primitive_direction(base), tuple(d)])
            elif cr > 0:
                arcs.append((primitive_direction(base), tuple(d)))
            else:
                arcs.append((tuple(d), primitive_direction(base)))
            continue
        # line
        p0, d = p.vertex, p.direction
        if all(c == 0 for c in p0):
            points.extend([tuple(d), negate(d)])
        else:
            cr = d[0] * p0[1] - d[1] * p0[0]
            if cr > 0:
                arcs.append((tuple(d), negate(d)))
            else:
                arcs.append((negate(d), tuple(d)))
    return points, arcs, whole


# ---------------------------------------------------------------------------
# diagnostics
# ---------------------------------------------------------------------------


def antipodal_witness(S: SphericalSet):
    """A pair (d, -d) both contained in S, or None."""
    S = S.normalized()
    if S.whole:
        return ((1, 0), (-1, 0)) if S.rank == 2 else ((1,), (-1,))
    for d in S.directions():
        nd = negate(d)
        if S.contains(nd):
            return (d, nd)
    return None


def two_tame(S: SphericalSet) -> bool:
    """True iff S contains no antipodal pair (S(Q) = Sigma u -Sigma)."""
    return antipodal_witness(S) is None


def boundary_points(S: SphericalSet):
    """Endpoints of the closed arcs plus the isolated points."""
    S = S.normalized()
    if S.whole:
        raise WholeSphere("the whole sphere has no boundary points")
    return S.directions()


def sphere_diagnostics(S: SphericalSet) -> dict:
    """great_circle: do the arcs cover the circle; spans: do the occurring
    directions span R^2."""
    if S.rank != 2:
        raise UnsupportedRank("sphere diagnostics are rank-2 only")
    S = S.normalized()
    if S.whole:
        return {"great_circle": True, "spans": True}
    dirs = S.directions()
    spans = False
    for i in range(len(dirs)):
        for j in range(i + 1, len(dirs)):
            if dirs[i][0] * dirs[j][1] - dirs[i][1] * dirs[j][0] != 0:
                spans = True
    return {"great_circle": False, "spans": spans}


# ---------------------------------------------------------------------------
# membership oracles
# ---------------------------------------------------------------------------


def _valuation_families(f: LaurentPolynomial):
    """Support/height maps of every relevant corner locus: the zero valuation,
    the p-adic lift and the residue factors for each coefficient prime."""
    fams = [{e: Fraction(0) for e in f.terms}]
    cont = content(f)
    for p in candidate_primes(f):
        if cont % p == 0:
            continue  # degenerate; handled as torsion upstream
        v = CoefficientValuation.p_adic(p)
        fams.append({e: v.of_int(c) for e, c in f.terms.items()})
        from .rings import factor_mod_p

        for g in factor_mod_p(f, p):
            if not g.is_monomial():
                fams.append({e: Fraction(0) for e in g.terms})
    return fams


def membership(f: LaurentPolynomial, chi) -> bool:
    """Does chi itself lie on some relevant corner locus?  Evaluated directly
    from the min-attained-twice predicate, no complexes constructed."""
    coords = chi.coords if isinstance(chi, Character) else tuple(Fraction(c) for c in chi)
    if all(c == 0 for c in coords):
        raise ValueError("chi must be nonzero")
    return any(_min_attained_twice(fam, coords) for fam in _valuation_families(f))


def direction_membership(f: LaurentPolynomial, d) -> bool:
    """Does the open ray R_{>0} d meet some relevant corner locus?

    Exact sweep: candidate radii from pairwise ties, tested with the
    min-attained-twice predicate.
    """
    d = tuple(Fraction(c) for c in d)
    if all(c == 0 for c in d):
        raise ValueError("direction must be nonzero")
    for fam in _valuation_families(f):
        exps = sorted(fam)
        slopes = {e: sum(x * c for x, c in zip(d, e)) for e in exps}
        breakpoints = set()
        for i in range(len(exps)):
            for j in range(i + 1, len(exps)):
                a = slopes[exps[i]] - slopes[exps[j]]
                b = fam[exps[j]] - fam[exps[i]]
                if a != 0:
                    lam = b / a
                    if lam > 0:
                        breakpoints.add(lam)
        candidates = sorted(breakpoints)
        probes = list(candidates)
        if candidates:
            probes.append(candidates[0] / 2)
            probes.append(candidates[-1] + 1)
            for u, w in zip(candidates, candidates[1:]):
                probes.append((u + w) / 2)
        else:
            probes.append(Fraction(1))
        for lam in probes:
            if lam <= 0:
                continue
            if _min_attained_twice(fam, tuple(lam * c for c in d)):
                return True
    return False


# ---------------------------------------------------------------------------
# assembly
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SigmaReport:
    """Sigma^c with its per-valuation constituents and polyhedral diagnostics."""

    rank: int
    sigma_complement: SphericalSet
    per_valuation: dict
    exceptional_primes: tuple
    two_tame: bool
    boundary: tuple
    great_circle: bool
    spans: bool
    notes: tuple = ()
    incomplete_primes: tuple = ()

    @property
    def conditional(self):
        return bool(self.incomplete_primes)


def sigma_complement(f) -> SigmaReport:
    """Assemble Sigma^c over the zero valuation, the exceptional p-adic
    valuations and their residue branches, then run the sphere diagnostics.

    Accepts a LaurentPolynomial or a ZeroIdeal (whole sphere).
    """
    rank = f.rank
    if rank not in (1, 2):
        raise UnsupportedRank(f"rank {rank} not in {{1, 2}}")
    notes = []
    incomplete = []
    per_valuation = {}

    if isinstance(f, ZeroIdeal):
        tc = corner_locus(f, VAL_ZERO)
        per_valuation[VAL_ZERO] = tc
        S = SphericalSet.assemble(rank, whole=True)
        return SigmaReport(
            rank=rank,
            sigma_complement=S,
            per_valuation=per_valuation,
            exceptional_primes=(),
            two_tame=two_tame(S),
            boundary=(),
            great_circle=(rank == 2),
            spans=True,
            notes=("zero ideal: Sigma^c is the whole sphere",),
        )

    if f.is_zero():
        raise ZeroPolynomial("sigma complement of the zero polynomial")

    delta0 = corner_locus(f, VAL_ZERO)
    per_valuation[VAL_ZERO] = delta0
    points, arcs, whole = project_complex(delta0)

    cont = content(f)
    if cont != 1:
        for p in prime_factors(cont):
            # f mod p vanishes identically, so A/pA is the full Laurent ring
            # and every character extends: the whole sphere sits in Sigma^c.
            notes.append(f"prime {p} divides the content: residue locus is full space")
            per_valuation[CoefficientValuation.residue_zero(p)] = TropicalComplex(
                rank, CoefficientValuation.residue_zero(p), (Piece("full_space"),)
            )
            whole = True

    exceptional = []
    for p in exceptional_primes(f):
        exceptional.append(p)
        if cont % p == 0:
            continue
        vp = CoefficientValuation.p_adic(p)
        tc = corner_locus(f, vp)
        per_valuation[vp] = tc
        pts, ars, wh = project_complex(tc)
        points += pts
        arcs += ars
        whole = whole or wh
        try:
            branches = residue_branches(f, p)
        except FactorizationIncomplete:
            incomplete.append(p)
            notes.append(f"factorisation of f mod {p} incomplete: report is conditional")
            continue
        vr = CoefficientValuation.residue_zero(p)
        per_valuation[vr] = union_complexes(branches, rank, vr)
        for tc in branches:
            pts, ars, wh = project_complex(tc)
            points += pts
            arcs += ars
            whole = whole or wh

    S = SphericalSet.assemble(rank, points, arcs, whole)
    tame = two_tame(S)
    boundary = () if S.whole else tuple(boundary_points(S))
    if rank == 2:
        diag = sphere_diagnostics(S)
        great, spans = diag["great_circle"], diag["spans"]
    else:
        great = False
        spans = S.whole or bool(S.points)
    return SigmaReport(
        rank=rank,
        sigma_complement=S,
        per_valuation=per_valuation,
        exceptional_primes=tuple(exceptional),
        two_tame=tame,
        boundary=boundary,
        great_circle=great,
        spans=spans,
        notes=tuple(notes),
        incomplete_primes=tuple(incomplete),
    )
