"""Ring-theoretic hypotheses of the non-self-similarity criterion:
Z-torsion-freeness, irreducibility over Q and F_p, the mod-p domain check
with its resultant certificate, algebraicity of monomial images, the Krull
dimension verdict and bounded factorisation over F_p.

Factor searches are bounded and honest: when a bound is hit the verdict is
Undetermined / FactorizationIncomplete, never a guess.
"""

from __future__ import annotations

import math
import os
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    FactorizationIncomplete,
    NotIrreducible,
    UnitPolynomial,
    UnitPolynomialWarning,
    ZeroPolynomial,
    ZeroResidue,
)
from .laurent import (
    LaurentPolynomial,
    ResiduePolynomial,
    ZeroIdeal,
    content,
    prime_factors,
    reduce_mod_p,
    resultant_univariate,
)
from .polyhedra import LatticePolytope, minkowski_summand_pairs, newton_polytope

DEFAULT_SUPPORT_BOUND = 8
_SEARCH_BUDGET = 200_000


def _support_bound():
    raw = os.environ.get("SIGMA_FORGE_MAX_SUPPORT")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return DEFAULT_SUPPORT_BOUND


@dataclass(frozen=True)
class IrreducibilityStatus:
    verdict: str  # Irreducible | Reducible | Unit | Zero | Undetermined
    field: str  # "Q" or "F_p"
    method: str | None = None  # LinearInVariable | MinkowskiSearch | ModPLift
    witnesses: tuple = ()

    def is_irreducible(self):
        return self.verdict == "Irreducible"


@dataclass(frozen=True)
class MonomialDirectionSet:
    directions: tuple


# ---------------------------------------------------------------------------
# univariate helpers (dense coefficient lists, ascending degree)
# ---------------------------------------------------------------------------


def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _uni_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _uni_divmod_q(a, b):
    a = _trim([Fraction(c) for c in a])
    b = _trim([Fraction(c) for c in b])
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while a and len(a) >= len(b):
        k = len(a) - len(b)
        f = a[-1] / b[-1]
        q[k] = f
        for i, c in enumerate(b):
            a[i + k] -= f * c
        _trim(a)
    return _trim(q), a


def _uni_gcd_q(a, b):
    a = _trim([Fraction(c) for c in a])
    b = _trim([Fraction(c) for c in b])
    while b:
        _, r = _uni_divmod_q(a, b)
        a, b = b, _trim(r)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _uni_mod_p(a, p):
    return _trim([c % p for c in a])


def _uni_divmod_p(a, b, p):
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    inv = pow(b[-1], -1, p)
    q = [0] * max(1, len(a) - len(b) + 1)
    while a and len(a) >= len(b):
        k = len(a) - len(b)
        f = (a[-1] * inv) % p
        q[k] = f
        for i, c in enumerate(b):
            a[i + k] = (a[i + k] - f * c) % p
        _trim(a)
    return _trim(q), a


def _uni_gcd_p(a, b, p):
    a = _uni_mod_p(list(a), p)
    b = _uni_mod_p(list(b), p)
    while b:
        _, r = _uni_divmod_p(a, b, p)
        a, b = b, r
    return a


def _eval_q(coeffs, r):
    val = Fraction(0)
    for c in reversed(coeffs):
        val = val * r + c
    return val


def _rational_roots(coeffs):
    """Rational roots (with multiplicity) and the rootless cofactor."""
    c = _trim([Fraction(x) for x in coeffs])
    roots = []
    while c and c[0] == 0:
        roots.append(Fraction(0))
        c = c[1:]
    if len(c) <= 1:
        return roots, c
    den = math.lcm(*[x.denominator for x in c])
    ci = [int(x * den) for x in c]
    g = math.gcd(*[abs(x) for x in ci])
    ci = [x // g for x in ci]

    def divisors(n):
        n = abs(n)
        return [d for d in range(1, n + 1) if n % d == 0]

    cands = sorted(
        {
            Fraction(s * pn, qn)
            for pn in divisors(ci[0])
            for qn in divisors(ci[-1])
            for s in (1, -1)
        }
    )
    c = [Fraction(x) for x in ci]
    changed = True
    while changed and len(c) > 1:
        changed = False
        for r in cands:
            if _eval_q(c, r) == 0:
                q, rem = _uni_divmod_q(c, [-r, Fraction(1)])
                assert not rem
                c = q
                roots.append(r)
                changed = True
                break
    return roots, c


def _is_square_fraction(x: Fraction):
    if x < 0:
        return None
    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def factor_univariate_q(coeffs):
    """Factor an integer/rational univariate polynomial over Q.

    Returns (factors, complete): monic-normalised factor coefficient lists
    with multiplicity (the overall scalar is dropped).  Complete up to degree
    4; a rootless residual of degree >= 5 is returned whole with
    complete=False.
    """
    roots, rest = _rational_roots(coeffs)
    factors = [[-r, Fraction(1)] for r in roots]
    rest = _trim([Fraction(c) for c in rest])
    deg = len(rest) - 1
    if deg <= 0:
        return factors, True
    lead = rest[-1]
    monic = [c / lead for c in rest]
    if deg == 1:
        factors.append(monic)
        return factors, True
    if deg == 2:
        b, c0 = monic[1], monic[0]
        root = _is_square_fraction(b * b - 4 * c0)
        if root is None:
            factors.append(monic)
        else:
            factors.append([-(-b + root) / 2, Fraction(1)])
            factors.append([-(-b - root) / 2, Fraction(1)])
        return factors, True
    if deg == 3:
        # a rootless cubic is irreducible over Q
        factors.append(monic)
        return factors, True
    if deg == 4:
        den = math.lcm(*[c.denominator for c in rest])
        ci = [int(c * den) for c in rest]
        g = math.gcd(*[abs(x) for x in ci])
        ci = [x // g for x in ci]
        bound = 2 * (1 + max(abs(c) for c in ci))

        def divpairs(n):
            out = []
            for d in range(1, abs(n) + 1):
                if n % d == 0:
                    out.extend([(d, n // d), (-d, -(n // d))])
            return out

        for a1, a2 in divpairs(ci[4]):
            for c1, c2 in divpairs(ci[0]):
                for b1 in range(-bound, bound + 1):
                    num = ci[3] - a2 * b1
                    if a1 == 0 or num % a1:
                        continue
                    b2 = num // a1
                    if _uni_mul([c1, b1, a1], [c2, b2, a2]) == ci:
                        s1, _ = factor_univariate_q([c1, b1, a1])
                        s2, _ = factor_univariate_q([c2, b2, a2])
                        return factors + s1 + s2, True
        factors.append(monic)
        return factors, True
    factors.append(monic)
    return factors, False


def _monic_irreducibles(p, maxdeg):
    """Monic irreducibles over F_p of degree 2..maxdeg, ascending, by sieve."""
    by_deg = {1: [[a, 1] for a in range(p)]}
    out = []
    for d in range(2, maxdeg + 1):
        irr = []
        for tail in _tuples(p, d):
            poly = list(tail) + [1]
            reducible = False
            for e in range(1, d // 2 + 1):
                for g in by_deg.get(e, []):
                    _, rem = _uni_divmod_p(poly, g, p)
                    if not rem:
                        reducible = True
                        break
                if reducible:
                    break
            if not reducible:
                irr.append(poly)
        by_deg[d] = irr
        out.extend(irr)
    return out


def _tuples(p, d):
    if d == 0:
        yield ()
        return
    for rest in _tuples(p, d - 1):
        for a in range(p):
            yield rest + (a,)


def factor_univariate_p(coeffs, p):
    """Complete monic irreducible factorisation over F_p, with multiplicity;
    raises FactorizationIncomplete beyond the deterministic budget."""
    c = _uni_mod_p(list(coeffs), p)
    if not c:
        raise ZeroResidue("zero polynomial mod p")
    factors = []
    while c[0] == 0:
        factors.append([0, 1])
        c = c[1:]
    if len(c) == 1:
        return factors
    if p > 5000:
        raise FactorizationIncomplete(f"root scan over F_{p} beyond budget")
    changed = True
    while changed and len(c) > 1:
        changed = False
        for a in range(p):
            val = 0
            for co in reversed(c):
                val = (val * a + co) % p
            if val == 0:
                q, rem = _uni_divmod_p(c, [-a % p, 1], p)
                assert not rem
                c = q
                factors.append([-a % p, 1])
                changed = True
                break
    deg = len(c) - 1
    if deg <= 0:
        return factors
    inv = pow(c[-1], -1, p)
    c = [(x * inv) % p for x in c]
    if deg in (2, 3):
        factors.append(c)
        return factors
    if p ** (deg // 2) > _SEARCH_BUDGET:
        raise FactorizationIncomplete(f"degree-{deg} factorisation over F_{p} beyond budget")
    irreducibles = _monic_irreducibles(p, deg // 2)
    while len(c) - 1 >= 4:
        progressed = False
        for g in irreducibles:
            if len(g) - 1 > (len(c) - 1) // 2:
                break
            q, rem = _uni_divmod_p(c, g, p)
            if not rem:
                factors.append(g)
                c = q
                progressed = True
                break
        if not progressed:
            break
    if len(c) - 1 > 0:
        factors.append(c)
    return factors


# ---------------------------------------------------------------------------
# segment supports: univariate structure in a monomial direction
# ---------------------------------------------------------------------------


def _segment_data(support):
    """(base exponent, primitive direction, param map) for collinear support,
    else None."""
    pts = sorted(support)
    if len(pts) < 2:
        return None
    base = pts[0]
    d = None
    for e in pts[1:]:
        diff = tuple(a - b for a, b in zip(e, base))
        g = math.gcd(*[abs(v) for v in diff])
        cand = tuple(v // g for v in diff)
        if d is None:
            d = cand
        elif cand != d:
            return None
    params = {}
    for e in pts:
        diff = tuple(a - b for a, b in zip(e, base))
        t = diff[0] // d[0] if d[0] else diff[1] // d[1]
        if tuple(b + t * w for b, w in zip(base, d)) != e:
            return None
        params[e] = t
    return base, d, params


def _monomial_expand(coeff_list, direction):
    terms = {}
    for t, c in enumerate(coeff_list):
        if c:
            terms[tuple(t * w for w in direction)] = c
    return terms


# ---------------------------------------------------------------------------
# exact sparse division and the Minkowski-summand factor search
# ---------------------------------------------------------------------------


def _divide_exact(fterms, gterms, p=None, cap=400):
    """Quotient terms of f / g in the Laurent ring (inputs cleared), or None.

    Peels lex-lowest terms; the quotient of an exact division appears in lex
    order, so capping the quotient size bounds the loop.
    """
    r = {e: Fraction(c) if p is None else c % p for e, c in fterms.items()}
    g = dict(gterms)
    ltg = min(g)
    cg = g[ltg]
    inv = pow(cg, -1, p) if p is not None else None
    h = {}
    while r:
        ltr = min(r)
        e = tuple(a - b for a, b in zip(ltr, ltg))
        if any(x < 0 for x in e):
            return None
        c = (r[ltr] * inv) % p if p is not None else r[ltr] / cg
        h[e] = c
        if len(h) > cap:
            return None
        for ge, gc in g.items():
            key = tuple(a + b for a, b in zip(e, ge))
            val = (r.get(key, 0) - c * gc) % p if p is not None else r.get(key, 0) - c * gc
            if val:
                r[key] = val
            else:
                r.pop(key, None)
    return h


def _assignments_p(points, vertices, p, budget):
    """Coefficient assignments over F_p with the lex-min vertex pinned to 1."""
    anchor = min(vertices)
    free = [pt for pt in points if pt != anchor]
    total = 1
    for pt in free:
        total *= (p - 1) if pt in vertices else p
        if total > budget:
            return None
    out = []

    def rec(i, cur):
        if i == len(free):
            out.append(dict(cur))
            return
        pt = free[i]
        lo = 1 if pt in vertices else 0
        for c in range(lo, p):
            cur[pt] = c
            rec(i + 1, cur)
        del cur[pt]

    rec(0, {anchor: 1})
    return out


def _assignments_q(points, vertices, bound, budget):
    """Bounded integer assignments with the lex-min vertex positive."""
    anchor = min(vertices)
    total = 1
    for pt in points:
        if pt == anchor:
            total *= bound
        elif pt in vertices:
            total *= 2 * bound
        else:
            total *= 2 * bound + 1
        if total > budget:
            return None
    out = []
    pts = sorted(points)

    def rec(i, cur):
        if i == len(pts):
            out.append(dict(cur))
            return
        pt = pts[i]
        if pt == anchor:
            rng = range(1, bound + 1)
        elif pt in vertices:
            rng = [c for c in range(-bound, bound + 1) if c]
        else:
            rng = range(-bound, bound + 1)
        for c in rng:
            if c:
                cur[pt] = c
            rec(i + 1, cur)
            cur.pop(pt, None)

    rec(0, {})
    return out


def _minkowski_search(terms, rank, p=None, coeff_bound=3):
    """Proper factorisation via Newton-polytope summand pairs.

    Returns (g_terms, h_terms) on success, None when the complete enumeration
    found nothing, and raises FactorizationIncomplete when truncated.
    """
    np_ = newton_polytope(LaurentPolynomial({e: 1 for e in terms}, rank))
    pairs = minkowski_summand_pairs(np_)
    incomplete = False
    for p1, p2 in pairs:
        orientations = [(p1, p2)] if p1 == p2 else [(p1, p2), (p2, p1)]
        for cand, other in orientations:
            if cand.dim == 0 or other.dim == 0:
                continue  # trivial split
            pts = cand.lattice_points()
            verts = set(cand.vertices)
            if p is not None:
                assigns = _assignments_p(sorted(pts), verts, p, _SEARCH_BUDGET)
            else:
                assigns = _assignments_q(sorted(pts), verts, coeff_bound, _SEARCH_BUDGET)
            if assigns is None:
                incomplete = True
                continue
            for assign in assigns:
                g = {e: c for e, c in assign.items() if c}
                if len(g) < 2:
                    continue
                if p is None and math.gcd(*[abs(c) for c in g.values()]) != 1:
                    continue  # non-primitive g cannot divide a primitive f
                h = _divide_exact(terms, g, p=p)
                if h is None:
                    continue
                if LatticePolytope(list(h)).normalized_translation() != other.normalized_translation():
                    continue
                return g, h
    if incomplete:
        raise FactorizationIncomplete("Minkowski coefficient search beyond budget")
    return None


# ---------------------------------------------------------------------------
# witness normalisation
# ---------------------------------------------------------------------------


def _fraction_terms_to_int(terms):
    den = math.lcm(*[Fraction(c).denominator for c in terms.values()])
    out = {e: int(Fraction(c) * den) for e, c in terms.items()}
    g = math.gcd(*[abs(c) for c in out.values()])
    return {e: c // g for e, c in out.items()}


def _normalize_witness_q(terms, rank):
    poly = LaurentPolynomial(_fraction_terms_to_int(terms), rank).clear_monomial()
    if poly.terms[min(poly.terms)] < 0:
        poly = -poly
    return poly


def _normalize_witness_p(terms, prime, rank):
    poly = ResiduePolynomial(terms, prime, rank).clear_monomial()
    lead = poly.terms[min(poly.terms)]
    return poly.scaled(pow(lead, -1, prime))


# ---------------------------------------------------------------------------
# irreducibility
# ---------------------------------------------------------------------------


def _linear_in_variable(f, var, prime=None):
    """f (cleared, rank 2) of degree 1 in ``var``: f = A*v + B.

    Returns 'irreducible', a witness pair (g_terms, h_terms), or None when
    the shape does not apply (B = 0).
    """
    A, B = {}, {}
    other = 1 - var
    for e, c in f.terms.items():
        (A if e[var] == 1 else B)[e[other]] = c
    if not B or not A:
        return None
    ca = [A.get(i, 0) for i in range(max(A) + 1)]
    cb = [B.get(i, 0) for i in range(max(B) + 1)]
    if prime is None:
        g = _uni_gcd_q(ca, cb)
    else:
        g = _uni_gcd_p(ca, cb, prime)
    if len(g) <= 1:
        return "irreducible"
    gterms = {}
    for i, c in enumerate(g):
        if c:
            e = [0, 0]
            e[other] = i
            gterms[tuple(e)] = c
    if prime is None:
        gterms = _fraction_terms_to_int(gterms)
    h = _divide_exact(f.terms, gterms, p=prime)
    assert h is not None
    return gterms, h


def _linear_degrees(terms, var):
    degs = {e[var] for e in terms}
    return max(degs) == 1 and min(degs) == 0


def _status_field_p(fres: ResiduePolynomial, p) -> IrreducibilityStatus:
    """Irreducibility over F_p; exhaustive within bounds."""
    fbar = fres.clear_monomial()
    name = f"F_{p}"
    if fbar.is_zero():
        return IrreducibilityStatus("Zero", name)
    if fbar.is_monomial():
        return IrreducibilityStatus("Unit", name)
    seg = _segment_data(fbar.terms)
    if seg is not None:
        _, d, params = seg
        coeffs = [0] * (max(params.values()) + 1)
        for e, t in params.items():
            coeffs[t] = fbar.terms[e]
        try:
            factors = factor_univariate_p(coeffs, p)
        except FactorizationIncomplete:
            return IrreducibilityStatus("Undetermined", name)
        real = [g for g in factors if not (len(g) == 2 and g[0] == 0)]
        if len(real) <= 1:
            return IrreducibilityStatus("Irreducible", name, "MinkowskiSearch")
        wits = tuple(
            _normalize_witness_p(_monomial_expand(g, d), p, fbar.rank) for g in real
        )
        return IrreducibilityStatus("Reducible", name, "MinkowskiSearch", wits)
    for var in (0, 1):
        if _linear_degrees(fbar.terms, var):
            res = _linear_in_variable(fbar, var, prime=p)
            if res == "irreducible":
                return IrreducibilityStatus("Irreducible", name, "LinearInVariable")
            if res is not None:
                g, h = res
                wits = (_normalize_witness_p(g, p, 2), _normalize_witness_p(h, p, 2))
                return IrreducibilityStatus("Reducible", name, "LinearInVariable", wits)
    if len(fbar.terms) > _support_bound() or p > 13:
        return IrreducibilityStatus("Undetermined", name)
    try:
        found = _minkowski_search(fbar.terms, fbar.rank, p=p)
    except FactorizationIncomplete:
        return IrreducibilityStatus("Undetermined", name)
    if found is None:
        return IrreducibilityStatus("Irreducible", name, "MinkowskiSearch")
    g, h = found
    return IrreducibilityStatus(
        "Reducible",
        name,
        "MinkowskiSearch",
        (_normalize_witness_p(g, p, fbar.rank), _normalize_witness_p(h, p, fbar.rank)),
    )


def irreducibility_status(f, field="Q") -> IrreducibilityStatus:
    """Decide irreducibility in the Laurent ring over Q or F_p.

    Order: clear monomial units; linear-in-a-variable by coefficient gcd;
    segment supports by univariate factorisation; over Q the cheap mod-p
    lift (irreducible mod a support-preserving prime implies irreducible
    over Q); bounded Minkowski coefficient search; else Undetermined.
    """
    if isinstance(field, int):
        fres = reduce_mod_p(f, field) if isinstance(f, LaurentPolynomial) else f
        if fres.is_zero():
            return IrreducibilityStatus("Zero", f"F_{field}")
        return _status_field_p(fres, field)

    if f.is_zero():
        return IrreducibilityStatus("Zero", "Q")
    fbar = f.clear_monomial()
    if fbar.is_monomial():
        return IrreducibilityStatus("Unit", "Q")
    c = content(fbar)
    if c != 1:
        fbar = LaurentPolynomial({e: v // c for e, v in fbar.terms.items()}, fbar.rank)

    seg = _segment_data(fbar.terms)
    if seg is not None:
        _, d, params = seg
        coeffs = [0] * (max(params.values()) + 1)
        for e, t in params.items():
            coeffs[t] = fbar.terms[e]
        factors, complete = factor_univariate_q(coeffs)
        real = [g for g in factors if not (len(g) == 2 and g[0] == 0)]
        if len(real) <= 1:
            if complete:
                return IrreducibilityStatus("Irreducible", "Q", "MinkowskiSearch")
            return IrreducibilityStatus("Undetermined", "Q")
        wits = tuple(
            _normalize_witness_q(_monomial_expand(g, d), fbar.rank) for g in real
        )
        return IrreducibilityStatus("Reducible", "Q", "MinkowskiSearch", wits)

    if fbar.rank == 2:
        for var in (0, 1):
            if _linear_degrees(fbar.terms, var):
                res = _linear_in_variable(fbar, var)
                if res == "irreducible":
                    return IrreducibilityStatus("Irreducible", "Q", "LinearInVariable")
                if res is not None:
                    g, h = res
                    wits = (_normalize_witness_q(g, 2), _normalize_witness_q(h, 2))
                    return IrreducibilityStatus("Reducible", "Q", "LinearInVariable", wits)

    for p in (2, 3, 5, 7, 11, 13):
        if all(v % p for v in fbar.terms.values()):
            if _status_field_p(reduce_mod_p(fbar, p), p).verdict == "Irreducible":
                return IrreducibilityStatus("Irreducible", "Q", "ModPLift")

    if len(fbar.terms) > _support_bound():
        return IrreducibilityStatus("Undetermined", "Q")
    try:
        found = _minkowski_search(fbar.terms, fbar.rank, p=None)
    except FactorizationIncomplete:
        return IrreducibilityStatus("Undetermined", "Q")
    if found is None:
        # bounded integer coefficients: absence of a factor is not a proof
        return IrreducibilityStatus("Undetermined", "Q")
    g, h = found
    return IrreducibilityStatus(
        "Reducible",
        "Q",
        "MinkowskiSearch",
        (_normalize_witness_q(g, fbar.rank), _normalize_witness_q(h, fbar.rank)),
    )


# ---------------------------------------------------------------------------
# the Main-Theorem ring hypotheses
# ---------------------------------------------------------------------------


def torsionfree_check(f: LaurentPolynomial) -> bool:
    """A = ZQ/(f) is Z-torsion-free iff content(f) = 1."""
    if f.is_zero():
        raise ZeroPolynomial("torsion check of the zero polynomial")
    c = content(f)
    if c != 1 and f.is_monomial():
        warnings.warn(
            "constant-times-monomial generator: the quotient is a torsion ring",
            UnitPolynomialWarning,
            stacklevel=2,
        )
    return c == 1


def mod_p_domain_check(f: LaurentPolynomial, p: int) -> dict:
    """Is A/pA an infinite integral domain?"""
    fres = reduce_mod_p(f, p)
    if fres.is_zero():
        raise ZeroResidue(f"{p} divides the content of f")
    st = _status_field_p(fres, p)
    if st.verdict == "Irreducible":
        domain = True
    elif st.verdict in ("Reducible", "Unit"):
        domain = False
    else:
        domain = "undetermined"
    infinite = not fres.clear_monomial().is_monomial()
    return {"domain": domain, "infinite": infinite, "status": st}


@dataclass(frozen=True)
class PrimeCertificate:
    status: str  # Certified | FiniteListOnly
    checked: tuple
    results: dict
    note: str = ""


def all_primes_certificate(f: LaurentPolynomial) -> PrimeCertificate:
    """Certify 'A/pA is an infinite domain for every prime p'.

    For f = A(x)v + B(x) of degree 1 in some variable: outside the primes
    dividing Res(A, B) or a coefficient of f, reduction mod p preserves the
    support and keeps the pair coprime, so the linear rule certifies every
    remaining prime at once.  Otherwise only a finite list is checked and the
    overall report is downgraded to conditional.
    """
    if content(f) != 1:
        raise ZeroResidue("certificate requires content 1")
    fbar = f.clear_monomial()
    coeff_primes = set()
    for c in fbar.terms.values():
        coeff_primes.update(prime_factors(c))
    if fbar.rank == 2:
        for var in (0, 1):
            if not _linear_degrees(fbar.terms, var):
                continue
            other = 1 - var
            A, B = {}, {}
            for e, c in fbar.terms.items():
                part = A if e[var] == 1 else B
                exp = [0, 0]
                exp[other] = e[other]
                part[tuple(exp)] = c
            if not A or not B:
                continue
            res = resultant_univariate(
                LaurentPolynomial(A, 2), LaurentPolynomial(B, 2), other
            )
            if res.is_zero():
                break  # common factor: not a domain, nothing to certify
            value = next(iter(res.terms.values()))
            primes = sorted(set(prime_factors(value)) | coeff_primes)
            results = {p: mod_p_domain_check(f, p) for p in primes}
            return PrimeCertificate(
                "Certified",
                tuple(primes),
                results,
                note=f"Res = {value}; all other primes certified by the linear rule",
            )
    primes = sorted(coeff_primes | {2, 3, 5, 7, 11, 13})
    results = {p: mod_p_domain_check(f, p) for p in primes}
    return PrimeCertificate(
        "FiniteListOnly",
        tuple(primes),
        results,
        note="no linear variable: only finitely many primes checked",
    )


def algebraic_monomial_directions(f: LaurentPolynomial) -> MonomialDirectionSet:
    """Primitive directions w with the image of x^w algebraic over Q.

    Empty iff the Newton polytope is 2-dimensional.  A segment polytope in
    direction w carries a one-variable polynomial with x^w as a root; no
    other direction works, since F | m(x^w) would force NP(F) to be a
    Minkowski summand of a segment parallel to w.
    """
    st = irreducibility_status(f, "Q")
    if st.verdict != "Irreducible":
        raise NotIrreducible(f"requires an irreducible non-unit generator, got {st.verdict}")
    np_ = newton_polytope(f.clear_monomial())
    if np_.dim == 2:
        return MonomialDirectionSet(())
    a, b = np_.vertices[0], np_.vertices[-1]
    diff = tuple(q - r for q, r in zip(b, a))
    g = math.gcd(*[abs(v) for v in diff])
    d = tuple(v // g for v in diff)
    for comp in d:
        if comp > 0:
            break
        if comp < 0:
            d = tuple(-v for v in d)
            break
    return MonomialDirectionSet((d,))


@dataclass(frozen=True)
class KrullVerdict:
    dim: int | None  # None = Undetermined
    justification: str


def krull_dimension_verdict(f) -> KrullVerdict:
    """Krull dimension of A = ZQ/(f), rank 2: height-1 primes of the
    3-dimensional Laurent ring give dimension 2."""
    if isinstance(f, ZeroIdeal):
        return KrullVerdict(
            f.rank + 1,
            f"zero ideal: Krulldim(Z[x_1^(+-1),...,x_{f.rank}^(+-1)]) = {f.rank + 1}",
        )
    if f.rank != 2:
        raise ValueError("the Krull verdict is stated for rank 2")
    if f.is_zero():
        return KrullVerdict(3, "zero ideal: Krulldim(Z[x^(+-1), y^(+-1)]) = 3")
    if f.is_unit():
        raise UnitPolynomial("quotient by a unit is the zero ring")
    if content(f) != 1:
        return KrullVerdict(None, f"content {content(f)} > 1: the quotient has Z-torsion")
    st = irreducibility_status(f, "Q")
    if st.verdict == "Irreducible":
        return KrullVerdict(
            2,
            "f irreducible with content 1: (f) is a height-1 prime of the "
            "3-dimensional ring Z[x^(+-1), y^(+-1)]",
        )
    if st.verdict == "Reducible":
        return KrullVerdict(None, "f reducible: the quotient is not a domain")
    if st.verdict == "Unit":
        raise UnitPolynomial("quotient by a unit is the zero ring")
    return KrullVerdict(None, f"irreducibility {st.verdict}")


def factor_mod_p(f, p: int) -> list[ResiduePolynomial]:
    """Complete irreducible factorisation of f mod p in the Laurent ring
    (monomial units cleared; factors listed with multiplicity, each
    normalised with lex-lowest coefficient 1)."""
    fres = reduce_mod_p(f, p) if isinstance(f, LaurentPolynomial) else f
    if fres.is_zero():
        raise ZeroResidue(f"f vanishes mod {p}")
    fbar = fres.clear_monomial()
    if fbar.is_monomial():
        return []
    seg = _segment_data(fbar.terms)
    if seg is not None:
        _, d, params = seg
        coeffs = [0] * (max(params.values()) + 1)
        for e, t in params.items():
            coeffs[t] = fbar.terms[e]
        out = []
        for g in factor_univariate_p(coeffs, p):
            if len(g) == 2 and g[0] == 0:
                continue  # power of x^d: a unit
            out.append(_normalize_witness_p(_monomial_expand(g, d), p, fbar.rank))
        return out
    for var in (0, 1):
        if _linear_degrees(fbar.terms, var):
            res = _linear_in_variable(fbar, var, prime=p)
            if res == "irreducible":
                return [_normalize_witness_p(fbar.terms, p, 2)]
            if res is not None:
                g, h = res
                return factor_mod_p(_normalize_witness_p(g, p, 2), p) + factor_mod_p(
                    _normalize_witness_p(h, p, 2), p
                )
    if len(fbar.terms) > _support_bound() or p > 13:
        raise FactorizationIncomplete(
            f"support {len(fbar.terms)}, p = {p}: beyond the bounded search"
        )
    found = _minkowski_search(fbar.terms, fbar.rank, p=p)
    if found is None:
        return [_normalize_witness_p(fbar.terms, p, fbar.rank)]
    g, h = found
    return factor_mod_p(_normalize_witness_p(g, p, fbar.rank), p) + factor_mod_p(
        _normalize_witness_p(h, p, fbar.rank), p
    )
