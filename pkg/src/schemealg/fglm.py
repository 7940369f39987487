"""Order conversion by linear algebra (FGLM) and triangular solving.

The quotient algebra of a structure ideal is finite-dimensional, so a target
Groebner basis can be read off from linear dependencies among normal-form
coordinate vectors; no polynomial division in the target order is ever
needed.  Variety points are then extracted from a lex basis: real roots of
the eliminant, back-substitution through the remaining generators, and
residual certification (exact for rational points, interval-backed for
irrational ones).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .errors import DimensionMismatch, InternalInvariantViolation, NotTriangularEnough
from .exactmath import (
    DEFAULT_PRECISION,
    Interval,
    RealRoot,
    _count_roots,
    _sturm_chain,
    real_roots,
)
from .polyring import Monomial, MonomialOrder, MPoly, PolyBasis
from .structure_ideal import StructureBasis, multiplication_matrix


@dataclass(frozen=True)
class ReducedGB:
    """A reduced, monic Groebner basis with its normal set (staircase)."""

    basis: PolyBasis
    normal_set: tuple
    target_order: MonomialOrder


@dataclass(frozen=True)
class VarietyPoint:
    """One common zero; coordinates indexed by variable, coordinate 0 is 1."""

    coordinates: tuple

    def __len__(self):
        return len(self.coordinates)

    def is_rational(self):
        return all(c.is_rational for c in self.coordinates)

    def rational_tuple(self):
        if not self.is_rational():
            raise ValueError("point has irrational coordinates")
        return tuple(c.value for c in self.coordinates)


def fglm_convert(sb: StructureBasis, target: MonomialOrder) -> ReducedGB:
    """Convert the structure basis to a reduced basis for `target`."""
    if target.nvars != sb.nvars:
        raise DimensionMismatch("target order has the wrong number of variables")
    mats = [multiplication_matrix(sb, i) for i in range(sb.nvars)]
    return fglm_from_matrices(mats, target)


def fglm_from_matrices(mats, target: MonomialOrder) -> ReducedGB:
    """FGLM over explicit multiplication matrices (column m = image of the
    m-th normal-set monomial).  The matrices must pairwise commute and the
    first normal-set monomial must be 1."""
    nv = target.nvars
    if len(mats) != nv:
        raise DimensionMismatch("need one multiplication matrix per variable")
    dim = mats[0].nrows
    one = Monomial.one(nv)

    staircase = []  # new normal set, in ascending target order (discovery order)
    raw = {}  # staircase monomial -> its coordinate vector
    echelon = []  # (pivot, unit-pivot vector, combination over staircase monomials)
    generators = []
    lead_terms = []

    heap = []
    seen = set()
    parents = {}

    def push(m, parent):
        if m not in seen:
            seen.add(m)
            parents[m] = parent
            heapq.heappush(heap, (target.key(m), m))

    push(one, None)
    while heap:
        _, mono = heapq.heappop(heap)
        if any(lt.divides(mono) for lt in lead_terms):
            continue
        if mono == one:
            vec = tuple(1 if i == 0 else 0 for i in range(dim))
        else:
            pmono, var = parents[mono]
            vec = mats[var].apply(raw[pmono])
        residue = list(vec)
        combo = {}
        for pivot, unit, expansion in echelon:
            c = residue[pivot]
            if c:
                for idx in range(dim):
                    residue[idx] -= c * unit[idx]
                for t, ct in expansion.items():
                    combo[t] = combo.get(t, 0) + c * ct
        if any(residue):
            pivot = next(i for i, x in enumerate(residue) if x)
            pv = residue[pivot]
            unit = tuple(Fraction(x, 1) / pv if pv != 1 else x for x in residue)
            expansion = {mono: Fraction(1, 1) / pv}
            for t, ct in combo.items():
                expansion[t] = -Fraction(ct, 1) / pv
            staircase.append(mono)
            raw[mono] = vec
            echelon.append((pivot, unit, expansion))
            for var in range(nv):
                push(mono.mul(Monomial.variable(var, nv)), (mono, var))
        else:
            terms = {mono: 1}
            for t, ct in combo.items():
                if ct:
                    terms[t] = -ct
            generators.append(MPoly(nv, terms))
            lead_terms.append(mono)
    if len(staircase) != dim:
        raise InternalInvariantViolation(
            f"normal set has {len(staircase)} monomials; expected {dim}"
        )
    generators.sort(key=lambda g: target.key(g.leading_monomial(target)))
    return ReducedGB(
        basis=PolyBasis(generators, target),
        normal_set=tuple(staircase),
        target_order=target,
    )


# ---------------------------------------------------------------------------
# triangular solving
# ---------------------------------------------------------------------------


class _SolveContext:
    """Caches per-solve data: spectra (roots of squarefree charpolys of the
    multiplication matrices) used to represent irrational coordinates."""

    def __init__(self, sb, precision):
        self.sb = sb
        self.precision = Fraction(precision)
        self._spectra = {}

    def spectrum(self, var):
        if var not in self._spectra:
            cp = multiplication_matrix(self.sb, var).charpoly()
            self._spectra[var] = tuple(real_roots(cp.squarefree_part(), self.precision))
        return self._spectra[var]


def _match_in_spectrum(value, spectrum, what):
    for cand in spectrum:
        if value.compare(cand) == 0:
            return cand
    raise InternalInvariantViolation(f"{what} is not an eigenvalue of its multiplication matrix")


def _algebraic_value(ctx, expr: MPoly, assign, var):
    """Value of `expr` at an assignment (dict variable -> RealRoot), known to
    be an eigenvalue of the var-th multiplication matrix.  Exact when every
    input is rational; otherwise located inside the var spectrum by interval
    refinement."""
    if all(v.is_rational for v in assign.values()):
        vals = [0] * expr.nvars
        for j, v in assign.items():
            vals[j] = v.value
        return RealRoot.rational(expr.evaluate(vals))
    spectrum = ctx.spectrum(var)
    work = dict(assign)
    width = Fraction(1, 2**8)
    for _ in range(512):
        ivs = [Interval.point(0)] * expr.nvars
        for j, v in work.items():
            ivs[j] = v.interval()
        enclosure = expr.evaluate_interval(ivs)
        hits = [c for c in spectrum if c.interval().intersect(enclosure) is not None]
        if len(hits) == 1:
            return hits[0]
        if not hits:
            raise InternalInvariantViolation(
                "back-substituted value escaped the multiplication-matrix spectrum"
            )
        work = {j: v.refine(width) for j, v in work.items()}
        width /= 4
    raise InternalInvariantViolation("interval refinement failed to separate spectrum values")


def _linear_solved_form(gen, order, y, nv):
    """If gen = x_y - tail with tail free of x_y, return tail; else None."""
    if gen.leading_monomial(order) != Monomial.variable(y, nv):
        return None
    tail = MPoly(nv, {m: -c for m, c in gen.terms.items() if m[y] == 0})
    return tail


def solve_triangular(rgb: ReducedGB, sb: StructureBasis, precision=DEFAULT_PRECISION):
    """All real variety points of a (zero-dimensional, radical) lex basis.

    Works stage by stage from the smallest variable up: real roots of the
    eliminant, then each next variable from the generators that become
    univariate (branching when several roots survive).  Once an irrational
    coordinate is on the stack only solved-form generators x_j - g(smaller)
    are accepted; anything else raises NotTriangularEnough.  Every point is
    certified against the structure basis before being returned.
    """
    ctx = _SolveContext(sb, precision)
    order = rgb.target_order
    nv = order.nvars
    gens = rgb.basis.generators
    stages = list(reversed(order.priority))  # smallest variable first
    partials = [{}]
    for idx, y in enumerate(stages):
        allowed = set(stages[: idx + 1])
        stage_gens = [
            g for g in gens if y in g.support_vars() and g.support_vars() <= allowed
        ]
        if not stage_gens:
            raise InternalInvariantViolation(f"no generator constrains x{y}")
        nxt = []
        for assign in partials:
            if all(v.is_rational for v in assign.values()):
                values = {j: v.value for j, v in assign.items()}
                upolys = []
                for g in stage_gens:
                    h = g.partial_eval(values)
                    u = h.univariate_in(y)
                    if not u.is_zero():
                        upolys.append(u)
                if not upolys:
                    raise InternalInvariantViolation(f"x{y} became unconstrained")
                h = reduce(lambda a, b: a.gcd(b), upolys)
                if h.degree == 0:
                    continue  # no common root: no real extension of this branch
                for root in real_roots(h, ctx.precision):
                    ext = dict(assign)
                    ext[y] = root
                    nxt.append(ext)
            else:
                tail = None
                for g in stage_gens:
                    tail = _linear_solved_form(g, order, y, nv)
                    if tail is not None:
                        break
                if tail is None:
                    raise NotTriangularEnough(
                        f"no solved form for x{y} over an irrational partial point"
                    )
                ext = dict(assign)
                ext[y] = _algebraic_value(ctx, tail, assign, y)
                nxt.append(ext)
        partials = nxt
    points = []
    for assign in partials:
        coords = tuple(assign[j] for j in range(nv))
        if not (coords[0].is_rational and coords[0].value == 1):
            raise InternalInvariantViolation("variety point has x0 != 1")
        points.append(VarietyPoint(coordinates=_certify_point(ctx, coords)))
    return tuple(points)


def _certify_point(ctx, coords):
    """Check the structure relations vanish at the point; returns coordinates
    (refined where needed to push every residual enclosure below precision)."""
    basis = ctx.sb.basis
    if all(c.is_rational for c in coords):
        values = [c.value for c in coords]
        for g in basis:
            if g.evaluate(values) != 0:
                raise InternalInvariantViolation(
                    f"candidate point {values} has nonzero residual on {g.render()}"
                )
        return coords
    work = list(coords)
    width = Fraction(1, 2**8)
    for _ in range(512):
        ivs = [c.interval() for c in work]
        worst = Fraction(0)
        for g in basis:
            enc = g.evaluate_interval(ivs)
            if not enc.contains(0):
                raise InternalInvariantViolation(
                    f"candidate point residual on {g.render()} is certified nonzero"
                )
            worst = max(worst, enc.width)
        if worst < ctx.precision:
            return tuple(work)
        work = [c.refine(width) for c in work]
        width /= 4
    raise InternalInvariantViolation("residual certification did not converge")


def moller_stetter_check(sb: StructureBasis, points) -> bool:
    """Eigenvalue consistency: the characteristic polynomial of every
    multiplication matrix must vanish on the matching coordinate of every
    point, and the point count must equal the quotient dimension."""
    points = tuple(points)
    if len(points) != sb.quotient_dimension:
        return False
    nv = sb.nvars
    for i in range(nv):
        cp = multiplication_matrix(sb, i).charpoly()
        sf = cp.squarefree_part().primitive()
        for pt in points:
            c = pt.coordinates[i]
            if c.is_rational:
                if cp.evaluate(c.value) != 0:
                    return False
            else:
                g = sf.gcd(c.poly)
                if g.degree == 0:
                    return False
                if _count_roots(_sturm_chain(g.primitive()), c.low, c.high) != 1:
                    return False
    return True
