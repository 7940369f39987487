"""The structure ideal of a scheme: its Bose-Mesner relations as polynomials.

For a scheme with classes 0..d the ideal is generated by x_0 - 1 together
with x_i*x_j - sum_k p_ij^k x_k (constants absorbed via x_0 = 1).  That set
is already a reduced Groebner basis for any total-degree order, with normal
set {1, x_1, ..., x_d}; this module builds it, checks it, and exposes the
multiplication matrices of the quotient algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantViolation
from .exactmath import QMatrix
from .polyring import Monomial, MonomialOrder, MPoly, PolyBasis, is_groebner, normal_form
from .scheme import Scheme


@dataclass(frozen=True)
class StructureBasis:
    """A scheme's structure ideal, held as a reduced degree-order basis."""

    scheme: Scheme
    basis: PolyBasis
    normal_set: tuple

    @property
    def nvars(self):
        return self.scheme.d + 1

    @property
    def quotient_dimension(self):
        return len(self.normal_set)


def structure_basis(s: Scheme) -> StructureBasis:
    """Build the structure basis and certify it with the Buchberger checker.

    A failure of the check means the intersection numbers do not form an
    associative commutative algebra, i.e. the tensor is broken.
    """
    d = s.d
    nv = d + 1
    p = s.tensor.p
    gens = [MPoly.variable(0, nv) - 1]
    for i in range(1, d + 1):
        for j in range(i, d + 1):
            terms = {Monomial.variable(i, nv).mul(Monomial.variable(j, nv)): 1}
            terms[Monomial.one(nv)] = terms.get(Monomial.one(nv), 0) - p[i][j][0]
            for k in range(1, d + 1):
                if p[i][j][k]:
                    terms[Monomial.variable(k, nv)] = -p[i][j][k]
            gens.append(MPoly(nv, terms))
    order = MonomialOrder.degree(nv)
    gens.sort(key=lambda g: order.key(g.leading_monomial(order)))
    basis = PolyBasis(gens, order)
    ok, witness = is_groebner(basis)
    if not ok:
        raise InternalInvariantViolation(
            f"structure relations are not a Groebner basis; offending reduction: {witness.render()}"
        )
    normal_set = (Monomial.one(nv),) + tuple(Monomial.variable(i, nv) for i in range(1, nv))
    return StructureBasis(scheme=s, basis=basis, normal_set=normal_set)


def multiplication_matrix(sb: StructureBasis, i: int) -> QMatrix:
    """Matrix of multiplication by x_i on the quotient, over the normal set:
    column m holds the normal-form coordinates of x_i * (m-th basis monomial)."""
    nv = sb.nvars
    xi = Monomial.variable(i, nv)
    cols = []
    for t in sb.normal_set:
        nf = normal_form(MPoly(nv, {xi.mul(t): 1}), sb.basis)
        cols.append(_coordinates(nf, sb.normal_set))
    return QMatrix(tuple(zip(*cols)))


def _coordinates(f: MPoly, normal_set):
    index = {m: k for k, m in enumerate(normal_set)}
    vec = [0] * len(normal_set)
    for m, c in f.terms.items():
        if m not in index:
            raise InternalInvariantViolation(f"normal form contains {m.render()}, outside the normal set")
        vec[index[m]] = c
    return tuple(vec)


def idempotent_equations(sb: StructureBasis):
    """The quadratic system cutting out the idempotents of the algebra:
    for each k, sum_{i<=j} (1 or 2) p_ij^k y_i y_j - y_k, in variables y_0..y_d."""
    s = sb.scheme
    d = s.d
    nv = d + 1
    p = s.tensor.p
    eqs = []
    for k in range(nv):
        terms = {}
        for i in range(nv):
            for j in range(i, nv):
                c = p[i][j][k] * (1 if i == j else 2)
                if c:
                    m = Monomial.variable(i, nv).mul(Monomial.variable(j, nv))
                    terms[m] = terms.get(m, 0) + c
        yk = Monomial.variable(k, nv)
        terms[yk] = terms.get(yk, 0) - 1
        eqs.append(MPoly(nv, terms))
    return tuple(eqs)


def verify_radical(sb: StructureBasis, precision=None) -> bool:
    """True iff the ideal has d+1 distinct real points (schemes always should).

    Delegates to the solving pipeline; a squarefree eliminant with a full set
    of distinct points is exactly what radicality buys for these ideals.
    """
    from . import analysis  # local import: analysis sits above this module

    kwargs = {} if precision is None else {"precision": precision}
    points = analysis.variety_points(sb, **kwargs)
    if len(points) != sb.quotient_dimension:
        return False
    for a in range(len(points)):
        for b in range(a + 1, len(points)):
            if all(x.compare(y) == 0 for x, y in zip(points[a].coordinates, points[b].coordinates)):
                return False
    return True
