import random
from fractions import Fraction

import pytest

from schemealg.errors import SingularMatrix, ZeroPolynomial
from schemealg.exactmath import (
    Interval,
    QMatrix,
    RealRoot,
    UniPoly,
    format_decimal,
    real_roots,
    squarefree_part,
)


def upoly(*coeffs_desc):
    """Build a UniPoly from descending coefficients (reads like the formula)."""
    return UniPoly(tuple(reversed(coeffs_desc)))


class TestQMatrix:
    def test_rref_simple(self):
        m, pivots = QMatrix([[0, 2], [1, 1]]).rref()
        assert m == QMatrix.identity(2)
        assert pivots == (0, 1)

    def test_rref_rank_deficient(self):
        m, pivots = QMatrix([[1, 2, 3], [2, 4, 6], [0, 0, 1]]).rref()
        assert pivots == (0, 2)
        assert m.rows[0] == (1, 2, 0)
        assert m.rows[1] == (0, 0, 1)
        assert m.rows[2] == (0, 0, 0)

    @pytest.mark.parametrize("seed", range(8))
    def test_rref_shape_properties(self, seed):
        rng = random.Random(seed)
        nr, nc = rng.randint(1, 5), rng.randint(1, 5)
        a = QMatrix([[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(nc)] for _ in range(nr)])
        r, pivots = a.rref()
        assert list(pivots) == sorted(pivots)
        for row, c in enumerate(pivots):
            col = r.column(c)
            assert col[row] == 1
            assert all(x == 0 for i, x in enumerate(col) if i != row)
        # rows past the last pivot are zero
        for row in r.rows[len(pivots):]:
            assert all(x == 0 for x in row)

    def test_inverse(self):
        a = QMatrix([[1, 2], [1, -1]])
        inv = a.inverse()
        assert inv == QMatrix([[Fraction(1, 3), Fraction(2, 3)], [Fraction(1, 3), Fraction(-1, 3)]])
        assert a @ inv == QMatrix.identity(2)

    def test_inverse_singular(self):
        with pytest.raises(SingularMatrix):
            QMatrix([[1, 2], [2, 4]]).inverse()

    @pytest.mark.parametrize("seed", range(6))
    def test_inverse_round_trip(self, seed):
        rng = random.Random(100 + seed)
        n = rng.randint(1, 4)
        while True:
            a = QMatrix([[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)])
            try:
                inv = a.inverse()
                break
            except SingularMatrix:
                continue
        assert a @ inv == QMatrix.identity(n)
        assert inv @ a == QMatrix.identity(n)

    def test_charpoly_known(self):
        assert QMatrix([[0, 2], [1, 1]]).charpoly() == upoly(1, -1, -2)
        assert QMatrix([[2, 0], [0, 3]]).charpoly() == upoly(1, -5, 6)

    @pytest.mark.parametrize("seed", range(5))
    def test_charpoly_triangular(self, seed):
        rng = random.Random(7 + seed)
        n = rng.randint(1, 4)
        diag = [rng.randint(-3, 3) for _ in range(n)]
        rows = [[diag[i] if i == j else (rng.randint(-3, 3) if j > i else 0) for j in range(n)] for i in range(n)]
        expect = UniPoly((1,))
        for d in diag:
            expect = expect * UniPoly((-d, 1))
        assert QMatrix(rows).charpoly() == expect


class TestUniPoly:
    def test_divmod_exact(self):
        p = upoly(1, -3, -18, 0)  # x^3 - 3x^2 - 18x
        q, r = divmod(p, upoly(1, -6))
        assert r.is_zero()
        assert q == upoly(1, 3, 0)

    @pytest.mark.parametrize("seed", range(10))
    def test_divmod_property(self, seed):
        rng = random.Random(seed)

        def rand_poly(max_deg):
            return UniPoly([Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(rng.randint(1, max_deg + 1))])

        a, b = rand_poly(6), rand_poly(3)
        if b.is_zero():
            return
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero() or r.degree < b.degree

    def test_gcd(self):
        a = upoly(1, 1, -2)  # (x-1)(x+2)
        b = upoly(1, 4, -5)  # (x-1)(x+5)
        assert a.gcd(b) == upoly(1, -1)

    def test_squarefree_part(self):
        p = upoly(1, -1)* upoly(1, -1) * upoly(1, 2)  # (x-1)^2 (x+2)
        assert squarefree_part(p) == upoly(1, 1, -2)
        already = upoly(1, -3, -18, 0)
        assert squarefree_part(already) == already

    def test_zero_polynomial_guards(self):
        z = UniPoly()
        with pytest.raises(ZeroPolynomial):
            z.monic()
        with pytest.raises(ZeroPolynomial):
            z.squarefree_part()
        with pytest.raises(ZeroPolynomial):
            divmod(upoly(1, 0), z)
        with pytest.raises(ZeroPolynomial):
            real_roots(z)

    def test_render(self):
        assert upoly(1, -3, -18, 0).render() == "x^3 - 3*x^2 - 18*x"
        assert upoly(Fraction(1, 2), 0, -1).render("t") == "1/2*t^2 - 1"
        assert UniPoly().render() == "0"

    def test_primitive(self):
        p = UniPoly([Fraction(-1, 2), 0, Fraction(3, 2)])
        assert p.primitive() == upoly(3, 0, -1)
        q = upoly(-2, 0, 4)
        assert q.primitive() == upoly(1, 0, -2)


class TestRealRoots:
    def test_rational_roots_exact(self):
        roots = real_roots(upoly(1, -3, -18, 0))
        assert all(r.is_rational for r in roots)
        assert [r.value for r in roots] == [-3, 0, 6]

    def test_fractional_root_via_lc_divisor(self):
        p = upoly(2, -1) * upoly(1, -3)  # (2x-1)(x-3)
        roots = real_roots(p)
        assert [r.value for r in roots] == [Fraction(1, 2), 3]

    def test_irrational_isolation(self):
        roots = real_roots(upoly(1, 0, -2), precision=Fraction(1, 10**6))
        assert len(roots) == 2
        assert all(not r.is_rational for r in roots)
        lo, hi = roots[1].low, roots[1].high
        assert lo < Fraction(141422, 100000) and hi > Fraction(141421, 100000)
        assert hi - lo < Fraction(1, 10**6)

    def test_no_real_roots(self):
        assert real_roots(upoly(1, 0, 1)) == []

    def test_mixed_rational_and_irrational(self):
        p = upoly(1, 0, -2) * upoly(1, -1)
        roots = real_roots(p)
        kinds = [r.is_rational for r in roots]
        assert kinds == [False, True, False]
        assert roots[1].value == 1
        assert roots[0] < roots[1] < roots[2]

    def test_defensive_squarefree(self):
        p = upoly(1, -1) * upoly(1, -1)
        roots = real_roots(p)
        assert [r.value for r in roots] == [1]

    @pytest.mark.parametrize("seed", range(8))
    def test_random_integer_root_sets(self, seed):
        rng = random.Random(400 + seed)
        wanted = sorted(rng.sample(range(-8, 9), rng.randint(1, 4)))
        p = UniPoly((1,))
        for w in wanted:
            p = p * upoly(1, -w)
        roots = real_roots(p)
        assert [r.value for r in roots] == wanted


class TestRealRoot:
    def sqrt2(self):
        return real_roots(upoly(1, 0, -2))[1]

    def test_compare_with_rational(self):
        s = self.sqrt2()
        assert RealRoot.rational(Fraction(3, 2)) > s
        assert RealRoot.rational(Fraction(7, 5)) < s
        assert s != RealRoot.rational(Fraction(141421356, 100000000))

    def test_equality_of_irrationals(self):
        a = real_roots(upoly(1, 0, -2))[1]
        b = real_roots(upoly(1, 0, -2) * upoly(1, 1, 1))[1]  # same root, bigger witness
        assert a == b
        assert a.compare(b) == 0

    def test_negation_via_scale(self):
        plus, minus = self.sqrt2(), real_roots(upoly(1, 0, -2))[0]
        assert plus.scale(-1) == minus

    def test_scale(self):
        s = self.sqrt2().scale(3)
        expect = real_roots(upoly(1, 0, -18))[1]
        assert s == expect
        assert s.scale(Fraction(1, 3)) == self.sqrt2()

    def test_refine_shrinks(self):
        s = self.sqrt2().refine(Fraction(1, 10**40))
        assert s.width < Fraction(1, 10**40)
        assert s == self.sqrt2()

    def test_decimal(self):
        assert self.sqrt2().decimal(12) == "1.414213562373"
        assert RealRoot.rational(Fraction(-1, 3)).decimal(4) == "-0.3333"

    def test_ordering_mixed(self):
        vals = [self.sqrt2(), RealRoot.rational(0), self.sqrt2().scale(-1), RealRoot.rational(2)]
        svals = sorted(vals)
        assert [v.decimal(2) for v in svals] == ["-1.41", "0.00", "1.41", "2.00"]


class TestInterval:
    def test_mul_signs(self):
        a = Interval(-2, 3)
        b = Interval(-1, 4)
        assert (a.mul(b).lo, a.mul(b).hi) == (-8, 12)

    def test_power_even_straddling_zero(self):
        p = Interval(-2, 1).power(2)
        assert (p.lo, p.hi) == (0, 4)

    def test_power_odd(self):
        p = Interval(-2, 1).power(3)
        assert (p.lo, p.hi) == (-8, 1)

    def test_reciprocal(self):
        r = Interval(2, 4).reciprocal()
        assert (r.lo, r.hi) == (Fraction(1, 4), Fraction(1, 2))
        with pytest.raises(ZeroDivisionError):
            Interval(-1, 1).reciprocal()

    def test_poly_evaluation_contains_truth(self):
        p = upoly(1, -3, -18, 0)
        iv = Interval(Fraction(59, 10), Fraction(61, 10))
        out = p.evaluate_interval(iv)
        assert out.contains(p.evaluate(6))


def test_format_decimal():
    assert format_decimal(Fraction(1, 3), 5) == "0.33333"
    assert format_decimal(Fraction(-7, 2), 2) == "-3.50"
    assert format_decimal(7, 0) == "7"
