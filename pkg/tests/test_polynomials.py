from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sporbits.polynomials import Polynomial, VariableSet, parse_polynomial


@pytest.fixture
def vs():
    return VariableSet.matrix(2)


@pytest.fixture
def xy():
    return VariableSet.named("x", "y")


def random_polynomials(vs, max_terms=4, max_exp=3):
    coeff = st.fractions(
        min_value=-5, max_value=5, max_denominator=4
    )
    mono = st.tuples(
        *[st.integers(min_value=0, max_value=max_exp) for _ in vs.names]
    )
    term = st.tuples(mono, coeff)
    return st.lists(term, max_size=max_terms).map(
        lambda terms: sum(
            (
                Polynomial.constant(vs, c) * Polynomial(vs, {m: Fraction(1)})
                for m, c in terms
            ),
            Polynomial.zero(vs),
        )
    )


class TestVariableSet:
    def test_matrix_names(self, vs):
        assert vs.names == ("m[1,1]", "m[1,2]", "m[2,1]", "m[2,2]")

    def test_matrix_var(self, vs):
        idx = vs.matrix_var(2, 1)
        assert vs.names[idx] == "m[2,1]"
        assert str(Polynomial.variable(vs, idx)) == "m[2,1]"

    def test_with_elimination(self, vs):
        ext = vs.with_elimination("t")
        assert ext.names[: len(vs.names)] == vs.names
        assert "t" in ext.names
        assert ext.n_elim == 1

    def test_duplicate_names_rejected(self):
        with pytest.raises(ValueError):
            VariableSet.named("x", "x")


class TestArithmetic:
    def test_basic_identity(self, xy):
        x = Polynomial.variable(xy, "x")
        y = Polynomial.variable(xy, "y")
        left = (x + y) * (x - y)
        right = x * x - y * y
        assert left == right

    def test_power(self, xy):
        x = Polynomial.variable(xy, "x")
        assert (x + Polynomial.constant(xy, 1)) ** 2 == parse_polynomial(
            xy, "x^2 + 2*x + 1"
        )

    def test_zero_annihilates(self, xy):
        x = Polynomial.variable(xy, "x")
        assert x * Polynomial.zero(xy) == Polynomial.zero(xy)
        assert not Polynomial.zero(xy).terms

    def test_fraction_coefficients(self, xy):
        p = parse_polynomial(xy, "1/2*x + 1/3*x")
        assert p == parse_polynomial(xy, "5/6*x")

    def test_scale(self, xy):
        p = parse_polynomial(xy, "x - y")
        assert p.scale(Fraction(-2)) == parse_polynomial(xy, "-2*x + 2*y")

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_ring_axioms(self, data):
        xy = VariableSet.named("x", "y")
        polys = random_polynomials(xy)
        a, b, c = data.draw(polys), data.draw(polys), data.draw(polys)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_evaluate_is_a_homomorphism(self, data):
        xy = VariableSet.named("x", "y")
        polys = random_polynomials(xy)
        a, b = data.draw(polys), data.draw(polys)
        point = [
            data.draw(st.fractions(min_value=-3, max_value=3, max_denominator=3)),
            data.draw(st.fractions(min_value=-3, max_value=3, max_denominator=3)),
        ]
        assert (a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point)
        assert (a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point)


class TestParsing:
    def test_matrix_entries(self, vs):
        p = parse_polynomial(vs, "-3/2*m[1,2]*m[2,1]^2")
        ((mono, coeff),) = p.terms.items()
        assert coeff == Fraction(-3, 2)
        assert mono == (0, 1, 2, 0)

    def test_leading_minus_and_spaces(self, xy):
        assert parse_polynomial(xy, " - x + 2 * y ") == parse_polynomial(xy, "2*y - x")

    def test_constant(self, xy):
        assert parse_polynomial(xy, "7/3") == Polynomial.constant(xy, Fraction(7, 3))

    def test_unknown_variable(self, xy):
        with pytest.raises(ValueError):
            parse_polynomial(xy, "z + 1")

    def test_garbage(self, xy):
        with pytest.raises(ValueError):
            parse_polynomial(xy, "x ++ y")

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_str_parse_roundtrip(self, data):
        vs = VariableSet.matrix(2)
        p = data.draw(random_polynomials(vs))
        assert parse_polynomial(vs, str(p)) == p

    def test_str_deterministic(self, vs):
        p = parse_polynomial(vs, "m[2,2] + m[1,1] - m[1,2]*m[2,1]")
        assert str(p) == str(parse_polynomial(vs, str(p)))


class TestExtendRestrict:
    def test_extend_then_restrict(self, vs):
        ext = vs.with_elimination("t")
        p = parse_polynomial(vs, "m[1,1]*m[2,2] - m[1,2]*m[2,1]")
        lifted = p.extend(ext)
        assert lifted.restrict(vs) == p

    def test_restrict_rejects_live_variable(self, vs):
        ext = vs.with_elimination("t")
        q = parse_polynomial(ext, "t*m[1,1]")
        with pytest.raises(ValueError):
            q.restrict(vs)


class TestHomogeneity:
    def test_examples(self, vs):
        assert parse_polynomial(vs, "m[1,1]*m[2,2] - m[1,2]*m[2,1]").is_homogeneous()
        assert not parse_polynomial(vs, "m[1,1] + 1").is_homogeneous()
        assert Polynomial.zero(vs).is_homogeneous()
