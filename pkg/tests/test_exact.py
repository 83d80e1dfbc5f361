"""Field, polynomial, and matrix layer against independent oracles."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wdseg import (
    DomainError,
    FieldMismatchError,
    Fp,
    Matrix,
    NotNilpotentError,
    NotPIntegralError,
    NotUnipotentError,
    Polynomial,
    PrimeField,
    QQ,
    WildCharacteristicError,
    jordan_chevalley,
    nilpotent_exp,
    nilpotent_log,
    reduce_mod_p,
)
from wdseg.exact import (
    factorize,
    is_prime,
    is_semisimple,
    multiplicative_order,
    prime_field_roots,
    rational_roots,
    squarefree_part,
)

from helpers import det_cofactor, rank_gauss_fp, rank_gauss_qq

F5 = PrimeField(5)
F7 = PrimeField(7)

fractions_st = st.fractions(min_value=-3, max_value=3, max_denominator=3)


def qq_matrix_st(nmax=4):
    return st.integers(1, nmax).flatmap(
        lambda n: st.lists(
            st.lists(fractions_st, min_size=n, max_size=n), min_size=n, max_size=n
        ).map(lambda rows: Matrix.from_rows(QQ, rows))
    )


def fp_matrix_st(p, nmax=4):
    fld = PrimeField(p)
    return st.integers(1, nmax).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(0, p - 1), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        ).map(lambda rows: Matrix.from_rows(fld, rows))
    )


# ---------------------------------------------------------------- fields


def test_fp_arithmetic_table():
    a, b = Fp(2, 5), Fp(4, 5)
    assert (a + b).val == 1
    assert (a - b).val == 3
    assert (a * b).val == 3
    assert (b / a).val == 2
    assert (a ** -1).val == 3
    assert a == 2 and b == -1  # int comparison mod p
    with pytest.raises(FieldMismatchError):
        _ = Fp(1, 5) + Fp(1, 7)


def test_fp_zero_inverse():
    with pytest.raises(DomainError):
        _ = Fp(0, 5) ** -1


def test_rationals_decode():
    assert QQ.decode("3/4") == Fraction(3, 4)
    assert QQ.decode("-7") == Fraction(-7)
    assert QQ.decode("+2") == Fraction(2)
    assert QQ.decode("4/6") == Fraction(2, 3)
    for bad in ["1.5", "a", "1/2/3", "", "1/-2", None]:
        with pytest.raises(DomainError):
            QQ.decode(bad)
    with pytest.raises(DomainError):
        QQ.decode(3)
    for zero_den in ["3/0", "3/00", "0/0"]:
        with pytest.raises(DomainError):
            QQ.decode(zero_den)


def test_rationals_encode_round():
    assert QQ.encode(Fraction(-2, 6)) == "-1/3"
    assert QQ.encode(Fraction(5)) == "5"


def test_prime_field_construction():
    with pytest.raises(DomainError):
        PrimeField(6)
    with pytest.raises(DomainError):
        PrimeField(1)
    assert PrimeField(5) == PrimeField(5)
    assert PrimeField(5) != PrimeField(7)
    assert PrimeField(5) != QQ


def test_prime_field_coerce_rejects_fractions():
    with pytest.raises(FieldMismatchError):
        F5.coerce(Fraction(1, 2))
    with pytest.raises(DomainError):
        F5.decode(True)
    with pytest.raises(DomainError):
        F5.decode("3")


def test_number_theory_helpers():
    assert is_prime(2) and is_prime(97) and not is_prime(1) and not is_prime(91)
    assert factorize(12) == {2: 2, 3: 1}
    assert factorize(8) == {2: 3}
    assert multiplicative_order(2, 5) == 4
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(3, 7) == 6


# --------------------------------------------------------------- matrices


@settings(max_examples=60)
@given(qq_matrix_st())
def test_det_matches_cofactor_oracle(m):
    assert m.det() == det_cofactor(m.rows())


@settings(max_examples=60)
@given(fp_matrix_st(5))
def test_det_matches_cofactor_oracle_mod_p(m):
    assert m.det() == det_cofactor(m.rows())


@settings(max_examples=60)
@given(qq_matrix_st())
def test_rank_matches_gauss_oracle(m):
    assert m.rank() == rank_gauss_qq(m.rows())


@settings(max_examples=60)
@given(fp_matrix_st(7))
def test_rank_matches_gauss_oracle_mod_p(m):
    assert m.rank() == rank_gauss_fp([[e.val for e in r] for r in m.rows()], 7)


@settings(max_examples=40)
@given(qq_matrix_st())
def test_inverse_and_solve(m):
    if m.det() == 0:
        with pytest.raises(DomainError):
            m.inverse()
        return
    inv = m.inverse()
    assert m * inv == Matrix.identity(QQ, m.nrows)
    rhs = Matrix.from_rows(QQ, [[Fraction(i + 1)] for i in range(m.nrows)])
    x = m.solve(rhs)
    assert m * x == rhs


@settings(max_examples=40)
@given(qq_matrix_st())
def test_nullspace_dimensions(m):
    ns = m.nullspace()
    assert (m * ns).is_zero()
    assert ns.ncols == m.ncols - m.rank()
    assert ns.rank() == ns.ncols


@settings(max_examples=40)
@given(qq_matrix_st())
def test_cayley_hamilton(m):
    assert m.charpoly()(m).is_zero()


@settings(max_examples=40)
@given(fp_matrix_st(7))
def test_cayley_hamilton_mod_p(m):
    assert m.charpoly()(m).is_zero()


def test_charpoly_frozen_2x2():
    m = Matrix.from_rows(QQ, [[1, 2], [3, 4]])
    cp = m.charpoly()
    # x^2 - 5x - 2, stored low coefficient first
    assert cp.coeffs == (Fraction(-2), Fraction(-5), Fraction(1))
    assert cp.coeff(0) == m.det()  # even dimension: det = constant term


def test_zero_width_shapes():
    z = Matrix.zeros(QQ, 0, 3)
    assert z.rank() == 0
    sq = Matrix.zeros(QQ, 0, 0)
    assert sq.det() == 1
    assert sq.charpoly().degree <= 0


# ------------------------------------------------------------ polynomials


def test_polynomial_division():
    x = Polynomial.variable(QQ)
    f = (x - 1) * (x + 2) * (x - 3)
    g = x + 2
    q, r = divmod(f, g)
    assert r.degree == -1
    assert q * g == f
    with pytest.raises(DomainError):
        divmod(f, Polynomial.constant(QQ, 0))


def test_squarefree_part_frozen():
    x = Polynomial.variable(QQ)
    f = (x - 1) * (x - 1) * (x + 2)
    assert squarefree_part(f) == (x - 1) * (x + 2)


def test_squarefree_wild_characteristic():
    F2 = PrimeField(2)
    x = Polynomial.variable(F2)
    with pytest.raises(WildCharacteristicError):
        squarefree_part(x * x)


def test_rational_roots_frozen():
    x = Polynomial.variable(QQ)
    f = Polynomial.constant(QQ, 6) * x * x - Polynomial.constant(QQ, 5) * x \
        + Polynomial.constant(QQ, 1)
    assert rational_roots(f) == {Fraction(1, 2): 1, Fraction(1, 3): 1}
    assert rational_roots(x * x + Polynomial.constant(QQ, 1)) == {}


def test_prime_field_roots_frozen():
    x = Polynomial.variable(F7)
    f = x * x - Polynomial.constant(F7, 1)
    assert {r.val: m for r, m in prime_field_roots(f).items()} == {1: 1, 6: 1}
    y = Polynomial.variable(F5)
    g = (y - Polynomial.constant(F5, 2)) ** 3
    assert {r.val: m for r, m in prime_field_roots(g).items()} == {2: 3}
    F3 = PrimeField(3)
    z = Polynomial.variable(F3)
    assert prime_field_roots(z * z + Polynomial.constant(F3, 1)) == {}


def test_prime_field_roots_large_prime():
    # big enough to exercise the probabilistic splitting path
    p = 10007
    fld = PrimeField(p)
    x = Polynomial.variable(fld)
    f = (x - Polynomial.constant(fld, 3)) * (x - Polynomial.constant(fld, 9999)) \
        * (x - Polynomial.constant(fld, 3))
    assert {r.val: m for r, m in prime_field_roots(f).items()} == {3: 2, 9999: 1}


# ------------------------------------------------------- decompositions


def test_jordan_chevalley_frozen():
    m = Matrix.from_rows(QQ, [[1, 1], [0, 1]])
    s, u = jordan_chevalley(m)
    assert s == Matrix.identity(QQ, 2)
    assert u == m
    d = Matrix.from_rows(QQ, [[2, 1], [0, 1]])
    s, u = jordan_chevalley(d)
    assert s == d and u == Matrix.identity(QQ, 2)


def test_jordan_chevalley_properties():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 4)
        while True:
            m = Matrix.from_rows(
                QQ, [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
            )
            if m.det() != 0:
                break
        s, u = jordan_chevalley(m)
        assert s * u == m
        assert s * u == u * s
        assert is_semisimple(s)
        assert ((u - Matrix.identity(QQ, n)) ** n).is_zero()


def test_jordan_chevalley_rejects():
    with pytest.raises(DomainError):
        jordan_chevalley(Matrix.zeros(QQ, 2, 2))  # singular
    F3 = PrimeField(3)
    big = Matrix.identity(F3, 4)
    with pytest.raises(WildCharacteristicError):
        jordan_chevalley(big)


def test_nilpotent_log_exp_frozen():
    u = Matrix.from_rows(QQ, [[1, 1], [0, 1]])
    n = nilpotent_log(u)
    assert n == Matrix.from_rows(QQ, [[0, 1], [0, 0]])
    assert nilpotent_exp(n) == u


def test_nilpotent_log_exp_roundtrip():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(1, 5)
        strict = Matrix.from_rows(
            QQ,
            [
                [Fraction(rng.randint(-2, 2)) if j > i else Fraction(0) for j in range(n)]
                for i in range(n)
            ],
        )
        u = Matrix.identity(QQ, n) + strict
        assert nilpotent_exp(nilpotent_log(u)) == u
        assert nilpotent_log(nilpotent_exp(strict)) == strict


def test_nilpotent_guards():
    m = Matrix.from_rows(QQ, [[1, 0], [0, 2]])
    with pytest.raises(NotUnipotentError):
        nilpotent_log(m)
    with pytest.raises(NotNilpotentError):
        nilpotent_exp(m)
    F3 = PrimeField(3)
    with pytest.raises(WildCharacteristicError):
        nilpotent_log(Matrix.identity(F3, 3))


def test_reduce_mod_p():
    m = Matrix.from_rows(QQ, [[Fraction(1, 2), 1], [0, 3]])
    r = reduce_mod_p(m, 5)
    assert r == Matrix.from_rows(F5, [[3, 1], [0, 3]])
    bad = Matrix.from_rows(QQ, [[Fraction(1, 5)]])
    with pytest.raises(NotPIntegralError) as exc:
        reduce_mod_p(bad, 5)
    assert "denominator" in str(exc.value)
