import pytest
from hypothesis import given, strategies as st

from a2braid.braid import (PureBraidWord, basis, basis_dim, birman_relations, check_pure_braid_relations,
                           flip_matrix, gen_central, parse_word, rho_generator, rho_word, shift_matrix)
from a2braid.coefficients import monomial
from a2braid.linalg import RepMatrix
from a2braid.spider import sixj_square
from a2braid.triangulation import t0


def test_basis_is_lex():
    assert basis(1, 3) == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert basis_dim(2, 3) == 9


def test_bad_nk():
    with pytest.raises(ValueError):
        basis(-1, 2)
    with pytest.raises(ValueError):
        basis(1, 1)


def test_central_generator_frozen():
    m = rho_generator(1, 2, 2, 3)
    assert m == RepMatrix.diagonal([monomial(-16), monomial(2)])


@pytest.mark.parametrize("n,k", [(n, k) for n in range(3) for k in (2, 3)])
def test_central_generator_eigenvalues(n, k):
    m = gen_central(n, k)
    assert m.is_diagonal()
    expect = [monomial(-4 * (n * n + 3 * n) + 6 * (js[0] ** 2 + 2 * js[0])) for js in basis(n, k)]
    assert m.diagonal_entries() == expect


@pytest.mark.parametrize("n", [1, 2])
def test_flip_matrix_is_recoupling_block(n):
    f = flip_matrix(n, 2, t0(2), 0)
    for b in range(n + 1):
        for j in range(n + 1):
            assert f[b, j] == sixj_square(n, j, b)
    assert (f @ f).is_identity()


def test_shift_matrix_is_invertible():
    s = shift_matrix(1, 2)
    assert not s.det().is_zero()


def test_parse_word_forms():
    w = parse_word("A(1,3) A(2,4)^-1 * A(1,2)^{-1}")
    assert w.letters == ((1, 3, 1), (2, 4, -1), (1, 2, -1))
    assert str(parse_word(str(w))) == str(w)
    assert len(parse_word("1")) == 0
    with pytest.raises(ValueError):
        parse_word("A(1,3) B")
    with pytest.raises(ValueError):
        parse_word("A(3,1)")


def test_word_checked_against_k():
    with pytest.raises(ValueError):
        rho_word(1, 2, "A(1,5)")


letters = st.tuples(st.integers(1, 3), st.integers(2, 4), st.sampled_from([1, -1])).filter(
    lambda t: t[0] < t[1])
words = st.lists(letters, max_size=3).map(lambda ls: PureBraidWord(tuple(ls)))


@given(words, words)
def test_rho_is_homomorphism(a, b):
    assert rho_word(1, 2, a + b) == rho_word(1, 2, a) @ rho_word(1, 2, b)


@given(words)
def test_rho_of_inverse(a):
    assert (rho_word(1, 2, a) @ rho_word(1, 2, a.inverse())).is_identity()


def test_birman_count():
    assert len(birman_relations(4)) == 12
    assert len(birman_relations(6)) == 100


def test_relations_k2():
    res = check_pure_braid_relations(1, 2)
    assert all(r.passed for r in res), [r.name for r in res if not r.passed]
