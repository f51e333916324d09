import pytest

from a2braid.braid import flip_matrix, rho_generator, rho_word
from a2braid.coefficients import ONE, qnum
from a2braid.spider import delta, tet, theta
from a2braid.webs import DiagramError, Strip, pair, reduce_element
from a2braid.webs.oracle import (basis_web, bundle_dirs, generator_letters, gram_matrix,
                                 oracle_flip_matrix, oracle_generator_matrix, oracle_word_matrix,
                                 tet_web_value, theta_web_value, white_bibigon, white_bigon,
                                 word_letters)

GENS = [(i, j) for i in range(1, 5) for j in range(i + 1, 5)]


def test_generator_letters():
    assert generator_letters(1, 2) == [(1, 1), (1, 1)]
    assert generator_letters(1, 3) == [(2, -1), (1, 1), (1, 1), (2, 1)]
    with pytest.raises(ValueError):
        generator_letters(2, 2)


def test_word_letters_put_last_generator_at_bottom():
    assert word_letters("A(1,2) A(2,3)") == generator_letters(2, 3) + generator_letters(1, 2)


def test_basis_boundary():
    w = basis_web(1, 2, (1,))
    assert w.boundary_dirs() == ([], bundle_dirs(1, 2))


def test_cup_pairing():
    cup = Strip().cup(0, "u").close()
    s = reduce_element([(ONE, cup)])
    t = reduce_element([(ONE, cup.mirror())])
    assert pair(s, t) == qnum(3)


def test_pair_rejects_two_sided_webs():
    s = reduce_element([(ONE, Strip(["u"]).close())])
    with pytest.raises(DiagramError):
        pair(s, s)


def test_gram_is_diagonal():
    g = gram_matrix(1, 2)
    assert g.is_diagonal()
    assert g.diagonal_entries() == [delta(1, 0) ** 2, delta(1, 1)]


@pytest.mark.parametrize("i,j", GENS)
def test_generators_match_closed_form(i, j):
    assert oracle_generator_matrix(1, 2, i, j) == rho_generator(1, 2, i, j)


def test_word_matches_product():
    letters = word_letters("A(1,3) A(2,4)^-1")
    assert oracle_word_matrix(1, 2, letters) == rho_word(1, 2, "A(1,3) A(2,4)^-1")


def test_n0_is_identity():
    assert oracle_generator_matrix(0, 2, 1, 3).is_identity()


@pytest.mark.parametrize("n,i", [(n, i) for n in range(3) for i in range(n + 1)])
def test_theta_value(n, i):
    assert theta_web_value(n, i) == theta(n, i)


@pytest.mark.parametrize("n,i", [(n, i) for n in range(1, 3) for i in range(n + 1)])
def test_white_bigon_collapses_to_strand(n, i):
    strand = Strip(["u"] * i + ["d"] * i)
    from a2braid.webs import add_double_clasp
    add_double_clasp(strand, 0, i, i, "u")
    expect = reduce_element([(theta(n, i) / delta(i, i), strand.close())])
    assert white_bigon(n, i) == expect


@pytest.mark.parametrize("n,i", [(n, i) for n in range(1, 3) for i in range(n + 1)])
def test_white_bibigon_collapses_to_clasp(n, i):
    from a2braid.webs import add_clasp
    strand = Strip(["u"] * n)
    add_clasp(strand, 0, n, "u")
    expect = reduce_element([(theta(n, i) / delta(n, 0), strand.close())])
    assert white_bibigon(n, i) == expect


@pytest.mark.parametrize("n", [1, 2])
def test_tet_values(n):
    for i in range(n + 1):
        for j in range(n + 1):
            assert tet_web_value(n, i, j) == tet(n, i, j)


@pytest.mark.parametrize("n", [1, 2])
def test_flip_matrix(n):
    assert oracle_flip_matrix(n) == flip_matrix(n, 2)
