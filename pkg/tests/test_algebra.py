from itertools import product

import pytest

from tautilt.algebra import NonAdmissible, ParseError, algebra_from_text, parse_algebra


def count_paths(n_vertices, arrows, max_len=10):
    """Brute-force path count of an acyclic quiver (oracle for free path algebras)."""
    total = n_vertices
    layer = [(a,) for a in range(len(arrows))]
    while layer:
        total += len(layer)
        layer = [p + (b,) for p in layer for b in range(len(arrows)) if arrows[p[-1]][1] == arrows[b][0]]
    return total


def test_example_algebra_has_dimension_five(lam):
    assert lam.dimension == 5
    assert sorted(lam.labels) == sorted(["e1", "e2", "e3", "a", "b"])
    lam.check()


def test_one_vertex_algebra():
    alg = algebra_from_text("vertices: 1\n")
    assert alg.dimension == 1
    alg.check()


def test_a3_without_relations_counts_paths():
    alg = algebra_from_text("vertices: 3\narrow: a 1 2\narrow: b 2 3\n")
    assert alg.dimension == count_paths(3, [(0, 1), (1, 2)]) == 6
    alg.check()


def test_square_and_loop(extra_algebras):
    square, loop, cycle = extra_algebras
    # commutative square: 4 idempotents, 4 arrows, one surviving length-two path
    assert square.dimension == 9
    assert loop.dimension == 3
    for alg in extra_algebras:
        alg.check()


def test_dimension_is_sum_of_corner_spaces(extra_algebras, lam):
    for alg in extra_algebras + [lam]:
        n = alg.n_vertices
        assert alg.dimension == sum(len(alg.basis_between(i, j)) for i, j in product(range(n), repeat=2))


def test_rational_coefficients():
    text = "vertices: 4\narrow: a 1 2\narrow: b 1 3\narrow: c 2 4\narrow: d 3 4\nrelation: 3/2 a*c - 1 b*d\n"
    pres = parse_algebra(text)
    coefs = sorted(c for c, _ in pres.relations[0])
    assert [str(c) for c in coefs] == ["-1", "3/2"]
    assert algebra_from_text(text).dimension == 9


def test_opposite_is_involution(lam):
    op = lam.opposite()
    assert op.opposite() is lam
    assert op.dimension == lam.dimension
    op.check()


@pytest.mark.parametrize("text", [
    "arrow: a 1 2\n",                          # missing vertices
    "vertices: 2\narrow: a 1 5\n",             # endpoint out of range
    "vertices: 2\narrow: a 1 2\nrelation: a*z\n",  # unknown arrow
    "vertices: 2\nfoo: bar\n",                 # unknown key
    "vertices: x\n",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_algebra(text)


def test_non_admissible_relations():
    # an oriented cycle without relations is infinite-dimensional
    with pytest.raises(NonAdmissible):
        algebra_from_text("vertices: 2\narrow: a 1 2\narrow: b 2 1\n")
    # a relation of length one is not admissible
    with pytest.raises(NonAdmissible):
        algebra_from_text("vertices: 2\narrow: a 1 2\nrelation: a\n")
