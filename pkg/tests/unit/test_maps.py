import random
from fractions import Fraction

import pytest

from rigid_jets.exceptions import DimensionMismatch, NonZeroConstantTerm, OrderMismatch, SingularLinearPart
from rigid_jets.jetcore.maps import TruncatedPolyMap, apply_linear, jet_compose, jet_invert, jet_truncate
from rigid_jets.jetcore.polys import TruncatedPoly
from rigid_jets.utils import monomials_up_to


def _one_dim(order, *coefficients):
    return TruncatedPolyMap([TruncatedPoly(("x",), order, {(d + 1,): c for d, c in enumerate(coefficients)})])


def random_jet(rng: random.Random, n: int, k: int) -> TruncatedPolyMap:
    """A jet-group element: unit lower-triangular linear part plus random higher terms."""
    variables = tuple(f"w{i + 1}" for i in range(n))
    components = []
    for i in range(n):
        terms = {}
        for exps in monomials_up_to(n, k, start=1):
            if sum(exps) == 1:
                j = exps.index(1)
                if j > i:
                    continue
                terms[exps] = Fraction(1) if j == i else Fraction(rng.randint(-3, 3))
            elif rng.random() < 0.4:
                terms[exps] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        components.append(TruncatedPoly(variables, k, terms))
    return TruncatedPolyMap(components)


def test_compose_one_dimensional():
    f = _one_dim(3, 1, 1)
    assert jet_compose(f, f) == _one_dim(3, 1, 2, 2)


def test_compose_swap():
    u = TruncatedPoly.variable(0, ("u", "v"), 2)
    v = TruncatedPoly.variable(1, ("u", "v"), 2)
    f = TruncatedPolyMap([u + v * v, v])
    g = TruncatedPolyMap([v, u])
    assert jet_compose(f, g) == TruncatedPolyMap([v + u * u, u])


def test_invert_one_dimensional():
    assert jet_invert(_one_dim(3, 1, 1)) == _one_dim(3, 1, -1, 2)


def test_invert_linear_and_identity():
    identity = TruncatedPolyMap.identity(("u", "v"), 3)
    assert jet_invert(identity) == identity
    linear = TruncatedPolyMap.linear([[2, 1], [1, 1]], ("u", "v"), 3)
    assert jet_invert(linear) == TruncatedPolyMap.linear([[1, -1], [-1, 2]], ("u", "v"), 3)


SAMPLES = 200

JET_ORDERS = [
    (1, 5),
    (2, 3),
    (3, 3),
    pytest.param(2, 5, marks=pytest.mark.slow),
    pytest.param(3, 4, marks=pytest.mark.slow),
    pytest.param(2, 7, marks=pytest.mark.slow),
]


@pytest.mark.parametrize("n,k", JET_ORDERS)
def test_group_laws_on_random_elements(rng, n, k):
    for _ in range(SAMPLES):
        f, g, h = (random_jet(rng, n, k) for _ in range(3))
        identity = TruncatedPolyMap.identity(f.variables, k)
        assert jet_compose(f, jet_invert(f)) == identity
        assert jet_compose(jet_invert(f), f) == identity
        assert jet_compose(jet_compose(f, g), h) == jet_compose(f, jet_compose(g, h))
        assert jet_compose(f, identity) == f
        assert jet_compose(identity, f) == f


@pytest.mark.parametrize("n,k", JET_ORDERS)
def test_truncation_is_a_homomorphism(rng, n, k):
    for _ in range(SAMPLES):
        f, g = random_jet(rng, n, k), random_jet(rng, n, k)
        composed = jet_compose(f, g)
        for j in range(1, k + 1):
            assert jet_truncate(composed, j) == jet_compose(jet_truncate(f, j), jet_truncate(g, j))


def test_truncate():
    f = _one_dim(3, 1, 1, 1)
    assert jet_truncate(f, 2) == _one_dim(2, 1, 1)
    identity = TruncatedPolyMap.identity(("u", "v"), 4)
    assert jet_truncate(identity, 2).is_identity()
    with pytest.raises(OrderMismatch):
        jet_truncate(f, 4)


def test_kernel_element_truncates_to_identity():
    k = 4
    variables = ("xi1", "eta")
    identity = TruncatedPolyMap.identity(variables, k)
    eta = identity[1]
    H = TruncatedPolyMap([identity[0] + eta ** k, eta])
    assert jet_truncate(H, k - 1).is_identity()
    assert H.lowest_nontrivial_order() == k


def test_compose_requires_fixed_base_point():
    f = _one_dim(2, 1)
    moved = TruncatedPolyMap([TruncatedPoly(("x",), 2, {(0,): 1, (1,): 1})])
    with pytest.raises(NonZeroConstantTerm):
        jet_compose(f, moved)


def test_invert_singular():
    singular = TruncatedPolyMap.linear([[1, 1], [1, 1]], ("u", "v"), 2)
    assert not singular.is_jet_group_element()
    assert TruncatedPolyMap.linear([[2, 1], [1, 1]], ("u", "v"), 2).is_jet_group_element()
    with pytest.raises(SingularLinearPart):
        jet_invert(singular)


def test_apply_linear_dimensions():
    identity = TruncatedPolyMap.identity(("u", "v"), 2)
    assert apply_linear([[0, 1], [1, 0]], identity) == TruncatedPolyMap.linear([[0, 1], [1, 0]], ("u", "v"), 2)
    with pytest.raises(DimensionMismatch):
        apply_linear([[1, 0, 0]], identity)
