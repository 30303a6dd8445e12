from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from relhopf.tensorlin import (GF, Q, Field, FieldMismatch, LinearMap, ShapeMismatch, Wire,
                               compose, convolution_inverse, flip, identity, invert,
                               nullspace, permute_factors, rank, rref, solve, tensor_of_maps,
                               zero_map)

F5 = GF(5)
FIELDS = [GF(2), GF(5), GF(7), Q]


def rand_map(field, cod, dom, data):
    n = int(np.prod(cod or (1,))) * int(np.prod(dom or (1,)))
    vals = data.draw(st.lists(st.integers(-4, 4), min_size=n, max_size=n))
    return LinearMap(field, cod, dom, np.array(vals, dtype=object).reshape(
        int(np.prod(cod or (1,))), -1))


dims = st.lists(st.integers(1, 3), min_size=1, max_size=2).map(tuple)
fields = st.sampled_from(FIELDS)


def test_field_parsing_and_formatting():
    assert Field.from_str("rationals") == Q
    assert Field.from_str("prime-field 7") == GF(7)
    assert Q.parse("-3/6") == Fraction(-1, 2)
    assert Q.format(Fraction(4, 2)) == "2"
    assert Q.format(Fraction(-1, 3)) == "-1/3"
    assert GF(5).parse("1/2") == 3
    assert GF(5).parse(-1) == 4
    with pytest.raises(ValueError):
        Q.parse("1/0")
    with pytest.raises(ZeroDivisionError):
        GF(5).parse("1/5")
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        Field.from_str("reals")
    with pytest.raises(ValueError):
        Q.parse(True)


def test_field_inverse():
    for x in range(1, 7):
        assert GF(7)(x * GF(7).inv(x)) == 1
    assert Q.inv(Fraction(2, 3)) == Fraction(3, 2)
    with pytest.raises(ZeroDivisionError):
        Q.inv(0)


def test_linear_map_validates_shapes():
    with pytest.raises(ShapeMismatch):
        LinearMap(F5, (2,), (3,), [[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        LinearMap(F5, (0,), (1,), [])


def test_compose_and_tensor_errors():
    a = identity(F5, 2)
    with pytest.raises(ShapeMismatch):
        compose(a, identity(F5, 3))
    with pytest.raises(FieldMismatch):
        compose(a, identity(GF(7), 2))
    with pytest.raises(FieldMismatch):
        tensor_of_maps(a, identity(Q, 2))


def test_unit_object_is_empty_tuple():
    one = identity(F5, ())
    assert one.shape == (1, 1)
    f = LinearMap(F5, (2,), (2,), [[1, 2], [3, 4]])
    assert tensor_of_maps(f, one) == f
    assert tensor_of_maps(one, f) == f


def test_equality_squeezes_one_dimensional_factors():
    f = LinearMap(F5, (2,), (2,), [[1, 2], [3, 4]])
    g = f.with_dims(cod=(2, 1), dom=(1, 2))
    assert f == g
    assert f != f.with_dims(cod=(2,), dom=(2,)).scale(2)


@given(fields, dims, dims, st.data())
def test_interchange_law(field, a, b, data):
    f1 = rand_map(field, a, a, data)
    f2 = rand_map(field, a, a, data)
    g1 = rand_map(field, b, b, data)
    g2 = rand_map(field, b, b, data)
    lhs = compose(tensor_of_maps(f1, g1), tensor_of_maps(f2, g2))
    rhs = tensor_of_maps(compose(f1, f2), compose(g1, g2))
    assert lhs == rhs


@given(fields, dims, st.data())
def test_composition_associative(field, a, data):
    f, g, h = (rand_map(field, a, a, data) for _ in range(3))
    assert compose(f, compose(g, h)) == compose(compose(f, g), h)


@given(st.lists(st.integers(1, 3), min_size=1, max_size=4), st.data())
def test_permute_is_a_homomorphism(dims_, data):
    n = len(dims_)
    p = data.draw(st.permutations(range(n)))
    q = data.draw(st.permutations(range(n)))
    P = permute_factors(F5, dims_, p)
    Qm = permute_factors(F5, P.cod, q)
    pq = [p[q[j]] for j in range(n)]
    assert compose(Qm, P) == permute_factors(F5, dims_, pq)
    inv = [p.index(j) for j in range(n)]
    assert compose(permute_factors(F5, P.cod, inv), P) == identity(F5, tuple(dims_))


@given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 3))
def test_flip_hexagon_and_braid(a, b, c):
    F = F5
    ia, ib, ic = identity(F, a), identity(F, b), identity(F, c)
    # c_{A, B x C} = (id_B x c_{A,C}) (c_{A,B} x id_C)
    lhs = permute_factors(F, (a, b, c), (1, 2, 0))
    rhs = compose(tensor_of_maps(ib, flip(F, a, c)), tensor_of_maps(flip(F, a, b), ic))
    assert lhs == rhs
    # Yang-Baxter
    l = compose(tensor_of_maps(flip(F, b, c), ia),
                compose(tensor_of_maps(ib, flip(F, a, c)), tensor_of_maps(flip(F, a, b), ic)))
    r = compose(tensor_of_maps(ic, flip(F, a, b)),
                compose(tensor_of_maps(flip(F, a, c), ib), tensor_of_maps(ia, flip(F, b, c))))
    assert l == r
    assert compose(flip(F, b, a), flip(F, a, b)) == identity(F, (a, b))


@given(fields, dims, dims, st.data())
def test_flip_naturality(field, a, b, data):
    f = rand_map(field, a, a, data)
    g = rand_map(field, b, b, data)
    na, nb = int(np.prod(a)), int(np.prod(b))
    f, g = f.with_dims(cod=(na,), dom=(na,)), g.with_dims(cod=(nb,), dom=(nb,))
    assert compose(flip(field, na, nb), tensor_of_maps(f, g)) == \
        compose(tensor_of_maps(g, f), flip(field, na, nb))


@given(fields, st.integers(1, 4), st.data())
def test_invert_roundtrip(field, n, data):
    f = rand_map(field, (n,), (n,), data)
    inv = invert(f)
    full = rank(field, f.entries) == n
    assert (inv is not None) == full
    if inv is not None:
        assert compose(f, inv) == identity(field, n)
        assert compose(inv, f) == identity(field, n)


@given(fields, st.integers(1, 4), st.integers(1, 4), st.data())
def test_nullspace_and_solve(field, r, c, data):
    m = rand_map(field, (r,), (c,), data).entries
    ns = nullspace(field, m)
    assert ns.shape[1] == c - rank(field, m)
    if ns.shape[1]:
        assert not np.any(field.matmul(m, ns) != 0)
    x = field.array([data.draw(st.integers(-3, 3)) for _ in range(c)]).reshape(c, 1)
    b = field.matmul(m, x)
    sol = solve(field, m, b)
    assert sol is not None and np.array_equal(field.matmul(m, sol), b)


def test_solve_inconsistent():
    m = F5.array([[1, 0], [0, 0]])
    assert solve(F5, m, F5.array([[0], [1]])) is None


def test_rref_pivots_rationals():
    a, piv = rref(Q, Q.array([[2, 4], [1, 2]]))
    assert piv == [0]
    assert a[0, 1] == 2 and a[1, 1] == 0


def test_invert_singular_returns_none():
    assert invert(LinearMap(Q, (2,), (2,), [[1, 2], [2, 4]])) is None
    with pytest.raises(ShapeMismatch):
        invert(LinearMap(Q, (2,), (3,), [[1, 2, 3], [2, 4, 5]]))


def test_large_prime_uses_exact_path():
    p = 2**31 - 1
    F = GF(p)
    f = LinearMap(F, (2,), (2,), [[p - 1, p - 2], [3, p - 5]])
    g = compose(f, f)
    want = (np.array([[p - 1, p - 2], [3, p - 5]], dtype=object) @
            np.array([[p - 1, p - 2], [3, p - 5]], dtype=object)) % p
    assert g.entries.tolist() == want.tolist()


def test_wire_matches_explicit_composition():
    F = F5
    m = LinearMap(F, (2,), (2, 2), [[1, 2, 3, 4], [0, 1, 1, 2]])
    d = LinearMap(F, (2, 2), (2,), [[1, 0], [2, 1], [0, 3], [1, 1]])
    w = Wire(F, ("a", 2), ("b", 2))
    w.apply(d, "b", "b1 b2").apply(m, "a b1", "c")
    got = w.result("c b2")
    want = compose(tensor_of_maps(m, identity(F, 2)), tensor_of_maps(identity(F, 2), d))
    assert got == want
    w = Wire(F, ("a", 2), ("b", 2))
    assert w.result("b a") == flip(F, 2, 2)


def test_wire_errors():
    w = Wire(F5, ("a", 2))
    with pytest.raises(KeyError):
        w.apply(identity(F5, 2), "z", "y")
    with pytest.raises(ShapeMismatch):
        w.apply(identity(F5, 3), "a", "y")
    with pytest.raises(ValueError):
        Wire(F5, ("a", 2), ("a", 2))
    with pytest.raises(ValueError):
        Wire(F5, ("a", 2)).result("b")


def test_wire_scalar_inputs():
    v = LinearMap(F5, (2,), (), [[1], [2]])
    w = Wire(F5)
    w.apply(v, "", "x").apply(v, "", "y")
    assert w.result("x y") == tensor_of_maps(v, v)


def test_convolution_inverse_of_identity_is_antipode(h4):
    H = h4[0]
    assert convolution_inverse(H, H, identity(H.field, H.dim)) == H.antipode


def test_convolution_inverse_missing():
    from relhopf.catalog import trivial_hopf
    k = trivial_hopf(F5)
    assert convolution_inverse(k, k, zero_map(F5, (1,), (1,))) is None
