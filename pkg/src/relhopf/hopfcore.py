"""Structure-constant (co)algebras, bialgebras and Hopf algebras, with axiom checkers.

Validity is never a construction invariant: the data classes only check shapes,
and the ``check_*`` functions report which axioms hold.  Malformed candidates
are first-class so that negative examples can be built and inspected.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .report import CheckReport
from .tensorlin import (
    Field, LinearMap, ShapeMismatch, Wire, compose, convolution_inverse, flip,
    identity, invert, tensor_of_maps,
)


def _expect(f: LinearMap, cod, dom, what: str):
    if tuple(f.cod) != tuple(cod) or tuple(f.dom) != tuple(dom):
        raise ShapeMismatch(f"{what} should map {dom} -> {cod}, got {f.dom} -> {f.cod}")


@dataclass(frozen=True, eq=True)
class AlgebraData:
    mult: LinearMap
    unit: LinearMap

    def __post_init__(self):
        d = self.dim
        _expect(self.mult, (d,), (d, d), "multiplication")
        _expect(self.unit, (d,), (), "unit")

    @property
    def dim(self) -> int:
        return self.unit.cod[0]

    @property
    def field(self) -> Field:
        return self.unit.field


@dataclass(frozen=True, eq=True)
class CoalgebraData:
    comult: LinearMap
    counit: LinearMap

    def __post_init__(self):
        d = self.dim
        _expect(self.comult, (d, d), (d,), "comultiplication")
        _expect(self.counit, (), (d,), "counit")

    @property
    def dim(self) -> int:
        return self.counit.dom[0]

    @property
    def field(self) -> Field:
        return self.counit.field


@dataclass(frozen=True, eq=True)
class BialgebraData:
    mult: LinearMap
    unit: LinearMap
    comult: LinearMap
    counit: LinearMap

    def __post_init__(self):
        AlgebraData(self.mult, self.unit)
        CoalgebraData(self.comult, self.counit)
        if self.unit.cod != self.counit.dom:
            raise ShapeMismatch("algebra and coalgebra live on different carriers")
        if self.unit.field != self.counit.field:
            raise ValueError("algebra and coalgebra over different fields")

    @property
    def dim(self) -> int:
        return self.unit.cod[0]

    @property
    def field(self) -> Field:
        return self.unit.field

    @property
    def algebra(self) -> AlgebraData:
        return AlgebraData(self.mult, self.unit)

    @property
    def coalgebra(self) -> CoalgebraData:
        return CoalgebraData(self.comult, self.counit)

    @property
    def bialgebra(self) -> "BialgebraData":
        return BialgebraData(self.mult, self.unit, self.comult, self.counit)


@dataclass(frozen=True, eq=True)
class HopfData(BialgebraData):
    antipode: LinearMap = None

    def __post_init__(self):
        super().__post_init__()
        if self.antipode is None:
            raise ValueError("HopfData needs an antipode")
        _expect(self.antipode, (self.dim,), (self.dim,), "antipode")


@dataclass(frozen=True, eq=True)
class RMatrix:
    """An element R of H (x) H, stored as a map from the unit object."""

    element: LinearMap

    @classmethod
    def from_coeffs(cls, field: Field, coeffs) -> "RMatrix":
        rows = field.array(coeffs)
        d = rows.shape[0]
        return cls(LinearMap(field, (d, d), (), rows.reshape(-1, 1)))

    @property
    def dim(self) -> int:
        return self.element.cod[0]

    def coeffs(self):
        return self.element.entries.reshape(self.dim, self.dim)


@dataclass(frozen=True, eq=True)
class SigmaForm:
    """A bilinear form on H, stored as a map H (x) H -> k."""

    form: LinearMap

    @classmethod
    def from_coeffs(cls, field: Field, coeffs) -> "SigmaForm":
        rows = field.array(coeffs)
        d = rows.shape[0]
        return cls(LinearMap(field, (), (d, d), rows.reshape(1, -1)))

    @property
    def dim(self) -> int:
        return self.form.dom[0]

    def coeffs(self):
        return self.form.entries.reshape(self.dim, self.dim)


# derived maps

def opposite_comult(C) -> LinearMap:
    return compose(flip(C.field, C.dim, C.dim), C.comult)


def opposite_mult(A) -> LinearMap:
    return compose(A.mult, flip(A.field, A.dim, A.dim))


def is_cocommutative(C) -> bool:
    return C.comult == opposite_comult(C)


def is_commutative(A) -> bool:
    return A.mult == opposite_mult(A)


def iterated_comult(C) -> LinearMap:
    """h -> h1 (x) h2 (x) h3."""
    return compose(tensor_of_maps(C.comult, identity(C.field, C.dim)), C.comult)


def tensor_square_coalgebra(C) -> CoalgebraData:
    """C (x) C with comultiplication (a1 b1) (x) (a2 b2)."""
    d = C.dim
    w = Wire(C.field, ("a", d), ("b", d))
    w.apply(C.comult, "a", "a1 a2").apply(C.comult, "b", "b1 b2")
    comult = w.result("a1 b1 a2 b2").with_dims(cod=(d * d, d * d), dom=(d * d,))
    counit = tensor_of_maps(C.counit, C.counit).with_dims(dom=(d * d,))
    return CoalgebraData(comult, counit)


def ground_algebra(field: Field) -> AlgebraData:
    one = LinearMap(field, (1,), (1, 1), [[1]])
    return AlgebraData(one, LinearMap(field, (1,), (), [[1]]))


# checkers

def check_algebra(A) -> CheckReport:
    F, d = A.field, A.dim
    i = identity(F, d)
    rep = CheckReport()
    rep.expect_equal("associativity",
                     compose(A.mult, tensor_of_maps(A.mult, i)),
                     compose(A.mult, tensor_of_maps(i, A.mult)))
    rep.expect_equal("left unit", compose(A.mult, tensor_of_maps(A.unit, i)), i)
    rep.expect_equal("right unit", compose(A.mult, tensor_of_maps(i, A.unit)), i)
    return rep


def check_coalgebra(C) -> CheckReport:
    F, d = C.field, C.dim
    i = identity(F, d)
    rep = CheckReport()
    rep.expect_equal("coassociativity",
                     compose(tensor_of_maps(C.comult, i), C.comult),
                     compose(tensor_of_maps(i, C.comult), C.comult))
    rep.expect_equal("left counit", compose(tensor_of_maps(C.counit, i), C.comult), i)
    rep.expect_equal("right counit", compose(tensor_of_maps(i, C.counit), C.comult), i)
    return rep


def check_bialgebra(B) -> CheckReport:
    """Algebra and coalgebra axioms plus: Delta and eps are algebra maps."""
    F, d = B.field, B.dim
    rep = CheckReport()
    rep.extend(check_algebra(B))
    rep.extend(check_coalgebra(B))
    w = Wire(F, ("a", d), ("b", d))
    w.apply(B.comult, "a", "a1 a2").apply(B.comult, "b", "b1 b2")
    w.apply(B.mult, "a1 b1", "c1").apply(B.mult, "a2 b2", "c2")
    rep.expect_equal("comultiplication multiplicative",
                     compose(B.comult, B.mult), w.result("c1 c2"))
    rep.expect_equal("counit multiplicative",
                     compose(B.counit, B.mult), tensor_of_maps(B.counit, B.counit))
    rep.expect_equal("comultiplication unital",
                     compose(B.comult, B.unit), tensor_of_maps(B.unit, B.unit))
    rep.expect_equal("counit unital", compose(B.counit, B.unit), identity(F, ()))
    return rep


def convolution(A, C, f: LinearMap, g: LinearMap) -> LinearMap:
    """The convolution product m (f x g) Delta."""
    return compose(A.mult, compose(tensor_of_maps(f, g), C.comult))


def check_hopf(H: HopfData) -> CheckReport:
    rep = check_bialgebra(H)
    i = identity(H.field, H.dim)
    ue = compose(H.unit, H.counit)
    rep.expect_equal("left antipode", convolution(H, H, H.antipode, i), ue)
    rep.expect_equal("right antipode", convolution(H, H, i, H.antipode), ue)
    return rep


def antipode_inverse(H: HopfData) -> LinearMap:
    inv = invert(H.antipode)
    if inv is None:
        raise ValueError("antipode is singular; the Hopf data is corrupted")
    return inv


def antipode_from_convolution(H: BialgebraData) -> LinearMap | None:
    """The convolution inverse of the identity, if any."""
    return convolution_inverse(H, H, identity(H.field, H.dim))


def _tensor_cube_product(H, left: LinearMap, right: LinearMap) -> LinearMap:
    """Product of two elements of H (x) H (x) H."""
    w = Wire(H.field)
    w.apply(left, "", "a1 a2 a3").apply(right, "", "b1 b2 b3")
    for k in "123":
        w.apply(H.mult, f"a{k} b{k}", f"c{k}")
    return w.result("c1 c2 c3")


def _legs(H, R: LinearMap, places: str) -> LinearMap:
    """R placed into two of three tensor legs, e.g. places='13' gives R13."""
    w = Wire(H.field)
    w.apply(R, "", "r1 r2")
    spare = ({"1", "2", "3"} - set(places)).pop()
    w.apply(H.unit, "", f"u{spare}")
    names = {places[0]: "r1", places[1]: "r2", spare: f"u{spare}"}
    return w.result(" ".join(names[k] for k in "123"))


def check_quasitriangular(H: HopfData, R: RMatrix) -> CheckReport:
    """(eps x id)R = 1 = (id x eps)R, (Delta x id)R = R13 R23,
    (id x Delta)R = R13 R12, R invertible, and R Delta(h) = Delta^op(h) R."""
    F, d = H.field, H.dim
    r = R.element
    i = identity(F, d)
    rep = CheckReport()
    rep.expect_equal("(eps x id)R = 1", compose(tensor_of_maps(H.counit, i), r), H.unit)
    rep.expect_equal("(id x eps)R = 1", compose(tensor_of_maps(i, H.counit), r), H.unit)
    r13, r23, r12 = _legs(H, r, "13"), _legs(H, r, "23"), _legs(H, r, "12")
    rep.expect_equal("(Delta x id)R = R13 R23",
                     compose(tensor_of_maps(H.comult, i), r),
                     _tensor_cube_product(H, r13, r23))
    rep.expect_equal("(id x Delta)R = R13 R12",
                     compose(tensor_of_maps(i, H.comult), r),
                     _tensor_cube_product(H, r13, r12))
    rinv = compose(tensor_of_maps(H.antipode, i), r)
    one = tensor_of_maps(H.unit, H.unit)
    rep.expect_equal("R invertible", _tensor_square_product(H, r, rinv), one)

    w = Wire(F, ("h", d))
    w.apply(r, "", "p q").apply(H.comult, "h", "h1 h2")
    w.apply(H.mult, "p h1", "s").apply(H.mult, "q h2", "t")
    lhs = w.result("s t")
    w = Wire(F, ("h", d))
    w.apply(H.comult, "h", "h1 h2").apply(r, "", "p q")
    w.apply(H.mult, "h2 p", "s").apply(H.mult, "h1 q", "t")
    rep.expect_equal("intertwining", lhs, w.result("s t"))
    return rep


def _tensor_square_product(H, x: LinearMap, y: LinearMap) -> LinearMap:
    w = Wire(H.field)
    w.apply(x, "", "a1 a2").apply(y, "", "b1 b2")
    w.apply(H.mult, "a1 b1", "c1").apply(H.mult, "a2 b2", "c2")
    return w.result("c1 c2")


def check_coquasitriangular(H: HopfData, sigma: SigmaForm) -> CheckReport:
    F, d = H.field, H.dim
    s = sigma.form
    rep = CheckReport()

    w = Wire(F, ("a", d), ("b", d), ("c", d))
    w.apply(H.mult, "a b", "ab").apply(s, "ab c", "")
    lhs = w.result("")
    w = Wire(F, ("a", d), ("b", d), ("c", d))
    w.apply(H.comult, "c", "c1 c2").apply(s, "a c1", "").apply(s, "b c2", "")
    rep.expect_equal("sigma(ab, c) = sigma(a, c1) sigma(b, c2)", lhs, w.result(""))

    w = Wire(F, ("a", d), ("b", d), ("c", d))
    w.apply(H.mult, "b c", "bc").apply(s, "a bc", "")
    lhs = w.result("")
    w = Wire(F, ("a", d), ("b", d), ("c", d))
    w.apply(H.comult, "a", "a1 a2").apply(s, "a1 c", "").apply(s, "a2 b", "")
    rep.expect_equal("sigma(a, bc) = sigma(a1, c) sigma(a2, b)", lhs, w.result(""))

    w = Wire(F, ("a", d), ("b", d))
    w.apply(H.comult, "a", "a1 a2").apply(H.comult, "b", "b1 b2")
    w.apply(s, "a1 b1", "").apply(H.mult, "a2 b2", "ab")
    lhs = w.result("ab")
    w = Wire(F, ("a", d), ("b", d))
    w.apply(H.comult, "a", "a1 a2").apply(H.comult, "b", "b1 b2")
    w.apply(H.mult, "b1 a1", "ba").apply(s, "a2 b2", "")
    rep.expect_equal("commutation", lhs, w.result("ba"))

    i = identity(F, d)
    rep.expect_equal("sigma(1, a) = eps(a)", compose(s, tensor_of_maps(H.unit, i)), H.counit)
    rep.expect_equal("sigma(a, 1) = eps(a)", compose(s, tensor_of_maps(i, H.unit)), H.counit)
    inv = convolution_inverse(tensor_square_coalgebra(H), ground_algebra(F),
                              s.with_dims(cod=(1,), dom=(d * d,)))
    rep.record("convolution invertible", inv is not None)
    return rep


def adjoint_action(H: HopfData) -> LinearMap:
    """h (x) h' -> h1 h' S(h2)."""
    d = H.dim
    w = Wire(H.field, ("h", d), ("k", d))
    w.apply(H.comult, "h", "h1 h2").apply(H.antipode, "h2", "s")
    w.apply(H.mult, "h1 k", "t").apply(H.mult, "t s", "r")
    return w.result("r")


def coadjoint_coaction(H: HopfData) -> LinearMap:
    """h -> S^-1(h3) h1 (x) h2."""
    sinv = antipode_inverse(H)
    d = H.dim
    w = Wire(H.field, ("h", d))
    w.apply(iterated_comult(H), "h", "h1 h2 h3").apply(sinv, "h3", "s")
    w.apply(H.mult, "s h1", "b")
    return w.result("b h2")


def trivial_sigma(H) -> SigmaForm:
    """sigma(h, h') = eps(h) eps(h')."""
    return SigmaForm(tensor_of_maps(H.counit, H.counit))


def trivial_r(H) -> RMatrix:
    return RMatrix(tensor_of_maps(H.unit, H.unit))


def with_antipode(B: BialgebraData, antipode: LinearMap) -> HopfData:
    return HopfData(B.mult, B.unit, B.comult, B.counit, antipode)


def replace_map(structure, name: str, new: LinearMap):
    """Copy of a frozen structure with one structure map swapped."""
    return replace(structure, **{name: new})
