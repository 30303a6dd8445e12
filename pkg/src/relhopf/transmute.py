"""Yetter-Drinfeld modules, bialgebras inside the Yetter-Drinfeld category, and
the two braided groups attached to a (co)quasitriangular Hopf algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .hopfcore import (
    AlgebraData, BialgebraData, CoalgebraData, HopfData, RMatrix, SigmaForm,
    adjoint_action, check_algebra, check_coalgebra, check_coquasitriangular,
    check_quasitriangular, coadjoint_coaction, iterated_comult,
)
from .report import CheckReport
from .reptheory import (
    FLAVORS, ComoduleData, ModuleData, check_comodule, check_equivariant_structure,
    check_module, check_yetter_drinfeld, trivial_action, trivial_coaction,
)
from .tensorlin import (
    Field, LinearMap, ShapeMismatch, Wire, compose, identity, invert, tensor_of_maps,
)

__all__ = [
    "YDModuleData", "BraidedBialgebraData", "yd_tensor", "yd_braiding",
    "check_yd_bialgebra", "enveloping_braided_group", "function_braided_group",
    "Transmuted", "trivially_braided",
]


@dataclass(frozen=True)
class YDModuleData:
    action: LinearMap
    coaction: LinearMap

    def __post_init__(self):
        ModuleData(self.action)
        ComoduleData(self.coaction)
        if self.action.cod != self.coaction.dom:
            raise ShapeMismatch("action and coaction act on different carriers")

    @property
    def dim(self) -> int:
        return self.action.cod[0]

    @property
    def field(self) -> Field:
        return self.action.field


@dataclass(frozen=True)
class BraidedBialgebraData:
    """Candidate bialgebra in the Yetter-Drinfeld category over some B."""

    mult: LinearMap
    unit: LinearMap
    comult: LinearMap
    counit: LinearMap
    action: LinearMap
    coaction: LinearMap

    def __post_init__(self):
        BialgebraData(self.mult, self.unit, self.comult, self.counit)
        YDModuleData(self.action, self.coaction)
        if self.action.cod != self.unit.cod:
            raise ShapeMismatch("action carrier differs from the algebra carrier")

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
    def bialgebra(self) -> BialgebraData:
        return BialgebraData(self.mult, self.unit, self.comult, self.counit)

    @property
    def yd(self) -> YDModuleData:
        return YDModuleData(self.action, self.coaction)

    def replace(self, **maps) -> "BraidedBialgebraData":
        return replace(self, **maps)


@dataclass
class Transmuted:
    """A braided group together with any precondition warnings."""

    algebra: BraidedBialgebraData
    warnings: list[str]

    @property
    def ok(self) -> bool:
        return not self.warnings


def yd_tensor(B, X, Y) -> YDModuleData:
    """h.(x (x) y) = h1.x (x) h2.y and lambda(x (x) y) = x[-1] y[-1] (x) x[0] (x) y[0]."""
    F, db, nx, ny = B.field, B.dim, X.dim, Y.dim
    w = Wire(F, ("h", db), ("x", nx), ("y", ny))
    w.apply(B.comult, "h", "h1 h2").apply(X.action, "h1 x", "p").apply(Y.action, "h2 y", "q")
    act = w.result("p q").with_dims(cod=(nx * ny,), dom=(db, nx * ny))
    w = Wire(F, ("x", nx), ("y", ny))
    w.apply(X.coaction, "x", "xm x0").apply(Y.coaction, "y", "ym y0")
    w.apply(B.mult, "xm ym", "h")
    coact = w.result("h x0 y0").with_dims(cod=(db, nx * ny), dom=(nx * ny,))
    return YDModuleData(act, coact)


def yd_braiding(B, X, Y) -> LinearMap:
    """x (x) y -> x[-1].y (x) x[0]."""
    w = Wire(B.field, ("x", X.dim), ("y", Y.dim))
    w.apply(X.coaction, "x", "xm x0").apply(Y.action, "xm y", "z")
    return w.result("z x0")


def check_yd_bialgebra(B, A: BraidedBialgebraData) -> CheckReport:
    """All conditions for A to be a bialgebra in the Yetter-Drinfeld category over B.

    The last verdict is braided multiplicativity
    Delta(ab) = a1 (a2[-1] . b1) (x) a2[0] b2.
    """
    F, da = A.field, A.dim
    rep = CheckReport()
    rep.extend(check_algebra(A))
    rep.extend(check_coalgebra(A))
    rep.extend(check_module(B, A))
    rep.extend(check_comodule(B, A))
    for flavor in FLAVORS:
        structure = A.coaction if flavor.startswith("comodule") else A.action
        rep.extend(check_equivariant_structure(flavor, B, A, structure))
    rep.extend(check_yetter_drinfeld(B, A))
    rep.expect_equal("counit unital", compose(A.counit, A.unit), identity(F, ()))
    rep.expect_equal("counit multiplicative", compose(A.counit, A.mult),
                     tensor_of_maps(A.counit, A.counit))
    rep.expect_equal("comultiplication unital", compose(A.comult, A.unit),
                     tensor_of_maps(A.unit, A.unit))
    w = Wire(F, ("a", da), ("b", da))
    w.apply(A.comult, "a", "a1 a2").apply(A.comult, "b", "b1 b2")
    w.apply(A.coaction, "a2", "am a0").apply(A.action, "am b1", "c")
    w.apply(A.mult, "a1 c", "l").apply(A.mult, "a0 b2", "r")
    rep.expect_equal("braided comultiplication multiplicative",
                     compose(A.comult, A.mult), w.result("l r"))
    return rep


def enveloping_braided_group(H: HopfData, R: RMatrix) -> Transmuted:
    """H with the same algebra, unit and counit, comultiplication
    h1 S(R2) (x) R1 |> h2, adjoint action and coaction R2 (x) R1 |> h.
    """
    warnings = []
    qt = check_quasitriangular(H, R)
    if not qt.passed:
        warnings.append("R is not quasitriangular: failed " + ", ".join(qt.failed_names))
    F, d = H.field, H.dim
    r = R.element
    ad = adjoint_action(H)
    w = Wire(F, ("h", d))
    w.apply(H.comult, "h", "h1 h2").apply(r, "", "r1 r2")
    w.apply(H.antipode, "r2", "s").apply(H.mult, "h1 s", "p").apply(ad, "r1 h2", "q")
    comult = w.result("p q")
    w = Wire(F, ("h", d))
    w.apply(r, "", "r1 r2").apply(ad, "r1 h", "q")
    coaction = w.result("r2 q")
    A = BraidedBialgebraData(H.mult, H.unit, comult, H.counit, ad, coaction)
    return Transmuted(A, warnings)


def function_braided_group(H: HopfData, sigma: SigmaForm) -> Transmuted:
    """H with the same coalgebra, unit and counit, multiplication
    h <> h' = sigma(h'2, S(h1) h3) h2 h'1, coadjoint coaction and action
    h > h' = sigma(S^-1(h'3) h'1, h) h'2.
    """
    warnings = []
    cqt = check_coquasitriangular(H, sigma)
    if not cqt.passed:
        warnings.append("sigma is not coquasitriangular: failed " + ", ".join(cqt.failed_names))
    sinv = invert(H.antipode)
    if sinv is None:
        raise ValueError("the antipode is not invertible")
    F, d = H.field, H.dim
    s = sigma.form
    delta3 = iterated_comult(H)
    w = Wire(F, ("h", d), ("k", d))
    w.apply(delta3, "h", "h1 h2 h3").apply(H.comult, "k", "k1 k2")
    w.apply(H.antipode, "h1", "s").apply(H.mult, "s h3", "t").apply(s, "k2 t", "")
    w.apply(H.mult, "h2 k1", "out")
    mult = w.result("out")
    w = Wire(F, ("h", d), ("k", d))
    w.apply(delta3, "k", "k1 k2 k3").apply(sinv, "k3", "u")
    w.apply(H.mult, "u k1", "v").apply(s, "v h", "")
    action = w.result("k2")
    A = BraidedBialgebraData(mult, H.unit, H.comult, H.counit, action, coadjoint_coaction(H))
    return Transmuted(A, warnings)


def trivially_braided(B, H) -> BraidedBialgebraData:
    """An ordinary bialgebra H with h . a = eps(h) a and a -> 1 (x) a over B."""
    return BraidedBialgebraData(H.mult, H.unit, H.comult, H.counit,
                                trivial_action(B, H.dim), trivial_coaction(B, H.dim))
