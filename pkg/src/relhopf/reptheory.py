"""Modules, comodules and their compatibility conditions over a bialgebra.

Left actions are maps ``B (x) X -> X``, left coactions ``X -> B (x) X`` and
right actions ``X (x) A -> X`` (A is the second tensor factor).
"""

from __future__ import annotations

from dataclasses import dataclass

from .report import CheckReport, Verdict
from .tensorlin import Field, LinearMap, ShapeMismatch, Wire, compose, identity, tensor_of_maps

__all__ = [
    "ModuleData", "ComoduleData", "RelHopfModuleData", "ComoduleAlgebraData",
    "CheckReport", "Verdict", "FLAVORS",
    "check_module", "check_comodule", "check_equivariant_structure",
    "check_yetter_drinfeld", "check_relative_hopf", "check_right_module",
    "trivial_action", "trivial_coaction", "regular_action", "regular_coaction",
]

FLAVORS = ("comodule-algebra", "comodule-coalgebra", "module-algebra", "module-coalgebra")


@dataclass(frozen=True)
class ModuleData:
    action: LinearMap

    def __post_init__(self):
        if len(self.action.dom) != 2 or len(self.action.cod) != 1:
            raise ShapeMismatch(f"a left action maps B (x) X -> X, got {self.action!r}")
        if self.action.dom[1] != self.action.cod[0]:
            raise ShapeMismatch("action carrier mismatch")

    @property
    def dim(self) -> int:
        return self.action.cod[0]

    @property
    def field(self) -> Field:
        return self.action.field


@dataclass(frozen=True)
class ComoduleData:
    coaction: LinearMap

    def __post_init__(self):
        if len(self.coaction.dom) != 1 or len(self.coaction.cod) != 2:
            raise ShapeMismatch(f"a left coaction maps X -> B (x) X, got {self.coaction!r}")
        if self.coaction.cod[1] != self.coaction.dom[0]:
            raise ShapeMismatch("coaction carrier mismatch")

    @property
    def dim(self) -> int:
        return self.coaction.dom[0]

    @property
    def field(self) -> Field:
        return self.coaction.field


@dataclass(frozen=True)
class RelHopfModuleData:
    """A left B-comodule with a right A-action."""

    coaction: LinearMap
    right_action: LinearMap

    def __post_init__(self):
        ComoduleData(self.coaction)
        n = self.coaction.dom[0]
        if len(self.right_action.dom) != 2 or self.right_action.dom[0] != n \
                or self.right_action.cod != (n,):
            raise ShapeMismatch(f"a right action maps X (x) A -> X, got {self.right_action!r}")

    @property
    def dim(self) -> int:
        return self.coaction.dom[0]

    @property
    def field(self) -> Field:
        return self.coaction.field


@dataclass(frozen=True)
class ComoduleAlgebraData:
    """An algebra with a left B-coaction; the A of a relative Hopf module."""

    mult: LinearMap
    unit: LinearMap
    coaction: LinearMap

    @property
    def dim(self) -> int:
        return self.unit.cod[0]

    @property
    def field(self) -> Field:
        return self.unit.field


def _b_dim(B, f: LinearMap, leg: int, what: str):
    """The B-leg is the first domain factor (leg 0) or first codomain factor (-1)."""
    dims = f.dom if leg >= 0 else f.cod
    if dims[0] != B.dim:
        raise ShapeMismatch(f"{what} has B-leg of dim {dims[0]}, B has dim {B.dim}")


# simple structures

def trivial_action(B, n: int) -> LinearMap:
    """h . x = eps(h) x."""
    return tensor_of_maps(B.counit, identity(B.field, n))


def trivial_coaction(B, n: int) -> LinearMap:
    """x -> 1 (x) x."""
    return tensor_of_maps(B.unit, identity(B.field, n))


def regular_action(B) -> LinearMap:
    return B.mult


def regular_coaction(B) -> LinearMap:
    return B.comult


# checkers

def check_module(B, X) -> CheckReport:
    """1 . x = x and (hh') . x = h . (h' . x)."""
    act = X.action
    _b_dim(B, act, 0, "action")
    F, n = B.field, X.dim
    i = identity(F, n)
    rep = CheckReport()
    rep.expect_equal("unit action", compose(act, tensor_of_maps(B.unit, i)), i)
    rep.expect_equal("action associativity",
                     compose(act, tensor_of_maps(B.mult, i)),
                     compose(act, tensor_of_maps(identity(F, B.dim), act)))
    return rep


def check_comodule(B, X) -> CheckReport:
    """eps(x[-1]) x[0] = x and coassociativity of the coaction."""
    lam = X.coaction
    _b_dim(B, lam, -1, "coaction")
    F, n = B.field, X.dim
    i = identity(F, n)
    rep = CheckReport()
    rep.expect_equal("counit coaction", compose(tensor_of_maps(B.counit, i), lam), i)
    rep.expect_equal("coaction coassociativity",
                     compose(tensor_of_maps(B.comult, i), lam),
                     compose(tensor_of_maps(identity(F, B.dim), lam), lam))
    return rep


def check_equivariant_structure(flavor: str, B, A, structure: LinearMap) -> CheckReport:
    """The two identities saying that A's (co)multiplication and (co)unit are
    B-(co)linear, for ``flavor`` in FLAVORS.

    ``structure`` is the coaction A -> B (x) A for the comodule flavors and the
    action B (x) A -> A for the module flavors.
    """
    F, db, da = B.field, B.dim, A.dim
    rep = CheckReport()
    if flavor == "comodule-algebra":
        lam = structure
        _b_dim(B, lam, -1, "coaction")
        rep.expect_equal("comodule-algebra unit", compose(lam, A.unit),
                         tensor_of_maps(B.unit, A.unit))
        w = Wire(F, ("a", da), ("b", da))
        w.apply(lam, "a", "am a0").apply(lam, "b", "bm b0")
        w.apply(B.mult, "am bm", "h").apply(A.mult, "a0 b0", "c")
        rep.expect_equal("comodule-algebra multiplication",
                         compose(lam, A.mult), w.result("h c"))
    elif flavor == "comodule-coalgebra":
        lam = structure
        _b_dim(B, lam, -1, "coaction")
        rep.expect_equal("comodule-coalgebra counit",
                         compose(tensor_of_maps(identity(F, db), A.counit), lam),
                         tensor_of_maps(B.unit, A.counit))
        lhs = compose(tensor_of_maps(identity(F, db), A.comult), lam)
        w = Wire(F, ("a", da))
        w.apply(A.comult, "a", "a1 a2").apply(lam, "a1", "p a10").apply(lam, "a2", "q a20")
        w.apply(B.mult, "p q", "h")
        rep.expect_equal("comodule-coalgebra comultiplication", lhs, w.result("h a10 a20"))
    elif flavor == "module-algebra":
        act = structure
        _b_dim(B, act, 0, "action")
        rep.expect_equal("module-algebra unit",
                         compose(act, tensor_of_maps(identity(F, db), A.unit)),
                         tensor_of_maps(B.counit, A.unit))
        lhs = compose(act, tensor_of_maps(identity(F, db), A.mult))
        w = Wire(F, ("h", db), ("a", da), ("b", da))
        w.apply(B.comult, "h", "h1 h2").apply(act, "h1 a", "x").apply(act, "h2 b", "y")
        w.apply(A.mult, "x y", "c")
        rep.expect_equal("module-algebra multiplication", lhs, w.result("c"))
    elif flavor == "module-coalgebra":
        act = structure
        _b_dim(B, act, 0, "action")
        rep.expect_equal("module-coalgebra counit", compose(A.counit, act),
                         tensor_of_maps(B.counit, A.counit))
        lhs = compose(A.comult, act)
        w = Wire(F, ("h", db), ("a", da))
        w.apply(B.comult, "h", "h1 h2").apply(A.comult, "a", "a1 a2")
        w.apply(act, "h1 a1", "x").apply(act, "h2 a2", "y")
        rep.expect_equal("module-coalgebra comultiplication", lhs, w.result("x y"))
    else:
        raise ValueError(f"unknown flavor {flavor!r}; expected one of {FLAVORS}")
    return rep


def check_yetter_drinfeld(B, X) -> CheckReport:
    """(h1.x)[-1] h2 (x) (h1.x)[0] = h1 x[-1] (x) h2.x[0] on B (x) X."""
    act, lam = X.action, X.coaction
    _b_dim(B, act, 0, "action")
    _b_dim(B, lam, -1, "coaction")
    F, db, n = B.field, B.dim, X.dim
    w = Wire(F, ("h", db), ("x", n))
    w.apply(B.comult, "h", "h1 h2").apply(act, "h1 x", "y").apply(lam, "y", "ym y0")
    w.apply(B.mult, "ym h2", "b")
    lhs = w.result("b y0")
    w = Wire(F, ("h", db), ("x", n))
    w.apply(B.comult, "h", "h1 h2").apply(lam, "x", "xm x0")
    w.apply(B.mult, "h1 xm", "b").apply(act, "h2 x0", "y")
    rep = CheckReport()
    rep.expect_equal("Yetter-Drinfeld condition", lhs, w.result("b y"))
    return rep


def check_right_module(A, X) -> CheckReport:
    """x . 1 = x and (x . a) . a' = x . (aa')."""
    act = X.right_action
    if act.dom[1] != A.dim:
        raise ShapeMismatch(f"right action has A-leg of dim {act.dom[1]}, A has dim {A.dim}")
    F, n = A.field, X.dim
    i = identity(F, n)
    rep = CheckReport()
    rep.expect_equal("right unit", compose(act, tensor_of_maps(i, A.unit)), i)
    rep.expect_equal("right associativity",
                     compose(act, tensor_of_maps(act, identity(F, A.dim))),
                     compose(act, tensor_of_maps(i, A.mult)))
    return rep


def check_relative_hopf(B, A, X: RelHopfModuleData) -> CheckReport:
    """Comodule axioms, right module axioms and
    lambda(x . a) = x[-1] a[-1] (x) x[0] . a[0].

    ``A`` needs ``mult``, ``unit`` and its B-``coaction``.
    """
    F, n, da = B.field, X.dim, A.dim
    rep = CheckReport()
    rep.extend(check_comodule(B, X))
    rep.extend(check_right_module(A, X))
    lhs = compose(X.coaction, X.right_action)
    w = Wire(F, ("x", n), ("a", da))
    w.apply(X.coaction, "x", "xm x0").apply(A.coaction, "a", "am a0")
    w.apply(B.mult, "xm am", "h").apply(X.right_action, "x0 a0", "y")
    rep.expect_equal("relative Hopf compatibility", lhs, w.result("h y"))
    return rep
