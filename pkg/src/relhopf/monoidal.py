"""Tensor products of relative Hopf modules and the monoidal-structure checks.

A datum ``(B, A)`` consists of a bialgebra B and an A that is a B-comodule
algebra, a coalgebra, and carries a raw map ``B (x) A -> A``.  The tensor
product of two relative Hopf modules gets the right A-action

    (x (x) y) . a = x . (y[-1] . a1) (x) y[0] . a2

and the check below decides whether this makes the category monoidal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from itertools import product

import numpy as np

from .hopfcore import (
    BialgebraData, HopfData, adjoint_action, antipode_inverse, check_algebra,
    check_bialgebra, check_coalgebra, is_cocommutative, is_commutative, iterated_comult,
    trivial_r, trivial_sigma,
)
from .report import CheckReport
from .reptheory import (
    ComoduleAlgebraData, RelHopfModuleData, check_comodule, check_equivariant_structure,
    check_relative_hopf, check_right_module,
)
from .tensorlin import (
    Field, LinearMap, Wire, compose, identity, invert, rank, rref, solve,
    tensor_of_maps,
)
from .transmute import (
    BraidedBialgebraData, check_yd_bialgebra, enveloping_braided_group,
    function_braided_group,
)

__all__ = [
    "DatumError", "MonoidalInputDatum", "hopf_tensor_action", "tensor_module", "regular_module",
    "trivial_module", "unit_module", "canonical_family", "check_monoidal_conditions",
    "check_theorem_2_1", "Theorem21Result", "check_trivial_action_doi_hopf",
    "Prop34Result", "long_dimodule_suite", "yd_identification_suite",
    "random_relative_hopf_modules", "datum_mutations", "mutate_entry",
]


class DatumError(ValueError):
    pass


@dataclass(frozen=True)
class MonoidalInputDatum:
    """B a bialgebra; A a B-comodule algebra and a coalgebra with a raw B-action.

    The bialgebra, algebra, coalgebra, comodule and comodule-algebra axioms are
    checked on construction; the action is not assumed to satisfy anything.
    """

    B: BialgebraData
    A: BraidedBialgebraData

    def __post_init__(self):
        problems = self.invariant_failures(self.B, self.A)
        if problems:
            raise DatumError("not an input datum: " + ", ".join(problems))

    @staticmethod
    def invariant_failures(B, A) -> list[str]:
        if A.action.dom[0] != B.dim or A.coaction.cod[0] != B.dim:
            return [f"action/coaction of A do not match B of dim {B.dim}"]
        rep = CheckReport()
        rep.extend(check_bialgebra(B), "B ")
        rep.extend(check_algebra(A), "A ")
        rep.extend(check_coalgebra(A), "A ")
        rep.extend(check_comodule(B, A), "A ")
        rep.extend(check_equivariant_structure("comodule-algebra", B, A, A.coaction), "A ")
        return rep.failed_names

    @classmethod
    def try_build(cls, B, A) -> "MonoidalInputDatum | None":
        try:
            return cls(B, A)
        except DatumError:
            return None

    @property
    def field(self) -> Field:
        return self.B.field

    @property
    def comodule_algebra(self) -> ComoduleAlgebraData:
        return ComoduleAlgebraData(self.A.mult, self.A.unit, self.A.coaction)


def hopf_tensor_action(datum: MonoidalInputDatum, X: RelHopfModuleData,
                       Y: RelHopfModuleData) -> RelHopfModuleData:
    """X (x) Y with the diagonal B-coaction and the twisted right A-action."""
    return tensor_module(datum.B, datum.A, X, Y)


def tensor_module(B, A, X: RelHopfModuleData, Y: RelHopfModuleData) -> RelHopfModuleData:
    """The same construction without requiring (B, A) to be an input datum."""
    F, db, da, nx, ny = B.field, B.dim, A.dim, X.dim, Y.dim
    # y (x) a -> (y[-1] . a1) (x) y[0] . a2 first, so the big map is a single product
    w = Wire(F, ("y", ny), ("a", da))
    w.apply(Y.coaction, "y", "ym y0").apply(A.comult, "a", "a1 a2")
    w.apply(A.action, "ym a1", "c").apply(Y.right_action, "y0 a2", "y1")
    k = w.result("c y1")
    w = Wire(F, ("x", nx), ("y", ny), ("a", da))
    w.apply(k, "y a", "c y1").apply(X.right_action, "x c", "x1")
    act = w.result("x1 y1").with_dims(cod=(nx * ny,), dom=(nx * ny, da))
    w = Wire(F, ("x", nx), ("y", ny))
    w.apply(X.coaction, "x", "xm x0").apply(Y.coaction, "y", "ym y0")
    w.apply(B.mult, "xm ym", "h")
    coact = w.result("h x0 y0").with_dims(cod=(db, nx * ny), dom=(nx * ny,))
    return RelHopfModuleData(coact, act)


def regular_module(datum: MonoidalInputDatum) -> RelHopfModuleData:
    """A with its coaction and right multiplication."""
    return RelHopfModuleData(datum.A.coaction, datum.A.mult)


def trivial_module(datum: MonoidalInputDatum) -> RelHopfModuleData:
    """B_tr: carrier B, coaction Delta_B, b . a = b eps_A(a)."""
    B, A = datum.B, datum.A
    return RelHopfModuleData(B.comult, tensor_of_maps(identity(B.field, B.dim), A.counit))


def unit_module(datum: MonoidalInputDatum) -> RelHopfModuleData:
    """The ground field with coaction 1 -> 1_B (x) 1 and 1 . a = eps_A(a)."""
    B, A = datum.B, datum.A
    return RelHopfModuleData(B.unit.with_dims(cod=(B.dim, 1), dom=(1,)),
                             A.counit.with_dims(cod=(1,), dom=(1, A.dim)))


def canonical_family(datum: MonoidalInputDatum) -> dict[str, RelHopfModuleData]:
    A, Btr = regular_module(datum), trivial_module(datum)
    return {"A": A, "B_tr": Btr, "1": unit_module(datum),
            "A(x)B_tr": hopf_tensor_action(datum, A, Btr)}


def _unit_counit_identities(datum: MonoidalInputDatum, rep: CheckReport):
    B, A = datum.B, datum.A
    F, db, da = datum.field, B.dim, A.dim
    ia, ib = identity(F, da), identity(F, db)
    rep.expect_equal("eps_A(ab) = eps_A(a) eps_A(b)", compose(A.counit, A.mult),
                     tensor_of_maps(A.counit, A.counit))
    rep.expect_equal("eps_A(1) = 1", compose(A.counit, A.unit), identity(F, ()))
    rep.expect_equal("a[-1] eps_A(a[0]) = eps_A(a) 1_B",
                     compose(tensor_of_maps(ib, A.counit), A.coaction),
                     tensor_of_maps(B.unit, A.counit))
    rep.expect_equal("eps_A(h . a) = eps_B(h) eps_A(a)", compose(A.counit, A.action),
                     tensor_of_maps(B.counit, A.counit))
    rep.expect_equal("1_B . a = a", compose(A.action, tensor_of_maps(B.unit, ia)), ia)
    rep.expect_equal("Delta_A(1) = 1 x 1", compose(A.comult, A.unit),
                     tensor_of_maps(A.unit, A.unit))
    rep.expect_equal("h . 1_A = eps_B(h) 1_A", compose(A.action, tensor_of_maps(ib, A.unit)),
                     tensor_of_maps(B.counit, A.unit))


def _named(modules) -> dict[str, RelHopfModuleData]:
    if isinstance(modules, dict):
        return dict(modules)
    return {f"M{i}": m for i, m in enumerate(modules)}


def check_monoidal_conditions(datum: MonoidalInputDatum, modules,
                              max_triple_dim: int = 64, fail_fast: bool = False) -> CheckReport:
    """The unit/counit identities, then for every ordered pair the relative
    Hopf module axioms of the tensor product (unitality, associativity and
    compatibility of the twisted action), then bracketing independence for
    every triple whose tensor product has dimension at most ``max_triple_dim``.

    Pairs are visited smallest first.  With ``fail_fast`` the report stops at
    the first failing block; the overall verdict is the same.
    """
    mods = _named(modules)
    rep = CheckReport()
    _unit_counit_identities(datum, rep)
    if fail_fast and not rep.passed:
        return rep
    ca = datum.comodule_algebra
    pairs = {}
    order = sorted(product(mods.items(), repeat=2), key=lambda p: p[0][1].dim * p[1][1].dim)
    for (nx, X), (ny, Y) in order:
        T = hopf_tensor_action(datum, X, Y)
        pairs[nx, ny] = T
        rep.extend(check_relative_hopf(datum.B, ca, T), f"pair ({nx}, {ny}): ")
        if fail_fast and not rep.passed:
            return rep
    for (nx, X), (ny, Y), (nz, Z) in product(mods.items(), repeat=3):
        if X.dim * Y.dim * Z.dim > max_triple_dim:
            continue
        left = hopf_tensor_action(datum, pairs[nx, ny], Z)
        right = hopf_tensor_action(datum, X, pairs[ny, nz])
        rep.expect_equal(f"triple ({nx}, {ny}, {nz}): bracketing",
                         left.right_action, right.right_action)
        if fail_fast and not rep.passed:
            return rep
    return rep


@dataclass
class Theorem21Result:
    braided: CheckReport
    monoidal: CheckReport

    @property
    def agree(self) -> bool:
        return self.braided.passed == self.monoidal.passed

    def as_dict(self) -> dict:
        return {"braided_bialgebra": self.braided.passed, "monoidal": self.monoidal.passed,
                "agreement": self.agree, "braided_report": self.braided.as_dict(),
                "monoidal_report": self.monoidal.as_dict()}

    def format(self) -> str:
        mark = lambda ok: "pass" if ok else "fail"
        lines = ["braided bialgebra:", self.braided.format(), "",
                 "monoidal structure:", self.monoidal.format(), "",
                 f"braided={mark(self.braided.passed)} monoidal={mark(self.monoidal.passed)} "
                 f"agreement={'true' if self.agree else 'false'}"]
        return "\n".join(lines)


def check_theorem_2_1(datum: MonoidalInputDatum, extra_modules=None,
                      fail_fast: bool = False) -> Theorem21Result:
    """Both sides of: the tensor action is monoidal iff A is a braided bialgebra."""
    braided = check_yd_bialgebra(datum.B, datum.A)
    family = canonical_family(datum)
    if extra_modules:
        family.update(_named(extra_modules) if isinstance(extra_modules, dict)
                      else {f"X{i}": m for i, m in enumerate(extra_modules)})
    return Theorem21Result(braided, check_monoidal_conditions(datum, family, fail_fast=fail_fast))


# trivial action: comparison with monoidal Doi-Hopf data

@dataclass
class Prop34Result:
    cob: CheckReport
    braided: CheckReport

    @property
    def agree(self) -> bool:
        return self.cob.passed == self.braided.passed

    def as_dict(self) -> dict:
        return {"cob_conditions": self.cob.passed, "braided_bialgebra": self.braided.passed,
                "agreement": self.agree, "cob_report": self.cob.as_dict(),
                "braided_report": self.braided.as_dict()}

    def format(self) -> str:
        mark = lambda ok: "pass" if ok else "fail"
        return "\n".join(["Doi-Hopf conditions:", self.cob.format(), "",
                          "braided bialgebra (trivial action):", self.braided.format(), "",
                          f"cob={mark(self.cob.passed)} braided={mark(self.braided.passed)} "
                          f"agreement={'true' if self.agree else 'false'}"])


def check_trivial_action_doi_hopf(B, A, coaction: LinearMap) -> Prop34Result:
    """A a bialgebra and B-comodule algebra with h . a = eps(h) a.

    One side checks the comodule-algebra premise, that A is an ordinary
    bialgebra, and
        h a[-1] (x) Delta(a[0]) = a1[-1] h a2[-1] (x) a1[0] (x) a2[0]
        eps_A(a) 1_B = eps_A(a[0]) a[-1];
    the other runs the braided bialgebra suite with the trivial action.
    """
    F, db, da = B.field, B.dim, A.dim
    cob = CheckReport()
    ca = ComoduleAlgebraData(A.mult, A.unit, coaction)
    cob.extend(check_comodule(B, ca))
    cob.extend(check_equivariant_structure("comodule-algebra", B, ca, coaction))
    cob.extend(check_bialgebra(A), "A ")
    w = Wire(F, ("h", db), ("a", da))
    w.apply(coaction, "a", "am a0").apply(B.mult, "h am", "b").apply(A.comult, "a0", "p q")
    lhs = w.result("b p q")
    w = Wire(F, ("h", db), ("a", da))
    w.apply(A.comult, "a", "a1 a2").apply(coaction, "a1", "s p").apply(coaction, "a2", "t q")
    w.apply(B.mult, "s h", "sh").apply(B.mult, "sh t", "b")
    cob.expect_equal("cob1", lhs, w.result("b p q"))
    cob.expect_equal("cob2", tensor_of_maps(B.unit, A.counit),
                     compose(tensor_of_maps(identity(F, db), A.counit), coaction))
    action = tensor_of_maps(B.counit, identity(F, da))
    braided = check_yd_bialgebra(
        B, BraidedBialgebraData(A.mult, A.unit, A.comult, A.counit, action, coaction))
    return Prop34Result(cob, braided)


# random relative Hopf modules and mutations

def _rng(seed):
    return random.Random(seed)


def _random_invertible(F: Field, n: int, rng) -> LinearMap:
    while True:
        m = LinearMap(F, (n,), (n,), [[F.random(rng) for _ in range(n)] for _ in range(n)])
        inv = invert(m)
        if inv is not None:
            return m


def _invariant_closure(F: Field, ops: list[np.ndarray], v: np.ndarray) -> np.ndarray:
    """Basis (as columns) of the smallest subspace containing v stable under ops."""
    basis = v.reshape(-1, 1)
    while True:
        images = np.concatenate([basis] + [F.matmul(op, basis) for op in ops], axis=1)
        r, piv = rref(F, images.T)
        if len(piv) == basis.shape[1]:
            return basis
        basis = np.ascontiguousarray(r[:len(piv)].T)


def _structure_ops(X: RelHopfModuleData, db: int, da: int) -> list[np.ndarray]:
    n = X.dim
    act = X.right_action.entries.reshape(n, n, da)
    coact = X.coaction.entries.reshape(db, n, n)
    return [np.ascontiguousarray(act[:, :, j]) for j in range(da)] + \
           [np.ascontiguousarray(coact[b]) for b in range(db)]


def _restrict(F: Field, X: RelHopfModuleData, W: np.ndarray, db: int, da: int):
    """Induced structure on the invariant subspace spanned by the columns of W."""
    n, r = W.shape
    act = X.right_action.entries.reshape(n, n, da)
    coact = X.coaction.entries.reshape(db, n, n)
    new_act = np.stack([solve(F, W, F.matmul(act[:, :, j], W)) for j in range(da)], axis=2)
    new_co = np.stack([solve(F, W, F.matmul(coact[b], W)) for b in range(db)], axis=0)
    return RelHopfModuleData(LinearMap(F, (db, r), (r,), new_co.reshape(db * r, r)),
                             LinearMap(F, (r,), (r, da), new_act.reshape(r, r * da)))


def _quotient(F: Field, X: RelHopfModuleData, W: np.ndarray, db: int, da: int):
    """Induced structure on X / span(W)."""
    n, r = W.shape
    # complete W to a basis; the last n - r coordinates give the quotient map
    cur = W
    for k in range(n):
        e = F.zeros((n, 1))
        e[k, 0] = F.one
        trial = np.concatenate([cur, e], axis=1)
        if rank(F, trial) > cur.shape[1]:
            cur = trial
    P = LinearMap(F, (n,), (n,), cur)
    Pinv = invert(P).entries
    q = Pinv[r:]
    section = cur[:, r:]
    m = n - r
    act = X.right_action.entries.reshape(n, n, da)
    coact = X.coaction.entries.reshape(db, n, n)
    new_act = np.stack([F.matmul(q, F.matmul(act[:, :, j], section)) for j in range(da)], axis=2)
    new_co = np.stack([F.matmul(q, F.matmul(coact[b], section)) for b in range(db)], axis=0)
    return RelHopfModuleData(LinearMap(F, (db, m), (m,), new_co.reshape(db * m, m)),
                             LinearMap(F, (m,), (m, da), new_act.reshape(m, m * da)))


def _free_modules(datum: MonoidalInputDatum) -> list[RelHopfModuleData]:
    """V (x) A with (v (x) a) . a' = v (x) aa', for V = k and V = B (regular coaction)."""
    B, A = datum.B, datum.A
    F, db, da = datum.field, B.dim, A.dim
    out = [regular_module(datum)]
    w = Wire(F, ("v", db), ("a", da))
    w.apply(B.comult, "v", "vm v0").apply(A.coaction, "a", "am a0").apply(B.mult, "vm am", "h")
    coact = w.result("h v0 a0").with_dims(cod=(db, db * da), dom=(db * da,))
    act = tensor_of_maps(identity(F, db), A.mult).with_dims(cod=(db * da,), dom=(db * da, da))
    out.append(RelHopfModuleData(coact, act))
    return out


def random_relative_hopf_modules(datum: MonoidalInputDatum, count: int, seed: int = 0,
                                 max_dim: int = 4, attempts: int = 50) -> list[RelHopfModuleData]:
    """Submodules generated by a random vector of a free module, or the quotient
    by one, keeping those of dimension at most ``max_dim`` that pass the
    relative Hopf module check.  At most ``attempts`` samples per module.
    """
    rng = _rng(seed)
    F, db, da = datum.field, datum.B.dim, datum.A.dim
    ca = datum.comodule_algebra
    frees = _free_modules(datum)
    out = []
    for _ in range(count):
        for _ in range(attempts):
            X = frees[rng.randrange(len(frees))]
            v = F.array([F.random(rng) for _ in range(X.dim)])
            if not np.any(v != 0):
                continue
            W = _invariant_closure(F, _structure_ops(X, db, da), v)
            r = W.shape[1]
            if rng.randrange(2) == 0 and r <= max_dim:
                M = _restrict(F, X, W, db, da)
            elif 0 < X.dim - r <= max_dim:
                M = _quotient(F, X, W, db, da)
            elif r <= max_dim:
                M = _restrict(F, X, W, db, da)
            else:
                continue
            if check_relative_hopf(datum.B, ca, M).passed:
                out.append(M)
                break
    return out


def mutate_entry(f: LinearMap, flat_index: int, delta=1) -> LinearMap:
    arr = f.entries.copy()
    r, c = divmod(flat_index, arr.shape[1])
    arr[r, c] = f.field(arr[r, c] + delta)
    return LinearMap(f.field, f.cod, f.dom, arr)


_B_MAPS = ("mult", "unit", "comult", "counit")
_A_MAPS = ("mult", "unit", "comult", "counit", "action", "coaction")


def datum_mutations(datum: MonoidalInputDatum, count: int, seed: int = 0,
                    which: str = "BA") -> list[tuple[str, MonoidalInputDatum]]:
    """Up to ``count`` single-entry (+1) mutations that are still input data.

    Positions are visited in a seeded random order; each returned item is a
    description like ``"A.action[17]"`` and the mutated datum.
    """
    positions = []
    if "B" in which:
        positions += [("B", n, k) for n in _B_MAPS for k in range(getattr(datum.B, n).entries.size)]
    if "A" in which:
        positions += [("A", n, k) for n in _A_MAPS for k in range(getattr(datum.A, n).entries.size)]
    order = _rng(seed).sample(range(len(positions)), len(positions))
    out = []
    for idx in order:
        side, name, k = positions[idx]
        B, A = datum.B, datum.A
        if side == "B":
            B = replace(B, **{name: mutate_entry(getattr(B, name), k)})
        else:
            A = A.replace(**{name: mutate_entry(getattr(A, name), k)})
        d = MonoidalInputDatum.try_build(B, A)
        if d is not None:
            out.append((f"{side}.{name}[{k}]", d))
            if len(out) >= count:
                break
    return out


# identification suites

def _characters(H) -> list[np.ndarray]:
    """All algebra maps H -> k, found by exhaustive search."""
    F, d = H.field, H.dim
    m = H.mult.entries.reshape(d, d, d)          # m[k, i, j]: coefficient of e_k in e_i e_j
    u = H.unit.entries.reshape(d)
    cands = np.array(list(product(F.elements(), repeat=d)), dtype=object if F.dtype is object else np.int64)
    out = []
    for chi in cands:
        if F.reduce(np.array([np.dot(chi, u)]))[0] != F.one:
            continue
        lhs = F.reduce(np.tensordot(chi, m, axes=([0], [0])))
        if np.array_equal(lhs, F.reduce(np.outer(chi, chi))):
            out.append(chi)
    return out


def _grouplikes(H) -> list[np.ndarray]:
    """All g with Delta g = g (x) g and eps(g) = 1."""
    F, d = H.field, H.dim
    D = H.comult.entries                          # (d*d, d)
    e = H.counit.entries.reshape(d)
    out = []
    for g in product(F.elements(), repeat=d):
        g = F.array(list(g))
        if F.reduce(np.array([np.dot(e, g)]))[0] != F.one:
            continue
        if np.array_equal(F.matmul(D, g.reshape(d, 1)).reshape(-1),
                          F.reduce(np.outer(g, g).reshape(-1))):
            out.append(g)
    return out


def _candidate(H, chars, glikes, n: int, rng, mutate_p: float = 0.25):
    """A random right module + left comodule on k^n built from 1-dim pieces."""
    F, d = H.field, H.dim
    act = F.zeros((n, n * d))
    co = F.zeros((d * n, n))
    for i in range(n):
        chi = chars[rng.randrange(len(chars))]
        g = glikes[rng.randrange(len(glikes))]
        for j in range(d):
            act[i, i * d + j] = chi[j]
        for b in range(d):
            co[b * n + i, i] = g[b]
    act = LinearMap(F, (n,), (n, d), act)
    co = LinearMap(F, (d, n), (n,), co)
    P = _random_invertible(F, n, rng)
    Pinv = invert(P)
    act = compose(P, compose(act, tensor_of_maps(Pinv, identity(F, d))))
    Q, Qinv = (P, Pinv) if rng.randrange(2) == 0 else (lambda q: (q, invert(q)))(
        _random_invertible(F, n, rng))
    co = compose(tensor_of_maps(identity(F, d), Q), compose(co, Qinv))
    if rng.random() < mutate_p:
        if rng.randrange(2) == 0:
            act = mutate_entry(act, int(rng.randrange(act.entries.size)), F.random(rng, nonzero=True))
        else:
            co = mutate_entry(co, int(rng.randrange(co.entries.size)), F.random(rng, nonzero=True))
    return RelHopfModuleData(co, act)


def _suite(H, Hbar, condition, closed_form, samples, seed, max_dim, label):
    rep = CheckReport(seed=seed)
    rng = _rng(seed)
    chars, glikes = _characters(H), _grouplikes(H)
    ca = ComoduleAlgebraData(Hbar.mult, Hbar.unit, Hbar.coaction)
    datum = MonoidalInputDatum(H, Hbar)
    agree = valid = 0
    valid_modules = []
    disagreements = []
    for k in range(samples):
        n = int(rng.randint(1, max_dim))
        X = _candidate(H, chars, glikes, n, rng)
        rel = check_relative_hopf(H, ca, X).passed
        other = CheckReport()
        other.extend(check_comodule(H, X))
        other.extend(check_right_module(H, X))
        other.expect_equal(label, *condition(X))
        same = rel == other.passed
        agree += same
        if not same:
            disagreements.append(k)
        if rel:
            valid += 1
            valid_modules.append(X)
    rep.record("predicates agree", agree == samples,
               f"{agree}/{samples} agree, {valid} satisfy both")
    if disagreements:
        rep.warnings.append(f"disagreeing samples: {disagreements[:10]}")
    for i, (X, Y) in enumerate(zip(valid_modules[:3], valid_modules[1:4])):
        T = hopf_tensor_action(datum, X, Y)
        rep.expect_equal(f"tensor action closed form {i}", T.right_action, closed_form(X, Y))
    rep.stats = {"samples": samples, "agree": agree, "valid": valid}
    return rep


def long_dimodule_suite(H: HopfData, samples: int = 100, seed: int = 0,
                        max_dim: int = 3) -> CheckReport:
    """For cocommutative H, relative Hopf modules over H with R = 1 (x) 1 versus
    Long dimodules: (x.h)[-1] (x) (x.h)[0] = x[-1] (x) x[0].h."""
    if not is_cocommutative(H):
        rep = CheckReport(seed=seed)
        rep.record("H cocommutative", False)
        return rep
    F, d = H.field, H.dim
    Hbar = enveloping_braided_group(H, trivial_r(H)).algebra
    ad = adjoint_action(H)

    def condition(X):
        lhs = compose(X.coaction, X.right_action)
        w = Wire(F, ("x", X.dim), ("h", d))
        w.apply(X.coaction, "x", "xm x0").apply(X.right_action, "x0 h", "y")
        return lhs, w.result("xm y")

    def closed_form(X, Y):
        # x . (y[-1] |> h1) (x) y[0] . h2
        w = Wire(F, ("x", X.dim), ("y", Y.dim), ("h", d))
        w.apply(Y.coaction, "y", "ym y0").apply(H.comult, "h", "h1 h2")
        w.apply(ad, "ym h1", "c").apply(X.right_action, "x c", "x1")
        w.apply(Y.right_action, "y0 h2", "y1")
        return w.result("x1 y1").with_dims(cod=(X.dim * Y.dim,), dom=(X.dim * Y.dim, d))

    rep = _suite(H, Hbar, condition, closed_form, samples, seed, max_dim, "dimodule condition")
    out = CheckReport(seed=seed)
    out.record("H cocommutative", True)
    out.extend(rep)
    out.stats = rep.stats
    return out


def yd_identification_suite(H: HopfData, samples: int = 100, seed: int = 0,
                            max_dim: int = 3) -> CheckReport:
    """For commutative H, relative Hopf modules over the function braided group
    with trivial sigma versus right-left Yetter-Drinfeld modules:
    (m.h)[-1] (x) (m.h)[0] = S^-1(h3) m[-1] h1 (x) m[0].h2."""
    if not is_commutative(H):
        rep = CheckReport(seed=seed)
        rep.record("H commutative", False)
        return rep
    F, d = H.field, H.dim
    Hbar = function_braided_group(H, trivial_sigma(H)).algebra
    sinv = antipode_inverse(H)
    delta3 = iterated_comult(H)

    def condition(X):
        lhs = compose(X.coaction, X.right_action)
        w = Wire(F, ("m", X.dim), ("h", d))
        w.apply(X.coaction, "m", "mm m0").apply(delta3, "h", "h1 h2 h3")
        w.apply(sinv, "h3", "s").apply(H.mult, "s mm", "t").apply(H.mult, "t h1", "b")
        w.apply(X.right_action, "m0 h2", "y")
        return lhs, w.result("b y")

    def closed_form(X, Y):
        # the tensor action with a trivial B-action on H: x . h1 (x) y . h2
        w = Wire(F, ("x", X.dim), ("y", Y.dim), ("h", d))
        w.apply(H.comult, "h", "h1 h2").apply(X.right_action, "x h1", "x1")
        w.apply(Y.right_action, "y h2", "y1")
        return w.result("x1 y1").with_dims(cod=(X.dim * Y.dim,), dom=(X.dim * Y.dim, d))

    rep = _suite(H, Hbar, condition, closed_form, samples, seed, max_dim, "Yetter-Drinfeld condition")
    out = CheckReport(seed=seed)
    out.record("H commutative", True)
    out.extend(rep)
    out.stats = rep.stats
    return out
