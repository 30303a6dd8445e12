"""Native checker verdicts under the names used by the shipped identity file."""

from __future__ import annotations

from .hopfcore import HopfData, check_bialgebra, check_hopf
from .reptheory import ComoduleAlgebraData, RelHopfModuleData, check_relative_hopf
from .transmute import check_yd_bialgebra
from .monoidal import tensor_module


def native_verdicts(B, A=None) -> dict[str, bool]:
    """Verdicts of the native checkers for B (and a braided candidate A over B)."""
    out = {}
    rep = check_hopf(B) if isinstance(B, HopfData) else check_bialgebra(B)
    out.update({f"B {v.name}": v.passed for v in rep})
    if A is None:
        return out
    out.update({f"A {v.name}": v.passed for v in check_yd_bialgebra(B, A)})
    ca = ComoduleAlgebraData(A.mult, A.unit, A.coaction)
    reg = RelHopfModuleData(A.coaction, A.mult)
    out.update({f"A-regular {v.name}": v.passed for v in check_relative_hopf(B, ca, reg)})
    pair = tensor_module(B, A, reg, reg)
    out.update({f"pair (A, A): {v.name}": v.passed for v in check_relative_hopf(B, ca, pair)})
    return out


def compare_with_native(report, B, A=None) -> list[str]:
    """Names whose identity-file verdict differs from the native verdict."""
    native = native_verdicts(B, A)
    diffs = []
    for v in report:
        if v.name not in native:
            diffs.append(f"{v.name} (no native counterpart)")
        elif native[v.name] != v.passed:
            diffs.append(v.name)
    return diffs
