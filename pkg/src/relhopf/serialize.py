"""JSON instance files: structure constants, optional R / sigma, module blocks.

Array index conventions put domain indices first, then codomain indices:

    mult[i][j][k]       e_i e_j = sum_k mult[i][j][k] e_k
    comult[i][j][k]     Delta(e_i) = sum comult[i][j][k] e_j (x) e_k
    antipode[i][j]      S(e_i) = sum_j antipode[i][j] e_j
    action[i][j][k]     b_i . e_j = sum_k action[i][j][k] e_k
    coaction[i][j][k]   lambda(e_i) = sum coaction[i][j][k] b_j (x) e_k
    right_action[i][j][k]  x_i . a_j = sum_k right_action[i][j][k] x_k
    R[i][j], sigma[i][j]

Rational scalars are written as "n" or "n/d" strings, prime-field scalars as
integers in [0, p).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import jsonschema
import numpy as np

from .hopfcore import BialgebraData, HopfData, RMatrix, SigmaForm
from .reptheory import RelHopfModuleData
from .tensorlin import Field, LinearMap
from .transmute import BraidedBialgebraData

__all__ = ["SchemaError", "Instance", "load", "save", "dumps", "loads",
           "instance_from", "map_to_array", "map_from_array"]


class SchemaError(ValueError):
    pass


_array = {"type": "array"}
_module = {
    "type": "object",
    "properties": {"dim": {"type": "integer", "minimum": 1}, "action": _array,
                   "coaction": _array, "right_action": _array},
    "required": ["dim"],
    "additionalProperties": False,
}
SCHEMA = {
    "type": "object",
    "properties": {
        "field": {"type": "string", "pattern": r"^(rationals|prime-field \d+)$"},
        "dim": {"type": "integer", "minimum": 1},
        "basis": {"type": "array", "items": {"type": "string"}},
        "mult": _array, "unit": _array, "comult": _array, "counit": _array,
        "antipode": _array, "R": _array, "sigma": _array,
        "action": _array, "coaction": _array,
        "modules": {"type": "object", "additionalProperties": _module},
    },
    "required": ["field", "dim"],
    "additionalProperties": False,
}

_MAPS = ("mult", "unit", "comult", "counit", "antipode", "action", "coaction")


def map_to_array(f: LinearMap) -> np.ndarray:
    nc, nd = len(f.cod), len(f.dom)
    return f.tensor_form().transpose(list(range(nc, nc + nd)) + list(range(nc)))


def map_from_array(F: Field, arr: np.ndarray, cod, dom) -> LinearMap:
    nc, nd = len(cod), len(dom)
    t = np.asarray(arr).reshape(tuple(dom) + tuple(cod))
    t = t.transpose(list(range(nd, nd + nc)) + list(range(nd)))
    return LinearMap(F, cod, dom, F.array(t).reshape(int(np.prod(cod or (1,))), -1))


@dataclass
class Instance:
    """Everything one file can hold.  ``maps`` uses the keys of ``_MAPS``."""

    field: Field
    dim: int
    basis: list = field(default_factory=list)
    maps: dict = field(default_factory=dict)
    r: RMatrix | None = None
    sigma: SigmaForm | None = None
    modules: dict = field(default_factory=dict)     # name -> {"dim", "action", ...}

    def _need(self, *names):
        missing = [n for n in names if n not in self.maps]
        if missing:
            raise SchemaError(f"instance lacks {', '.join(missing)}")

    def bialgebra(self) -> BialgebraData:
        self._need("mult", "unit", "comult", "counit")
        m = self.maps
        return BialgebraData(m["mult"], m["unit"], m["comult"], m["counit"])

    def hopf(self) -> HopfData:
        self._need("mult", "unit", "comult", "counit", "antipode")
        m = self.maps
        return HopfData(m["mult"], m["unit"], m["comult"], m["counit"], m["antipode"])

    def structure(self):
        return self.hopf() if "antipode" in self.maps else self.bialgebra()

    def braided(self) -> BraidedBialgebraData:
        self._need("mult", "unit", "comult", "counit", "action", "coaction")
        m = self.maps
        return BraidedBialgebraData(m["mult"], m["unit"], m["comult"], m["counit"],
                                    m["action"], m["coaction"])

    def rel_modules(self) -> dict[str, RelHopfModuleData]:
        out = {}
        for name, block in self.modules.items():
            if "coaction" in block and "right_action" in block:
                out[name] = RelHopfModuleData(block["coaction"], block["right_action"])
        return out


def instance_from(structure=None, r: RMatrix | None = None, sigma: SigmaForm | None = None,
                  basis=None, modules=None, field_=None, dim=None) -> Instance:
    F = structure.field if structure is not None else field_
    d = structure.dim if structure is not None else dim
    maps = {}
    for name in _MAPS:
        f = getattr(structure, name, None)
        if isinstance(f, LinearMap):
            maps[name] = f
    return Instance(F, d, list(basis or []), maps, r, sigma, dict(modules or {}))


# writing

def _scalar_out(F: Field, x):
    return F.format(x) if F.characteristic == 0 else int(x)


def _nested(F: Field, arr: np.ndarray):
    if not isinstance(arr, np.ndarray):
        return _scalar_out(F, arr)
    if arr.ndim == 0:
        return _scalar_out(F, arr[()])
    return [_nested(F, a) for a in arr]


def to_json(inst: Instance) -> dict:
    F = inst.field
    out = {"field": str(F), "dim": inst.dim}
    if inst.basis:
        out["basis"] = list(inst.basis)
    for name, f in inst.maps.items():
        out[name] = _nested(F, map_to_array(f))
    if inst.r is not None:
        out["R"] = _nested(F, inst.r.coeffs())
    if inst.sigma is not None:
        out["sigma"] = _nested(F, inst.sigma.coeffs())
    if inst.modules:
        mods = {}
        for mname, block in inst.modules.items():
            b = {"dim": int(block["dim"])}
            for key in ("action", "coaction", "right_action"):
                if key in block:
                    b[key] = _nested(F, map_to_array(block[key]))
            mods[mname] = b
        out["modules"] = mods
    return out


def dumps(inst: Instance) -> str:
    """Canonical text: sorted keys, fixed layout, canonical scalars."""
    return json.dumps(to_json(inst), sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def save(inst, path, **extra) -> None:
    if not isinstance(inst, Instance):
        inst = instance_from(inst, **extra)
    Path(path).write_text(dumps(inst), encoding="utf-8")


# reading

def _shape_of(value, path: str, depth: int) -> tuple[int, ...]:
    """Shape of a rectangular nested list of the given depth, or SchemaError."""
    if depth == 0:
        if isinstance(value, list):
            raise SchemaError(f"{path}: expected a scalar, found a list")
        return ()
    if not isinstance(value, list):
        raise SchemaError(f"{path}: expected a list")
    inner = None
    for i, v in enumerate(value):
        s = _shape_of(v, f"{path}[{i}]", depth - 1)
        if inner is None:
            inner = s
        elif s != inner:
            raise SchemaError(f"{path}[{i}]: ragged array, expected shape {inner}, got {s}")
    return (len(value),) + (inner or (0,) * (depth - 1))


def _read_array(F: Field, value, path: str, shape: tuple) -> np.ndarray:
    got = _shape_of(value, path, len(shape))
    for axis, (g, want) in enumerate(zip(got, shape)):
        if want is not None and g != want:
            raise SchemaError(f"{path}: axis {axis} has length {g}, expected {want}")
    flat = []

    def walk(v, p):
        if isinstance(v, list):
            for i, x in enumerate(v):
                walk(x, f"{p}[{i}]")
        else:
            try:
                flat.append(F.parse(v))
            except (ValueError, ZeroDivisionError) as exc:
                raise SchemaError(f"{p}: {exc}") from None
    walk(value, path)
    arr = F.array(flat) if flat else F.zeros((0,))
    return arr.reshape(got)


def from_json(data: dict) -> Instance:
    try:
        jsonschema.validate(data, SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "$" + "".join(f"[{p!r}]" if isinstance(p, str) else f"[{p}]"
                              for p in exc.absolute_path)
        raise SchemaError(f"{where}: {exc.message}") from None
    F = Field.from_str(data["field"])
    d = data["dim"]
    basis = data.get("basis", [])
    if basis and len(basis) != d:
        raise SchemaError(f"$['basis']: {len(basis)} labels for dimension {d}")
    shapes = {"mult": ((d, d, d), (d,), (d, d)), "unit": ((d,), (d,), ()),
              "comult": ((d, d, d), (d, d), (d,)), "counit": ((d,), (), (d,)),
              "antipode": ((d, d), (d,), (d,))}
    maps = {}
    for name, (shape, cod, dom) in shapes.items():
        if name in data:
            arr = _read_array(F, data[name], f"$['{name}']", shape)
            maps[name] = map_from_array(F, arr, cod, dom)
    if "action" in data:
        arr = _read_array(F, data["action"], "$['action']", (None, d, d))
        maps["action"] = map_from_array(F, arr, (d,), (arr.shape[0], d))
    if "coaction" in data:
        arr = _read_array(F, data["coaction"], "$['coaction']", (d, None, d))
        maps["coaction"] = map_from_array(F, arr, (arr.shape[1], d), (d,))
    r = sigma = None
    if "R" in data:
        r = RMatrix.from_coeffs(F, _read_array(F, data["R"], "$['R']", (d, d)))
    if "sigma" in data:
        sigma = SigmaForm.from_coeffs(F, _read_array(F, data["sigma"], "$['sigma']", (d, d)))
    modules = {}
    for mname, block in data.get("modules", {}).items():
        n = block["dim"]
        p = f"$['modules']['{mname}']"
        out = {"dim": n}
        if "action" in block:
            arr = _read_array(F, block["action"], p + "['action']", (None, n, n))
            out["action"] = map_from_array(F, arr, (n,), (arr.shape[0], n))
        if "coaction" in block:
            arr = _read_array(F, block["coaction"], p + "['coaction']", (n, None, n))
            out["coaction"] = map_from_array(F, arr, (arr.shape[1], n), (n,))
        if "right_action" in block:
            arr = _read_array(F, block["right_action"], p + "['right_action']", (n, None, n))
            out["right_action"] = map_from_array(F, arr, (n,), (n, arr.shape[1]))
        modules[mname] = out
    return Instance(F, d, list(basis), maps, r, sigma, modules)


def loads(text: str) -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from None
    return from_json(data)


def load(path) -> Instance:
    return loads(Path(path).read_text(encoding="utf-8"))
