"""Exact dense linear algebra between tensor powers of finite-dimensional spaces.

Scalars live in either the rationals (``Fraction`` entries in object arrays) or a
prime field F_p (``int64`` residues).  A :class:`LinearMap` is a matrix together
with the list of tensor-factor dimensions of its domain and codomain; the
monoidal structure is strict, so a factor list is just a flat tuple and the
unit object is the empty tuple.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import product as iproduct
from math import prod
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Field", "Q", "GF", "LinearMap", "FieldMismatch", "ShapeMismatch",
    "identity", "zero_map", "compose", "tensor_of_maps", "permute_factors",
    "flip", "invert", "rref", "rank", "nullspace", "solve",
    "convolution_inverse", "Wire",
]

_FLOAT_EXACT = 2**53
_INT64_SAFE = 2**62


class FieldMismatch(ValueError):
    pass


class ShapeMismatch(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """The rationals (``characteristic == 0``) or the prime field F_p."""

    __slots__ = ("characteristic", "dtype")

    def __init__(self, characteristic: int = 0):
        characteristic = int(characteristic)
        if characteristic != 0 and not _is_prime(characteristic):
            raise ValueError(f"characteristic {characteristic} is not prime")
        self.characteristic = characteristic
        if characteristic and characteristic < 2**31:
            self.dtype = np.int64
        else:
            self.dtype = object

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic != 0

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        return "Q" if not self.characteristic else f"GF({self.characteristic})"

    def __str__(self):
        return "rationals" if not self.characteristic else f"prime-field {self.characteristic}"

    @classmethod
    def from_str(cls, text: str) -> "Field":
        words = text.split()
        if words == ["rationals"]:
            return cls(0)
        if len(words) == 2 and words[0] == "prime-field" and words[1].isdigit():
            return cls(int(words[1]))
        raise ValueError(f"unknown field spec {text!r}")

    # scalars

    def __call__(self, value) -> int | Fraction:
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({p})")
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def inv(self, x):
        x = self(x)
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.characteristic == 0:
            return 1 / x
        return pow(int(x), -1, self.characteristic)

    def elements(self) -> list:
        if not self.characteristic:
            raise ValueError("the rationals are infinite")
        return list(range(self.characteristic))

    def random(self, rng, nonzero: bool = False):
        """A random element; for Q a small integer, which is plenty for tests."""
        if self.characteristic:
            lo = 1 if nonzero else 0
            return rng.randrange(lo, self.characteristic)
        while True:
            v = Fraction(rng.randint(-3, 3))
            if v or not nonzero:
                return v

    def parse(self, text) -> int | Fraction:
        if isinstance(text, bool):
            raise ValueError(f"not a scalar: {text!r}")
        if isinstance(text, int):
            return self(text)
        if not isinstance(text, str):
            raise ValueError(f"not a scalar: {text!r}")
        s = text.strip()
        if "/" in s:
            num, _, den = s.partition("/")
            num, den = int(num), int(den)
            if den == 0:
                raise ValueError(f"zero denominator in {text!r}")
            return self(Fraction(num, den))
        return self(int(s))

    def format(self, x) -> str:
        x = self(x)
        if self.characteristic:
            return str(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    # arrays

    def array(self, data) -> np.ndarray:
        arr = np.asarray(data, dtype=object)
        flat = [self(v) for v in arr.reshape(-1)]
        return np.array(flat, dtype=self.dtype).reshape(arr.shape)

    def zeros(self, shape) -> np.ndarray:
        if self.dtype is object:
            out = np.empty(shape, dtype=object)
            out.fill(self.zero)
            return out
        return np.zeros(shape, dtype=self.dtype)

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        if self.characteristic:
            return arr % self.characteristic
        return arr

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        p = self.characteristic
        if p == 0:
            if a.size == 0 or b.size == 0:
                return self.zeros((a.shape[0], b.shape[1]))
            return np.dot(a, b)
        bound = max(a.shape[1], 1) * (p - 1) ** 2
        if self.dtype is not object and bound < _FLOAT_EXACT:
            out = np.rint(np.matmul(a.astype(np.float64), b.astype(np.float64)))
            return out.astype(np.int64) % p
        if self.dtype is not object and bound < _INT64_SAFE:
            return np.matmul(a, b) % p
        out = np.dot(a.astype(object), b.astype(object)) % p
        return out.astype(self.dtype)


Q = Field(0)


def GF(p: int) -> Field:
    return Field(p)


def _dims(dims) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if any(d <= 0 for d in dims):
        raise ValueError(f"factor dimensions must be positive, got {dims}")
    return dims


class LinearMap:
    """An exact matrix between tensor products of spaces.

    ``entries`` has shape ``(prod(cod), prod(dom))``; basis vectors of a tensor
    product are ordered row-major (last factor fastest).
    """

    __slots__ = ("field", "dom", "cod", "entries")

    def __init__(self, field: Field, cod: Sequence[int], dom: Sequence[int], entries):
        self.field = field
        self.cod = _dims(cod)
        self.dom = _dims(dom)
        if isinstance(entries, np.ndarray) and entries.dtype == np.dtype(field.dtype) \
                and field.dtype is not object:
            arr = field.reduce(entries)
        else:
            arr = field.array(entries)
        shape = (prod(self.cod), prod(self.dom))
        if arr.shape != shape:
            try:
                arr = arr.reshape(shape)
            except ValueError:
                raise ShapeMismatch(
                    f"entries of shape {arr.shape} do not fit {self.cod} <- {self.dom}")
        arr.flags.writeable = False
        self.entries = arr

    @property
    def shape(self):
        return self.entries.shape

    def __repr__(self):
        return f"LinearMap({self.field!r}, cod={self.cod}, dom={self.dom})"

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (self.field == other.field
                and _squeeze(self.cod) == _squeeze(other.cod)
                and _squeeze(self.dom) == _squeeze(other.dom)
                and np.array_equal(self.entries, other.entries))

    __hash__ = None

    def first_difference(self, other: "LinearMap") -> tuple[int, int] | None:
        """(row, column) of the first differing entry, or None if equal."""
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot compare {self.shape} with {other.shape}")
        diff = np.argwhere(self.entries != other.entries)
        if len(diff) == 0:
            return None
        return int(diff[0][0]), int(diff[0][1])

    def __add__(self, other: "LinearMap") -> "LinearMap":
        _check_same(self, other)
        return LinearMap(self.field, self.cod, self.dom,
                         self.field.reduce(self.entries + other.entries))

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        _check_same(self, other)
        return LinearMap(self.field, self.cod, self.dom,
                         self.field.reduce(self.entries - other.entries))

    def __neg__(self) -> "LinearMap":
        return LinearMap(self.field, self.cod, self.dom, self.field.reduce(-self.entries))

    def scale(self, c) -> "LinearMap":
        c = self.field(c)
        if self.field.dtype is object:
            arr = self.entries * c
        else:
            arr = self.entries * int(c)
        return LinearMap(self.field, self.cod, self.dom, self.field.reduce(arr))

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return compose(self, other)

    def tensor(self, other: "LinearMap") -> "LinearMap":
        return tensor_of_maps(self, other)

    def with_dims(self, cod=None, dom=None) -> "LinearMap":
        """Same matrix, regrouped tensor factors (total sizes must agree)."""
        return LinearMap(self.field, self.cod if cod is None else cod,
                         self.dom if dom is None else dom, self.entries)

    def tensor_form(self) -> np.ndarray:
        """Entries reshaped to one axis per factor, codomain factors first."""
        return self.entries.reshape(self.cod + self.dom)

    def column(self, j: int) -> np.ndarray:
        return self.entries[:, j]

    def is_zero(self) -> bool:
        return not np.any(self.entries != 0)


def _squeeze(dims):
    return tuple(d for d in dims if d != 1)


def _check_same(f: LinearMap, g: LinearMap):
    if f.field != g.field:
        raise FieldMismatch(f"{f.field!r} vs {g.field!r}")
    if f.shape != g.shape:
        raise ShapeMismatch(f"{f.shape} vs {g.shape}")


def identity(field: Field, dims: Sequence[int] | int) -> LinearMap:
    if isinstance(dims, int):
        dims = (dims,)
    dims = _dims(dims)
    return LinearMap(field, dims, dims, field.eye(prod(dims)))


def zero_map(field: Field, cod: Sequence[int], dom: Sequence[int]) -> LinearMap:
    return LinearMap(field, cod, dom, field.zeros((prod(_dims(cod)), prod(_dims(dom)))))


def compose(f: LinearMap, g: LinearMap) -> LinearMap:
    """f after g."""
    if f.field != g.field:
        raise FieldMismatch(f"cannot compose over {f.field!r} and {g.field!r}")
    if f.shape[1] != g.shape[0]:
        raise ShapeMismatch(f"cannot compose {f.cod}<-{f.dom} with {g.cod}<-{g.dom}")
    return LinearMap(f.field, f.cod, g.dom, f.field.matmul(f.entries, g.entries))


def tensor_of_maps(f: LinearMap, g: LinearMap) -> LinearMap:
    if f.field != g.field:
        raise FieldMismatch(f"cannot tensor {f.field!r} with {g.field!r}")
    arr = np.kron(f.entries, g.entries)
    return LinearMap(f.field, f.cod + g.cod, f.dom + g.dom, f.field.reduce(arr))


def permute_factors(field: Field, dims: Sequence[int], perm: Sequence[int]) -> LinearMap:
    """The basis permutation whose output factor ``j`` is input factor ``perm[j]``."""
    dims = _dims(dims)
    perm = tuple(perm)
    if sorted(perm) != list(range(len(dims))):
        raise ValueError(f"{perm} is not a permutation of {len(dims)} factors")
    n = prod(dims)
    cod = tuple(dims[i] for i in perm)
    src = np.arange(n).reshape(dims).transpose(perm).reshape(-1)
    arr = field.zeros((n, n))
    arr[np.arange(n), src] = field.one
    return LinearMap(field, cod, dims, arr)


def flip(field: Field, m: int, n: int) -> LinearMap:
    return permute_factors(field, (m, n), (1, 0))


# Gaussian elimination

def rref(field: Field, matrix: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = field.array(matrix) if matrix.dtype != np.dtype(field.dtype) else matrix.copy()
    a = a.copy()
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c] != 0)[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = field.inv(a[r, c])
        a[r] = field.reduce(a[r] * inv)
        col = a[:, c].copy()
        col[r] = field.zero
        if np.any(col != 0):
            a = field.reduce(a - np.outer(col, a[r]))
        pivots.append(c)
        r += 1
    return a, pivots


def rank(field: Field, matrix: np.ndarray) -> int:
    return len(rref(field, matrix)[1])


def nullspace(field: Field, matrix: np.ndarray) -> np.ndarray:
    """Columns spanning the kernel of ``matrix``."""
    a, pivots = rref(field, matrix)
    ncols = a.shape[1]
    free = [c for c in range(ncols) if c not in pivots]
    basis = field.zeros((ncols, len(free)))
    for k, fc in enumerate(free):
        basis[fc, k] = field.one
        for r, pc in enumerate(pivots):
            basis[pc, k] = field.reduce(-a[r, fc])
    return basis


def solve(field: Field, matrix: np.ndarray, rhs: np.ndarray) -> np.ndarray | None:
    """One solution X of ``matrix @ X == rhs`` or None if inconsistent."""
    rhs = rhs.reshape(rhs.shape[0], -1)
    n = matrix.shape[1]
    aug = np.concatenate([field.array(matrix), field.array(rhs)], axis=1)
    a, pivots = rref(field, aug)
    if any(p >= n for p in pivots):
        return None
    x = field.zeros((n, rhs.shape[1]))
    for r, pc in enumerate(pivots):
        x[pc] = a[r, n:]
    return x


def invert(f: LinearMap) -> LinearMap | None:
    """Two-sided inverse, or None when ``f`` is singular."""
    n, m = f.shape
    if n != m:
        raise ShapeMismatch(f"cannot invert a {n}x{m} matrix")
    field = f.field
    a, pivots = rref(field, np.concatenate([f.entries, field.eye(n)], axis=1))
    if pivots[:n] != list(range(n)):
        return None
    return LinearMap(field, f.dom, f.cod, a[:, n:])


def convolution_inverse(C, A, f: LinearMap) -> LinearMap | None:
    """Solve m(f x g)D = m(g x f)D = eta eps for g : C -> A.

    ``C`` needs ``comult``/``counit`` and ``A`` needs ``mult``/``unit``; returns
    None when no convolution inverse exists.
    """
    field = f.field
    dc, da = prod(C.counit.dom), prod(A.unit.cod)
    target = compose(A.unit, C.counit)
    cols_left, cols_right = [], []
    for i in range(da):
        for j in range(dc):
            e = field.zeros((da, dc))
            e[i, j] = field.one
            g = LinearMap(field, f.cod, f.dom, e)
            cols_left.append(_convolve(A, C, f, g).entries.reshape(-1))
            cols_right.append(_convolve(A, C, g, f).entries.reshape(-1))
    system = np.concatenate([np.stack(cols_left, axis=1), np.stack(cols_right, axis=1)])
    rhs = np.concatenate([target.entries.reshape(-1), target.entries.reshape(-1)])
    sol = solve(field, system, rhs)
    if sol is None:
        return None
    return LinearMap(field, f.cod, f.dom, sol.reshape(da, dc))


def _convolve(A, C, f: LinearMap, g: LinearMap) -> LinearMap:
    return compose(A.mult, compose(tensor_of_maps(f, g), C.comult))


class Wire:
    """Compose a string diagram layer by layer, naming the wires.

    Every open wire carries a label.  ``apply(f, "a b", "c")`` feeds the wires
    ``a`` and ``b`` (in that order) into ``f`` and names its outputs ``c``; the
    remaining wires pass through untouched.  Each step is a composition with
    ``f`` tensored with identities, after a factor permutation.

    >>> w = Wire(Q, h=2, k=2)                     # doctest: +SKIP
    >>> w.apply(m, "h k", "r").result("r")        # doctest: +SKIP
    """

    def __init__(self, field: Field, *inputs: tuple[str, int], **named: int):
        self.field = field
        legs = list(inputs) + list(named.items())
        self.labels = [lab for lab, _ in legs]
        self.dims = [int(d) for _, d in legs]
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate wire labels {self.labels}")
        self.dom = tuple(self.dims)
        self._matrix: np.ndarray | None = None   # None means identity

    def _split(self, names: str | Sequence[str]) -> list[str]:
        return names.split() if isinstance(names, str) else list(names)

    def _order(self, front: list[str]) -> list[int]:
        pos = [self.labels.index(lab) for lab in front]
        rest = [i for i in range(len(self.labels)) if i not in pos]
        return pos + rest

    def apply(self, f: LinearMap, ins: str | Sequence[str] = "", outs: str | Sequence[str] = ""):
        ins, outs = self._split(ins), self._split(outs)
        if f.field != self.field:
            raise FieldMismatch(f"{f.field!r} in a diagram over {self.field!r}")
        if len(ins) != len(f.dom) or len(outs) != len(f.cod):
            raise ShapeMismatch(
                f"{f!r} wired with inputs {ins} and outputs {outs}")
        for lab in ins:
            if lab not in self.labels:
                raise KeyError(f"no open wire named {lab!r}")
        if tuple(self.dims[self.labels.index(lab)] for lab in ins) != f.dom:
            raise ShapeMismatch(f"wires {ins} do not match domain {f.dom} of {f!r}")
        clash = set(outs) & (set(self.labels) - set(ins))
        if clash or len(set(outs)) != len(outs):
            raise ValueError(f"output labels {outs} clash with open wires")

        order = self._order(ins)
        rest = [i for i in order[len(ins):]]
        rest_dims = [self.dims[i] for i in rest]
        r = prod(rest_dims)
        field = self.field
        if self._matrix is None:
            # f tensor identity, with columns returned to the original leg order
            k = np.kron(f.entries, field.eye(r))
            src_dims = [self.dims[i] for i in order]
            inv = np.argsort(order)
            k = k.reshape((k.shape[0],) + tuple(src_dims))
            k = k.transpose([0] + [1 + int(i) for i in inv])
            new = k.reshape(k.shape[0], -1)
        else:
            g = self._matrix
            ncols = g.shape[1]
            g = g.reshape(tuple(self.dims) + (ncols,))
            g = g.transpose(order + [len(self.dims)])
            g = g.reshape(prod(f.dom), r * ncols)
            new = field.matmul(f.entries, g).reshape(prod(f.cod) * r, ncols)
        self._matrix = new
        self.labels = outs + [self.labels[i] for i in rest]
        self.dims = list(f.cod) + rest_dims
        return self

    def result(self, outs: str | Sequence[str] = "") -> LinearMap:
        outs = self._split(outs)
        if sorted(outs) != sorted(self.labels):
            raise ValueError(f"open wires {self.labels} but result asks for {outs}")
        order = [self.labels.index(lab) for lab in outs]
        cod = tuple(self.dims[i] for i in order)
        field = self.field
        if self._matrix is None:
            return permute_factors(field, self.dims, order)
        g = self._matrix
        ncols = g.shape[1]
        g = g.reshape(tuple(self.dims) + (ncols,)).transpose(order + [len(self.dims)])
        return LinearMap(field, cod, self.dom, np.ascontiguousarray(g).reshape(prod(cod), ncols))


def basis_vector(field: Field, dims: Sequence[int], index: Sequence[int]) -> LinearMap:
    """The pure tensor e_{i1} x ... x e_{ik} as a map from the unit object."""
    dims = _dims(dims)
    flat = np.ravel_multi_index(tuple(index), dims) if dims else 0
    arr = field.zeros((prod(dims), 1))
    arr[flat, 0] = field.one
    return LinearMap(field, dims, (), arr)


def element(field: Field, dims: Sequence[int], coeffs) -> LinearMap:
    """An element of a tensor product as a map from the unit object."""
    arr = field.array(coeffs).reshape(-1, 1)
    return LinearMap(field, dims, (), arr)


def iter_basis(dims: Sequence[int]) -> Iterable[tuple[int, ...]]:
    return iproduct(*(range(d) for d in dims))


def matrix_power(f: LinearMap, k: int) -> LinearMap:
    if k == 0:
        return identity(f.field, f.dom)
    return reduce(compose, [f] * k)
