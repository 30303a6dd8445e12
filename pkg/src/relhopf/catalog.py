"""Example Hopf algebras: Sweedler's H4, group algebras, their duals, cyclic R-matrices."""

from __future__ import annotations

from itertools import product

import numpy as np

from .hopfcore import HopfData, RMatrix, SigmaForm
from .tensorlin import Field, GF, LinearMap


class CatalogError(ValueError):
    pass


def _hopf(field: Field, mult, unit, comult, counit, antipode) -> HopfData:
    """Assemble HopfData from index-convention arrays.

    mult[i][j][k]: e_i e_j = sum_k mult[i][j][k] e_k
    comult[i][j][k]: Delta(e_i) = sum_jk comult[i][j][k] e_j (x) e_k
    antipode[i][j]: S(e_i) = sum_j antipode[i][j] e_j
    """
    mult = field.array(mult)
    comult = field.array(comult)
    antipode = field.array(antipode)
    d = mult.shape[0]
    return HopfData(
        mult=LinearMap(field, (d,), (d, d), mult.reshape(d * d, d).T),
        unit=LinearMap(field, (d,), (), field.array(unit).reshape(d, 1)),
        comult=LinearMap(field, (d, d), (d,), comult.reshape(d, d * d).T),
        counit=LinearMap(field, (), (d,), field.array(counit).reshape(1, d)),
        antipode=LinearMap(field, (d,), (d,), antipode.T),
    )


def trivial_hopf(field: Field) -> HopfData:
    """The ground field k as a one-dimensional Hopf algebra."""
    return _hopf(field, [[[1]]], [1], [[[1]]], [1], [[1]])


def sweedler_algebra(p: int = 5) -> HopfData:
    """H4 over F_p with basis (1, g, x, gx): g^2 = 1, x^2 = 0, xg = -gx.

    Delta g = g (x) g, Delta x = x (x) 1 + g (x) x, S(g) = g, S(x) = -gx.
    """
    if p == 2:
        raise CatalogError("H4 needs characteristic other than 2")
    F = GF(p) if p else Field(0)
    # basis index of g^a x^b is 2b + a
    idx = lambda a, b: 2 * b + a
    d = 4
    mult = [[[0] * d for _ in range(d)] for _ in range(d)]
    for a, b, c, e in product(range(2), repeat=4):
        if b + e >= 2:
            continue
        sign = -1 if (b and c) else 1    # x^b g^c = (-1)^(bc) g^c x^b
        mult[idx(a, b)][idx(c, e)][idx((a + c) % 2, b + e)] = sign
    comult = [[[0] * d for _ in range(d)] for _ in range(d)]
    comult[0][0][0] = 1                       # 1
    comult[1][1][1] = 1                       # g
    comult[2][2][0] = 1                       # x -> x(x)1 + g(x)x
    comult[2][1][2] = 1
    comult[3][3][1] = 1                       # gx -> gx(x)g + 1(x)gx
    comult[3][0][3] = 1
    counit = [1, 1, 0, 0]
    antipode = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
    return _hopf(F, mult, [1, 0, 0, 0], comult, counit, antipode)


def sweedler_r_matrix(field: Field, alpha) -> RMatrix:
    """R_alpha = 1/2 (1x1 + 1xg + gx1 - gxg) + alpha/2 (xxx + xxxg + xgxxg - xgxx).

    Written in the basis (1, g, x, gx) with xg = -gx this is
    alpha/2 (x(x)x - x(x)gx + gx(x)gx + gx(x)x).
    """
    half = field.inv(2)
    a = field(alpha)
    r = [[0] * 4 for _ in range(4)]
    r[0][0], r[0][1], r[1][0], r[1][1] = 1, 1, 1, -1
    r[2][2], r[2][3], r[3][3], r[3][2] = a, -a, a, a
    return RMatrix.from_coeffs(field, [[field(v) * half for v in row] for row in r])


def build_sweedler(p: int, alpha) -> tuple[HopfData, RMatrix]:
    if p == 2:
        raise CatalogError("1/2 is undefined in characteristic 2")
    H = sweedler_algebra(p)
    return H, sweedler_r_matrix(H.field, alpha)


def _check_group_table(table) -> tuple[int, list[int]]:
    """Return (identity index, inverse indices) or raise CatalogError."""
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise CatalogError("group table must be a non-empty square")
    if any(not (0 <= v < n) for row in table for v in row):
        raise CatalogError("group table entries out of range")
    for a, b, c in product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise CatalogError(f"table is not associative at ({a}, {b}, {c})")
    ids = [e for e in range(n) if all(table[e][a] == a == table[a][e] for a in range(n))]
    if not ids:
        raise CatalogError("table has no identity element")
    e = ids[0]
    inverses = []
    for a in range(n):
        inv = [b for b in range(n) if table[a][b] == e == table[b][a]]
        if not inv:
            raise CatalogError(f"element {a} has no inverse")
        inverses.append(inv[0])
    return e, inverses


def cyclic_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def build_group_algebra(table, field: Field) -> HopfData:
    """kG with grouplike basis: Delta g = g (x) g, eps(g) = 1, S(g) = g^-1."""
    e, inverses = _check_group_table(table)
    n = len(table)
    mult = np.zeros((n, n, n), dtype=int)
    comult = np.zeros((n, n, n), dtype=int)
    antipode = np.zeros((n, n), dtype=int)
    for a in range(n):
        comult[a, a, a] = 1
        antipode[a, inverses[a]] = 1
        for b in range(n):
            mult[a, b, table[a][b]] = 1
    unit = [int(a == e) for a in range(n)]
    return _hopf(field, mult, unit, comult, [1] * n, antipode)


def build_dual_group_algebra(table, field: Field) -> HopfData:
    """k^G in the delta basis: d_a d_b = [a=b] d_a, Delta d_g = sum_{hk=g} d_h (x) d_k."""
    e, inverses = _check_group_table(table)
    n = len(table)
    mult = np.zeros((n, n, n), dtype=int)
    comult = np.zeros((n, n, n), dtype=int)
    antipode = np.zeros((n, n), dtype=int)
    for a in range(n):
        mult[a, a, a] = 1
        antipode[a, inverses[a]] = 1
        for b in range(n):
            comult[table[a][b], a, b] = 1
    counit = [int(a == e) for a in range(n)]
    return _hopf(field, mult, [1] * n, comult, counit, antipode)


def multiplicative_order(x: int, p: int) -> int | None:
    x %= p
    if x == 0:
        return None
    k, y = 1, x
    while y != 1:
        y = y * x % p
        k += 1
    return k


def build_cyclic_qt(n: int, p: int, omega: int) -> tuple[HopfData, RMatrix]:
    """kZ_n over F_p with R = 1/n sum_{a,b} omega^(-ab) g^a (x) g^b."""
    F = GF(p)
    if n % p == 0:
        raise CatalogError(f"{n} is not invertible in F_{p}")
    order = multiplicative_order(omega, p)
    if order != n:
        raise CatalogError(f"omega = {omega} has order {order} in F_{p}, need {n}")
    H = build_group_algebra(cyclic_table(n), F)
    ninv = F.inv(n)
    winv = F.inv(omega)
    coeffs = [[ninv * pow(winv, a * b, p) % p for b in range(n)] for a in range(n)]
    return H, RMatrix.from_coeffs(F, coeffs)


def build_cyclic_bicharacter(n: int, p: int, omega: int) -> tuple[HopfData, SigmaForm]:
    """kZ_n over F_p with sigma(g^i, g^j) = omega^(ij); omega^n must be 1."""
    F = GF(p)
    if pow(omega, n, p) != 1:
        raise CatalogError(f"omega = {omega} is not an n-th root of unity in F_{p}")
    H = build_group_algebra(cyclic_table(n), F)
    return H, SigmaForm.from_coeffs(F, [[pow(omega, i * j, p) for j in range(n)]
                                        for i in range(n)])


def dual_hopf(H: HopfData) -> HopfData:
    """H* in the dual basis: every structure map is transposed."""
    F, d = H.field, H.dim
    t = lambda f, cod, dom: LinearMap(F, cod, dom, f.entries.T)
    return HopfData(
        mult=t(H.comult, (d,), (d, d)),
        unit=t(H.counit, (d,), ()),
        comult=t(H.mult, (d, d), (d,)),
        counit=t(H.unit, (), (d,)),
        antipode=t(H.antipode, (d,), (d,)),
    )


def sigma_from_r(R: RMatrix) -> SigmaForm:
    """The form on H* with sigma(e^i, e^j) = R[i][j]."""
    return SigmaForm(LinearMap(R.element.field, (), (R.dim, R.dim), R.element.entries.T))


def build_sweedler_dual(p: int, alpha) -> tuple[HopfData, SigmaForm]:
    """H4* with the coquasitriangular form dual to R_alpha."""
    H, R = build_sweedler(p, alpha)
    return dual_hopf(H), sigma_from_r(R)


def catalog_hopf(field: Field | None = None) -> dict[str, HopfData]:
    """Named Hopf algebras used by the self-tests."""
    F5, F7 = GF(5), GF(7)
    return {
        "k": trivial_hopf(F5),
        "kZ2": build_group_algebra(cyclic_table(2), F5),
        "kZ3": build_group_algebra(cyclic_table(3), F7),
        "k^Z2": build_dual_group_algebra(cyclic_table(2), F5),
        "k^Z3": build_dual_group_algebra(cyclic_table(3), F7),
        "H4": sweedler_algebra(5),
    }
