"""Basis-by-basis evaluators, independent of the map composition machinery.

Everything here works on plain nested lists of structure constants and expands
the defining formulas term by term.
"""

from relhopf.serialize import map_to_array


def tolist(f):
    return map_to_array(f).tolist()


class Table:
    """Structure constants of a Hopf algebra as Python lists."""

    def __init__(self, H):
        self.F = H.field
        self.d = H.dim
        self.m = tolist(H.mult)          # m[i][j][k]
        self.c = tolist(H.comult)        # c[i][j][k]
        self.s = tolist(H.antipode)      # s[i][j]
        self.u = tolist(H.unit)
        self.e = tolist(H.counit)

    def zero(self, *shape):
        if not shape:
            return self.F.zero
        return [self.zero(*shape[1:]) for _ in range(shape[0])]

    def mul(self, u, v):
        out = self.zero(self.d)
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            for j, vj in enumerate(v):
                if vj == 0:
                    continue
                for k in range(self.d):
                    out[k] = self.F(out[k] + ui * vj * self.m[i][j][k])
        return out

    def delta(self, v):
        out = self.zero(self.d, self.d)
        for i, vi in enumerate(v):
            for j in range(self.d):
                for k in range(self.d):
                    out[j][k] = self.F(out[j][k] + vi * self.c[i][j][k])
        return out

    def S(self, v):
        out = self.zero(self.d)
        for i, vi in enumerate(v):
            for j in range(self.d):
                out[j] = self.F(out[j] + vi * self.s[i][j])
        return out

    def basis(self, i):
        v = self.zero(self.d)
        v[i] = self.F.one
        return v

    def ad(self, h, a):
        """h1 a S(h2)."""
        out = self.zero(self.d)
        D = self.delta(h)
        for j in range(self.d):
            for k in range(self.d):
                if D[j][k] == 0:
                    continue
                t = self.mul(self.mul(self.basis(j), a), self.S(self.basis(k)))
                out = [self.F(o + D[j][k] * x) for o, x in zip(out, t)]
        return out


def transmuted_comult(H, R):
    """Array D[i][j][k] of h1 S(R2) (x) R1 |> h2 for h = e_i."""
    T = Table(H)
    r = R.coeffs().tolist()
    d = T.d
    out = T.zero(d, d, d)
    for i in range(d):
        D = T.delta(T.basis(i))
        for j in range(d):
            for k in range(d):
                if D[j][k] == 0:
                    continue
                for a in range(d):
                    for b in range(d):
                        if r[a][b] == 0:
                            continue
                        left = T.mul(T.basis(j), T.S(T.basis(b)))
                        right = T.ad(T.basis(a), T.basis(k))
                        coef = D[j][k] * r[a][b]
                        for p in range(d):
                            for q in range(d):
                                out[i][p][q] = T.F(out[i][p][q] + coef * left[p] * right[q])
    return out


def transmuted_mult(H, sigma):
    """Array M[i][j][k] of h <> h' = sigma(h'2, S(h1) h3) h2 h'1 for h = e_i, h' = e_j."""
    T = Table(H)
    s = sigma.coeffs().tolist()
    d, F = T.d, T.F
    out = T.zero(d, d, d)
    for i in range(d):
        D1 = T.delta(T.basis(i))
        for j in range(d):
            Dj = T.delta(T.basis(j))
            for a in range(d):
                for b in range(d):
                    if D1[a][b] == 0:
                        continue
                    D2 = T.delta(T.basis(b))          # h1 = e_a, (h2, h3) = Delta(e_b)
                    for b2 in range(d):
                        for b3 in range(d):
                            if D2[b2][b3] == 0:
                                continue
                            t = T.mul(T.S(T.basis(a)), T.basis(b3))
                            for p in range(d):
                                for q in range(d):
                                    if Dj[p][q] == 0:
                                        continue
                                    val = sum(s[q][z] * t[z] for z in range(d))
                                    coef = F(D1[a][b] * D2[b2][b3] * Dj[p][q] * val)
                                    if coef == 0:
                                        continue
                                    prod = T.mul(T.basis(b2), T.basis(p))
                                    for k in range(d):
                                        out[i][j][k] = F(out[i][j][k] + coef * prod[k])
    return out


def tensor_right_action(A, X, Y):
    """Array act[(x, y)][a][(x', y')] of (x (x) y) . a = x . (y[-1] . a1) (x) y[0] . a2."""
    F = A.field
    act = tolist(A.action)               # act[b][a][c]
    com = tolist(A.comult)               # com[a][a1][a2]
    xa = tolist(X.right_action)          # xa[x][a][x']
    yc = tolist(Y.coaction)              # yc[y][b][y0]
    ya = tolist(Y.right_action)
    nx, ny, da = X.dim, Y.dim, A.dim
    db = len(act)
    out = [[[F.zero] * (nx * ny) for _ in range(da)] for _ in range(nx * ny)]
    for x in range(nx):
        for y in range(ny):
            for a in range(da):
                for a1 in range(da):
                    for a2 in range(da):
                        c1 = com[a][a1][a2]
                        if c1 == 0:
                            continue
                        for b in range(db):
                            for y0 in range(ny):
                                c2 = yc[y][b][y0]
                                if c2 == 0:
                                    continue
                                for c in range(da):
                                    c3 = act[b][a1][c]
                                    if c3 == 0:
                                        continue
                                    for x1 in range(nx):
                                        c4 = xa[x][c][x1]
                                        if c4 == 0:
                                            continue
                                        for y1 in range(ny):
                                            c5 = ya[y0][a2][y1]
                                            if c5 == 0:
                                                continue
                                            row = out[x * ny + y][a]
                                            row[x1 * ny + y1] = F(row[x1 * ny + y1]
                                                                  + c1 * c2 * c3 * c4 * c5)
    return out


def yd_braiding(B, X, Y):
    """Array c[x][y][y'][x'] of x (x) y -> x[-1] . y (x) x[0]."""
    F = B.field
    xc = tolist(X.coaction)              # xc[x][b][x0]
    ya = tolist(Y.action)                # ya[b][y][y']
    nx, ny = X.dim, Y.dim
    out = [[[[F.zero] * nx for _ in range(ny)] for _ in range(ny)] for _ in range(nx)]
    for x in range(nx):
        for y in range(ny):
            for b in range(B.dim):
                for x0 in range(nx):
                    if xc[x][b][x0] == 0:
                        continue
                    for y1 in range(ny):
                        out[x][y][y1][x0] = F(out[x][y][y1][x0] + xc[x][b][x0] * ya[b][y][y1])
    return out


def power_of_antipode(H, n):
    T = Table(H)
    rows = []
    for i in range(T.d):
        v = T.basis(i)
        for _ in range(n):
            v = T.S(v)
        rows.append(v)
    return rows
