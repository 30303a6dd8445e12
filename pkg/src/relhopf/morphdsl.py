"""A small language for morphisms between tensor products of named objects.

    expr   := term { "." term }          composition, rightmost applied first
    term   := factor { "x" factor }      tensor product
    factor := NAME | "id" "(" NAME ")" | "flip" "(" NAME "," NAME ")" | "(" expr ")"

``∘`` and ``⊗`` are accepted for ``.`` and ``x``.  Identity files hold one
``NAME : LHS == RHS`` per line, with ``#`` comments.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import reduce
from importlib import resources
from pathlib import Path

from .report import CheckReport, Verdict
from .tensorlin import Field, LinearMap, compose, flip, identity, tensor_of_maps

__all__ = [
    "DSLError", "DSLSyntaxError", "DSLNameError", "DSLTypeError",
    "Gen", "Id", "Flip", "Compose", "Tensor", "parse", "to_text",
    "Environment", "Typed", "elaborate", "evaluate", "check_identity",
    "Identity", "parse_identities", "load_identities", "paper_identities_path",
    "run_identities", "hopf_environment", "braided_environment",
]


class DSLError(ValueError):
    pass


class DSLSyntaxError(DSLError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {msg}")
        self.line, self.col = line, col


class DSLNameError(DSLError):
    pass


class DSLTypeError(DSLError):
    pass


# syntax tree; positions are not part of node equality

@dataclass(frozen=True)
class Gen:
    name: str
    pos: tuple = field(default=(1, 1), compare=False)


@dataclass(frozen=True)
class Id:
    obj: str
    pos: tuple = field(default=(1, 1), compare=False)


@dataclass(frozen=True)
class Flip:
    left: str
    right: str
    pos: tuple = field(default=(1, 1), compare=False)


@dataclass(frozen=True)
class Compose:
    parts: tuple


@dataclass(frozen=True)
class Tensor:
    parts: tuple


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[().,∘⊗])|(?P<bad>\S))")


def _tokens(text: str, line: int = 1):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        col = m.start(m.lastgroup) + 1 if m.lastgroup else pos + 1
        if m.group("bad"):
            raise DSLSyntaxError(f"unexpected character {m.group('bad')!r}", line, col)
        if m.group("name"):
            tok = m.group("name")
            kind = "x" if tok == "x" else ("kw" if tok in ("id", "flip") else "name")
            out.append((kind, tok, (line, col)))
        elif m.group("op"):
            op = {"∘": ".", "⊗": "x"}.get(m.group("op"), m.group("op"))
            out.append((op, op, (line, col)))
        pos = m.end()
    out.append(("end", "", (line, len(text) + 1)))
    return out


class _Parser:
    def __init__(self, text: str, line: int):
        self.toks = _tokens(text, line)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind: str):
        tok = self.toks[self.i]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise DSLSyntaxError(f"expected {kind!r}, found {what}", *tok[2])
        self.i += 1
        return tok

    def expr(self):
        parts = [self.term()]
        while self.peek()[0] == ".":
            self.i += 1
            parts.append(self.term())
        return parts[0] if len(parts) == 1 else Compose(tuple(parts))

    def term(self):
        parts = [self.factor()]
        while self.peek()[0] == "x":
            self.i += 1
            parts.append(self.factor())
        return parts[0] if len(parts) == 1 else Tensor(tuple(parts))

    def factor(self):
        kind, tok, pos = self.peek()
        if kind == "name":
            self.i += 1
            return Gen(tok, pos)
        if kind == "kw":
            self.i += 1
            self.take("(")
            a = self.take("name")[1]
            if tok == "id":
                self.take(")")
                return Id(a, pos)
            self.take(",")
            b = self.take("name")[1]
            self.take(")")
            return Flip(a, b, pos)
        if kind == "(":
            self.i += 1
            e = self.expr()
            self.take(")")
            return e
        what = "end of input" if kind == "end" else repr(tok)
        raise DSLSyntaxError(f"expected a morphism, found {what}", *pos)


def parse(text: str, line: int = 1):
    p = _Parser(text, line)
    e = p.expr()
    kind, tok, pos = p.peek()
    if kind != "end":
        raise DSLSyntaxError(f"unexpected {tok!r}", *pos)
    return e


def to_text(e) -> str:
    """Print with ASCII operators; parse(to_text(e)) == e."""
    if isinstance(e, Gen):
        return e.name
    if isinstance(e, Id):
        return f"id({e.obj})"
    if isinstance(e, Flip):
        return f"flip({e.left}, {e.right})"
    if isinstance(e, Compose):
        return " . ".join(f"({to_text(p)})" if isinstance(p, Compose) else to_text(p)
                          for p in e.parts)
    if isinstance(e, Tensor):
        return " x ".join(f"({to_text(p)})" if isinstance(p, (Compose, Tensor)) else to_text(p)
                          for p in e.parts)
    raise TypeError(f"not a morphism expression: {e!r}")


# typing and evaluation

@dataclass
class Environment:
    """Objects with dimensions and generators with typed payloads."""

    field: Field
    objects: dict = field(default_factory=dict)        # name -> dim
    generators: dict = field(default_factory=dict)     # name -> (dom, cod, LinearMap)

    def add_object(self, name: str, dim: int):
        self.objects[name] = int(dim)
        return self

    def add_generator(self, name: str, dom, cod, payload: LinearMap):
        dom, cod = tuple(dom), tuple(cod)
        for obj in dom + cod:
            if obj not in self.objects:
                raise DSLNameError(f"generator {name!r} uses unknown object {obj!r}")
        want = (tuple(self.objects[o] for o in cod), tuple(self.objects[o] for o in dom))
        if (payload.cod, payload.dom) != want:
            payload = payload.with_dims(cod=want[0], dom=want[1])
        self.generators[name] = (dom, cod, payload)
        return self


@dataclass(frozen=True)
class Typed:
    expr: object
    dom: tuple
    cod: tuple


def _where(e) -> str:
    pos = getattr(e, "pos", None)
    return f" at {pos[0]}:{pos[1]}" if pos else ""


def _interface(e, env: Environment) -> tuple[tuple, tuple]:
    if isinstance(e, Gen):
        if e.name not in env.generators:
            raise DSLNameError(f"unknown generator {e.name!r}{_where(e)}")
        dom, cod, _ = env.generators[e.name]
        return dom, cod
    if isinstance(e, Id):
        if e.obj not in env.objects:
            raise DSLNameError(f"unknown object {e.obj!r}{_where(e)}")
        return (e.obj,), (e.obj,)
    if isinstance(e, Flip):
        for obj in (e.left, e.right):
            if obj not in env.objects:
                raise DSLNameError(f"unknown object {obj!r}{_where(e)}")
        return (e.left, e.right), (e.right, e.left)
    if isinstance(e, Tensor):
        dom, cod = (), ()
        for p in e.parts:
            d, c = _interface(p, env)
            dom, cod = dom + d, cod + c
        return dom, cod
    if isinstance(e, Compose):
        ifaces = [_interface(p, env) for p in e.parts]
        for (d_left, _), (_, c_right), right in zip(ifaces, ifaces[1:], e.parts[1:]):
            if d_left != c_right:
                raise DSLTypeError(
                    f"cannot compose: {to_text(right)} has codomain ({', '.join(c_right)}) "
                    f"but the next map expects ({', '.join(d_left)})")
        return ifaces[-1][0], ifaces[0][1]
    raise TypeError(f"not a morphism expression: {e!r}")


def elaborate(e, env: Environment) -> Typed:
    if isinstance(e, str):
        e = parse(e)
    dom, cod = _interface(e, env)
    return Typed(e, dom, cod)


def _eval(e, env: Environment) -> LinearMap:
    if isinstance(e, Gen):
        return env.generators[e.name][2]
    if isinstance(e, Id):
        return identity(env.field, env.objects[e.obj])
    if isinstance(e, Flip):
        return flip(env.field, env.objects[e.left], env.objects[e.right])
    if isinstance(e, Tensor):
        return reduce(tensor_of_maps, [_eval(p, env) for p in e.parts])
    if isinstance(e, Compose):
        return reduce(compose, [_eval(p, env) for p in e.parts])
    raise TypeError(f"not a morphism expression: {e!r}")


def evaluate(t, env: Environment) -> LinearMap:
    if not isinstance(t, Typed):
        t = elaborate(t, env)
    f = _eval(t.expr, env)
    dims = lambda objs: tuple(env.objects[o] for o in objs)
    return f.with_dims(cod=dims(t.cod), dom=dims(t.dom))


def check_identity(lhs, rhs, env: Environment, name: str = "") -> Verdict:
    tl, tr = elaborate(lhs, env), elaborate(rhs, env)
    if (tl.dom, tl.cod) != (tr.dom, tr.cod):
        raise DSLTypeError(
            f"sides differ: ({', '.join(tl.dom)}) -> ({', '.join(tl.cod)}) versus "
            f"({', '.join(tr.dom)}) -> ({', '.join(tr.cod)})")
    witness = evaluate(tl, env).first_difference(evaluate(tr, env))
    return Verdict(name, witness is None, witness)


# identity files

@dataclass(frozen=True)
class Identity:
    name: str
    lhs: object
    rhs: object
    line: int

    def names(self) -> tuple[set, set]:
        """(generators, objects) mentioned on either side."""
        gens, objs = set(), set()

        def walk(e):
            if isinstance(e, Gen):
                gens.add(e.name)
            elif isinstance(e, Id):
                objs.add(e.obj)
            elif isinstance(e, Flip):
                objs.update((e.left, e.right))
            else:
                for p in e.parts:
                    walk(p)
        walk(self.lhs)
        walk(self.rhs)
        return gens, objs


def parse_identities(text: str) -> list[Identity]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        m = re.match(r"^(.*?)\s:\s(.*)$", line) or re.match(r"^([^:]*):(.*)$", line)
        if m is None:
            raise DSLSyntaxError("expected 'NAME : LHS == RHS'", lineno, 1)
        name, body = m.group(1).strip(), m.group(2)
        if not name:
            raise DSLSyntaxError("missing identity name", lineno, 1)
        if body.count("==") != 1:
            raise DSLSyntaxError("expected exactly one '=='", lineno, m.start(2) + 1)
        lhs_text, rhs_text = body.split("==")
        offset = m.start(2)
        # pad so that error columns refer to the original line
        lhs = parse(" " * offset + lhs_text, lineno)
        rhs = parse(" " * (offset + len(lhs_text) + 2) + rhs_text, lineno)
        out.append(Identity(name, lhs, rhs, lineno))
    return out


def load_identities(path) -> list[Identity]:
    return parse_identities(Path(path).read_text(encoding="utf-8"))


def paper_identities_path() -> Path:
    return Path(str(resources.files("relhopf") / "data" / "paper.identities"))


def run_identities(identities: list[Identity], env: Environment) -> CheckReport:
    """Evaluate every identity whose names are all bound in ``env``.

    Skipped identity names are listed under ``stats["skipped"]``.
    """
    rep = CheckReport()
    skipped = []
    for ident in identities:
        gens, objs = ident.names()
        if not gens <= env.generators.keys() or not objs <= env.objects.keys():
            skipped.append(ident.name)
            continue
        v = check_identity(ident.lhs, ident.rhs, env, ident.name)
        rep.verdicts.append(v)
    rep.stats = {"evaluated": len(rep.verdicts), "skipped": skipped}
    return rep


# standard environments

def _add_structure(env: Environment, obj: str, S, suffix: str):
    env.add_generator(f"m_{suffix}", (obj, obj), (obj,), S.mult)
    env.add_generator(f"u_{suffix}", (), (obj,), S.unit)
    env.add_generator(f"Delta_{suffix}", (obj,), (obj, obj), S.comult)
    env.add_generator(f"eps_{suffix}", (obj,), (), S.counit)
    if getattr(S, "antipode", None) is not None:
        env.add_generator(f"S_{suffix}", (obj,), (obj,), S.antipode)


def hopf_environment(H) -> Environment:
    """Object B with generators m_B, u_B, Delta_B, eps_B (and S_B), plus
    ``one``, the identity of the unit object."""
    env = Environment(H.field)
    env.add_object("B", H.dim)
    env.add_generator("one", (), (), identity(H.field, ()))
    _add_structure(env, "B", H, "B")
    return env


def braided_environment(B, A) -> Environment:
    """``hopf_environment(B)`` plus object A with m_A, u_A, Delta_A, eps_A,
    the action ``act`` and the coaction ``coact``."""
    env = hopf_environment(B)
    env.add_object("A", A.dim)
    _add_structure(env, "A", A, "A")
    env.add_generator("act", ("B", "A"), ("A",), A.action)
    env.add_generator("coact", ("A",), ("B", "A"), A.coaction)
    return env
