"""Linear implicational types, linear lambda-terms, and their cowordism semantics.

Typing derivations follow the three natural-deduction rules (Id, abstraction,
application) with strictly linear context bookkeeping: application splits the
context, argument part first; abstraction discharges one hypothesis whose
position is recorded so the interpretation's wire bending is deterministic.

A derivation over a signature interpreted in the cowordism category becomes a
cowordism from the tensor of the interpreted context types to the interpreted
result type.  Abstraction is currying, application plugs the argument's output
into the function's bent input wire.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .core import Boundary, Multiword
from .category import (
    Cowordism,
    compose,
    curry,
    identity,
    symmetry,
    tensor,
    uncurry,
)


# ---------------------------------------------------------------------------
# Types


@dataclass(frozen=True)
class Atom:
    name: str

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Arrow:
    arg: "LinType"
    res: "LinType"

    def __repr__(self) -> str:
        a = f"({self.arg})" if isinstance(self.arg, Arrow) else repr(self.arg)
        return f"{a} -> {self.res}"


LinType = Atom | Arrow


def type_atoms(t: LinType) -> set[str]:
    if isinstance(t, Atom):
        return {t.name}
    return type_atoms(t.arg) | type_atoms(t.res)


# ---------------------------------------------------------------------------
# Terms


@dataclass(frozen=True)
class Var:
    name: str

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Const:
    name: str

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True)
class App:
    fn: "Term"
    arg: "Term"

    def __repr__(self) -> str:
        fn = repr(self.fn) if not isinstance(self.fn, Lam) else f"({self.fn})"
        arg = repr(self.arg) if isinstance(self.arg, (Var, Const)) else f"({self.arg})"
        return f"{fn} {arg}"


@dataclass(frozen=True)
class Lam:
    binder: str
    body: "Term"

    def __repr__(self) -> str:
        return f"\\{self.binder}. {self.body}"


Term = Var | Const | App | Lam


def free_vars(t: Term) -> list[str]:
    """Free variables in left-to-right occurrence order (with multiplicity)."""
    if isinstance(t, Var):
        return [t.name]
    if isinstance(t, Const):
        return []
    if isinstance(t, App):
        return free_vars(t.fn) + free_vars(t.arg)
    return [v for v in free_vars(t.body) if v != t.binder]


def is_linear(t: Term) -> bool:
    """Every variable (free or bound) occurs exactly once."""

    def occurrences(u: Term, name: str) -> int:
        if isinstance(u, Var):
            return 1 if u.name == name else 0
        if isinstance(u, Const):
            return 0
        if isinstance(u, App):
            return occurrences(u.fn, name) + occurrences(u.arg, name)
        if u.binder == name:
            return 0
        return occurrences(u.body, name)

    def walk(u: Term) -> bool:
        if isinstance(u, App):
            return walk(u.fn) and walk(u.arg)
        if isinstance(u, Lam):
            return occurrences(u.body, u.binder) == 1 and walk(u.body)
        return True

    fv = free_vars(t)
    return len(fv) == len(set(fv)) and walk(t)


_fresh = itertools.count()


def fresh_name(base: str = "v") -> str:
    return f"{base}%{next(_fresh)}"


def substitute(t: Term, name: str, value: Term) -> Term:
    """Capture-avoiding substitution (cheap under linearity)."""
    if isinstance(t, Var):
        return value if t.name == name else t
    if isinstance(t, Const):
        return t
    if isinstance(t, App):
        return App(substitute(t.fn, name, value), substitute(t.arg, name, value))
    if t.binder == name:
        return t
    if t.binder in free_vars(value):
        renamed = fresh_name(t.binder.split("%")[0])
        body = substitute(t.body, t.binder, Var(renamed))
        return Lam(renamed, substitute(body, name, value))
    return Lam(t.binder, substitute(t.body, name, value))


def beta_normalize(t: Term) -> Term:
    """Leftmost-outermost beta-normal form; terminates on linear terms."""
    if not is_linear(t):
        raise ValueError(f"term is not linear: {t}")

    def step(u: Term) -> Term | None:
        if isinstance(u, App):
            if isinstance(u.fn, Lam):
                return substitute(u.fn.body, u.fn.binder, u.arg)
            fn = step(u.fn)
            if fn is not None:
                return App(fn, u.arg)
            arg = step(u.arg)
            if arg is not None:
                return App(u.fn, arg)
            return None
        if isinstance(u, Lam):
            body = step(u.body)
            return None if body is None else Lam(u.binder, body)
        return None

    while True:
        nxt = step(t)
        if nxt is None:
            return t
        t = nxt


def rename_apart(t: Term) -> Term:
    """Give every binder a globally fresh name (free variables untouched)."""

    def rec(u: Term, env: dict[str, str]) -> Term:
        if isinstance(u, Var):
            return Var(env.get(u.name, u.name))
        if isinstance(u, Const):
            return u
        if isinstance(u, App):
            return App(rec(u.fn, env), rec(u.arg, env))
        fresh = fresh_name(u.binder.split("%")[0])
        return Lam(fresh, rec(u.body, {**env, u.binder: fresh}))

    return rec(t, {})


def alpha_eq(a: Term, b: Term) -> bool:
    def canon(t: Term, env: dict[str, str], counter: itertools.count) -> object:
        if isinstance(t, Var):
            return ("v", env.get(t.name, t.name))
        if isinstance(t, Const):
            return ("c", t.name)
        if isinstance(t, App):
            return ("a", canon(t.fn, env, counter), canon(t.arg, env, counter))
        fresh = f"#{next(counter)}"
        return ("l", canon(t.body, {**env, t.binder: fresh}, counter))

    return canon(a, {}, itertools.count()) == canon(b, {}, itertools.count())


# ---------------------------------------------------------------------------
# Signatures and derivations


@dataclass(frozen=True)
class Signature:
    atoms: frozenset[str]
    constants: Mapping[str, LinType]

    def __post_init__(self) -> None:
        for c, ty in self.constants.items():
            missing = type_atoms(ty) - self.atoms
            if missing:
                raise ValueError(f"constant {c} uses undeclared atoms {missing}")


Context = tuple[tuple[str, LinType], ...]


@dataclass(frozen=True)
class Deriv:
    """A typing derivation node; `rule` is id, axiom, imp_i, or imp_e."""

    rule: str
    context: Context
    term: Term
    type: LinType
    premises: tuple["Deriv", ...] = ()
    hypo_pos: int = -1  # imp_i: index of the discharged hypothesis in the premise context


class TypeError_(ValueError):
    """Typing failure (linearity violation, unknown constant, mismatch)."""


def check_derivation(sig: Signature, d: Deriv) -> list[str]:
    """Validate every node against its rule; [] when well formed."""
    problems: list[str] = []

    def rec(node: Deriv) -> None:
        names = [x for x, _ in node.context]
        if len(names) != len(set(names)):
            problems.append(f"duplicate context variables {names}")
        if node.rule == "id":
            if not (
                len(node.context) == 1
                and node.term == Var(node.context[0][0])
                and node.type == node.context[0][1]
                and not node.premises
            ):
                problems.append(f"malformed Id node {node.term}")
        elif node.rule == "axiom":
            c = node.term
            if not (
                isinstance(c, Const)
                and not node.context
                and sig.constants.get(c.name) == node.type
                and not node.premises
            ):
                problems.append(f"malformed signature axiom {node.term}")
        elif node.rule == "imp_e":
            if len(node.premises) != 2:
                problems.append("imp_e needs two premises")
                return
            arg, fn = node.premises
            ok = (
                isinstance(fn.type, Arrow)
                and fn.type.arg == arg.type
                and node.type == fn.type.res
                and node.term == App(fn.term, arg.term)
                and node.context == arg.context + fn.context
                and not set(x for x, _ in arg.context) & set(x for x, _ in fn.context)
            )
            if not ok:
                problems.append(f"malformed imp_e node {node.term}")
            rec(arg)
            rec(fn)
            return
        elif node.rule == "imp_i":
            if len(node.premises) != 1:
                problems.append("imp_i needs one premise")
                return
            (p,) = node.premises
            k = node.hypo_pos
            ok = (
                0 <= k < len(p.context)
                and isinstance(node.term, Lam)
                and node.term.binder == p.context[k][0]
                and isinstance(node.type, Arrow)
                and node.type.arg == p.context[k][1]
                and node.type.res == p.type
                and node.term.body == p.term
                and node.context == p.context[:k] + p.context[k + 1 :]
            )
            if not ok:
                problems.append(f"malformed imp_i node {node.term}")
            rec(p)
            return
        else:
            problems.append(f"unknown rule {node.rule}")

    rec(d)
    return problems


# -- inference ---------------------------------------------------------------

_tv = itertools.count()


@dataclass(frozen=True)
class _TVar:
    idx: int


def _unify(a, b, subst: dict) -> None:
    a, b = _walk(a, subst), _walk(b, subst)
    if a == b:
        return
    if isinstance(a, _TVar):
        subst[a] = b
        return
    if isinstance(b, _TVar):
        subst[b] = a
        return
    if isinstance(a, Arrow) and isinstance(b, Arrow):
        _unify(a.arg, b.arg, subst)
        _unify(a.res, b.res, subst)
        return
    raise TypeError_(f"cannot unify {a} with {b}")


def _walk(t, subst: dict):
    while isinstance(t, _TVar) and t in subst:
        t = subst[t]
    return t


def _resolve(t, subst: dict) -> LinType:
    t = _walk(t, subst)
    if isinstance(t, _TVar):
        raise TypeError_("type is not determined (underconstrained term)")
    if isinstance(t, Arrow):
        return Arrow(_resolve(t.arg, subst), _resolve(t.res, subst))
    return t


def infer(
    sig: Signature,
    term: Term,
    context: Iterable[tuple[str, LinType]] = (),
    expected: LinType | None = None,
) -> Deriv:
    """Syntax-directed inference for linear terms via unification.

    Returns a derivation whose contexts follow the rule layout (application:
    argument context before function context).  Fails on non-linear terms,
    unknown constants, mismatches, and underconstrained types.
    """
    context = tuple(context)
    if not is_linear(term):
        raise TypeError_(f"term is not linear: {term}")
    term = rename_apart(term)
    fv = free_vars(term)
    declared = [x for x, _ in context]
    if sorted(fv) != sorted(declared):
        raise TypeError_(f"context {declared} does not match free variables {fv}")

    env: dict[str, LinType | _TVar] = dict(context)
    subst: dict = {}

    def walk_infer(t: Term):
        """Return (skeleton, type); skeleton mirrors the derivation shape."""
        if isinstance(t, Var):
            return ("id", t), env[t.name]
        if isinstance(t, Const):
            if t.name not in sig.constants:
                raise TypeError_(f"unknown constant {t.name}")
            return ("axiom", t), sig.constants[t.name]
        if isinstance(t, App):
            fn_sk, fn_ty = walk_infer(t.fn)
            arg_sk, arg_ty = walk_infer(t.arg)
            res = _TVar(next(_tv))
            _unify(fn_ty, Arrow(arg_ty, res), subst)
            return ("app", fn_sk, arg_sk, t), res
        # abstraction
        tv = _TVar(next(_tv))
        env[t.binder] = tv
        body_sk, body_ty = walk_infer(t.body)
        return ("lam", t.binder, tv, body_sk, t), Arrow(tv, body_ty)

    sk, ty = walk_infer(term)
    if expected is not None:
        _unify(ty, expected, subst)

    def build(s) -> Deriv:
        kind = s[0]
        if kind == "id":
            v = s[1]
            vt = _resolve(env[v.name], subst)
            return Deriv("id", ((v.name, vt),), v, vt)
        if kind == "axiom":
            c = s[1]
            return Deriv("axiom", (), c, sig.constants[c.name])
        if kind == "app":
            _, fn_sk, arg_sk, t = s
            fn_d = build(fn_sk)
            arg_d = build(arg_sk)
            assert isinstance(fn_d.type, Arrow)
            return Deriv(
                "imp_e",
                arg_d.context + fn_d.context,
                App(fn_d.term, arg_d.term),
                fn_d.type.res,
                (arg_d, fn_d),
            )
        _, binder, tv, body_sk, t = s
        body_d = build(body_sk)
        pos = next(i for i, (x, _) in enumerate(body_d.context) if x == binder)
        hypo_ty = body_d.context[pos][1]
        return Deriv(
            "imp_i",
            body_d.context[:pos] + body_d.context[pos + 1 :],
            Lam(binder, body_d.term),
            Arrow(hypo_ty, body_d.type),
            (body_d,),
            hypo_pos=pos,
        )

    d = build(sk)
    bad = check_derivation(sig, d)
    if bad:
        raise TypeError_("; ".join(bad))
    return d


# ---------------------------------------------------------------------------
# Interpretation in the cowordism category


@dataclass(frozen=True)
class Interpretation:
    atom_boundaries: Mapping[str, Boundary]
    constant_bodies: Mapping[str, Multiword] = field(default_factory=dict)


def interpret_type(xi: Interpretation, t: LinType) -> Boundary:
    if isinstance(t, Atom):
        try:
            return xi.atom_boundaries[t.name]
        except KeyError:
            raise KeyError(f"atom {t.name} has no boundary assigned") from None
    return interpret_type(xi, t.arg).dual().tensor(interpret_type(xi, t.res))


def interpret_context(xi: Interpretation, ctx: Context) -> Boundary:
    b = Boundary.unit()
    for _, ty in ctx:
        b = b.tensor(interpret_type(xi, ty))
    return b


def interpret_derivation(xi: Interpretation, d: Deriv) -> Cowordism:
    """The cowordism of a derivation: context tensor -> result type."""
    if d.rule == "id":
        return identity(interpret_type(xi, d.type))
    if d.rule == "axiom":
        assert isinstance(d.term, Const)
        body = xi.constant_bodies[d.term.name]
        return Cowordism.make(Boundary.unit(), interpret_type(xi, d.type), body)
    if d.rule == "imp_e":
        arg_d, fn_d = d.premises
        sigma = interpret_derivation(xi, arg_d)  # Gamma* -> A*
        tau = interpret_derivation(xi, fn_d)  # Delta* -> A*^bot (x) B*
        a = interpret_type(xi, arg_d.type)
        plugged = uncurry(tau, a.size)  # A* (x) Delta* -> B*
        return compose(tensor(sigma, identity(tau.dom)), plugged)
    if d.rule == "imp_i":
        (p,) = d.premises
        sigma = interpret_derivation(xi, p)  # Gamma* (x) A* (x) Delta* -> B*
        k = d.hypo_pos
        a = interpret_type(xi, p.context[k][1])
        gamma = interpret_context(xi, p.context[:k])
        delta = interpret_context(xi, p.context[k + 1 :])
        mover = tensor(symmetry(a, gamma), identity(delta))
        return curry(compose(mover, sigma), a.size)
    raise ValueError(f"unknown rule {d.rule}")
