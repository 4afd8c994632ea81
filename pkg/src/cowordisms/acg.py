"""String signatures, abstract categorial grammars, and their cowordism semantics.

The string signature over an alphabet has one atom O and every letter as a
constant of type O -o O (abbreviated str).  A word is encoded by a term that
chains letter applications; under the cowordism interpretation xi0 the
judgement |- rho(w) : str becomes the single edge labeled w.

Note on orientation: the contraction rules make application append to the
string (plugging s into c yields s-then-c), so rho nests the FIRST letter
innermost; the chain lambda x. a_n (... (a_1 x)) reads off as a_1...a_n.

A string ACG is an abstract signature with a lexicon homomorphism into the
string signature.  Its language can be enumerated natively (derivation search
over the abstract signature) or through the linear-logic-grammar translation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import Boundary, Multiword, Word
from .category import Cowordism, compose, curry, identity, symmetry, tensor, uncurry
from .lam import (
    App,
    Arrow,
    Atom,
    Const,
    Deriv,
    Interpretation,
    Lam,
    LinType,
    Signature,
    Term,
    TypeError_,
    Var,
    beta_normalize,
    fresh_name,
    infer,
    interpret_derivation,
    interpret_type,
)

O_ATOM = Atom("O")
STR = Arrow(O_ATOM, O_ATOM)


def string_signature(alphabet: frozenset[str] | set[str]) -> Signature:
    return Signature(frozenset({"O"}), {c: STR for c in sorted(alphabet)})


def rho(w: Word, alphabet: frozenset[str] | None = None) -> Term:
    """Encode a word as a closed term of type str.

    rho(a1...an) = \\x. an(...(a1 x)): earliest letter applied first, so the
    interpretation is the single edge labeled a1...an.
    """
    if alphabet is not None:
        foreign = [c for c in w if c not in alphabet]
        if foreign:
            raise ValueError(f"tokens {foreign} not in alphabet")
    x = fresh_name("x")
    body: Term = Var(x)
    for c in w:
        body = App(Const(c), body)
    return Lam(x, body)


def unrho(sig: Signature, t: Term) -> Word:
    """Read the word back off a str-typed term (beta-normalizing first)."""
    d = infer(sig, t, expected=STR)  # raises TypeError_ if not typable at str
    del d
    n = beta_normalize(t)
    if isinstance(n, Const):  # eta-short single letter
        return (n.name,)
    if not isinstance(n, Lam):
        raise TypeError_(f"normal form {n} is not a string encoding")
    letters: list[str] = []
    body = n.body
    while isinstance(body, App):
        if not isinstance(body.fn, Const):
            raise TypeError_(f"non-constant head in string spine: {body.fn}")
        letters.append(body.fn.name)
        body = body.arg
    if body != Var(n.binder):
        raise TypeError_(f"string spine does not end in the bound variable: {n}")
    return tuple(reversed(letters))


def xi0(alphabet: frozenset[str] | set[str]) -> Interpretation:
    """The cowordism representation of the string signature."""
    o = Boundary.of(1)
    str_bd = o.dual().tensor(o)  # (2,{1})
    bodies = {c: Multiword.make(str_bd, [(1, (c,), 2)]) for c in alphabet}
    return Interpretation({"O": o}, bodies)


# ---------------------------------------------------------------------------
# Signature homomorphisms and string ACGs


@dataclass(frozen=True)
class LexiconHom:
    """A homomorphism of signatures: atoms to types, constants to terms."""

    type_map: Mapping[str, LinType]
    term_map: Mapping[str, Term]

    def apply_type(self, t: LinType) -> LinType:
        if isinstance(t, Atom):
            try:
                return self.type_map[t.name]
            except KeyError:
                raise KeyError(f"atom {t.name} has no image") from None
        return Arrow(self.apply_type(t.arg), self.apply_type(t.res))

    def apply_term(self, t: Term) -> Term:
        if isinstance(t, Var):
            return t
        if isinstance(t, Const):
            try:
                return self.term_map[t.name]
            except KeyError:
                raise KeyError(f"constant {t.name} has no image") from None
        if isinstance(t, App):
            return App(self.apply_term(t.fn), self.apply_term(t.arg))
        return Lam(t.binder, self.apply_term(t.body))


@dataclass(frozen=True)
class StringAcg:
    abstract: Signature
    alphabet: frozenset[str]
    lexicon: LexiconHom
    initial: str  # atomic type of the abstract signature

    @property
    def object_signature(self) -> Signature:
        return string_signature(self.alphabet)


def validate_acg(g: StringAcg) -> list[str]:
    problems = []
    if g.initial not in g.abstract.atoms:
        problems.append(f"initial {g.initial} is not an abstract atom")
    elif g.lexicon.apply_type(Atom(g.initial)) != STR:
        problems.append(f"initial {g.initial} does not map to str")
    obj = g.object_signature
    for c, ty in g.abstract.constants.items():
        try:
            image = g.lexicon.apply_term(Const(c))
            target = g.lexicon.apply_type(ty)
        except KeyError as e:
            problems.append(f"{c}: {e}")
            continue
        try:
            infer(obj, image, expected=target)
        except TypeError_ as e:
            problems.append(f"lexicon image of {c} is not typable at {target}: {e}")
    return problems


def acg_interpret(g: StringAcg) -> Interpretation:
    """Pull xi0 back along the lexicon: the abstract signature's cowordisms."""
    x0 = xi0(g.alphabet)
    obj = g.object_signature
    atoms = {a: interpret_type(x0, g.lexicon.apply_type(Atom(a))) for a in g.abstract.atoms}
    bodies = {}
    for c, ty in g.abstract.constants.items():
        image = g.lexicon.apply_term(Const(c))
        target = g.lexicon.apply_type(ty)
        d = infer(obj, image, expected=target)
        bodies[c] = interpret_derivation(x0, d).body
    return Interpretation(atoms, bodies)


# ---------------------------------------------------------------------------
# Language enumeration (native derivation search over the abstract signature)


def _type_universe(sig: Signature) -> list[LinType]:
    seen: list[LinType] = []

    def add(t: LinType) -> None:
        if t not in seen:
            seen.append(t)
            if isinstance(t, Arrow):
                add(t.arg)
                add(t.res)

    for ty in sig.constants.values():
        add(ty)
    for a in sorted(sig.atoms):
        add(Atom(a))
    return seen


def _type_key(t: LinType) -> str:
    return repr(t)


def acg_generate_native(
    g: StringAcg,
    budget: int,
    max_len: int | None = None,
    regular_only: bool = True,
    max_ctx: int = 3,
):
    """Bounded enumeration of derivable judgements over the abstract signature.

    States are canonical judgements (sorted context types, result type,
    interpreting cowordism); moves are Id, signature axioms, application and
    abstraction, each costing one budget unit.  Contexts are kept sorted, the
    bodies rewired through the corresponding symmetry permutation.  Returns
    the closed judgements at the initial type as a dict cowordism -> term.
    """
    from .category import permute_dom_blocks

    xi = acg_interpret(g)
    sig = g.abstract
    universe = _type_universe(sig)

    bd_cache: dict[LinType, Boundary] = {}

    def bd(t: LinType) -> Boundary:
        if t not in bd_cache:
            bd_cache[t] = interpret_type(xi, t)
        return bd_cache[t]

    def canon(ctx: tuple[LinType, ...], cow: Cowordism, term: Term):
        order = sorted(range(len(ctx)), key=lambda i: _type_key(ctx[i]))
        if order == list(range(len(ctx))):
            return ctx, cow, term
        blocks = [bd(t) for t in ctx]
        return (
            tuple(ctx[i] for i in order),
            permute_dom_blocks(cow, blocks, order),
            term,
        )

    def admissible(cow: Cowordism) -> bool:
        if regular_only and not cow.is_regular:
            return False
        if max_len is not None and sum(1 for _ in cow.body.letters()) > max_len:
            return False
        return True

    # layers[k] = {(ctx, type): {cow: term}}
    layers: list[dict] = [dict() for _ in range(budget + 1)]
    best: dict = {}

    def add(k: int, ctx, ty, cow: Cowordism, term: Term) -> None:
        key = (ctx, ty, cow)
        if key in best and best[key] <= k:
            return
        best[key] = k
        layers[k].setdefault((ctx, ty), {})[cow] = term

    if budget >= 1:
        for a in universe:
            add(1, (a,), a, identity(bd(a)), Var("_"))
        for c, ty in sig.constants.items():
            cow = Cowordism.closed(bd(ty), xi.constant_bodies[c])
            if admissible(cow):
                add(1, (), ty, cow, Const(c))

    for k in range(2, budget + 1):
        # abstraction: discharge one context type (any occurrence)
        for (ctx, ty), cows in layers[k - 1].items():
            for pos in range(len(ctx)):
                a = ctx[pos]
                rest = ctx[:pos] + ctx[pos + 1 :]
                blocks = [bd(t) for t in ctx]
                perm = [pos] + [i for i in range(len(ctx)) if i != pos]
                for cow, term in cows.items():
                    moved = permute_dom_blocks(cow, blocks, perm)
                    lam_cow = curry(moved, blocks[pos].size)
                    c2, cw2, t2 = canon(rest, lam_cow, Lam("_", term))
                    if admissible(cw2):
                        add(k, c2, Arrow(a, ty), cw2, t2)
        # application: combine arg (size i) with fn (size k-1-i)
        for i in range(1, k - 1):
            j = k - 1 - i
            fn_index: dict = {}
            for (fctx, fty), fcows in layers[j].items():
                if isinstance(fty, Arrow):
                    fn_index.setdefault(fty.arg, []).append((fctx, fty, fcows))
            for (actx, aty), acows in layers[i].items():
                for fctx, fty, fcows in fn_index.get(aty, ()):
                    if len(actx) + len(fctx) > max_ctx:
                        continue
                    a_size = bd(aty).size
                    for fcow, fterm in fcows.items():
                        plugged = uncurry(fcow, a_size)
                        id_dom = identity(fcow.dom)
                        for acow, aterm in acows.items():
                            res = compose(tensor(acow, id_dom), plugged)
                            c2, cw2, t2 = canon(actx + fctx, res, App(fterm, aterm))
                            if admissible(cw2):
                                add(k, c2, fty.res, cw2, t2)

    out: dict = {}
    goal = Atom(g.initial)
    for k in range(1, budget + 1):
        for (ctx, ty), cows in layers[k].items():
            if ctx == () and ty == goal:
                for cow, term in cows.items():
                    out.setdefault(cow, term)
    return out


def acg_language(
    g: StringAcg,
    budget: int,
    max_len: int | None = None,
    engine: str = "llg",
) -> set[Word]:
    """Words encoded at the initial type within the derivation budget.

    engine="llg" routes through the Theorem-1 translation and the linear
    logic grammar search; engine="native" enumerates abstract derivations
    directly (used for cross-checking at small budgets).
    """
    bad = validate_acg(g)
    if bad:
        raise ValueError("; ".join(bad))
    if engine == "native":
        judgements = acg_generate_native(g, budget, max_len=max_len)
        words = set()
        for cow in judgements:
            from .category import single_edge_word

            w = single_edge_word(cow)
            if w is not None and (max_len is None or len(w) <= max_len):
                words.add(w)
        return words
    if engine == "llg":
        from .llg import language as llg_language

        return llg_language(acg_to_llg(g), budget, max_len=max_len)
    raise ValueError(f"unknown engine {engine!r}")


def acg_to_llg(g: StringAcg):
    """Theorem-1 translation: types via A -o B = A^bot par B, axioms reused."""
    from .mll import Par, Pos, negate
    from .llg import Llg, LlgAxiom

    bad = validate_acg(g)
    if bad:
        raise ValueError("; ".join(bad))

    def trans(t: LinType):
        if isinstance(t, Atom):
            return Pos(t.name)
        return Par(negate(trans(t.arg)), trans(t.res))

    xi = acg_interpret(g)
    axioms = tuple(
        LlgAxiom(c, (trans(ty),), Cowordism.closed(interpret_type(xi, ty), xi.constant_bodies[c]))
        for c, ty in sorted(g.abstract.constants.items())
    )
    return Llg(
        atom_boundaries=dict(xi.atom_boundaries),
        alphabet=g.alphabet,
        lexicon=axioms,
        initial=g.initial,
    )
