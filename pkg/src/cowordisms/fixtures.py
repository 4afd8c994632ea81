"""Built-in example grammars: the relative-clause ACG, the wawb MCFG, and the
subset-sum LLG, constructed programmatically (the same grammars ship as
.grammar files for the CLI)."""

from __future__ import annotations

from .core import Boundary, Multiword, edge
from .category import Cowordism
from .lam import App, Arrow, Atom, Const, Lam, Signature, Var
from .acg import LexiconHom, StringAcg, STR
from .mll import Neg, Pos
from .llg import Generator, Llg, LlgAxiom
from .mcfg import Mcfg, Production, ref, tok

NP = Atom("NP")
S = Atom("S")


def love_acg(initial: str = "S") -> StringAcg:
    """The five-word relative-clause grammar (John/Mary/loves/madly/whom).

    Lexicon terms chain applications earliest-letter-innermost so that the
    interpreted string reads left to right; e.g. LOVES maps to
    \\x.\\y.\\z. x (loves (y z)), whose plugged string is "<y> loves <x>".
    """
    abstract = Signature(
        frozenset({"NP", "S"}),
        {
            "JOHN": NP,
            "MARY": NP,
            "LOVES": Arrow(NP, Arrow(NP, S)),
            "MADLY": Arrow(Arrow(NP, S), Arrow(NP, S)),
            "WHOM": Arrow(Arrow(NP, S), Arrow(NP, NP)),
        },
    )
    f, x, y, z = Var("f"), Var("x"), Var("y"), Var("z")
    loves = Lam("x", Lam("y", Lam("z", App(x, App(Const("loves"), App(y, z))))))
    madly = Lam("f", Lam("x", Lam("z", App(Const("madly"), App(App(f, x), z)))))
    whom = Lam(
        "f",
        Lam(
            "x",
            Lam("z", App(App(f, Lam("y", y)), App(Const("whom"), App(x, z)))),
        ),
    )
    lexicon = LexiconHom(
        type_map={"NP": STR, "S": STR},
        term_map={
            "JOHN": Const("John"),
            "MARY": Const("Mary"),
            "LOVES": loves,
            "MADLY": madly,
            "WHOM": whom,
        },
    )
    return StringAcg(
        abstract=abstract,
        alphabet=frozenset({"John", "Mary", "loves", "madly", "whom"}),
        lexicon=lexicon,
        initial=initial,
    )


# Golden cowordism bodies transcribed from the lexicon pictures (NP and S both
# interpret to the two-point boundary with left endpoint 1).

LOVE_GOLDEN_BODIES = {
    "JOHN": Multiword.make(Boundary.of(2, 1), [edge(1, "John", 2)]),
    "MARY": Multiword.make(Boundary.of(2, 1), [edge(1, "Mary", 2)]),
    "LOVES": Multiword.make(
        Boundary.of(6, 1, 3, 5),
        [edge(1, "", 6), edge(3, "loves", 2), edge(5, "", 4)],
    ),
    "MADLY": Multiword.make(
        Boundary.of(8, 1, 3, 5, 7),
        [edge(1, "madly", 8), edge(3, "", 6), edge(5, "", 4), edge(7, "", 2)],
    ),
    "WHOM": Multiword.make(
        Boundary.of(8, 1, 3, 5, 7),
        [edge(1, "", 8), edge(3, "", 4), edge(5, "whom", 2), edge(7, "", 6)],
    ),
}


# ---------------------------------------------------------------------------
# The wawb MCFG: six productions generating {w a^n w b^n | w in {a,b}*, n>=0}


def wawb_mcfg() -> Mcfg:
    return Mcfg(
        nonterminals={"P": 2, "Q": 2, "S": 1},
        alphabet=frozenset({"a", "b"}),
        productions=(
            Production("P", ((), ()), ()),  # (1) |- P(eps, eps)
            Production("Q", ((), ()), ()),  # (2) |- Q(eps, eps)
            Production(  # (3) P(x,y) |- P(xa, yb)
                "P", ((ref(0, 0), tok("a")), (ref(0, 1), tok("b"))), ("P",)
            ),
            Production(  # (4) Q(z,t) |- Q(za, ta)
                "Q", ((ref(0, 0), tok("a")), (ref(0, 1), tok("a"))), ("Q",)
            ),
            Production(  # (5) Q(z,t) |- Q(zb, tb)
                "Q", ((ref(0, 0), tok("b")), (ref(0, 1), tok("b"))), ("Q",)
            ),
            Production(  # (6) Q(z,t), P(x,y) |- S(zxty)
                "S", ((ref(0, 0), ref(1, 0), ref(0, 1), ref(1, 1)),), ("Q", "P")
            ),
        ),
        initial="S",
    )


def wawb_closed_form(bound: int) -> set[tuple[str, ...]]:
    """Independent enumeration of {w a^n w b^n} up to a length bound."""
    import itertools as it

    out = set()
    for wl in range(bound + 1):
        for w in it.product("ab", repeat=wl):
            for n in range(bound + 1):
                full = w + ("a",) * n + w + ("b",) * n
                if len(full) <= bound:
                    out.add(full)
    return out


# Golden transcriptions of the six production cowordisms (bodies of the
# all-outgoing axioms; predicate argument i sits at points 2i-1, 2i).

WAWB_GOLDEN_BODIES = {
    "p1": Multiword.make(Boundary.of(4, 2, 4), [edge(2, "", 1), edge(4, "", 3)]),
    "p2": Multiword.make(Boundary.of(4, 2, 4), [edge(2, "", 1), edge(4, "", 3)]),
    "p3": Multiword.make(
        Boundary.of(8, 2, 4, 6, 8),
        [edge(6, "", 3), edge(4, "a", 5), edge(8, "", 1), edge(2, "b", 7)],
    ),
    "p4": Multiword.make(
        Boundary.of(8, 2, 4, 6, 8),
        [edge(6, "", 3), edge(4, "a", 5), edge(8, "", 1), edge(2, "a", 7)],
    ),
    "p5": Multiword.make(
        Boundary.of(8, 2, 4, 6, 8),
        [edge(6, "", 3), edge(4, "b", 5), edge(8, "", 1), edge(2, "b", 7)],
    ),
    "p6": Multiword.make(
        Boundary.of(10, 2, 4, 6, 8, 10),
        [
            edge(10, "", 7),
            edge(8, "", 3),
            edge(4, "", 5),
            edge(6, "", 1),
            edge(2, "", 9),
        ],
    ),
}


# ---------------------------------------------------------------------------
# The subset-sum LLG (two-point boundaries with left endpoint 2 throughout)


def _pt2() -> Boundary:
    return Boundary.of(2, 2)


def _mk(size: int, *edges_) -> Multiword:
    return Multiword.make(
        Boundary(size, frozenset(range(2, size + 1, 2))), list(edges_)
    )


def ssp_generators() -> dict[str, Generator]:
    """The backpack cowordisms in uncurried form (signs prefix their slot)."""
    s2 = _pt2()
    ss = s2.tensor(s2)

    def gen(name, dom_lits, cod_lits, body):
        dom = Boundary.unit()
        for _ in dom_lits:
            dom = dom.tensor(s2)
        cod = Boundary.unit()
        for _ in cod_lits:
            cod = cod.tensor(s2)
        return Generator(
            name, tuple(dom_lits), tuple(cod_lits), Cowordism.make(dom, cod, body)
        )

    return {
        "close": gen("close", (), ("S",), _mk(2, edge(2, "•", 1))),
        "close_H": gen("close_H", (), ("H",), _mk(2, edge(2, "•", 1))),
        "cons": gen(
            "cons",
            ("S", "S"),
            ("S",),
            _mk(6, edge(6, "", 1), edge(2, "", 3), edge(4, "", 5)),
        ),
        "open_H": gen(
            "open_H",
            ("H", "S"),
            ("S",),
            _mk(6, edge(6, "", 1), edge(2, "", 3), edge(4, "", 5)),
        ),
        "push": gen(
            "push",
            ("S", "S"),
            ("S", "S"),
            _mk(8, edge(6, "+", 3), edge(4, "", 5), edge(8, "-", 1), edge(2, "", 7)),
        ),
        "push_plus": gen(
            "push_plus", ("H",), ("H",), _mk(4, edge(4, "+", 1), edge(2, "", 3))
        ),
        "push_minus": gen(
            "push_minus", ("H",), ("H",), _mk(4, edge(4, "-", 1), edge(2, "", 3))
        ),
    }


def ssp_llg() -> Llg:
    """The generators curried into all-outgoing axioms (|- duals-then-outputs)."""
    gens = ssp_generators()
    axioms = []
    for name in sorted(gens):
        g = gens[name]
        seq = tuple(Neg(l) for l in reversed(g.dom_literals)) + tuple(
            Pos(l) for l in g.cod_literals
        )
        from .category import curry_all

        axioms.append(LlgAxiom(name, seq, curry_all(g.cow)))
    return Llg(
        atom_boundaries={"S": _pt2(), "H": _pt2()},
        alphabet=frozenset({"+", "-", "•"}),
        lexicon=tuple(axioms),
        initial="S",
    )


def ssp_oracle(w: tuple[str, ...]) -> bool:
    """Independent membership check for the composition-closure language.

    A word must parse as one or more bullet-terminated blocks of signs, and
    some nonempty subset of blocks must admit a pairing of each + with a -
    in a different block (Hall's condition: the subset sums to zero and no
    block carries more than half of the subset's signs).
    """
    if not w or w[-1] != "•":
        return False
    blocks: list[tuple[int, int]] = []  # (#plus, #minus)
    plus = minus = 0
    for c in w:
        if c == "+":
            plus += 1
        elif c == "-":
            minus += 1
        elif c == "•":
            blocks.append((plus, minus))
            plus = minus = 0
        else:
            return False
    import itertools as it

    for r in range(1, len(blocks) + 1):
        for combo in it.combinations(range(len(blocks)), r):
            p = sum(blocks[i][0] for i in combo)
            m = sum(blocks[i][1] for i in combo)
            if p != m:
                continue
            if all(blocks[i][0] + blocks[i][1] <= p for i in combo):
                return True
    return False


def irreducible_zero_sum_lists(max_len: int) -> set[tuple[str, ...]]:
    """All bullet-terminated lists of single-signed (or empty) blocks that sum
    to zero, up to the length bound."""
    out: set[tuple[str, ...]] = set()

    def rec(word: tuple[str, ...], total: int) -> None:
        if word and total == 0:
            out.add(word)
        if len(word) >= max_len:
            return
        budget = max_len - len(word) - 1
        rec(word + ("•",), total)  # empty block
        for sign, d in (("+", 1), ("-", -1)):
            for k in range(1, budget + 1):
                rec(word + (sign,) * k + ("•",), total + d * k)

    rec((), 0)
    return out
