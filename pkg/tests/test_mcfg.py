import random

import pytest

from cowordisms.core import Boundary, Multiword, edge, word
from cowordisms.category import Cowordism, compose, tensor
from cowordisms.mll import Neg, Pos
from cowordisms.llg import language as llg_language, validate_llg
from cowordisms.mcfg import (
    Mcfg,
    Production,
    llg_to_mcfg,
    mcfg_derive,
    mcfg_language,
    mcfg_to_llg,
    pattern_of,
    possible_patterns,
    predicate_boundary,
    prod_of_cowordism,
    production_cowordism,
    ref,
    tok,
    tuple_multiword,
    validate_mcfg,
)
from cowordisms.fixtures import (
    WAWB_GOLDEN_BODIES,
    ssp_llg,
    wawb_closed_form,
    wawb_mcfg,
)


def B(size, *left):
    return Boundary.of(size, *left)


class TestValidate:
    def test_wawb_ok(self):
        assert validate_mcfg(wawb_mcfg()) == []

    def test_variable_linearity(self):
        g = Mcfg(
            {"S": 1, "P": 1},
            frozenset({"a"}),
            (Production("S", ((ref(0, 0), ref(0, 0)),), ("P",)),),
            "S",
        )
        assert validate_mcfg(g) != []

    def test_initial_unary(self):
        g = Mcfg({"S": 2}, frozenset({"a"}), (), "S")
        assert validate_mcfg(g) != []


class TestDerive:
    def test_hand_run_facts(self):
        facts = mcfg_derive(wawb_mcfg(), 2)
        assert ("P", ((), ())) in facts
        assert ("P", (("a",), ("b",))) in facts
        assert ("Q", (("a", "b"), ("a", "b"))) in facts
        assert ("S", (("a", "b"),)) in facts
        assert ("S", (("a", "a"),)) in facts  # via rule (4) then (6), w=a, n=0

    def test_no_base_production_empty(self):
        g = Mcfg(
            {"S": 1},
            frozenset({"a"}),
            (Production("S", ((ref(0, 0), tok("a")),), ("S",)),),
            "S",
        )
        assert mcfg_derive(g, 3) == set()

    def test_language_bound_two(self):
        assert mcfg_language(wawb_mcfg(), 2) == {
            (),
            ("a", "b"),
            ("a", "a"),
            ("b", "b"),
        }

    def test_language_matches_closed_form(self):
        for bound in (2, 3, 4):
            assert mcfg_language(wawb_mcfg(), bound) == wawb_closed_form(bound)

    def test_abab_at_four(self):
        assert ("a", "b", "a", "b") in mcfg_language(wawb_mcfg(), 4)

    def test_monotone_in_bound(self):
        assert mcfg_language(wawb_mcfg(), 2) <= mcfg_language(wawb_mcfg(), 4)


class TestTranslationToLlg:
    def test_translated_grammar_validates(self):
        llg = mcfg_to_llg(wawb_mcfg())
        assert validate_llg(llg) == []
        assert len(llg.lexicon) == 6

    def test_golden_bodies(self):
        llg = mcfg_to_llg(wawb_mcfg())
        for ax in llg.lexicon:
            assert ax.body.body == WAWB_GOLDEN_BODIES[ax.name], ax.name

    def test_axiom_sequents(self):
        llg = mcfg_to_llg(wawb_mcfg())
        seqs = {ax.name: ax.sequent for ax in llg.lexicon}
        assert seqs["p1"] == (Pos("P"),)
        assert seqs["p3"] == (Neg("P"), Pos("P"))
        assert seqs["p6"] == (Neg("P"), Neg("Q"), Pos("S"))

    def test_production_cowordism_substitution(self):
        # plugging P(u, v) into rule (3) yields P(ua, vb)
        g = wawb_mcfg()
        rule3 = g.productions[2]
        sigma = production_cowordism(g, rule3)
        val = Cowordism.closed(
            predicate_boundary(2), tuple_multiword([word("u"), word("v")])
        )
        out = compose(val, sigma)
        assert out.body == tuple_multiword([word("u a"), word("v b")])

    def test_rule6_interleaving(self):
        g = wawb_mcfg()
        rule6 = g.productions[5]
        sigma = production_cowordism(g, rule6)
        q = Cowordism.closed(
            predicate_boundary(2), tuple_multiword([word("z"), word("t")])
        )
        p = Cowordism.closed(
            predicate_boundary(2), tuple_multiword([word("x"), word("y")])
        )
        out = compose(tensor(q, p), sigma)
        assert out.body == tuple_multiword([word("z x t y")])

    def test_language_agreement_with_llg_engine(self):
        g = wawb_mcfg()
        llg = mcfg_to_llg(g)
        want = {w for w in mcfg_language(g, 2)}
        got = llg_language(llg, budget=9, max_len=2)
        assert got == want


class TestPatterns:
    def test_pattern_of_erases_labels(self):
        m = Multiword.make(B(4, 1, 3), [edge(1, "a b", 2), edge(3, "c", 4)])
        m2 = Multiword.make(B(4, 1, 3), [edge(1, "x", 2), edge(3, "", 4)])
        assert pattern_of(m) == pattern_of(m2)
        assert pattern_of(m).edges == ((1, 2), (3, 4))

    def test_pattern_rejects_singular(self):
        m = Multiword.make(Boundary.unit(), cycles=[word("w")])
        with pytest.raises(ValueError):
            pattern_of(m)

    def test_possible_pattern_counts(self):
        assert len(possible_patterns(B(2, 2))) == 1
        assert len(possible_patterns(B(4, 2, 4))) == 2
        assert possible_patterns(B(2, 1, 2)) == []  # unbalanced

    def test_wawb_axiom_pattern(self):
        body = WAWB_GOLDEN_BODIES["p1"]
        assert pattern_of(body).edges == ((2, 1), (4, 3))


class TestProdOfCowordism:
    def test_identity_copy_production(self):
        from cowordisms.category import identity

        bd = B(2, 2)
        sigma = identity(bd)
        prods = prod_of_cowordism(sigma, [("B", bd)], "A")
        assert len(prods) == 1
        (p,) = prods
        assert p.body == ("B@p2.1",)
        assert p.head_args == ((("v", 0, 0),),)

    def test_nullary_base(self):
        body = WAWB_GOLDEN_BODIES["p1"]
        sigma = Cowordism.closed(body.boundary, body)
        prods = prod_of_cowordism(sigma, [], "P")
        assert len(prods) == 1
        (p,) = prods
        assert p.body == ()
        assert p.head_args == ((), ())


class TestRoundTrip:
    def test_wawb_roundtrip_language(self):
        g = wawb_mcfg()
        back = llg_to_mcfg(mcfg_to_llg(g))
        assert validate_mcfg(back) == []
        for bound in (2, 3, 4):
            assert mcfg_language(back, bound) == mcfg_language(g, bound)

    def test_ssp_translation_agrees_with_llg_engine(self):
        g = ssp_llg()
        m = llg_to_mcfg(g)
        assert validate_mcfg(m) == []
        got = mcfg_language(m, 4)
        want = llg_language(g, budget=11, max_len=4)
        assert got == want

    def test_single_axiom_grammar(self):
        from cowordisms.llg import Llg, LlgAxiom

        bd = B(2, 2)
        body = Cowordism.closed(bd, Multiword.make(bd, [edge(2, "a", 1)]))
        g = Llg({"S": bd}, frozenset({"a"}), (LlgAxiom("w", (Pos("S"),), body),), "S")
        m = llg_to_mcfg(g)
        assert mcfg_language(m, 3) == {("a",)}

    def test_random_mcfg_roundtrips(self):
        rng = random.Random(60)
        done = 0
        while done < 20:
            g = random_mcfg(rng)
            if validate_mcfg(g):
                continue
            base = mcfg_language(g, 3)
            back = llg_to_mcfg(mcfg_to_llg(g))
            assert mcfg_language(back, 3) == base, repr(g)
            done += 1


def random_mcfg(rng: random.Random) -> Mcfg:
    nts = {}
    names = ["S", "A", "B"][: rng.randint(1, 3)]
    for n in names:
        nts[n] = 1 if n == "S" else rng.randint(1, 2)
    alphabet = frozenset({"a", "b"})
    prods = []
    for _ in range(rng.randint(1, 6)):
        head = rng.choice(names)
        n_prem = rng.randint(0, min(2, len(names)))
        body = tuple(rng.choice(names) for _ in range(n_prem))
        slots = [(j, i) for j, b in enumerate(body) for i in range(nts[b])]
        rng.shuffle(slots)
        k = nts[head]
        args = [[] for _ in range(k)]
        for s in slots:
            args[rng.randrange(k)].append(ref(*s))
        for a in args:
            for pos in range(rng.randint(0, 2)):
                a.insert(rng.randint(0, len(a)), tok(rng.choice("ab")))
        prods.append(Production(head, tuple(tuple(a) for a in args), body))
    return Mcfg(nts, alphabet, tuple(prods), "S")
