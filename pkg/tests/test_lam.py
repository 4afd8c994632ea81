import random

import pytest

from cowordisms.core import Boundary, Multiword, edge, word
from cowordisms.category import identity
from cowordisms.lam import (
    App,
    Arrow,
    Atom,
    Const,
    Deriv,
    Lam,
    Signature,
    TypeError_,
    Var,
    alpha_eq,
    beta_normalize,
    check_derivation,
    infer,
    interpret_derivation,
    interpret_type,
    is_linear,
)
from cowordisms.acg import STR, rho, string_signature, unrho, xi0


def B(size, *left):
    return Boundary.of(size, *left)


AB = string_signature({"a", "b", "c"})
XI = xi0({"a", "b", "c"})


class TestTypes:
    def test_atom_boundary(self):
        assert interpret_type(XI, Atom("O")) == B(1)

    def test_str_boundary(self):
        assert interpret_type(XI, STR) == B(2, 1)

    def test_second_order_boundary(self):
        assert interpret_type(XI, Arrow(STR, STR)) == B(4, 1, 3)

    def test_unmapped_atom(self):
        with pytest.raises(KeyError):
            interpret_type(XI, Atom("P"))


class TestLinearity:
    def test_linear(self):
        assert is_linear(Lam("x", Var("x")))
        assert not is_linear(Lam("x", Lam("y", Var("x"))))
        assert not is_linear(Lam("x", App(Var("x"), Var("x"))))


class TestNormalize:
    def test_identity_redex(self):
        assert beta_normalize(App(Lam("x", Var("x")), Const("c"))) == Const("c")

    def test_nested(self):
        t = App(Lam("f", Lam("x", App(Var("f"), Var("x")))), Lam("y", Var("y")))
        assert alpha_eq(beta_normalize(t), Lam("z", Var("z")))

    def test_rejects_nonlinear(self):
        with pytest.raises(ValueError):
            beta_normalize(Lam("x", Lam("y", Var("x"))))


class TestCheckAndInfer:
    def test_id_node_ok(self):
        d = Deriv("id", (("x", STR),), Var("x"), STR)
        assert check_derivation(AB, d) == []

    def test_lambda_identity(self):
        d = infer(AB, Lam("x", Var("x")), expected=Arrow(STR, STR))
        assert check_derivation(AB, d) == []
        assert d.type == Arrow(STR, STR)

    def test_infer_rho(self):
        d = infer(AB, rho(word("a b")))
        assert d.type == STR
        assert check_derivation(AB, d) == []

    def test_nonlinear_fails(self):
        with pytest.raises(TypeError_):
            infer(AB, Lam("x", Lam("y", Var("x"))))

    def test_wrong_argument_type_fails(self):
        # a : O -o O applied to another letter's *type mismatch*: a b  is fine
        # (b : str is not an O), so applying a to a makes the argument str
        with pytest.raises(TypeError_):
            infer(AB, App(Const("a"), Const("b")))

    def test_unknown_constant_fails(self):
        with pytest.raises(TypeError_):
            infer(AB, Const("zz"))

    def test_overlapping_contexts_rejected(self):
        arg = Deriv("id", (("x", Atom("O")),), Var("x"), Atom("O"))
        fn = Deriv("id", (("x", STR),), Var("x"), STR)
        bad = Deriv(
            "imp_e",
            arg.context + fn.context,
            App(fn.term, arg.term),
            Atom("O"),
            (arg, fn),
        )
        assert any("imp_e" in p or "duplicate" in p for p in check_derivation(AB, bad))


class TestRho:
    def test_empty(self):
        assert alpha_eq(rho(()), Lam("x", Var("x")))

    def test_unrho_inverse(self):
        rng = random.Random(41)
        for _ in range(50):
            w = tuple(rng.choice("abc") for _ in range(rng.randrange(5)))
            assert unrho(AB, rho(w)) == w

    def test_unrho_normalizes_first(self):
        t = App(Lam("f", Var("f")), Lam("x", App(Const("a"), Var("x"))))
        assert unrho(AB, t) == ("a",)

    def test_unrho_eta_short_constant(self):
        assert unrho(AB, Const("a")) == ("a",)

    def test_unrho_rejects_non_string(self):
        with pytest.raises(TypeError_):
            unrho(AB, Lam("x", Lam("y", App(Var("x"), Var("y")))))


class TestInterpretation:
    def test_id_judgement_is_identity(self):
        d = Deriv("id", (("x", STR),), Var("x"), STR)
        got = interpret_derivation(XI, d)
        assert got == identity(B(2, 1))

    def test_rho_word_is_single_edge(self):
        rng = random.Random(42)
        for _ in range(60):
            w = tuple(rng.choice("abc") for _ in range(rng.randrange(5)))
            d = infer(AB, rho(w), expected=STR)
            got = interpret_derivation(XI, d)
            assert got.body == Multiword.make(B(2, 1), [(1, w, 2)])

    def test_letter_body(self):
        d = infer(AB, Const("a"))
        got = interpret_derivation(XI, d)
        assert got.body == Multiword.make(B(2, 1), [edge(1, "a", 2)])


class TestBetaInvariance:
    def test_interpretation_invariant_under_beta(self):
        rng = random.Random(43)
        sig = AB
        for _ in range(100):
            w1 = tuple(rng.choice("abc") for _ in range(rng.randrange(3)))
            w2 = tuple(rng.choice("abc") for _ in range(rng.randrange(3)))
            # (\f. \x. f (w1-chain x)) applied to rho(w2): a real redex at str
            x = Var("x")
            chain = x
            for c in w1:
                chain = App(Const(c), chain)
            t = App(Lam("f", Lam("x", App(Var("f"), chain))), rho(w2))
            d1 = infer(sig, t, expected=STR)
            d2 = infer(sig, beta_normalize(t), expected=STR)
            assert interpret_derivation(XI, d1) == interpret_derivation(XI, d2)
