import random

import pytest

from cowordisms.core import (
    Boundary,
    ContractionError,
    Multiword,
    edge,
    least_rotation,
    shift,
    word,
)
from util import random_boundary, random_multiword


def B(size, *left):
    return Boundary.of(size, *left)


class TestBoundary:
    def test_tensor_direct_instance(self):
        assert B(2, 2).tensor(B(2, 2)) == B(4, 2, 4)

    def test_tensor_unit_laws(self):
        y = B(3, 1, 3)
        u = Boundary.unit()
        assert u.tensor(y) == y
        assert y.tensor(u) == y

    def test_tensor_paper_eq1(self):
        # |X|=4, X_l={3}; |Y|=4, Y_l={2}
        assert B(4, 3).tensor(B(4, 2)) == B(8, 3, 6)

    def test_dual_two_points(self):
        # X_r={1}: dual left = |X|+1-1 = 2... for X=(2,{2}); (2,{2}) is self-dual
        assert B(2, 2).dual() == B(2, 2)
        # hand-applied: X=(2,{1}): X_r={2}, dual left = {2+1-2} = {1}
        assert B(2, 1).dual() == B(2, 1)
        assert B(3, 1).dual() == B(3, 1, 2)  # X_r={2,3} maps to {4-2, 4-3}

    def test_dual_empty(self):
        assert Boundary.unit().dual() == Boundary.unit()

    def test_dual_involution_randomized(self):
        rng = random.Random(7)
        for _ in range(200):
            x = random_boundary(rng)
            assert x.dual().dual() == x

    def test_dual_antihomomorphism(self):
        rng = random.Random(8)
        for _ in range(200):
            x, y = random_boundary(rng), random_boundary(rng)
            assert x.tensor(y).dual() == y.dual().tensor(x.dual())

    def test_subboundary(self):
        assert B(4, 1, 3).is_subboundary(2, B(2, 1))
        x = B(5, 2, 4)
        assert x.is_subboundary(0, x)
        assert not B(2, 1).is_subboundary(1, B(2, 1))  # overflows

    def test_subboundary_polarity_mismatch(self):
        assert not B(4, 1, 3).is_subboundary(1, B(2, 1))

    def test_shift(self):
        assert shift(2, 2, 1) == 1
        assert shift(2, 2, 2) == 4
        assert shift(3, 4, 5) == 9


class TestCyclicWords:
    def test_least_rotation(self):
        assert least_rotation(word("b a")) == word("a b")
        assert least_rotation(word("c a b")) == word("a b c")
        assert least_rotation(()) == ()

    def test_rotations_identified(self):
        w = word("b a c a")
        for i in range(4):
            assert least_rotation(w[i:] + w[:i]) == least_rotation(w)


class TestMultiword:
    def test_tensor_shifts_edges(self):
        m = Multiword.make(B(2, 1), [edge(1, "a", 2)])
        n = Multiword.make(B(2, 1), [edge(1, "b", 2)])
        t = m.tensor(n)
        assert t.edges == {edge(1, "a", 2), edge(3, "b", 4)}
        assert t.boundary == B(4, 1, 3)

    def test_tensor_unit(self):
        m = Multiword.make(B(2, 1), [edge(1, "a", 2)])
        u = Multiword.make(Boundary.unit())
        assert u.tensor(m) == m
        assert m.tensor(u) == m

    def test_tensor_cycle_multiplicity(self):
        m = Multiword.make(Boundary.unit(), cycles=[word("u")])
        t = m.tensor(m)
        assert t.cycles == (word("u"), word("u"))

    def test_tensor_associativity(self):
        rng = random.Random(9)
        for _ in range(100):
            a = random_multiword(rng, random_boundary(rng, 4))
            b = random_multiword(rng, random_boundary(rng, 4))
            c = random_multiword(rng, random_boundary(rng, 4))
            assert a.tensor(b).tensor(c) == a.tensor(b.tensor(c))

    def test_contract_fuses_labels(self):
        # DERIVED by hand from the case split: [1,ab,2],[3,c,4] glued at (2,3)
        m = Multiword.make(B(4, 1, 3), [edge(1, "a b", 2), edge(3, "c", 4)])
        got = m.contract(2)
        assert got == Multiword.make(B(2, 1), [edge(1, "a b c", 2)])

    def test_contract_joined_pair_closes_cycle(self):
        m = Multiword.make(B(2, 2), [edge(2, "w", 1)])
        got = m.contract(1)
        assert got.boundary == Boundary.unit()
        assert got.edges == frozenset()
        assert got.cycles == (word("w"),)

    def test_contract_epsilon_neutral(self):
        m = Multiword.make(B(4, 1, 3), [edge(1, "w", 2), edge(3, "", 4)])
        assert m.contract(2) == Multiword.make(B(2, 1), [edge(1, "w", 2)])

    def test_contract_rejects_same_polarity(self):
        m = Multiword.make(B(4, 1, 2), [edge(1, "a", 3), edge(2, "b", 4)])
        with pytest.raises(ContractionError):
            m.contract(1)

    def test_contract_rejects_out_of_range(self):
        m = Multiword.make(B(2, 1), [edge(1, "a", 2)])
        with pytest.raises(ContractionError):
            m.contract(2)

    def test_contract_block_unit_is_noop(self):
        m = Multiword.make(B(2, 1), [edge(1, "a", 2)])
        assert m.contract_block(0, Boundary.unit()) == m

    def test_contract_block_single_equals_elementary(self):
        rng = random.Random(10)
        for _ in range(100):
            # build a boundary holding a Y^bot(x)Y block at offset i, |Y| = 1
            y = random_boundary(rng, 1)
            if y.size != 1:
                continue
            pre = random_boundary(rng, 2)
            post = random_boundary(rng, 2)
            full = pre.tensor(y.dual().tensor(y)).tensor(post)
            if len(full.left) != len(full.right):
                continue
            m = random_multiword(rng, full)
            assert m.contract_block(pre.size, y) == m.contract(pre.size + 1)

    def test_contract_preserves_invariants(self):
        rng = random.Random(11)
        done = 0
        while done < 200:
            m = random_multiword(rng, random_boundary(rng, 6))
            opts = [
                n
                for n in range(1, m.boundary.size)
                if m.boundary.is_left(n) != m.boundary.is_left(n + 1)
            ]
            if not opts:
                continue
            got = m.contract(rng.choice(opts))
            assert got.validate() == []
            done += 1

    def test_disjoint_contractions_commute(self):
        rng = random.Random(12)
        done = 0
        while done < 200:
            m = random_multiword(rng, random_boundary(rng, 6))
            opts = [
                n
                for n in range(1, m.boundary.size)
                if m.boundary.is_left(n) != m.boundary.is_left(n + 1)
            ]
            pairs = [
                (a, b) for a in opts for b in opts if b >= a + 2
            ]
            if not pairs:
                continue
            a, b = rng.choice(pairs)
            # contracting at b first keeps a's index; contracting at a shifts b by 2
            assert m.contract(b).contract(a) == m.contract(a).contract(b - 2)
            done += 1

    def test_validate_reports(self):
        m = Multiword(B(3, 1), frozenset({edge(1, "a", 2), edge(1, "b", 3)}))
        msgs = m.validate()
        assert any("degree 2" in s for s in msgs)
        m2 = Multiword(B(2, 1), frozenset({edge(2, "a", 1)}))
        msgs2 = m2.validate()
        assert any("not a left endpoint" in s for s in msgs2)

    def test_make_rejects_invalid(self):
        with pytest.raises(ValueError):
            Multiword.make(B(2, 2), [edge(1, "a", 2)])


class TestFig2Contraction:
    def test_jim_goes_out_with_ann_a_lot(self):
        # The six-point picture: edges Jim, "goes out with", Ann, "a lot" on an
        # 8-point boundary; gluing the three marked pairs yields one edge.
        m = Multiword.make(
            B(8, 1, 3, 5, 7),
            [
                edge(1, "Jim", 2),
                edge(3, "goes out with", 4),
                edge(5, "Ann", 6),
                edge(7, "a lot", 8),
            ],
        )
        m = m.contract(2)  # Jim + goes out with
        m = m.contract(2)  # ... + Ann
        m = m.contract(2)  # ... + a lot
        assert m == Multiword.make(B(2, 1), [edge(1, "Jim goes out with Ann a lot", 2)])
