"""Boundaries, words, cyclic words, multiwords, and contraction.

A boundary is a finite linearly ordered set of endpoints, each of left or
right polarity.  A multiword over an alphabet is a word-labeled perfect
matching on a boundary (every edge runs from a left endpoint to a right
endpoint) together with a multiset of cyclic words.  Gluing neighboring
endpoints of opposite polarity (contraction) concatenates edge labels and is
the primitive everything else is built from.

All values are immutable; indices are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Word = tuple[str, ...]

EPS: Word = ()


def word(text: str) -> Word:
    """Word from space-separated tokens; '' and 'eps' denote the empty word."""
    if text in ("", "eps"):
        return ()
    return tuple(text.split())


def word_str(w: Word, sep: str = " ") -> str:
    return sep.join(w)


class ContractionError(ValueError):
    """Contraction attempted out of range or on a same-polarity pair."""


class CompositionError(ValueError):
    """Cowordism composition with mismatched boundaries."""


def shift(k: int, s: int, i: int) -> int:
    """Shifted embedding: i if i < k, else i + s."""
    return i if i < k else i + s


def least_rotation(w: Word) -> Word:
    """Canonical representative of a cyclic word: lexicographically least rotation."""
    if len(w) <= 1:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


@dataclass(frozen=True)
class Boundary:
    """A linearly ordered endpoint set {1..size} with a left-polarity subset."""

    size: int
    left: frozenset[int]

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValueError(f"negative boundary size {self.size}")
        bad = [i for i in self.left if not 1 <= i <= self.size]
        if bad:
            raise ValueError(f"left endpoints {bad} outside 1..{self.size}")

    @staticmethod
    def of(size: int, *left: int) -> "Boundary":
        return Boundary(size, frozenset(left))

    @staticmethod
    def unit() -> "Boundary":
        return Boundary(0, frozenset())

    @property
    def right(self) -> frozenset[int]:
        return frozenset(range(1, self.size + 1)) - self.left

    def is_left(self, i: int) -> bool:
        return i in self.left

    def tensor(self, other: "Boundary") -> "Boundary":
        return Boundary(
            self.size + other.size,
            self.left | frozenset(self.size + i for i in other.left),
        )

    def dual(self) -> "Boundary":
        # (X^bot)_l = |X| + 1 - X_r
        return Boundary(self.size, frozenset(self.size + 1 - i for i in self.right))

    def is_subboundary(self, i: int, other: "Boundary") -> bool:
        """True iff i+other is a subboundary of self (polarity-respecting slice)."""
        if i < 0 or i + other.size > self.size:
            return False
        return all((i + j in self.left) == (j in other.left) for j in range(1, other.size + 1))

    def split(self, k: int) -> tuple["Boundary", "Boundary"]:
        """Decompose as prefix (size k) tensor suffix; inverse of tensor."""
        if not 0 <= k <= self.size:
            raise ValueError(f"split point {k} outside 0..{self.size}")
        pre = Boundary(k, frozenset(i for i in self.left if i <= k))
        post = Boundary(self.size - k, frozenset(i - k for i in self.left if i > k))
        return pre, post

    def __repr__(self) -> str:
        return f"Boundary({self.size},{{{','.join(map(str, sorted(self.left)))}}})"


Edge = tuple[int, Word, int]


def edge(src: int, label: str | Word, dst: int) -> Edge:
    if isinstance(label, str):
        label = word(label)
    return (src, label, dst)


@dataclass(frozen=True)
class Multiword:
    """A word-labeled perfect matching (regular part) plus cyclic words (singular part).

    Edges run from a left endpoint to a right endpoint.  The cyclic-word
    multiset is stored canonically: each word as its least rotation, the
    multiset as a sorted tuple, so equality of multiwords is structural.
    """

    boundary: Boundary
    edges: frozenset[Edge]
    cycles: tuple[Word, ...] = ()

    @staticmethod
    def make(
        boundary: Boundary,
        edges: Iterable[Edge] = (),
        cycles: Iterable[Word] = (),
    ) -> "Multiword":
        m = Multiword(
            boundary,
            frozenset(edges),
            tuple(sorted(least_rotation(c) for c in cycles)),
        )
        bad = m.validate()
        if bad:
            raise ValueError("invalid multiword: " + "; ".join(bad))
        return m

    @property
    def is_regular(self) -> bool:
        return not self.cycles

    def validate(self) -> list[str]:
        """Perfect-matching and polarity checks; [] when well formed."""
        problems: list[str] = []
        degree = {i: 0 for i in range(1, self.boundary.size + 1)}
        for src, _, dst in self.edges:
            for v in (src, dst):
                if v not in degree:
                    problems.append(f"vertex {v} outside boundary")
                else:
                    degree[v] += 1
            if src in degree and src not in self.boundary.left:
                problems.append(f"edge source {src} is not a left endpoint")
            if dst in degree and dst in self.boundary.left:
                problems.append(f"edge target {dst} is not a right endpoint")
        for v in sorted(degree):
            if degree[v] != 1:
                problems.append(f"vertex {v} has degree {degree[v]}")
        for c in self.cycles:
            if least_rotation(c) != c:
                problems.append(f"cycle {c} not in canonical rotation")
        return problems

    def tensor(self, other: "Multiword") -> "Multiword":
        n = self.boundary.size
        shifted = frozenset((s + n, w, t + n) for s, w, t in other.edges)
        return Multiword(
            self.boundary.tensor(other.boundary),
            self.edges | shifted,
            tuple(sorted(self.cycles + other.cycles)),
        )

    def relabel(self, mapping: dict[int, int], new_boundary: Boundary) -> "Multiword":
        """Rewire endpoints through a bijection; labels and cycles untouched."""
        return Multiword(
            new_boundary,
            frozenset((mapping[s], w, mapping[t]) for s, w, t in self.edges),
            self.cycles,
        )

    def contract(self, n: int) -> "Multiword":
        """Elementary contraction gluing endpoints n and n+1 (opposite polarity).

        If the glued pair is joined by an edge, that edge closes into a cyclic
        word; otherwise the two incident edges fuse, concatenating labels from
        the left endpoint to the right.
        """
        bd = self.boundary
        if not 1 <= n < bd.size:
            raise ContractionError(f"contraction index {n} outside 1..{bd.size - 1}")
        a_left = bd.is_left(n)
        b_left = bd.is_left(n + 1)
        if a_left == b_left:
            raise ContractionError(f"endpoints {n},{n + 1} have the same polarity")
        y, x = (n, n + 1) if a_left else (n + 1, n)  # y left, x right

        new_bd = Boundary(
            bd.size - 2,
            frozenset(i if i < n else i - 2 for i in bd.left if i not in (n, n + 1)),
        )

        def pull(i: int) -> int:
            return i if i < n else i - 2

        joined = None
        into_x = None
        out_of_y = None
        rest = []
        for e in self.edges:
            s, w, t = e
            if s == y and t == x:
                joined = e
            elif t == x:
                into_x = e
            elif s == y:
                out_of_y = e
            else:
                rest.append((pull(s), w, pull(t)))

        if joined is not None:
            cycles = tuple(sorted(self.cycles + (least_rotation(joined[1]),)))
            return Multiword(new_bd, frozenset(rest), cycles)

        assert into_x is not None and out_of_y is not None
        fused = (pull(into_x[0]), into_x[1] + out_of_y[1], pull(out_of_y[2]))
        return Multiword(new_bd, frozenset(rest) | {fused}, self.cycles)

    def contract_block(self, i: int, inner: Boundary) -> "Multiword":
        """Iterated contraction along the subboundary i + inner^bot (x) inner."""
        block = inner.dual().tensor(inner)
        if not self.boundary.is_subboundary(i, block):
            raise ContractionError(
                f"{i}+{inner.dual()}(x){inner} is not a subboundary of {self.boundary}"
            )
        m = self
        for k in range(inner.size, 0, -1):
            m = m.contract(i + k)
        return m

    def letters(self) -> Iterator[str]:
        for _, w, _ in self.edges:
            yield from w
        for c in self.cycles:
            yield from c

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges, key=lambda e: e[0])

    def __repr__(self) -> str:
        es = ", ".join(f"[{s},{' '.join(w) or 'eps'},{t}]" for s, w, t in self.sorted_edges())
        cs = "".join(f" +[{' '.join(c) or 'eps'}]" for c in self.cycles)
        return f"Multiword({self.boundary}: {es}{cs})"


def empty_multiword() -> Multiword:
    return Multiword.make(Boundary.unit())
