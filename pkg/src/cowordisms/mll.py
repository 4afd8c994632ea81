"""Multiplicative linear logic: formulas, sequents, proofs, and their semantics.

Negation is defined, not a connective, and flips tensor/cotensor factors.
Proof trees carry explicit rule parameters (exchange position, cut formula)
so checking and interpretation are deterministic.  A proof of |- Gamma
interprets to a closed cowordism onto the sequent's boundary: identity bent
for Id, boundary gluing for Cut, symmetry for Ex, juxtaposition for Times,
and nothing at all for Par, which only reparenthesizes the type.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import Boundary
from .category import (
    Cowordism,
    compose,
    curry,
    identity,
    symmetry,
    tensor,
)


@dataclass(frozen=True)
class Pos:
    name: str

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Neg:
    name: str

    def __repr__(self) -> str:
        return f"~{self.name}"


@dataclass(frozen=True)
class Times:
    left: "MllFormula"
    right: "MllFormula"

    def __repr__(self) -> str:
        return f"({self.left} * {self.right})"


@dataclass(frozen=True)
class Par:
    left: "MllFormula"
    right: "MllFormula"

    def __repr__(self) -> str:
        return f"({self.left} | {self.right})"


MllFormula = Pos | Neg | Times | Par

Sequent = tuple[MllFormula, ...]


def negate(a: MllFormula) -> MllFormula:
    if isinstance(a, Pos):
        return Neg(a.name)
    if isinstance(a, Neg):
        return Pos(a.name)
    if isinstance(a, Times):
        return Par(negate(a.right), negate(a.left))
    return Times(negate(a.right), negate(a.left))


def is_literal(a: MllFormula) -> bool:
    return isinstance(a, (Pos, Neg))


def formula_atoms(a: MllFormula) -> set[str]:
    if isinstance(a, (Pos, Neg)):
        return {a.name}
    return formula_atoms(a.left) | formula_atoms(a.right)


def subformulas(a: MllFormula) -> set[MllFormula]:
    if isinstance(a, (Pos, Neg)):
        return {a}
    return {a} | subformulas(a.left) | subformulas(a.right)


def interpret_formula(atoms: Mapping[str, Boundary], a: MllFormula) -> Boundary:
    if isinstance(a, Pos):
        try:
            return atoms[a.name]
        except KeyError:
            raise KeyError(f"atom {a.name} has no boundary assigned") from None
    if isinstance(a, Neg):
        return interpret_formula(atoms, Pos(a.name)).dual()
    return interpret_formula(atoms, a.left).tensor(interpret_formula(atoms, a.right))


def interpret_sequent(atoms: Mapping[str, Boundary], gamma: Sequent) -> Boundary:
    b = Boundary.unit()
    for a in gamma:
        b = b.tensor(interpret_formula(atoms, a))
    return b


# ---------------------------------------------------------------------------
# Proof trees


@dataclass(frozen=True)
class Proof:
    """A sequent-calculus proof node.

    rule: "id" (formula=X, concludes |- X^bot, X), "cut" (formula=X, first
    premise ends in X, second starts with X^bot), "ex" (pos=1-based index of
    the left formula of the swapped pair), "par" (joins the last two
    formulas), "times" (X last in the first premise, Y first in the second),
    or "axiom" (name into an LLG lexicon).
    """

    rule: str
    premises: tuple["Proof", ...] = ()
    formula: MllFormula | None = None
    pos: int = -1
    axiom_name: str = ""


def proof_size(p: Proof, count_exchange: bool = False) -> int:
    """Number of rule applications; exchanges are free unless requested."""
    own = 1 if (p.rule != "ex" or count_exchange) else 0
    return own + sum(proof_size(q, count_exchange) for q in p.premises)


def conclusion(p: Proof, lexicon: Mapping[str, Sequent]) -> Sequent:
    """The sequent a proof concludes; raises ProofError on malformed trees."""
    if p.rule == "id":
        assert p.formula is not None
        return (negate(p.formula), p.formula)
    if p.rule == "axiom":
        try:
            return lexicon[p.axiom_name]
        except KeyError:
            raise ProofError(f"unknown axiom {p.axiom_name}") from None
    if p.rule == "cut":
        left, right = (conclusion(q, lexicon) for q in p.premises)
        if not left or left[-1] != p.formula:
            raise ProofError(f"cut formula {p.formula} not last in {left}")
        if not right or right[0] != negate(p.formula):
            raise ProofError(f"cut dual {negate(p.formula)} not first in {right}")
        return left[:-1] + right[1:]
    if p.rule == "ex":
        (gamma,) = (conclusion(q, lexicon) for q in p.premises)
        i = p.pos
        if not 1 <= i <= len(gamma) - 1:
            raise ProofError(f"exchange position {i} out of range")
        g = list(gamma)
        g[i - 1], g[i] = g[i], g[i - 1]
        return tuple(g)
    if p.rule == "par":
        (gamma,) = (conclusion(q, lexicon) for q in p.premises)
        if len(gamma) < 2:
            raise ProofError("par needs two formulas")
        return gamma[:-2] + (Par(gamma[-2], gamma[-1]),)
    if p.rule == "times":
        left, right = (conclusion(q, lexicon) for q in p.premises)
        if not left or not right:
            raise ProofError("times premises must be nonempty")
        return left[:-1] + (Times(left[-1], right[0]),) + right[1:]
    raise ProofError(f"unknown rule {p.rule}")


class ProofError(ValueError):
    pass


def check_proof(
    p: Proof,
    lexicon: Mapping[str, Sequent],
    expected: Sequent | None = None,
) -> list[str]:
    """Validate each node instantiates its rule; [] when the proof is good."""
    try:
        got = conclusion(p, lexicon)
    except ProofError as e:
        return [str(e)]
    problems = []
    for q in p.premises:
        problems.extend(check_proof(q, lexicon))
    if expected is not None and got != expected and not problems:
        problems.append(f"concludes {got}, expected {expected}")
    return problems


def interpret_proof(
    atoms: Mapping[str, Boundary],
    p: Proof,
    lexicon_bodies: Mapping[str, Cowordism],
    lexicon_sequents: Mapping[str, Sequent],
) -> Cowordism:
    """The closed cowordism of a proof of |- Gamma."""
    if p.rule == "id":
        assert p.formula is not None
        x = interpret_formula(atoms, p.formula)
        return curry(identity(x), x.size)
    if p.rule == "axiom":
        return lexicon_bodies[p.axiom_name]
    if p.rule == "cut":
        l, r = p.premises
        sl = interpret_proof(atoms, l, lexicon_bodies, lexicon_sequents)
        sr = interpret_proof(atoms, r, lexicon_bodies, lexicon_sequents)
        assert p.formula is not None
        x = interpret_formula(atoms, p.formula)
        gamma_size = sl.cod.size - x.size
        glued = sl.body.tensor(sr.body).contract_block(gamma_size, x.dual())
        gamma, _ = sl.cod.split(gamma_size)
        _, delta = sr.cod.split(x.size)
        return Cowordism.closed(gamma.tensor(delta), glued)
    if p.rule == "ex":
        (q,) = p.premises
        s = interpret_proof(atoms, q, lexicon_bodies, lexicon_sequents)
        gamma = conclusion(q, lexicon_sequents)
        i = p.pos
        pre = interpret_sequent(atoms, gamma[: i - 1])
        x = interpret_formula(atoms, gamma[i - 1])
        y = interpret_formula(atoms, gamma[i])
        post = interpret_sequent(atoms, gamma[i + 1 :])
        mover = tensor(tensor(identity(pre), symmetry(x, y)), identity(post))
        return compose(s, mover)
    if p.rule == "par":
        (q,) = p.premises
        s = interpret_proof(atoms, q, lexicon_bodies, lexicon_sequents)
        new = conclusion(p, lexicon_sequents)
        return Cowordism.closed(interpret_sequent(atoms, new), s.body)
    if p.rule == "times":
        l, r = p.premises
        sl = interpret_proof(atoms, l, lexicon_bodies, lexicon_sequents)
        sr = interpret_proof(atoms, r, lexicon_bodies, lexicon_sequents)
        t = tensor(sl, sr)
        new = conclusion(p, lexicon_sequents)
        return Cowordism.closed(interpret_sequent(atoms, new), t.body)
    raise ProofError(f"unknown rule {p.rule}")
