"""Linear logic grammars: validation, bounded generation, language extraction.

A grammar is a finite set of axioms, each a sequent paired with a closed
cowordism onto the sequent's boundary, plus an initial positive literal whose
boundary has two points, one of them left.  A judgement is derivable when
some sequent-calculus derivation from the axioms interprets to its cowordism;
the language collects the single-edge labels of regular derived cowordisms at
the initial literal, discarding singular ones at exactly that step.

Engines
-------
general      bounded search over all rules (Id/Cut/Ex/Par/Times), sequents
             kept sorted with exchanges recorded in provenance but not billed
             to the budget; Id and cut formulas range over the subformula
             closure of the lexicon and initial literal.
cut_only     forward Cut saturation for connective-free lexicons.
compose      closure of the uncurried generators under composition in the
             category (the backpack-problem construction generates this way;
             sequent derivations are strictly tree-shaped and cannot route
             one axiom's two outputs into one consumer, so this engine is
             deliberately more permissive than the proof-theoretic ones).

Budgets count rule applications (leaves included); exchanges are free.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import Boundary, Word
from .category import (
    Cowordism,
    compose,
    identity,
    permute_cod_blocks,
    single_edge_word,
    tensor,
)
from .mll import (
    MllFormula,
    Neg,
    Par,
    Pos,
    Proof,
    Sequent,
    Times,
    conclusion,
    interpret_formula,
    interpret_proof,
    interpret_sequent,
    is_literal,
    negate,
    proof_size,
    subformulas,
)


@dataclass(frozen=True)
class LlgAxiom:
    name: str
    sequent: Sequent
    body: Cowordism  # closed, cod = interpreted sequent


@dataclass(frozen=True)
class Llg:
    atom_boundaries: Mapping[str, Boundary]
    alphabet: frozenset[str] | set[str]
    lexicon: tuple[LlgAxiom, ...]
    initial: str


@dataclass(frozen=True)
class DerivedJudgement:
    sequent: Sequent
    body: Cowordism
    provenance: Proof


def validate_llg(g: Llg) -> list[str]:
    problems = []
    s_bd = g.atom_boundaries.get(g.initial)
    if s_bd is None:
        problems.append(f"initial {g.initial} has no boundary")
    elif not (s_bd.size == 2 and len(s_bd.left) == 1):
        problems.append(f"initial boundary {s_bd} is not a two-point, one-left boundary")
    names = [ax.name for ax in g.lexicon]
    if len(names) != len(set(names)):
        problems.append("duplicate axiom names")
    for ax in g.lexicon:
        if ax.body.dom != Boundary.unit():
            problems.append(f"axiom {ax.name} is not all-outgoing")
        want = interpret_sequent(g.atom_boundaries, ax.sequent)
        if ax.body.cod != want:
            problems.append(
                f"axiom {ax.name} body boundary {ax.body.cod} != sequent boundary {want}"
            )
        bad = ax.body.body.validate()
        if bad:
            problems.append(f"axiom {ax.name}: {'; '.join(bad)}")
        foreign = set(ax.body.body.letters()) - set(g.alphabet)
        if foreign:
            problems.append(f"axiom {ax.name} uses letters outside the alphabet: {foreign}")
    return problems


def lexicon_sequents(g: Llg) -> dict[str, Sequent]:
    return {ax.name: ax.sequent for ax in g.lexicon}


def lexicon_bodies(g: Llg) -> dict[str, Cowordism]:
    return {ax.name: ax.body for ax in g.lexicon}


def is_flat(g: Llg) -> bool:
    return all(all(is_literal(a) for a in ax.sequent) for ax in g.lexicon)


def is_tensor_free(g: Llg) -> bool:
    def tensor_free(a: MllFormula) -> bool:
        if is_literal(a):
            return True
        if isinstance(a, Times):
            return False
        return tensor_free(a.left) and tensor_free(a.right)

    return all(all(tensor_free(a) for a in ax.sequent) for ax in g.lexicon)


def flatten_par(g: Llg) -> Llg:
    """Split every A par B in axiom sequents into A, B; bodies unchanged."""
    if not is_tensor_free(g):
        offenders = [
            ax.name
            for ax in g.lexicon
            if not all(
                is_literal(a) or not isinstance(a, Times)
                for f in ax.sequent
                for a in subformulas(f)
            )
        ]
        raise ValueError(f"lexicon contains tensor: {offenders or 'somewhere'}")

    def flat(a: MllFormula) -> tuple[MllFormula, ...]:
        if is_literal(a):
            return (a,)
        assert isinstance(a, Par)
        return flat(a.left) + flat(a.right)

    new_axioms = []
    for ax in g.lexicon:
        seq = tuple(itertools.chain.from_iterable(flat(a) for a in ax.sequent))
        new_axioms.append(LlgAxiom(ax.name, seq, ax.body))
    return Llg(g.atom_boundaries, g.alphabet, tuple(new_axioms), g.initial)


# ---------------------------------------------------------------------------
# Canonicalized judgements (sorted sequents, exchanges recorded but free)


def _formula_key(a: MllFormula) -> str:
    return repr(a)


def _boundary_fn(atoms: Mapping[str, Boundary]):
    cache: dict[MllFormula, Boundary] = {}

    def bd(a: MllFormula) -> Boundary:
        if a not in cache:
            cache[a] = interpret_formula(atoms, a)
        return cache[a]

    return bd


def _sorted_with_proof(
    bd, seq: Sequent, cow: Cowordism, proof: Proof
) -> tuple[Sequent, Cowordism, Proof]:
    """Bubble-sort the sequent, wrapping Ex nodes and rewiring the body."""
    seq = list(seq)
    blocks = [bd(a) for a in seq]
    changed = True
    while changed:
        changed = False
        for i in range(len(seq) - 1):
            if _formula_key(seq[i]) > _formula_key(seq[i + 1]):
                perm = list(range(len(seq)))
                perm[i], perm[i + 1] = perm[i + 1], perm[i]
                cow = permute_cod_blocks(cow, blocks, perm)
                proof = Proof("ex", (proof,), pos=i + 1)
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                blocks[i], blocks[i + 1] = blocks[i + 1], blocks[i]
                changed = True
    return tuple(seq), cow, proof


def _move_to_end(
    bd, seq: Sequent, cow: Cowordism, proof: Proof, k: int
) -> tuple[Sequent, Cowordism, Proof]:
    seq = list(seq)
    blocks = [bd(a) for a in seq]
    for i in range(k, len(seq) - 1):
        perm = list(range(len(seq)))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        cow = permute_cod_blocks(cow, blocks, perm)
        proof = Proof("ex", (proof,), pos=i + 1)
        seq[i], seq[i + 1] = seq[i + 1], seq[i]
        blocks[i], blocks[i + 1] = blocks[i + 1], blocks[i]
    return tuple(seq), cow, proof


def _move_to_front(
    bd, seq: Sequent, cow: Cowordism, proof: Proof, k: int
) -> tuple[Sequent, Cowordism, Proof]:
    seq = list(seq)
    blocks = [bd(a) for a in seq]
    for i in range(k, 0, -1):
        perm = list(range(len(seq)))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        cow = permute_cod_blocks(cow, blocks, perm)
        proof = Proof("ex", (proof,), pos=i)
        seq[i - 1], seq[i] = seq[i], seq[i - 1]
        blocks[i - 1], blocks[i] = blocks[i], blocks[i - 1]
    return tuple(seq), cow, proof


def _formula_universe(g: Llg) -> list[MllFormula]:
    """Subformula closure of the lexicon and initial literal, plus duals."""
    seen: set[MllFormula] = set()
    for ax in g.lexicon:
        for a in ax.sequent:
            seen |= subformulas(a)
    seen.add(Pos(g.initial))
    seen |= {negate(a) for a in set(seen)}
    return sorted(seen, key=_formula_key)


@dataclass
class _SearchLimits:
    max_seq_len: int | None = None
    max_letters: int | None = None
    regular_only: bool = False


def _admissible(j: tuple[Sequent, Cowordism], limits: _SearchLimits) -> bool:
    seq, cow = j
    if limits.max_seq_len is not None and len(seq) > limits.max_seq_len:
        return False
    if limits.regular_only and not cow.is_regular:
        return False
    if limits.max_letters is not None:
        if sum(1 for _ in cow.body.letters()) > limits.max_letters:
            return False
    return True


def generate(
    g: Llg,
    budget: int,
    engine: str = "auto",
    max_seq_len: int | None = None,
    max_letters: int | None = None,
    regular_only: bool = False,
    full: bool = False,
) -> list[DerivedJudgement]:
    """Derived judgements at the initial sequent |- S within the budget.

    With full=True, returns every derived judgement instead (sequents in
    canonical sorted order).  Soundness: every returned judgement's body is
    interpret_proof of its provenance; completeness: every judgement whose
    minimal derivation fits the budget (and the pruning limits) is found.
    """
    bad = validate_llg(g)
    if bad:
        raise ValueError("; ".join(bad))
    if engine == "auto":
        engine = "cut_only" if is_flat(g) else "general"
    if engine == "compose":
        raise ValueError("compose engine has no judgement form; use compose_closure")
    if engine == "cut_only" and not is_flat(g):
        raise ValueError("cut-only engine needs a connective-free lexicon")
    atoms = g.atom_boundaries
    bd = _boundary_fn(atoms)
    limits = _SearchLimits(max_seq_len, max_letters, regular_only)
    use_logical = engine == "general"

    layers: list[dict] = [dict() for _ in range(budget + 1)]
    best: dict = {}

    def add(k: int, seq: Sequent, cow: Cowordism, proof: Proof) -> None:
        if not _admissible((seq, cow), limits):
            return
        key = (seq, cow)
        if key in best and best[key] <= k:
            return
        best[key] = k
        layers[k].setdefault(seq, {})[cow] = proof

    if budget >= 1:
        for ax in g.lexicon:
            seq, cow, proof = _sorted_with_proof(
                bd, ax.sequent, ax.body, Proof("axiom", axiom_name=ax.name)
            )
            add(1, seq, cow, proof)
        if use_logical:
            for x in _formula_universe(g):
                proof = Proof("id", formula=x)
                xb = bd(x)
                cow = Cowordism.closed(
                    xb.dual().tensor(xb), identity(xb).body
                )
                seq, cow, proof = _sorted_with_proof(
                    bd, (negate(x), x), cow, proof
                )
                add(1, seq, cow, proof)

    universe = set(_formula_universe(g))

    for k in range(2, budget + 1):
        if use_logical:
            # par: join any two formulas (ordered pair of occurrences)
            for seq, cows in list(layers[k - 1].items()):
                n = len(seq)
                for i in range(n):
                    for j in range(n):
                        if i == j:
                            continue
                        joined = Par(seq[i], seq[j])
                        if joined not in universe:
                            continue
                        for cow, proof in cows.items():
                            s2, c2, p2 = _move_to_end(bd, seq, cow, proof, i)
                            j2 = j if j < i else j - 1  # i's removal shifts j
                            s2, c2, p2 = _move_to_end(bd, s2, c2, p2, j2)
                            # order is now (..., seq[i], seq[j])
                            p2 = Proof("par", (p2,))
                            s2 = s2[:-2] + (joined,)
                            c2 = Cowordism.closed(
                                interpret_sequent(atoms, s2), c2.body
                            )
                            s3, c3, p3 = _sorted_with_proof(bd, s2, c2, p2)
                            add(k, s3, c3, p3)
        # binary rules over size partitions
        for i in range(1, k - 1):
            j = k - 1 - i
            for lseq, lcows in layers[i].items():
                for rseq, rcows in layers[j].items():
                    # cut: X in left, X^bot in right
                    for li, x in enumerate(lseq):
                        if engine == "cut_only" and not is_literal(x):
                            continue
                        if use_logical and x not in universe:
                            continue
                        nx = negate(x)
                        for ri, y in enumerate(rseq):
                            if y != nx:
                                continue
                            x_bd = bd(x)
                            for lcow, lproof in lcows.items():
                                ls, lc, lp = _move_to_end(bd, lseq, lcow, lproof, li)
                                for rcow, rproof in rcows.items():
                                    rs, rc, rp = _move_to_front(
                                        bd, rseq, rcow, rproof, ri
                                    )
                                    glued = lc.body.tensor(rc.body).contract_block(
                                        lc.cod.size - x_bd.size, x_bd.dual()
                                    )
                                    seq2 = ls[:-1] + rs[1:]
                                    cow2 = Cowordism.closed(
                                        interpret_sequent(atoms, seq2), glued
                                    )
                                    p2 = Proof("cut", (lp, rp), formula=x)
                                    s3, c3, p3 = _sorted_with_proof(
                                        bd, seq2, cow2, p2
                                    )
                                    add(k, s3, c3, p3)
                    if not use_logical:
                        continue
                    # times: X last in left, Y first in right
                    for li, x in enumerate(lseq):
                        for ri, y in enumerate(rseq):
                            joined = Times(x, y)
                            if joined not in universe:
                                continue
                            for lcow, lproof in lcows.items():
                                ls, lc, lp = _move_to_end(bd, lseq, lcow, lproof, li)
                                for rcow, rproof in rcows.items():
                                    rs, rc, rp = _move_to_front(
                                        bd, rseq, rcow, rproof, ri
                                    )
                                    t = tensor(lc, rc)
                                    seq2 = ls[:-1] + (joined,) + rs[1:]
                                    cow2 = Cowordism.closed(
                                        interpret_sequent(atoms, seq2), t.body
                                    )
                                    p2 = Proof("times", (lp, rp))
                                    s3, c3, p3 = _sorted_with_proof(
                                        bd, seq2, cow2, p2
                                    )
                                    add(k, s3, c3, p3)

    goal = (Pos(g.initial),)
    out = []
    seen = set()
    for k in range(1, budget + 1):
        for seq, cows in layers[k].items():
            if not full and seq != goal:
                continue
            for cow, proof in cows.items():
                if (seq, cow) in seen:
                    continue
                seen.add((seq, cow))
                out.append(DerivedJudgement(seq, cow, proof))
    return out


def generate_cut_only(
    g: Llg,
    budget: int,
    max_seq_len: int | None = None,
    max_letters: int | None = None,
    regular_only: bool = False,
    full: bool = False,
) -> list[DerivedJudgement]:
    """Cut saturation over a connective-free lexicon."""
    return generate(
        g,
        budget,
        engine="cut_only",
        max_seq_len=max_seq_len,
        max_letters=max_letters,
        regular_only=regular_only,
        full=full,
    )


def recheck(g: Llg, j: DerivedJudgement) -> bool:
    """Re-interpret the provenance tree and compare against the stored body."""
    seqs = lexicon_sequents(g)
    if conclusion(j.provenance, seqs) != j.sequent:
        return False
    got = interpret_proof(g.atom_boundaries, j.provenance, lexicon_bodies(g), seqs)
    return got == j.body


# ---------------------------------------------------------------------------
# Composition-closure generation (the backpack-problem construction)


@dataclass(frozen=True)
class Generator:
    """An uncurried building block: a cowordism with literal-typed ports."""

    name: str
    dom_literals: tuple[str, ...]
    cod_literals: tuple[str, ...]
    cow: Cowordism


def compose_closure(
    generators: Iterable[Generator],
    goal_literal: str,
    budget: int,
    max_letters: int | None = None,
    max_slots: int = 8,
) -> set[Word]:
    """Words reachable by composing generators freely in the category.

    States are closed cowordisms onto tensors of literal boundaries, kept as
    sorted multisets of independent slots (every generator here wires each
    outgoing pair to at most one ingoing pair, so slots never entangle).  A
    move consumes one generator, plugging any choice of open slots into its
    inputs.  Words are read off single-slot states at the goal literal.
    """
    gens = list(generators)
    # state = sorted tuple of open slots (literal, word)
    frontier: set[tuple] = {()}
    seen: set[tuple] = {()}
    results: set[Word] = set()
    for _ in range(budget):
        new: set[tuple] = set()
        for state in frontier:
            for gen in gens:
                need = gen.dom_literals

                def choices(idx: int, remaining: tuple, used: list):
                    if idx == len(need):
                        yield tuple(used), remaining
                        return
                    picked = set()
                    for pos in range(len(remaining)):
                        slot = remaining[pos]
                        if slot[0] == need[idx] and slot not in picked:
                            picked.add(slot)
                            yield from choices(
                                idx + 1,
                                remaining[:pos] + remaining[pos + 1 :],
                                used + [slot],
                            )

                for used, rest in choices(0, state, []):
                    plugged = _apply_generator(gen, used)
                    if plugged is None:
                        continue
                    nxt = tuple(sorted(rest + plugged))
                    if len(nxt) > max_slots:
                        continue
                    if max_letters is not None and sum(
                        len(w) for _, w in nxt
                    ) > max_letters:
                        continue
                    if len(nxt) == 1 and nxt[0][0] == goal_literal:
                        results.add(nxt[0][1])
                    if nxt not in seen:
                        seen.add(nxt)
                        new.add(nxt)
        frontier = new
        if not new:
            break
    return results


def _apply_generator(gen: Generator, inputs: list[tuple[str, Word]]):
    """Compose slot values into the generator, returning its output slots."""
    from .core import Multiword

    value = identity(Boundary.unit())
    pos = 0
    for lit, w in inputs:
        prefix, _ = gen.cow.dom.split(pos + 2)
        _, slot_bd = prefix.split(pos)
        (l,) = slot_bd.left
        (r,) = slot_bd.right
        m = Multiword.make(slot_bd, [(l, w, r)])
        value = tensor(value, Cowordism.closed(slot_bd, m))
        pos += 2
    out = compose(value, gen.cow)
    if not out.is_regular:
        return None
    words = []
    for i, lit in enumerate(gen.cod_literals):
        pts = {2 * i + 1, 2 * i + 2}
        found = None
        for s, w, t in out.body.edges:
            if s in pts and t in pts:
                found = w
        if found is None:
            return None  # outputs entangled across slots; outside this engine
        words.append((lit, found))
    return tuple(words)


# ---------------------------------------------------------------------------
# Language and membership


def language(
    g: Llg,
    budget: int,
    engine: str = "auto",
    max_len: int | None = None,
    max_seq_len: int | None = None,
) -> set[Word]:
    """Labels of regular single-edge initial-type cowordisms within budget.

    Singular results are discarded at exactly this step.  A max_len prune is
    sound for the pruned queries because letters only accumulate.
    """
    judgements = generate(
        g,
        budget,
        engine=engine,
        max_letters=max_len,
        max_seq_len=max_seq_len,
        regular_only=max_len is not None,
    )
    words = set()
    for j in judgements:
        w = single_edge_word(j.body)
        if w is not None and (max_len is None or len(w) <= max_len):
            words.add(w)
    return words


@dataclass(frozen=True)
class MemberResult:
    answer: bool
    budget: int
    provenance: Proof | None = None

    def __bool__(self) -> bool:
        return self.answer


def member(g: Llg, w: Word, budget: int, engine: str = "auto") -> MemberResult:
    """Bounded membership: yes with provenance, or no-at-budget."""
    judgements = generate(
        g,
        budget,
        engine=engine,
        max_letters=len(w),
        regular_only=True,
    )
    for j in judgements:
        if single_edge_word(j.body) == w:
            return MemberResult(True, budget, j.provenance)
    return MemberResult(False, budget, None)
