"""The compact closed category of word cobordisms.

A cowordism X -> Y is a multiword over the boundary X^bot (x) Y.  Composition
glues outgoing to incoming boundaries by iterated contraction; tensor places
diagrams side by side; duality is a cyclic permutation of boundary vertices;
currying (the compact structure Hom(Y(x)X, Z) = Hom(X, Y^bot(x)Z)) is a pure
re-typing because boundary tensor is strictly associative.

Equality of cowordisms is literal equality of (dom, cod, edge set, cycle
multiset), and all the categorical laws hold on the nose in this
representation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Boundary,
    CompositionError,
    Multiword,
    Word,
)


@dataclass(frozen=True)
class Cowordism:
    dom: Boundary
    cod: Boundary
    body: Multiword

    @staticmethod
    def make(dom: Boundary, cod: Boundary, body: Multiword) -> "Cowordism":
        expected = dom.dual().tensor(cod)
        if body.boundary != expected:
            raise ValueError(
                f"body boundary {body.boundary} does not match dom^bot(x)cod {expected}"
            )
        return Cowordism(dom, cod, body)

    @staticmethod
    def closed(cod: Boundary, body: Multiword) -> "Cowordism":
        """A cowordism 1 -> cod (all wires outgoing)."""
        return Cowordism.make(Boundary.unit(), cod, body)

    @property
    def is_regular(self) -> bool:
        return self.body.is_regular

    def __repr__(self) -> str:
        return f"Cowordism({self.dom} -> {self.cod}; {self.body})"


def identity(x: Boundary) -> Cowordism:
    n = x.size
    edges = set()
    for i in x.left:
        edges.add((n + i, (), n - i + 1))
    for i in x.right:
        edges.add((n - i + 1, (), n + i))
    return Cowordism(x, x, Multiword.make(x.dual().tensor(x), edges))


def compose(sigma: Cowordism, tau: Cowordism) -> Cowordism:
    """Diagram-order composition: sigma: X -> Y, then tau: Y -> Z."""
    if sigma.cod != tau.dom:
        raise CompositionError(f"cannot glue cod {sigma.cod} to dom {tau.dom}")
    y = sigma.cod
    glued = sigma.body.tensor(tau.body).contract_block(sigma.dom.size, y.dual())
    return Cowordism(sigma.dom, tau.cod, glued)


def tensor(sigma: Cowordism, tau: Cowordism) -> Cowordism:
    """sigma (x) tau : X (x) Z -> Y (x) T."""
    nx, ny = sigma.dom.size, sigma.cod.size
    nz = tau.dom.size
    edges = set()
    for s, w, t in sigma.body.edges:
        edges.add((s + nz, w, t + nz))
    for s, w, t in tau.body.edges:
        s2 = s if s <= nz else s + nx + ny
        t2 = t if t <= nz else t + nx + ny
        edges.add((s2, w, t2))
    dom = sigma.dom.tensor(tau.dom)
    cod = sigma.cod.tensor(tau.cod)
    body = Multiword(
        dom.dual().tensor(cod),
        frozenset(edges),
        tuple(sorted(sigma.body.cycles + tau.body.cycles)),
    )
    return Cowordism(dom, cod, body)


def tensor_all(*cows: Cowordism) -> Cowordism:
    acc = identity(Boundary.unit())
    for c in cows:
        acc = tensor(acc, c)
    return acc


def symmetry(x: Boundary, y: Boundary) -> Cowordism:
    """The crossing X (x) Y -> Y (x) X, all wires epsilon-labeled."""
    nx, ny = x.size, y.size
    edges = set()
    for i in y.right:
        edges.add((ny - i + 1, (), nx + ny + i))
    for i in x.right:
        edges.add((ny + nx - i + 1, (), nx + 2 * ny + i))
    for i in y.left:
        edges.add((nx + ny + i, (), ny - i + 1))
    for i in x.left:
        edges.add((nx + 2 * ny + i, (), ny + nx - i + 1))
    dom = x.tensor(y)
    cod = y.tensor(x)
    return Cowordism(dom, cod, Multiword.make(dom.dual().tensor(cod), edges))


def dual(sigma: Cowordism) -> Cowordism:
    """Contravariant dual Y^bot -> X^bot by a cyclic vertex permutation."""
    nx, ny = sigma.dom.size, sigma.cod.size

    def phi(i: int) -> int:
        return i + ny if i <= nx else i - nx

    dom = sigma.cod.dual()
    cod = sigma.dom.dual()
    body = Multiword(
        dom.dual().tensor(cod),
        frozenset((phi(s), w, phi(t)) for s, w, t in sigma.body.edges),
        sigma.body.cycles,
    )
    return Cowordism(dom, cod, body)


def curry(sigma: Cowordism, split: int) -> Cowordism:
    """Hom(Y(x)X, Z) -> Hom(X, Y^bot(x)Z) where split = |Y| endpoints of dom.

    Bends the leading Y wires of the input around to the output; the body is
    untouched because (Y(x)X)^bot (x) Z and X^bot (x) (Y^bot(x)Z) are the same
    boundary.
    """
    y, x = sigma.dom.split(split)
    return Cowordism(x, y.dual().tensor(sigma.cod), sigma.body)


def uncurry(sigma: Cowordism, split: int) -> Cowordism:
    """Hom(X, Y^bot(x)Z) -> Hom(Y(x)X, Z); inverse of curry, split = |Y|."""
    ydual, z = sigma.cod.split(split)
    return Cowordism(ydual.dual().tensor(sigma.dom), z, sigma.body)


def curry_all(sigma: Cowordism) -> Cowordism:
    """Bend every input: Hom(X, Y) -> Hom(1, X^bot(x)Y)."""
    return curry(sigma, sigma.dom.size)


def name_cup(x: Boundary) -> Cowordism:
    """eta: 1 -> X^bot (x) X (bent identity wire)."""
    return curry(identity(x), x.size)


def coname_cap(x: Boundary) -> Cowordism:
    """epsilon: X (x) X^bot -> 1."""
    return uncurry(identity(x.dual()), x.size)


def _block_offsets(sizes: list[int]) -> list[int]:
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    return offsets


def permute_dom_blocks(
    sigma: Cowordism, blocks: list[Boundary], perm: list[int]
) -> Cowordism:
    """Reorder dom tensor factors; new dom = blocks[perm[0]] (x) blocks[perm[1]] ...

    Pure index relabeling, equal to precomposing with the symmetry cowordism
    realizing the permutation.
    """
    sizes = [b.size for b in blocks]
    n = sum(sizes)
    if n != sigma.dom.size or len(perm) != len(blocks):
        raise ValueError("block sizes do not tile the dom")
    old_off = _block_offsets(sizes)
    new_sizes = [sizes[b] for b in perm]
    new_off = _block_offsets(new_sizes)
    where = {b: k for k, b in enumerate(perm)}  # old block -> new slot
    dom_map = {}
    for b in range(len(blocks)):
        for i in range(1, sizes[b] + 1):
            dom_map[old_off[b] + i] = new_off[where[b]] + i
    coord = {}
    for p_old, p_new in dom_map.items():
        coord[n + 1 - p_old] = n + 1 - p_new
    for c in range(n + 1, sigma.body.boundary.size + 1):
        coord[c] = c
    new_dom = Boundary.unit()
    for b in perm:
        new_dom = new_dom.tensor(blocks[b])
    body = sigma.body.relabel(coord, new_dom.dual().tensor(sigma.cod))
    return Cowordism(new_dom, sigma.cod, body)


def permute_cod_blocks(
    sigma: Cowordism, blocks: list[Boundary], perm: list[int]
) -> Cowordism:
    """Reorder cod tensor factors; equal to postcomposing with a symmetry."""
    sizes = [b.size for b in blocks]
    m = sum(sizes)
    if m != sigma.cod.size or len(perm) != len(blocks):
        raise ValueError("block sizes do not tile the cod")
    n = sigma.dom.size
    old_off = _block_offsets(sizes)
    new_sizes = [sizes[b] for b in perm]
    new_off = _block_offsets(new_sizes)
    where = {b: k for k, b in enumerate(perm)}
    coord = {c: c for c in range(1, n + 1)}
    for b in range(len(blocks)):
        for i in range(1, sizes[b] + 1):
            coord[n + old_off[b] + i] = n + new_off[where[b]] + i
    new_cod = Boundary.unit()
    for b in perm:
        new_cod = new_cod.tensor(blocks[b])
    body = sigma.body.relabel(coord, sigma.dom.dual().tensor(new_cod))
    return Cowordism(sigma.dom, new_cod, body)


def single_edge_word(sigma: Cowordism) -> Word | None:
    """The label of a regular single-edge closed cowordism, else None."""
    if not sigma.is_regular or sigma.dom.size != 0 or len(sigma.body.edges) != 1:
        return None
    ((_, w, _),) = sigma.body.edges
    return w


# ---------------------------------------------------------------------------
# Rendering


def multiword_text(m: Multiword) -> str:
    lines = [f"boundary {m.boundary.size} left={','.join(map(str, sorted(m.boundary.left)))}"]
    for s, w, t in m.sorted_edges():
        lines.append(f"{s} -> {t} : {' '.join(w) if w else 'eps'}")
    for c in m.cycles:
        lines.append(f"cycle : {' '.join(c) if c else 'eps'}")
    return "\n".join(lines)


def cowordism_text(sigma: Cowordism) -> str:
    head = [
        f"dom {sigma.dom.size} left={','.join(map(str, sorted(sigma.dom.left)))}",
        f"cod {sigma.cod.size} left={','.join(map(str, sorted(sigma.cod.left)))}",
    ]
    return "\n".join(head) + "\n" + multiword_text(sigma.body)


def cowordism_dot(sigma: Cowordism, name: str = "cowordism") -> str:
    """DOT export: dom endpoints ranked left, cod endpoints right (Fig-3 style)."""
    nx = sigma.dom.size
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=point];"]
    dom_ids = [f"d{i}" for i in range(1, nx + 1)]
    cod_ids = [f"c{i}" for i in range(1, sigma.cod.size + 1)]
    if dom_ids:
        lines.append("  { rank=source; " + "; ".join(dom_ids) + "; }")
    if cod_ids:
        lines.append("  { rank=sink; " + "; ".join(cod_ids) + "; }")

    def vid(i: int) -> str:
        # body coordinate i: dom side stores X^bot point i, i.e. dom point nx+1-i
        return f"d{nx + 1 - i}" if i <= nx else f"c{i - nx}"

    for s, w, t in sigma.body.sorted_edges():
        label = " ".join(w) if w else "&epsilon;"
        lines.append(f'  {vid(s)} -> {vid(t)} [label="{label}"];')
    for k, c in enumerate(sigma.body.cycles):
        label = " ".join(c) if c else "&epsilon;"
        lines.append(f'  cycle{k} [shape=circle, label="{label}"];')
    lines.append("}")
    return "\n".join(lines)


def render(sigma: Cowordism, fmt: str = "text") -> str:
    if fmt == "text":
        return cowordism_text(sigma)
    if fmt == "dot":
        return cowordism_dot(sigma)
    raise ValueError(f"unknown render format {fmt!r}")
