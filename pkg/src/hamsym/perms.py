"""Permutations and permutation groups over 0..n-1.

PermGroup keeps its generators and builds a base and strong generating set
lazily with a deterministic Schreier-Sims chain; order and membership come
from the chain, and the input generators are re-sifted afterwards as a
verification pass.
"""

from __future__ import annotations

import json

from . import config
from .errors import DegreeMismatchError, NotAPermutationError
from .graphs import edge


class Perm:
    """A permutation stored as its image tuple: img[i] is the image of i."""

    __slots__ = ("img",)

    def __init__(self, img):
        img = tuple(img)
        if sorted(img) != list(range(len(img))):
            raise NotAPermutationError(f"not a permutation of 0..{len(img) - 1}")
        self.img = img

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n, cycles):
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(img)

    @property
    def degree(self):
        return len(self.img)

    def __call__(self, x):
        return self.img[x]

    def is_identity(self):
        return all(i == v for i, v in enumerate(self.img))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.img == other.img

    def __hash__(self):
        return hash(self.img)

    def __repr__(self):
        return f"Perm({list(self.img)})"

    def to_json(self):
        return json.dumps(list(self.img))


def compose(a, b):
    """a after b: (a*b)(x) = a(b(x))."""
    if a.degree != b.degree:
        raise DegreeMismatchError(f"degrees {a.degree} != {b.degree}")
    ai = a.img
    return Perm(tuple(ai[x] for x in b.img))


def inverse(a):
    inv = [0] * a.degree
    for i, v in enumerate(a.img):
        inv[v] = i
    return Perm(inv)


def apply_to_edge_set(a, edges):
    """Image of an edge set, endpoints re-normalized to u < v."""
    img = a.img
    return frozenset(edge(img[u], img[v]) for u, v in edges)


class _Level:
    __slots__ = ("base", "gens", "transversal")

    def __init__(self, base):
        self.base = base
        self.gens = []
        self.transversal = {}


class PermGroup:
    """Group given by generators, with a lazily built stabilizer chain."""

    def __init__(self, degree, gens):
        self.degree = degree
        gens = [g for g in gens if not g.is_identity()]
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatchError("generator degree mismatch")
        self.gens = list(gens)
        self._chain = None

    def _ensure_chain(self):
        if self._chain is None:
            chain = _schreier_sims(self.degree, self.gens)
            for g in self.gens:
                if not _sift(chain, g, 0)[0].is_identity():
                    raise AssertionError("BSGS verification failed: generator did not sift")
            self._chain = chain
        return self._chain

    def order(self):
        order = 1
        for level in self._ensure_chain():
            order *= len(level.transversal)
        return order

    def contains(self, perm):
        if perm.degree != self.degree:
            raise DegreeMismatchError("degree mismatch in membership test")
        residue, _ = _sift(self._ensure_chain(), perm, 0)
        return residue.is_identity()

    def orbit(self, point):
        orb = {point}
        frontier = [point]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.gens:
                    y = g(x)
                    if y not in orb:
                        orb.add(y)
                        nxt.append(y)
            frontier = nxt
        return orb

    def orbits(self):
        seen = set()
        out = []
        for v in range(self.degree):
            if v in seen:
                continue
            orb = self.orbit(v)
            seen |= orb
            out.append(sorted(orb))
        return out

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, gens={len(self.gens)})"


def _rebuild_orbit(level, degree):
    level.transversal.clear()
    level.transversal[level.base] = Perm.identity(degree)
    frontier = [level.base]
    while frontier:
        nxt = []
        for p in frontier:
            tp = level.transversal[p]
            for g in level.gens:
                q = g(p)
                if q not in level.transversal:
                    level.transversal[q] = compose(g, tp)
                    nxt.append(q)
        frontier = nxt


def _sift(chain, h, start):
    """Sift h through levels start..; returns (residue, stop level)."""
    for i in range(start, len(chain)):
        level = chain[i]
        p = h(level.base)
        rep = level.transversal.get(p)
        if rep is None:
            return h, i
        h = compose(inverse(rep), h)
    return h, len(chain)


def _schreier_sims(degree, gens):
    """Deterministic Schreier-Sims, verifying levels deepest-first.

    Invariant while running: all levels strictly deeper than the level
    currently being verified have had a full Schreier scan with no new
    strong generators.
    """
    gens = [g for g in gens if not g.is_identity()]
    if not gens:
        return []
    chain = []

    def new_level(moved):
        base = min(x for x in range(degree) if moved(x))
        chain.append(_Level(base))

    def add_gen(h, origin, stop):
        # h fixes the bases of levels 0..stop-1 by construction of sifting;
        # adjoin it to every level below the Schreier generator's origin so
        # that each level's generators stay inside the shallower stabilizers.
        if stop == len(chain):
            new_level(lambda x: h(x) != x)
        for k in range(origin + 1, stop + 1):
            chain[k].gens.append(h)
            _rebuild_orbit(chain[k], degree)

    new_level(lambda x: any(g(x) != x for g in gens))
    chain[0].gens.extend(gens)
    _rebuild_orbit(chain[0], degree)

    i = len(chain) - 1
    while i >= 0:
        level = chain[i]
        added_at = None
        for p in sorted(level.transversal):
            tp = level.transversal[p]
            for g in level.gens:
                rep = level.transversal[g(p)]
                schreier = compose(inverse(rep), compose(g, tp))
                if schreier.is_identity():
                    continue
                residue, j = _sift(chain, schreier, i + 1)
                if not residue.is_identity():
                    add_gen(residue, i, j)
                    added_at = j
                    break
            if added_at is not None:
                break
        if added_at is not None:
            i = added_at
        else:
            i -= 1
    return chain


def group_order(group):
    """Exact order of the group via its stabilizer chain."""
    return group.order()


class EdgeSetOrbit:
    """Closure of a seed edge set under a group; `complete` is False on cap."""

    def __init__(self, elements, complete):
        self.elements = elements
        self.complete = complete

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def orbit_of_edge_set(group, seed, cap=None):
    """BFS closure of {seed} under the group generators.

    Stops with an incomplete result once the orbit grows past `cap`
    (default config.DEFAULT_ORBIT_CAP); the partial orbit is still valid.
    """
    if cap is None:
        cap = config.DEFAULT_ORBIT_CAP
    seed = frozenset(edge(u, v) for u, v in seed)
    for u, v in seed:
        if not (0 <= u < group.degree and 0 <= v < group.degree):
            raise DegreeMismatchError("seed edge outside group degree")
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for es in frontier:
            for g in group.gens:
                img = apply_to_edge_set(g, es)
                if img not in seen:
                    if len(seen) >= cap:
                        return EdgeSetOrbit(seen, complete=False)
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return EdgeSetOrbit(seen, complete=True)
