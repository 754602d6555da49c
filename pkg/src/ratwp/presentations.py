"""Finite descriptions of semigroups: presentations, multiplication tables,
and ideal data for the finite-ideal extension."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from .automata import Alphabet, InputError


@dataclass(frozen=True)
class RelationSchema:
    """Parametric relation family, e.g. a b^n a = a b a for n in 2..10.

    Each side is a tuple of atoms; an atom is (symbol, power) where power
    is an int or the variable name.
    """

    lhs: tuple
    rhs: tuple
    var: str
    lo: int
    hi: int

    def expand(self, hi=None):
        hi = self.hi if hi is None else hi
        out = []
        for n in range(self.lo, hi + 1):
            out.append((self._side(self.lhs, n), self._side(self.rhs, n)))
        return out

    def _side(self, atoms, n):
        word = []
        for sym, power in atoms:
            k = n if power == self.var else power
            word.extend([sym] * k)
        return tuple(word)


@dataclass(frozen=True)
class Presentation:
    """Generators and defining relations of a semigroup or monoid."""

    kind: str
    generators: Alphabet
    relations: tuple = ()
    schemas: tuple = ()

    def __post_init__(self):
        if self.kind not in ("semigroup", "monoid"):
            raise InputError(f"unknown presentation kind {self.kind!r}")
        object.__setattr__(
            self, "relations",
            tuple((tuple(l), tuple(r)) for l, r in self.relations),
        )
        object.__setattr__(self, "schemas", tuple(self.schemas))
        for lhs, rhs in self.relations:
            for w in (lhs, rhs):
                if self.kind == "semigroup" and not w:
                    raise InputError("semigroup relations may not have empty sides")
                for sym in w:
                    if sym not in self.generators:
                        raise InputError(f"relation symbol {sym!r} not a generator")

    def expanded_relations(self, schema_bound=None):
        rels = list(self.relations)
        for schema in self.schemas:
            rels.extend(schema.expand(schema_bound))
        return rels


@dataclass(frozen=True)
class MultiplicationTable:
    """Explicit finite semigroup: ordered element names and a total product."""

    elements: tuple
    product: tuple  # product[i][j] = index of elements[i] * elements[j]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(
            self, "product", tuple(tuple(row) for row in self.product)
        )
        n = len(self.elements)
        if len(set(self.elements)) != n:
            raise InputError("duplicate element names")
        if len(self.product) != n or any(len(row) != n for row in self.product):
            raise InputError("product table must be square")
        for row in self.product:
            for k in row:
                if not 0 <= k < n:
                    raise InputError("product entry out of range")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if (self.product[self.product[i][j]][k]
                            != self.product[i][self.product[j][k]]):
                        raise InputError(
                            "product is not associative at "
                            f"({self.elements[i]}, {self.elements[j]}, "
                            f"{self.elements[k]})"
                        )

    def __len__(self):
        return len(self.elements)

    def index(self, name):
        try:
            return self.elements.index(name)
        except ValueError:
            raise InputError(f"unknown element {name!r}") from None

    def mul(self, i, j):
        return self.product[i][j]

    def identity_index(self):
        n = len(self.elements)
        for e in range(n):
            if all(self.product[e][i] == i == self.product[i][e] for i in range(n)):
                return e
        return None

    def zero_index(self):
        n = len(self.elements)
        for z in range(n):
            if all(self.product[z][i] == z == self.product[i][z] for i in range(n)):
                return z
        return None

    def fold(self, word, gen_map):
        """Value of a nonempty word under symbol -> element index gen_map."""
        word = tuple(word)
        if not word:
            raise InputError("cannot fold the empty word in a semigroup")
        acc = gen_map[word[0]]
        for sym in word[1:]:
            acc = self.product[acc][gen_map[sym]]
        return acc

    def closure_of(self, indices):
        """Subsemigroup generated by the given element indices."""
        reached = set(indices)
        frontier = list(reached)
        while frontier:
            i = frontier.pop()
            for j in list(reached):
                for k in (self.product[i][j], self.product[j][i]):
                    if k not in reached:
                        reached.add(k)
                        frontier.append(k)
        return reached


@dataclass(frozen=True)
class IdealData:
    """A finite ideal I of T = S u I, described by the left action of S's
    generators on I, the right action of I by those generators, and the
    internal product of I."""

    elements: tuple                 # ideal element names
    base_symbols: tuple             # generating symbols of S
    left_action: dict               # (b, i) -> i'   meaning b * i
    right_action: dict              # (i, b) -> i'   meaning i * b
    internal: dict                  # (i, j) -> k    meaning i * j

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "base_symbols", tuple(self.base_symbols))
        if set(self.elements) & set(self.base_symbols):
            raise InputError("ideal elements must be fresh symbols")
        for b in self.base_symbols:
            for i in self.elements:
                if (b, i) not in self.left_action:
                    raise InputError(f"left action missing for ({b}, {i})")
                if (i, b) not in self.right_action:
                    raise InputError(f"right action missing for ({i}, {b})")
        for i in self.elements:
            for j in self.elements:
                if (i, j) not in self.internal:
                    raise InputError(f"internal product missing for ({i}, {j})")
        for m in (self.left_action, self.right_action, self.internal):
            for v in m.values():
                if v not in self.elements:
                    raise InputError(f"product {v!r} escapes the ideal")
        self._check_associativity()

    def _check_associativity(self):
        la, ra, pr = self.left_action, self.right_action, self.internal
        for i, j, k in product(self.elements, repeat=3):
            if pr[pr[i, j], k] != pr[i, pr[j, k]]:
                raise InputError(f"internal product not associative at ({i},{j},{k})")
        for b in self.base_symbols:
            for i, j in product(self.elements, repeat=2):
                if la[b, pr[i, j]] != pr[la[b, i], j]:
                    raise InputError(f"left action incompatible at ({b},{i},{j})")
                if ra[pr[i, j], b] != pr[i, ra[j, b]]:
                    raise InputError(f"right action incompatible at ({i},{j},{b})")
            for c in self.base_symbols:
                for i in self.elements:
                    if ra[la[b, i], c] != la[b, ra[i, c]]:
                        raise InputError(f"actions incompatible at ({b},{i},{c})")

    def left_transformation(self, b):
        """b's left multiplication as a tuple over element positions."""
        pos = {e: k for k, e in enumerate(self.elements)}
        return tuple(pos[self.left_action[b, i]] for i in self.elements)


@dataclass(frozen=True)
class ProductGenerators:
    """Named generating set C of a direct product S x T: each generator is
    a fresh symbol with projections to an S element and a T symbol."""

    pairs: tuple  # (symbol, s_element_name, t_symbol)

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(tuple(p) for p in self.pairs))
        names = [p[0] for p in self.pairs]
        if len(set(names)) != len(names):
            raise InputError("duplicate product generator names")

    def alphabet(self):
        return Alphabet(tuple(p[0] for p in self.pairs))

    def pi_s(self):
        return {p[0]: p[1] for p in self.pairs}

    def pi_t(self):
        return {p[0]: p[2] for p in self.pairs}
