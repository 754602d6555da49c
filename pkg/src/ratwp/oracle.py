"""Ground-truth word equality at bounded length.

For presentations this is a congruence closure over all words up to
bound + slack: two words are merged whenever one rewrites to the other by a
single application of a defining relation without leaving the bounded set.
Merges only ever apply defining relations, so equality claims are sound;
completeness is handled by growing the slack until the partition restricted
to the queried lengths stops changing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import Alphabet, InputError, enumerate_accepted

DEFAULT_WORD_CAP = 2_000_000
DEFAULT_SLACK_SEARCH = 4


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


@dataclass(frozen=True)
class Oracle:
    """Frozen partition of bounded words into equality classes."""

    alphabet: Alphabet
    kind: str
    bound: int
    slack: int
    class_of: dict  # word -> class id, words of length <= bound + slack

    @property
    def includes_empty(self):
        return self.kind == "monoid"

    def words(self, max_len=None):
        max_len = self.bound if max_len is None else max_len
        if max_len > self.bound + self.slack:
            raise InputError("query beyond the oracle's bound")
        min_len = 0 if self.includes_empty else 1
        return list(self.alphabet.words(max_len, min_len=min_len))

    def equal(self, v, w):
        v, w = tuple(v), tuple(w)
        for word in (v, w):
            if len(word) > self.bound + self.slack:
                raise InputError(f"word of length {len(word)} exceeds oracle bound")
            if not word and not self.includes_empty:
                raise InputError("semigroup oracle does not accept the empty word")
        return self.class_of[v] == self.class_of[w]

    def classes(self, max_len=None):
        """Class id -> sorted members of length <= max_len (default: bound)."""
        max_len = self.bound if max_len is None else max_len
        out = {}
        for w in self.words(max_len):
            out.setdefault(self.class_of[w], []).append(w)
        key = self.alphabet.word_key
        return {c: sorted(ws, key=key) for c, ws in out.items()}


def oracle_equal(oracle, v, w):
    return oracle.equal(v, w)


def _closure_partition(words, relations, max_len):
    index = {w: i for i, w in enumerate(words)}
    uf = _UnionFind(len(words))
    # A single pass suffices: the word set is fixed, so every one-step
    # rewrite within it is discovered here and union-find supplies
    # transitivity.
    for w in words:
        wi = index[w]
        n = len(w)
        for lhs, rhs in relations:
            k = len(lhs)
            if n - k + len(rhs) > max_len:
                continue
            for start in range(n - k + 1):
                if w[start:start + k] == lhs:
                    other = w[:start] + rhs + w[start + k:]
                    oi = index.get(other)
                    if oi is not None:
                        uf.union(wi, oi)
    return {w: uf.find(index[w]) for w in words}


def _canonical_ids(words, partition, alphabet):
    key = alphabet.word_key
    rep = {}
    for w in words:
        root = partition[w]
        if root not in rep or key(w) < key(rep[root]):
            rep[root] = w
    order = sorted(rep.values(), key=key)
    ids = {w: i for i, w in enumerate(order)}
    return {w: ids[rep[partition[w]]] for w in words}


def build_oracle(presentation, bound, slack=None, schema_bound=None,
                 word_cap=DEFAULT_WORD_CAP):
    """Congruence-closure oracle for a presentation.

    With slack=None the slack is grown until two consecutive values give
    the same partition on words up to the bound.
    """
    if bound < 1:
        raise InputError("bound must be >= 1")
    alphabet = presentation.generators
    relations = []
    for lhs, rhs in presentation.expanded_relations(schema_bound):
        relations.append((tuple(lhs), tuple(rhs)))
        if rhs != lhs:
            relations.append((tuple(rhs), tuple(lhs)))
    include_empty = presentation.kind == "monoid"

    def partition_at(s):
        max_len = bound + s
        n_words = sum(len(alphabet) ** i
                      for i in range(0 if include_empty else 1, max_len + 1))
        if n_words > word_cap:
            raise InputError(
                f"word count {n_words} at slack {s} exceeds the cap {word_cap}"
            )
        words = list(alphabet.words(max_len, min_len=0 if include_empty else 1))
        return words, _closure_partition(words, relations, max_len)

    def restricted(words, partition):
        reps = {}
        view = {}
        for w in words:
            if len(w) > bound:
                continue
            root = partition[w]
            view[w] = reps.setdefault(root, len(reps))
        return view

    if slack is not None:
        words, partition = partition_at(slack)
        chosen = slack
    else:
        prev = None
        chosen = 0
        for s in range(DEFAULT_SLACK_SEARCH + 1):
            words, partition = partition_at(s)
            cur = restricted(words, partition)
            if prev is not None and cur == prev:
                chosen = s
                break
            prev = cur
            chosen = s
    class_of = _canonical_ids(words, partition, alphabet)
    return Oracle(
        alphabet=alphabet,
        kind=presentation.kind,
        bound=bound,
        slack=chosen,
        class_of=class_of,
    )


def table_oracle(table, gens, bound=8, kind="semigroup"):
    """Oracle for an explicit finite semigroup: word value by folding the
    multiplication table."""
    gens = tuple(gens)
    gen_map = {g: table.index(g) for g in gens}
    reached = table.closure_of(gen_map.values())
    for i, name in enumerate(table.elements):
        if i not in reached:
            raise InputError(f"generators do not generate: {name!r} unreached")
    alphabet = Alphabet(gens)
    include_empty = kind == "monoid"
    if include_empty and table.identity_index() is None:
        raise InputError("monoid kind requires a table with an identity")
    class_of = {}
    for w in alphabet.words(bound, min_len=0 if include_empty else 1):
        class_of[w] = table.fold(w, gen_map) if w else table.identity_index()
    return Oracle(
        alphabet=alphabet,
        kind=kind,
        bound=bound,
        slack=0,
        class_of=class_of,
    )


def verify(aut, oracle, bound):
    """All nonempty-word pairs up to the bound where automaton acceptance
    and oracle equality disagree; empty means verified at this bound."""
    if bound > oracle.bound + oracle.slack:
        raise InputError("verification bound exceeds the oracle bound")
    if (tuple(aut.left.symbols) != tuple(oracle.alphabet.symbols)
            or tuple(aut.right.symbols) != tuple(oracle.alphabet.symbols)):
        raise InputError("automaton and oracle alphabets differ")
    accepted = enumerate_accepted(aut, bound)
    words = [w for w in oracle.alphabet.words(bound) if w]
    class_of = oracle.class_of
    disagreements = []
    for v in words:
        cv = class_of[v]
        for w in words:
            if ((v, w) in accepted) != (cv == class_of[w]):
                disagreements.append((v, w))
    key = oracle.alphabet.word_key
    disagreements.sort(key=lambda p: (key(p[0]), key(p[1])))
    return disagreements
