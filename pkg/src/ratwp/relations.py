"""Closure operations on rational relations and regular languages."""

from __future__ import annotations

from .automata import (
    EPSILON,
    Alphabet,
    InputError,
    NfaTransition,
    OneTapeAutomaton,
    Transition,
    TwoTapeAutomaton,
    determinize,
    sync_to_async,
)


def _as_async(aut):
    return sync_to_async(aut) if aut.mode == "sync" else aut


def compose(r, s):
    """Relational composition: (u, w) accepted iff some middle word x has
    (u, x) in r and (x, w) in s.

    Product construction on state pairs. An r-transition writing epsilon on
    the middle tape fires alone, an s-transition reading epsilon from the
    middle tape fires alone, and transitions agreeing on a middle symbol
    fire jointly.
    """
    r, s = _as_async(r), _as_async(s)
    if r.right != s.left:
        raise InputError("compose: r's right alphabet must equal s's left alphabet")
    ns = s.n_states

    def pair(i, j):
        return i * ns + j

    trans = []
    for t in r.transitions:
        if t.right is EPSILON:
            for j in range(ns):
                trans.append(Transition(pair(t.src, j), t.left, EPSILON,
                                        pair(t.dst, j)))
    for u in s.transitions:
        if u.left is EPSILON:
            for i in range(r.n_states):
                trans.append(Transition(pair(i, u.src), EPSILON, u.right,
                                        pair(i, u.dst)))
    for t in r.transitions:
        if t.right is EPSILON:
            continue
        for u in s.transitions:
            if u.left == t.right:
                trans.append(Transition(pair(t.src, u.src), t.left, u.right,
                                        pair(t.dst, u.dst)))
    finals = frozenset(pair(f, g) for f in r.finals for g in s.finals)
    return TwoTapeAutomaton(
        n_states=r.n_states * ns,
        left=r.left,
        right=s.right,
        initial=pair(r.initial, s.initial),
        finals=finals,
        transitions=tuple(trans),
        mode="async",
    )


def cross_product(l1, l2):
    """The rectangle L1 x L2 as a relation: read v on the left tape, then
    w on the right tape."""
    off = l1.n_states
    trans = [Transition(t.src, t.label, EPSILON, t.dst) for t in l1.transitions]
    for f in l1.finals:
        trans.append(Transition(f, EPSILON, EPSILON, l2.initial + off))
    for t in l2.transitions:
        trans.append(Transition(t.src + off, EPSILON, t.label, t.dst + off))
    return TwoTapeAutomaton(
        n_states=l1.n_states + l2.n_states,
        left=l1.alphabet,
        right=l2.alphabet,
        initial=l1.initial,
        finals=frozenset(f + off for f in l2.finals),
        transitions=tuple(trans),
        mode="async",
    )


def fix_tape(r, v, side="left"):
    """Slice a relation at a fixed word.

    side="left" gives the language { w | (v, w) in r }, side="right" gives
    { w | (w, v) in r }. Built as the product with the line automaton of v.
    """
    r = _as_async(r)
    if side not in ("left", "right"):
        raise InputError(f"side must be 'left' or 'right', not {side!r}")
    fixed_alpha = r.left if side == "left" else r.right
    out_alpha = r.right if side == "left" else r.left
    v = tuple(v)
    for sym in v:
        if sym not in fixed_alpha:
            raise InputError(f"symbol {sym!r} not in the fixed tape's alphabet")
    k = len(v)

    def st(q, i):
        return q * (k + 1) + i

    trans = []
    for t in r.transitions:
        fixed_lab = t.left if side == "left" else t.right
        out_lab = t.right if side == "left" else t.left
        for i in range(k + 1):
            if fixed_lab is EPSILON:
                trans.append(NfaTransition(st(t.src, i), out_lab, st(t.dst, i)))
            elif i < k and v[i] == fixed_lab:
                trans.append(NfaTransition(st(t.src, i), out_lab, st(t.dst, i + 1)))
    finals = frozenset(st(f, k) for f in r.finals)
    return OneTapeAutomaton(
        n_states=r.n_states * (k + 1),
        alphabet=out_alpha,
        initial=st(r.initial, 0),
        finals=finals,
        transitions=tuple(trans),
    )


def intersect_rectangle(r, l, k):
    """Intersect a relation with the rectangle L x K of regular languages.

    L and K are determinized first so the tracking components stay
    silent-free.
    """
    r = _as_async(r)
    if l.alphabet != r.left:
        raise InputError("L must be over the relation's left alphabet")
    if k.alphabet != r.right:
        raise InputError("K must be over the relation's right alphabet")
    dl, dk = determinize(l), determinize(k)
    step_l = {(t.src, t.label): t.dst for t in dl.transitions}
    step_k = {(t.src, t.label): t.dst for t in dk.transitions}
    nl, nk = dl.n_states, dk.n_states

    def st(q, i, j):
        return (q * nl + i) * nk + j

    trans = []
    for t in r.transitions:
        for i in range(nl):
            if t.left is EPSILON:
                ni = i
            else:
                ni = step_l.get((i, t.left))
                if ni is None:
                    continue
            for j in range(nk):
                if t.right is EPSILON:
                    nj = j
                else:
                    nj = step_k.get((j, t.right))
                    if nj is None:
                        continue
                trans.append(Transition(st(t.src, i, j), t.left, t.right,
                                        st(t.dst, ni, nj)))
    finals = frozenset(
        st(f, i, j) for f in r.finals for i in dl.finals for j in dk.finals
    )
    return TwoTapeAutomaton(
        n_states=r.n_states * nl * nk,
        left=r.left,
        right=r.right,
        initial=st(r.initial, dl.initial, dk.initial),
        finals=finals,
        transitions=tuple(trans),
        mode="async",
    )


def _image_alphabet(alphabet, mapping):
    out = []
    for sym in alphabet:
        if sym not in mapping:
            raise InputError(f"relabel map is not total: missing {sym!r}")
        if mapping[sym] not in out:
            out.append(mapping[sym])
    return Alphabet(tuple(out))


def relabel(r, f_left, f_right, left_alphabet=None, right_alphabet=None):
    """Rewrite every transition label componentwise (epsilon maps to
    epsilon); accepts exactly the image relation."""
    r = _as_async(r)
    new_left = left_alphabet or _image_alphabet(r.left, f_left)
    new_right = right_alphabet or _image_alphabet(r.right, f_right)
    for sym in r.left:
        if sym not in f_left:
            raise InputError(f"relabel map is not total: missing {sym!r}")
    for sym in r.right:
        if sym not in f_right:
            raise InputError(f"relabel map is not total: missing {sym!r}")
    trans = tuple(
        Transition(
            t.src,
            EPSILON if t.left is EPSILON else f_left[t.left],
            EPSILON if t.right is EPSILON else f_right[t.right],
            t.dst,
        )
        for t in r.transitions
    )
    return TwoTapeAutomaton(
        n_states=r.n_states,
        left=new_left,
        right=new_right,
        initial=r.initial,
        finals=r.finals,
        transitions=trans,
        mode="async",
        state_names=r.state_names,
    )


def identity_relation(alphabet, include_empty=False):
    """Two-state automaton accepting pairs of equal strings; with
    include_empty the initial state is also final (monoid case)."""
    if len(alphabet) == 0:
        raise InputError("empty alphabet")
    trans = [Transition(0, a, a, 1) for a in alphabet]
    trans += [Transition(1, a, a, 1) for a in alphabet]
    finals = {0, 1} if include_empty else {1}
    return TwoTapeAutomaton(
        n_states=2,
        left=alphabet,
        right=alphabet,
        initial=0,
        finals=frozenset(finals),
        transitions=tuple(trans),
        mode="async",
        state_names=("q0", "q1"),
    )


def substitution_relation(alphabet, b, w):
    """Graph of the morphism that replaces every occurrence of the fresh
    symbol b by the word w and fixes all other symbols.

    Accepts exactly the pairs (v, v with b replaced by w) for v over
    alphabet + b.
    """
    if b in alphabet:
        raise InputError(f"symbol {b!r} already in the alphabet")
    w = tuple(w)
    if not w:
        raise InputError("replacement word must be nonempty")
    for sym in w:
        if sym not in alphabet:
            raise InputError(f"symbol {sym!r} not in the alphabet")
    n = len(w)
    extended = Alphabet(alphabet.symbols + (b,))
    trans = [Transition(0, a, a, 0) for a in alphabet]
    for i, sym in enumerate(w):
        trans.append(Transition(i, EPSILON, sym, i + 1))
    trans.append(Transition(n, b, EPSILON, 0))
    return TwoTapeAutomaton(
        n_states=n + 1,
        left=extended,
        right=alphabet,
        initial=0,
        finals=frozenset({0}),
        transitions=tuple(trans),
        mode="async",
    )
