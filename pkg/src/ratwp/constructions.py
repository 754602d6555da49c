"""Word-problem automaton constructions: from finite semigroups, free
semigroups, and combinations of smaller word-problem automata."""

from __future__ import annotations

from itertools import product as iproduct

from .automata import (
    EPSILON,
    PAD,
    Alphabet,
    InputError,
    NfaTransition,
    OneTapeAutomaton,
    Transition,
    TwoTapeAutomaton,
    swap_tapes,
    sync_to_async,
    union,
    union_one_tape,
)
from .presentations import (
    IdealData,
    MultiplicationTable,
    Presentation,
    ProductGenerators,
    RelationSchema,
)
from .relations import (
    compose,
    cross_product,
    fix_tape,
    identity_relation,
    substitution_relation,
)


def _as_async(aut):
    return sync_to_async(aut) if aut.mode == "sync" else aut


def _require_square(wp, what):
    if wp.left != wp.right:
        raise InputError(f"{what} needs equal tape alphabets")


def cayley_wp_sync(table, gens, kind="semigroup"):
    """Synchronous word-problem automaton of a finite semigroup.

    States are an initial state plus three copies (left-padding, neutral,
    right-padding) of pairs of semigroup elements; each copy tracks right
    multiplication of both tapes' values, and the padding copies enforce
    that a pad is only ever followed by pads on its tape.
    """
    gens = tuple(gens)
    gen_idx = {}
    for g in gens:
        gen_idx[g] = table.index(g)
    reached = table.closure_of(gen_idx.values())
    for i, name in enumerate(table.elements):
        if i not in reached:
            raise InputError(f"generators do not generate: {name!r} unreached")
    alphabet = Alphabet(gens)
    n = len(table)
    copies = ("L", "N", "R")

    def st(s, t, c):
        return 1 + (s * n + t) * 3 + c

    L, N, R = 0, 1, 2
    names = ["q0"]
    for s in range(n):
        for t in range(n):
            for c in copies:
                names.append(f"({table.elements[s]},{table.elements[t]},{c})")
    trans = []
    for x, y in iproduct(gens, repeat=2):
        trans.append(Transition(0, x, y, st(gen_idx[x], gen_idx[y], N)))
    for s in range(n):
        for t in range(n):
            for x, y in iproduct(gens, repeat=2):
                trans.append(Transition(
                    st(s, t, N), x, y,
                    st(table.mul(s, gen_idx[x]), table.mul(t, gen_idx[y]), N)))
            for x in gens:
                sx = table.mul(s, gen_idx[x])
                trans.append(Transition(st(s, t, N), x, PAD, st(sx, t, R)))
                trans.append(Transition(st(s, t, R), x, PAD, st(sx, t, R)))
            for y in gens:
                ty = table.mul(t, gen_idx[y])
                trans.append(Transition(st(s, t, N), PAD, y, st(s, ty, L)))
                trans.append(Transition(st(s, t, L), PAD, y, st(s, ty, L)))
    finals = {st(s, s, c) for s in range(n) for c in (L, N, R)}
    initial_final = False
    if kind == "monoid":
        e = table.identity_index()
        if e is None:
            raise InputError("monoid kind requires a table with an identity")
        initial_final = True
        for x in gens:
            trans.append(Transition(0, x, PAD, st(gen_idx[x], e, R)))
        for y in gens:
            trans.append(Transition(0, PAD, y, st(e, gen_idx[y], L)))
    elif kind != "semigroup":
        raise InputError(f"unknown kind {kind!r}")
    if initial_final:
        finals.add(0)
    return TwoTapeAutomaton(
        n_states=1 + n * n * 3,
        left=alphabet,
        right=alphabet,
        initial=0,
        finals=frozenset(finals),
        transitions=tuple(trans),
        mode="sync",
        state_names=tuple(names),
    )


def free_wp(alphabet, kind="semigroup"):
    """Word problem of the free semigroup (or monoid) on an alphabet:
    pairs of equal strings."""
    if kind not in ("semigroup", "monoid"):
        raise InputError(f"unknown kind {kind!r}")
    return identity_relation(alphabet, include_empty=(kind == "monoid"))


def add_generator(wp, b, rep):
    """Extend a word-problem automaton over A to one over A + b, where the
    fresh generator b is represented by the nonempty word rep over A.

    Realized as substitution composed with the word problem composed with
    the reversed substitution.
    """
    wp = _as_async(wp)
    _require_square(wp, "add_generator")
    subst = substitution_relation(wp.left, b, rep)
    return compose(subst, compose(wp, swap_tapes(subst)))


def remove_generator(wp, c):
    """Restrict to the subsemigroup generated without c: delete every
    transition whose either label is c and shrink the alphabets."""
    wp = _as_async(wp)
    if c not in wp.left and c not in wp.right:
        raise InputError(f"symbol {c!r} not in the alphabets")
    new_left = Alphabet(tuple(s for s in wp.left if s != c))
    new_right = Alphabet(tuple(s for s in wp.right if s != c))
    trans = tuple(t for t in wp.transitions if t.left != c and t.right != c)
    return TwoTapeAutomaton(
        n_states=wp.n_states,
        left=new_left,
        right=new_right,
        initial=wp.initial,
        finals=wp.finals,
        transitions=trans,
        mode="async",
        state_names=wp.state_names,
    )


def adjoin_identity(wp, one):
    """Word problem of S^1 over A + one.

    Silent-identity loops are added at every state; a fresh final initial
    state handles pairs whose words consist of the identity symbol only.
    """
    wp = _as_async(wp)
    _require_square(wp, "adjoin_identity")
    if one in wp.left:
        raise InputError(f"symbol {one!r} already in the alphabet")
    alphabet = Alphabet(wp.left.symbols + (one,))
    fresh = wp.n_states
    trans = list(wp.transitions)
    trans.append(Transition(fresh, EPSILON, EPSILON, wp.initial))
    for q in range(wp.n_states + 1):
        trans.append(Transition(q, EPSILON, one, q))
        trans.append(Transition(q, one, EPSILON, q))
    return TwoTapeAutomaton(
        n_states=wp.n_states + 1,
        left=alphabet,
        right=alphabet,
        initial=fresh,
        finals=frozenset(wp.finals | {fresh}),
        transitions=tuple(trans),
        mode="async",
    )


def adjoin_zero(wp, zero):
    """Word problem of S^0: the one-element special case of the finite
    ideal extension."""
    wp = _as_async(wp)
    _require_square(wp, "adjoin_zero")
    if zero in wp.left:
        raise InputError(f"symbol {zero!r} already in the alphabet")
    base = wp.left.symbols
    data = IdealData(
        elements=(zero,),
        base_symbols=base,
        left_action={(b, zero): zero for b in base},
        right_action={(zero, b): zero for b in base},
        internal={(zero, zero): zero},
    )
    return ideal_extension(wp, data)


def ideal_extension(wp, data):
    """Word problem of T = S u I for a finite ideal I, given a word-problem
    automaton for S over B and the action data of I.

    The automaton branches silently either into the S automaton or into a
    pair of transformation trackers; the trackers record the accumulated
    left action of the B-prefix on I, switch to a pair of ideal elements at
    the first I-letter of each tape, and track right actions thereafter.
    """
    wp = _as_async(wp)
    _require_square(wp, "ideal_extension")
    if tuple(data.base_symbols) != wp.left.symbols:
        raise InputError("ideal data is over a different base alphabet")
    elements = data.elements
    k = len(elements)
    pos = {e: i for i, e in enumerate(elements)}
    alphabet = Alphabet(wp.left.symbols + elements)

    transformations = sorted(iproduct(range(k), repeat=k))
    t_idx = {t: i for i, t in enumerate(transformations)}
    m = len(transformations)
    identity = tuple(range(k))
    l_of = {b: data.left_transformation(b) for b in data.base_symbols}

    off_q = 1
    off_tt = off_q + wp.n_states
    off_ii = off_tt + m * m
    n_states = off_ii + k * k

    def tt(alpha, beta):
        return off_tt + t_idx[alpha] * m + t_idx[beta]

    def ii(i, j):
        return off_ii + i * k + j

    trans = [
        Transition(0, EPSILON, EPSILON, off_q + wp.initial),
        Transition(0, EPSILON, EPSILON, tt(identity, identity)),
    ]
    for t in wp.transitions:
        trans.append(Transition(t.src + off_q, t.left, t.right, t.dst + off_q))
    for alpha in transformations:
        for beta in transformations:
            src = tt(alpha, beta)
            for b in data.base_symbols:
                lb = l_of[b]
                after = tuple(alpha[lb[p]] for p in range(k))
                trans.append(Transition(src, b, EPSILON, tt(after, beta)))
                after = tuple(beta[lb[p]] for p in range(k))
                trans.append(Transition(src, EPSILON, b, tt(alpha, after)))
            for a, b in iproduct(elements, repeat=2):
                trans.append(Transition(src, a, b,
                                        ii(alpha[pos[a]], beta[pos[b]])))
    for i in range(k):
        for j in range(k):
            src = ii(i, j)
            for a in alphabet:
                if a in pos:
                    ia = pos[data.internal[elements[i], a]]
                    ja = pos[data.internal[elements[j], a]]
                else:
                    ia = pos[data.right_action[elements[i], a]]
                    ja = pos[data.right_action[elements[j], a]]
                trans.append(Transition(src, a, EPSILON, ii(ia, j)))
                trans.append(Transition(src, EPSILON, a, ii(i, ja)))
    finals = {f + off_q for f in wp.finals} | {ii(i, i) for i in range(k)}
    return TwoTapeAutomaton(
        n_states=n_states,
        left=alphabet,
        right=alphabet,
        initial=0,
        finals=frozenset(finals),
        transitions=tuple(trans),
        mode="async",
    )


def product_with_finite(table, wp_t, gens):
    """Word problem of S x T for finite S, given T's word-problem automaton
    and a named generating set of pairs.

    Lifts every T-transition to the product alphabet while two extra state
    components fold the S-projections of both tapes in S with an adjoined
    identity; acceptance requires equal S-values in S proper.
    """
    wp_t = _as_async(wp_t)
    _require_square(wp_t, "product_with_finite")
    pi_s, pi_t = gens.pi_s(), gens.pi_t()
    for c in pi_s.values():
        table.index(c)
    for c in pi_t.values():
        if c not in wp_t.left:
            raise InputError(f"projection {c!r} not in the T automaton's alphabet")
    alphabet = gens.alphabet()
    n = len(table)
    one = n  # adjoined identity of S^1
    n1 = n + 1
    nr = wp_t.n_states

    def mul1(i, j):
        if i == one:
            return j
        if j == one:
            return i
        return table.mul(i, j)

    def st(s, t, q):
        return (s * n1 + t) * nr + q

    s_of = {c: table.index(pi_s[c]) for c in alphabet}
    by_t_left = {}
    by_t_right = {}
    for c in alphabet:
        by_t_left.setdefault(pi_t[c], []).append(c)
        by_t_right.setdefault(pi_t[c], []).append(c)

    trans = []
    for g in wp_t.transitions:
        if g.left is not EPSILON and g.right is not EPSILON:
            lifts = [(c, d) for c in by_t_left.get(g.left, ())
                     for d in by_t_right.get(g.right, ())]
        elif g.left is not EPSILON:
            lifts = [(c, None) for c in by_t_left.get(g.left, ())]
        elif g.right is not EPSILON:
            lifts = [(None, d) for d in by_t_right.get(g.right, ())]
        else:
            lifts = [(None, None)]
        for c, d in lifts:
            for s in range(n1):
                ns = s if c is None else mul1(s, s_of[c])
                for t in range(n1):
                    nt = t if d is None else mul1(t, s_of[d])
                    trans.append(Transition(st(s, t, g.src), c, d,
                                            st(ns, nt, g.dst)))
    finals = frozenset(st(s, s, g) for s in range(n) for g in wp_t.finals)
    return TwoTapeAutomaton(
        n_states=n1 * n1 * nr,
        left=alphabet,
        right=alphabet,
        initial=st(one, one, wp_t.initial),
        finals=finals,
        transitions=tuple(trans),
        mode="async",
    )


def free_product(wp_s, wp_t):
    """Word problem of the semigroup free product: a fresh non-final
    initial state with silent edges into both automata and silent edges
    from their finals back."""
    wp_s, wp_t = _as_async(wp_s), _as_async(wp_t)
    _require_square(wp_s, "free_product")
    _require_square(wp_t, "free_product")
    if set(wp_s.left) & set(wp_t.left):
        raise InputError("free product factors must have disjoint alphabets")
    alphabet = Alphabet(wp_s.left.symbols + wp_t.left.symbols)
    off_s, off_t = 1, 1 + wp_s.n_states
    trans = [Transition(0, EPSILON, EPSILON, wp_s.initial + off_s),
             Transition(0, EPSILON, EPSILON, wp_t.initial + off_t)]
    for t in wp_s.transitions:
        trans.append(Transition(t.src + off_s, t.left, t.right, t.dst + off_s))
    for t in wp_t.transitions:
        trans.append(Transition(t.src + off_t, t.left, t.right, t.dst + off_t))
    for f in wp_s.finals:
        trans.append(Transition(f + off_s, EPSILON, EPSILON, 0))
    for f in wp_t.finals:
        trans.append(Transition(f + off_t, EPSILON, EPSILON, 0))
    finals = frozenset(
        {f + off_s for f in wp_s.finals} | {f + off_t for f in wp_t.finals}
    )
    return TwoTapeAutomaton(
        n_states=1 + wp_s.n_states + wp_t.n_states,
        left=alphabet,
        right=alphabet,
        initial=0,
        finals=finals,
        transitions=tuple(trans),
        mode="async",
    )


def _widen_two_tape(aut, alphabet):
    return TwoTapeAutomaton(
        n_states=aut.n_states, left=alphabet, right=alphabet,
        initial=aut.initial, finals=aut.finals,
        transitions=aut.transitions, mode="async",
        state_names=aut.state_names,
    )


def _widen_one_tape(aut, alphabet):
    return OneTapeAutomaton(
        n_states=aut.n_states, alphabet=alphabet, initial=aut.initial,
        finals=aut.finals, transitions=aut.transitions,
    )


def zero_union(wp_s, wp_t, zero):
    """Word problem of the zero union S u0 T over the joint alphabet.

    Union of the two factor word problems with Z x Z, where Z is the class
    of zero: zero-words of S, zero-words of T, and all mixed words (any
    product across the factors is zero).
    """
    wp_s, wp_t = _as_async(wp_s), _as_async(wp_t)
    _require_square(wp_s, "zero_union")
    _require_square(wp_t, "zero_union")
    a_syms, b_syms = set(wp_s.left), set(wp_t.left)
    if zero not in a_syms or zero not in b_syms:
        raise InputError(f"zero symbol {zero!r} must be in both alphabets")
    if a_syms & b_syms != {zero}:
        raise InputError("factor alphabets may share exactly the zero symbol")
    alphabet = Alphabet(
        wp_s.left.symbols
        + tuple(s for s in wp_t.left.symbols if s != zero)
    )
    z_s = _widen_one_tape(fix_tape(wp_s, (zero,), side="right"), alphabet)
    z_t = _widen_one_tape(fix_tape(wp_t, (zero,), side="right"), alphabet)
    # words containing letters from both factors; encoded flags (seen S, seen T)
    mixed_trans = []
    for fa in (0, 1):
        for fb in (0, 1):
            src = fa * 2 + fb
            for sym in alphabet:
                if sym == zero:
                    nfa, nfb = fa, fb
                elif sym in a_syms:
                    nfa, nfb = 1, fb
                else:
                    nfa, nfb = fa, 1
                mixed_trans.append(NfaTransition(src, sym, nfa * 2 + nfb))
    mixed = OneTapeAutomaton(4, alphabet, 0, frozenset({3}), tuple(mixed_trans))
    z = union_one_tape(union_one_tape(z_s, z_t), mixed)
    return union(
        union(_widen_two_tape(wp_s, alphabet), _widen_two_tape(wp_t, alphabet)),
        cross_product(z, z),
    )


def monoid_from_semigroup_wp(wp, identity_witness=None):
    """Monoid word problem from a semigroup one: adds the empty word to the
    picture, equating it with the class of the identity witness (if any)."""
    wp = _as_async(wp)
    _require_square(wp, "monoid_from_semigroup_wp")
    alphabet = wp.left
    eps_lang = OneTapeAutomaton(1, alphabet, 0, frozenset({0}), ())
    if identity_witness is not None:
        witness = tuple(identity_witness)
        if not witness:
            raise InputError("identity witness must be a nonempty word")
        e_class = fix_tape(wp, witness, side="right")
    else:
        e_class = OneTapeAutomaton(1, alphabet, 0, frozenset(), ())
    eps_pair = TwoTapeAutomaton(1, alphabet, alphabet, 0, frozenset({0}), ())
    out = union(wp, cross_product(e_class, eps_lang))
    out = union(out, cross_product(eps_lang, e_class))
    return union(out, eps_pair)


def _fig2_automaton():
    a_b = Alphabet(("a", "b"))
    t = [
        (0, "a", "a", 1),
        (0, "b", "b", 4),
        (1, "a", "a", 1),
        (1, "b", "b", 2),
        (2, "b", "b", 2),
        (2, "b", EPSILON, 3),
        (2, EPSILON, "b", 3),
        (2, "a", "a", 1),
        (3, "b", EPSILON, 3),
        (3, EPSILON, "b", 3),
        (3, "a", "a", 1),
        (4, "b", "b", 4),
        (4, "a", "a", 1),
    ]
    return TwoTapeAutomaton(
        n_states=5, left=a_b, right=a_b, initial=0,
        finals=frozenset({1, 2, 4}), transitions=tuple(t),
        state_names=("q0", "q1", "q2", "q3", "q4"),
    )


def _fig3_automaton():
    a_b = Alphabet(("a", "b"))
    t = [
        (0, "a", "a", 1),
        (0, "b", "b", 1),
        (1, "b", "b", 1),
        (1, "a", EPSILON, 1),
        (1, EPSILON, "a", 1),
    ]
    return TwoTapeAutomaton(
        n_states=2, left=a_b, right=a_b, initial=0,
        finals=frozenset({1}), transitions=tuple(t),
        state_names=("q0", "q1"),
    )


_BUILTIN_NAMES = ("fig1", "fig2", "fig3", "bicyclic")


def builtin(name):
    """Hardcoded example automata and presentations.

    fig1: equality automaton of the free semigroup on {a, b}.
    fig2: automaton of the infinitely presented semigroup
          <a, b | a b^n a = a b a, n >= 2>.
    fig3: automaton of <a, b | aa = a, ba = b>.
    bicyclic: presentation of <b, c | bc = 1> (no deciding automaton
          exists, so only the presentation is available).
    """
    if name == "fig1":
        return free_wp(Alphabet(("a", "b")))
    if name == "fig2":
        return _fig2_automaton()
    if name == "fig3":
        return _fig3_automaton()
    if name == "bicyclic":
        return builtin_presentation("bicyclic")
    raise InputError(f"unknown builtin {name!r}; known: {', '.join(_BUILTIN_NAMES)}")


def builtin_presentation(name, schema_bound=10):
    if name == "fig1":
        return Presentation("semigroup", Alphabet(("a", "b")))
    if name == "fig2":
        schema = RelationSchema(
            lhs=(("a", 1), ("b", "n"), ("a", 1)),
            rhs=(("a", 1), ("b", 1), ("a", 1)),
            var="n", lo=2, hi=schema_bound,
        )
        return Presentation("semigroup", Alphabet(("a", "b")), schemas=(schema,))
    if name == "fig3":
        return Presentation(
            "semigroup", Alphabet(("a", "b")),
            relations=((("a", "a"), ("a",)), (("b", "a"), ("b",))),
        )
    if name == "bicyclic":
        return Presentation(
            "monoid", Alphabet(("b", "c")),
            relations=((("b", "c"), ()),),
        )
    raise InputError(f"unknown builtin {name!r}; known: {', '.join(_BUILTIN_NAMES)}")
