"""Core value types for one- and two-tape finite state automata.

Two-tape automata come in two flavours sharing one carrier type: ``async``
automata read at most one symbol per tape per step (epsilon labels allowed),
``sync`` automata read exactly one symbol per tape per step, with a reserved
padding token standing in for the exhausted shorter tape.

All values are immutable after construction; every operation is a pure
function of its inputs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, NamedTuple, Optional

EPSILON = None          # tape label meaning "read nothing"
EPSILON_TOKEN = "-"     # how epsilon is written in .fsa files
PAD = "#"               # padding token used by sync automata

Label = Optional[str]
Word = tuple  # tuple of symbol tokens


class InputError(ValueError):
    """Malformed input: bad file, unknown symbol, invalid argument."""


@dataclass(frozen=True)
class Alphabet:
    """Ordered, finite set of symbol tokens."""

    symbols: tuple

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        seen = set()
        for s in self.symbols:
            if not isinstance(s, str) or not s or any(c.isspace() for c in s):
                raise InputError(f"bad symbol token {s!r}")
            if s in (EPSILON_TOKEN, PAD):
                raise InputError(f"symbol token {s!r} is reserved")
            if s in seen:
                raise InputError(f"duplicate symbol {s!r}")
            seen.add(s)

    def __contains__(self, sym):
        return sym in self.symbols

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def index(self, sym):
        return self.symbols.index(sym)

    def word_key(self, w):
        """Sort key: length first, then position in the alphabet."""
        return (len(w), tuple(self.symbols.index(s) for s in w))

    def words(self, max_len, min_len=1):
        """All words with min_len <= length <= max_len, shortlex order."""
        for n in range(min_len, max_len + 1):
            for w in product(self.symbols, repeat=n):
                yield w


class Transition(NamedTuple):
    src: int
    left: Label
    right: Label
    dst: int


class NfaTransition(NamedTuple):
    src: int
    label: Label
    dst: int


def _check_state(i, n, what):
    if not (isinstance(i, int) and 0 <= i < n):
        raise InputError(f"{what} {i} out of range for {n} states")


@dataclass(frozen=True)
class TwoTapeAutomaton:
    """Asynchronous or synchronous two-tape automaton."""

    n_states: int
    left: Alphabet
    right: Alphabet
    initial: int
    finals: frozenset
    transitions: tuple
    mode: str = "async"
    state_names: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(
            self, "transitions", tuple(Transition(*t) for t in self.transitions)
        )
        if self.mode not in ("async", "sync"):
            raise InputError(f"unknown mode {self.mode!r}")
        _check_state(self.initial, self.n_states, "initial state")
        for f in self.finals:
            _check_state(f, self.n_states, "final state")
        for t in self.transitions:
            _check_state(t.src, self.n_states, "transition source")
            _check_state(t.dst, self.n_states, "transition target")
            self._check_label(t.left, self.left)
            self._check_label(t.right, self.right)
        if self.state_names is not None and len(self.state_names) != self.n_states:
            raise InputError("state_names length mismatch")

    def _check_label(self, lab, alphabet):
        if self.mode == "sync":
            if lab is EPSILON:
                raise InputError("sync automaton may not have epsilon labels")
            if lab != PAD and lab not in alphabet:
                raise InputError(f"unknown symbol {lab!r}")
        else:
            if lab is not EPSILON and lab not in alphabet:
                raise InputError(f"unknown symbol {lab!r}")

    def accepts(self, left_word, right_word):
        return accepts_two_tape(self, left_word, right_word)


@dataclass(frozen=True)
class OneTapeAutomaton:
    """NFA with silent transitions."""

    n_states: int
    alphabet: Alphabet
    initial: int
    finals: frozenset
    transitions: tuple
    state_names: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(
            self, "transitions", tuple(NfaTransition(*t) for t in self.transitions)
        )
        _check_state(self.initial, self.n_states, "initial state")
        for f in self.finals:
            _check_state(f, self.n_states, "final state")
        for t in self.transitions:
            _check_state(t.src, self.n_states, "transition source")
            _check_state(t.dst, self.n_states, "transition target")
            if t.label is not EPSILON and t.label not in self.alphabet:
                raise InputError(f"unknown symbol {t.label!r}")

    def accepts(self, word):
        return accepts_one_tape(self, word)


def as_word(text_or_tokens, alphabet=None, tokens=False):
    """Turn a string or iterable of tokens into a word (tuple of tokens).

    By default a plain string is read character by character; with
    tokens=True it is split on whitespace.
    """
    if isinstance(text_or_tokens, str):
        w = tuple(text_or_tokens.split()) if tokens else tuple(text_or_tokens)
    else:
        w = tuple(text_or_tokens)
    if alphabet is not None:
        for s in w:
            if s not in alphabet:
                raise InputError(f"symbol {s!r} not in alphabet")
    return w


def pad(left_word, right_word):
    """Pad the shorter word with the padding token, columnwise."""
    n = max(len(left_word), len(right_word))
    return [
        (left_word[i] if i < len(left_word) else PAD,
         right_word[i] if i < len(right_word) else PAD)
        for i in range(n)
    ]


def _check_pair(aut, v, w):
    for s in v:
        if s not in aut.left:
            raise InputError(f"symbol {s!r} not in left alphabet")
    for s in w:
        if s not in aut.right:
            raise InputError(f"symbol {s!r} not in right alphabet")


def accepts_two_tape(aut, left_word, right_word):
    """Does an accepting computation project to the given pair?"""
    v, w = tuple(left_word), tuple(right_word)
    _check_pair(aut, v, w)
    if aut.mode == "sync":
        return _accepts_sync(aut, v, w)
    silent_free = eliminate_silent_steps(aut)
    return _accepts_async_silent_free(silent_free, v, w)


def _accepts_sync(aut, v, w):
    columns = pad(v, w)
    states = {aut.initial}
    by_src = _transitions_by_src(aut)
    for a, b in columns:
        states = {t.dst for q in states for t in by_src.get(q, ())
                  if t.left == a and t.right == b}
        if not states:
            return False
    return bool(states & aut.finals)


def _transitions_by_src(aut):
    by_src = {}
    for t in aut.transitions:
        by_src.setdefault(t.src, []).append(t)
    return by_src


def _accepts_async_silent_free(aut, v, w):
    # Positional reachability over (state, left pos, right pos). Every
    # transition consumes at least one symbol, so the search is finite.
    by_src = _transitions_by_src(aut)
    nv, nw = len(v), len(w)
    start = (aut.initial, 0, 0)
    seen = {start}
    stack = [start]
    while stack:
        q, i, j = stack.pop()
        if i == nv and j == nw and q in aut.finals:
            return True
        for t in by_src.get(q, ()):
            if t.left is EPSILON:
                ni = i
            elif i < nv and v[i] == t.left:
                ni = i + 1
            else:
                continue
            if t.right is EPSILON:
                nj = j
            elif j < nw and w[j] == t.right:
                nj = j + 1
            else:
                continue
            node = (t.dst, ni, nj)
            if node not in seen:
                seen.add(node)
                stack.append(node)
    return False


def accepts_one_tape(aut, word):
    w = tuple(word)
    for s in w:
        if s not in aut.alphabet:
            raise InputError(f"symbol {s!r} not in alphabet")
    closure = _silent_closure_one_tape(aut)
    states = set(closure[aut.initial])
    for sym in w:
        step = {t.dst for q in states for t in aut.transitions
                if t.src == q and t.label == sym}
        states = {r for q in step for r in closure[q]}
        if not states:
            return False
    return bool(states & aut.finals)


def _silent_closure_one_tape(aut):
    eps = {}
    for t in aut.transitions:
        if t.label is EPSILON:
            eps.setdefault(t.src, set()).add(t.dst)
    closure = []
    for q in range(aut.n_states):
        reach = {q}
        todo = [q]
        while todo:
            r = todo.pop()
            for s in eps.get(r, ()):
                if s not in reach:
                    reach.add(s)
                    todo.append(s)
        closure.append(frozenset(reach))
    return closure


def _silent_closure_two_tape(aut):
    eps = {}
    for t in aut.transitions:
        if t.left is EPSILON and t.right is EPSILON:
            eps.setdefault(t.src, set()).add(t.dst)
    closure = []
    for q in range(aut.n_states):
        reach = {q}
        todo = [q]
        while todo:
            r = todo.pop()
            for s in eps.get(r, ()):
                if s not in reach:
                    reach.add(s)
                    todo.append(s)
        closure.append(frozenset(reach))
    return closure


def eliminate_silent_steps(aut):
    """Remove (epsilon, epsilon) transitions without changing the language.

    States with a silent path to a final state become final themselves;
    non-silent transitions are pulled back through silent closures.
    """
    if aut.mode == "sync":
        return aut
    if not any(t.left is EPSILON and t.right is EPSILON for t in aut.transitions):
        return aut
    closure = _silent_closure_two_tape(aut)
    new_trans = []
    seen = set()
    for q in range(aut.n_states):
        for r in closure[q]:
            for t in aut.transitions:
                if t.src != r or (t.left is EPSILON and t.right is EPSILON):
                    continue
                key = (q, t.left, t.right, t.dst)
                if key not in seen:
                    seen.add(key)
                    new_trans.append(Transition(*key))
    new_finals = frozenset(
        q for q in range(aut.n_states) if closure[q] & aut.finals
    )
    return TwoTapeAutomaton(
        n_states=aut.n_states,
        left=aut.left,
        right=aut.right,
        initial=aut.initial,
        finals=new_finals,
        transitions=tuple(new_trans),
        mode="async",
        state_names=aut.state_names,
    )


def _renumber_two_tape(aut, keep):
    """Restrict to the states in `keep` (must contain the initial state)."""
    order = sorted(keep)
    remap = {old: new for new, old in enumerate(order)}
    trans = tuple(
        Transition(remap[t.src], t.left, t.right, remap[t.dst])
        for t in aut.transitions
        if t.src in keep and t.dst in keep
    )
    names = None
    if aut.state_names is not None:
        names = tuple(aut.state_names[q] for q in order)
    return TwoTapeAutomaton(
        n_states=len(order),
        left=aut.left,
        right=aut.right,
        initial=remap[aut.initial],
        finals=frozenset(remap[f] for f in aut.finals if f in keep),
        transitions=trans,
        mode=aut.mode,
        state_names=names,
    )


def trim(aut):
    """Keep exactly the states lying on some initial-to-final path.

    If the language is empty only the initial state survives, with no
    final states.
    """
    fwd = {aut.initial}
    todo = [aut.initial]
    succ, pred = {}, {}
    for t in aut.transitions:
        succ.setdefault(t.src, set()).add(t.dst)
        pred.setdefault(t.dst, set()).add(t.src)
    while todo:
        q = todo.pop()
        for r in succ.get(q, ()):
            if r not in fwd:
                fwd.add(r)
                todo.append(r)
    bwd = set(aut.finals)
    todo = list(aut.finals)
    while todo:
        q = todo.pop()
        for r in pred.get(q, ()):
            if r not in bwd:
                bwd.add(r)
                todo.append(r)
    useful = fwd & bwd
    if aut.initial not in useful:
        return TwoTapeAutomaton(
            n_states=1,
            left=aut.left,
            right=aut.right,
            initial=0,
            finals=frozenset(),
            transitions=(),
            mode=aut.mode,
        )
    return _renumber_two_tape(aut, useful)


def trim_one_tape(aut):
    fwd = {aut.initial}
    todo = [aut.initial]
    succ, pred = {}, {}
    for t in aut.transitions:
        succ.setdefault(t.src, set()).add(t.dst)
        pred.setdefault(t.dst, set()).add(t.src)
    while todo:
        q = todo.pop()
        for r in succ.get(q, ()):
            if r not in fwd:
                fwd.add(r)
                todo.append(r)
    bwd = set(aut.finals)
    todo = list(aut.finals)
    while todo:
        q = todo.pop()
        for r in pred.get(q, ()):
            if r not in bwd:
                bwd.add(r)
                todo.append(r)
    useful = fwd & bwd
    if aut.initial not in useful:
        return OneTapeAutomaton(1, aut.alphabet, 0, frozenset(), ())
    order = sorted(useful)
    remap = {old: new for new, old in enumerate(order)}
    trans = tuple(
        NfaTransition(remap[t.src], t.label, remap[t.dst])
        for t in aut.transitions
        if t.src in useful and t.dst in useful
    )
    names = None
    if aut.state_names is not None:
        names = tuple(aut.state_names[q] for q in order)
    return OneTapeAutomaton(
        len(order), aut.alphabet, remap[aut.initial],
        frozenset(remap[f] for f in aut.finals if f in useful), trans, names
    )


def determinize(aut):
    """Powerset construction; the result is silent-free and has at most one
    transition per (state, symbol)."""
    closure = _silent_closure_one_tape(aut)
    start = frozenset().union(closure[aut.initial])
    index = {start: 0}
    order = [start]
    trans = []
    queue = deque([start])
    by_src = {}
    for t in aut.transitions:
        if t.label is not EPSILON:
            by_src.setdefault(t.src, []).append(t)
    while queue:
        subset = queue.popleft()
        targets = {}
        for q in subset:
            for t in by_src.get(q, ()):
                targets.setdefault(t.label, set()).update(closure[t.dst])
        for sym in sorted(targets, key=aut.alphabet.index):
            dst = frozenset(targets[sym])
            if dst not in index:
                index[dst] = len(order)
                order.append(dst)
                queue.append(dst)
            trans.append(NfaTransition(index[subset], sym, index[dst]))
    finals = frozenset(
        i for i, subset in enumerate(order) if subset & aut.finals
    )
    return OneTapeAutomaton(len(order), aut.alphabet, 0, finals, tuple(trans))


def swap_tapes(aut):
    """Reverse the relation: (v, w) accepted iff (w, v) was."""
    return TwoTapeAutomaton(
        n_states=aut.n_states,
        left=aut.right,
        right=aut.left,
        initial=aut.initial,
        finals=aut.finals,
        transitions=tuple(
            Transition(t.src, t.right, t.left, t.dst) for t in aut.transitions
        ),
        mode=aut.mode,
        state_names=aut.state_names,
    )


def union(r, s):
    """Accept L(r) or L(s): fresh initial state with silent branches."""
    if r.left != s.left or r.right != s.right:
        raise InputError("union requires identical alphabets on both tapes")
    if r.mode == "sync":
        r = sync_to_async(r)
    if s.mode == "sync":
        s = sync_to_async(s)
    off_r, off_s = 1, 1 + r.n_states
    trans = [Transition(0, EPSILON, EPSILON, r.initial + off_r),
             Transition(0, EPSILON, EPSILON, s.initial + off_s)]
    for t in r.transitions:
        trans.append(Transition(t.src + off_r, t.left, t.right, t.dst + off_r))
    for t in s.transitions:
        trans.append(Transition(t.src + off_s, t.left, t.right, t.dst + off_s))
    finals = frozenset(
        {f + off_r for f in r.finals} | {f + off_s for f in s.finals}
    )
    return TwoTapeAutomaton(
        n_states=1 + r.n_states + s.n_states,
        left=r.left,
        right=r.right,
        initial=0,
        finals=finals,
        transitions=tuple(trans),
        mode="async",
    )


def union_one_tape(a, b):
    if a.alphabet != b.alphabet:
        raise InputError("union requires identical alphabets")
    off_a, off_b = 1, 1 + a.n_states
    trans = [NfaTransition(0, EPSILON, a.initial + off_a),
             NfaTransition(0, EPSILON, b.initial + off_b)]
    for t in a.transitions:
        trans.append(NfaTransition(t.src + off_a, t.label, t.dst + off_a))
    for t in b.transitions:
        trans.append(NfaTransition(t.src + off_b, t.label, t.dst + off_b))
    finals = frozenset(
        {f + off_a for f in a.finals} | {f + off_b for f in b.finals}
    )
    return OneTapeAutomaton(
        1 + a.n_states + b.n_states, a.alphabet, 0, finals, tuple(trans)
    )


def enumerate_accepted(aut, len_bound):
    """All accepted pairs with both words of length <= len_bound.

    Forward search over (state, left word, right word); far cheaper than
    testing every candidate pair when the relation is thin.
    """
    if len_bound < 0:
        raise InputError("bound must be >= 0")
    if aut.mode == "sync":
        aut = sync_to_async(aut)
    aut = eliminate_silent_steps(aut)
    by_src = _transitions_by_src(aut)
    finals = aut.finals
    start = (aut.initial, (), ())
    seen = {start}
    stack = [start]
    accepted = set()
    while stack:
        q, v, w = stack.pop()
        if q in finals:
            accepted.add((v, w))
        for t in by_src.get(q, ()):
            nv = v if t.left is EPSILON else v + (t.left,)
            nw = w if t.right is EPSILON else w + (t.right,)
            if len(nv) > len_bound or len(nw) > len_bound:
                continue
            node = (t.dst, nv, nw)
            if node not in seen:
                seen.add(node)
                stack.append(node)
    return accepted


def enumerate_language(aut, len_bound):
    """All accepted words of length <= len_bound of a one-tape automaton."""
    closure = _silent_closure_one_tape(aut)
    by_src = {}
    for t in aut.transitions:
        if t.label is not EPSILON:
            by_src.setdefault(t.src, []).append(t)
    start_states = frozenset(closure[aut.initial])
    seen = {((), start_states)}
    stack = [((), start_states)]
    accepted = set()
    while stack:
        w, states = stack.pop()
        if states & aut.finals:
            accepted.add(w)
        if len(w) == len_bound:
            continue
        targets = {}
        for q in states:
            for t in by_src.get(q, ()):
                targets.setdefault(t.label, set()).update(closure[t.dst])
        for sym, dst in targets.items():
            node = (w + (sym,), frozenset(dst))
            if node not in seen:
                seen.add(node)
                stack.append(node)
    return accepted


def validate_sync(aut):
    """Check the padding discipline of a sync automaton.

    Along any path from the initial state, once a pad is read on a tape,
    only pads may follow on that tape; pads on both tapes at once are
    never allowed.
    """
    if aut.mode != "sync":
        raise InputError("not a sync automaton")
    for t in aut.transitions:
        if t.left == PAD and t.right == PAD:
            raise InputError("transition padded on both tapes")
    by_src = _transitions_by_src(aut)
    seen = {(aut.initial, False, False)}
    stack = [(aut.initial, False, False)]
    while stack:
        q, lpad, rpad = stack.pop()
        for t in by_src.get(q, ()):
            if lpad and t.left != PAD:
                raise InputError(
                    f"non-pad left label after padding at state {t.src}"
                )
            if rpad and t.right != PAD:
                raise InputError(
                    f"non-pad right label after padding at state {t.src}"
                )
            node = (t.dst, lpad or t.left == PAD, rpad or t.right == PAD)
            if node not in seen:
                seen.add(node)
                stack.append(node)
    return aut


def sync_to_async(aut):
    """View a sync automaton as an async one: pad labels become epsilon."""
    validate_sync(aut)
    trans = tuple(
        Transition(
            t.src,
            EPSILON if t.left == PAD else t.left,
            EPSILON if t.right == PAD else t.right,
            t.dst,
        )
        for t in aut.transitions
    )
    return TwoTapeAutomaton(
        n_states=aut.n_states,
        left=aut.left,
        right=aut.right,
        initial=aut.initial,
        finals=aut.finals,
        transitions=trans,
        mode="async",
        state_names=aut.state_names,
    )
