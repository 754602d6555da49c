"""Pumping-lemma machinery, relation-property checks, and the loop-removal
cross-section transformation."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .automata import (
    EPSILON,
    PAD,
    InputError,
    OneTapeAutomaton,
    NfaTransition,
    TwoTapeAutomaton,
    eliminate_silent_steps,
    enumerate_accepted,
    enumerate_language,
    sync_to_async,
    trim,
)


@dataclass(frozen=True)
class Report:
    name: str
    verdict: str          # "pass" / "fail" / "refuted" / "not-refuted"
    witnesses: tuple = ()

    def __str__(self):
        lines = [f"{self.name}: {self.verdict}"]
        for w in self.witnesses:
            lines.append(f"  {w}")
        return "\n".join(lines)


@dataclass(frozen=True)
class PumpDecomposition:
    """Split of an accepted pair into prefix, loop, and suffix pairs such
    that repeating the loop any number of times stays accepted."""

    prefix: tuple   # (x1, x2)
    loop: tuple     # (u1, u2)
    suffix: tuple   # (y1, y2)

    def __post_init__(self):
        if len(self.loop[0]) + len(self.loop[1]) < 1:
            raise InputError("pump loop must consume at least one symbol")

    def pumped(self, i):
        x, u, y = self.prefix, self.loop, self.suffix
        return (x[0] + u[0] * i + y[0], x[1] + u[1] * i + y[1])


def _pump_form(aut):
    if aut.mode == "sync":
        aut = sync_to_async(aut)
    return trim(eliminate_silent_steps(aut))


def pumping_constant(aut):
    """Pumping bound: a pair with combined length above it is guaranteed a
    decomposition.

    Twice the silent-free state count: a step may consume two symbols, so
    a combined length above 2|Q| forces more than |Q| steps and hence a
    repeated state within the first |Q| steps, consuming at most 2|Q|
    symbols.
    """
    return 2 * _pump_form(aut).n_states


def _accepting_run(aut, v, w):
    """One accepting run of a silent-free automaton as a transition list,
    or None."""
    by_src = {}
    for t in aut.transitions:
        by_src.setdefault(t.src, []).append(t)
    nv, nw = len(v), len(w)
    start = (aut.initial, 0, 0)
    parent = {start: None}
    queue = deque([start])
    goal = None
    while queue:
        node = queue.popleft()
        q, i, j = node
        if i == nv and j == nw and q in aut.finals:
            goal = node
            break
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
            nxt = (t.dst, ni, nj)
            if nxt not in parent:
                parent[nxt] = (node, t)
                queue.append(nxt)
    if goal is None:
        return None
    run = []
    node = goal
    while parent[node] is not None:
        node, t = parent[node]
        run.append(t)
    run.reverse()
    return run


def pump_decompose(aut, pair):
    """Decomposition of an accepted pair around the first repeated state of
    an accepting run."""
    v, w = tuple(pair[0]), tuple(pair[1])
    form = _pump_form(aut)
    n0 = 2 * form.n_states
    if len(v) + len(w) <= n0:
        raise InputError(
            f"pair too short: combined length must exceed {n0}"
        )
    run = _accepting_run(form, v, w)
    if run is None:
        raise InputError("pair is not accepted")
    states = [form.initial] + [t.dst for t in run]
    first_seen = {}
    cut = None
    for idx, q in enumerate(states):
        if q in first_seen:
            cut = (first_seen[q], idx)
            break
        first_seen[q] = idx
    assert cut is not None, "run longer than the state count must repeat"
    i, j = cut

    def project(ts):
        left = tuple(t.left for t in ts if t.left is not EPSILON)
        right = tuple(t.right for t in ts if t.right is not EPSILON)
        return (left, right)

    return PumpDecomposition(
        prefix=project(run[:i]),
        loop=project(run[i:j]),
        suffix=project(run[j:]),
    )


def pump_check(aut, decomposition, i_max=5):
    """Assert acceptance of every pumped pair for i = 0..i_max."""
    for i in range(i_max + 1):
        pv, pw = decomposition.pumped(i)
        if not aut.accepts(pv, pw):
            return Report("pump_check", "fail", ((i, pv, pw),))
    return Report("pump_check", "pass")


def pump_refute(aut, oracle, bound, i_max=5, max_witnesses=5):
    """Look for an accepted pair whose pumped variants the oracle rejects;
    any hit proves the automaton does not decide the oracle's word problem."""
    if (tuple(aut.left.symbols) != tuple(oracle.alphabet.symbols)
            or tuple(aut.right.symbols) != tuple(oracle.alphabet.symbols)):
        raise InputError("automaton and oracle alphabets differ")
    n0 = pumping_constant(aut)
    max_len = oracle.bound + oracle.slack
    key = oracle.alphabet.word_key
    accepted = sorted(enumerate_accepted(aut, bound),
                      key=lambda p: (key(p[0]), key(p[1])))
    witnesses = []
    for v, w in accepted:
        if len(v) + len(w) <= n0:
            continue
        if not oracle.includes_empty and (not v or not w):
            continue
        dec = pump_decompose(aut, (v, w))
        for i in range(i_max + 1):
            pv, pw = dec.pumped(i)
            if len(pv) > max_len or len(pw) > max_len:
                continue
            if not oracle.includes_empty and (not pv or not pw):
                continue
            if not oracle.equal(pv, pw):
                witnesses.append(((v, w), i, (pv, pw)))
                break
        if len(witnesses) >= max_witnesses:
            break
    verdict = "refuted" if witnesses else "not-refuted"
    return Report("pump_refute", verdict, tuple(witnesses))


def _nonempty_accepted(aut, bound):
    return {(v, w) for v, w in enumerate_accepted(aut, bound) if v and w}


def equivalence_check(aut, bound):
    """Reflexivity, symmetry, and transitivity over all nonempty words up
    to the bound."""
    if aut.left != aut.right:
        raise InputError("equivalence check needs equal tape alphabets")
    accepted = _nonempty_accepted(aut, bound)
    words = list(aut.left.words(bound))
    for v in words:
        if (v, v) not in accepted:
            return Report("equivalence_check", "fail",
                          (("reflexivity", v),))
    for v, w in accepted:
        if (w, v) not in accepted:
            return Report("equivalence_check", "fail",
                          (("symmetry", v, w),))
    # Transitivity via connected components: the relation is transitive
    # (given reflexive + symmetric) iff it equals the union of the squared
    # components.
    comp = {}
    for v, w in accepted:
        ra = _find(comp, v)
        rb = _find(comp, w)
        if ra != rb:
            comp[rb] = ra
    members = {}
    for v in words:
        members.setdefault(_find(comp, v), []).append(v)
    expected = sum(len(m) ** 2 for m in members.values())
    if expected != len(accepted):
        for group in members.values():
            for v in group:
                for w in group:
                    if (v, w) not in accepted:
                        # some u links v and w but (v, w) is missing
                        return Report("equivalence_check", "fail",
                                      (("transitivity", v, w),))
    return Report("equivalence_check", "pass")


def _find(parent, x):
    root = x
    while parent.get(root, root) != root:
        root = parent[root]
    while parent.get(x, x) != root:
        parent[x], x = root, parent[x]
    return root


def congruence_check(aut, bound):
    """Closure of the accepted relation under two-sided contexts within the
    bound."""
    if aut.left != aut.right:
        raise InputError("congruence check needs equal tape alphabets")
    accepted = _nonempty_accepted(aut, bound)
    words_of_len = {}
    for w in aut.left.words(bound, min_len=0):
        words_of_len.setdefault(len(w), []).append(w)
    for v, w in accepted:
        budget = bound - max(len(v), len(w))
        for lx in range(budget + 1):
            for x in words_of_len.get(lx, ()):
                for ly in range(budget - lx + 1):
                    for y in words_of_len.get(ly, ()):
                        if not x and not y:
                            continue
                        if (x + v + y, x + w + y) not in accepted:
                            return Report(
                                "congruence_check", "fail",
                                (("context", (v, w), (x, y)),))
    return Report("congruence_check", "pass")


def _eps_right_cycle_edges(aut):
    """Transitions lying on a cycle whose right labels are all epsilon."""
    eps_edges = [t for t in aut.transitions if t.right is EPSILON]
    adj = {}
    for t in eps_edges:
        adj.setdefault(t.src, []).append(t.dst)
    scc = _strongly_connected(aut.n_states, adj)
    on_cycle = set()
    for t in eps_edges:
        if t.src == t.dst:
            on_cycle.add(t)
        elif scc[t.src] == scc[t.dst]:
            on_cycle.add(t)
    return on_cycle


def _strongly_connected(n, adj):
    """Iterative Tarjan; returns component id per node."""
    index = [None] * n
    low = [0] * n
    comp = [None] * n
    on_stack = [False] * n
    stack = []
    counter = [0]
    n_comp = [0]
    for root in range(n):
        if index[root] is not None:
            continue
        work = [(root, iter(adj.get(root, ())))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if index[nxt] is None:
                    index[nxt] = low[nxt] = counter[0]
                    counter[0] += 1
                    stack.append(nxt)
                    on_stack[nxt] = True
                    work.append((nxt, iter(adj.get(nxt, ()))))
                    advanced = True
                    break
                elif on_stack[nxt]:
                    low[node] = min(low[node], index[nxt])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                while True:
                    q = stack.pop()
                    on_stack[q] = False
                    comp[q] = n_comp[0]
                    if q == node:
                        break
                n_comp[0] += 1
    return comp


def cross_section(aut):
    """Candidate regular cross-section: delete every transition on a cycle
    with only-epsilon right labels, then project to the left tape."""
    form = _pump_form(aut)
    removed = _eps_right_cycle_edges(form)
    trans = tuple(
        NfaTransition(t.src, t.left, t.dst)
        for t in form.transitions
        if t not in removed
    )
    return OneTapeAutomaton(
        n_states=form.n_states,
        alphabet=form.left,
        initial=form.initial,
        finals=form.finals,
        transitions=trans,
        state_names=form.state_names,
    )


def validate_cross_section(d, oracle, bound):
    """Check that every oracle class with a short representative meets D,
    and that per-class membership counts are stable from bound-1 to bound
    (the desk-scale finiteness proxy)."""
    lang = enumerate_language(d, bound)
    lang_prev = enumerate_language(d, bound - 1) if bound > 0 else set()
    classes = oracle.classes(bound)
    prev_classes = oracle.classes(bound - 1) if bound > 0 else {}
    witnesses = []
    counts = {}
    for cid, members in sorted(classes.items()):
        hits = [w for w in members if w in lang]
        counts[members[0]] = len(hits)
        if not hits:
            witnesses.append(("missing", members[0]))
            continue
        prev_members = prev_classes.get(cid)
        if prev_members is not None:
            prev_hits = sum(1 for w in prev_members if w in lang_prev)
            if prev_hits != len(hits):
                witnesses.append(
                    ("growing", members[0], prev_hits, len(hits)))
    verdict = "pass" if not witnesses else "fail"
    return Report("validate_cross_section", verdict, tuple(witnesses))


def _label_str(lab):
    if lab is EPSILON:
        return "ε"
    if lab == PAD:
        return "□"
    return lab


def export_dot(aut, name="automaton"):
    """Deterministic DOT text; parallel transitions are merged into one
    labelled edge."""
    lines = [f"digraph {name} {{", "  rankdir=LR;",
             "  __init [shape=point, label=\"\"];"]
    for q in range(aut.n_states):
        label = aut.state_names[q] if aut.state_names else f"q{q}"
        shape = "doublecircle" if q in aut.finals else "circle"
        lines.append(f"  {q} [label=\"{label}\", shape={shape}];")
    lines.append(f"  __init -> {aut.initial};")
    edges = {}
    for t in aut.transitions:
        if isinstance(t, NfaTransition):
            lab = _label_str(t.label)
        else:
            lab = f"({_label_str(t.left)},{_label_str(t.right)})"
        edges.setdefault((t.src, t.dst), [])
        if lab not in edges[(t.src, t.dst)]:
            edges[(t.src, t.dst)].append(lab)
    for (src, dst), labels in sorted(edges.items()):
        label = ", ".join(labels)
        lines.append(f"  {src} -> {dst} [label=\"{label}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
