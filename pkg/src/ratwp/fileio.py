"""Text formats: .fsa automata, .sgp presentations, .tbl tables and ideals.

The .fsa format is one directive per line; '#'-comments are stripped before
tokenizing everywhere except inside the label fields of a trans line, where
'#' is the padding token of sync automata.
"""

from __future__ import annotations

from .automata import (
    EPSILON,
    EPSILON_TOKEN,
    PAD,
    Alphabet,
    InputError,
    NfaTransition,
    OneTapeAutomaton,
    Transition,
    TwoTapeAutomaton,
    validate_sync,
)
from .presentations import (
    IdealData,
    MultiplicationTable,
    Presentation,
    RelationSchema,
)


def _strip_comment(line):
    pos = line.find("#")
    return line if pos < 0 else line[:pos]


def _directive(line):
    """Split 'name: rest' into (name, rest); None for non-directive lines."""
    if ":" not in line:
        return None
    name, rest = line.split(":", 1)
    return name.strip(), rest.strip()


def _parse_label(token, alphabet, allow_pad):
    if token == EPSILON_TOKEN:
        return EPSILON
    if token == PAD:
        if not allow_pad:
            raise InputError("pad token '#' only allowed in sync automata")
        return PAD
    if token not in alphabet:
        raise InputError(f"unknown symbol {token!r}")
    return token


def _parse_state(token, n_states):
    try:
        q = int(token)
    except ValueError:
        raise InputError(f"bad state number {token!r}") from None
    if not 0 <= q < n_states:
        raise InputError(f"state {q} out of range for {n_states} states")
    return q


def loads_fsa(text):
    """Parse .fsa text into a TwoTapeAutomaton or OneTapeAutomaton."""
    single = {}
    trans_lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head = _directive(line)
        if head is None:
            raise InputError(f"not a directive: {raw!r}")
        name, rest = head
        if name == "trans":
            trans_lines.append(rest)
            continue
        rest = _strip_comment(rest).strip()
        if name in single:
            raise InputError(f"duplicate directive {name!r}")
        single[name] = rest

    def take(name):
        if name not in single:
            raise InputError(f"missing directive {name!r}")
        return single.pop(name)

    kind = take("type")
    if kind not in ("async", "sync", "nfa"):
        raise InputError(f"unknown automaton type {kind!r}")
    if kind == "nfa":
        alphabet = Alphabet(tuple(take("alphabet").split()))
    else:
        left = Alphabet(tuple(take("left").split()))
        right = Alphabet(tuple(take("right").split()))
    try:
        n_states = int(take("states"))
    except ValueError:
        raise InputError("states directive must be an integer") from None
    initial = _parse_state(take("initial"), n_states)
    finals = frozenset(_parse_state(t, n_states) for t in take("final").split())
    if single:
        raise InputError(f"unknown directive {sorted(single)[0]!r}")

    n_fields = 3 if kind == "nfa" else 4
    trans = []
    for rest in trans_lines:
        tokens = rest.split()
        if len(tokens) < n_fields:
            raise InputError(f"trans line needs {n_fields} fields: {rest!r}")
        if len(tokens) > n_fields and not tokens[n_fields].startswith("#"):
            raise InputError(f"trailing junk in trans line: {rest!r}")
        tokens = tokens[:n_fields]
        src = _parse_state(tokens[0], n_states)
        dst = _parse_state(tokens[-1], n_states)
        if kind == "nfa":
            trans.append(NfaTransition(
                src, _parse_label(tokens[1], alphabet, False), dst))
        else:
            allow_pad = kind == "sync"
            lab_l = _parse_label(tokens[1], left, allow_pad)
            lab_r = _parse_label(tokens[2], right, allow_pad)
            if kind == "sync" and EPSILON in (lab_l, lab_r):
                raise InputError("sync automaton may not have epsilon labels")
            trans.append(Transition(src, lab_l, lab_r, dst))

    if kind == "nfa":
        return OneTapeAutomaton(n_states, alphabet, initial, finals,
                                tuple(trans))
    return TwoTapeAutomaton(n_states, left, right, initial, finals,
                            tuple(trans), mode=kind)


def _label_token(lab):
    return EPSILON_TOKEN if lab is EPSILON else lab


def dumps_fsa(aut):
    """Canonical .fsa text; loads_fsa(dumps_fsa(a)) reproduces a and
    dumps_fsa(loads_fsa(text)) is byte-identical for canonical text."""
    lines = []
    if isinstance(aut, OneTapeAutomaton):
        lines.append("type: nfa")
        lines.append("alphabet: " + " ".join(aut.alphabet.symbols))
    else:
        lines.append(f"type: {aut.mode}")
        lines.append("left: " + " ".join(aut.left.symbols))
        lines.append("right: " + " ".join(aut.right.symbols))
    lines.append(f"states: {aut.n_states}")
    lines.append(f"initial: {aut.initial}")
    lines.append("final: " + " ".join(str(f) for f in sorted(aut.finals)))
    for t in aut.transitions:
        if isinstance(t, NfaTransition):
            lines.append(f"trans: {t.src} {_label_token(t.label)} {t.dst}")
        else:
            lines.append(
                f"trans: {t.src} {_label_token(t.left)}"
                f" {_label_token(t.right)} {t.dst}"
            )
    return "\n".join(lines) + "\n"


def load_fsa(path):
    with open(path, encoding="utf-8") as f:
        aut = loads_fsa(f.read())
    if isinstance(aut, TwoTapeAutomaton) and aut.mode == "sync":
        validate_sync(aut)
    return aut


def save_fsa(aut, path):
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps_fsa(aut))


def _parse_atom(token):
    if "^" in token:
        sym, power = token.split("^", 1)
        if not sym:
            raise InputError(f"bad atom {token!r}")
        try:
            return (sym, int(power))
        except ValueError:
            return (sym, power)  # schema variable
    return (token, 1)


def _parse_schema(rest):
    if ";" not in rest:
        raise InputError("schema needs '; var = lo..hi' after the relation")
    body, var_part = rest.rsplit(";", 1)
    if "=" not in body:
        raise InputError(f"schema relation needs '=': {body!r}")
    lhs, rhs = body.split("=", 1)
    if "=" not in var_part:
        raise InputError(f"bad schema range {var_part!r}")
    var, rng = var_part.split("=", 1)
    var = var.strip()
    if ".." not in rng:
        raise InputError(f"bad schema range {rng!r}")
    lo, hi = rng.split("..", 1)
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise InputError(f"bad schema range {rng!r}") from None
    return RelationSchema(
        lhs=tuple(_parse_atom(t) for t in lhs.split()),
        rhs=tuple(_parse_atom(t) for t in rhs.split()),
        var=var, lo=lo, hi=hi,
    )


def loads_sgp(text):
    """Parse .sgp text into a Presentation."""
    kind = None
    gens = None
    relations = []
    schemas = []
    for raw in text.splitlines():
        line = _strip_comment(raw).strip()
        if not line:
            continue
        head = _directive(line)
        if head is None:
            raise InputError(f"not a directive: {raw!r}")
        name, rest = head
        if name == "kind":
            if kind is not None:
                raise InputError("duplicate directive 'kind'")
            kind = rest
        elif name == "gens":
            if gens is not None:
                raise InputError("duplicate directive 'gens'")
            gens = Alphabet(tuple(rest.split()))
        elif name == "rel":
            if "=" not in rest:
                raise InputError(f"relation needs '=': {rest!r}")
            lhs, rhs = rest.split("=", 1)
            relations.append((tuple(lhs.split()), tuple(rhs.split())))
        elif name == "schema":
            schemas.append(_parse_schema(rest))
        else:
            raise InputError(f"unknown directive {name!r}")
    if kind is None:
        raise InputError("missing directive 'kind'")
    if gens is None:
        raise InputError("missing directive 'gens'")
    return Presentation(kind, gens, tuple(relations), tuple(schemas))


def load_sgp(path):
    with open(path, encoding="utf-8") as f:
        return loads_sgp(f.read())


def _split_sections(text):
    main, ideal = [], []
    target = main
    for raw in text.splitlines():
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if line == "[ideal]":
            target = ideal
            continue
        target.append(line)
    return main, ideal


def _table_from_lines(lines):
    elements = None
    rows = []
    for line in lines:
        head = _directive(line)
        if head is None:
            raise InputError(f"not a directive: {line!r}")
        name, rest = head
        if name == "elements":
            if elements is not None:
                raise InputError("duplicate directive 'elements'")
            elements = tuple(rest.split())
        elif name == "row":
            rows.append(tuple(rest.split()))
        else:
            raise InputError(f"unknown table directive {name!r}")
    if elements is None:
        raise InputError("missing directive 'elements'")
    if len(rows) != len(elements):
        raise InputError(
            f"expected {len(elements)} rows, found {len(rows)}"
        )
    index = {e: i for i, e in enumerate(elements)}
    product = []
    for row in rows:
        if len(row) != len(elements):
            raise InputError("row length does not match the element count")
        for name in row:
            if name not in index:
                raise InputError(f"unknown element {name!r} in a row")
        product.append(tuple(index[name] for name in row))
    return MultiplicationTable(elements, tuple(product))


def _ideal_from_lines(lines):
    elements = None
    base = None
    left_rows, right_rows, prod_rows = {}, {}, {}
    for line in lines:
        head = _directive(line)
        if head is None:
            raise InputError(f"not a directive: {line!r}")
        name, rest = head
        tokens = rest.split()
        if name == "elements":
            elements = tuple(tokens)
        elif name == "base":
            base = tuple(tokens)
        elif name in ("left", "right", "prod"):
            if not tokens:
                raise InputError(f"empty {name!r} line")
            target = {"left": left_rows, "right": right_rows,
                      "prod": prod_rows}[name]
            if tokens[0] in target:
                raise InputError(f"duplicate {name!r} line for {tokens[0]!r}")
            target[tokens[0]] = tuple(tokens[1:])
        else:
            raise InputError(f"unknown ideal directive {name!r}")
    if elements is None or base is None:
        raise InputError("ideal section needs 'elements' and 'base' lines")
    k = len(elements)

    def images(rows, keys, what):
        out = {}
        for key in keys:
            if key not in rows:
                raise InputError(f"missing {what} line for {key!r}")
            row = rows[key]
            if len(row) != k:
                raise InputError(f"{what} line for {key!r} needs {k} images")
            out[key] = row
        return out

    left = images(left_rows, base, "left")
    right = images(right_rows, base, "right")
    prod = images(prod_rows, elements, "prod")
    return IdealData(
        elements=elements,
        base_symbols=base,
        left_action={(b, elements[i]): left[b][i]
                     for b in base for i in range(k)},
        right_action={(elements[i], b): right[b][i]
                      for b in base for i in range(k)},
        internal={(e, elements[i]): prod[e][i]
                  for e in elements for i in range(k)},
    )


def load_tbl(path):
    """MultiplicationTable from the main section of a .tbl file."""
    with open(path, encoding="utf-8") as f:
        main, _ = _split_sections(f.read())
    if not main:
        raise InputError(f"no table section in {path}")
    return _table_from_lines(main)


def load_ideal(path):
    """IdealData from the [ideal] section of a .tbl file."""
    with open(path, encoding="utf-8") as f:
        _, ideal = _split_sections(f.read())
    if not ideal:
        raise InputError(f"no [ideal] section in {path}")
    return _ideal_from_lines(ideal)
