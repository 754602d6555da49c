import pytest

from ratwp import (
    Alphabet,
    IdealData,
    InputError,
    MultiplicationTable,
    Oracle,
    Presentation,
    ProductGenerators,
    TwoTapeAutomaton,
    add_generator,
    adjoin_identity,
    adjoin_zero,
    build_oracle,
    builtin,
    builtin_presentation,
    cayley_wp_sync,
    enumerate_accepted,
    free_product,
    free_wp,
    ideal_extension,
    intersect_rectangle,
    monoid_from_semigroup_wp,
    product_with_finite,
    remove_generator,
    sync_to_async,
    table_oracle,
    validate_sync,
    verify,
    zero_union,
)
from ratwp.automata import NfaTransition, OneTapeAutomaton

A = Alphabet(("a",))
AB = Alphabet(("a", "b"))


def fig3_semigroup_presentation(extra_symbols=(), extra_relations=()):
    gens = Alphabet(("a", "b") + tuple(extra_symbols))
    relations = ((("a", "a"), ("a",)), (("b", "a"), ("b",)))
    return Presentation("semigroup", gens, relations + tuple(extra_relations))


def wp_trivial_a():
    """Automaton for <a | aa = a>: all nonempty words over {a} are equal."""
    return TwoTapeAutomaton(
        2, A, A, 0, frozenset({1}),
        ((0, "a", "a", 1), (1, "a", "a", 1),
         (1, "a", None, 1), (1, None, "a", 1)))


class TestCayley:
    def test_c2_against_table_oracle(self, c2_table):
        wp = cayley_wp_sync(c2_table, ("g",))
        validate_sync(wp)
        oracle = table_oracle(c2_table, ("g",), bound=6)
        assert verify(wp, oracle, 6) == []

    def test_left_zero_against_table_oracle(self, left_zero_table):
        wp = cayley_wp_sync(left_zero_table, ("l", "r"))
        validate_sync(wp)
        oracle = table_oracle(left_zero_table, ("l", "r"), bound=6)
        assert verify(wp, oracle, 6) == []

    def test_monoid_kind(self, c2_table):
        wp = cayley_wp_sync(c2_table, ("g",), kind="monoid")
        as_async = sync_to_async(wp)
        assert as_async.accepts((), ())
        assert as_async.accepts(("g", "g"), ())
        assert not as_async.accepts(("g",), ())

    def test_monoid_kind_needs_identity(self, left_zero_table):
        with pytest.raises(InputError):
            cayley_wp_sync(left_zero_table, ("l", "r"), kind="monoid")

    def test_non_generating_set(self, c2_table):
        with pytest.raises(InputError):
            cayley_wp_sync(c2_table, ("1",))


class TestFreeWp:
    def test_semigroup_is_equality_without_empty(self):
        wp = free_wp(AB)
        assert wp.accepts(("a",), ("a",))
        assert not wp.accepts((), ())

    def test_monoid_includes_empty(self):
        assert free_wp(AB, kind="monoid").accepts((), ())


class TestAddRemoveGenerator:
    def test_add_generator_lemma(self):
        # over A={a}, add b represented by aa; compare to <a,b | b=aa>
        wp = add_generator(free_wp(A), "b", ("a", "a"))
        oracle = build_oracle(
            Presentation("semigroup", AB,
                         relations=(((("b"),), ("a", "a")),)), 5)
        assert verify(wp, oracle, 5) == []

    def test_remove_generator_round_trip(self):
        wp = add_generator(free_wp(A), "b", ("a", "a"))
        back = remove_generator(wp, "b")
        free = free_wp(A)
        for n in range(5):
            for m in range(5):
                v, u = ("a",) * n, ("a",) * m
                assert back.accepts(v, u) == free.accepts(v, u)

    def test_remove_unknown_symbol(self):
        with pytest.raises(InputError):
            remove_generator(free_wp(A), "z")


class TestAdjoin:
    def test_adjoin_identity(self):
        wp = adjoin_identity(builtin("fig3"), "e")
        oracle = build_oracle(fig3_semigroup_presentation(
            ("e",), (
                (("a", "e"), ("a",)), (("e", "a"), ("a",)),
                (("b", "e"), ("b",)), (("e", "b"), ("b",)),
                (("e", "e"), ("e",)))), 4)
        assert verify(wp, oracle, 4) == []

    def test_adjoin_identity_pure_identity_words(self):
        wp = adjoin_identity(builtin("fig3"), "e")
        assert wp.accepts(("e",), ("e", "e"))
        assert wp.accepts(("e", "a"), ("a", "e"))

    def test_adjoin_zero(self):
        wp = adjoin_zero(builtin("fig3"), "z")
        oracle = build_oracle(fig3_semigroup_presentation(
            ("z",), (
                (("a", "z"), ("z",)), (("z", "a"), ("z",)),
                (("b", "z"), ("z",)), (("z", "b"), ("z",)),
                (("z", "z"), ("z",)))), 4)
        assert verify(wp, oracle, 4) == []

    def test_symbol_clash(self):
        with pytest.raises(InputError):
            adjoin_identity(builtin("fig3"), "a")


class TestIdealExtension:
    def ideal_two(self):
        # I = {u, v} left-zero, the base letter acting as identity on I
        return IdealData(
            elements=("u", "v"), base_symbols=("a",),
            left_action={("a", "u"): "u", ("a", "v"): "v"},
            right_action={("u", "a"): "u", ("v", "a"): "v"},
            internal={("u", "u"): "u", ("u", "v"): "u",
                      ("v", "u"): "v", ("v", "v"): "v"})

    def test_two_element_ideal(self):
        wp = ideal_extension(wp_trivial_a(), self.ideal_two())
        oracle = build_oracle(
            Presentation("semigroup", Alphabet(("a", "u", "v")), relations=(
                (("a", "a"), ("a",)),
                (("a", "u"), ("u",)), (("u", "a"), ("u",)),
                (("a", "v"), ("v",)), (("v", "a"), ("v",)),
                (("u", "u"), ("u",)), (("u", "v"), ("u",)),
                (("v", "u"), ("v",)), (("v", "v"), ("v",)))), 4)
        assert verify(wp, oracle, 4) == []

    def test_alphabet_mismatch(self):
        with pytest.raises(InputError):
            ideal_extension(builtin("fig3"), self.ideal_two())


class TestFreeProduct:
    def test_fig3_with_free_factor(self):
        wp = free_product(builtin("fig3"), free_wp(Alphabet(("c",))))
        oracle = build_oracle(fig3_semigroup_presentation(("c",)), 4)
        assert verify(wp, oracle, 4) == []

    def test_disjointness_required(self):
        with pytest.raises(InputError):
            free_product(builtin("fig3"), free_wp(AB))


class TestZeroUnion:
    def factors(self):
        ts = MultiplicationTable(("a", "z"), ((0, 1), (1, 1)))
        tt = MultiplicationTable(("b", "z"), ((0, 1), (1, 1)))
        return (cayley_wp_sync(ts, ("a", "z")),
                cayley_wp_sync(tt, ("b", "z")))

    def test_against_combined_oracle(self):
        wp_s, wp_t = self.factors()
        wp = zero_union(wp_s, wp_t, "z")
        oracle = build_oracle(
            Presentation("semigroup", Alphabet(("a", "z", "b")), relations=(
                (("a", "a"), ("a",)), (("b", "b"), ("b",)),
                (("a", "z"), ("z",)), (("z", "a"), ("z",)),
                (("b", "z"), ("z",)), (("z", "b"), ("z",)),
                (("z", "z"), ("z",)),
                (("a", "b"), ("z",)), (("b", "a"), ("z",)))), 4)
        assert verify(wp, oracle, 4) == []

    def test_zero_must_be_shared(self):
        wp_s, wp_t = self.factors()
        with pytest.raises(InputError):
            zero_union(wp_s, wp_t, "a")


class TestProductWithFinite:
    def test_c2_times_fig3(self, c2_table):
        gens = ProductGenerators((("x", "g", "a"), ("y", "g", "b")))
        wp = product_with_finite(c2_table, builtin("fig3"), gens)
        oracle = componentwise_oracle(c2_table, gens, 5)
        assert verify(wp, oracle, 5) == []

    def test_unknown_projection(self, c2_table):
        gens = ProductGenerators((("x", "g", "c"),))
        with pytest.raises(InputError):
            product_with_finite(c2_table, builtin("fig3"), gens)


def componentwise_oracle(table, gens, bound):
    """Equality in S x T componentwise: fold the S-projection in the table
    and look the T-projection up in the fig3 presentation oracle."""
    t_oracle = build_oracle(builtin_presentation("fig3"), bound)
    alphabet = gens.alphabet()
    pi_s, pi_t = gens.pi_s(), gens.pi_t()
    s_map = {c: table.index(e) for c, e in pi_s.items()}
    class_of = {}
    for w in alphabet.words(bound):
        t_word = tuple(pi_t[s] for s in w)
        class_of[w] = (table.fold(w, s_map), t_oracle.class_of[t_word])
    return Oracle(alphabet=alphabet, kind="semigroup", bound=bound,
                  slack=0, class_of=class_of)


class TestMonoidSemigroupChange:
    def test_round_trip(self):
        swp = free_wp(AB)
        mwp = monoid_from_semigroup_wp(swp)
        assert mwp.accepts((), ())
        a_plus = OneTapeAutomaton(
            2, AB, 0, frozenset({1}),
            tuple(NfaTransition(q, s, 1) for q in (0, 1) for s in AB))
        back = intersect_rectangle(mwp, a_plus, a_plus)
        assert enumerate_accepted(back, 5) == enumerate_accepted(swp, 5)

    def test_identity_witness(self):
        # <a | aa = a>: a is an identity of the trivial semigroup
        mwp = monoid_from_semigroup_wp(wp_trivial_a(), ("a",))
        assert mwp.accepts(("a",), ())
        assert mwp.accepts((), ("a", "a"))
        assert mwp.accepts((), ())


class TestBuiltins:
    def test_names(self):
        for name in ("fig1", "fig2", "fig3"):
            assert isinstance(builtin(name), TwoTapeAutomaton)
        assert isinstance(builtin("bicyclic"), Presentation)
        with pytest.raises(InputError):
            builtin("fig9")
