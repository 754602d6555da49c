import pytest

from ratwp import (
    Alphabet,
    IdealData,
    InputError,
    MultiplicationTable,
    Presentation,
    ProductGenerators,
    RelationSchema,
)


class TestRelationSchema:
    def test_expansion(self):
        schema = RelationSchema(
            lhs=(("a", 1), ("b", "n"), ("a", 1)),
            rhs=(("a", 1), ("b", 1), ("a", 1)),
            var="n", lo=2, hi=3)
        assert schema.expand() == [
            (("a", "b", "b", "a"), ("a", "b", "a")),
            (("a", "b", "b", "b", "a"), ("a", "b", "a")),
        ]

    def test_expand_with_override(self):
        schema = RelationSchema(
            lhs=(("a", "n"),), rhs=(("a", 1),), var="n", lo=2, hi=10)
        assert len(schema.expand(4)) == 3


class TestPresentation:
    def test_semigroup_rejects_empty_side(self):
        with pytest.raises(InputError):
            Presentation("semigroup", Alphabet(("a",)),
                         relations=((("a",), ()),))

    def test_monoid_allows_empty_side(self):
        p = Presentation("monoid", Alphabet(("b", "c")),
                         relations=((("b", "c"), ()),))
        assert p.expanded_relations() == [(("b", "c"), ())]

    def test_unknown_symbol(self):
        with pytest.raises(InputError):
            Presentation("semigroup", Alphabet(("a",)),
                         relations=((("a",), ("z",)),))

    def test_unknown_kind(self):
        with pytest.raises(InputError):
            Presentation("group", Alphabet(("a",)))


class TestMultiplicationTable:
    def test_identity_and_zero_detection(self):
        c2 = MultiplicationTable(("1", "g"), ((0, 1), (1, 0)))
        assert c2.identity_index() == 0
        assert c2.zero_index() is None
        with_zero = MultiplicationTable(("a", "z"), ((0, 1), (1, 1)))
        assert with_zero.zero_index() == 1

    def test_rejects_non_associative(self):
        with pytest.raises(InputError):
            MultiplicationTable(("a", "b"), ((1, 0), (0, 0)))

    def test_rejects_bad_shape(self):
        with pytest.raises(InputError):
            MultiplicationTable(("a", "b"), ((0, 1),))
        with pytest.raises(InputError):
            MultiplicationTable(("a",), ((3,),))

    def test_fold(self):
        c2 = MultiplicationTable(("1", "g"), ((0, 1), (1, 0)))
        assert c2.fold(("g", "g"), {"g": 1}) == 0
        assert c2.fold(("g", "g", "g"), {"g": 1}) == 1
        with pytest.raises(InputError):
            c2.fold((), {"g": 1})

    def test_closure(self):
        c2 = MultiplicationTable(("1", "g"), ((0, 1), (1, 0)))
        assert c2.closure_of({1}) == {0, 1}


class TestIdealData:
    def good(self):
        return IdealData(
            elements=("u", "v"), base_symbols=("a",),
            left_action={("a", "u"): "u", ("a", "v"): "v"},
            right_action={("u", "a"): "u", ("v", "a"): "v"},
            internal={("u", "u"): "u", ("u", "v"): "u",
                      ("v", "u"): "v", ("v", "v"): "v"})

    def test_valid(self):
        data = self.good()
        assert data.left_transformation("a") == (0, 1)

    def test_missing_action(self):
        with pytest.raises(InputError):
            IdealData(
                elements=("u",), base_symbols=("a",),
                left_action={}, right_action={("u", "a"): "u"},
                internal={("u", "u"): "u"})

    def test_escaping_product(self):
        with pytest.raises(InputError):
            IdealData(
                elements=("u",), base_symbols=("a",),
                left_action={("a", "u"): "a"},
                right_action={("u", "a"): "u"},
                internal={("u", "u"): "u"})

    def test_fresh_symbols_required(self):
        with pytest.raises(InputError):
            IdealData(
                elements=("a",), base_symbols=("a",),
                left_action={("a", "a"): "a"},
                right_action={("a", "a"): "a"},
                internal={("a", "a"): "a"})


class TestProductGenerators:
    def test_projections(self):
        gens = ProductGenerators((("x", "g", "a"), ("y", "g", "b")))
        assert gens.alphabet().symbols == ("x", "y")
        assert gens.pi_s() == {"x": "g", "y": "g"}
        assert gens.pi_t() == {"x": "a", "y": "b"}

    def test_duplicate_names(self):
        with pytest.raises(InputError):
            ProductGenerators((("x", "g", "a"), ("x", "1", "b")))
