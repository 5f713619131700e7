import pytest

from lingkit.tokens import Location, TaggedToken
from lingkit.tree import Tree, format_tree, height, leaves, parse_tree


def tok(text, i, tag=None):
    return TaggedToken(text, tag, Location(i, i + 1))


def test_leaves_in_order():
    t = Tree("S", (Tree("NP", (tok("the", 0), tok("dog", 1))), Tree("VP", (tok("barks", 2),))))
    assert [x.text for x in leaves(t)] == ["the", "dog", "barks"]


def test_leaves_single_and_nested():
    assert [x.text for x in leaves(Tree("S", (tok("hi", 0),)))] == ["hi"]
    nested = Tree("S", (Tree("NP", (Tree("N", (tok("dog", 0),)),)),))
    assert [x.text for x in leaves(nested)] == ["dog"]


def test_height():
    assert height(tok("dog", 0)) == 1
    assert height(Tree("S", ())) == 1
    # levels: S -> NP -> dog
    assert height(Tree("S", (Tree("NP", (tok("dog", 0),)),))) == 3


def test_locations_must_be_adjacent():
    with pytest.raises(ValueError):
        Tree("S", (tok("a", 0), tok("b", 2)))
    with pytest.raises(ValueError):
        Tree("S", (tok("b", 1), tok("a", 0)))


def test_child_types_checked():
    with pytest.raises(TypeError):
        Tree("S", ("not a child",))


def test_format_and_parse_round_trip():
    text = "(S (NP the/DT dog/NN) (VP barks))"
    t = parse_tree(text)
    assert format_tree(t) == text
    assert [x.text for x in leaves(t)] == ["the", "dog", "barks"]
    assert leaves(t)[0].tag == "DT"
    assert leaves(t)[2].tag is None


def test_parse_tree_errors():
    with pytest.raises(ValueError):
        parse_tree("(S (NP a)")
    with pytest.raises(ValueError):
        parse_tree("(S a) extra")
    with pytest.raises(ValueError):
        parse_tree("word")
