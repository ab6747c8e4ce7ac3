from fractions import Fraction

import pytest

import nalc

WAR_SUPPORT = """\
assert (some Support war_x)(p1) >= 0.6 <= 0.5
assert (some Support war_y)(p2) >= 0.8 <= 0.1
spec war_x < War
spec war_y < War
"""


def test_concepts():
    c = nalc.parse_concept("(not (and A (some R B)))")
    assert str(nalc.nnf(c)) == "(or (not A) (all R (not B)))"
    assert c.depth == 1
    assert nalc.Concept("(and A B)") == nalc.parse_concept("(and  A   B)")
    assert nalc.format_concept("(or A B)") == "(or A B)"


def test_parse_errors():
    with pytest.raises(nalc.ParseError) as err:
        nalc.parse_kb("assert C(a) >= 1.2 <= 0\n")
    assert "1:16: degree-range error" in str(err.value)
    with pytest.raises(ValueError):
        nalc.parse_concept("(and A")


def test_expand_and_entails():
    kb = nalc.parse_kb(WAR_SUPPORT)
    assert kb.expand().assertions == [
        "(some Support (and War war_x*))(p1) >= 0.6 <= 0.5",
        "(some Support (and War war_y*))(p2) >= 0.8 <= 0.1",
    ]
    assert nalc.entails(kb, "(some Support War)(p1) >= 0.6 <= 0.5")
    assert nalc.entails(WAR_SUPPORT, "(some Support War)(p2) >= 0.8 <= 0.1")
    assert not nalc.entails(kb, "(some Support War)(p1) >= 0.7 <= 0.5")
    assert nalc.satisfiable(kb)


def test_bounds_are_fractions():
    kb = nalc.KnowledgeBase(WAR_SUPPORT)
    assert nalc.glb(kb, "(some Support War)(p1)") == (Fraction(3, 5), Fraction(1, 2))
    assert nalc.lub(kb, "(some Support War)(p1)") == (Fraction(1), Fraction(0))
    r = nalc.Reasoner(kb)
    assert r.candidates()[0] == 0 and r.candidates()[-1] == 1
    with pytest.raises(nalc.UnsupportedQuery):
        nalc.lub(kb, "Support(p1,p2)")
    assert nalc.degree(0.6) == Fraction(3, 5)
    assert nalc.degree("1/3") == Fraction(1, 3)


def test_subsumption():
    tbox = nalc.KnowledgeBase("spec A < B\n")
    assert nalc.subsumes(tbox, "A", "B")
    assert not nalc.subsumes(tbox, "B", "A")
    assert nalc.subsumes(tbox, "A", "B", grid=[0, Fraction(1, 3), 1])
