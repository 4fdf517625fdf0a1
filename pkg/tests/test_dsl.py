import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from residchain import catalog
from residchain.bunch import Xi, validate_bunch_groups
from residchain.dsl import BunchDocument, DslError, document_from_bunch, parse_bunch_dsl, print_bunch_dsl

MIXED = """\
# two layers over Z
xi = O
kappa = [t, u, v]
class u = I     # split layer
class v = J
group t = Z^1
group u = Z^2
group v = Z^1
subgroup u = prefix 1
hom t->u = matrix [[1],[0]]
hom u->v = truncate 1
"""


def test_parse_example():
    doc = parse_bunch_dsl(MIXED)
    assert doc.xi is Xi.O and doc.kappa == ["t", "u", "v"]
    assert doc.classes == {"u": "I", "v": "J"}
    assert doc.groups == {"t": 1, "u": 2, "v": 1}
    assert doc.subgroups == {"u": ("prefix", 1)}
    assert doc.homs[("t", "u")] == ("matrix", ((1,), (0,)))
    assert doc.where[("hom", "u", "v")] == 11


def test_missing_hom_is_filled_by_composition():
    b = parse_bunch_dsl(MIXED).to_bunch()
    h = b.homs["t", "v"]
    for x in range(-4, 5):
        assert h((x,)) == (x,)
    assert validate_bunch_groups(b, samples=100).ok


def test_missing_hom_without_intermediate():
    text = "xi = O\nkappa = [t, u]\nclass u = J\ngroup t = Z^1\ngroup u = Z^1\n"
    with pytest.raises(DslError, match="no hom t->u"):
        parse_bunch_dsl(text).to_bunch()


@pytest.mark.parametrize("text,line,col,msg", [
    ("xi = O\nkappa = [t]\ngroup t = Q^1\n", 3, 1, "cannot parse"),
    ("xi = X\n", 1, 6, "xi must be"),
    ("xi = O\nxi = O\n", 2, 1, "duplicate xi"),
    ("kappa = [t, u]\nclass u = K\n", 2, 11, "class must be"),
    ("kappa = [t]\n  group w = Z^1\n", 2, 9, "unknown label 'w'"),
    ("kappa = [t, u]\nhom u->t = trivial\n", 2, 5, "non-increasing pair u->t"),
    ("kappa = [t, u]\nhom t->u = rotate\n", 2, 12, "unknown hom spec"),
    ("kappa = [t, u]\nhom t->u = matrix [[1.5]]\n", 2, 12, "integer rows"),
    ("kappa = [t, 1u]\n", 1, 10, "bad label"),
])
def test_errors_carry_position(text, line, col, msg):
    with pytest.raises(DslError, match=msg) as ei:
        parse_bunch_dsl(text)
    assert (ei.value.line, ei.value.col) == (line, col)
    assert str(ei.value).startswith(f"line {line}, col {col}: ")


@pytest.mark.parametrize("text,msg", [
    ("kappa = [t]\ngroup t = Z^1\n", "missing 'xi"),
    ("xi = O\nkappa = [t]\n", "no 'group t"),
    ("xi = O\nkappa = [t, u]\nclass u = I\ngroup t = Z^1\ngroup u = Z^1\nhom t->u = identity\n", "needs a 'subgroup"),
    ("xi = O\nkappa = [t]\ngroup t = Z^1\nsubgroup t = prefix 3\n", "prefix"),
    ("xi = O\nkappa = [t, u]\nclass u = J\ngroup t = Z^1\ngroup u = Z^2\nhom t->u = matrix [[1]]\n", "hom t->u"),
])
def test_build_errors(text, msg):
    with pytest.raises(DslError, match=msg):
        parse_bunch_dsl(text).to_bunch()


def test_print_is_canonical():
    doc = parse_bunch_dsl(MIXED)
    text = print_bunch_dsl(doc)
    assert text.splitlines()[:3] == ["xi = O", "kappa = [t, u, v]", "class u = I"]
    assert "hom t->u = matrix [[1],[0]]" in text
    assert print_bunch_dsl(parse_bunch_dsl(text)) == text


@pytest.mark.parametrize("name", sorted(catalog.catalog_bunches()))
def test_catalog_bunches_survive_printing(name):
    b = catalog.catalog_bunches()[name]
    doc = document_from_bunch(b)
    assert parse_bunch_dsl(print_bunch_dsl(doc)) == doc


labels = st.lists(st.from_regex(r"[a-z][a-z0-9]{0,3}", fullmatch=True), min_size=1, max_size=4, unique=True)


@st.composite
def documents(draw):
    kappa = draw(labels)
    doc = BunchDocument(xi=draw(st.sampled_from(list(Xi))), kappa=kappa)
    for u in kappa[1:]:
        doc.classes[u] = draw(st.sampled_from("IJ"))
    for u in kappa:
        if draw(st.booleans()):
            doc.groups[u] = draw(st.integers(0, 3))
        if draw(st.booleans()):
            doc.subgroups[u] = draw(st.sampled_from([("full", None), ("trivial", None), ("prefix", 1)]))
    for i, u in enumerate(kappa):
        for v in kappa[i + 1:]:
            if draw(st.booleans()):
                doc.homs[u, v] = draw(st.sampled_from([
                    ("trivial", None), ("identity", None), ("truncate", 1), ("matrix", ((1, 0), (2, -3)))]))
    return doc


@settings(max_examples=150, deadline=None)
@given(documents())
def test_parse_print_round_trip(doc):
    text = print_bunch_dsl(doc)
    parsed = parse_bunch_dsl(text)
    assert parsed == doc
    assert parse_bunch_dsl(print_bunch_dsl(parsed)) == parsed
