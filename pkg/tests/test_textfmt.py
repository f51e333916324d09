import pytest

from a2braid.coefficients import ONE, qnum
from a2braid.webs import DiagramError, Strip, format_diagram, parse_diagram, reduce_element
from a2braid.webs.moves import reidemeister_catalogue
from a2braid.webs.oracle import basis_web, braid_web

CIRCLE = """
# a single oriented loop
V 0 bd 1
V 2 bd 3
E 1 3
"""

THETA = """
V 0 src 1 2 3
V 4 snk 5 6 7
E 1 5
E 2 7
E 3 6
"""


def test_theta_text():
    w = parse_diagram(THETA)
    assert reduce_element([(ONE, w)]).scalar() == qnum(3) * qnum(2)


@pytest.mark.parametrize("w", [Strip(["u", "d"]).cross(0).close(), basis_web(1, 2, (1,)),
                               braid_web(1, 2, [(1, 1), (2, -1)])])
def test_round_trip(w):
    u = parse_diagram(format_diagram(w))
    assert reduce_element([(ONE, u)]) == reduce_element([(ONE, w)])
    assert format_diagram(u) == format_diagram(w)


def test_catalogue_round_trips():
    for _, lhs, _ in reidemeister_catalogue():
        assert reduce_element([(ONE, parse_diagram(format_diagram(lhs)))]) == reduce_element([(ONE, lhs)])


@pytest.mark.parametrize("text,msg", [
    ("V 0 src 1 2", "needs 3"),
    ("V 0 foo 1", "unknown vertex kind"),
    ("Q 1", "unknown record"),
    ("V 0 bd 1\nV 0 bd 2\nE 1 2", "used twice"),
    ("V 0 src 1 2 3", "without an edge"),
    ("X 0 1 2 3 4 over 1 2", "opposite"),
    ("V 0 bd 1\nV 2 bd 3\nE 1 3\nBOTTOM 0:-", "disagrees"),
    ("V 0 bd 1\nV 2 bd 3\nE 1 3\nBOTTOM 0:+", "not on BOTTOM or TOP"),
])
def test_parse_errors(text, msg):
    with pytest.raises(DiagramError, match=msg):
        parse_diagram(text)
