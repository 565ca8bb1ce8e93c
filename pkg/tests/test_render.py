import xml.etree.ElementTree as ET

from conftest import diagram
from maxtb.front import front_of_diagram
from maxtb.mondrian import iterated_mondrian
from maxtb.render import render_front, render_mondrian, render_stages, render_svg

NS = "{http://www.w3.org/2000/svg}"


def parse(svg):
    return ET.fromstring(svg)


def test_front_svg_has_one_mark_per_crossing(trefoil):
    f, _ = front_of_diagram(trefoil)
    root = parse(render_front(f))
    assert root.tag == NS + "svg"
    assert len(root.findall(".//%scircle" % NS)) == 3
    assert len(root.findall(".//%spath" % NS)) == len(f.events)


def test_mondrian_svg_counts_segments(trefoil):
    im = iterated_mondrian(trefoil)
    root = parse(render_mondrian(im))
    lines = root.findall(".//%sline" % NS)
    assert len(lines) == len(im.diagram.horizontals) + len(im.diagram.verticals)
    assert len(root.findall(".//%srect" % NS)) == im.num_circles
    assert render_svg(im.diagram).count("<line") == len(lines)


def test_stages_and_determinism():
    d = diagram("8_19")
    f, ims = front_of_diagram(d)
    svg = render_stages(ims[0], f)
    assert [g.get("id") for g in parse(svg).iter(NS + "g") if g.get("id")] == ["stage1", "stage2", "stage3"]
    assert render_stages(*[iterated_mondrian(d)], front_of_diagram(d)[0]) == svg
