import re

from cqsext.divisors import class_divisor
from cqsext.lattice import make_cqs
from cqsext.render import render

C73 = make_cqs(7, 3)


def test_below_e3_has_dent_and_open_edges():
    tikz = render(C73, "below", class_divisor(3), "tikz")
    # two x-slabs: the region steps down at the middle generator
    assert tikz.count("\\fill[red!20]") == 2
    assert "\\draw[red, thick, dashed] (3,1.2857) -- (4,1.7143);" in tikz
    assert "\\draw[red, thick, dashed] (3,1.2857) -- (3,2);" in tikz
    # boundaries along the generator cones belong to the region
    assert "\\draw[red, thick] (3,2) -- (4,2.4286);" in tikz
    # lattice point (4,2) of the region is marked
    assert "\\fill[blue] (4,2)" in tikz


def test_empty_region_draws_only_cone():
    svg = render(C73, "below", class_divisor(0), "svg")
    assert "<polygon" not in svg
    assert svg.count('stroke="#000000"') == 2


def test_polyhedron_of_canonical_divisor():
    tikz = render(C73, "polyhedron", (-1, -1), "tikz")
    assert "vertex (1,4/7)" in tikz
    assert "(1,0.5714)" in tikz


def test_link_includes_degenerate_column():
    tikz = render(C73, "link", class_divisor(3), "tikz")
    assert "(4,2) -- (4,2.4286)" in tikz


def test_svg_coordinates_flip_second_axis():
    svg = render(C73, "below", class_divisor(3), "svg", scale=20)
    m = re.search(r'viewBox="0 0 (\d+) (\d+)"', svg)
    assert m and int(m.group(1)) % 20 == 0 and int(m.group(2)) % 20 == 0


def test_render_deterministic():
    for kind in ("polyhedron", "below", "abelow", "link"):
        assert render(C73, kind, (-5, -2), "svg") == render(C73, kind, (-5, -2), "svg")
