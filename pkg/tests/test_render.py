import re
from fractions import Fraction

import pytest

from timed_plactic import RenderSpec, letter_color, render_svg, timed_insertion_tableau
from timed_plactic.render import PALETTE, _px

from conftest import BIG_TIMED_WORD_TEXT, tw


class TestRenderSpec:
    def test_defaults(self):
        spec = RenderSpec()
        assert spec.target == "ribbon"
        assert spec.unit_scale == 100

    def test_validation(self):
        with pytest.raises(ValueError):
            RenderSpec(target="pie")
        with pytest.raises(ValueError):
            RenderSpec(unit_scale=0)

    def test_palette_cycles(self):
        assert letter_color(1) == PALETTE[0]
        assert letter_color(13) == PALETTE[0]
        assert letter_color(2) != letter_color(3)


class TestPixelFormatting:
    def test_exact_six_digit_decimals(self):
        assert _px(Fraction(41, 50)) == "0.82"
        assert _px(Fraction(1)) == "1"
        assert _px(Fraction(1, 3)) == "0.333333"


class TestRibbon:
    def test_single_run_single_rect(self):
        svg = render_svg(tw("3^1"))
        assert svg.count("<rect") == 1
        assert 'width="100"' in svg

    def test_widths_exactly_proportional(self):
        w = tw(BIG_TIMED_WORD_TEXT)
        svg = render_svg(w)
        widths = re.findall(r'<rect x="[^"]+" y="\d+" width="([0-9.]+)"', svg)
        assert widths == [_px(dur * 100) for _, dur in w.runs]

    def test_deterministic(self):
        w = tw(BIG_TIMED_WORD_TEXT)
        assert render_svg(w).encode() == render_svg(w).encode()


class TestTableauRendering:
    def test_stacked_strips(self):
        t = timed_insertion_tableau(tw(BIG_TIMED_WORD_TEXT))
        svg = render_svg(t)
        # one strip per row, stacked top first at multiples of the row height
        for i in range(len(t.rows)):
            assert f'y="{i * 40}"' in svg
        widths = re.findall(r'<rect x="[^"]+" y="\d+" width="([0-9.]+)"', svg)
        expected = [_px(dur * 100) for row in t.rows for _, dur in row.runs]
        assert widths == expected

    def test_target_mismatch_rejected(self):
        with pytest.raises(ValueError):
            render_svg(tw("1^1"), RenderSpec(target="tableau"))

    def test_non_renderable_rejected(self):
        with pytest.raises(TypeError):
            render_svg("3^1")
