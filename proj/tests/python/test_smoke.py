import json
import math
import os
import subprocess

import pytest

import conicfx


def test_fixed_point_basics():
    assert conicfx.from_float(1.0) == 65536
    assert conicfx.from_float(2 * math.pi) == 411774
    assert conicfx.FIX_2PI == 411775
    assert conicfx.shr(-1, 1) == -1
    assert conicfx.to_float(-32768) == -0.5


def test_generators():
    assert conicfx.circle_step_forward(65536, 0, 0) == (65536, 65536)
    assert conicfx.circle_step_forward(65536, 0, 4) == (65536, 4096)
    assert conicfx.circle_step_reverse(0, 65536, 0) == (65536, 65536)
    assert conicfx.hyper_step_forward(65536, 0, 0) == (65536, 65536)
    u, v = conicfx.circle_step_forward(12345, -6789, 3)
    assert conicfx.circle_step_reverse(u, v, 3) == (12345, -6789)
    assert conicfx.initial_value(65536, 0, 3) == 65408
    assert conicfx.initial_value(0, 65536, 1) == 16384


def test_flatness_helpers():
    assert conicfx.vlen(4, 3) == 5
    assert conicfx.aux_radius((100, 0), (0, 100)) == 106.25
    assert conicfx.aux_radius_exact((300, 0), (0, 100)) == pytest.approx(300)
    info = conicfx.angular_inc((100, 0), (0, 100), 0.25)
    assert info == {"k": 3, "radius": 106.25, "capped": False}
    assert conicfx.kmax_for(5000, 0.25) == 6


def test_plot_ellipse_circle():
    pts = conicfx.plot_ellipse((200, 200), (300, 200), (200, 300), flatness=0.25)
    assert len(pts) == 51
    assert pts[0] == (300.0, 200.0)
    for x, y in pts:
        assert abs(math.hypot(x - 200, y - 200) - 100) < 0.01
    raw = conicfx.plot_ellipse((200, 200), (300, 200), (200, 300), k=4, raw=True)
    assert len(raw) == 101
    assert raw[0] == (300 * 65536, 200 * 65536)


def test_arc_and_mirror():
    full = conicfx.plot_ellipse((500, 500), (700, 520), (480, 600), k=5)
    arc = conicfx.plot_elliptic_arc((500, 500), (700, 520), (480, 600), 0.0, 2 * math.pi, k=5)
    assert arc[:-1] == full
    neg = conicfx.plot_elliptic_arc((500, 500), (700, 520), (480, 600), 0.0, -1.0, k=5)
    flipped = conicfx.plot_elliptic_arc((500, 500), (700, 520), (520, 400), 0.0, 1.0, k=5)
    assert neg == flipped


def test_hyperbola():
    assert conicfx.plot_hyperbolic_arc((100, 100), (140, 100), (100, 130), 0.0, 0.0, k=5) == [(140.0, 100.0)]
    pts = conicfx.plot_hyperbolic_arc((1000, 1000), (1100, 1000), (1000, 1100), -0.5, 1.0, k=6)
    for x, y in pts:
        xs, ys = (x - 1000) / 100, (y - 1000) / 100
        assert abs(xs * xs - ys * ys - 1) < 1e-4


def test_conversions():
    c = conicfx.implicit_from_conjugate((3, 0), (0, 2))
    assert (c.a, c.b, c.c, c.f) == (4, 0, 9, -36)
    assert conicfx.calibration_number(c) == 1.0

    placed = conicfx.implicit_from_ellipse((3, -7), (5, 1), (-2, 4))
    back = conicfx.ellipse_from_implicit(placed)
    assert back["center"] == pytest.approx((3, -7))
    again = conicfx.implicit_from_conjugate(back["p"], back["q"])
    assert conicfx.coefficient_distance(again, conicfx.implicit_from_conjugate((5, 1), (-2, 4))) < 1e-9

    shifted, center = conicfx.translate_to_origin(conicfx.ImplicitConic(1, 0, 1, -2, 0, 0))
    assert center == pytest.approx((1, 0))
    assert shifted.f == pytest.approx(-1)

    scaled = conicfx.ImplicitConic(16, 0, 36, 0, 0, -144)
    assert conicfx.ellipse_from_implicit(scaled)["p"] == pytest.approx((3, 0))
    with pytest.raises(conicfx.ConicError) as err:
        conicfx.ellipse_from_implicit(scaled, strict=True)
    assert err.value.args[0] == "not_calibrated"


def test_errors_carry_codes():
    with pytest.raises(conicfx.ConicError) as err:
        conicfx.plot_ellipse((10, 10), (100, 50), (190, 90), k=3)
    assert err.value.args[0] == "degenerate"
    assert isinstance(err.value, ValueError)
    with pytest.raises(conicfx.ConicError) as err:
        conicfx.plot_elliptic_arc((10, 10), (100, 10), (10, 100), 0.0, 7.0, k=3)
    assert err.value.args[0] == "sweep_out_of_range"
    with pytest.raises(conicfx.ConicError) as err:
        conicfx.circle_step_forward(1, 1, 16)
    assert err.value.args[0] == "invalid_step"


@pytest.mark.skipif("CONICFX_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_matches_module():
    out = subprocess.run(
        [os.environ["CONICFX_CLI"], "ellipse", "--center", "200,200", "--p", "300,200", "--q", "200,300",
         "--format", "json"],
        check=True, capture_output=True, text=True,
    ).stdout
    doc = json.loads(out)
    pts = conicfx.plot_ellipse((200, 200), (300, 200), (200, 300), flatness=0.25, raw=True)
    assert [tuple(p) for p in doc["raw"]] == pts
