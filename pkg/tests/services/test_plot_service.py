import pytest

from app.models.errors import ScenarioConfigError
from app.services.plot_service import PlotService
from app.services.scenario_service import ScenarioService


def _config(genus):
    return ScenarioService.load_config(ScenarioService.scenario_path(genus))


def test_genus_7_diagram():
    svg = PlotService.render_scenario(_config(7))

    assert svg.startswith('<?xml version="1.0"')
    assert svg.rstrip().endswith("</svg>")
    assert '<g class="wall">' in svg
    assert "<title>W_W</title>" in svg
    assert "<title>G</title>" in svg
    assert "β=-3/7" in svg
    assert "<circle" in svg


def test_genus_11_diagram_shows_both_walls():
    svg = PlotService.render_scenario(_config(11))

    assert "<title>W_W</title>" in svg
    assert "<title>W_W_bar</title>" in svg
    assert svg.count("<polyline") >= 2


def test_rendering_is_deterministic():
    config = _config(7)
    assert PlotService.render_scenario(config) == PlotService.render_scenario(config)


def test_scenario_without_plot_section():
    with pytest.raises(ScenarioConfigError):
        PlotService.render_scenario(_config(8))
