import pytest

from app.config.settings import REPO_ROOT, Settings, settings


def test_defaults():
    assert settings.DEFAULT_RMAX >= 1
    assert settings.SVG_SAMPLES >= 16
    assert (REPO_ROOT / "scenarios" / "g07.toml").exists()
    settings.validate_limits()


@pytest.mark.parametrize(
    "override",
    [{"DEFAULT_RMAX": 0}, {"HORIZON_SLACK": -1}, {"SVG_SAMPLES": 8}],
)
def test_bad_limits_are_rejected(override):
    with pytest.raises(ValueError):
        Settings(**override).validate_limits()
