import os
from pathlib import Path

from dotenv import load_dotenv
from pydantic_settings import BaseSettings

# Load environment variables
load_dotenv()

REPO_ROOT = Path(__file__).resolve().parents[2]


class Settings(BaseSettings):
    LOG_LEVEL: str = os.getenv("K3WALLS_LOG_LEVEL", "warning")

    # Search horizons
    DEFAULT_RMAX: int = int(os.getenv("K3WALLS_DEFAULT_RMAX", "20"))
    HORIZON_SLACK: int = int(os.getenv("K3WALLS_HORIZON_SLACK", "2"))

    # Scenario corpus
    SCENARIO_DIR: str = str(REPO_ROOT / "scenarios")

    # SVG rendering
    SVG_WIDTH: int = 800
    SVG_HEIGHT: int = 480
    SVG_SAMPLES: int = 64
    SVG_DIGITS: int = 12

    model_config = {"extra": "ignore"}

    def validate_limits(self) -> None:
        """Reject search and rendering limits that cannot work"""
        if self.DEFAULT_RMAX < 1:
            raise ValueError("K3WALLS_DEFAULT_RMAX must be at least 1")

        if self.HORIZON_SLACK < 0:
            raise ValueError("K3WALLS_HORIZON_SLACK must be non-negative")

        if self.SVG_SAMPLES < 16:
            raise ValueError("SVG_SAMPLES must be at least 16")


settings = Settings()
