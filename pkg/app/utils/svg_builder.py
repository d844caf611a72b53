"""
Minimal SVG 1.1 text emitter.

Coordinates may be exact sympy expressions; they are turned into decimals
only here, with a fixed number of significant digits.
"""

from typing import Any, Iterable, Tuple
from xml.sax.saxutils import escape

from app.config.settings import settings
from app.utils.rational_utils import decimal_text

Point = Tuple[Any, Any]


class SVG:
    def __init__(self, digits: int = settings.SVG_DIGITS):
        self.digits = digits
        self.svg = ""

    def num(self, value: Any) -> str:
        return decimal_text(value, self.digits)

    def header(self, width: int, height: int) -> None:
        self.svg += f"""<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}" xmlns="http://www.w3.org/2000/svg">
<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>
"""

    def group_start(self, css_class: str, title: str = "") -> None:
        self.svg += f'<g class="{escape(css_class)}">\n'
        if title:
            self.svg += f"<title>{escape(title)}</title>\n"

    def group_end(self) -> None:
        self.svg += "</g>\n"

    def polyline(self, points: Iterable[Point], stroke: str, width: float = 1.5, dash: str = "") -> None:
        coords = " ".join(f"{self.num(x)},{self.num(y)}" for x, y in points)
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        self.svg += (
            f'<polyline points="{coords}" fill="none" stroke="{stroke}" '
            f'stroke-width="{width}"{extra}/>\n'
        )

    def line(self, start: Point, end: Point, stroke: str, width: float = 1.0, dash: str = "") -> None:
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        self.svg += (
            f'<line x1="{self.num(start[0])}" y1="{self.num(start[1])}" '
            f'x2="{self.num(end[0])}" y2="{self.num(end[1])}" stroke="{stroke}" '
            f'stroke-width="{width}"{extra}/>\n'
        )

    def punctured_marker(self, center: Point, radius: float, stroke: str) -> None:
        """Hollow circle marking a removed point"""
        self.svg += (
            f'<circle cx="{self.num(center[0])}" cy="{self.num(center[1])}" r="{radius}" '
            f'fill="#ffffff" stroke="{stroke}" stroke-width="1.5"/>\n'
        )

    def text(self, position: Point, string: str, size: int = 12, anchor: str = "start") -> None:
        self.svg += (
            f'<text x="{self.num(position[0])}" y="{self.num(position[1])}" '
            f'font-family="serif" font-size="{size}" text-anchor="{anchor}">{escape(string)}</text>\n'
        )

    def get_svg(self) -> str:
        return f"{self.svg}</svg>\n"
