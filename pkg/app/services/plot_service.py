"""
PlotService: (alpha, beta)-plane diagrams of walls, nu = 0 curves and holes
"""

from typing import Any, List, Optional, Tuple

from sympy import Rational, cos, pi, sin, sqrt

from app.api.schemas.scenario_schemas import ScenarioConfig
from app.config.settings import settings
from app.models.errors import ScenarioConfigError
from app.models.plot import ElementKind, PlotElement, PlotSpec
from app.models.scenario import ScenarioContext
from app.models.walls import NuCurveShape, WallKind
from app.services.lattice_service import LatticeService
from app.services.scenario_service import ScenarioService
from app.services.wall_service import WallService
from app.utils.rational_utils import format_rational, to_rational
from app.utils.svg_builder import SVG

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"]
MARGIN = 40

Point = Tuple[Any, Any]


class _Canvas:
    """Maps exact plane coordinates (beta, alpha) to pixels"""

    def __init__(self, spec: PlotSpec):
        self.spec = spec
        self.width = settings.SVG_WIDTH
        self.height = settings.SVG_HEIGHT

    def inside(self, beta: Any, alpha: Any) -> bool:
        spec = self.spec
        return bool(spec.beta_min <= beta <= spec.beta_max and 0 <= alpha <= spec.alpha_max)

    def px(self, beta: Any, alpha: Any) -> Point:
        spec = self.spec
        x = MARGIN + (beta - spec.beta_min) / (spec.beta_max - spec.beta_min) * (self.width - 2 * MARGIN)
        y = self.height - MARGIN - alpha / spec.alpha_max * (self.height - 2 * MARGIN)
        return (x, y)

    def runs(self, points: List[Point]) -> List[List[Point]]:
        """Split sampled points into visible runs; outside points are clipped"""
        result: List[List[Point]] = []
        current: List[Point] = []
        for beta, alpha in points:
            if alpha is not None and self.inside(beta, alpha):
                current.append(self.px(beta, alpha))
                continue
            if len(current) > 1:
                result.append(current)
            current = []
        if len(current) > 1:
            result.append(current)
        return result


class PlotService:
    """Builds plot specs from scenarios and renders them as SVG"""

    @staticmethod
    def build_spec(config: ScenarioConfig, ctx: ScenarioContext) -> PlotSpec:
        if config.plot is None:
            raise ScenarioConfigError(f"genus {config.genus} scenario has no [plot] section")
        plot = config.plot
        elements: List[PlotElement] = []
        colors = iter(PALETTE * 4)

        for wall_id in plot.walls:
            wall = ctx.wall(wall_id)
            elements.append(
                PlotElement(kind=ElementKind.WALL, label=f"W_{wall_id}", color=next(colors), wall=wall)
            )
        for label in plot.nu_curves:
            curve = WallService.nu_zero_curve(ctx.vector(label))
            elements.append(
                PlotElement(
                    kind=ElementKind.NU_CURVE, label=f"H_{label}", color=next(colors), dashed=True, curve=curve
                )
            )
        if plot.holes:
            for wall_id in plot.walls:
                for hole in WallService.holes_on_wall(ctx.wall(wall_id), config.hole_rmax):
                    label = LatticeService.find_label(ctx.classes, hole.delta) or str(hole.delta)
                    elements.append(PlotElement(kind=ElementKind.HOLE, label=label, hole=hole))
        for text in plot.vertical_lines:
            beta = to_rational(text)
            elements.append(
                PlotElement(
                    kind=ElementKind.VERTICAL_LINE,
                    label=f"β={format_rational(beta)}",
                    color="#7f7f7f",
                    dashed=True,
                    beta=beta,
                )
            )

        return PlotSpec(
            beta_min=plot.beta_min,
            beta_max=plot.beta_max,
            alpha_max=plot.alpha_max,
            elements=elements,
            samples_per_curve=settings.SVG_SAMPLES,
        )

    @staticmethod
    def render_scenario(config: ScenarioConfig) -> str:
        """SVG diagram of a scenario's [plot] section"""
        ctx = ScenarioService.build_context(config)
        return PlotService.render_svg(PlotService.build_spec(config, ctx))

    @staticmethod
    def _wall_points(element: PlotElement, samples: int) -> List[Point]:
        wall = element.wall
        radius = sqrt(wall.radius_sq)
        steps = samples - 1
        return [
            (wall.center_beta + radius * cos(pi * i / steps), radius * sin(pi * i / steps))
            for i in range(samples)
        ]

    @staticmethod
    def _curve_points(element: PlotElement, spec: PlotSpec) -> List[Point]:
        curve = element.curve
        steps = spec.samples_per_curve - 1
        points: List[Point] = []
        for i in range(spec.samples_per_curve):
            beta = spec.beta_min + (spec.beta_max - spec.beta_min) * Rational(i, steps)
            alpha_sq = (curve.beta_sq * beta**2 + curve.beta_lin * beta + curve.const) / Rational(-curve.alpha_sq)
            points.append((beta, sqrt(alpha_sq) if alpha_sq >= 0 else None))
        return points

    @staticmethod
    def render_svg(spec: PlotSpec) -> str:
        """SVG 1.1 document; deterministic for identical specs"""
        canvas = _Canvas(spec)
        svg = SVG()
        svg.header(canvas.width, canvas.height)

        svg.group_start("axes")
        svg.line(canvas.px(spec.beta_min, 0), canvas.px(spec.beta_max, 0), "#000000")
        svg.line(canvas.px(spec.beta_min, 0), canvas.px(spec.beta_min, spec.alpha_max), "#000000")
        left = canvas.px(spec.beta_min, 0)
        right = canvas.px(spec.beta_max, 0)
        svg.text((left[0], left[1] + 16), format_rational(spec.beta_min), anchor="middle")
        svg.text((right[0], right[1] + 16), format_rational(spec.beta_max), anchor="middle")
        svg.text((right[0] + 8, right[1] + 4), "β")
        top = canvas.px(spec.beta_min, spec.alpha_max)
        svg.text((top[0] - 14, top[1] + 4), "α")
        svg.group_end()

        for element in spec.elements:
            PlotService._render_element(svg, canvas, element)
        return svg.get_svg()

    @staticmethod
    def _render_element(svg: SVG, canvas: _Canvas, element: PlotElement) -> None:
        spec = canvas.spec
        dash = "6,4" if element.dashed else ""
        svg.group_start(element.kind.value, element.label)
        label_at: Optional[Point] = None

        if element.kind is ElementKind.WALL:
            wall = element.wall
            if wall.kind is WallKind.SEMICIRCLE:
                for run in canvas.runs(PlotService._wall_points(element, spec.samples_per_curve)):
                    svg.polyline(run, element.color, dash=dash)
                if canvas.inside(wall.center_beta, sqrt(wall.radius_sq)):
                    label_at = canvas.px(wall.center_beta, sqrt(wall.radius_sq))
            elif wall.kind is WallKind.VERTICAL and spec.beta_min <= wall.line_beta <= spec.beta_max:
                svg.line(canvas.px(wall.line_beta, 0), canvas.px(wall.line_beta, spec.alpha_max), element.color)
                label_at = canvas.px(wall.line_beta, spec.alpha_max)

        elif element.kind is ElementKind.NU_CURVE:
            curve = element.curve
            if curve.shape is NuCurveShape.VERTICAL_LINE:
                beta = Rational(-curve.const, curve.beta_lin)
                if spec.beta_min <= beta <= spec.beta_max:
                    svg.line(canvas.px(beta, 0), canvas.px(beta, spec.alpha_max), element.color, dash=dash)
                    label_at = canvas.px(beta, spec.alpha_max)
            elif curve.shape is not NuCurveShape.EMPTY:
                runs = canvas.runs(PlotService._curve_points(element, spec))
                for run in runs:
                    svg.polyline(run, element.color, dash=dash)
                if runs:
                    label_at = runs[-1][-1]

        elif element.kind is ElementKind.HOLE:
            point = element.hole.point
            alpha = sqrt(point.alpha_sq)
            if canvas.inside(point.beta, alpha):
                center = canvas.px(point.beta, alpha)
                svg.punctured_marker(center, 4, "#000000")
                label_at = (center[0] + 6, center[1] - 6)

        elif element.kind is ElementKind.VERTICAL_LINE:
            if spec.beta_min <= element.beta <= spec.beta_max:
                svg.line(canvas.px(element.beta, 0), canvas.px(element.beta, spec.alpha_max), element.color, dash=dash)
                label_at = canvas.px(element.beta, spec.alpha_max)

        if label_at is not None and element.label:
            svg.text((label_at[0] + 4, label_at[1] - 4), element.label, size=11)
        svg.group_end()
