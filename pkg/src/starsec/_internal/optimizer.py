"""WSSR maximization over UAV placement (grid coordinate ascent) and power split (golden-section search)."""
import itertools
import logging
import math
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from joblib import Parallel, delayed

from ..errors import GeometryError, OptimizationError
from ..types import ObjectiveKind, OptimizerSettings, OptResult, Position3D, ScenarioConfig, SearchBox
from .closed_form import ClosedFormModel
from .constants import GOLDEN_RATIO, Messages
from .interfaces import ISecrecyModel
from .monte_carlo import MonteCarloModel

logger = logging.getLogger(__name__)

PositionObjective = Callable[[Position3D], float]
ScalarObjective = Callable[[float], float]

# z is updated first, then x, then y
AXIS_ORDER = ("z", "x", "y")


def grid_axis(lo: float, hi: float, step: float) -> Tuple[float, ...]:
    """Grid ``lo, lo + step, ...`` up to and including ``hi`` (within rounding)."""
    if step <= 0:
        raise OptimizationError(f"grid step must be positive, got {step!r}")
    if lo > hi:
        raise OptimizationError(f"empty grid: {lo!r} > {hi!r}")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return tuple(lo + i * step for i in range(count))


def snap(value: float, axis: Sequence[float]) -> float:
    """Nearest grid value; the smaller one on ties."""
    return min(axis, key=lambda g: (abs(g - value), g))


def _evaluate(objective: PositionObjective, point: Position3D) -> float:
    # placements colocated with a node are infeasible
    try:
        return objective(point)
    except GeometryError:
        return -math.inf


def _evaluate_all(objective: PositionObjective, points: Sequence[Position3D], n_jobs: int) -> List[float]:
    if n_jobs == 1 or len(points) == 1:
        return [_evaluate(objective, p) for p in points]
    values: List[float] = Parallel(n_jobs=n_jobs, prefer="threads")(
        delayed(_evaluate)(objective, p) for p in points
    )
    return values


def _axes(box: SearchBox) -> dict[str, Tuple[float, ...]]:
    return {axis: grid_axis(*box.bounds(axis), box.step) for axis in ("x", "y", "z")}


def snap_to_box(point: Position3D, box: SearchBox) -> Position3D:
    axes = _axes(box)
    return Position3D(x=snap(point.x, axes["x"]), y=snap(point.y, axes["y"]), z=snap(point.z, axes["z"]))


def grid_search_uav(
    cfg: ScenarioConfig,
    zeta: float,
    box: SearchBox,
    settings: OptimizerSettings,
    objective: PositionObjective,
    start: Optional[Position3D] = None,
) -> Position3D:
    """Coordinate ascent over the placement grid at fixed ``zeta``.

    Each sweep scans the z, x and y axes in turn. A move is taken only on
    strict improvement, to the smallest maximizing coordinate. Stops when a
    sweep moves the UAV less than ``eps_position`` or after ``k_max`` sweeps.
    """
    axes = _axes(box)
    current = snap_to_box(start or cfg.uav, box)
    best = _evaluate(objective, current)

    for sweep in range(1, settings.k_max + 1):
        previous = current
        for axis in AXIS_ORDER:
            candidates = [current.replace(**{axis: value}) for value in axes[axis]]
            values = _evaluate_all(objective, candidates, settings.n_jobs)
            idx = int(np.argmax(values))
            if values[idx] > best:
                current, best = candidates[idx], values[idx]
        logger.debug(Messages.GRID_SWEEP, sweep, current.as_tuple(), best)
        moved = math.dist(current.as_tuple(), previous.as_tuple())
        if moved < settings.eps_position:
            logger.debug(Messages.GRID_CONVERGED, sweep, current.as_tuple())
            return current

    logger.warning(Messages.GRID_NOT_CONVERGED, settings.k_max)
    return current


def exhaustive_grid_search(
    box: SearchBox, objective: PositionObjective, n_jobs: int = 1
) -> Tuple[Position3D, float]:
    """Global grid maximum; the lexicographically smallest (x, y, z) wins ties."""
    axes = _axes(box)
    points = [Position3D(x=x, y=y, z=z) for x, y, z in itertools.product(axes["x"], axes["y"], axes["z"])]
    values = _evaluate_all(objective, points, n_jobs)
    idx = int(np.argmax(values))
    return points[idx], values[idx]


def golden_section_bracket(
    objective: ScalarObjective, lo: float, hi: float, eps: float, n_max: int
) -> Tuple[float, float, int]:
    """Shrink ``[lo, hi]`` around a maximum of a unimodal objective.

    Returns the final bracket and the number of iterations; every iteration
    shrinks the bracket by the golden ratio and costs one evaluation.
    """
    a, b = lo, hi
    c = b - GOLDEN_RATIO * (b - a)
    d = a + GOLDEN_RATIO * (b - a)
    fc, fd = objective(c), objective(d)
    iterations = 0
    while b - a > eps and iterations < n_max:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - GOLDEN_RATIO * (b - a)
            fc = objective(c)
        else:
            a, c, fc = c, d, fd
            d = a + GOLDEN_RATIO * (b - a)
            fd = objective(d)
        iterations += 1
    return a, b, iterations


def gss_zeta(objective: ScalarObjective, settings: OptimizerSettings) -> float:
    """Golden-section maximizer of ``objective`` over zeta in [0, 1]."""
    a, b, iterations = golden_section_bracket(objective, 0.0, 1.0, settings.eps_zeta, settings.n_max_gss)
    zeta = 0.5 * (a + b)
    logger.debug(Messages.GSS_DONE, iterations, zeta)
    return zeta


def model_for(settings: OptimizerSettings) -> ISecrecyModel:
    if settings.objective is ObjectiveKind.MONTE_CARLO:
        return MonteCarloModel()
    return ClosedFormModel()


def alternating_optimize(
    cfg: ScenarioConfig,
    box: SearchBox,
    settings: OptimizerSettings,
    model: Optional[ISecrecyModel] = None,
) -> OptResult:
    """Alternate placement and power-split subproblems until WSSR stops improving.

    Starts from the configured UAV snapped to the grid and the configured
    zeta; a candidate replaces the incumbent only if it strictly improves WSSR.
    """
    model = model or model_for(settings)
    cfg = cfg.with_weights(settings.w1, settings.w2)

    uav = snap_to_box(cfg.uav, box)
    zeta = cfg.power.zeta
    best = _evaluate(lambda p: model.wssr(cfg, p, zeta), uav)
    trace: List[Tuple[int, float]] = [(0, best)]

    rounds = 0
    for rounds in range(1, settings.k_max + 1):
        previous = best

        fixed_zeta = zeta
        candidate = grid_search_uav(
            cfg, zeta, box, settings, lambda p: model.wssr(cfg, p, fixed_zeta), start=uav
        )
        value = _evaluate(lambda p: model.wssr(cfg, p, fixed_zeta), candidate)
        if value > best:
            uav, best = candidate, value

        if settings.optimize_zeta:
            fixed_uav = uav
            candidate_zeta = gss_zeta(lambda z: model.wssr(cfg, fixed_uav, z), settings)
            value = model.wssr(cfg, uav, candidate_zeta)
            if value > best:
                zeta, best = candidate_zeta, value

        trace.append((rounds, best))
        logger.info(Messages.AO_ROUND, rounds, uav.as_tuple(), zeta, best)
        if best - previous < settings.eps_position:
            logger.info(Messages.AO_CONVERGED, rounds, best)
            break

    if not math.isfinite(best):
        raise OptimizationError("no feasible UAV placement in the search box")
    return OptResult(uav_star=uav, zeta_star=zeta, wssr_star=best, iterations=rounds, trace=tuple(trace))
