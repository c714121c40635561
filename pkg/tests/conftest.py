from pathlib import Path
from typing import Callable, Sequence, Tuple

import numpy as np
import pytest

from starsec import load_config
from starsec.types import NodeLayout, Position3D, ScenarioConfig

SCENARIO = Path(__file__).resolve().parents[1] / "scenarios" / "paper_sec5.cfg"

Point = Tuple[float, float, float]


def pos(x: float, y: float, z: float) -> Position3D:
    return Position3D(x=x, y=y, z=z)


@pytest.fixture(scope="session")
def scenario_path() -> Path:
    return SCENARIO


@pytest.fixture(scope="session")
def cfg() -> ScenarioConfig:
    return load_config(SCENARIO)


@pytest.fixture()
def small_cfg(cfg: ScenarioConfig) -> ScenarioConfig:
    return cfg.with_mc(trials=20_000)


@pytest.fixture()
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture()
def scenario_text() -> str:
    return SCENARIO.read_text(encoding="utf-8")


@pytest.fixture()
def make_layout() -> Callable[..., NodeLayout]:
    def _make(
        reflect_users: Sequence[Point] = ((1.0, 1.0, 0.0),),
        transmit_users: Sequence[Point] = ((-1.0, -1.0, 0.0),),
        reflect_eves: Sequence[Point] = ((2.0, 2.0, 0.0),),
        transmit_eves: Sequence[Point] = ((-2.0, -2.0, 0.0),),
        bs: Point = (5.0, 5.0, 5.0),
    ) -> NodeLayout:
        return NodeLayout(
            bs=pos(*bs),
            reflect_users=tuple(pos(*p) for p in reflect_users),
            transmit_users=tuple(pos(*p) for p in transmit_users),
            reflect_eves=tuple(pos(*p) for p in reflect_eves),
            transmit_eves=tuple(pos(*p) for p in transmit_eves),
            reflect_pairs=tuple((i, i) for i in range(min(len(reflect_users), len(reflect_eves)))),
            transmit_pairs=tuple((i, i) for i in range(min(len(transmit_users), len(transmit_eves)))),
        )

    return _make
