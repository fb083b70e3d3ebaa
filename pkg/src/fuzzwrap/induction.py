"""Detector learning: frequency matrices, truth degrees, cost calibration.

Each detector aggregates its training windows into a frequency matrix
``f(distance, class)``.  A candidate window is scored by summing, over
its positions, the product of two truth degrees: how plausible the class
is at that distance (decaying with displacement from the nearest
observed distance) and how often it was observed there.  Calibration
records the minimum, maximum, and midpoint cost over the training
windows themselves.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .errors import EmptyTrainingSet
from .fuzzy import DEFAULT_PARTITION, PartitionSpec
from .page_model import (
    DetectorWindow,
    Edge,
    Side,
    ZoneKind,
    ZoneLabels,
    compute_window_len,
    extract_windows,
    validate_labels,
)
from .tokens import N_CLASSES, TokenClass, tokenize


@dataclass(frozen=True)
class FrequencyMatrix:
    """Counts of each token class at each distance from the separator.

    Row 0 is the separator point itself and stays all zero.  Columns are
    the twelve token classes in id order; pads are never counted.
    """

    counts: tuple[tuple[int, ...], ...]
    n_instances: int

    @property
    def window_len(self) -> int:
        return len(self.counts) - 1

    def count(self, distance: int, cls: TokenClass) -> int:
        return self.counts[distance][int(cls) - 1]


def build_frequency_matrix(windows: Iterable[DetectorWindow]) -> FrequencyMatrix:
    ws = list(windows)
    if not ws:
        raise EmptyTrainingSet("no windows to aggregate")
    k = len(ws[0].classes)
    rows = [[0] * N_CLASSES for _ in range(k + 1)]
    for w in ws:
        if len(w.classes) != k:
            raise ValueError("windows of mixed length in one detector")
        for dist, cls in w.by_distance():
            if cls is TokenClass.PAD:
                continue
            rows[dist][int(cls) - 1] += 1
    return FrequencyMatrix(tuple(tuple(r) for r in rows), len(ws))


def _nearest_observed(matrix: FrequencyMatrix, cls: TokenClass, distance: int) -> int | None:
    """Closest distance where ``cls`` was seen.

    Ties break toward the larger count, then the larger distance.
    """
    best: tuple[tuple[int, int, int], int] | None = None
    for i in range(1, matrix.window_len + 1):
        f = matrix.count(i, cls)
        if f <= 0:
            continue
        key = (abs(distance - i), -f, -i)
        if best is None or key < best[0]:
            best = (key, i)
    return None if best is None else best[1]


def position_truth(matrix: FrequencyMatrix, cls: TokenClass, distance: int, width: int) -> float:
    """Degree of truth of seeing ``cls`` at ``distance``; 1 when observed there."""
    if cls is TokenClass.PAD:
        return 0.0
    if matrix.count(distance, cls) > 0:
        return 1.0
    nearest = _nearest_observed(matrix, cls, distance)
    if nearest is None:
        return 0.0
    return max(0.0, 1.0 - abs(distance - nearest) / width)


def occurrence_truth(matrix: FrequencyMatrix, cls: TokenClass, distance: int) -> float:
    """Observed frequency of ``cls`` at ``distance`` or its nearest stand-in."""
    if cls is TokenClass.PAD:
        return 0.0
    f = matrix.count(distance, cls)
    if f > 0:
        return f / matrix.n_instances
    nearest = _nearest_observed(matrix, cls, distance)
    if nearest is None:
        return 0.0
    return matrix.count(nearest, cls) / matrix.n_instances


def token_cost(matrix: FrequencyMatrix, cls: TokenClass, distance: int, width: int) -> float:
    if cls is TokenClass.PAD:
        return 0.0
    return position_truth(matrix, cls, distance, width) * occurrence_truth(matrix, cls, distance)


def detector_cost(matrix: FrequencyMatrix, window: DetectorWindow, width: int) -> float:
    return sum(token_cost(matrix, cls, dist, width) for dist, cls in window.by_distance())


def calibrate(
    matrix: FrequencyMatrix, windows: Iterable[DetectorWindow], width: int
) -> tuple[float, float, float]:
    """(cost_min, cost_max, cost_mid) of the training windows themselves."""
    costs = [detector_cost(matrix, w, width) for w in windows]
    if not costs:
        raise EmptyTrainingSet("cannot calibrate on zero windows")
    cost_min, cost_max = min(costs), max(costs)
    return cost_min, cost_max, (cost_min + cost_max) / 2.0


@dataclass(frozen=True)
class DetectorModel:
    side: Side
    matrix: FrequencyMatrix
    cost_min: float
    cost_max: float
    cost_mid: float
    decay_width: int

    def window_cost(self, window: DetectorWindow) -> float:
        return detector_cost(self.matrix, window, self.decay_width)


@dataclass(frozen=True)
class SeparatorModel:
    zone: ZoneKind
    edge: Edge
    left: DetectorModel
    right: DetectorModel


@dataclass(frozen=True)
class WrapperConfig:
    decay_width: int = 2
    threshold: float = 0.25
    combiner: str = "fuzzy"  # "fuzzy" applies the rule base, "sum" adds both errors
    partition: PartitionSpec = field(default_factory=PartitionSpec)

    @classmethod
    def tolerant(cls) -> "WrapperConfig":
        """Sum combiner with the threshold at the training envelope.

        Accepts any boundary whose combined deviation stays within the
        range spanned by the training windows; useful on noisy pages
        where the default profile only admits near-midpoint costs.
        """
        return cls(combiner="sum", threshold=2.0)

    def to_dict(self) -> dict:
        return {
            "decay_width": self.decay_width,
            "threshold": self.threshold,
            "combiner": self.combiner,
            "partition": self.partition.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "WrapperConfig":
        return cls(
            decay_width=d.get("decay_width", 2),
            threshold=d.get("threshold", 0.25),
            combiner=d.get("combiner", "fuzzy"),
            partition=PartitionSpec.from_dict(d["partition"]) if "partition" in d else DEFAULT_PARTITION,
        )


MODEL_FILE_VERSION = 1


@dataclass(frozen=True)
class WrapperModel:
    window_len: int
    config: WrapperConfig
    separators: tuple[SeparatorModel, ...]
    version: int = MODEL_FILE_VERSION

    def separator(self, zone: ZoneKind, edge: Edge) -> SeparatorModel:
        for s in self.separators:
            if s.zone == zone and s.edge == edge:
                return s
        raise KeyError(f"no separator for ({zone.key}, {edge.value})")

    @property
    def attribute_names(self) -> tuple[str, ...]:
        return tuple(
            sorted({s.zone.name for s in self.separators if s.zone.level == "attribute"})
        )


def _zone_sort_key(key: str, edge: Edge) -> tuple:
    level_rank = {"global": 0, "record": 1}.get(key.split(":")[0], 2)
    return (level_rank, key, 0 if edge is Edge.BEGIN else 1)


def train(
    pages: Mapping[str, str],
    labels: Iterable[ZoneLabels],
    config: WrapperConfig = WrapperConfig(),
) -> WrapperModel:
    """Learn one calibrated separator model per labelled zone edge.

    ``pages`` maps page ids to their decoded HTML.  Labels are validated
    against their pages before any window is taken.
    """
    labs = list(labels)
    toks = {}
    for lab in labs:
        page = pages[lab.page_id]
        t = tokenize(page)
        validate_labels(page, lab, t)
        toks[lab.page_id] = t
    window_len = compute_window_len((toks[lab.page_id], lab) for lab in labs)

    grouped: dict[tuple[str, Edge], dict[Side, list[DetectorWindow]]] = {}
    for lab in labs:
        for w in extract_windows(toks[lab.page_id], lab, window_len):
            slot = grouped.setdefault((w.zone.key, w.edge), {Side.LEFT: [], Side.RIGHT: []})
            slot[w.side].append(w)

    separators = []
    for zkey, edge in sorted(grouped, key=lambda g: _zone_sort_key(*g)):
        zone = ZoneKind.from_key(zkey)
        detectors = {}
        for side in (Side.LEFT, Side.RIGHT):
            ws = grouped[(zkey, edge)][side]
            matrix = build_frequency_matrix(ws)
            cost_min, cost_max, cost_mid = calibrate(matrix, ws, config.decay_width)
            detectors[side] = DetectorModel(side, matrix, cost_min, cost_max, cost_mid, config.decay_width)
        separators.append(SeparatorModel(zone, edge, detectors[Side.LEFT], detectors[Side.RIGHT]))
    return WrapperModel(window_len, config, tuple(separators))


# ---------------------------------------------------------------------------
# Model file format (schema documented in docs/schemas.md); field order is
# fixed so re-serialization is byte-identical.

def _detector_to_dict(d: DetectorModel) -> dict:
    return {
        "side": d.side.value,
        "n_instances": d.matrix.n_instances,
        "counts": [list(row) for row in d.matrix.counts],
        "cost_min": d.cost_min,
        "cost_max": d.cost_max,
        "cost_mid": d.cost_mid,
    }


def _detector_from_dict(d: dict, decay_width: int) -> DetectorModel:
    matrix = FrequencyMatrix(tuple(tuple(r) for r in d["counts"]), d["n_instances"])
    return DetectorModel(
        Side(d["side"]), matrix, d["cost_min"], d["cost_max"], d["cost_mid"], decay_width
    )


def model_to_dict(model: WrapperModel) -> dict:
    return {
        "version": model.version,
        "window_len": model.window_len,
        "config": model.config.to_dict(),
        "separators": [
            {
                "zone": s.zone.key,
                "edge": s.edge.value,
                "left": _detector_to_dict(s.left),
                "right": _detector_to_dict(s.right),
            }
            for s in model.separators
        ],
    }


def model_from_dict(d: dict) -> WrapperModel:
    config = WrapperConfig.from_dict(d["config"])
    separators = tuple(
        SeparatorModel(
            ZoneKind.from_key(s["zone"]),
            Edge(s["edge"]),
            _detector_from_dict(s["left"], config.decay_width),
            _detector_from_dict(s["right"], config.decay_width),
        )
        for s in d["separators"]
    )
    return WrapperModel(d["window_len"], config, separators, version=d["version"])


def dump_model(model: WrapperModel) -> str:
    return json.dumps(model_to_dict(model), indent=2) + "\n"


def model_id(model: WrapperModel) -> str:
    digest = hashlib.sha256(dump_model(model).encode("utf-8")).hexdigest()
    return "m" + digest[:16]


def save_model(model: WrapperModel, path: str | Path) -> None:
    Path(path).write_text(dump_model(model), encoding="utf-8")


def load_model(path: str | Path) -> WrapperModel:
    return model_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
