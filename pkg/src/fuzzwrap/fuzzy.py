"""Five-term triangular fuzzy engine combining detector errors.

A detector's signed error is its window cost minus the calibrated
midpoint cost, rescaled so the training extremes sit at -1 and +1.  The
left and right errors of a separator are combined either by the rule
base below (Mamdani inference, centroid defuzzification) or by a plain
sum, selected per wrapper configuration.

Rule base (OR = max, AND = min, implication = min, aggregation = max):

    left is positive_small  OR  right is positive_small -> positive_small
    left is positive        OR  right is positive       -> positive
    left is zero           AND  right is zero           -> zero
    left is negative_small  OR  right is negative_small -> negative_small
    left is negative        OR  right is negative       -> negative

The five triangles partition [-1.5, 1.5] with peaks at -1, -0.5, 0,
0.5, 1.  Strongly mixed-sign inputs fall through to whichever rules fire
weakly; for example (-1, +1) lands at 0 by symmetry.  The rule base and
partition are mirror images of themselves, and the centroid is computed
over an exactly symmetric sample grid, so negation of both inputs
negates the output bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .induction import DetectorModel

TERM_NAMES = ("negative", "negative_small", "zero", "positive_small", "positive")

DEGENERATE_SCALE = 1e-9  # guards normalization when c_min == c_max


@dataclass(frozen=True)
class PartitionSpec:
    peaks: tuple[float, ...] = (-1.0, -0.5, 0.0, 0.5, 1.0)
    half_width: float = 0.5
    domain: float = 1.5
    samples: int = 1001

    def __post_init__(self) -> None:
        if len(self.peaks) != len(TERM_NAMES):
            raise ValueError("partition needs exactly five peaks")
        if self.samples < 3 or self.samples % 2 == 0:
            raise ValueError("samples must be odd and at least 3")

    def triangles(self) -> dict[str, tuple[float, float, float]]:
        return {
            name: (p - self.half_width, p, p + self.half_width)
            for name, p in zip(TERM_NAMES, self.peaks)
        }

    def to_dict(self) -> dict:
        return {
            "peaks": list(self.peaks),
            "half_width": self.half_width,
            "domain": self.domain,
            "samples": self.samples,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PartitionSpec":
        return cls(tuple(d["peaks"]), d["half_width"], d["domain"], d["samples"])


DEFAULT_PARTITION = PartitionSpec()


@dataclass(frozen=True)
class FuzzyRule:
    term: str  # linguistic term tested on both detector errors
    connective: str  # "or" | "and"
    consequent: str


RULES = (
    FuzzyRule("positive_small", "or", "positive_small"),
    FuzzyRule("positive", "or", "positive"),
    FuzzyRule("zero", "and", "zero"),
    FuzzyRule("negative_small", "or", "negative_small"),
    FuzzyRule("negative", "or", "negative"),
)


def triangle(x: float, a: float, b: float, c: float) -> float:
    if x <= a or x >= c:
        return 0.0
    if x <= b:
        return (x - a) / (b - a)
    return (c - x) / (c - b)


def fuzzify(e: float, spec: PartitionSpec = DEFAULT_PARTITION) -> dict[str, float]:
    """Memberships of ``e`` (clamped to the partition domain) in the five terms."""
    x = min(spec.domain, max(-spec.domain, e))
    return {name: triangle(x, *abc) for name, abc in spec.triangles().items()}


def detector_error(cost: float, detector: "DetectorModel") -> float:
    """Signed, normalized deviation of a window cost from the calibrated midpoint."""
    scale = max(detector.cost_max - detector.cost_mid, DEGENERATE_SCALE)
    return (cost - detector.cost_mid) / scale


_GRIDS: dict[PartitionSpec, tuple[float, ...]] = {}


def _grid(spec: PartitionSpec) -> tuple[float, ...]:
    """Uniform sample grid over [-domain, domain], symmetric by construction."""
    cached = _GRIDS.get(spec)
    if cached is None:
        half = (spec.samples - 1) // 2
        pos = [(m * spec.domain) / half for m in range(1, half + 1)]
        cached = tuple(-g for g in reversed(pos)) + (0.0,) + tuple(pos)
        _GRIDS[spec] = cached
    return cached


def infer_error_tot(
    left_error: float,
    right_error: float,
    spec: PartitionSpec = DEFAULT_PARTITION,
    mode: str = "fuzzy",
) -> float:
    """Crisp combined separator error.

    ``mode="sum"`` returns the plain sum of the two errors.  The default
    rule-based mode first saturates each input at the outer term peaks
    (+-1): beyond them the triangles only lose membership, which would
    leave grossly wrong boundaries with an empty rule activation and no
    defuzzifiable output.
    """
    if mode == "sum":
        return left_error + right_error
    if mode != "fuzzy":
        raise ValueError(f"unknown combiner mode {mode!r}")

    lo, hi = spec.peaks[0], spec.peaks[-1]
    a = min(hi, max(lo, left_error))
    b = min(hi, max(lo, right_error))
    left_m = fuzzify(a, spec)
    right_m = fuzzify(b, spec)

    triangles = spec.triangles()
    fired: list[tuple[float, tuple[float, float, float]]] = []
    for rule in RULES:
        u, v = left_m[rule.term], right_m[rule.term]
        act = min(u, v) if rule.connective == "and" else max(u, v)
        if act > 0.0:
            fired.append((act, triangles[rule.consequent]))

    xs = _grid(spec)
    half = (spec.samples - 1) // 2
    mu = [0.0] * len(xs)
    for act, (ta, tb, tc) in fired:
        for k, x in enumerate(xs):
            m = triangle(x, ta, tb, tc)
            if m > act:
                m = act
            if m > mu[k]:
                mu[k] = m

    # Pairwise-symmetric accumulation keeps the centroid exactly
    # antisymmetric and exactly zero for symmetric aggregates.
    den = mu[half]
    num = 0.0
    for m in range(1, half + 1):
        lo_m, hi_m = mu[half - m], mu[half + m]
        den += lo_m + hi_m
        num += xs[half + m] * (hi_m - lo_m)
    if den == 0.0:
        return 0.0  # unreachable with saturated inputs; kept as a total fallback
    return num / den
