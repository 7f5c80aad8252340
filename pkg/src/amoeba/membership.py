"""
Point membership for amoebas.

A point x is tested in three stages:

1. Lopsidedness: one term dominating the sum of the others certifies
   x outside the amoeba, with that term's exponent as the order.
2. Fiber slicing: for each axis j the polynomial is restricted to
   z_j on K fibers of the torus over x and the roots inside
   |z_j| < e^{x_j} are counted. Equal counts on every fiber give the
   order ν; a root on the circle means x is in the amoeba.
3. Crossing refinement: when two fibers disagree, the segment between
   them is bisected until the root crossing the circle is located.
"""

from typing import Optional, Sequence, Tuple

import numpy as np

from algebra.evaluation import SliceBuilder, evaluate_many, pairing
from algebra.newton import newton_polytope
from algebra.roots import unit_disk_counts
from models.amoeba_model import ClassificationBatch, MembershipStatus, OrderVector, PointClassification
from models.geometry_model import NewtonPolytope
from models.polynomial_model import Exponent, LaurentPolynomial, LogPoint
from utils.config import Config
from utils.exceptions import DimensionError, DivergentOrderError, NonRealCoefficientsError
from utils.logger_config import get_logger
from utils.parallel import map_chunks

logger = get_logger("amoeba.membership")

# Low-discrepancy increments for one and two free angles
GOLDEN = np.array([0.6180339887498949])
R2 = np.array([0.7548776662466927, 0.5698402909980532])
HASH_WEIGHTS = np.array([12.9898, 78.233, 37.719])

RESAMPLE_ROUNDS = 3
BISECTION_STEPS = 60

COMPLEMENT = MembershipStatus.COMPLEMENT.code
AMOEBA = MembershipStatus.AMOEBA.code
UNDECIDED = MembershipStatus.UNDECIDED.code

REASON_CODES = {reason: code for code, reason in enumerate(DivergentOrderError.REASONS)}


def _frac(values: np.ndarray) -> np.ndarray:
    return values - np.floor(values)


def lopsided_many(p: LaurentPolynomial, points: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Lopsidedness at many points.

    Returns:
        Tuple (certified mask, index of the dominant term)
    """
    points = np.asarray(points, dtype=float).reshape(-1, p.arity)
    logs = np.log(np.abs(p.coefficients))[None, :] + pairing(points, p.exponents)
    dominant = np.argmax(logs, axis=1)
    top = np.take_along_axis(logs, dominant[:, None], axis=1)
    with np.errstate(under="ignore"):
        rest = np.exp(logs - top).sum(axis=1) - 1.0
    return rest < 1.0, dominant


def lopsided_at(p: LaurentPolynomial, x: LogPoint) -> Optional[Exponent]:
    """
    Dominant exponent α* when |c_α*|e^⟨α*,x⟩ exceeds the sum of the others.

    Returns:
        α*, or None when no term dominates
    """
    certified, dominant = lopsided_many(p, np.asarray([x], dtype=float))
    if not certified[0]:
        return None
    return p.support[int(dominant[0])]


def fiber_angles(
    points: np.ndarray,
    samples: int,
    free: int,
    seed: int,
    axis: int,
    attempt: int = 0,
) -> np.ndarray:
    """
    Arguments of the fixed variables for each fiber sample.

    Sample k of a point uses 2π·frac(s + (k+1)·g) with g the golden
    increment (one free angle) or the R2 increments (two). The offset s
    depends only on the point, the seed, the axis and the attempt.

    Returns:
        Array of shape (points, samples, free)
    """
    points = np.asarray(points, dtype=float)
    mix = (points * HASH_WEIGHTS[None, :points.shape[1]]).sum(axis=1)
    offset = _frac(np.sin(mix + 0.1 * seed + 1.618 * axis + 2.718 * attempt) * 43758.5453)
    increments = GOLDEN if free == 1 else R2[:free]
    k = np.arange(1, samples + 1, dtype=float)
    return 2.0 * np.pi * _frac(offset[:, None, None] + k[None, :, None] * increments[None, None, :])


def _in_polytope(polytope: NewtonPolytope, orders: np.ndarray) -> np.ndarray:
    inside = np.ones(len(orders), dtype=bool)
    for normal, offset in polytope.inequalities:
        inside &= orders @ np.asarray(normal, dtype=np.int64) <= offset
    for normal, offset in polytope.equalities:
        inside &= orders @ np.asarray(normal, dtype=np.int64) == offset
    return inside


class MembershipTester:
    """
    Batched membership classifier for one polynomial.

    Results for a point depend only on the point, the sample count and
    the seed, so batches may be split and reordered freely.
    """

    def __init__(
        self,
        p: LaurentPolynomial,
        samples: Optional[int] = None,
        seed: Optional[int] = None,
        certify_lopsided: bool = True,
        circle_tolerance: Optional[float] = None,
        polytope: Optional[NewtonPolytope] = None,
    ):
        """
        Initialize the tester.

        Args:
            p: Polynomial
            samples: Fibers per axis (config default)
            seed: Fiber sequence seed (config default)
            certify_lopsided: Use the lopsidedness shortcut
            circle_tolerance: Base half-width of the circle band (config default)
            polytope: Precomputed Newton polytope
        """
        config = Config()
        self.polynomial = p
        self.samples = config.default_samples if samples is None else int(samples)
        if self.samples < 1:
            raise ValueError("at least one fiber sample is required")
        self.seed = config.seed if seed is None else int(seed)
        self.certify_lopsided = certify_lopsided
        self.circle_tolerance = config.circle_tolerance if circle_tolerance is None else circle_tolerance
        self.polytope = polytope or newton_polytope(p)
        self.builders = [SliceBuilder(p, axis) for axis in range(p.arity)]

    # ------------------------------------------------------------------
    # Public API

    def classify_many(self, points: np.ndarray, n_jobs: Optional[int] = None) -> ClassificationBatch:
        """
        Classify many points.

        Args:
            points: Log points, shape (N, n)
            n_jobs: Worker count (config default)

        Returns:
            ClassificationBatch aligned with ``points``
        """
        points = np.asarray(points, dtype=float).reshape(-1, self.polynomial.arity)
        if len(points) == 0:
            return self._empty(0)
        parts = map_chunks(_classify_chunk, points, self, n_jobs=n_jobs)
        return ClassificationBatch.concatenate(parts)

    def classify(self, x: Sequence[float]) -> PointClassification:
        """Classify one point."""
        return self.classify_block(np.asarray([x], dtype=float)).at(0)

    # ------------------------------------------------------------------
    # Kernel

    def _empty(self, count: int) -> ClassificationBatch:
        return ClassificationBatch(
            status=np.full(count, UNDECIDED, dtype=np.int8),
            orders=np.zeros((count, self.polynomial.arity), dtype=np.int64),
            agreement=np.ones(count),
            samples_used=np.zeros(count, dtype=np.int64),
            lopsided=np.zeros(count, dtype=bool),
            reasons=np.full(count, -1, dtype=np.int8),
        )

    def classify_block(self, points: np.ndarray) -> ClassificationBatch:
        """Classify a block of points in the calling process."""
        p = self.polynomial
        n = p.arity
        result = self._empty(len(points))

        pending = np.ones(len(points), dtype=bool)
        if self.certify_lopsided:
            certified, dominant = lopsided_many(p, points)
            result.status[certified] = COMPLEMENT
            result.orders[certified] = p.exponents[dominant[certified]]
            result.lopsided[certified] = True
            pending &= ~certified

        settled = ~pending
        for axis in range(n):
            rows = np.flatnonzero(~settled)
            if len(rows) == 0:
                break
            self._resolve_axis(axis, points, rows, result, settled)

        # Survivors agreed on every axis
        survivors = np.flatnonzero(~settled)
        if len(survivors):
            inside = _in_polytope(self.polytope, result.orders[survivors])
            result.status[survivors[inside]] = COMPLEMENT
            rejected = survivors[~inside]
            result.status[rejected] = UNDECIDED
            result.reasons[rejected] = REASON_CODES["out_of_polytope"]
        return result

    def _resolve_axis(
        self,
        axis: int,
        points: np.ndarray,
        rows: np.ndarray,
        result: ClassificationBatch,
        settled: np.ndarray,
    ) -> None:
        """Fiber counts along one axis; marks amoeba and undecided rows as settled."""
        builder = self.builders[axis]
        free = self.polynomial.arity - 1
        samples = self.samples if free > 0 else 1
        x = points[rows]
        m = len(rows)

        counts = np.zeros(m * samples, dtype=np.int64)
        valid = np.zeros(m * samples, dtype=bool)
        near = np.zeros(m, dtype=bool)
        used = np.zeros(m, dtype=np.int64)
        angles = np.zeros((m * samples, max(free, 1)))

        for attempt in range(RESAMPLE_ROUNDS + 1):
            todo = np.flatnonzero(~valid)
            if len(todo) == 0:
                break
            owner = todo // samples
            if free > 0:
                theta = fiber_angles(x, samples, free, self.seed, axis, attempt).reshape(-1, free)[todo]
            else:
                theta = np.zeros((len(todo), 1))
            good, c, hit = self._count(builder, x[owner], theta if free > 0 else None)
            np.add.at(used, owner, 1)
            counts[todo[good]] = c[good]
            valid[todo[good]] = True
            angles[todo] = theta
            near[owner[hit]] = True

        result.samples_used[rows] += used
        counts = counts.reshape(m, samples)
        valid = valid.reshape(m, samples)

        amoeba = near.copy()
        degenerate = ~amoeba & ~valid.all(axis=1)
        agree = np.all(counts == counts[:, :1], axis=1)
        disagree = ~amoeba & ~degenerate & ~agree

        agreement = np.ones(m)
        for i in np.flatnonzero(~agree):
            _, freq = np.unique(counts[i][valid[i]], return_counts=True)
            agreement[i] = freq.max() / samples
        result.agreement[rows] = np.minimum(result.agreement[rows], agreement)

        if np.any(disagree):
            local = np.flatnonzero(disagree)
            partner = np.argmax(counts[local] != counts[local, :1], axis=1)
            angle_grid = angles.reshape(m, samples, -1)
            found, failed = self._bisect(
                builder,
                x[local],
                angle_grid[local, 0],
                angle_grid[local, partner],
                counts[local, 0],
            )
            result.samples_used[rows[local]] += BISECTION_STEPS
            amoeba[local[found]] = True
            degenerate[local[failed]] = True
            unresolved = local[~found & ~failed]
            result.status[rows[unresolved]] = UNDECIDED
            result.reasons[rows[unresolved]] = REASON_CODES["disagreement"]
            settled[rows[unresolved]] = True

        result.status[rows[amoeba]] = AMOEBA
        settled[rows[amoeba]] = True
        result.status[rows[degenerate]] = UNDECIDED
        result.reasons[rows[degenerate]] = REASON_CODES["degenerate"]
        settled[rows[degenerate]] = True

        ok = ~amoeba & ~degenerate & ~disagree
        result.orders[rows[ok], axis] = counts[ok, 0] + builder.min_exponent

    def _count(self, builder: SliceBuilder, x: np.ndarray, theta: Optional[np.ndarray]):
        """Root counts inside the unit disk for one sample per row."""
        coefficients, degenerate = builder.build(x, theta)
        band = builder.circle_tolerance(x, self.circle_tolerance)
        counts, near, converged, empty = unit_disk_counts(coefficients, band)
        good = ~degenerate & ~empty & converged
        return good, counts, good & near

    def _bisect(
        self,
        builder: SliceBuilder,
        x: np.ndarray,
        theta_a: np.ndarray,
        theta_b: np.ndarray,
        count_a: np.ndarray,
    ) -> Tuple[np.ndarray, np.ndarray]:
        """
        Locate the circle crossing between two fibers with different counts.

        Returns:
            Tuple (crossing found, numerical failure) masks
        """
        m = len(x)
        lo = np.zeros(m)
        hi = np.ones(m)
        found = np.zeros(m, dtype=bool)
        failed = np.zeros(m, dtype=bool)
        for _ in range(BISECTION_STEPS):
            active = np.flatnonzero(~found & ~failed)
            if len(active) == 0:
                break
            t = 0.5 * (lo[active] + hi[active])
            theta = theta_a[active] + t[:, None] * (theta_b[active] - theta_a[active])
            good, counts, hit = self._count(builder, x[active], theta)
            found[active[hit]] = True
            failed[active[~good]] = True
            same = good & ~hit & (counts == count_a[active])
            lo[active[same]] = t[same]
            moved = good & ~hit & ~same
            hi[active[moved]] = t[moved]
        return found, failed


def _classify_chunk(points: np.ndarray, tester: MembershipTester) -> ClassificationBatch:
    return tester.classify_block(points)


def classify_points(
    p: LaurentPolynomial,
    points: np.ndarray,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    certify_lopsided: bool = True,
    n_jobs: Optional[int] = None,
) -> ClassificationBatch:
    """Classify many points of ℝⁿ."""
    tester = MembershipTester(p, samples=samples, seed=seed, certify_lopsided=certify_lopsided)
    return tester.classify_many(points, n_jobs=n_jobs)


def classify_point(
    p: LaurentPolynomial,
    x: Sequence[float],
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    certify_lopsided: bool = True,
) -> PointClassification:
    """
    Complement(ν), Amoeba or Undecided at one point.

    Args:
        p: Polynomial
        x: Log point
        samples: Fibers per axis (config default)
        seed: Fiber sequence seed (config default)
        certify_lopsided: Use the lopsidedness shortcut
    """
    tester = MembershipTester(p, samples=samples, seed=seed, certify_lopsided=certify_lopsided)
    return tester.classify(x)


def point_order(
    p: LaurentPolynomial,
    x: Sequence[float],
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> OrderVector:
    """
    Order vector ν at x from fiber root counts.

    Raises:
        DivergentOrderError: Fibers disagree, a root lies on the circle,
            slices stay degenerate, or ν falls outside the Newton polytope
    """
    tester = MembershipTester(p, samples=samples, seed=seed, certify_lopsided=False)
    batch = tester.classify_block(np.asarray([x], dtype=float))
    status = MembershipStatus.from_code(batch.status[0])
    if status is MembershipStatus.COMPLEMENT:
        return tuple(int(v) for v in batch.orders[0])
    if status is MembershipStatus.AMOEBA:
        raise DivergentOrderError("near_circle", tuple(x))
    raise DivergentOrderError(DivergentOrderError.REASONS[int(batch.reasons[0])], tuple(x))


def harnack_values(p: LaurentPolynomial, points: np.ndarray) -> np.ndarray:
    """Π_{a,b = ±1} p(a·e^{x1}, b·e^{x2}) at many plane points."""
    if p.arity != 2:
        raise DimensionError("the Harnack region test needs two variables")
    if not p.is_real:
        raise NonRealCoefficientsError("the Harnack region test needs real coefficients")
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    moduli = np.exp(points)
    product = np.ones(len(points))
    for a in (1.0, -1.0):
        for b in (1.0, -1.0):
            signed = moduli * np.array([a, b])[None, :]
            product = product * evaluate_many(p, signed.astype(np.complex128)).real
    return product


def harnack_region_test(p: LaurentPolynomial, x: Sequence[float]) -> float:
    """
    Product of p over the four real sign choices at (e^{x1}, e^{x2}).

    A value ≤ 0 places x in the amoeba when p defines a Harnack curve.
    """
    return float(harnack_values(p, np.asarray([x], dtype=float))[0])
