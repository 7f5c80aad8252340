"""
Adaptive subdivision of a domain box into classified cells.

Boxes are refined level by level on an integer lattice with 2^(D+1)
steps per axis (D = max depth), so every test point (corners and centre of
every box at every level) has an exact integer key and is classified
at most once.
"""

from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from algebra.newton import classify_lattice_point, newton_polytope
from amoeba.membership import MembershipTester
from amoeba.render import auto_domain
from models.amoeba_model import AmoebaReport, ComplementComponent, DomainBox, MembershipStatus, OrderVector
from models.polynomial_model import LaurentPolynomial
from utils.config import Config
from utils.exceptions import BudgetExceeded, DimensionError
from utils.logger_config import ProcessingLogger, get_logger

logger = get_logger("amoeba.dichotomy")

COMPLEMENT = MembershipStatus.COMPLEMENT.code
UNDECIDED = MembershipStatus.UNDECIDED.code

# representatives are re-checked with this many times the working samples
VERIFY_FACTOR = 4
PAIR_BLOCK = 1024


def _unit_cube(n: int) -> np.ndarray:
    """Vertices of {0,1}ⁿ, shape (2ⁿ, n)."""
    return np.array(np.meshgrid(*[[0, 1]] * n, indexing="ij")).reshape(n, -1).T.astype(np.int64)


def _max_pairwise(points: np.ndarray) -> float:
    best = 0.0
    for start in range(0, len(points), PAIR_BLOCK):
        block = points[start:start + PAIR_BLOCK]
        gaps = np.linalg.norm(block[:, None, :] - points[None, :, :], axis=2)
        best = max(best, float(gaps.max()))
    return best


def _row_extremes(centres: np.ndarray) -> np.ndarray:
    """
    Leftmost and rightmost centre on every line parallel to the first axis.

    Hull vertices, and hence the farthest pair, are among them.
    """
    n = centres.shape[1]
    if n == 1:
        return np.array([[centres[:, 0].min()], [centres[:, 0].max()]])
    columns = [f"x{j}" for j in range(n)]
    frame = pd.DataFrame(centres, columns=columns)
    grouped = frame.groupby(columns[1:], sort=True)["x0"]
    ends = pd.concat([frame.loc[grouped.idxmin()], frame.loc[grouped.idxmax()]])
    return np.unique(ends.to_numpy(), axis=0)


def component_diameter(component: ComplementComponent) -> float:
    """
    Largest distance between two cell centres of a component.

    Exact over the detected cells and a lower bound for the diameter of
    the true component.
    """
    if component.cell_count < 2:
        return 0.0
    centres = np.asarray([cell.center for cell in component.cells], dtype=float)
    return _max_pairwise(_row_extremes(centres))


class _VerdictCache:
    """Classified lattice points, kept sorted by key."""

    def __init__(self, arity: int):
        self.keys = np.empty(0, dtype=np.int64)
        self.status = np.empty(0, dtype=np.int8)
        self.orders = np.empty((0, arity), dtype=np.int64)

    def missing(self, keys: np.ndarray) -> np.ndarray:
        pos = np.searchsorted(self.keys, keys)
        found = pos < len(self.keys)
        found[found] = self.keys[pos[found]] == keys[found]
        return keys[~found]

    def add(self, keys: np.ndarray, status: np.ndarray, orders: np.ndarray) -> None:
        keys = np.concatenate([self.keys, keys])
        order = np.argsort(keys, kind="stable")
        self.keys = keys[order]
        self.status = np.concatenate([self.status, status])[order]
        self.orders = np.concatenate([self.orders, orders])[order]

    def lookup(self, keys: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        pos = np.searchsorted(self.keys, keys)
        return self.status[pos], self.orders[pos]


class DichotomousClassifier:
    """
    Component detection by recursive 2ⁿ-splitting of a box.

    Acceptance rules for a box with test points at its centre and corners:

    - all test points Complement with one order: accepted at any depth (complement
      components are convex, so the whole box lies in that component)
    - no Complement test point: accepted as amoeba once depth ≥ min_depth
    - otherwise split, and at max_depth accepted as an amoeba boundary cell
    """

    def __init__(
        self,
        p: LaurentPolynomial,
        domain: Optional[DomainBox] = None,
        max_depth: Optional[int] = None,
        samples: Optional[int] = None,
        seed: Optional[int] = None,
        min_depth: Optional[int] = None,
        budget: Optional[int] = None,
    ):
        if not 1 <= p.arity <= 3:
            raise DimensionError(f"subdivision supports 1 to 3 variables, got {p.arity}")
        config = Config()
        self.polynomial = p
        self.domain = domain or auto_domain(p)
        if self.domain.dimension != p.arity:
            raise DimensionError(
                f"domain has {self.domain.dimension} axes, polynomial has {p.arity} variables"
            )
        self.max_depth = config.default_depth if max_depth is None else int(max_depth)
        if not 0 <= self.max_depth <= config.max_depth:
            raise ValueError(f"depth must be between 0 and {config.max_depth}")
        min_depth = config.min_depth if min_depth is None else int(min_depth)
        self.min_depth = min(min_depth, self.max_depth)
        self.samples = config.default_samples if samples is None else int(samples)
        self.seed = config.seed if seed is None else int(seed)
        self.budget = config.cell_budget if budget is None else int(budget)

        self.polytope = newton_polytope(p)
        self.tester = MembershipTester(p, samples=self.samples, seed=self.seed, polytope=self.polytope)
        self.steps = 2 ** (self.max_depth + 1)
        self.unit = self.domain.widths / self.steps

        n = p.arity
        cube = _unit_cube(n)
        self._children = cube
        # test point offsets in units of half a box edge
        self._offsets = np.vstack([cube * 2, np.ones((1, n), dtype=np.int64)])
        self._weights = (self.steps + 1) ** np.arange(n, dtype=np.int64)

    def _point(self, lattice: np.ndarray) -> np.ndarray:
        return self.domain.lows + lattice * self.unit

    def _box(self, corner: np.ndarray, size: int) -> DomainBox:
        lo = self._point(corner)
        hi = self._point(corner + size)
        return DomainBox(tuple((float(a), float(b)) for a, b in zip(lo, hi)))

    def _decode(self, keys: np.ndarray) -> np.ndarray:
        n = self.polynomial.arity
        lattice = np.empty((len(keys), n), dtype=np.int64)
        rest = keys.copy()
        for j in range(n):
            rest, lattice[:, j] = np.divmod(rest, self.steps + 1)
        return lattice

    def classify_cells(self, n_jobs: Optional[int] = None):
        """
        Run the subdivision.

        Returns:
            Tuple (complement cells as (level, corner, order),
            amoeba cells as (level, corner), undecided cell count)

        Raises:
            BudgetExceeded: More cells than the configured budget
        """
        n = self.polynomial.arity
        cache = _VerdictCache(n)
        cells = np.zeros((1, n), dtype=np.int64)
        visited = 1
        complement_cells: List[Tuple[int, Tuple[int, ...], OrderVector]] = []
        amoeba_cells: List[Tuple[int, Tuple[int, ...]]] = []
        undecided = 0

        for level in range(self.max_depth + 1):
            if len(cells) == 0:
                break
            size = self.steps >> level
            half = size // 2
            lattice = cells[:, None, :] + self._offsets[None, :, :] * half
            keys = lattice @ self._weights

            fresh = cache.missing(np.unique(keys))
            if len(fresh):
                batch = self.tester.classify_many(self._point(self._decode(fresh)), n_jobs=n_jobs)
                cache.add(fresh, batch.status, batch.orders)
            status, orders = cache.lookup(keys)

            complement = status == COMPLEMENT
            uniform = complement.all(axis=1) & (orders == orders[:, :1]).all(axis=(1, 2))
            no_complement = ~complement.any(axis=1)
            settled = no_complement & (level >= self.min_depth)
            split = ~uniform & ~settled
            if level == self.max_depth:
                settled |= split
                split[:] = False

            for i in np.flatnonzero(uniform):
                complement_cells.append((level, tuple(int(v) for v in cells[i]), tuple(int(v) for v in orders[i, 0])))
            for i in np.flatnonzero(settled):
                if (status[i] == UNDECIDED).all():
                    undecided += 1
                amoeba_cells.append((level, tuple(int(v) for v in cells[i])))

            logger.debug(
                f"Level {level}: {len(cells)} cells, {len(fresh)} new test points, "
                f"{int(split.sum())} split"
            )
            parents = cells[split]
            cells = (parents[:, None, :] + self._children[None, :, :] * half).reshape(-1, n)
            visited += len(cells)
            if visited > self.budget:
                raise BudgetExceeded(visited, self.budget)

        return complement_cells, amoeba_cells, undecided

    def _touches_boundary(self, corner: Tuple[int, ...], size: int) -> bool:
        return any(c == 0 or c + size == self.steps for c in corner)

    def build_components(
        self,
        complement_cells: List[Tuple[int, Tuple[int, ...], OrderVector]],
        warnings: List[str],
    ) -> List[ComplementComponent]:
        """Merge complement cells by order and re-verify each representative."""
        grouped: Dict[OrderVector, List[Tuple[int, Tuple[int, ...]]]] = {}
        for level, corner, order in complement_cells:
            grouped.setdefault(order, []).append((level, corner))

        verifier = MembershipTester(
            self.polynomial,
            samples=VERIFY_FACTOR * self.samples,
            seed=self.seed,
            polytope=self.polytope,
        )
        components = []
        for order in sorted(grouped):
            members = sorted(grouped[order], key=lambda item: (item[1], item[0]))
            level, corner = min(members, key=lambda item: (item[0], item[1]))
            size = self.steps >> level
            representative = tuple(float(v) for v in self._point(np.asarray(corner) + size // 2))

            check = verifier.classify(representative)
            if not check.is_complement or check.order != order:
                message = (
                    f"Component of order {order} dropped: representative "
                    f"{representative} re-classified as {check.status.value}"
                )
                logger.warning(message)
                warnings.append(message)
                continue

            component = ComplementComponent(
                order=order,
                representative=representative,
                cells=[self._box(np.asarray(c), self.steps >> lv) for lv, c in members],
                bounded=not any(self._touches_boundary(c, self.steps >> lv) for lv, c in members),
                in_support=order in set(self.polynomial.support),
                lattice_kind=classify_lattice_point(self.polytope, order).value,
            )
            component.diameter_lb = component_diameter(component)
            components.append(component)
        return components

    def run(self, n_jobs: Optional[int] = None) -> AmoebaReport:
        """Classify, merge and assemble the report."""
        warnings: List[str] = []
        with ProcessingLogger("classification", logger) as classify_timer:
            complement_cells, amoeba_cells, undecided = self.classify_cells(n_jobs=n_jobs)
        with ProcessingLogger("merge", logger) as merge_timer:
            components = self.build_components(complement_cells, warnings)

        low, high = self.polytope.vertex_count, self.polytope.lattice_count
        count = len(components)
        if not low <= count <= high:
            message = f"Detected {count} components outside the bounds {low}..{high}"
            logger.warning(message)
            warnings.append(message)
        if undecided:
            warnings.append(f"{undecided} cells stayed undecided")

        report = AmoebaReport(
            polynomial=self.polynomial,
            domain=self.domain,
            algorithm="dichotomous",
            params={
                "max_depth": self.max_depth,
                "min_depth": self.min_depth,
                "samples": self.samples,
                "seed": self.seed,
                "budget": self.budget,
            },
            components=components,
            amoeba_cells=len(amoeba_cells) - undecided,
            undecided_cells=undecided,
            bounds=(low, high),
            solid=count == low and not any(c.bounded for c in components),
            optimal=count == high,
            warnings=warnings,
            cell_size=float(self.domain.widths.max()) / 2 ** self.max_depth,
            amoeba_boxes=[self._box(np.asarray(c), self.steps >> lv) for lv, c in sorted(amoeba_cells)],
            timings={"classification": classify_timer.elapsed, "merge": merge_timer.elapsed},
        )
        logger.info(report.summary())
        return report


def dichotomous_components(
    p: LaurentPolynomial,
    domain: Optional[DomainBox] = None,
    max_depth: Optional[int] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    min_depth: Optional[int] = None,
    budget: Optional[int] = None,
    n_jobs: Optional[int] = None,
) -> AmoebaReport:
    """
    Complement components of the amoeba inside a box.

    Args:
        p: Polynomial in 1 to 3 variables
        domain: Box (automatic when omitted)
        max_depth: Subdivision depth (config default)
        samples: Fibers per axis (config default)
        seed: Fiber sequence seed (config default)
        min_depth: Depth before amoeba boxes may be accepted (config default)
        budget: Cell cap (config default)
        n_jobs: Worker count (config default)

    Raises:
        BudgetExceeded: Subdivision visited more cells than ``budget``
    """
    classifier = DichotomousClassifier(
        p,
        domain=domain,
        max_depth=max_depth,
        samples=samples,
        seed=seed,
        min_depth=min_depth,
        budget=budget,
    )
    return classifier.run(n_jobs=n_jobs)
