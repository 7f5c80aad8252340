"""
Solidity scan over maximally sparse polynomials.

Every bounded complement component found for a maximally sparse
polynomial is a candidate counterexample to solidity. Candidates are
re-run at a deeper subdivision with twice the fiber samples; survivors
are reported as confirmed at working precision, never as proofs.
"""

from typing import Any, Dict, Optional

from tqdm import tqdm

from algebra.newton import is_maximally_sparse, newton_polytope
from amoeba.dichotomy import dichotomous_components
from amoeba.render import auto_domain
from corpus.generators import random_polynomial, sparsify
from models.amoeba_model import DomainBox
from models.corpus_model import FamilySpec, ScanItem, ScanReport
from models.polynomial_model import LaurentPolynomial
from utils.config import Config
from utils.exceptions import AmoebaError, NotMaximallySparseError
from utils.logger_config import ProcessingLogger, get_logger
from utils.parallel import map_items

logger = get_logger("amoeba.scan")

RECHECK_DEPTH = 2
RECHECK_SAMPLES = 2


def check_solidity(
    p: LaurentPolynomial,
    index: int = 0,
    domain: Optional[DomainBox] = None,
    depth: Optional[int] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    budget: Optional[int] = None,
    recheck: bool = True,
) -> ScanItem:
    """
    Look for bounded complement components of one polynomial.

    Raises:
        NotMaximallySparseError: The support is not the vertex set
    """
    if not is_maximally_sparse(p):
        raise NotMaximallySparseError(f"polynomial '{p}' is not maximally sparse")
    config = Config()
    depth = config.default_depth if depth is None else depth
    samples = config.default_samples if samples is None else samples
    domain = domain or auto_domain(p)

    item = ScanItem(index=index, polynomial=str(p), vertices=newton_polytope(p).vertex_count)
    try:
        report = dichotomous_components(
            p, domain, max_depth=depth, samples=samples, seed=seed, budget=budget, n_jobs=1
        )
        item.detected_components = report.component_count
        item.bounded_orders = [c.order for c in report.bounded_components]
        item.min_diameter_lb = report.min_bounded_diameter
        item.flagged = bool(item.bounded_orders)

        if item.flagged and recheck:
            logger.warning(f"Item {index}: bounded orders {item.bounded_orders}, re-checking")
            deeper = dichotomous_components(
                p,
                domain,
                max_depth=min(depth + RECHECK_DEPTH, config.max_depth),
                samples=RECHECK_SAMPLES * samples,
                seed=seed,
                budget=budget,
                n_jobs=1,
            )
            item.confirmed = bool(deeper.bounded_components)
    except AmoebaError as exc:
        logger.warning(f"Item {index} failed: {exc}")
        item.error = str(exc)
    return item


def _scan_index(index: int, spec: FamilySpec, params: Dict[str, Any]) -> ScanItem:
    p = random_polynomial(spec, index)
    if not is_maximally_sparse(p):
        p = sparsify(p)
    return check_solidity(p, index=index, **params)


def passare_scan(
    spec: FamilySpec,
    depth: Optional[int] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    budget: Optional[int] = None,
    n_jobs: Optional[int] = None,
    progress: bool = True,
) -> ScanReport:
    """
    Run the solidity check on every member of a family.

    Members that are not maximally sparse are reduced with
    :func:`sparsify` first. Items are independent and may run in
    parallel; the report lists them in index order.
    """
    config = Config()
    params = {
        "depth": config.default_depth if depth is None else depth,
        "samples": config.default_samples if samples is None else samples,
        "seed": config.seed if seed is None else seed,
        "budget": config.cell_budget if budget is None else budget,
    }
    with ProcessingLogger(f"solidity scan of {spec.count} polynomials", logger):
        indices = tqdm(range(spec.count), desc="scan", unit="poly", disable=not progress)
        items = map_items(_scan_index, indices, spec, params, n_jobs=n_jobs)

    report = ScanReport(spec=spec, params=params, items=list(items))
    if report.confirmed:
        logger.warning(f"Confirmed candidates: {[item.index for item in report.confirmed]}")
    return report
