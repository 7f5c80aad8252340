"""
Ronkin function, Ronkin coefficients and the spine.

N_p(x) is the mean of ln|p| over the fiber torus above x. It is computed
with the uniform trapezoid rule on [0, 2π)ⁿ, which is spectrally accurate
for periodic integrands away from zeros of p.
"""

from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from algebra.evaluation import evaluate_many, pairing, torus_point
from amoeba.tropical import inactive_terms, tropical_hypersurface
from models.amoeba_model import AmoebaReport, ComplementComponent, OrderVector
from models.numeric_model import RonkinEstimate
from models.polynomial_model import LaurentPolynomial
from models.tropical_model import TropicalCurve, TropicalPolynomial
from utils.config import Config
from utils.exceptions import DimensionError
from utils.logger_config import get_logger

logger = get_logger("amoeba.ronkin")

START_NODES = 64
MAX_DOUBLINGS = 5
MAX_NODES_3D = 256
SINGULAR_THRESHOLD = 1e-300
ROW_BLOCK = 256


def _log_modulus_mean(p: LaurentPolynomial, x: np.ndarray, nodes: int) -> float:
    """Trapezoid mean of ln|p(e^{x+iθ})| on a nodes^n grid."""
    n = p.arity
    logs = np.log(np.abs(p.coefficients)) + pairing(x[None, :], p.exponents)[0]
    shift = float(logs.max())
    weights = np.exp(logs - shift) * np.exp(1j * np.angle(p.coefficients))
    theta = 2.0 * np.pi * np.arange(nodes) / nodes

    # per-axis characters e^{i α_j θ}, shape (terms, nodes)
    tables = [np.exp(1j * np.outer(p.exponents[:, j], theta)) for j in range(n)]
    magnitude_scale = float(np.abs(weights).sum())

    total = 0.0
    singular = []
    if n == 1:
        values = weights @ tables[0]
        block = np.abs(values)
        mask = block < SINGULAR_THRESHOLD * magnitude_scale
        total += np.log(np.where(mask, 1.0, block)).sum()
        singular.extend((k,) for k in np.flatnonzero(mask))
    else:
        for start in range(0, nodes, ROW_BLOCK):
            stop = min(start + ROW_BLOCK, nodes)
            head = weights[:, None] * tables[0][:, start:stop]
            if n == 2:
                values = head.T @ tables[1]
            else:
                values = np.einsum("ta,tb,tc->abc", head, tables[1], tables[2])
            block = np.abs(values)
            mask = block < SINGULAR_THRESHOLD * magnitude_scale
            total += np.log(np.where(mask, 1.0, block)).sum()
            for index in np.argwhere(mask):
                singular.append((index[0] + start,) + tuple(index[1:]))

    if singular:
        # nudge singular nodes by half a step on every axis
        half = np.pi / nodes
        angles = 2.0 * np.pi * np.asarray(singular, dtype=float) / nodes + half
        points = torus_point(np.broadcast_to(x, angles.shape), angles)
        nudged = np.abs(evaluate_many(p, points)) * np.exp(-shift)
        total += np.log(np.maximum(nudged, SINGULAR_THRESHOLD * magnitude_scale)).sum()

    return total / nodes ** n + shift


def ronkin_estimate(
    p: LaurentPolynomial,
    x: Sequence[float],
    tol: Optional[float] = None,
) -> RonkinEstimate:
    """
    Ronkin function value with convergence information.

    Starts at 64 nodes per axis and doubles until two successive
    estimates differ by less than ``tol`` (at most 5 doublings, at most
    256 nodes per axis in three variables).
    """
    tol = Config().ronkin_tolerance if tol is None else tol
    x = np.asarray(x, dtype=float).reshape(-1)
    if len(x) != p.arity:
        raise DimensionError(f"point has {len(x)} coordinates, polynomial has {p.arity}")

    cap = MAX_NODES_3D if p.arity == 3 else START_NODES * 2 ** MAX_DOUBLINGS
    nodes = START_NODES
    history = [_log_modulus_mean(p, x, nodes)]
    converged = False
    while nodes * 2 <= cap:
        nodes *= 2
        history.append(_log_modulus_mean(p, x, nodes))
        if abs(history[-1] - history[-2]) < tol:
            converged = True
            break
    return RonkinEstimate(value=history[-1], nodes_per_axis=nodes, converged=converged, history=history)


def ronkin_value(p: LaurentPolynomial, x: Sequence[float], tol: Optional[float] = None) -> float:
    """N_p(x); logs a warning when the quadrature did not settle."""
    estimate = ronkin_estimate(p, x, tol)
    if not estimate.converged:
        logger.warning(
            f"Ronkin quadrature at {tuple(x)} not converged after "
            f"{estimate.nodes_per_axis} nodes per axis"
        )
    return estimate.value


def _second_point(component: ComplementComponent) -> Optional[Tuple[float, ...]]:
    """A cell centre of the component other than the representative."""
    representative = np.asarray(component.representative)
    best, distance = None, 0.0
    for cell in component.cells:
        centre = np.asarray(cell.center)
        gap = float(np.linalg.norm(centre - representative))
        if gap > distance:
            best, distance = cell.center, gap
    return best


def ronkin_coefficient(
    p: LaurentPolynomial,
    component: ComplementComponent,
    tol: Optional[float] = None,
) -> Tuple[float, bool]:
    """
    a_ν = N_p(u) - ⟨ν, u⟩ at the component representative u.

    The value is recomputed at a second cell centre of the component
    when one exists.

    Returns:
        Tuple (a_ν, consistent) where ``consistent`` is False when the two
        evaluations differ by more than 2·tol
    """
    tol = Config().ronkin_tolerance if tol is None else tol
    order = np.asarray(component.order, dtype=float)
    u = np.asarray(component.representative, dtype=float)
    value = ronkin_value(p, u, tol) - float(order @ u)

    other = _second_point(component)
    if other is None:
        return value, True
    other = np.asarray(other, dtype=float)
    check = ronkin_value(p, other, tol) - float(order @ other)
    consistent = abs(check - value) <= 2.0 * tol
    if not consistent:
        logger.warning(
            f"Ronkin coefficient for order {component.order} differs between "
            f"representatives: {value:.6g} vs {check:.6g}"
        )
    return value, consistent


def spine_polynomial(
    p: LaurentPolynomial,
    report: AmoebaReport,
    tol: Optional[float] = None,
) -> TropicalPolynomial:
    """
    S_p(x) = max over detected components of (a_ν + ⟨ν, x⟩).

    Terms that never attain the max over the report domain are kept but
    listed as inactive.
    """
    terms = []
    for component in report.components:
        a, _ = ronkin_coefficient(p, component, tol)
        terms.append((component.order, a))
    t = TropicalPolynomial(terms=tuple(terms))
    inactive = inactive_terms(t, report.domain.lows, report.domain.highs)
    if inactive:
        logger.info(f"Spine terms never maximal on the domain: {list(inactive)}")
    return TropicalPolynomial(terms=t.terms, inactive=inactive)


def spine(p: LaurentPolynomial, report: AmoebaReport, tol: Optional[float] = None) -> TropicalCurve:
    """
    Spine of the amoeba relative to the components in ``report``.

    Returns an empty curve when fewer than two components are known.
    """
    if p.arity != 2:
        raise DimensionError("spine extraction needs two variables")
    if report.component_count < 2:
        logger.warning("Spine needs at least two complement components")
        return TropicalCurve()
    return tropical_hypersurface(spine_polynomial(p, report, tol))


def ronkin_coefficients(
    p: LaurentPolynomial,
    report: AmoebaReport,
    tol: Optional[float] = None,
) -> Dict[OrderVector, float]:
    """a_ν for every component of the report."""
    return {c.order: ronkin_coefficient(p, c, tol)[0] for c in report.components}
