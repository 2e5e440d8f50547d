"""High-precision numeric validation of reduction results.

Expression trees are evaluated with square and odd p-th roots computed by
Newton iteration at the working precision, seeded from 53-bit estimates.
Error control is by dual-precision agreement: every published value is
computed at B and 2B bits and accepted only if the two agree to the target
tolerance; disagreement raises, never passes silently.

The root-map check computes one complex zero y of Z^p - (d + sqrt(R)), forms
the p scaled conjugate sums u_k = z^((p-1)/2) (y zeta^k + y' zeta^-k) with a
primitive p-th root of unity zeta, and confirms they are p distinct zeros of
the trace polynomial.  zeta itself is computed two independent ways (Newton
on w^p - 1 versus high-precision cosine/sine) and cross-checked.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import mp, mpc, mpf

from . import exprtree as et
from .construct import InstanceParams, trace_poly
from .exactnum import rational_is_square
from .poly import Poly, rational_roots

DEFAULT_BITS = 256

# Residual exponent margin: "is a zero" means relative residual < 2^-(B - 56).
ZERO_MARGIN_BITS = 56
# Dual-precision agreement margin: B and 2B runs must agree to 2^-(B - 16).
AGREEMENT_MARGIN_BITS = 16
_GUARD = 32


class PrecisionError(ArithmeticError):
    """Results at precisions B and 2B disagree beyond tolerance."""


class EvalDomainError(ValueError):
    """Even root of a negative real requested in real mode."""


def decimal_str(q: Fraction, digits: int = 20) -> str:
    """Short decimal rendering of an exact bound, for human-facing output."""
    with mp.workprec(max(64, digits * 4)):
        return mp.nstr(_from_fraction(q), digits)


def mpf_to_fraction(x) -> Fraction:
    """Exact rational value of a finite mpf (every mpf is dyadic)."""
    if isinstance(x, mpc):
        raise ValueError("complex value has no rational magnitude; take abs first")
    if not mp.isfinite(x):
        raise ValueError(f"non-finite value {x}")
    sign, man, exp, _ = x._mpf_
    if man == 0:
        return Fraction(0)
    value = Fraction(man) * Fraction(2) ** exp
    return -value if sign else value


def _from_fraction(q: Fraction):
    return mpf(q.numerator) / mpf(q.denominator)


def _newton_sqrt(x):
    """Square root of x >= 0 by Newton iteration at the ambient precision."""
    if x == 0:
        return mpf(0)
    if x < 0:
        raise EvalDomainError("square root of a negative real in real mode")
    with mp.workprec(53):
        r = x ** mpf("0.5")
    eps = mpf(2) ** (-(mp.prec - 8))
    for _ in range(64):
        r_next = (r + x / r) / 2
        converged = abs(r_next - r) <= abs(r_next) * eps
        r = r_next
        if converged:
            break
    if abs(r * r - x) > abs(x) * mpf(2) ** (-(mp.prec - 16)):
        raise PrecisionError("square-root Newton iteration failed to converge")
    return r


def _newton_nth_root(x, n: int):
    """Real n-th root of x for odd n >= 3 (sign symmetry handles x < 0)."""
    if x == 0:
        return mpf(0)
    negative = x < 0
    ax = -x if negative else x
    with mp.workprec(53):
        r = ax ** (mpf(1) / n)
    eps = mpf(2) ** (-(mp.prec - 8))
    for _ in range(64):
        r_next = ((n - 1) * r + ax / r ** (n - 1)) / n
        converged = abs(r_next - r) <= abs(r_next) * eps
        r = r_next
        if converged:
            break
    if abs(r**n - ax) > abs(ax) * mpf(2) ** (-(mp.prec - 16)):
        raise PrecisionError("n-th-root Newton iteration failed to converge")
    return -r if negative else r


def _eval(node: et.Expr):
    if isinstance(node, et.Rat):
        return _from_fraction(node.value)
    if isinstance(node, et.Sqrt):
        return _newton_sqrt(_eval(node.arg))
    if isinstance(node, et.NthRoot):
        return _newton_nth_root(_eval(node.arg), node.degree)
    if isinstance(node, et.Add):
        total = mpf(0)
        for term in node.terms:
            total += _eval(term)
        return total
    if isinstance(node, et.Mul):
        prod = mpf(1)
        for factor in node.factors:
            prod *= _eval(factor)
        return prod
    if isinstance(node, et.Pow):
        base = _eval(node.base)
        if node.exponent < 0:
            if base == 0:
                raise ZeroDivisionError("zero base with negative exponent")
            return 1 / base ** (-node.exponent)
        return base**node.exponent
    raise TypeError(f"unknown expression node: {node!r}")


def eval_expression(tree: et.Expr, bits: int = DEFAULT_BITS):
    """Evaluate at `bits` working precision (single pass, no dual check)."""
    with mp.workprec(bits + _GUARD):
        return _eval(tree)


def eval_dual(tree: et.Expr, bits: int = DEFAULT_BITS):
    """Evaluate at bits and 2*bits; raise PrecisionError on disagreement.

    Returns the value computed at `bits`.
    """
    low = eval_expression(tree, bits)
    high = eval_expression(tree, 2 * bits)
    with mp.workprec(2 * bits + _GUARD):
        tol = mpf(2) ** (-(bits - AGREEMENT_MARGIN_BITS)) * (1 + abs(high))
        if abs(low - high) > tol:
            raise PrecisionError(
                f"precision-{bits} and precision-{2 * bits} values disagree: "
                f"{low} vs {high}"
            )
    return low


def _branch_residual(tree: et.Expr, params: InstanceParams, bits: int):
    """(residual, sign) at one precision: |(v^p - d)^2 - R| and sign of v^p - d."""
    with mp.workprec(bits + _GUARD):
        v = _eval(tree)
        w = v**params.p - _from_fraction(params.d)
        resid = abs(w * w - _from_fraction(params.R))
        return resid, (1 if w > 0 else -1)


def branch_residuals(result, bits: int = DEFAULT_BITS) -> dict:
    """Residuals |(v^p - d)^2 - R| for both reduction branches.

    The branch values themselves are dual-precision checked; the residual is
    reported at `bits` (it only shrinks at higher precision).  Also verifies
    that one branch has v^p - d matching +sqrt(R) and the other -sqrt(R).
    """
    if result.branches is None:
        raise ValueError("no branch expressions: u is irrational for this instance")
    params = result.params
    residuals = []
    signs = []
    for tree in result.branches:
        eval_dual(tree, bits)  # agreement gate on the branch value itself
        resid, sign = _branch_residual(tree, params, bits)
        resid2, sign2 = _branch_residual(tree, params, 2 * bits)
        if sign != sign2:
            raise PrecisionError("branch sign unstable between precisions")
        # Report the larger of the two as a conservative upper bound.
        residuals.append(max(mpf_to_fraction(resid), mpf_to_fraction(resid2)))
        signs.append(sign)
    return {
        "residuals": residuals,
        "max_residual": max(residuals),
        "branch_signs_consistent": sorted(signs) == [-1, 1],
    }


def zeta_two_ways(p: int, bits: int = DEFAULT_BITS):
    """Primitive p-th root of unity by two independent routes.

    Newton on w^p - 1 from a 53-bit seed, versus cosine/sine evaluated at full
    precision.  Raises PrecisionError if they disagree beyond 2^-(bits-16).
    """
    with mp.workprec(bits + _GUARD):
        with mp.workprec(53):
            angle = 2 * mp.pi / p
            seed = mpc(mp.cos(angle), mp.sin(angle))
        w = mpc(seed)
        eps = mpf(2) ** (-(mp.prec - 8))
        for _ in range(64):
            step = (w**p - 1) / (p * w ** (p - 1))
            w = w - step
            if abs(step) <= abs(w) * eps:
                break
        if abs(w**p - 1) > mpf(2) ** (-(mp.prec - 16)):
            raise PrecisionError("root-of-unity Newton iteration failed to converge")
        angle = 2 * mp.pi / p
        series = mpc(mp.cos(angle), mp.sin(angle))
        diff = abs(w - series)
        if diff > mpf(2) ** (-(bits - AGREEMENT_MARGIN_BITS)):
            raise PrecisionError(
                f"root-of-unity routes disagree by {diff} at {bits} bits"
            )
    return w, series, mpf_to_fraction(diff)


def _poly_eval_numeric(f: Poly, x):
    acc = _from_fraction(Fraction(f.coeffs[-1]))
    for c in reversed(f.coeffs[:-1]):
        acc = acc * x + _from_fraction(Fraction(c))
    return acc


def _root_map_once(params: InstanceParams, bits: int) -> list:
    """The p scaled conjugate sums u_k at one working precision."""
    p = params.p
    with mp.workprec(bits + _GUARD):
        if params.R > 0:
            sqrtR = _newton_sqrt(_from_fraction(params.R))
        else:
            sqrtR = mpc(0, _newton_sqrt(_from_fraction(-params.R)))
        w = _from_fraction(params.d) + sqrtR
        y = mp.exp(mp.log(mpc(w)) / p)  # principal complex p-th root
        z = _newton_nth_root(_from_fraction(params.D), p)
        zeta, _, _ = zeta_two_ways(p, bits)
        y_conj = z / y
        zhalf = z ** ((p - 1) // 2)
        return [zhalf * (y * zeta**k + y_conj * zeta ** (-k)) for k in range(p)]


def root_map_values(p: int, d, R, bits: int = DEFAULT_BITS) -> list:
    """The p scaled conjugate sums u_k as complex values at `bits` precision."""
    params = InstanceParams.create(p, d, R)
    if rational_is_square(params.R) is not None:
        raise ValueError(f"R = {params.R} is a rational square")
    return _root_map_once(params, bits)


def verify_root_map(
    p: int,
    d,
    R,
    bits: int = DEFAULT_BITS,
    tol_exp: int | None = None,
    max_p: int = 13,
) -> dict:
    """Check that the p scaled conjugate sums are p distinct zeros of the
    trace polynomial (numerically, at two precisions).

    Relative residual tolerance defaults to 2^-(bits - 56); the residual is
    scaled by sum_i |c_i| max(1, |u|)^i.  Intended for small p (the check is
    O(p^2) at high precision); raise `max_p` explicitly for larger sweeps.
    """
    if p > max_p:
        raise ValueError(f"p = {p} exceeds max_p = {max_p}; pass max_p explicitly")
    params = InstanceParams.create(p, d, R)
    if rational_is_square(params.R) is not None:
        raise ValueError(f"R = {params.R} is a rational square")
    f = trace_poly(params)
    tol_e = tol_exp if tol_exp is not None else bits - ZERO_MARGIN_BITS

    u_low = _root_map_once(params, bits)
    u_high = _root_map_once(params, 2 * bits)

    with mp.workprec(2 * bits + _GUARD):
        agree_tol = mpf(2) ** (-(bits - AGREEMENT_MARGIN_BITS))
        for lo, hi in zip(u_low, u_high):
            if abs(lo - hi) > agree_tol * (1 + abs(hi)):
                raise PrecisionError("root-map values disagree between precisions")

        tol = mpf(2) ** (-tol_e)
        abs_coeffs = [abs(_from_fraction(Fraction(c))) for c in f.coeffs]
        max_rel = mpf(0)
        for u in u_high:
            mag = max(mpf(1), abs(u))
            scale = mpf(0)
            for i, c in enumerate(abs_coeffs):
                scale += c * mag**i
            rel = abs(_poly_eval_numeric(f, u)) / scale
            max_rel = max(max_rel, rel)

        min_dist = None
        for i in range(p):
            for j in range(i + 1, p):
                dist = abs(u_high[i] - u_high[j])
                min_dist = dist if min_dist is None else min(min_dist, dist)
        distinct = min_dist > mpf(2) ** (-(bits // 2))
        value_strs = [mp.nstr(u, 30) for u in u_high]
        # Every rational zero of f must appear among the u_k.
        root_dists = {
            str(r): mpf_to_fraction(
                min(abs(u - _from_fraction(r)) for u in u_high)
            )
            for r in sorted(rational_roots(f))
        }

    return {
        "p": p,
        "values": value_strs,
        "max_relative_residual": mpf_to_fraction(max_rel),
        "tolerance": Fraction(1, 2**tol_e),
        "min_pairwise_distance": mpf_to_fraction(min_dist),
        "distinct": bool(distinct),
        "rational_root_distances": root_dists,
        "ok": bool(distinct and max_rel < tol),
    }
