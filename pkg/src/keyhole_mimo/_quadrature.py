"""Thin wrapper around scipy's adaptive Gauss-Kronrod quadrature.

All density/capacity integrals in this package go through ``quad_checked``
so that a non-converged QUADPACK call surfaces as a diagnostic error
instead of a silently wrong number.
"""

from scipy import integrate


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to reach the requested tolerance."""


def quad_checked(func, a, b, epsabs=1e-12, epsrel=1e-11, limit=200):
    """Integrate func over [a, b], raising QuadratureError on non-convergence."""
    out = integrate.quad(func, a, b, epsabs=epsabs, epsrel=epsrel,
                         limit=limit, full_output=True)
    if len(out) > 3:
        raise QuadratureError(
            f"quadrature over [{a}, {b}] did not converge: {out[3]}")
    return out[0]
