"""Orthogonal polynomials, reproducing kernels and Cesaro means on the parabolic
domain, the paraboloid surface and the solid paraboloid."""
from . import domain_u, quadrature, solid_v, specfun, sphere, surface_v0
from .specfun import CesaroSpec

__all__ = ["specfun", "quadrature", "sphere", "domain_u", "surface_v0", "solid_v", "CesaroSpec"]
