"""Exact BC_n-symmetric interpolation and Koornwinder polynomials, their
symmetric-function liftings, and machine checks of the identities they satisfy."""

__version__ = "0.1.0"
