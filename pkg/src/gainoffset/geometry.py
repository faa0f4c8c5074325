"""Centered-vector arithmetic: the shared numeric core.

Everything in this package reduces to the centered form of a word (the
word minus its mean times the all-one vector). An unknown offset moves a
word along the all-one direction and vanishes under centering; an unknown
positive gain scales the centered part without rotating it. Correlation
between two words is the cosine of the angle between their centered forms.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ConstantWordError

__all__ = [
    "CONSTANT_REL_TOL",
    "as_word",
    "mean",
    "center",
    "sigma",
    "sigma_squared",
    "is_constant",
    "pearson_rho",
    "pearson_distance",
]

# Received words are floating point, so "constant" is judged relative to the
# word's own magnitude rather than as an exact zero deviation.
CONSTANT_REL_TOL = 1e-12


def as_word(u) -> np.ndarray:
    """Coerce to a 1-D float vector of length >= 3 with finite entries."""
    w = np.asarray(u, dtype=float)
    if w.ndim != 1:
        raise ValueError(f"a word must be one-dimensional, got shape {w.shape}")
    if w.size < 3:
        raise ValueError(f"a word must have length at least 3, got {w.size}")
    if not np.isfinite(w).all():
        raise ValueError("word entries must be finite")
    return w


def mean(u) -> float:
    """Arithmetic mean of the entries."""
    return float(as_word(u).mean())


def center(u) -> np.ndarray:
    """Subtract the mean from every entry; the result has mean zero."""
    w = as_word(u)
    return w - w.mean()


def sigma(u) -> float:
    """Euclidean norm of the centered word (unnormalised standard deviation)."""
    return float(np.linalg.norm(center(u)))


def sigma_squared(u) -> float:
    """Squared Euclidean norm of the centered word."""
    c = center(u)
    return float(c @ c)


def is_constant(u) -> bool:
    """True when the deviation is negligible relative to the word's magnitude."""
    w = as_word(u)
    c = w - w.mean()
    return math.sqrt(float(c @ c)) <= CONSTANT_REL_TOL * max(1.0, float(np.linalg.norm(w)))


def _checked_pair(u, v) -> tuple[np.ndarray, np.ndarray, float, float]:
    """Centered forms and deviations of two same-length non-constant words."""
    wu, wv = as_word(u), as_word(v)
    if wu.size != wv.size:
        raise ValueError(f"length mismatch: {wu.size} vs {wv.size}")
    cu = wu - wu.mean()
    cv = wv - wv.mean()
    su = float(np.linalg.norm(cu))
    sv = float(np.linalg.norm(cv))
    if su <= CONSTANT_REL_TOL * max(1.0, float(np.linalg.norm(wu))):
        raise ConstantWordError(f"first word is constant (sigma={su:.3g})")
    if sv <= CONSTANT_REL_TOL * max(1.0, float(np.linalg.norm(wv))):
        raise ConstantWordError(f"second word is constant (sigma={sv:.3g})")
    return cu, cv, su, sv


def pearson_rho(u, v) -> float:
    """Correlation coefficient of two non-constant words, clamped to [-1, 1].

    Equals the cosine of the angle between the centered words. The clamp
    guards downstream sqrt(1 - rho^2) against rounding pushing |rho|
    fractionally above one.
    """
    cu, cv, su, sv = _checked_pair(u, v)
    return float(np.clip(float(cu @ cv) / (su * sv), -1.0, 1.0))


def pearson_distance(u, v) -> float:
    """1 - pearson_rho(u, v); lies in [0, 2]."""
    return 1.0 - pearson_rho(u, v)
