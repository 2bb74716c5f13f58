"""Shared tolerance configuration threaded through every predicate."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical thresholds used by decompositions and relation verdicts.

    relation : verdict threshold for relation defects (and unit-ball slack).
    herm     : Hermiticity pre-checks, absolute after scaling by max(1, |a|).
    recon    : reconstruction invariants of decompositions.
    rank     : singular values below rank * sigma_max are treated as zero.
    """

    relation: float = 1e-8
    herm: float = 1e-8
    recon: float = 1e-8
    rank: float = 1e-10

    def __post_init__(self) -> None:
        for name in ("relation", "herm", "recon", "rank"):
            if getattr(self, name) <= 0:
                raise ValueError(f"tolerance {name!r} must be positive")

    @classmethod
    def from_scalar(cls, tol: float) -> "ToleranceConfig":
        """One-knob constructor: verdict/hermiticity/reconstruction thresholds
        all set to ``tol``; the rank cut keeps its default."""
        return cls(relation=float(tol), herm=float(tol), recon=float(tol))


DEFAULT_TOL = ToleranceConfig()
