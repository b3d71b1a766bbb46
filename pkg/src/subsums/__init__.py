"""Subsum sets of geometric series with ratio 1/s and the distributions of
their random subsums: exact atoms, Lebesgue-type classification, interval
covers, CDF bounds and Monte Carlo cross-checks."""

from .atoms import AtomTable, brute_force_table, extend, initial_table, max_mass, table_at
from .cdf import CdfBounds, cdf_bounds, cdf_curve, lipschitz_check
from .classifier import Classification, ProductStatus, Verdict, classify, compute_Q, compute_W
from .cover_measure import IntervalCover, cover, cover_sequence, merge_intervals
from .digit_system import Model, ValidationReport, column_at, normalize, tail_sup, validate
from .exceptions import (
    InapplicableError,
    InvariantViolation,
    ModelError,
    ResourceGuardError,
    SubsumError,
    UnsupportedOperationError,
)
from .modelio import example_model, load_model, loads_model
from .sampler import SampleBatch, band_check, sample

__version__ = "0.1.0"
