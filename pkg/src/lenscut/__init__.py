"""Cut times, cut loci and diameter bounds for Berger metrics on lens spaces L(p;q)."""

from ._backend import backend_name
from .algebra import LensPoint, SpherePoint, canonicalize, deck_transform, lens_chordal_distance
from .diameter import DiameterBound, critical_points, cut_time_max_numeric, diameter_bound
from .geodesic import exp_lens, exp_su2, geodesic_trace
from .locus import CutLocusSample, Stratum, export_locus_csv, sample_cut_locus, sr_limit_sweep
from .metric import InitialCovector, MetricParams, covector_norm, t_of_tau, tau_of_t
from .oracle import NoPartner, NotReached, OracleConfig, brute_distance, find_maxwell_partner, verify_cut_point
from .roots import NoRootInRange, RootConfig
from .times import (
    CutData,
    Regime,
    conjugate_tau,
    cut_time,
    ell_minus,
    ell_plus,
    maxwell_tau,
    tau_ell,
    tau_ell_minus,
    tau_ell_plus,
)

__version__ = "0.1.0"
