"""Zero-, one- and zero-and-one-inflated beta distributions.

Densities, distribution functions, moments and sampling; ML and
conditional-moment estimation with Fisher-information standard errors; a
Monte Carlo harness for estimator studies; censored-normal (Tobit)
comparators and empirical-CDF goodness-of-fit checks.
"""
from .beta import BetaParams, beta_cdf, beta_logpdf, beta_moment, beta_pdf, beta_ppf, beta_sample, make_rng, substream
from .errors import (BoundaryEstimateError, DataError, DomainError, EstimationError, InflBetaError,
                     InsufficientDataError, MomentError, OptimizationError, SupportError)
from .estimation import (BoundaryWarning, FisherMatrix, FitReport, SuffStats, cm_mu_phi, delta_method_var,
                         fisher_info, fit, loglik, mle_alpha, mle_gamma, mle_mu_phi, score, score_mu_phi,
                         sufficient_stats)
from .gof import GofCurve, ecdf, gof_curve, ks_statistic
from .inflated import (BeinfDeltaParams, BeinfParams, CanonicalEta, Family, InflationPoint, InflParams,
                       beinf_cdf, beinf_logpdf, beinf_moments, beinf_pdf, beinf_sample, canonical_form, cdf,
                       cdf_left, delta_convert, delta_to_standard, infl_cdf, infl_logpdf, infl_moments,
                       infl_pdf, infl_sample, logpdf, mean_var, pdf, sample)
from .montecarlo import StudyConfig, StudyRow, preset, run_study
from .optimize import ObjectiveProblem, OptimizeResult, maximize
from .tobit import Censoring, TobitParams, tobit_cdf, tobit_fit, tobit_loglik

__version__ = "0.1.0"
