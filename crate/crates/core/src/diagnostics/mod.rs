//! Gevrey classification of spectral decay, the phase-integral inequality
//! scanner, and weighted-norm ratio curves.

pub mod gevrey;
pub mod lemma;
pub mod ratio;

pub use gevrey::{
    fit_shells, gevrey_fit, velocity_shells, EtaFilter, GevreyClassification, GevreyFit,
    ShellSpectrum,
};
pub use lemma::{
    alpha2_min_oracle, kolmogorov_bound_verify, lemma_verify, normalized_ratio, paper_constant,
    KolmogorovBoundReport, LemmaReport,
};
pub use ratio::{
    bisect_radius, log_weighted_norm_and_tail, radius_pass, ratio_curve, resolvable_rate,
    RadiusProbe, RatioCurve, RatioRow,
};
