//! Analysis toolkit for algebraic soft-decision decoding of Reed-Solomon
//! codes over bit-level erasure and symmetric channels.
//!
//! The crate covers the full pipeline:
//!
//! - [`algebra`]: GF(2^m) tables, polynomials, evaluation-map encoding, and a
//!   conventional symbol-erasure decoder as the classical baseline.
//! - [`channels`]: bit-erasure, bit-flip, one-bit-flipped, and grouped
//!   (modulation) erasure channels with reproducible per-trial streams.
//! - [`mas`]: multiplicity assignment (proportional and two-level), score,
//!   cost, and the exact-rational sufficiency verdict.
//! - [`regions`]: guaranteed decoding radii in closed form, search oracles,
//!   worst-case pattern generators, and the classical baseline radii.
//! - [`kv`]: a desk-scale interpolation list decoder used as ground truth for
//!   the sufficiency oracle.
//! - [`sim`]: Monte Carlo and exact frame-error-rate evaluation with analytic
//!   bound curves.
//!
//! Monte Carlo trial loops are data-parallel via rayon under the default
//! `parallel` feature; disabling it falls back to the identical sequential
//! loop (estimates are bit-for-bit equal either way).

pub mod algebra;
pub mod channels;
pub mod error;
pub mod kv;
pub mod mas;
pub mod regions;
pub mod sim;

pub use algebra::{encode, erasure_decode, CodeParams, FieldContext, Gf, Poly};
pub use channels::{transmit, transmit_seeded, ChannelSpec, ReceivedWord, TypeProfile};
pub use error::{Error, Result};
pub use kv::{asd_decode, CandidateList, DecoderLimits, MasStrategy};
pub use mas::{
    bsc_matrix, eta, pmas_assign, pmas_matrix, score_cost, sufficient, BscMas, DecodabilityReport,
    MasMode, MasProfile, MultiplicityMatrix, Rat,
};
pub use regions::{
    baseline_radii, bec_radius, bec_radius_oracle, bec_undecodable_bound, bsc_optimal,
    bsc_radius_at, mod_radius, worst_pattern_bec, worst_pattern_bsc, BaselineRadii, BecRadius,
    BscRadiusSolution, WorstCasePattern,
};
pub use sim::{
    exact_fer_bec, fer_bounds, run_fer, run_fer_seq, DecoderTag, FerEstimate, Strategy,
    TrialConfig,
};
