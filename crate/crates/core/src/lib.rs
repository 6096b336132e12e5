//! Exact trigonometry and Hartley transforms over finite fields.
//!
//! The building blocks, bottom up:
//!
//! - [`gf`]: GF(p^r) in a polynomial basis (p odd).
//! - [`gaussian`]: `a + jb` over GF(q) with `j^2 = -1`, for `q ≡ 3 (mod 4)`.
//! - [`ktrig`]: `cos_k`, `sin_k` and `cas_k` of the angle of `α^i`.
//! - [`hartley`]: the forward/inverse transform, spectral convolution,
//!   delay and the other spectral identities.
//! - [`spectra`]: which spectra come from base-field signals, and their
//!   cyclotomic classes.
//! - [`text`] and [`cli`]: text formats and the command-line front end.
//!
//! ```
//! use gf_hartley::{Field, TransformPlan};
//!
//! let gf7 = Field::prime(7).unwrap();
//! let plan = TransformPlan::new(gf7.clone(), gf7.clone(), gf7.constant(3)).unwrap();
//! let v = plan.signal_from_base(&[1, 2, 0, 0, 0, 0].map(|c| gf7.constant(c))).unwrap();
//! let spectrum = plan.forward(&v).unwrap();
//! assert_eq!(spectrum.to_string(), "3,2+2j,2j,6,5j,2+5j");
//! assert_eq!(plan.inverse(&spectrum).unwrap(), v);
//! ```

pub mod cli;
pub mod error;
pub mod gaussian;
pub mod gf;
pub mod hartley;
pub mod ktrig;
mod poly;
pub mod spectra;
pub mod text;

pub use error::{Error, Result};
pub use gaussian::{GaussianElement, GaussianField};
pub use gf::{Field, FieldElement};
pub use hartley::{Frequency, Sequence, Signal, Spectrum, Time, TransformPlan};
pub use ktrig::{TrigContext, TrigTable};
pub use spectra::{
    cyclotomic_classes, expand_spectrum, free_components, is_valid_spectrum,
    CyclotomicPartition,
};
