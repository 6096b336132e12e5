//! The Hartley transform over a finite field.
//!
//! A [`TransformPlan`] fixes a base field GF(q), an extension GF(q^m) with
//! `q^m ≡ 3 (mod 4)`, and a kernel `α` of order N in the extension. Then
//!
//! ```text
//! V_k = Σ_i v_i cas_k(α^i)          (forward)
//! v_i = N^-1 Σ_k V_k cas_k(α^i)     (inverse)
//! ```
//!
//! Both directions use the same kernel and are evaluated by direct O(N²)
//! summation. Signals and spectra are Gaussian-valued; a signal with values
//! in the embedded base field is the classical case.

use std::fmt;
use std::marker::PhantomData;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gaussian::{GaussianElement, GaussianField};
use crate::gf::{Field, FieldElement};
use crate::ktrig::TrigContext;
use crate::spectra::{cyclotomic_classes, CyclotomicPartition};

#[derive(Debug)]
enum Embedding {
    /// base and extension are the same field
    Identity,
    /// prime base field: integers map to constants
    Constant,
    /// image of the base field's generator: a root of its modulus
    Root(FieldElement),
}

#[derive(Debug)]
struct PlanInner {
    base: Field,
    ext: Field,
    m: usize,
    embedding: Embedding,
    trig: TrigContext,
    inv_n: FieldElement,
    partition: CyclotomicPartition,
}

/// Immutable, cheaply clonable description of one transform.
#[derive(Clone, Debug)]
pub struct TransformPlan(Arc<PlanInner>);

impl TransformPlan {
    /// Plan with kernel `alpha` in `ext`; the block length is its order.
    pub fn new(base: Field, ext: Field, alpha: FieldElement) -> Result<TransformPlan> {
        if base.characteristic() != ext.characteristic() {
            return Err(Error::InvalidPlan(format!(
                "{base} and {ext} have different characteristics"
            )));
        }
        if !ext.degree().is_multiple_of(base.degree()) {
            return Err(Error::InvalidPlan(format!("{base} is not a subfield of {ext}")));
        }
        let m = ext.degree() / base.degree();
        let gi = GaussianField::new(ext.clone())?;
        let trig = TrigContext::new(gi, alpha)?;
        let n = trig.len();
        let p = ext.characteristic();
        let inv_n = ext.constant(n as u64 % p).inv()?;
        let embedding = if base == ext {
            Embedding::Identity
        } else if base.degree() == 1 {
            Embedding::Constant
        } else {
            Embedding::Root(find_root(base.modulus(), &ext)?)
        };
        let partition = cyclotomic_classes(n, base.size())?;
        Ok(TransformPlan(Arc::new(PlanInner {
            base,
            ext,
            m,
            embedding,
            trig,
            inv_n,
            partition,
        })))
    }

    /// Plan of length `n` using the first element of order `n` in `ext`.
    pub fn with_length(base: Field, ext: Field, n: u64) -> Result<TransformPlan> {
        let alpha = ext.find_element_of_order(n)?;
        TransformPlan::new(base, ext, alpha)
    }

    pub fn base(&self) -> &Field {
        &self.0.base
    }

    pub fn ext(&self) -> &Field {
        &self.0.ext
    }

    /// Extension degree m of GF(q^m) over GF(q).
    pub fn m(&self) -> usize {
        self.0.m
    }

    /// Block length N.
    pub fn len(&self) -> usize {
        self.0.trig.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn alpha(&self) -> &FieldElement {
        self.0.trig.alpha()
    }

    pub fn trig(&self) -> &TrigContext {
        &self.0.trig
    }

    pub fn gaussian_field(&self) -> &GaussianField {
        self.0.trig.gaussian_field()
    }

    /// `(N mod p)^-1` in the extension.
    pub fn inv_n(&self) -> &FieldElement {
        &self.0.inv_n
    }

    /// N reduced mod p, as a Gaussian element.
    pub fn n_scalar(&self) -> GaussianElement {
        self.gaussian_field().integer(self.len() as i64)
    }

    /// Cyclotomic classes of `k ↦ -q·k mod N` for this plan.
    pub fn partition(&self) -> &CyclotomicPartition {
        &self.0.partition
    }

    /// Injects a base-field element into the extension.
    pub fn embed(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.field() != &self.0.base {
            return Err(Error::FieldMismatch);
        }
        Ok(match &self.0.embedding {
            Embedding::Identity => x.clone(),
            Embedding::Constant => self.0.ext.constant(x.coeffs()[0]),
            Embedding::Root(beta) => horner(x.coeffs(), beta),
        })
    }

    /// Base-field element as a real Gaussian element over the extension.
    pub fn lift(&self, x: &FieldElement) -> Result<GaussianElement> {
        self.gaussian_field().embed(&self.embed(x)?)
    }

    /// Whether `x` lies in the embedded base field: real, and fixed by `y ↦ y^q`.
    pub fn is_base_valued(&self, x: &GaussianElement) -> bool {
        x.is_real() && x.re().pow_uint(self.0.base.size() as u128) == *x.re()
    }

    pub fn signal(&self, values: Vec<GaussianElement>) -> Result<Signal> {
        Sequence::new(self, values)
    }

    pub fn spectrum(&self, values: Vec<GaussianElement>) -> Result<Spectrum> {
        Sequence::new(self, values)
    }

    /// Signal from base-field values, embedded into the extension.
    pub fn signal_from_base(&self, values: &[FieldElement]) -> Result<Signal> {
        let lifted = values.iter().map(|x| self.lift(x)).collect::<Result<_>>()?;
        self.signal(lifted)
    }

    pub fn zero_signal(&self) -> Signal {
        let zero = self.gaussian_field().zero();
        Sequence::from_parts(self.clone(), vec![zero; self.len()])
    }

    /// The unit impulse `(1, 0, ..., 0)`.
    pub fn impulse(&self) -> Signal {
        self.basis_signal(0)
    }

    /// The `k`-th unit vector.
    pub fn basis_signal(&self, k: usize) -> Signal {
        let mut s = self.zero_signal();
        s.values[k % self.len()] = self.gaussian_field().one();
        s
    }

    fn check<D>(&self, s: &Sequence<D>) -> Result<()> {
        if s.plan == *self {
            Ok(())
        } else {
            Err(Error::PlanMismatch)
        }
    }

    /// `out_k = Σ_i values_i · cas_k(i)`
    fn apply_kernel(&self, values: &[GaussianElement]) -> Vec<GaussianElement> {
        let trig = &self.0.trig;
        let n = self.len() as i64;
        (0..n)
            .map(|k| {
                values
                    .iter()
                    .zip(0..n)
                    .filter(|(v, _)| !v.is_zero())
                    .fold(self.gaussian_field().zero(), |acc, (v, i)| {
                        acc + v * &trig.cas(k, i)
                    })
            })
            .collect()
    }

    pub fn forward(&self, signal: &Signal) -> Result<Spectrum> {
        self.check(signal)?;
        Ok(Sequence::from_parts(self.clone(), self.apply_kernel(&signal.values)))
    }

    pub fn inverse(&self, spectrum: &Spectrum) -> Result<Signal> {
        self.check(spectrum)?;
        let values = self
            .apply_kernel(&spectrum.values)
            .into_iter()
            .map(|x| x.scale(&self.0.inv_n))
            .collect();
        Ok(Sequence::from_parts(self.clone(), values))
    }

    /// Cyclic convolution through the spectral product
    /// `W_k = (G_k V_k + G_k V_-k + G_-k V_k - G_-k V_-k) / 2`.
    pub fn convolve_spectral(&self, g: &Signal, v: &Signal) -> Result<Signal> {
        let gs = self.forward(g)?;
        let vs = self.forward(v)?;
        let inv2 = self.0.trig.inv2();
        let n = self.len();
        let w = (0..n)
            .map(|k| {
                let nk = (n - k) % n;
                let (gk, gm) = (&gs.values[k], &gs.values[nk]);
                let (vk, vm) = (&vs.values[k], &vs.values[nk]);
                (gk * vk + gk * vm + gm * vk - gm * vm).scale(inv2)
            })
            .collect();
        self.inverse(&Sequence::from_parts(self.clone(), w))
    }

    /// `w_n = Σ_i g_i v_(n-i mod N)` by the double loop.
    pub fn convolve_naive(&self, g: &Signal, v: &Signal) -> Result<Signal> {
        self.check(g)?;
        self.check(v)?;
        let n = self.len();
        let w = (0..n)
            .map(|out| {
                (0..n).fold(self.gaussian_field().zero(), |acc, i| {
                    acc + &g.values[i] * &v.values[(out + n - i) % n]
                })
            })
            .collect();
        Ok(Sequence::from_parts(self.clone(), w))
    }

    /// Spectrum of the signal delayed by `d`:
    /// `V_k = cos_k(d) G_k + sin_k(d) G_-k`.
    pub fn shift_spectrum(&self, spectrum: &Spectrum, d: i64) -> Result<Spectrum> {
        self.check(spectrum)?;
        let trig = &self.0.trig;
        let n = self.len();
        let values = (0..n)
            .map(|k| {
                let ki = k as i64;
                trig.cos(ki, d) * &spectrum.values[k]
                    + trig.sin(ki, d) * &spectrum.values[(n - k) % n]
            })
            .collect();
        Ok(Sequence::from_parts(self.clone(), values))
    }

    /// `V_0`, which equals the sum of the signal.
    pub fn dc_term(&self, spectrum: &Spectrum) -> Result<GaussianElement> {
        self.check(spectrum)?;
        Ok(spectrum.values[0].clone())
    }

    /// `N^-1 Σ_k V_k`, which equals `v_0`.
    pub fn initial_value(&self, spectrum: &Spectrum) -> Result<GaussianElement> {
        self.check(spectrum)?;
        let sum = spectrum
            .values
            .iter()
            .fold(self.gaussian_field().zero(), |acc, x| acc + x);
        Ok(sum.scale(&self.0.inv_n))
    }

    /// `{V_(N-k mod N)}`, the spectrum of the time-reversed signal.
    pub fn reverse(&self, spectrum: &Spectrum) -> Result<Spectrum> {
        self.check(spectrum)?;
        Ok(spectrum.reversed())
    }
}

impl PartialEq for TransformPlan {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.base == other.0.base
                && self.0.ext == other.0.ext
                && self.alpha() == other.alpha())
    }
}

impl Eq for TransformPlan {}

fn horner(coeffs: &[u64], at: &FieldElement) -> FieldElement {
    let field = at.field();
    coeffs
        .iter()
        .rev()
        .fold(field.zero(), |acc, &c| &acc * at + field.constant(c))
}

/// First root, in index order, of a base-field modulus inside `ext`.
fn find_root(modulus: &[u64], ext: &Field) -> Result<FieldElement> {
    ext.elements()
        .find(|beta| horner(modulus, beta).is_zero())
        .ok_or_else(|| Error::InvalidPlan(format!("no subfield embedding into {ext}")))
}

/// Marker for time-domain sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Time;

/// Marker for Hartley-domain sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frequency;

/// A length-N vector of Gaussian elements tied to one plan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence<D> {
    plan: TransformPlan,
    values: Vec<GaussianElement>,
    _domain: PhantomData<D>,
}

pub type Signal = Sequence<Time>;
pub type Spectrum = Sequence<Frequency>;

impl<D> Sequence<D> {
    fn new(plan: &TransformPlan, values: Vec<GaussianElement>) -> Result<Sequence<D>> {
        if values.len() != plan.len() {
            return Err(Error::LengthMismatch {
                expected: plan.len(),
                got: values.len(),
            });
        }
        if values.iter().any(|x| x.field() != plan.ext()) {
            return Err(Error::FieldMismatch);
        }
        Ok(Sequence::from_parts(plan.clone(), values))
    }

    fn from_parts(plan: TransformPlan, values: Vec<GaussianElement>) -> Sequence<D> {
        Sequence {
            plan,
            values,
            _domain: PhantomData,
        }
    }

    pub fn plan(&self) -> &TransformPlan {
        &self.plan
    }

    pub fn values(&self) -> &[GaussianElement] {
        &self.values
    }

    pub fn into_values(self) -> Vec<GaussianElement> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Entry at `index mod N`.
    pub fn at(&self, index: i64) -> &GaussianElement {
        &self.values[index.rem_euclid(self.values.len() as i64) as usize]
    }

    /// `out_i = self_(i - d)`: a cyclic delay by `d`.
    pub fn rotated(&self, d: i64) -> Sequence<D> {
        let n = self.len() as i64;
        let values = (0..n).map(|i| self.at(i - d).clone()).collect();
        Sequence::from_parts(self.plan.clone(), values)
    }

    /// `out_i = self_(-i)`.
    pub fn reversed(&self) -> Sequence<D> {
        let n = self.len() as i64;
        let values = (0..n).map(|i| self.at(-i).clone()).collect();
        Sequence::from_parts(self.plan.clone(), values)
    }

    pub fn scaled(&self, c: &GaussianElement) -> Sequence<D> {
        let values = self.values.iter().map(|x| x * c).collect();
        Sequence::from_parts(self.plan.clone(), values)
    }

    pub fn checked_add(&self, other: &Sequence<D>) -> Result<Sequence<D>> {
        if self.plan != other.plan {
            return Err(Error::PlanMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Sequence::from_parts(self.plan.clone(), values))
    }

    /// Sum of squares `Σ x_i^2`.
    pub fn energy(&self) -> GaussianElement {
        let zero = self.plan.gaussian_field().zero();
        self.values.iter().fold(zero, |acc, x| acc + x * x)
    }

    /// Reads the same values in the other domain.
    pub fn reinterpret<E>(&self) -> Sequence<E> {
        Sequence::from_parts(self.plan.clone(), self.values.clone())
    }
}

impl<D> fmt::Display for Sequence<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::render_vector(&self.values))
    }
}
