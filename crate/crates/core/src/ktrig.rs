//! Finite-field trigonometry: `cos_k`, `sin_k` and `cas_k` of the "angle" of
//! `α^i` for a fixed kernel `α` of multiplicative order N.
//!
//! ```text
//! cos_k(i) = (α^(ik) + α^(-ik)) / 2
//! sin_k(i) = (α^(ik) - α^(-ik)) / 2j
//! cas_k(i) = cos_k(i) + sin_k(i)
//! ```
//!
//! All values live in the Gaussian extension of the host field. Indices are
//! read modulo N, so negative indices behave as expected.

use crate::error::{Error, Result};
use crate::gaussian::{GaussianElement, GaussianField};
use crate::gf::FieldElement;

#[derive(Clone, Debug)]
pub struct TrigContext {
    gi: GaussianField,
    alpha: FieldElement,
    n: usize,
    inv2: FieldElement,
    /// `α^0 .. α^(N-1)`
    powers: Vec<FieldElement>,
}

impl TrigContext {
    /// Context for the kernel `alpha`, whose order becomes the block length.
    pub fn new(gi: GaussianField, alpha: FieldElement) -> Result<TrigContext> {
        if alpha.field() != gi.base() {
            return Err(Error::FieldMismatch);
        }
        let order = alpha.order()?;
        let n = usize::try_from(order).map_err(|_| Error::InvalidLength)?;
        let mut powers = Vec::with_capacity(n);
        let mut acc = gi.base().one();
        for _ in 0..n {
            powers.push(acc.clone());
            acc = &acc * &alpha;
        }
        let inv2 = gi.base().constant(2).inv()?;
        Ok(TrigContext {
            gi,
            alpha,
            n,
            inv2,
            powers,
        })
    }

    pub fn gaussian_field(&self) -> &GaussianField {
        &self.gi
    }

    pub fn alpha(&self) -> &FieldElement {
        &self.alpha
    }

    /// Block length N, the order of `α`.
    pub fn len(&self) -> usize {
        self.n
    }

    /// Always false: N is at least 1.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// `2^-1` in the host field.
    pub fn inv2(&self) -> &FieldElement {
        &self.inv2
    }

    pub fn reduce_index(&self, i: i64) -> usize {
        i.rem_euclid(self.n as i64) as usize
    }

    /// `α^e` for any integer `e`.
    pub fn alpha_pow(&self, e: i64) -> &FieldElement {
        &self.powers[self.reduce_index(e)]
    }

    fn exponent(&self, k: i64, i: i64) -> usize {
        let n = self.n as i128;
        ((k as i128 * i as i128).rem_euclid(n)) as usize
    }

    /// `(α^(ik), α^(-ik))`
    fn pair(&self, k: i64, i: i64) -> (&FieldElement, &FieldElement) {
        let e = self.exponent(k, i);
        (&self.powers[e], &self.powers[(self.n - e) % self.n])
    }

    pub fn cos(&self, k: i64, i: i64) -> GaussianElement {
        let (up, down) = self.pair(k, i);
        let re = &(up + down) * &self.inv2;
        self.gi.embed(&re).expect("kernel lives in the host field")
    }

    /// Uses `1/(2j) = -j/2`, so the value is `j · (-(α^(ik) - α^(-ik))/2)`.
    pub fn sin(&self, k: i64, i: i64) -> GaussianElement {
        let (up, down) = self.pair(k, i);
        let im = -(&(up - down) * &self.inv2);
        self.gi
            .element(self.gi.base().zero(), im)
            .expect("kernel lives in the host field")
    }

    pub fn cas(&self, k: i64, i: i64) -> GaussianElement {
        let (up, down) = self.pair(k, i);
        let re = &(up + down) * &self.inv2;
        let im = -(&(up - down) * &self.inv2);
        self.gi.element(re, im).expect("kernel lives in the host field")
    }

    /// `(cos, sin)` with `table[k][i]`, k indexing rows.
    pub fn table(&self) -> TrigTable {
        let n = self.n as i64;
        let grid = |f: &dyn Fn(i64, i64) -> GaussianElement| -> Vec<Vec<GaussianElement>> {
            (0..n).map(|k| (0..n).map(|i| f(k, i)).collect()).collect()
        };
        TrigTable {
            cos: grid(&|k, i| self.cos(k, i)),
            sin: grid(&|k, i| self.sin(k, i)),
        }
    }
}

/// Row `k`, column `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrigTable {
    pub cos: Vec<Vec<GaussianElement>>,
    pub sin: Vec<Vec<GaussianElement>>,
}
