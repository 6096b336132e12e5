//! Gaussian integers `a + jb` over GF(q), `j^2 = -1`.
//!
//! The pair is a field exactly when -1 is not a square in GF(q), i.e. when
//! `q ≡ 3 (mod 4)`. [`GaussianField`] checks that once; every
//! [`GaussianElement`] is created through it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::gf::{field_binop, Field, FieldElement};
use crate::text;

/// GF(q)[j]/(j^2 + 1) for a host field where -1 is a non-residue.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussianField {
    base: Field,
}

impl GaussianField {
    pub fn new(base: Field) -> Result<GaussianField> {
        if base.size() % 4 != 3 {
            return Err(Error::MinusOneIsResidue(base.to_string()));
        }
        Ok(GaussianField { base })
    }

    /// The host field GF(q).
    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn element(&self, re: FieldElement, im: FieldElement) -> Result<GaussianElement> {
        if re.field() != &self.base || im.field() != &self.base {
            return Err(Error::FieldMismatch);
        }
        Ok(GaussianElement { re, im })
    }

    pub fn embed(&self, x: &FieldElement) -> Result<GaussianElement> {
        self.element(x.clone(), self.base.zero())
    }

    pub fn zero(&self) -> GaussianElement {
        GaussianElement {
            re: self.base.zero(),
            im: self.base.zero(),
        }
    }

    pub fn one(&self) -> GaussianElement {
        GaussianElement {
            re: self.base.one(),
            im: self.base.zero(),
        }
    }

    pub fn j(&self) -> GaussianElement {
        GaussianElement {
            re: self.base.zero(),
            im: self.base.one(),
        }
    }

    /// Integer `c` embedded in the prime subfield.
    pub fn integer(&self, c: i64) -> GaussianElement {
        GaussianElement {
            re: self.base.integer(c),
            im: self.base.zero(),
        }
    }

    /// Number of elements, `q^2`.
    pub fn size(&self) -> u128 {
        let q = self.base.size() as u128;
        q * q
    }

    /// Enumerates `re + j·im` with `re` varying fastest.
    pub fn element_from_index(&self, index: u128) -> GaussianElement {
        let q = self.base.size() as u128;
        GaussianElement {
            re: self.base.element_from_index((index % q) as u64),
            im: self.base.element_from_index((index / q) as u64),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = GaussianElement> + '_ {
        (0..self.size()).map(move |t| self.element_from_index(t))
    }
}

/// `re + j·im`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianElement {
    re: FieldElement,
    im: FieldElement,
}

impl GaussianElement {
    pub fn re(&self) -> &FieldElement {
        &self.re
    }

    pub fn im(&self) -> &FieldElement {
        &self.im
    }

    pub fn field(&self) -> &Field {
        self.re.field()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True when the imaginary part vanishes.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    fn with(&self, re: FieldElement, im: FieldElement) -> GaussianElement {
        GaussianElement { re, im }
    }

    pub fn checked_add(&self, other: &GaussianElement) -> Result<GaussianElement> {
        Ok(self.with(self.re.checked_add(&other.re)?, self.im.checked_add(&other.im)?))
    }

    pub fn checked_sub(&self, other: &GaussianElement) -> Result<GaussianElement> {
        Ok(self.with(self.re.checked_sub(&other.re)?, self.im.checked_sub(&other.im)?))
    }

    /// `(a1 a2 - b1 b2) + j(a1 b2 + a2 b1)`.
    pub fn checked_mul(&self, other: &GaussianElement) -> Result<GaussianElement> {
        let (a1, b1) = (&self.re, &self.im);
        let (a2, b2) = (&other.re, &other.im);
        let re = a1.checked_mul(a2)?.checked_sub(&b1.checked_mul(b2)?)?;
        let im = a1.checked_mul(b2)?.checked_add(&a2.checked_mul(b1)?)?;
        Ok(self.with(re, im))
    }

    /// Multiplies both parts by a host-field scalar.
    pub fn scale(&self, c: &FieldElement) -> GaussianElement {
        self.with(&self.re * c, &self.im * c)
    }

    pub fn conj(&self) -> GaussianElement {
        self.with(self.re.clone(), -&self.im)
    }

    /// `a^2 + b^2`; nonzero for nonzero input since -1 is a non-residue.
    pub fn norm(&self) -> FieldElement {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<GaussianElement> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let n_inv = self.norm().inv()?;
        Ok(self.conj().scale(&n_inv))
    }

    pub fn pow_uint(&self, mut e: u128) -> GaussianElement {
        let mut acc = self.with(self.field().one(), self.field().zero());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn pow(&self, e: i64) -> Result<GaussianElement> {
        if e >= 0 {
            Ok(self.pow_uint(e as u128))
        } else {
            Ok(self.inv()?.pow_uint(e.unsigned_abs() as u128))
        }
    }

    /// `x^q` for `q` a power of the characteristic, computed part by part as
    /// `re^q + im^q · j^q` where `j^q = ±j` according to `q mod 4`.
    pub fn frobenius(&self, q: u64) -> Result<GaussianElement> {
        let p = self.field().characteristic();
        let mut t = q;
        while t > 1 && t.is_multiple_of(p) {
            t /= p;
        }
        if t != 1 {
            return Err(Error::BadExponent { exponent: q, p });
        }
        let re = self.re.pow_uint(q as u128);
        let im = self.im.pow_uint(q as u128);
        // q is odd, so j^q is j or -j
        let im = if q % 4 == 1 { im } else { -im };
        Ok(self.with(re, im))
    }
}

impl fmt::Display for GaussianElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render_gaussian(self))
    }
}

impl fmt::Debug for GaussianElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Neg for &GaussianElement {
    type Output = GaussianElement;

    fn neg(self) -> GaussianElement {
        self.with(-&self.re, -&self.im)
    }
}

impl Neg for GaussianElement {
    type Output = GaussianElement;

    fn neg(self) -> GaussianElement {
        -&self
    }
}

field_binop!(GaussianElement, Add, add, checked_add);
field_binop!(GaussianElement, Sub, sub, checked_sub);
field_binop!(GaussianElement, Mul, mul, checked_mul);
