//! Prime-power fields GF(p^r) in a polynomial basis.
//!
//! A [`Field`] is a cheaply clonable handle to an immutable description
//! (characteristic, degree, monic irreducible modulus) plus the factorization
//! of the multiplicative group order, computed once at construction.
//! [`FieldElement`] carries its field handle so that mixing elements of
//! different fields is detected instead of silently producing garbage.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly;
use crate::text;

#[derive(Debug)]
struct FieldInner {
    p: u64,
    r: usize,
    /// Monic, length `r + 1`, low degree first.
    modulus: Vec<u64>,
    size: u64,
    /// Distinct primes dividing `size - 1`.
    unit_factors: Vec<u64>,
}

/// The finite field GF(p^r), p an odd prime.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl Field {
    /// Builds GF(p^r). When `modulus` is `None` the smallest monic irreducible
    /// polynomial of degree `r` is used, ordering candidates by their
    /// coefficient vectors from `x^(r-1)` down to the constant term.
    pub fn new(p: u64, r: usize, modulus: Option<&[u64]>) -> Result<Field> {
        if !poly::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if r == 0 {
            return Err(Error::ZeroDegree);
        }
        let too_large = Error::FieldTooLarge { p, r };
        if p > u32::MAX as u64 {
            return Err(too_large);
        }
        let size = u32::try_from(r)
            .ok()
            .and_then(|e| p.checked_pow(e))
            .filter(|&s| s < (1u64 << 62))
            .ok_or(too_large)?;

        let modulus = match modulus {
            Some(m) => validate_modulus(m, p, r)?,
            None => generate_modulus(p, r),
        };
        Ok(Field(Arc::new(FieldInner {
            p,
            r,
            modulus,
            size,
            unit_factors: poly::prime_factors(size - 1),
        })))
    }

    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.r
    }

    /// Number of elements, `p^r`.
    pub fn size(&self) -> u64 {
        self.0.size
    }

    /// The reduction polynomial, low degree first, including the leading 1.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    /// Distinct prime factors of `p^r - 1`.
    pub fn unit_group_factors(&self) -> &[u64] {
        &self.0.unit_factors
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coeffs: vec![0; self.0.r],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.constant(1)
    }

    /// The image of an integer under the prime-field embedding.
    pub fn constant(&self, c: u64) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = c % self.0.p;
        e
    }

    /// The image of a signed integer; negative values wrap modulo p.
    pub fn integer(&self, c: i64) -> FieldElement {
        self.constant(c.rem_euclid(self.0.p as i64) as u64)
    }

    /// The residue class of the indeterminate `x`.
    pub fn indeterminate(&self) -> FieldElement {
        self.reduce(vec![0, 1])
    }

    /// Element with the given coefficients (low degree first). Shorter vectors
    /// are zero-padded; every coefficient must lie in `[0, p)`.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        let p = self.0.p;
        if let Some(&bad) = coeffs.iter().find(|&&c| c >= p) {
            return Err(Error::OutOfRangeCoefficient { value: bad, p });
        }
        Ok(self.reduce(coeffs.to_vec()))
    }

    /// Element whose coefficient vector spells `index` in base p
    /// (constant term least significant).
    pub fn element_from_index(&self, mut index: u64) -> FieldElement {
        let p = self.0.p;
        let mut e = self.zero();
        for c in e.coeffs.iter_mut() {
            *c = index % p;
            index /= p;
        }
        e
    }

    /// All elements in index order, zero first.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.size).map(move |t| self.element_from_index(t))
    }

    /// First element, in index order, of multiplicative order exactly `order`.
    pub fn find_element_of_order(&self, order: u64) -> Result<FieldElement> {
        let units = self.0.size - 1;
        if order == 0 || !units.is_multiple_of(order) {
            return Err(Error::NoSuchOrder {
                order,
                size: self.0.size,
            });
        }
        let factors = poly::prime_factors(order);
        (1..self.0.size)
            .map(|t| self.element_from_index(t))
            .find(|x| {
                x.pow_uint(order as u128).is_one()
                    && factors
                        .iter()
                        .all(|&l| !x.pow_uint((order / l) as u128).is_one())
            })
            .ok_or(Error::NoSuchOrder {
                order,
                size: self.0.size,
            })
    }

    /// Whether the residue of `x` generates the multiplicative group.
    pub fn modulus_is_primitive(&self) -> bool {
        let x = self.indeterminate();
        !x.is_zero() && x.order().ok() == Some(self.0.size - 1)
    }

    /// Reduces an arbitrary polynomial with coefficients in `[0, p)`.
    fn reduce(&self, mut coeffs: Vec<u64>) -> FieldElement {
        let FieldInner { p, r, modulus, .. } = &*self.0;
        let (p, r) = (*p, *r);
        for d in (r..coeffs.len()).rev() {
            let c = coeffs[d];
            if c == 0 {
                continue;
            }
            coeffs[d] = 0;
            for (i, &m) in modulus[..r].iter().enumerate() {
                let t = poly::mul_mod(c, m, p);
                let slot = &mut coeffs[d - r + i];
                *slot = (*slot + p - t) % p;
            }
        }
        coeffs.resize(r, 0);
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }
}

fn validate_modulus(m: &[u64], p: u64, r: usize) -> Result<Vec<u64>> {
    if let Some(&bad) = m.iter().find(|&&c| c >= p) {
        return Err(Error::OutOfRangeCoefficient { value: bad, p });
    }
    let mut m = m.to_vec();
    poly::trim(&mut m);
    let got = poly::degree(&m).unwrap_or(0);
    if got != r {
        return Err(Error::DegreeMismatch { expected: r, got });
    }
    if m[r] != 1 {
        return Err(Error::NonMonicModulus);
    }
    if !poly::is_irreducible(&m, p) {
        return Err(Error::ReducibleModulus(text::render_poly(&m)));
    }
    Ok(m)
}

fn generate_modulus(p: u64, r: usize) -> Vec<u64> {
    let mut candidate = vec![0u64; r + 1];
    candidate[r] = 1;
    loop {
        if poly::is_irreducible(&candidate, p) {
            return candidate;
        }
        // next vector with the constant term as the least significant digit
        let mut i = 0;
        loop {
            candidate[i] += 1;
            if candidate[i] < p {
                break;
            }
            candidate[i] = 0;
            i += 1;
            // irreducible polynomials exist in every degree
            assert!(i < r, "exhausted monic polynomials of degree {r}");
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.r == other.0.r
                && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.modulus.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.r == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(
                f,
                "GF({}^{}) mod {}",
                self.0.p,
                self.0.r,
                text::render_poly(&self.0.modulus)
            )
        }
    }
}

/// A fully reduced residue of GF(p^r).
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Coefficients low degree first; always exactly `r` of them.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Inverse of [`Field::element_from_index`].
    pub fn to_index(&self) -> u64 {
        let p = self.field.0.p;
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        let p = self.field.0.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        let p = self.field.0.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        let p = self.field.0.p;
        if self.field.0.r == 1 {
            return Ok(FieldElement {
                field: self.field.clone(),
                coeffs: vec![poly::mul_mod(self.coeffs[0], other.coeffs[0], p)],
            });
        }
        let r = self.field.0.r;
        let mut prod = vec![0u64; 2 * r - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + poly::mul_mod(a, b, p)) % p;
            }
        }
        Ok(self.field.reduce(prod))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        if self.field.0.r == 1 {
            let p = self.field.0.p;
            return Ok(self.field.constant(poly::inv_mod(self.coeffs[0], p)));
        }
        Ok(self.pow_uint(self.field.0.size as u128 - 2))
    }

    /// Square-and-multiply for a non-negative exponent; `x^0 = 1` for every x.
    pub fn pow_uint(&self, mut e: u128) -> FieldElement {
        let mut acc = self.field.one();
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

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Result<FieldElement> {
        if e >= 0 {
            Ok(self.pow_uint(e as u128))
        } else {
            Ok(self.inv()?.pow_uint(e.unsigned_abs() as u128))
        }
    }

    /// Multiplicative order, found by stripping prime factors of `p^r - 1`.
    pub fn order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let mut order = self.field.0.size - 1;
        for &l in &self.field.0.unit_factors {
            while order.is_multiple_of(l) && self.pow_uint((order / l) as u128).is_one() {
                order /= l;
            }
        }
        Ok(order)
    }

    /// Euler's criterion: `x^((q-1)/2) == 1`.
    pub fn is_quadratic_residue(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(self
            .pow_uint(((self.field.0.size - 1) / 2) as u128)
            .is_one())
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render_element(self))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        let p = self.field.0.p;
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|&c| (p - c) % p).collect(),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        -&self
    }
}

/// Operator forms of the checked arithmetic. They panic on a field mismatch,
/// which only happens when elements of unrelated fields are combined.
macro_rules! field_binop {
    ($ty:ty, $trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&$ty> for &$ty {
            type Output = $ty;

            fn $method(self, rhs: &$ty) -> $ty {
                self.$checked(rhs).expect("operands from different fields")
            }
        }

        impl $trait<$ty> for $ty {
            type Output = $ty;

            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&$ty> for $ty {
            type Output = $ty;

            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }

        impl $trait<$ty> for &$ty {
            type Output = $ty;

            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    };
}

pub(crate) use field_binop;

field_binop!(FieldElement, Add, add, checked_add);
field_binop!(FieldElement, Sub, sub, checked_sub);
field_binop!(FieldElement, Mul, mul, checked_mul);
