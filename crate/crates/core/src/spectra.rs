//! Which Hartley spectra come from base-field signals.
//!
//! A spectrum `V` over GF(q^m) is the transform of a GF(q)-valued signal
//! exactly when `V_k^q = V_(N - kq)` for every k (indices mod N). The index
//! map `k ↦ -q·k mod N` splits `0..N` into cyclotomic classes; one value per
//! class determines the whole spectrum.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gaussian::GaussianElement;
use crate::hartley::{Spectrum, TransformPlan};

/// Orbits of `k ↦ (-q·k) mod N` on `0..N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclotomicPartition {
    #[serde(rename = "N")]
    n: usize,
    q: u64,
    classes: Vec<Vec<usize>>,
}

impl CyclotomicPartition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Each class starts at its smallest member and follows the map.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Image of `k` under the index map.
    pub fn next(&self, k: usize) -> usize {
        next_index(k, self.n, self.q)
    }

    pub fn class_of(&self, k: usize) -> Option<&[usize]> {
        self.classes
            .iter()
            .find(|c| c.contains(&k))
            .map(Vec::as_slice)
    }
}

impl fmt::Display for CyclotomicPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, class) in self.classes.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            let members: Vec<String> = class.iter().map(usize::to_string).collect();
            write!(f, "C{}=({})", class[0], members.join(","))?;
        }
        Ok(())
    }
}

fn next_index(k: usize, n: usize, q: u64) -> usize {
    let n128 = n as u128;
    let kq = (k as u128 * (q as u128 % n128)) % n128;
    ((n128 - kq) % n128) as usize
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn cyclotomic_classes(n: usize, q: u64) -> Result<CyclotomicPartition> {
    if n == 0 {
        return Err(Error::InvalidLength);
    }
    if gcd(n as u64, q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut class = Vec::new();
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            class.push(k);
            k = next_index(k, n, q);
        }
        classes.push(class);
    }
    Ok(CyclotomicPartition { n, q, classes })
}

/// Class representatives: the indices that determine a valid spectrum.
pub fn free_components(partition: &CyclotomicPartition) -> Vec<usize> {
    partition.classes.iter().map(|c| c[0]).collect()
}

/// Checks `V_k^q = V_(N - kq)` for every k.
pub fn is_valid_spectrum(plan: &TransformPlan, spectrum: &Spectrum) -> Result<bool> {
    if spectrum.plan() != plan {
        return Err(Error::PlanMismatch);
    }
    let partition = plan.partition();
    let q = plan.base().size();
    for (k, value) in spectrum.values().iter().enumerate() {
        if value.frobenius(q)? != spectrum.values()[partition.next(k)] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds the valid spectrum with the given value at each class
/// representative, filling the rest of each class by `V_next = V^q`.
pub fn expand_spectrum(
    plan: &TransformPlan,
    assignments: &BTreeMap<usize, GaussianElement>,
) -> Result<Spectrum> {
    let partition = plan.partition();
    let reps = free_components(partition);
    if let Some(&extra) = assignments.keys().find(|k| !reps.contains(k)) {
        return Err(Error::UnknownRepresentative(extra));
    }
    let q = plan.base().size();
    let mut values = vec![plan.gaussian_field().zero(); plan.len()];
    for class in partition.classes() {
        let rep = class[0];
        let start = assignments
            .get(&rep)
            .ok_or(Error::MissingAssignment(rep))?;
        if start.field() != plan.ext() {
            return Err(Error::FieldMismatch);
        }
        let mut value = start.clone();
        for &k in class {
            values[k] = value.clone();
            value = value.frobenius(q)?;
        }
        if value != *start {
            return Err(Error::InconsistentAssignment {
                representative: rep,
                orbit_len: class.len(),
            });
        }
    }
    plan.spectrum(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::text::{parse_gaussian, parse_vector};

    fn plan7() -> TransformPlan {
        let f = Field::prime(7).unwrap();
        TransformPlan::new(f.clone(), f.clone(), f.constant(3)).unwrap()
    }

    #[test]
    fn classes_for_length_eleven() {
        let c = cyclotomic_classes(11, 3).unwrap();
        assert_eq!(c.classes(), &[vec![0], vec![1, 8, 9, 6, 4, 10, 3, 2, 5, 7]]);
        assert_eq!(free_components(&c), vec![0, 1]);
        assert_eq!(c.to_string(), "C0=(0) C1=(1,8,9,6,4,10,3,2,5,7)");
        // only q mod N matters
        assert_eq!(cyclotomic_classes(11, 14).unwrap().classes(), c.classes());
    }

    #[test]
    fn classes_for_length_six() {
        let c = cyclotomic_classes(6, 7).unwrap();
        assert_eq!(c.classes(), &[vec![0], vec![1, 5], vec![2, 4], vec![3]]);
        assert_eq!(free_components(&c), vec![0, 1, 2, 3]);
        let one = cyclotomic_classes(1, 3).unwrap();
        assert_eq!(one.classes(), &[vec![0]]);
        assert_eq!(free_components(&one), vec![0]);
    }

    #[test]
    fn class_errors() {
        assert_eq!(
            cyclotomic_classes(6, 3).unwrap_err(),
            Error::NotCoprime { n: 6, q: 3 }
        );
        assert_eq!(cyclotomic_classes(0, 3).unwrap_err(), Error::InvalidLength);
    }

    #[test]
    fn validity_examples() {
        let plan = plan7();
        let gi = plan.gaussian_field();
        let v = plan.spectrum(parse_vector("3,2+2j,2j,6,5j,2+5j", gi).unwrap()).unwrap();
        assert!(is_valid_spectrum(&plan, &v).unwrap());
        let bad = plan.spectrum(parse_vector("j,0,0,0,0,0", gi).unwrap()).unwrap();
        assert!(!is_valid_spectrum(&plan, &bad).unwrap());
        assert!(!plan.inverse(&bad).unwrap().values().iter().all(|x| plan.is_base_valued(x)));
    }

    #[test]
    fn expansion_examples() {
        let plan = plan7();
        let gi = plan.gaussian_field();
        let zeros: BTreeMap<_, _> = [0, 1, 2, 3].into_iter().map(|k| (k, gi.zero())).collect();
        let z = expand_spectrum(&plan, &zeros).unwrap();
        assert_eq!(plan.inverse(&z).unwrap(), plan.zero_signal());

        let mut a: BTreeMap<_, _> = [(0, "3"), (1, "2+2j"), (2, "2j"), (3, "6")]
            .into_iter()
            .map(|(k, s)| (k, parse_gaussian(s, gi).unwrap()))
            .collect();
        let v = expand_spectrum(&plan, &a).unwrap();
        assert_eq!(v.to_string(), "3,2+2j,2j,6,5j,2+5j");

        a.insert(3, gi.j());
        assert_eq!(
            expand_spectrum(&plan, &a).unwrap_err(),
            Error::InconsistentAssignment {
                representative: 3,
                orbit_len: 1
            }
        );
        a.remove(&3);
        assert_eq!(expand_spectrum(&plan, &a).unwrap_err(), Error::MissingAssignment(3));
        a.insert(3, gi.one());
        a.insert(5, gi.one());
        assert_eq!(expand_spectrum(&plan, &a).unwrap_err(), Error::UnknownRepresentative(5));
    }
}
