#![allow(dead_code)]

use gf_hartley::{Field, GaussianElement, GaussianField, Signal, Spectrum, TransformPlan};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn gf7() -> Field {
    Field::prime(7).unwrap()
}

/// GF(3^5) with the modulus x^5 + x^4 + x^2 + 1.
pub fn gf243() -> Field {
    Field::new(3, 5, Some(&[1, 0, 1, 0, 1, 1])).unwrap()
}

pub fn plan7() -> TransformPlan {
    let f = gf7();
    TransformPlan::new(f.clone(), f.clone(), f.constant(3)).unwrap()
}

/// Base GF(3), extension GF(3^5), kernel `x^22` of order 11.
pub fn plan243_11() -> TransformPlan {
    let ext = gf243();
    let alpha = ext.indeterminate().pow_uint(22);
    TransformPlan::new(Field::prime(3).unwrap(), ext, alpha).unwrap()
}

pub fn plan243_22() -> TransformPlan {
    TransformPlan::with_length(Field::prime(3).unwrap(), gf243(), 22).unwrap()
}

pub fn prime_plan(p: u64, n: u64) -> TransformPlan {
    let f = Field::prime(p).unwrap();
    TransformPlan::with_length(f.clone(), f, n).unwrap()
}

/// Every plan the property suites run over.
pub fn all_plans() -> Vec<(&'static str, TransformPlan)> {
    vec![
        ("GF(7) N=6", plan7()),
        ("GF(11) N=10", prime_plan(11, 10)),
        ("GF(19) N=3", prime_plan(19, 3)),
        ("GF(19) N=6", prime_plan(19, 6)),
        ("GF(19) N=9", prime_plan(19, 9)),
        ("GF(19) N=18", prime_plan(19, 18)),
        ("GF(3^5) N=11", plan243_11()),
        ("GF(3^5) N=22", plan243_22()),
    ]
}

pub fn random_gaussian(rng: &mut StdRng, gi: &GaussianField) -> GaussianElement {
    gi.element_from_index(rng.random_range(0..gi.size()))
}

pub fn random_nonzero_gaussian(rng: &mut StdRng, gi: &GaussianField) -> GaussianElement {
    gi.element_from_index(rng.random_range(1..gi.size()))
}

/// Signal with independent uniform Gaussian values over the extension.
pub fn random_signal(rng: &mut StdRng, plan: &TransformPlan) -> Signal {
    let gi = plan.gaussian_field();
    let values = (0..plan.len()).map(|_| random_gaussian(rng, gi)).collect();
    plan.signal(values).unwrap()
}

/// Signal with uniform values in the embedded base field.
pub fn random_base_signal(rng: &mut StdRng, plan: &TransformPlan) -> Signal {
    let base = plan.base();
    let values: Vec<_> = (0..plan.len())
        .map(|_| base.element_from_index(rng.random_range(0..base.size())))
        .collect();
    plan.signal_from_base(&values).unwrap()
}

pub fn random_spectrum(rng: &mut StdRng, plan: &TransformPlan) -> Spectrum {
    random_signal(rng, plan).reinterpret()
}

/// `x^(q^t)`
pub fn frob_iter(x: &GaussianElement, q: u64, t: usize) -> GaussianElement {
    (0..t).fold(x.clone(), |acc, _| acc.frobenius(q).unwrap())
}

/// A uniformly random element fixed by `y ↦ y^(q^len)`: the relative trace of
/// a random element onto that fixed field. GI(q^m) is GF(q^(2m)), so the
/// fixed field is the one of degree gcd(len, 2m) over GF(q).
pub fn random_closed_value(
    rng: &mut StdRng,
    plan: &TransformPlan,
    len: usize,
) -> GaussianElement {
    let q = plan.base().size();
    let total = 2 * plan.m();
    let g = gcd(len, total);
    let y = random_gaussian(rng, plan.gaussian_field());
    (0..total / g).fold(plan.gaussian_field().zero(), |acc, i| {
        acc + frob_iter(&y, q, i * g)
    })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Irreducibility oracle: no monic factor of degree 1..=deg/2, found by
/// dividing by every candidate.
pub fn irreducible_by_trial_division(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for t in 0..count {
            let mut g = vec![0u64; d + 1];
            let mut x = t;
            for c in g.iter_mut().take(d) {
                *c = x % p;
                x /= p;
            }
            g[d] = 1;
            if remainder_is_zero(f, &g, p) {
                return false;
            }
        }
    }
    true
}

fn remainder_is_zero(f: &[u64], g: &[u64], p: u64) -> bool {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    for top in (dg..r.len()).rev() {
        let c = r[top] % p;
        if c == 0 {
            continue;
        }
        for (i, &gc) in g.iter().enumerate() {
            let idx = top - dg + i;
            r[idx] = (r[idx] + p * p - (c * gc) % p) % p;
        }
    }
    r.iter().take(dg).all(|&c| c % p == 0)
}
