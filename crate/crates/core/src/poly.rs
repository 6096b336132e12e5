//! Dense polynomials over GF(p), stored low degree first.
//!
//! These helpers back field construction (irreducibility, reduction) and are
//! deliberately free functions over slices: the field type owns the modulus
//! and the characteristic, and calls in here with both.

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n`, ascending, by trial division.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(p as i128) as u64
}

pub(crate) fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Degree of a trimmed or untrimmed polynomial; `None` for zero.
pub(crate) fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let len = a.len().max(b.len());
    let mut out: Vec<u64> = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

/// Remainder of `a` modulo a nonzero `m`.
pub(crate) fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let dm = degree(m).expect("division by the zero polynomial");
    let lead_inv = inv_mod(m[dm], p);
    let mut out = a.to_vec();
    trim(&mut out);
    while let Some(da) = degree(&out) {
        if da < dm {
            break;
        }
        let c = mul_mod(out[da], lead_inv, p);
        let shift = da - dm;
        for (i, &mc) in m[..=dm].iter().enumerate() {
            let t = mul_mod(c, mc, p);
            out[shift + i] = (out[shift + i] + p - t) % p;
        }
        trim(&mut out);
    }
    out
}

/// Monic greatest common divisor.
pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(d) = degree(&x) {
        let li = inv_mod(x[d], p);
        for c in x.iter_mut() {
            *c = mul_mod(*c, li, p);
        }
    }
    x
}

fn pow_mod_poly(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    rem(&acc, m, p)
}

/// Rabin's irreducibility test for a monic `f` of degree `r >= 1`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let r = match degree(f) {
        Some(0) | None => return false,
        Some(1) => return true,
        Some(r) => r,
    };
    let x = vec![0u64, 1];
    // frob[k] = x^(p^k) mod f
    let mut frob = Vec::with_capacity(r + 1);
    frob.push(rem(&x, f, p));
    for k in 1..=r {
        let next = pow_mod_poly(&frob[k - 1], p, f, p);
        frob.push(next);
    }
    if sub(&frob[r], &frob[0], p).iter().any(|&c| c != 0) {
        return false;
    }
    prime_factors(r as u64).into_iter().all(|d| {
        let h = sub(&frob[r / d as usize], &x, p);
        let g = gcd(&h, f, p);
        degree(&g) == Some(0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_factors() {
        assert!(is_prime(2) && is_prime(3) && is_prime(7) && is_prime(65537));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(91));
        assert_eq!(prime_factors(242), vec![2, 11]);
        assert_eq!(prime_factors(6), vec![2, 3]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_factors(97), vec![97]);
    }

    #[test]
    fn inverse_mod_small_prime() {
        for a in 1..7 {
            assert_eq!(mul_mod(a, inv_mod(a, 7), 7), 1);
        }
    }

    #[test]
    fn rabin_agrees_on_known_polynomials() {
        // x^2 + 1 over GF(7): no roots, irreducible
        assert!(is_irreducible(&[1, 0, 1], 7));
        // x^2 + 1 over GF(5) = (x - 2)(x - 3)
        assert!(!is_irreducible(&[1, 0, 1], 5));
        // x^5 + x^4 + x^2 + 1 over GF(3)
        assert!(is_irreducible(&[1, 0, 1, 0, 1, 1], 3));
        // (x^2 + 1)^2 over GF(3) has no roots but is reducible
        assert!(!is_irreducible(&[1, 0, 2, 0, 1], 3));
    }

    #[test]
    fn gcd_and_rem() {
        // (x+1)(x+2) and (x+1)(x+3) over GF(7) share x+1
        let a = mul(&[1, 1], &[2, 1], 7);
        let b = mul(&[1, 1], &[3, 1], 7);
        assert_eq!(gcd(&a, &b, 7), vec![1, 1]);
        assert_eq!(rem(&a, &[1, 1], 7), Vec::<u64>::new());
    }
}
