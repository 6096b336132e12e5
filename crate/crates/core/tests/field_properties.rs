mod common;

use common::{gf243, gf7, irreducible_by_trial_division, rng};
use gf_hartley::{Field, FieldElement, GaussianField};
use rand::Rng;

fn check_axioms(a: &FieldElement, b: &FieldElement, c: &FieldElement) {
    let f = a.field();
    assert_eq!(&(a + b) + c, a + &(b + c));
    assert_eq!(&(a * b) * c, a * &(b * c));
    assert_eq!(a + b, b + a);
    assert_eq!(a * b, b * a);
    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    assert_eq!(a + &f.zero(), *a);
    assert_eq!(a * &f.one(), *a);
    assert!((a + &(-a)).is_zero());
    assert_eq!(&(a - b) + b, *a);
    if !a.is_zero() {
        assert!((a * &a.inv().unwrap()).is_one());
    }
}

#[test]
fn field_axioms_exhaustive_gf7() {
    let f = gf7();
    let all: Vec<_> = f.elements().collect();
    for a in &all {
        for b in &all {
            for c in &all {
                check_axioms(a, b, c);
            }
        }
    }
}

#[test]
fn field_axioms_random_gf243() {
    let f = gf243();
    let mut rng = rng(1);
    for _ in 0..10_000 {
        let mut pick = || f.element_from_index(rng.random_range(0..f.size()));
        let (a, b, c) = (pick(), pick(), pick());
        check_axioms(&a, &b, &c);
    }
}

#[test]
fn fermat_and_order_divisibility() {
    for f in [gf7(), gf243(), Field::prime(19).unwrap(), Field::new(7, 2, None).unwrap()] {
        let units = f.size() - 1;
        for x in f.elements().skip(1) {
            assert!(x.pow_uint(units as u128).is_one(), "{x} in {f}");
            let order = x.order().unwrap();
            assert_eq!(units % order, 0);
            // order is minimal: brute-force the first power equal to one
            let mut acc = x.clone();
            let mut brute = 1;
            while !acc.is_one() {
                acc = &acc * &x;
                brute += 1;
            }
            assert_eq!(brute, order, "{x} in {f}");
        }
    }
}

#[test]
fn pow_is_a_homomorphism() {
    let f = gf243();
    let mut rng = rng(2);
    for _ in 0..500 {
        let x = f.element_from_index(rng.random_range(1..f.size()));
        let a = rng.random_range(-300i64..300);
        let b = rng.random_range(-300i64..300);
        assert_eq!(x.pow(a + b).unwrap(), x.pow(a).unwrap() * x.pow(b).unwrap());
    }
}

#[test]
fn quadratic_character_is_multiplicative() {
    for f in [gf7(), gf243(), Field::prime(11).unwrap()] {
        // oracle: the set of squares by enumeration
        let squares: std::collections::HashSet<_> =
            f.elements().skip(1).map(|x| (&x * &x).to_index()).collect();
        let units: Vec<_> = f.elements().skip(1).collect();
        for x in &units {
            let qr = x.is_quadratic_residue().unwrap();
            assert_eq!(qr, squares.contains(&x.to_index()));
        }
        for x in units.iter().step_by(3) {
            for y in units.iter().step_by(7) {
                let lhs = (x * y).is_quadratic_residue().unwrap();
                let rhs = x.is_quadratic_residue().unwrap() == y.is_quadratic_residue().unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn rabin_test_agrees_with_trial_division() {
    for (p, max_deg) in [(3u64, 6usize), (5, 4), (7, 3)] {
        for deg in 1..=max_deg {
            for t in 0..p.pow(deg as u32) {
                let mut coeffs = vec![0u64; deg + 1];
                let mut x = t;
                for c in coeffs.iter_mut().take(deg) {
                    *c = x % p;
                    x /= p;
                }
                coeffs[deg] = 1;
                let oracle = irreducible_by_trial_division(&coeffs, p);
                let built = Field::new(p, deg, Some(&coeffs));
                assert_eq!(built.is_ok(), oracle, "p={p} {coeffs:?}");
            }
        }
    }
}

#[test]
fn generated_modulus_is_first_irreducible_candidate() {
    for (p, r) in [(3u64, 5usize), (7, 2), (3, 4), (11, 3), (19, 2)] {
        let f = Field::new(p, r, None).unwrap();
        assert_eq!(f, Field::new(p, r, None).unwrap());
        let generated = f.modulus().to_vec();
        // walk candidates in order (constant term least significant)
        let mut first = None;
        for t in 0..p.pow(r as u32) {
            let mut coeffs = vec![0u64; r + 1];
            let mut x = t;
            for c in coeffs.iter_mut().take(r) {
                *c = x % p;
                x /= p;
            }
            coeffs[r] = 1;
            if irreducible_by_trial_division(&coeffs, p) {
                first = Some(coeffs);
                break;
            }
        }
        assert_eq!(Some(generated), first, "GF({p}^{r})");
    }
}

#[test]
fn search_returns_exact_orders() {
    let f = gf243();
    for n in [1u64, 2, 11, 22, 121, 242] {
        let e = f.find_element_of_order(n).unwrap();
        assert_eq!(e.order().unwrap(), n);
        // nothing earlier in index order has that order
        let earlier = (1..e.to_index()).any(|t| f.element_from_index(t).order().unwrap() == n);
        assert!(!earlier);
    }
    assert_eq!(f.find_element_of_order(4).unwrap_err().name(), "NoSuchOrder");
}

#[test]
fn gaussian_field_needs_three_mod_four() {
    for p in [3u64, 7, 11, 19, 23] {
        assert!(GaussianField::new(Field::prime(p).unwrap()).is_ok());
        assert!(!Field::prime(p).unwrap().integer(-1).is_quadratic_residue().unwrap());
    }
    for p in [5u64, 13, 17] {
        assert!(GaussianField::new(Field::prime(p).unwrap()).is_err());
        assert!(Field::prime(p).unwrap().integer(-1).is_quadratic_residue().unwrap());
    }
}

#[test]
fn fields_are_shareable_across_threads() {
    let f = gf243();
    let x = f.indeterminate();
    let handles: Vec<_> = (0..4)
        .map(|t| {
            let x = x.clone();
            std::thread::spawn(move || x.pow_uint(22 * (t + 1)).order().unwrap())
        })
        .collect();
    let orders: Vec<u64> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    assert_eq!(orders, vec![11, 11, 11, 11]);
}
