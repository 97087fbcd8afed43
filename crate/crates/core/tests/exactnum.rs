use std::sync::Arc;

use klcells::exactnum::linalg::{solve, solve_integer};
use klcells::exactnum::{
    cyclotomic_coeffs, cyclotomic_poly, Coeff, CycloField, CycloNumber, IntPoly, LaurentPoly, RationalFunction,
};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn mobius(mut n: u32) -> i64 {
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn cyclotomic_polynomials_match_known_values() {
    assert_eq!(cyclotomic_coeffs(1), [-1, 1]);
    assert_eq!(cyclotomic_coeffs(2), [1, 1]);
    assert_eq!(cyclotomic_coeffs(6), [1, -1, 1]);
    assert_eq!(cyclotomic_coeffs(12), [1, 0, -1, 0, 1]);
    assert_eq!(cyclotomic_coeffs(15), [1, -1, 0, 1, -1, 1, 0, -1, 1]);
    // the first cyclotomic polynomial with a coefficient outside {-1, 0, 1}
    let c105 = cyclotomic_coeffs(105);
    assert_eq!(c105.len(), 49);
    assert_eq!(c105[7], -2);
    assert!(c105.iter().all(|c| c.abs() <= 2));
}

#[test]
fn product_over_divisors_is_x_n_minus_1() {
    for n in 1..=40u32 {
        let mut prod = LaurentPoly::constant(BigInt::one());
        for d in (1..=n).filter(|d| n % d == 0) {
            prod = &prod * &cyclotomic_poly(d);
        }
        let want = LaurentPoly::from_terms([(0, BigInt::from(-1)), (n as i32, BigInt::one())]);
        assert_eq!(prod, want, "n = {n}");
    }
}

#[test]
fn ramanujan_sums_of_primitive_roots() {
    for n in 1..=30u32 {
        let f = CycloField::get(n);
        let mut sum = CycloNumber::zero(&f);
        for k in (0..n).filter(|&k| gcd(k, n) == 1) {
            sum = sum.add_ref(&CycloNumber::zeta(&f, k as i64));
        }
        assert_eq!(sum, CycloNumber::from_int(&f, mobius(n)), "n = {n}");
    }
}

#[test]
fn golden_ratio_in_q_zeta_5() {
    let f = CycloField::get(5);
    let z = |k| CycloNumber::zeta(&f, k);
    // φ = -(ζ² + ζ³) satisfies φ² = φ + 1
    let phi = z(2).add_ref(&z(3)).neg_ref();
    assert_eq!(phi.mul_ref(&phi), phi.add_ref(&CycloNumber::one(&f)));
    assert!((phi.embed(1).re - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
    assert!(phi.conj() == phi);
}

#[test]
fn mixed_conductors_are_rejected_not_coerced() {
    let a = CycloNumber::zeta(&CycloField::get(5), 1);
    let b = CycloNumber::zeta(&CycloField::get(7), 1);
    assert!(a.try_add(&b).is_err());
    assert!(a.try_mul(&b).is_err());
}

#[test]
fn integer_solver_agrees_with_rational_elimination() {
    let a = vec![vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]];
    let b = vec![vec![1, 0], vec![0, 1], vec![5, -7]];
    let x = solve_integer(&a, &b).unwrap();
    for col in 0..2 {
        let ar = a
            .iter()
            .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
            .collect();
        let br = b.iter().map(|r| BigRational::from_integer(r[col].into())).collect();
        let want = solve(ar, br).unwrap();
        for i in 0..3 {
            assert_eq!(x[i][col], want[i]);
        }
    }
    assert!(solve_integer(&[vec![1, 2], vec![2, 4]], &[vec![1], vec![2]]).is_none());
}

fn cyclo(field: &Arc<CycloField>, coeffs: &[i64]) -> CycloNumber {
    coeffs
        .iter()
        .enumerate()
        .fold(CycloNumber::zero(field), |acc, (k, &c)| {
            acc.add_ref(&CycloNumber::zeta(field, k as i64).mul_ref(&CycloNumber::from_int(field, c)))
        })
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-7 * (1.0 + a.norm() + b.norm())
}

fn small_poly() -> impl Strategy<Value = IntPoly> {
    (-4i32..4, prop::collection::vec(-5i64..=5, 0..6)).prop_map(|(low, c)| IntPoly::from_i64(low, &c))
}

proptest! {
    #[test]
    fn cyclotomic_field_axioms(
        a in prop::collection::vec(-4i64..=4, 15),
        b in prop::collection::vec(-4i64..=4, 15),
        c in prop::collection::vec(-4i64..=4, 15),
    ) {
        let f = CycloField::get(15);
        let (a, b, c) = (cyclo(&f, &a), cyclo(&f, &b), cyclo(&f, &c));
        prop_assert_eq!(a.add_ref(&b), b.add_ref(&a));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b).conj(), a.conj().mul_ref(&b.conj()));
        if !a.is_zero() {
            prop_assert_eq!(a.mul_ref(&a.inverse().unwrap()), CycloNumber::one(&f));
        }
        for j in [1u32, 2, 7] {
            prop_assert!(close(a.mul_ref(&b).embed(j), a.embed(j) * b.embed(j)));
            prop_assert!(close(a.add_ref(&b).embed(j), a.embed(j) + b.embed(j)));
        }
        prop_assert!(close(a.conj().embed(1), a.embed(1).conj()));
    }

    #[test]
    fn laurent_ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        let at_one = |p: &IntPoly| p.eval_at_one().unwrap_or(0);
        prop_assert_eq!(at_one(&(&a * &b)), at_one(&a) * at_one(&b));
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a.clone());
        }
        if let (Some(lo), Some(hi)) = (a.valuation(), a.degree()) {
            let q = a.shift(-lo);
            let reversed = q.bar().shift(hi - lo);
            prop_assert!((&q * &reversed).is_palindromic().unwrap().is_some());
        }
    }

    #[test]
    fn rational_function_addition_is_cross_multiplication(
        a in small_poly(), b in small_poly(), c in small_poly(), d in small_poly(),
    ) {
        prop_assume!(!b.is_zero() && !d.is_zero());
        let f = CycloField::get(1);
        let lift = |p: &IntPoly| p.map_coeffs(|&x| CycloNumber::from_int(&f, x));
        let (a, b, c, d) = (lift(&a), lift(&b), lift(&c), lift(&d));
        let x = RationalFunction::new(a.clone(), b.clone()).unwrap();
        let y = RationalFunction::new(c.clone(), d.clone()).unwrap();
        let sum = RationalFunction::new(&(&a * &d) + &(&c * &b), &b * &d).unwrap();
        let prod = RationalFunction::new(&a * &c, &b * &d).unwrap();
        prop_assert!(x.add(&y).equals(&sum));
        prop_assert!(x.mul(&y).equals(&prod));
    }

    #[test]
    fn integer_solve_is_exact(
        entries in prop::collection::vec(-6i64..=6, 16),
        rhs in prop::collection::vec(-20i64..=20, 8),
    ) {
        let a: Vec<Vec<i64>> = entries.chunks(4).map(|r| r.to_vec()).collect();
        let b: Vec<Vec<i64>> = rhs.chunks(2).map(|r| r.to_vec()).collect();
        if let Some(x) = solve_integer(&a, &b) {
            for i in 0..4 {
                for k in 0..2 {
                    let mut s = BigRational::zero();
                    for j in 0..4 {
                        s += BigRational::from_integer(a[i][j].into()) * &x[j][k];
                    }
                    prop_assert_eq!(s, BigRational::from_integer(b[i][k].into()));
                }
            }
        }
    }
}
