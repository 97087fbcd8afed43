use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactnum::{cyclotomic_poly, LaurentPoly};

/// Degrees of the basic invariants from the Poincaré polynomial
/// `Σ X^{l(w)} = Π (1 + X + … + X^{d_i - 1})`.
///
/// Counts the multiplicity of every cyclotomic factor `Φ_k`, then peels off
/// degrees greedily: the largest `k` still present must be a degree, and
/// the `q`-integer `[k]` accounts for exactly one `Φ_j` for each `j | k`.
pub fn compute_degrees(poincare: &[u64]) -> Result<Vec<u32>> {
    let mut p: LaurentPoly<BigInt> = LaurentPoly::from_coeffs(0, poincare.iter().map(|&c| BigInt::from(c)).collect());
    if p.is_zero() {
        return Err(Error::internal("empty Poincaré polynomial"));
    }
    let top = p.degree().unwrap() as u32 + 1;
    let mut mult = vec![0u32; top as usize + 1];
    for k in 2..=top {
        let phi = cyclotomic_poly(k);
        while p.degree().unwrap_or(0) >= phi.degree().unwrap() {
            match p.exact_divide(&phi) {
                Ok(q) => {
                    p = q;
                    mult[k as usize] += 1;
                }
                Err(_) => break,
            }
        }
    }
    if p != LaurentPoly::constant(BigInt::from(1)) {
        return Err(Error::internal("Poincaré polynomial is not a product of q-integers"));
    }
    let mut degrees = Vec::new();
    while let Some(d) = (2..=top).rev().find(|&k| mult[k as usize] > 0) {
        for j in 2..=d {
            if d % j == 0 {
                if mult[j as usize] == 0 {
                    return Err(Error::internal("Poincaré polynomial is not a product of q-integers"));
                }
                mult[j as usize] -= 1;
            }
        }
        degrees.push(d);
    }
    degrees.sort_unstable();
    Ok(degrees)
}
