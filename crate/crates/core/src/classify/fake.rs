use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::chartab::CharacterTable;
use crate::coxeter::GroupTable;
use crate::error::{Error, Result};
use crate::exactnum::{Coeff, CycloNumber, IntPoly, LaurentPoly, RationalFunction};

pub type CPoly = LaurentPoly<CycloNumber>;

/// `det(1 − X·ρ(w))` per conjugacy class, `ρ` the reflection representation.
pub fn reflection_charpolys(g: &GroupTable, tab: &CharacterTable) -> Result<Vec<CPoly>> {
    tab.classes
        .classes
        .iter()
        .map(|c| {
            let m: Vec<Vec<CycloNumber>> = g
                .matrix(c.representative)
                .iter()
                .map(|r| r.iter().map(|x| x.lift(&tab.field).map(|x| x.to_cyclo())).collect())
                .collect::<Result<_>>()?;
            Ok(det_one_minus_x(&m))
        })
        .collect()
}

/// Faddeev–LeVerrier: with `det(X·1 − M) = Σ c_k X^{r−k}`,
/// `det(1 − X·M) = Σ c_k X^k`.
fn det_one_minus_x(m: &[Vec<CycloNumber>]) -> CPoly {
    let r = m.len();
    let one = m[0][0].one_like();
    let zero = one.zero_like();
    let mut coeffs = vec![one.clone()];
    let mut mk: Vec<Vec<CycloNumber>> = vec![vec![zero.clone(); r]; r];
    for k in 1..=r {
        // M_k = M·M_{k−1} + c_{k−1}·1
        let mut next = mat_mul(m, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = row[i].add_ref(&coeffs[k - 1]);
        }
        mk = next;
        let am = mat_mul(m, &mk);
        let mut tr = zero.clone();
        for (i, row) in am.iter().enumerate() {
            tr = tr.add_ref(&row[i]);
        }
        let ck = tr.scale_rational(&BigRational::new(BigInt::from(-1), BigInt::from(k as i64)));
        coeffs.push(ck);
    }
    LaurentPoly::from_coeffs(0, coeffs)
}

fn mat_mul(a: &[Vec<CycloNumber>], b: &[Vec<CycloNumber>]) -> Vec<Vec<CycloNumber>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut s = a[i][0].zero_like();
                    for k in 0..n {
                        if !a[i][k].is_zero() && !b[k][j].is_zero() {
                            s = s.add_ref(&a[i][k].mul_ref(&b[k][j]));
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// Fake degree `P_E(X) = Π(1 − X^{d_i}) · |W|⁻¹ Σ_w conj χ(w) / det(1 − X·ρ(w))`.
///
/// Classes sharing a characteristic polynomial are merged before the
/// rational-function sum.
pub fn fake_degree(g: &GroupTable, tab: &CharacterTable, charpolys: &[CPoly], row: usize) -> Result<IntPoly> {
    let field = &tab.field;
    let one = CycloNumber::one(field);
    let mut grouped: BTreeMap<String, (CPoly, CycloNumber)> = BTreeMap::new();
    for (c, class) in tab.classes.classes.iter().enumerate() {
        let weight = tab.row(row).values[c]
            .conj()
            .mul_ref(&CycloNumber::from_int(field, class.size as i64));
        let key = charpolys[c].render("X");
        let slot = grouped
            .entry(key)
            .or_insert_with(|| (charpolys[c].clone(), CycloNumber::zero(field)));
        slot.1 = slot.1.add_ref(&weight);
    }
    let mut sum = RationalFunction::from_poly(CPoly::zero(), one.clone());
    for (den, num) in grouped.into_values() {
        if num.is_zero() {
            continue;
        }
        sum = sum.add(&RationalFunction::new(CPoly::constant(num), den)?);
    }
    let mut invariants = CPoly::constant(one.clone());
    for &d in g.degrees() {
        let mut f = vec![CycloNumber::zero(field); d as usize + 1];
        f[0] = one.clone();
        f[d as usize] = CycloNumber::from_int(field, -1);
        invariants = &invariants * &CPoly::from_coeffs(0, f);
    }
    let scaled = sum
        .mul_poly(&invariants)
        .into_polynomial()
        .map_err(|e| Error::internal(format!("fake degree of {} does not close: {e}", tab.names[row])))?;
    let inv_order = BigRational::new(BigInt::from(1), BigInt::from(g.order()));
    let mut coeffs = Vec::new();
    let low = scaled.valuation().unwrap_or(0);
    for (e, c) in scaled.terms() {
        let r = c
            .scale_rational(&inv_order)
            .to_integer()
            .filter(|r| !r.is_negative())
            .and_then(|r| r.to_i64())
            .ok_or_else(|| {
                Error::internal(format!(
                    "fake degree of {} has coefficient {c} at X^{e}",
                    tab.names[row]
                ))
            })?;
        coeffs.push((e, r));
    }
    let p = IntPoly::from_terms(coeffs);
    if low < 0 || p.eval_at_one() != Some(tab.dims[row] as i64) {
        return Err(Error::internal(format!(
            "fake degree of {} does not evaluate to its dimension",
            tab.names[row]
        )));
    }
    Ok(p)
}
