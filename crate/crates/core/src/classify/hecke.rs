use crate::chartab::CharacterTable;
use crate::coxeter::{Elem, GroupTable};
use crate::error::{Error, Result};
use crate::exactnum::{Coeff, CycloInt, LaurentPoly};
use crate::klbase::DaggerBasis;

use super::phi::PhiIso;

/// Laurent polynomial in `v` with coefficients in `Z[ζ]`.
pub type CycloPoly = LaurentPoly<CycloInt>;

/// `w ↦ tr(T_w, E_v)`.
///
/// First `tr(c_x^†, E_v) = Σ_{d,z} h_{x,d,z} tr(t_z, E_∞)`, then the
/// triangular system `c_x^† = Σ_y M_{x,y} T_y` is solved upward in length.
/// The result is checked against `χ(w)` at `v = 1`.
pub fn hecke_character(
    g: &GroupTable,
    phi: &PhiIso,
    dagger: &DaggerBasis,
    jt: &[CycloInt],
    tab: &CharacterTable,
    row: usize,
) -> Result<Vec<CycloPoly>> {
    let field = &tab.field;
    let lift = |c: &i64| CycloInt::from_int(field, *c);
    let mut order: Vec<Elem> = g.elements().collect();
    order.sort_by_key(|&x| (g.length(x), x));
    let mut tr: Vec<Option<CycloPoly>> = vec![None; g.order()];
    for &x in &order {
        let mut acc = CycloPoly::zero();
        for (z, p) in phi.hecke_image(x) {
            let t = &jt[*z as usize];
            if !t.is_zero() {
                acc = &acc + &p.map_coeffs(|c| t.scale_int(*c));
            }
        }
        let mut diag = None;
        for (y, m) in dagger.row(x) {
            if *y == x {
                diag = Some(m);
                continue;
            }
            let ty = tr[*y as usize]
                .as_ref()
                .ok_or_else(|| Error::internal("c_x^† is not triangular in the T-basis"))?;
            acc = &acc - &(&m.map_coeffs(lift) * ty);
        }
        let diag = diag.ok_or_else(|| Error::internal("c_x^† has no T_x term"))?;
        // M_{x,x} = ±v^k
        let (k, c) = match diag.terms().collect::<Vec<_>>()[..] {
            [(k, &c)] if c.abs() == 1 => (k, c),
            _ => {
                return Err(Error::internal(format!(
                    "diagonal of c^† at {} is not a unit monomial",
                    g.render_word(x)
                )))
            }
        };
        let value = acc.shift(-k).map_coeffs(|a| a.scale_int(c));
        let at_one = value.eval_at_one().unwrap_or_else(|| CycloInt::zero(field));
        if at_one.to_cyclo() != *tab.value(row, x) {
            return Err(Error::internal(format!(
                "tr(T_{}, {}) at v = 1 is {}, character value is {}",
                g.render_word(x),
                tab.names[row],
                at_one.to_cyclo(),
                tab.value(row, x)
            )));
        }
        tr[x as usize] = Some(value);
    }
    Ok(tr.into_iter().map(|t| t.unwrap()).collect())
}

/// Ordinary iff every `tr(T_w, E_v)` only involves even powers of `v`.
pub fn is_ordinary(hc: &[CycloPoly]) -> bool {
    hc.iter().all(|p| p.even_parity())
}
