use std::collections::HashMap;
use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;
use sha2::{Digest, Sha256};

use super::datum::{CoxeterDatum, CoxeterType};
use super::degrees::compute_degrees;
use crate::error::{Error, Result};
use crate::exactnum::{Coeff, CycloField, CycloInt};

/// Default ceiling on `|W|` for full enumeration.
pub const DEFAULT_MAX_ORDER: usize = 20_000;

/// Element index; `0` is the identity. Indices follow ShortLex order of the
/// lexicographically least reduced words.
pub type Elem = u32;

/// Fully enumerated finite Coxeter group with Cayley tables.
#[derive(Clone, Debug)]
pub struct GroupTable {
    datum: CoxeterDatum,
    words: Vec<Vec<u8>>,
    length: Vec<u32>,
    right: Vec<Vec<Elem>>,
    left: Vec<Vec<Elem>>,
    inverse: Vec<Elem>,
    order_of: Vec<u32>,
    w0: Elem,
    exponent: u32,
    conductor: u32,
}

/// `|W|` from the classification, when the type is known.
pub fn known_order(ty: CoxeterType) -> u128 {
    let fact = |n: u32| (1..=n as u128).product::<u128>();
    match ty {
        CoxeterType::A(n) => fact(n + 1),
        CoxeterType::B(n) => (1u128 << n) * fact(n),
        CoxeterType::D(n) => (1u128 << (n - 1)) * fact(n),
        CoxeterType::I2(m) => 2 * m as u128,
        CoxeterType::H3 => 120,
        CoxeterType::H4 => 14_400,
        CoxeterType::F4 => 1_152,
        CoxeterType::E6 => 51_840,
        CoxeterType::E7 => 2_903_040,
        CoxeterType::E8 => 696_729_600,
    }
}

fn refuse(name: &str, at_least: u128, max_order: usize) -> Error {
    Error::Refused(format!(
        "{name} has order at least {at_least}, above the enumeration limit {max_order} (raise --max-order)"
    ))
}

/// Enumerate `W` by breadth-first search on exact reflection matrices.
pub fn build_group(datum: &CoxeterDatum, max_order: usize) -> Result<GroupTable> {
    if let Some(ty) = datum.coxeter_type() {
        let n = known_order(ty);
        if n > max_order as u128 {
            return Err(refuse(datum.name(), n, max_order));
        }
    }
    let rank = datum.rank();
    let field = datum.matrix_field().clone();
    let d = field.degree();
    // Rows `ρ(s)[s][j] - δ_sj`, the only nonzero rows of `ρ(s) - 1`.
    let deltas: Vec<Vec<CycloInt>> = (0..rank)
        .map(|s| {
            (0..rank)
                .map(|j| {
                    let mut x = datum.reflection_int(s)[s][j].clone();
                    if j == s {
                        x.add_scaled_assign(&CycloInt::from_int(&field, 1), -1);
                    }
                    x
                })
                .collect()
        })
        .collect();

    let key_of = |m: &[CycloInt]| -> Vec<i64> {
        let mut k = Vec::with_capacity(m.len() * d);
        for x in m {
            k.extend_from_slice(x.coeffs());
        }
        k
    };

    let mut identity = vec![CycloInt::zero(&field); rank * rank];
    for i in 0..rank {
        identity[i * rank + i] = CycloInt::from_int(&field, 1);
    }
    let mut index: HashMap<Vec<i64>, Elem> = HashMap::new();
    index.insert(key_of(&identity), 0);
    let mut mats = vec![identity];
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    let mut length = vec![0u32];
    let mut right: Vec<Vec<Elem>> = vec![Vec::new(); rank];

    let mut u = 0usize;
    while u < mats.len() {
        for s in 0..rank {
            let m = &mats[u];
            let mut next = m.clone();
            for i in 0..rank {
                let pivot = &m[i * rank + s];
                if pivot.is_zero() {
                    continue;
                }
                for j in 0..rank {
                    if !deltas[s][j].is_zero() {
                        let p = pivot.mul_ref(&deltas[s][j]);
                        next[i * rank + j].add_scaled_assign(&p, 1);
                    }
                }
            }
            let key = key_of(&next);
            let target = match index.get(&key) {
                Some(&t) => t,
                None => {
                    let t = mats.len() as Elem;
                    if mats.len() >= max_order {
                        return Err(refuse(datum.name(), mats.len() as u128 + 1, max_order));
                    }
                    index.insert(key, t);
                    let mut w = words[u].clone();
                    w.push(s as u8);
                    words.push(w);
                    length.push(length[u] + 1);
                    mats.push(next);
                    t
                }
            };
            right[s].push(target);
        }
        u += 1;
    }
    drop(index);
    drop(mats);

    let n = words.len();
    let walk = |start: Elem, word: &mut dyn Iterator<Item = u8>| word.fold(start, |x, s| right[s as usize][x as usize]);
    let inverse: Vec<Elem> = (0..n).map(|w| walk(0, &mut words[w].iter().rev().copied())).collect();
    let left: Vec<Vec<Elem>> = (0..rank)
        .map(|s| {
            (0..n)
                .map(|w| inverse[right[s][inverse[w] as usize] as usize])
                .collect()
        })
        .collect();
    let w0 = (0..n).max_by_key(|&w| length[w]).unwrap() as Elem;

    let mut table = GroupTable {
        datum: datum.clone(),
        words,
        length,
        right,
        left,
        inverse,
        order_of: Vec::new(),
        w0,
        exponent: 1,
        conductor: 1,
    };
    table.order_of = (0..n as Elem).map(|w| table.compute_element_order(w)).collect();
    table.exponent = table.order_of.iter().fold(1u32, |a, &o| a.lcm(&o));
    table.conductor = table.exponent.lcm(&field.order());
    let degrees = compute_degrees(&table.poincare_coeffs())?;
    table.datum.set_degrees(degrees);
    Ok(table)
}

impl GroupTable {
    pub fn datum(&self) -> &CoxeterDatum {
        &self.datum
    }

    pub fn name(&self) -> &str {
        self.datum.name()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.words.len() as Elem
    }

    pub fn length(&self, w: Elem) -> u32 {
        self.length[w as usize]
    }

    pub fn word(&self, w: Elem) -> &[u8] {
        &self.words[w as usize]
    }

    /// `w·s`.
    pub fn right_mul(&self, w: Elem, s: usize) -> Elem {
        self.right[s][w as usize]
    }

    /// `s·w`.
    pub fn left_mul(&self, s: usize, w: Elem) -> Elem {
        self.left[s][w as usize]
    }

    pub fn inverse(&self, w: Elem) -> Elem {
        self.inverse[w as usize]
    }

    pub fn w0(&self) -> Elem {
        self.w0
    }

    pub fn generator(&self, s: usize) -> Elem {
        self.right[s][0]
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.words[b as usize]
            .iter()
            .fold(a, |x, &s| self.right[s as usize][x as usize])
    }

    pub fn is_left_descent(&self, s: usize, w: Elem) -> bool {
        self.length(self.left_mul(s, w)) < self.length(w)
    }

    pub fn is_right_descent(&self, w: Elem, s: usize) -> bool {
        self.length(self.right_mul(w, s)) < self.length(w)
    }

    /// Bitmask of left descents.
    pub fn left_descents(&self, w: Elem) -> u32 {
        (0..self.rank())
            .filter(|&s| self.is_left_descent(s, w))
            .fold(0, |m, s| m | 1 << s)
    }

    pub fn right_descents(&self, w: Elem) -> u32 {
        (0..self.rank())
            .filter(|&s| self.is_right_descent(w, s))
            .fold(0, |m, s| m | 1 << s)
    }

    /// First letter of the canonical word; a left descent of `w ≠ e`.
    pub fn first_left_descent(&self, w: Elem) -> Option<usize> {
        self.words[w as usize].first().map(|&s| s as usize)
    }

    fn compute_element_order(&self, w: Elem) -> u32 {
        let mut k = 1;
        let mut x = w;
        while x != 0 {
            x = self.mul(x, w);
            k += 1;
        }
        k
    }

    pub fn element_order(&self, w: Elem) -> u32 {
        self.order_of[w as usize]
    }

    /// `w^k`, `k` any integer.
    pub fn power(&self, w: Elem, k: i64) -> Elem {
        let o = self.element_order(w) as i64;
        let mut x = 0;
        for _ in 0..k.rem_euclid(o) {
            x = self.mul(x, w);
        }
        x
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// Conductor of the character field we work in:
    /// `lcm(exponent, 2·m_st)`.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn character_field(&self) -> Arc<CycloField> {
        CycloField::get(self.conductor)
    }

    pub fn degrees(&self) -> &[u32] {
        self.datum.degrees().unwrap_or(&[])
    }

    /// Coefficients of `Σ_w X^{l(w)}`.
    pub fn poincare_coeffs(&self) -> Vec<u64> {
        let mut p = vec![0u64; self.length(self.w0) as usize + 1];
        for &l in &self.length {
            p[l as usize] += 1;
        }
        p
    }

    /// Reflection representation matrix `ρ(w)` over the matrix field.
    pub fn matrix(&self, w: Elem) -> Vec<Vec<CycloInt>> {
        let rank = self.rank();
        let field = self.datum.matrix_field();
        let mut m: Vec<Vec<CycloInt>> = (0..rank)
            .map(|i| (0..rank).map(|j| CycloInt::from_int(field, (i == j) as i64)).collect())
            .collect();
        for &s in self.word(w) {
            let r = self.datum.reflection_int(s as usize);
            m = (0..rank)
                .map(|i| {
                    (0..rank)
                        .map(|j| {
                            let mut acc = CycloInt::zero(field);
                            for k in 0..rank {
                                if !m[i][k].is_zero() && !r[k][j].is_zero() {
                                    acc.add_scaled_assign(&m[i][k].mul_ref(&r[k][j]), 1);
                                }
                            }
                            acc
                        })
                        .collect()
                })
                .collect();
        }
        m
    }

    /// `"e"` or `"s1s2s1"`.
    pub fn render_word(&self, w: Elem) -> String {
        render_word(self.word(w))
    }

    /// Element named by a word like `"s1s2"`, `"1 2"`, `"12"` or `"e"`.
    pub fn parse_element(&self, text: &str) -> Result<Elem> {
        let t = text.trim();
        if t == "e" || t.is_empty() {
            return Ok(0);
        }
        let letters: Vec<usize> = if t.contains('s') {
            t.split('s')
                .filter(|p| !p.trim().is_empty())
                .map(|p| p.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::usage(format!("cannot parse element {text:?}")))?
        } else if t.contains(' ') || t.contains(',') {
            t.split([' ', ','])
                .filter(|p| !p.is_empty())
                .map(|p| p.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::usage(format!("cannot parse element {text:?}")))?
        } else {
            t.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::usage(format!("cannot parse element {text:?}")))?
        };
        let mut x = 0;
        for s in letters {
            if s == 0 || s > self.rank() {
                return Err(Error::usage(format!("no generator s{s} in {}", self.name())));
            }
            x = self.right_mul(x, s - 1);
        }
        Ok(x)
    }

    /// Hex SHA-256 over type, Coxeter matrix, order and canonical words.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.name().as_bytes());
        for row in self.datum.coxeter_matrix() {
            for &m in row {
                h.update(m.to_le_bytes());
            }
        }
        h.update((self.order() as u64).to_le_bytes());
        for w in &self.words {
            h.update((w.len() as u32).to_le_bytes());
            h.update(w);
        }
        hex::encode(h.finalize())
    }

    pub fn summary(&self) -> GroupSummary {
        GroupSummary {
            group: self.name().to_string(),
            rank: self.rank(),
            order: self.order(),
            coxeter_matrix: self.datum.coxeter_matrix().to_vec(),
            degrees: self.degrees().to_vec(),
            longest_element: self.render_word(self.w0),
            longest_length: self.length(self.w0),
            exponent: self.exponent,
            conductor: self.conductor,
        }
    }
}

pub fn render_word(word: &[u8]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    word.iter().map(|&s| format!("s{}", s + 1)).collect()
}

/// Metadata emitted by `group`.
#[derive(Clone, Debug, Serialize)]
pub struct GroupSummary {
    pub group: String,
    pub rank: usize,
    pub order: usize,
    pub coxeter_matrix: Vec<Vec<u32>>,
    pub degrees: Vec<u32>,
    pub longest_element: String,
    pub longest_length: u32,
    pub exponent: u32,
    pub conductor: u32,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(s: &str) -> GroupTable {
        build_group(&CoxeterDatum::new(s.parse().unwrap()), DEFAULT_MAX_ORDER).unwrap()
    }

    #[test]
    fn small_orders() {
        let g = group("I2(3)");
        assert_eq!(g.order(), 6);
        assert_eq!(g.render_word(g.w0()), "s1s2s1");
        assert_eq!(group("I2(5)").order(), 10);
        assert_eq!(group("A3").order(), 24);
        assert_eq!(group("B3").order(), 48);
        let h3 = group("H3");
        assert_eq!(h3.order(), 120);
        assert_eq!(h3.length(h3.w0()), 15);
    }

    #[test]
    fn conductors() {
        assert_eq!(group("I2(5)").conductor(), 10);
        assert_eq!(group("I2(7)").conductor(), 14);
        assert_eq!(group("A3").conductor(), 12);
        assert_eq!(group("B3").conductor(), 24);
        assert_eq!(group("H3").conductor(), 30);
    }

    #[test]
    fn shortlex_and_inverse() {
        let g = group("A3");
        for w in g.elements() {
            assert_eq!(g.mul(w, g.inverse(w)), 0);
            assert_eq!(g.length(g.inverse(w)), g.length(w));
            if w > 0 {
                let p = w - 1;
                assert!((g.length(p), g.word(p)) < (g.length(w), g.word(w)));
            }
            for s in 0..3 {
                assert_eq!(g.left_mul(s, w), g.mul(g.generator(s), w));
            }
        }
    }

    #[test]
    fn refusal_names_a_lower_bound() {
        let err = build_group(&CoxeterDatum::new(CoxeterType::E8), DEFAULT_MAX_ORDER).unwrap_err();
        match err {
            Error::Refused(msg) => assert!(msg.contains("696729600"), "{msg}"),
            e => panic!("{e:?}"),
        }
        let err = build_group(&CoxeterDatum::new(CoxeterType::A(3)), 10).unwrap_err();
        assert!(matches!(err, Error::Refused(_)));
    }

    #[test]
    fn parse_words() {
        let g = group("A3");
        let x = g.parse_element("s1s2").unwrap();
        assert_eq!(g.render_word(x), "s1s2");
        assert_eq!(g.parse_element("1 2").unwrap(), x);
        assert_eq!(g.parse_element("12").unwrap(), x);
        assert_eq!(g.parse_element("e").unwrap(), 0);
        assert!(g.parse_element("s7").is_err());
    }
}
