use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::coxeter::{ConjugacyClasses, Elem, GroupTable};
use crate::error::{Error, Result};
use crate::exactnum::{Coeff, CycloField, CycloInt, CycloNumber};

use super::dixon::row_order;

/// Values of a class function, one per conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<CycloNumber>,
}

impl ClassFunction {
    pub fn pointwise(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.mul_ref(b))
                .collect(),
        }
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    pub fn scale(&self, k: i64) -> ClassFunction {
        ClassFunction {
            values: self.values.iter().map(|a| a.mul_ref(&a.from_i64_like(k))).collect(),
        }
    }
}

/// Irreducible characters of `W`, rows sorted by degree and then by values
/// (decreasing, canonical order); row 0 is the trivial character.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group: String,
    pub group_order: usize,
    pub classes: ConjugacyClasses,
    pub class_words: Vec<String>,
    pub class_lengths: Vec<u32>,
    pub class_orders: Vec<u32>,
    pub field: Arc<CycloField>,
    pub irreps: Vec<ClassFunction>,
    pub dims: Vec<u64>,
    pub names: Vec<String>,
    /// Prime used for the modular eigenspace split.
    pub prime: u64,
}

impl CharacterTable {
    pub(crate) fn new(g: &GroupTable, classes: ConjugacyClasses, rows: Vec<Vec<CycloNumber>>, prime: u64) -> Self {
        let mut keyed: Vec<(u64, Vec<CycloNumber>)> = rows
            .into_iter()
            .map(|r| {
                let d = r[0].to_integer().and_then(|d| u64::try_from(d).ok()).unwrap_or(0);
                (d, r)
            })
            .collect();
        keyed.sort_by(row_order);
        let mut names = Vec::with_capacity(keyed.len());
        let mut run = 0;
        for (i, (d, _)) in keyed.iter().enumerate() {
            run = if i > 0 && keyed[i - 1].0 == *d { run + 1 } else { 1 };
            names.push(format!("phi{d}_{run}"));
        }
        let reps: Vec<Elem> = classes.classes.iter().map(|c| c.representative).collect();
        CharacterTable {
            group: g.name().to_string(),
            group_order: g.order(),
            class_words: reps.iter().map(|&w| g.render_word(w)).collect(),
            class_lengths: reps.iter().map(|&w| g.length(w)).collect(),
            class_orders: reps.iter().map(|&w| g.element_order(w)).collect(),
            classes,
            field: g.character_field(),
            dims: keyed.iter().map(|(d, _)| *d).collect(),
            irreps: keyed.into_iter().map(|(_, values)| ClassFunction { values }).collect(),
            names,
            prime,
        }
    }

    pub fn len(&self) -> usize {
        self.irreps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreps.is_empty()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn row(&self, i: usize) -> &ClassFunction {
        &self.irreps[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `χ_i(w)`.
    pub fn value(&self, i: usize, w: Elem) -> &CycloNumber {
        &self.irreps[i].values[self.classes.class_of(w)]
    }

    pub fn find_row(&self, f: &ClassFunction) -> Option<usize> {
        self.irreps.iter().position(|r| r == f)
    }

    pub fn constant(&self, k: i64) -> ClassFunction {
        ClassFunction {
            values: vec![CycloNumber::from_int(&self.field, k); self.class_count()],
        }
    }

    /// Build a class function from its value on class representatives.
    pub fn class_function(&self, f: impl Fn(usize) -> CycloNumber) -> ClassFunction {
        ClassFunction {
            values: (0..self.class_count()).map(f).collect(),
        }
    }

    pub fn sign_function(&self) -> ClassFunction {
        self.class_function(|c| CycloNumber::from_int(&self.field, if self.class_lengths[c] % 2 == 0 { 1 } else { -1 }))
    }

    pub fn regular_character(&self) -> ClassFunction {
        self.class_function(|c| CycloNumber::from_int(&self.field, if c == 0 { self.group_order as i64 } else { 0 }))
    }

    pub fn trivial(&self) -> usize {
        0
    }

    pub fn sign(&self) -> Result<usize> {
        self.find_row(&self.sign_function())
            .ok_or_else(|| Error::internal("sign character missing from the table"))
    }

    /// `|W|⁻¹ Σ_C |C| f(C) conj(g(C))`.
    pub fn inner_product(&self, f: &ClassFunction, g: &ClassFunction) -> CycloNumber {
        let mut acc = CycloNumber::zero(&self.field);
        for (c, class) in self.classes.classes.iter().enumerate() {
            let term = f.values[c].mul_ref(&g.values[c].conj());
            acc = acc.add_ref(&term.mul_ref(&CycloNumber::from_int(&self.field, class.size as i64)));
        }
        acc.scale_rational(&BigRational::new(BigInt::from(1), BigInt::from(self.group_order)))
    }

    /// Index of `χ_row ⊗ sgn` and its values.
    pub fn tensor_sign(&self, row: usize) -> Result<(usize, ClassFunction)> {
        let f = self.irreps[row].pointwise(&self.sign_function());
        let i = self
            .find_row(&f)
            .ok_or_else(|| Error::internal(format!("{} ⊗ sgn is not a row of the table", self.names[row])))?;
        Ok((i, f))
    }

    /// Trace of the reflection representation on every class.
    pub fn reflection_function(&self, g: &GroupTable) -> Result<ClassFunction> {
        let mut values = Vec::with_capacity(self.class_count());
        for class in &self.classes.classes {
            let m = g.matrix(class.representative);
            let mut tr = CycloInt::zero(g.datum().matrix_field());
            for (i, row) in m.iter().enumerate() {
                tr.add_scaled_assign(&row[i], 1);
            }
            values.push(tr.lift(&self.field)?.to_cyclo());
        }
        Ok(ClassFunction { values })
    }

    /// Row of the reflection representation, matched exactly against the
    /// traces of the reflection matrices.
    pub fn reflection(&self, g: &GroupTable) -> Result<usize> {
        let f = self.reflection_function(g)?;
        self.find_row(&f)
            .ok_or_else(|| Error::internal("reflection character is not a row of the table"))
    }

    /// Multiplicities `⟨f, χ_i⟩` as integers; internal error otherwise.
    pub fn decompose(&self, f: &ClassFunction) -> Result<Vec<u64>> {
        self.irreps
            .iter()
            .enumerate()
            .map(|(i, chi)| {
                let m = self.inner_product(f, chi);
                m.to_integer()
                    .and_then(|m| u64::try_from(m).ok())
                    .ok_or_else(|| Error::internal(format!("multiplicity of {} is {m}", self.names[i])))
            })
            .collect()
    }

    /// Exact row and column orthogonality, integrality and `Σ dim² = |W|`.
    pub fn check_orthogonality(&self) -> Result<()> {
        let k = self.class_count();
        if self.len() != k {
            return Err(Error::internal(format!("{} rows for {k} classes", self.len())));
        }
        if self.dims.iter().map(|d| d * d).sum::<u64>() != self.group_order as u64 {
            return Err(Error::internal("Σ dim² differs from the group order"));
        }
        for (i, a) in self.irreps.iter().enumerate() {
            if !a.values.iter().all(|v| v.is_integral()) {
                return Err(Error::internal(format!("{} has non-integral values", self.names[i])));
            }
            for (j, b) in self.irreps.iter().enumerate().skip(i) {
                let ip = self.inner_product(a, b);
                let want = CycloNumber::from_int(&self.field, (i == j) as i64);
                if ip != want {
                    return Err(Error::internal(format!(
                        "⟨{}, {}⟩ = {ip}",
                        self.names[i], self.names[j]
                    )));
                }
            }
        }
        // Σ_χ χ(a) conj(χ(b)) = δ_ab |C_G(a)|
        for a in 0..k {
            for b in a..k {
                let mut acc = CycloNumber::zero(&self.field);
                for chi in &self.irreps {
                    acc = acc.add_ref(&chi.values[a].mul_ref(&chi.values[b].conj()));
                }
                let want = if a == b {
                    (self.group_order / self.classes.classes[a].size) as i64
                } else {
                    0
                };
                if acc != CycloNumber::from_int(&self.field, want) {
                    return Err(Error::internal(format!(
                        "column orthogonality fails at classes {a}, {b}"
                    )));
                }
            }
        }
        Ok(())
    }
}
