use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{CycloField, CycloInt, CycloNumber};

/// Irreducible finite Coxeter type.
///
/// Generator labels (0-based here, printed 1-based as `s1, s2, …`):
///
/// * `A_n`: path `s1 – s2 – … – sn`, all bonds 3.
/// * `B_n`: `s1 =4= s2 – s3 – … – sn`.
/// * `D_n`: path `s1 – … – s(n-1)`, plus `sn` joined to `s(n-2)`.
/// * `E_n`: `s1 – s3 – s4 – … – sn` with `s2` joined to `s4`.
/// * `F4`: `s1 – s2 =4= s3 – s4`.
/// * `H3`, `H4`: `s1 =5= s2 – s3 (– s4)`.
/// * `I2(m)`: `s1 =m= s2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoxeterType {
    A(u32),
    B(u32),
    D(u32),
    I2(u32),
    H3,
    H4,
    F4,
    E6,
    E7,
    E8,
}

impl CoxeterType {
    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) => n as usize,
            CoxeterType::I2(_) => 2,
            CoxeterType::H3 => 3,
            CoxeterType::H4 | CoxeterType::F4 => 4,
            CoxeterType::E6 => 6,
            CoxeterType::E7 => 7,
            CoxeterType::E8 => 8,
        }
    }

    /// `m_st` for generators `i != j` (0-based).
    fn bond(self, i: usize, j: usize) -> u32 {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        let n = self.rank();
        let adjacent = j == i + 1;
        match self {
            CoxeterType::A(_) if adjacent => 3,
            CoxeterType::B(_) if i == 0 && j == 1 => 4,
            CoxeterType::B(_) if adjacent => 3,
            CoxeterType::D(_) if adjacent && j < n - 1 => 3,
            CoxeterType::D(_) if j == n - 1 && i == n - 3 => 3,
            CoxeterType::I2(m) => m,
            CoxeterType::H3 | CoxeterType::H4 if i == 0 && j == 1 => 5,
            CoxeterType::H3 | CoxeterType::H4 if adjacent => 3,
            CoxeterType::F4 if i == 1 && j == 2 => 4,
            CoxeterType::F4 if adjacent => 3,
            CoxeterType::E6 | CoxeterType::E7 | CoxeterType::E8 => match (i, j) {
                (0, 2) | (1, 3) => 3,
                _ if adjacent && i >= 2 => 3,
                _ => 2,
            },
            _ => 2,
        }
    }

    pub fn coxeter_matrix(self) -> Vec<Vec<u32>> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { 1 } else { self.bond(i, j) }).collect())
            .collect()
    }

    /// Crystallographic types have rational character tables.
    pub fn is_crystallographic(self) -> bool {
        match self {
            CoxeterType::I2(m) => matches!(m, 3 | 4 | 6),
            CoxeterType::H3 | CoxeterType::H4 => false,
            _ => true,
        }
    }

    /// Types whose full enumeration exceeds the default order budget.
    pub fn is_metadata_only(self) -> bool {
        matches!(self, CoxeterType::E6 | CoxeterType::E7 | CoxeterType::E8)
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
            CoxeterType::H3 => f.write_str("H3"),
            CoxeterType::H4 => f.write_str("H4"),
            CoxeterType::F4 => f.write_str("F4"),
            CoxeterType::E6 => f.write_str("E6"),
            CoxeterType::E7 => f.write_str("E7"),
            CoxeterType::E8 => f.write_str("E8"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::usage(format!("unrecognised Coxeter type symbol {s:?}"));
        match s {
            "H3" => return Ok(CoxeterType::H3),
            "H4" => return Ok(CoxeterType::H4),
            "F4" => return Ok(CoxeterType::F4),
            "E6" => return Ok(CoxeterType::E6),
            "E7" => return Ok(CoxeterType::E7),
            "E8" => return Ok(CoxeterType::E8),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("I2(") {
            let m: u32 = rest.strip_suffix(')').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if m < 3 {
                return Err(Error::usage(format!("I2({m}) is not irreducible; need m >= 3")));
            }
            return Ok(CoxeterType::I2(m));
        }
        let (head, tail) = s.split_at(1.min(s.len()));
        if tail.is_empty() || !tail.bytes().all(|b| b.is_ascii_digit()) || tail.starts_with('0') {
            return Err(bad());
        }
        let n: u32 = tail.parse().map_err(|_| bad())?;
        let ty = match head {
            "A" if n >= 1 => CoxeterType::A(n),
            "B" if n >= 2 => CoxeterType::B(n),
            "D" if n >= 4 => CoxeterType::D(n),
            _ => return Err(bad()),
        };
        Ok(ty)
    }
}

/// A Coxeter system with its geometric (reflection) representation.
#[derive(Clone, Debug)]
pub struct CoxeterDatum {
    name: String,
    ty: Option<CoxeterType>,
    coxeter_matrix: Vec<Vec<u32>>,
    field: Arc<CycloField>,
    reflections: Vec<Vec<Vec<CycloInt>>>,
    degrees: Option<Vec<u32>>,
}

impl CoxeterDatum {
    pub fn new(ty: CoxeterType) -> Self {
        Self::build(ty.to_string(), Some(ty), ty.coxeter_matrix()).expect("standard types have valid Coxeter matrices")
    }

    /// From an explicit Coxeter matrix. Rejects malformed matrices and those
    /// whose Tits form is not positive definite (infinite groups).
    pub fn from_coxeter_matrix(name: &str, matrix: Vec<Vec<u32>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::usage("Coxeter matrix must be square and nonempty"));
        }
        for i in 0..n {
            if matrix[i][i] != 1 {
                return Err(Error::usage("Coxeter matrix needs 1 on the diagonal"));
            }
            for j in 0..n {
                if i != j && (matrix[i][j] < 2 || matrix[i][j] != matrix[j][i]) {
                    return Err(Error::usage(
                        "Coxeter matrix entries off the diagonal must be symmetric and >= 2 (finite)",
                    ));
                }
            }
        }
        if !tits_form_positive_definite(&matrix) {
            return Err(Error::usage(format!(
                "Coxeter matrix of {name} does not define a finite group"
            )));
        }
        Self::build(name.to_string(), None, matrix)
    }

    fn build(name: String, ty: Option<CoxeterType>, matrix: Vec<Vec<u32>>) -> Result<Self> {
        let n = matrix.len();
        let conductor = matrix
            .iter()
            .flatten()
            .filter(|&&m| m >= 3)
            .fold(2u32, |acc, &m| acc.lcm(&(2 * m)));
        let field = CycloField::get(conductor);
        let two_cos = |m: u32| -> CycloInt {
            // 2cos(π/m) = ζ_{2m} + ζ_{2m}^{-1}
            if m == 2 {
                return CycloInt::zero(&field);
            }
            let k = (conductor / (2 * m)) as i64;
            let mut z = CycloInt::zeta(&field, k);
            z.add_scaled_assign(&CycloInt::zeta(&field, -k), 1);
            z
        };
        let reflections = (0..n)
            .map(|s| {
                (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                if i != s {
                                    CycloInt::from_int(&field, (i == j) as i64)
                                } else if j == s {
                                    CycloInt::from_int(&field, -1)
                                } else {
                                    two_cos(matrix[s][j])
                                }
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(CoxeterDatum {
            name,
            ty,
            coxeter_matrix: matrix,
            field,
            reflections,
            degrees: None,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn coxeter_type(&self) -> Option<CoxeterType> {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.coxeter_matrix.len()
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter_matrix
    }

    /// Field of the reflection matrices: conductor `lcm(2·m_st)` over bonds
    /// `m_st ≥ 3` (commuting pairs contribute `2cos(π/2) = 0`).
    pub fn matrix_field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// `ρ(s)` in the basis of simple roots; column `j` is the image of `α_j`.
    pub fn reflection_int(&self, s: usize) -> &[Vec<CycloInt>] {
        &self.reflections[s]
    }

    pub fn reflection_matrix(&self, s: usize) -> Vec<Vec<CycloNumber>> {
        self.reflections[s]
            .iter()
            .map(|r| r.iter().map(|x| x.to_cyclo()).collect())
            .collect()
    }

    pub fn degrees(&self) -> Option<&[u32]> {
        self.degrees.as_deref()
    }

    pub fn set_degrees(&mut self, d: Vec<u32>) {
        self.degrees = Some(d);
    }
}

/// Sylvester's criterion on `B(α_s, α_t) = -cos(π/m_st)`.
fn tits_form_positive_definite(matrix: &[Vec<u32>]) -> bool {
    let n = matrix.len();
    let mut b: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| -(std::f64::consts::PI / matrix[i][j] as f64).cos())
                .collect()
        })
        .collect();
    // Cholesky-style elimination; every pivot must stay positive.
    for k in 0..n {
        if b[k][k] <= 1e-9 {
            return false;
        }
        for i in k + 1..n {
            let f = b[i][k] / b[k][k];
            for j in k..n {
                b[i][j] -= f * b[k][j];
            }
        }
    }
    true
}
