use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chartab::CharacterTable;
use crate::coxeter::{Elem, GroupTable};
use crate::error::{Error, Result};
use crate::exactnum::{linalg, Coeff, CycloInt, CycloNumber, IntPoly};
use crate::jring::{CellPartition, GammaTable};
use crate::klbase::{DaggerBasis, HScope, HTable};

/// The isomorphism `φ: C[W] → J` obtained at `v = 1` from
/// `c_x^† ↦ Σ_{d∈𝒟, z ~_L d} h_{x,d,z} t_z`.
#[derive(Clone, Debug)]
pub struct PhiIso {
    n: usize,
    /// Per `x`: `Σ_{d,z} h_{x,d,z} t_z` before specializing, summed per `z`.
    hecke_images: Vec<Vec<(Elem, IntPoly)>>,
    /// Per group element `y`: `φ(y)` in the `t`-basis, dense.
    images: Vec<Vec<i64>>,
    /// `X[z][C] = Σ_{w∈C} α_{z,w}` where `φ⁻¹(t_z) = Σ_w α_{z,w} w`.
    class_sums: Vec<Vec<BigRational>>,
}

pub fn build_phi(
    g: &GroupTable,
    h: &HTable,
    distinguished: &[Elem],
    cells: &CellPartition,
    dagger: &DaggerBasis,
    tab: &CharacterTable,
) -> Result<PhiIso> {
    if h.scope() != HScope::AllPairs {
        return Err(Error::usage("φ needs the all-pairs h-table"));
    }
    let n = g.order();
    let hecke_images: Vec<Vec<(Elem, IntPoly)>> = g
        .elements()
        .map(|x| {
            let mut acc: std::collections::BTreeMap<Elem, IntPoly> = Default::default();
            for &d in distinguished {
                for (z, p) in h.row(x, d) {
                    if cells.same_left(d, z) {
                        let slot = acc.entry(z).or_insert_with(IntPoly::zero);
                        *slot = &*slot + p;
                    }
                }
            }
            acc.into_iter().filter(|(_, p)| !p.is_zero()).collect()
        })
        .collect();

    // Σ_y D[x][y] φ(y) = F[x], D lower unitriangular up to sign.
    let mut order: Vec<Elem> = g.elements().collect();
    order.sort_by_key(|&x| (g.length(x), x));
    let mut images: Vec<Vec<i64>> = vec![Vec::new(); n];
    for &x in &order {
        let mut row = vec![0i64; n];
        for (z, p) in &hecke_images[x as usize] {
            row[*z as usize] += p.eval_at_one().unwrap_or(0);
        }
        let mut diag = 0;
        for (y, c) in dagger.at_one(x) {
            if y == x {
                diag = c;
                continue;
            }
            let img = &images[y as usize];
            if img.is_empty() {
                return Err(Error::internal("c_x^† at v = 1 is not triangular"));
            }
            for (r, &v) in row.iter_mut().zip(img) {
                *r -= c * v;
            }
        }
        if diag.abs() != 1 {
            return Err(Error::internal(format!(
                "coefficient of {} in c^† at v = 1 is {diag}",
                g.render_word(x)
            )));
        }
        for r in &mut row {
            *r *= diag;
        }
        images[x as usize] = row;
    }

    let k = tab.class_count();
    let indicator: Vec<Vec<i64>> = g
        .elements()
        .map(|y| {
            let mut r = vec![0i64; k];
            r[tab.classes.class_of(y)] = 1;
            r
        })
        .collect();
    // X = Φ⁻¹ K with Φ[y][z] = images[y][z].
    let class_sums =
        linalg::solve_integer(&images, &indicator).ok_or_else(|| Error::internal("φ is singular at v = 1"))?;
    Ok(PhiIso {
        n,
        hecke_images,
        images,
        class_sums,
    })
}

impl PhiIso {
    pub fn order(&self) -> usize {
        self.n
    }

    /// `φ(y)` as `(z, coefficient of t_z)`.
    pub fn image(&self, y: Elem) -> Vec<(Elem, i64)> {
        self.images[y as usize]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(z, &c)| (z as Elem, c))
            .collect()
    }

    /// `Σ_{d,z} h_{x,d,z} t_z`, the image of `c_x^†` before `v = 1`.
    pub fn hecke_image(&self, x: Elem) -> &[(Elem, IntPoly)] {
        &self.hecke_images[x as usize]
    }

    pub fn images(&self) -> &[Vec<i64>] {
        &self.images
    }

    /// Full inverse matrix `α` with `φ⁻¹(t_z) = Σ_w α_{z,w} w`; exact, for
    /// small groups and tests.
    pub fn inverse(&self) -> Result<Vec<Vec<BigRational>>> {
        let id: Vec<Vec<i64>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| (i == j) as i64).collect())
            .collect();
        linalg::solve_integer(&self.images, &id).ok_or_else(|| Error::internal("φ is singular at v = 1"))
    }

    /// `tr(t_z, E_∞) = Σ_w α_{z,w} χ(w)` for every `z`.
    pub fn j_traces(&self, tab: &CharacterTable, row: usize) -> Result<Vec<CycloInt>> {
        let chi = tab.row(row);
        let mut out = Vec::with_capacity(self.n);
        for (z, sums) in self.class_sums.iter().enumerate() {
            let mut acc = CycloNumber::zero(&tab.field);
            for (c, s) in sums.iter().enumerate() {
                if !num_traits::Zero::is_zero(s) {
                    acc = acc.add_ref(&chi.values[c].scale_rational(s));
                }
            }
            let v = CycloInt::from_cyclo(&acc).ok_or_else(|| {
                Error::internal(format!(
                    "tr(t_{z}, {}) = {acc} is not an algebraic integer",
                    tab.names[row]
                ))
            })?;
            out.push(v);
        }
        Ok(out)
    }

    /// Unit preservation and multiplicativity on `samples` random pairs.
    pub fn check(
        &self,
        g: &GroupTable,
        gamma: &GammaTable,
        distinguished: &[Elem],
        samples: usize,
        seed: u64,
    ) -> Result<()> {
        let unit: Vec<(Elem, i64)> = distinguished.iter().map(|&d| (d, 1)).collect();
        if self.image(0) != unit {
            return Err(Error::internal("φ(e) differs from Σ_{d∈𝒟} t_d"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = self.n as Elem;
        for _ in 0..samples {
            let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let lhs = self.image(g.mul(a, b));
            let rhs = gamma.product(&self.image(a), &self.image(b));
            if lhs != rhs {
                return Err(Error::internal(format!(
                    "φ({}·{}) ≠ φ({})φ({})",
                    g.render_word(a),
                    g.render_word(b),
                    g.render_word(a),
                    g.render_word(b)
                )));
            }
        }
        Ok(())
    }
}
