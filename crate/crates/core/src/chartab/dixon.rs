use std::cmp::Ordering;

use crate::coxeter::{conjugacy_classes, ConjugacyClasses, GroupTable};
use crate::error::{Error, Result};
use crate::exactnum::{CycloInt, CycloNumber};
use crate::par::{self, Parallelism};

use super::modp::{is_prime, Fp};
use super::table::CharacterTable;

const MAX_PRIME_ATTEMPTS: usize = 5;

/// Exact character table by Dixon–Schneider.
///
/// Class-sum multiplication matrices are built over `F_p` with
/// `p ≡ 1 (mod exponent)` and `p > 2√|W|`, their common eigenvectors give the
/// characters mod `p`, and each value `χ(g)` is lifted to `Q(ζ)` by
/// recovering the eigenvalue multiplicities of `g` from the values on its
/// powers. Orthogonality is then checked exactly; on failure the next prime
/// is tried.
pub fn character_table(g: &GroupTable, par: Parallelism) -> Result<CharacterTable> {
    let classes = conjugacy_classes(g);
    let matrices = class_matrices(g, &classes, par);
    let e = g.exponent() as u64;
    let floor = 2 * (g.order() as f64).sqrt().ceil() as u64 + 1;
    let mut p = e + 1;
    let mut failures = Vec::new();
    while failures.len() < MAX_PRIME_ATTEMPTS {
        while p <= floor || !is_prime(p) {
            p += e;
        }
        match attempt(g, &classes, &matrices, Fp { p }) {
            Ok(rows) => {
                let table = CharacterTable::new(g, classes.clone(), rows, p);
                match table.check_orthogonality() {
                    Ok(()) => return Ok(table),
                    Err(err) => failures.push(format!("p = {p}: {err}")),
                }
            }
            Err(err) => failures.push(format!("p = {p}: {err}")),
        }
        p += e;
    }
    Err(Error::internal(format!(
        "character table of {} failed for {} primes: {}",
        g.name(),
        MAX_PRIME_ATTEMPTS,
        failures.join("; ")
    )))
}

/// `N_j[i][l] = #{x ∈ C_j : x⁻¹ g_i ∈ C_l}`; central characters are common
/// left eigenvectors `ω N_j = ω_j ω`.
fn class_matrices(g: &GroupTable, classes: &ConjugacyClasses, par: Parallelism) -> Vec<Vec<Vec<u64>>> {
    let k = classes.len();
    par::map_range(k, par, |j| {
        let mut m = vec![vec![0u64; k]; k];
        for (i, ci) in classes.classes.iter().enumerate() {
            for &x in &classes.classes[j].elements {
                let l = classes.class_of(g.mul(g.inverse(x), ci.representative));
                m[i][l] += 1;
            }
        }
        m
    })
}

fn attempt(
    g: &GroupTable,
    classes: &ConjugacyClasses,
    matrices: &[Vec<Vec<u64>>],
    f: Fp,
) -> std::result::Result<Vec<Vec<CycloNumber>>, String> {
    let k = classes.len();
    let mats: Vec<Vec<Vec<u64>>> = matrices
        .iter()
        .map(|m| m.iter().map(|r| r.iter().map(|&x| x % f.p).collect()).collect())
        .collect();
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut r = vec![0u64; k];
            r[i] = 1;
            r
        })
        .collect()];
    for m in mats.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
            } else {
                next.extend(split(f, &space, m)?);
            }
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(format!("{} common eigenspaces for {k} classes", spaces.len()));
    }

    let order = g.order() as u64;
    let sizes: Vec<u64> = classes.sizes().iter().map(|&s| s as u64).collect();
    let inv_class: Vec<usize> = (0..k).map(|c| classes.inverse_class(g, c)).collect();
    let root = f.root_of_unity(g.exponent() as u64);
    let field = g.character_field();
    let n = field.order() as i64;
    let e = g.exponent() as u64;

    let mut rows = Vec::with_capacity(k);
    for space in &spaces {
        let v = &space[0];
        if v[0] == 0 {
            return Err("eigenvector vanishes on the identity class".into());
        }
        let c0 = f.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| f.mul(x, c0)).collect();
        let mut s = 0;
        for j in 0..k {
            s = f.add(s, f.mul(f.mul(omega[j], omega[inv_class[j]]), f.inv(sizes[j] % f.p)));
        }
        if s == 0 {
            return Err("degenerate central character".into());
        }
        let d2 = f.mul(order % f.p, f.inv(s));
        let dims: Vec<u64> = (1..=((order as f64).sqrt() as u64 + 1))
            .filter(|&d| order % d == 0 && (d * d) % f.p == d2)
            .collect();
        let [dim] = dims[..] else {
            return Err(format!("ambiguous degree candidates {dims:?}"));
        };
        let chi: Vec<u64> = (0..k)
            .map(|j| f.mul(f.mul(dim % f.p, omega[j]), f.inv(sizes[j] % f.p)))
            .collect();

        let mut row = Vec::with_capacity(k);
        for (j, class) in classes.classes.iter().enumerate() {
            let rep = class.representative;
            let o = g.element_order(rep) as u64;
            let z = f.pow(root, e / o);
            let z_inv = f.inv(z);
            let o_inv = f.inv(o % f.p);
            let powers: Vec<u64> = (0..o).map(|t| chi[classes.class_of(g.power(rep, t as i64))]).collect();
            let mut value = CycloInt::zero(&field);
            let mut total = 0;
            for t in 0..o {
                let step = f.pow(z_inv, t);
                let mut acc = 0;
                let mut w = 1;
                for &c in &powers {
                    acc = f.add(acc, f.mul(c, w));
                    w = f.mul(w, step);
                }
                let mult = f.mul(acc, o_inv);
                if mult > dim {
                    return Err(format!(
                        "eigenvalue multiplicity {} out of range on class {j}",
                        f.signed(mult)
                    ));
                }
                total += mult;
                if mult > 0 {
                    value.add_scaled_assign(&CycloInt::zeta(&field, t as i64 * (n / o as i64)), mult as i64);
                }
            }
            if total != dim {
                return Err(format!("multiplicities on class {j} sum to {total}, not {dim}"));
            }
            row.push(value.to_cyclo());
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Split a subspace (rows in reduced echelon form) into eigenspaces of the
/// right action of `m`.
fn split(f: Fp, space: &[Vec<u64>], m: &[Vec<u64>]) -> std::result::Result<Vec<Vec<Vec<u64>>>, String> {
    let d = space.len();
    let k = m.len();
    let pivots: Vec<usize> = space.iter().map(|r| r.iter().position(|&x| x != 0).unwrap()).collect();
    let image: Vec<Vec<u64>> = space
        .iter()
        .map(|r| {
            (0..k)
                .map(|c| (0..k).fold(0, |acc, i| f.add(acc, f.mul(r[i], m[i][c]))))
                .collect()
        })
        .collect();
    let a: Vec<Vec<u64>> = image.iter().map(|r| pivots.iter().map(|&c| r[c]).collect()).collect();
    let mut pieces = Vec::new();
    let mut found = 0;
    for lambda in 0..f.p {
        let shifted: Vec<Vec<u64>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { f.sub(a[i][j], lambda) } else { a[i][j] })
                    .collect()
            })
            .collect();
        let ker = f.left_kernel(&shifted);
        if ker.is_empty() {
            continue;
        }
        let mut vecs: Vec<Vec<u64>> = ker
            .iter()
            .map(|c| {
                (0..k)
                    .map(|col| (0..d).fold(0, |acc, r| f.add(acc, f.mul(c[r], space[r][col]))))
                    .collect()
            })
            .collect();
        f.rref(&mut vecs);
        found += vecs.len();
        pieces.push(vecs);
        if found == d {
            return Ok(pieces);
        }
    }
    Err(format!(
        "class matrix not diagonalizable on a {d}-dimensional eigenspace"
    ))
}

/// Order on rows: degree, then values in decreasing canonical order, so the
/// trivial character comes first.
pub(crate) fn row_order(a: &(u64, Vec<CycloNumber>), b: &(u64, Vec<CycloNumber>)) -> Ordering {
    a.0.cmp(&b.0).then_with(|| {
        for (x, y) in a.1.iter().zip(&b.1) {
            match y.cmp_canonical(x) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}
