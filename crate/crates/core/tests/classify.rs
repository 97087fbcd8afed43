mod common;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use klcells::classify::*;
use klcells::coxeter::CoxeterType;
use klcells::exactnum::{linalg::RatMatrix, Coeff, CycloInt, IntPoly, LaurentPoly};
use klcells::Parallelism;
use num_rational::Rational64;
use proptest::prelude::*;

struct Run {
    art: Artifacts,
    cl: Classification,
}

const GROUPS: [&str; 6] = ["I2(3)", "I2(5)", "I2(7)", "A3", "B3", "H3"];

fn run(sym: &str) -> &'static Run {
    static RUNS: OnceLock<BTreeMap<&'static str, Run>> = OnceLock::new();
    let runs = RUNS.get_or_init(|| {
        GROUPS
            .iter()
            .map(|&s| {
                let cfg = PipelineConfig::default();
                let g = load_group(s.parse().unwrap(), &cfg).unwrap();
                let art = build_artifacts(g, &cfg, &mut Vec::new()).unwrap();
                let cl = classify(&art, cfg.par).unwrap();
                (s, Run { art, cl })
            })
            .collect()
    });
    &runs[sym]
}

fn row_of_dim(r: &Run, dim: u64) -> Vec<usize> {
    (0..r.art.table.len()).filter(|&i| r.art.table.dims[i] == dim).collect()
}

fn elem(r: &Run, w: &str) -> u32 {
    r.art.group.parse_element(w).unwrap()
}

#[test]
fn phi_is_a_unit_preserving_homomorphism() {
    for sym in GROUPS {
        let r = run(sym);
        r.art
            .phi
            .check(&r.art.group, &r.art.gamma, &r.art.distinguished, 200, 7)
            .unwrap_or_else(|e| panic!("{sym}: {e}"));
    }
}

#[test]
fn phi_inverse_is_exact_for_i2_3() {
    let r = run("I2(3)");
    let inv: RatMatrix = r.art.phi.inverse().unwrap();
    let fwd = r.art.phi.images();
    let n = fwd.len();
    for i in 0..n {
        for j in 0..n {
            let mut s = num_rational::BigRational::from_integer(0.into());
            for k in 0..n {
                s += &inv[i][k] * num_rational::BigRational::from_integer(fwd[k][j].into());
            }
            let expect = if i == j { 1 } else { 0 };
            assert_eq!(s, num_rational::BigRational::from_integer(expect.into()), "({i}, {j})");
        }
    }
}

#[test]
fn j_traces_of_the_reflection_representation_of_i2_3() {
    let r = run("I2(3)");
    let row = row_of_dim(r, 2)[0];
    let jt = r.art.phi.j_traces(&r.art.table, row).unwrap();
    let val = |w: &str| jt[elem(r, w) as usize].to_cyclo().to_string();
    assert_eq!(val("s1"), "1");
    assert_eq!(val("s2"), "1");
    assert_eq!(val("s1s2"), "0");
    assert_eq!(val("s2s1"), "0");
    assert_eq!(val("e"), "0");
    assert_eq!(val("s1s2s1"), "0");
}

#[test]
fn unit_of_j_acts_as_identity() {
    for sym in GROUPS {
        let r = run(sym);
        for i in 0..r.art.table.len() {
            let jt = r.art.phi.j_traces(&r.art.table, i).unwrap();
            let mut total = CycloInt::zero(&r.art.table.field);
            for &d in &r.art.distinguished {
                total = total.add_ref(&jt[d as usize]);
            }
            assert_eq!(
                total,
                CycloInt::from_int(&r.art.table.field, r.art.table.dims[i] as i64),
                "{sym} row {i}"
            );
        }
    }
}

#[test]
fn j_traces_are_supported_on_one_cell() {
    for sym in GROUPS {
        let r = run(sym);
        for rec in &r.cl.irreps {
            for x in r.art.group.elements() {
                if !rec.j_traces[x as usize].is_zero() {
                    assert_eq!(r.art.cells.two_sided(x), rec.cell, "{sym} {}", rec.label);
                }
            }
        }
    }
}

#[test]
fn hecke_traces_of_one_dimensional_representations() {
    for sym in GROUPS {
        let r = run(sym);
        let g = &r.art.group;
        let f = &r.art.table.field;
        let triv = &r.cl.irreps[r.art.table.trivial()];
        let sign = &r.cl.irreps[r.art.table.sign().unwrap()];
        for w in g.elements() {
            let l = g.length(w) as i32;
            assert_eq!(
                triv.hecke[w as usize],
                LaurentPoly::monomial(CycloInt::from_int(f, 1), 2 * l)
            );
            let s = if l % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                sign.hecke[w as usize],
                LaurentPoly::monomial(CycloInt::from_int(f, s), 0)
            );
        }
    }
}

/// On a 2-dimensional irrep of `I2(m)`, `T_{s1}T_{s2}` has eigenvalues
/// `v²ζ^{±j}`, so `tr(T_{(s1s2)^k}) = v^{2k} χ((s1s2)^k)` while `(s1s2)^k`
/// stays reduced, that is `2k ≤ m`; and every
/// `T_s` has eigenvalues `v²` and `−1`.
#[test]
fn hecke_traces_of_dihedral_reflection_representations() {
    for sym in ["I2(3)", "I2(5)", "I2(7)"] {
        let r = run(sym);
        let g = &r.art.group;
        let f = &r.art.table.field;
        let rot = g.mul(g.generator(0), g.generator(1));
        for row in row_of_dim(r, 2) {
            let hc = &r.cl.irreps[row].hecke;
            for s in 0..2 {
                let expect = LaurentPoly::from_coeffs(
                    0,
                    vec![CycloInt::from_int(f, -1), CycloInt::zero(f), CycloInt::from_int(f, 1)],
                );
                assert_eq!(hc[g.generator(s) as usize], expect);
            }
            for k in 0..=g.order() as i64 / 4 {
                let w = g.power(rot, k);
                let chi = CycloInt::from_cyclo(r.art.table.value(row, w)).unwrap();
                let expect = if chi.is_zero() {
                    LaurentPoly::zero()
                } else {
                    LaurentPoly::monomial(chi, 2 * k as i32)
                };
                assert_eq!(hc[w as usize], expect, "{sym} row {row} k {k}");
            }
        }
    }
}

#[test]
fn exceptional_profiles() {
    assert_eq!(expected_exceptional_profile(Some(CoxeterType::H3)), Some((2, 4)));
    assert_eq!(expected_exceptional_profile(Some(CoxeterType::H4)), Some((4, 16)));
    assert_eq!(expected_exceptional_profile(Some(CoxeterType::E7)), Some((2, 512)));
    assert_eq!(expected_exceptional_profile(Some(CoxeterType::E8)), Some((4, 4096)));
    assert_eq!(expected_exceptional_profile(Some(CoxeterType::A(3))), None);
    assert_eq!(expected_exceptional_profile(Some(CoxeterType::F4)), None);
    assert_eq!(expected_exceptional_profile(None), None);
    for sym in GROUPS {
        let r = run(sym);
        let (count, dims) = r.cl.observed_profile();
        if sym == "H3" {
            assert_eq!((count, dims), (2, vec![4, 4]));
        } else {
            assert_eq!(count, 0, "{sym}");
        }
        assert!(r.cl.profile_agrees());
    }
}

#[test]
fn invariant_checks_hold() {
    for sym in GROUPS {
        for c in &run(sym).cl.checks {
            assert!(c.ok, "{sym}: {} {}", c.name, c.detail);
        }
    }
}

#[test]
fn involution_records() {
    for sym in GROUPS {
        let r = run(sym);
        let g = &r.art.group;
        let count = g.elements().filter(|&x| g.mul(x, x) == 0).count();
        assert_eq!(r.cl.involutions.len(), count);
        for i in &r.cl.involutions {
            assert_eq!(i.ordinary, i.length % 2 == i.a % 2);
        }
        for &d in &r.art.distinguished {
            assert!(
                r.cl.involutions.iter().find(|i| i.element == d).unwrap().ordinary,
                "{sym}"
            );
        }
    }
    let r = run("H3");
    let ex = r.cl.cells.iter().find(|c| c.exceptional).unwrap();
    assert!(r
        .cl
        .involutions
        .iter()
        .any(|i| i.two_sided_cell as usize == ex.id && !i.ordinary));
}

fn fake(r: &Run, row: usize) -> IntPoly {
    r.cl.irreps[row].fake_degree.clone()
}

#[test]
fn fake_degree_examples() {
    let r = run("I2(3)");
    let t = &r.art.table;
    assert_eq!(fake(r, t.trivial()), IntPoly::from_i64(0, &[1]));
    assert_eq!(fake(r, t.sign().unwrap()), IntPoly::from_i64(3, &[1]));
    assert_eq!(fake(r, row_of_dim(r, 2)[0]), IntPoly::from_i64(1, &[1, 1]));
}

#[test]
fn fake_degrees_match_the_coinvariant_algebra_of_i2_3() {
    assert_eq!(common::coinvariant::group().len(), 6);
    let [triv, sign, refl] = common::coinvariant::fake_degrees();
    let r = run("I2(3)");
    let t = &r.art.table;
    let as_vec = |p: IntPoly| -> Vec<Rational64> {
        (0..5)
            .map(|i| Rational64::from(p.coeff(i).copied().unwrap_or(0)))
            .collect()
    };
    assert_eq!(as_vec(fake(r, t.trivial())), triv);
    assert_eq!(as_vec(fake(r, t.sign().unwrap())), sign);
    assert_eq!(as_vec(fake(r, row_of_dim(r, 2)[0])), refl);
}

#[test]
fn fake_degree_sum_rule() {
    for sym in GROUPS {
        let r = run(sym);
        let mut total = IntPoly::zero();
        for rec in &r.cl.irreps {
            total = &total + &rec.fake_degree.scale(&(rec.dim as i64));
        }
        let mut poincare = IntPoly::from_i64(0, &[1]);
        for &d in r.art.group.degrees() {
            poincare = &poincare * &IntPoly::from_coeffs(0, vec![1; d as usize]);
        }
        assert_eq!(total, poincare, "{sym}");
    }
}

#[test]
fn specials() {
    for sym in GROUPS {
        let r = run(sym);
        let t = &r.art.table;
        assert!(r.cl.irreps[t.trivial()].special);
        let sign = &r.cl.irreps[t.sign().unwrap()];
        assert!(sign.special);
        assert_eq!(sign.a, r.art.group.length(r.art.group.w0()));
        for c in &r.cl.cells {
            assert_eq!(c.irreps.iter().filter(|&&i| r.cl.irreps[i].special).count(), 1);
        }
    }
    let r = run("I2(5)");
    let refl = r.art.table.reflection(&r.art.group).unwrap();
    let twos = row_of_dim(r, 2);
    assert_eq!(r.cl.irreps[twos[0]].cell, r.cl.irreps[twos[1]].cell);
    for i in twos {
        let rec = &r.cl.irreps[i];
        assert_eq!(rec.a, 1);
        assert_eq!(rec.special, i == refl);
        assert_eq!(rec.b, if i == refl { 1 } else { 2 });
    }
}

#[test]
fn left_cell_modules() {
    for sym in GROUPS {
        let r = run(sym);
        let t = &r.art.table;
        let cells = &r.art.cells;
        let single = |i: usize| {
            let mut v = vec![0u64; t.len()];
            v[i] = 1;
            v
        };
        assert_eq!(r.cl.left_modules[cells.left(0)], single(t.trivial()));
        assert_eq!(
            r.cl.left_modules[cells.left(r.art.group.w0())],
            single(t.sign().unwrap())
        );
        // The left cells partition W, so their modules add up to the regular representation.
        let mut total = vec![0u64; t.len()];
        for m in &r.cl.left_modules {
            for (a, b) in total.iter_mut().zip(m) {
                *a += b;
            }
        }
        assert_eq!(total, t.dims, "{sym}");
    }
    let r = run("I2(3)");
    let gamma = r.art.cells.left(elem(r, "s1"));
    assert_eq!(r.art.cells.left_cells[gamma], vec![elem(r, "s1"), elem(r, "s2s1")]);
    let m = &r.cl.left_modules[gamma];
    assert_eq!(m[row_of_dim(r, 2)[0]], 1);
    assert_eq!(m.iter().sum::<u64>(), 1);

    let r = run("H3");
    let fours = row_of_dim(r, 4);
    let ex = r.cl.cells.iter().find(|c| c.exceptional).unwrap();
    for &l in &ex.left_cells {
        let m = &r.cl.left_modules[l];
        for i in 0..m.len() {
            assert_eq!(m[i], fours.contains(&i) as u64);
        }
    }
}

#[test]
fn claims_pass_on_default_groups() {
    for sym in GROUPS {
        let r = run(sym);
        for rep in verify_claims(&ClaimId::ALL, &r.art, &r.cl) {
            assert!(rep.passed(), "{sym} {}: {:?}", rep.claim, rep.witnesses);
        }
    }
    let r = run("H3");
    let c = verify_claim(ClaimId::ExceptionalInvolutions, &r.art, &r.cl);
    assert_eq!(c.witnesses.len(), 4);
    let p = verify_claim(ClaimId::Palindromic, &r.art, &r.cl);
    assert_eq!(p.witnesses.len(), 2);
    let s = verify_claim(ClaimId::SpecialTwist, &r.art, &r.cl);
    assert!(s.witnesses[0].contains("not special"));
    let r = run("I2(7)");
    let c = verify_claim(ClaimId::ExceptionalInvolutions, &r.art, &r.cl);
    assert!(c.summary.contains("vacuous"));
    let p = verify_claim(ClaimId::Palindromic, &r.art, &r.cl);
    assert_eq!(r.cl.irreps.len(), 5);
    assert!(p.passed() && p.witnesses.is_empty());
}

#[test]
fn claim_failures_carry_witnesses() {
    let r = run("H3");
    let mut cl = r.cl.clone();
    let ex = cl.exceptional();
    for i in ex {
        cl.irreps[i].ordinary = true;
    }
    for c in &mut cl.cells {
        c.exceptional = false;
    }
    let p = verify_claim(ClaimId::Palindromic, &r.art, &cl);
    assert!(!p.passed());
    assert_eq!(p.witnesses.len(), 2);
    let a = verify_claim(ClaimId::OrdinaryParity, &r.art, &cl);
    assert!(!a.passed() && !a.witnesses.is_empty());
    assert!(!verify_claim(ClaimId::SpecialTwist, &r.art, &cl).passed());
}

#[test]
fn claim_ids() {
    assert_eq!(ClaimId::parse_list("all").unwrap(), ClaimId::ALL.to_vec());
    assert_eq!(
        ClaimId::parse_list("1.5a,1.2b,1.5a").unwrap(),
        vec![ClaimId::TraceNonvanishing, ClaimId::Palindromic]
    );
    assert!(ClaimId::parse_list("1.4").is_err());
    for c in ClaimId::ALL {
        assert_eq!(c.name().parse::<ClaimId>().unwrap(), c);
    }
}

#[test]
fn reports_are_deterministic() {
    let r = run("H3");
    let claims = || verify_claims(&ClaimId::ALL, &r.art, &r.cl);
    let a = classification_report(&r.art, &r.cl, claims());
    let b = classification_report(&r.art, &r.cl, claims());
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert_eq!(a.to_text(), b.to_text());
    let csv = a.to_csv().unwrap();
    assert!(csv.starts_with("label,dim,cell,a,b,fake_degree,ordinary,special,palindromic,sign_twist\n"));
    assert_eq!(csv.lines().count(), 11);
    let json: serde_json::Value = serde_json::to_value(&a).unwrap();
    assert_eq!(json["irreps"].as_array().unwrap().len(), 10);
    assert!(json["claims"][0].get("elapsed").is_none());
    let v = VerifyReport::new("H3", 120, claims());
    assert!(v.all_pass);
    assert!(v.to_text().contains("1.3c  PASS"));
}

#[test]
fn sequential_and_parallel_classifications_agree() {
    let r = run("B3");
    let seq = classify(&r.art, Parallelism::sequential()).unwrap();
    let par = classify(&r.art, Parallelism::with_threads(4)).unwrap();
    let render = |cl: &Classification| serde_json::to_string(&classification_report(&r.art, cl, Vec::new())).unwrap();
    assert_eq!(render(&seq), render(&par));
}

#[test]
fn cache_round_trip_gives_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = PipelineConfig {
        cache_dir: Some(dir.path().to_path_buf()),
        ..PipelineConfig::default()
    };
    let report = |notes: &mut Vec<String>| {
        let g = load_group("I2(5)".parse().unwrap(), &cfg).unwrap();
        let art = build_artifacts(g, &cfg, notes).unwrap();
        let cl = classify(&art, cfg.par).unwrap();
        serde_json::to_string(&classification_report(
            &art,
            &cl,
            verify_claims(&ClaimId::ALL, &art, &cl),
        ))
        .unwrap()
    };
    let mut cold = Vec::new();
    let a = report(&mut cold);
    assert!(cold.iter().any(|n| n.starts_with("wrote cache")));
    let mut warm = Vec::new();
    let b = report(&mut warm);
    assert!(warm.iter().any(|n| n.starts_with("loaded")));
    assert_eq!(a, b);

    let kl = dir.path().join("I2(5)").join("kl.bin");
    let mut bytes = std::fs::read(&kl).unwrap();
    let last = bytes.len() - 1;
    bytes[last] ^= 0xff;
    std::fs::write(&kl, bytes).unwrap();
    let mut broken = Vec::new();
    let c = report(&mut broken);
    assert!(broken.iter().any(|n| n.starts_with("discarding cache")));
    assert_eq!(a, c);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Characters of Coxeter groups are real, and `t_x ↦ t_{x⁻¹}` is an
    /// anti-involution of `J`, so `tr(t_x, E) = tr(t_{x⁻¹}, E)`.
    #[test]
    fn j_traces_are_inversion_invariant(x in 0u32..120, row in 0usize..10) {
        let r = run("H3");
        let t = &r.cl.irreps[row].j_traces;
        prop_assert_eq!(&t[x as usize], &t[r.art.group.inverse(x) as usize]);
    }

    #[test]
    fn phi_is_multiplicative_on_b3(a in 0u32..48, b in 0u32..48) {
        let r = run("B3");
        let g = &r.art.group;
        let lhs = r.art.phi.image(g.mul(a, b));
        let rhs = r.art.gamma.product(&r.art.phi.image(a), &r.art.phi.image(b));
        prop_assert_eq!(lhs, rhs);
    }
}
