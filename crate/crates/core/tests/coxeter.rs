mod common;

use common::group;
use klcells::coxeter::{
    bruhat_leq, build_group, compute_degrees, conjugacy_classes, known_order, BruhatOrder, CoxeterDatum, CoxeterType,
    Elem, GroupTable,
};
use klcells::exactnum::{Coeff, CycloInt};
use proptest::prelude::*;

/// (type, order, degrees, number of conjugacy classes)
const TABLE: [(&str, usize, &[u32], usize); 11] = [
    ("A1", 2, &[2], 2),
    ("A3", 24, &[2, 3, 4], 5),
    ("A4", 120, &[2, 3, 4, 5], 7),
    ("B3", 48, &[2, 4, 6], 10),
    ("B4", 384, &[2, 4, 6, 8], 20),
    ("D4", 192, &[2, 4, 4, 6], 13),
    ("H3", 120, &[2, 6, 10], 10),
    ("F4", 1152, &[2, 6, 8, 12], 25),
    ("I2(5)", 10, &[2, 5], 4),
    ("I2(6)", 12, &[2, 6], 6),
    ("I2(7)", 14, &[2, 7], 5),
];

#[test]
fn orders_degrees_and_class_counts() {
    for (sym, order, degrees, classes) in TABLE {
        let g = group(sym);
        assert_eq!(g.order(), order, "{sym}");
        assert_eq!(known_order(sym.parse().unwrap()), order as u128, "{sym}");
        assert_eq!(g.degrees(), degrees, "{sym}");
        let reflections: u32 = degrees.iter().map(|d| d - 1).sum();
        assert_eq!(g.length(g.w0()), reflections, "{sym}");
        let cc = conjugacy_classes(&g);
        assert_eq!(cc.len(), classes, "{sym}");
        assert_eq!(cc.sizes().iter().sum::<usize>(), order, "{sym}");
    }
}

#[test]
fn metadata_for_large_types() {
    for (sym, order) in [("E6", 51840u128), ("E7", 2903040), ("E8", 696729600), ("H4", 14400)] {
        assert_eq!(known_order(sym.parse::<CoxeterType>().unwrap()), order, "{sym}");
    }
    assert!(build_group(&CoxeterDatum::new("E8".parse().unwrap()), 20000).is_err());
}

#[test]
fn poincare_polynomial_counts_lengths() {
    for (sym, ..) in TABLE {
        let g = group(sym);
        let mut by_length = vec![0u64; g.length(g.w0()) as usize + 1];
        for w in g.elements() {
            by_length[g.length(w) as usize] += 1;
        }
        assert_eq!(g.poincare_coeffs(), by_length, "{sym}");
        assert_eq!(compute_degrees(&by_length).unwrap(), g.degrees(), "{sym}");
    }
}

#[test]
fn coxeter_relations_hold() {
    for (sym, ..) in TABLE {
        let g = group(sym);
        let m = g.datum().coxeter_matrix().to_vec();
        for s in 0..g.rank() {
            for t in 0..g.rank() {
                let st = g.mul(g.generator(s), g.generator(t));
                assert_eq!(g.element_order(st), m[s][t], "{sym} ({s},{t})");
            }
        }
    }
}

#[test]
fn classes_are_closed_under_conjugation() {
    for sym in ["B3", "H3", "D4"] {
        let g = group(sym);
        let cc = conjugacy_classes(&g);
        for w in g.elements() {
            for s in 0..g.rank() {
                let s = g.generator(s);
                assert_eq!(cc.class_of(g.mul(g.mul(s, w), s)), cc.class_of(w));
            }
        }
    }
}

#[test]
fn bruhat_order_is_the_subword_order() {
    // oracle: x <= y iff some subword of a reduced word of y multiplies to x
    for sym in ["A3", "B3", "I2(7)"] {
        let g = group(sym);
        let order = BruhatOrder::new(&g);
        for y in g.elements() {
            let word = g.word(y).to_vec();
            let mut below = vec![false; g.order()];
            for mask in 0u32..(1 << word.len()) {
                let mut x = 0 as Elem;
                for (i, &s) in word.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        x = g.right_mul(x, s as usize);
                    }
                }
                below[x as usize] = true;
            }
            for x in g.elements() {
                assert_eq!(order.leq(x, y), below[x as usize], "{sym} {x} <= {y}");
                assert_eq!(bruhat_leq(&g, x, y), below[x as usize], "{sym} {x} <= {y}");
            }
        }
    }
}

fn mat_mul(a: &[Vec<CycloInt>], b: &[Vec<CycloInt>]) -> Vec<Vec<CycloInt>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(a[0][0].zero_like(), |acc, k| acc.add_ref(&a[i][k].mul_ref(&b[k][j]))))
                .collect()
        })
        .collect()
}

fn groups() -> &'static [GroupTable] {
    static G: std::sync::OnceLock<Vec<GroupTable>> = std::sync::OnceLock::new();
    G.get_or_init(|| ["B3", "H3", "D4", "I2(7)"].iter().map(|s| group(s)).collect())
}

fn group_and_elems(k: usize) -> impl Strategy<Value = (usize, Vec<Elem>)> {
    (0..groups().len()).prop_flat_map(move |i| {
        let n = groups()[i].order() as Elem;
        (Just(i), prop::collection::vec(0..n, k))
    })
}

proptest! {
    #[test]
    fn multiplication_is_a_group_law((gi, e) in group_and_elems(3)) {
        let g = &groups()[gi];
        let (x, y, z) = (e[0], e[1], e[2]);
        prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
        prop_assert_eq!(g.mul(x, g.inverse(x)), 0);
        prop_assert_eq!(g.length(g.inverse(x)), g.length(x));
        let (lx, ly, lxy) = (g.length(x), g.length(y), g.length(g.mul(x, y)));
        prop_assert!(lxy <= lx + ly);
        prop_assert_eq!(lxy % 2, (lx + ly) % 2);
        prop_assert_eq!(g.length(g.mul(g.w0(), x)), g.length(g.w0()) - lx);
    }

    #[test]
    fn descents_and_words_agree((gi, e) in group_and_elems(1)) {
        let g = &groups()[gi];
        let w = e[0];
        let rebuilt = g.word(w).iter().fold(0, |acc, &s| g.right_mul(acc, s as usize));
        prop_assert_eq!(rebuilt, w);
        prop_assert_eq!(g.word(w).len() as u32, g.length(w));
        prop_assert_eq!(g.parse_element(&g.render_word(w)).unwrap(), w);
        for s in 0..g.rank() {
            let down = g.length(g.left_mul(s, w)) < g.length(w);
            prop_assert_eq!(g.is_left_descent(s, w), down);
            let down = g.length(g.right_mul(w, s)) < g.length(w);
            prop_assert_eq!(g.is_right_descent(w, s), down);
        }
    }

    #[test]
    fn reflection_representation_is_a_homomorphism((gi, e) in group_and_elems(2)) {
        let g = &groups()[gi];
        let (x, y) = (e[0], e[1]);
        prop_assert_eq!(g.matrix(g.mul(x, y)), mat_mul(&g.matrix(x), &g.matrix(y)));
    }
}
