use serde::Serialize;

use super::group::{Elem, GroupTable};

#[derive(Clone, Debug, Serialize)]
pub struct ConjugacyClass {
    /// Least element (in index order) of the class.
    pub representative: Elem,
    pub size: usize,
    pub elements: Vec<Elem>,
}

/// Conjugacy classes, listed by increasing representative index, so the
/// identity class comes first.
#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    pub classes: Vec<ConjugacyClass>,
    pub class_of: Vec<u32>,
}

pub fn conjugacy_classes(g: &GroupTable) -> ConjugacyClasses {
    let n = g.order();
    let mut class_of = vec![u32::MAX; n];
    let mut classes = Vec::new();
    for w in 0..n {
        if class_of[w] != u32::MAX {
            continue;
        }
        let id = classes.len() as u32;
        class_of[w] = id;
        let mut orbit = vec![w as Elem];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for s in 0..g.rank() {
                let y = g.left_mul(s, g.right_mul(x, s));
                if class_of[y as usize] == u32::MAX {
                    class_of[y as usize] = id;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        classes.push(ConjugacyClass {
            representative: orbit[0],
            size: orbit.len(),
            elements: orbit,
        });
    }
    ConjugacyClasses { classes, class_of }
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn class_of(&self, w: Elem) -> usize {
        self.class_of[w as usize] as usize
    }

    /// Class of `g^k` for `g` in class `c`.
    pub fn power_map(&self, g: &GroupTable, c: usize, k: i64) -> usize {
        self.class_of(g.power(self.classes[c].representative, k))
    }

    /// Class containing inverses of class `c`.
    pub fn inverse_class(&self, g: &GroupTable, c: usize) -> usize {
        self.class_of(g.inverse(self.classes[c].representative))
    }
}
