use super::group::{Elem, GroupTable};

/// `x ≤ y` in Bruhat order, walking the canonical reduced word of `y`.
///
/// Uses the lifting property: if `s` is a left descent of `y` then
/// `x ≤ y ⟺ min(x, sx) ≤ sy`.
pub fn bruhat_leq(g: &GroupTable, mut x: Elem, y: Elem) -> bool {
    if g.length(x) > g.length(y) {
        return false;
    }
    for &s in g.word(y) {
        let sx = g.left_mul(s as usize, x);
        if g.length(sx) < g.length(x) {
            x = sx;
        }
    }
    x == 0
}

/// Dense Bruhat order: one bit row per element.
#[derive(Clone, Debug)]
pub struct BruhatOrder {
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BruhatOrder {
    pub fn new(g: &GroupTable) -> Self {
        let n = g.order();
        let wpr = n.div_ceil(64);
        let mut bits = vec![0u64; n * wpr];
        bits[0] |= 1;
        for y in 1..n {
            let s = g.first_left_descent(y as Elem).unwrap();
            let sy = g.left_mul(s, y as Elem) as usize;
            let (before, rest) = bits.split_at_mut(y * wpr);
            let prev = &before[sy * wpr..(sy + 1) * wpr];
            let row = &mut rest[..wpr];
            for x in 0..n {
                let sx = g.left_mul(s, x as Elem) as usize;
                let m = if g.length(sx as Elem) < g.length(x as Elem) {
                    sx
                } else {
                    x
                };
                if prev[m / 64] >> (m % 64) & 1 == 1 {
                    row[x / 64] |= 1 << (x % 64);
                }
            }
        }
        BruhatOrder {
            words_per_row: wpr,
            bits,
        }
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        let (x, y) = (x as usize, y as usize);
        self.bits[y * self.words_per_row + x / 64] >> (x % 64) & 1 == 1
    }

    /// Elements below `y`, ascending.
    pub fn below(&self, y: Elem) -> impl Iterator<Item = Elem> + '_ {
        let row = &self.bits[y as usize * self.words_per_row..(y as usize + 1) * self.words_per_row];
        row.iter().enumerate().flat_map(|(i, &w)| {
            (0..64)
                .filter(move |b| w >> b & 1 == 1)
                .map(move |b| (i * 64 + b) as Elem)
        })
    }
}
