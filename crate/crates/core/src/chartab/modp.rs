//! Prime-field linear algebra for the class-matrix eigenspace split.

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero mod {}", self.p);
        self.pow(a, self.p - 2)
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn signed(self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    /// An element of exact multiplicative order `n` (`n | p − 1`).
    pub fn root_of_unity(self, n: u64) -> u64 {
        assert_eq!((self.p - 1) % n, 0);
        let factors = prime_factors(self.p - 1);
        let gen = (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, (self.p - 1) / q) != 1))
            .expect("prime field has a generator");
        self.pow(gen, (self.p - 1) / n)
    }

    /// Row-reduce in place; returns pivot columns. Zero rows are dropped.
    pub fn rref(self, m: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let cols = m.first().map_or(0, |r| r.len());
        let mut pivots = Vec::new();
        let mut row = 0;
        for c in 0..cols {
            let Some(r) = (row..m.len()).find(|&r| m[r][c] != 0) else {
                continue;
            };
            m.swap(row, r);
            let inv = self.inv(m[row][c]);
            for x in m[row].iter_mut() {
                *x = self.mul(*x, inv);
            }
            let pivot_row = m[row].clone();
            for (i, other) in m.iter_mut().enumerate() {
                if i != row && other[c] != 0 {
                    let f = other[c];
                    for (o, &pv) in other.iter_mut().zip(&pivot_row) {
                        *o = self.sub(*o, self.mul(f, pv));
                    }
                }
            }
            pivots.push(c);
            row += 1;
            if row == m.len() {
                break;
            }
        }
        m.truncate(row);
        pivots
    }

    /// Basis of the left kernel `{x : x·A = 0}` of a square matrix.
    pub fn left_kernel(self, a: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let n = a.len();
        // x·A = 0  ⟺  Aᵀ·xᵀ = 0
        let mut t: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect();
        let pivots = self.rref(&mut t);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; n];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.sub(0, t[r][f]);
                }
                v
            })
            .collect()
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
