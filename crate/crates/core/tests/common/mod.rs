//! Naive dense arithmetic on `i128` grids. Deliberately shares no code with
//! the library so the closed forms can be expanded independently.

#![allow(dead_code)]

use hodge_moduli::{BiSeries, UniPoly};
use num_bigint::BigInt;

/// Truncated bivariate series as a square grid; entries with `i + j > cap`
/// stay zero.
#[derive(Clone, Debug)]
pub struct Grid {
    pub cap: usize,
    pub c: Vec<Vec<i128>>,
}

impl Grid {
    pub fn one(cap: usize) -> Self {
        let mut c = vec![vec![0; cap + 1]; cap + 1];
        c[0][0] = 1;
        Grid { cap, c }
    }

    pub fn from(cap: usize, terms: &[(usize, usize, i128)]) -> Self {
        let mut g = Grid { cap, c: vec![vec![0; cap + 1]; cap + 1] };
        for &(i, j, v) in terms {
            if i + j <= cap {
                g.c[i][j] += v;
            }
        }
        g
    }

    pub fn mul(&self, o: &Grid) -> Grid {
        let cap = self.cap;
        let mut out = Grid::from(cap, &[]);
        for i in 0..=cap {
            for j in 0..=cap - i {
                let a = self.c[i][j];
                if a == 0 {
                    continue;
                }
                for k in 0..=cap - i - j {
                    for l in 0..=cap - i - j - k {
                        out.c[i + k][j + l] += a * o.c[k][l];
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Grid, sign: i128) -> Grid {
        let mut out = self.clone();
        for i in 0..=self.cap {
            for j in 0..=self.cap - i {
                out.c[i][j] += sign * o.c[i][j];
            }
        }
        out
    }

    /// `(1 + x^a y^b)^e`, expanded with binomial coefficients.
    pub fn one_plus_pow(cap: usize, a: usize, b: usize, e: usize) -> Grid {
        let mut terms = Vec::new();
        let mut binom: i128 = 1;
        for k in 0..=e {
            terms.push((a * k, b * k, binom));
            binom = binom * (e - k) as i128 / (k + 1) as i128;
        }
        Grid::from(cap, &terms)
    }

    pub fn shift(&self, a: usize, b: usize) -> Grid {
        let mut out = Grid::from(self.cap, &[]);
        for i in 0..=self.cap {
            for j in 0..=self.cap - i {
                if i + a + j + b <= self.cap {
                    out.c[i + a][j + b] = self.c[i][j];
                }
            }
        }
        out
    }

    /// Multiplies by `1 / (1 - x^a y^b)` in place via `c[i][j] += c[i-a][j-b]`.
    pub fn over_one_minus(mut self, a: usize, b: usize) -> Grid {
        for i in a..=self.cap {
            for j in b..=self.cap - i {
                self.c[i][j] += self.c[i - a][j - b];
            }
        }
        self
    }

    pub fn coefficient(&self, i: usize, j: usize) -> i128 {
        self.c[i][j]
    }

    /// Every coefficient with `i + j <= cap` agrees with `s`.
    pub fn matches(&self, s: &BiSeries) -> Result<(), String> {
        for i in 0..=self.cap {
            for j in 0..=self.cap - i {
                let got = s.coefficient(i as u32, j as u32).map_err(|e| e.to_string())?;
                if got != BigInt::from(self.c[i][j]) {
                    return Err(format!("x^{i} y^{j}: series has {got}, grid has {}", self.c[i][j]));
                }
            }
        }
        Ok(())
    }

    /// True when nothing is nonzero at total degree above `deg`.
    pub fn vanishes_above(&self, deg: usize) -> bool {
        (0..=self.cap).all(|i| (0..=self.cap - i).all(|j| i + j <= deg || self.c[i][j] == 0))
    }
}

fn jacobian(cap: usize, g: usize) -> Grid {
    Grid::one_plus_pow(cap, 1, 0, g).mul(&Grid::one_plus_pow(cap, 0, 1, g))
}

/// Rank 2, odd degree, fixed determinant.
pub fn rank_two(g: usize, cap: usize) -> Grid {
    let lead = Grid::one_plus_pow(cap, 2, 1, g).mul(&Grid::one_plus_pow(cap, 1, 2, g));
    let tail = jacobian(cap, g).shift(g, g);
    lead.add(&tail, -1).over_one_minus(1, 1).over_one_minus(2, 2)
}

/// Rank 3, degree prime to 3, fixed determinant.
pub fn rank_three(g: usize, cap: usize) -> Grid {
    let p = |a, b, e| Grid::one_plus_pow(cap, a, b, e);
    let first = p(2, 3, g).mul(&p(3, 2, g)).mul(&p(1, 2, g)).mul(&p(2, 1, g));
    let second = p(1, 1, 2)
        .mul(&jacobian(cap, g))
        .mul(&p(1, 2, g))
        .mul(&p(2, 1, g))
        .shift(2 * g - 1, 2 * g - 1);
    let quad = Grid::from(cap, &[(0, 0, 1), (1, 1, 1), (2, 2, 1)]);
    let jac = jacobian(cap, g);
    let third = quad.mul(&jac).mul(&jac).shift(3 * g - 1, 3 * g - 1);
    first
        .add(&second, -1)
        .add(&third, 1)
        .over_one_minus(1, 1)
        .over_one_minus(2, 2)
        .over_one_minus(2, 2)
        .over_one_minus(3, 3)
}

/// `prod_{r=1}^{n-1} ((1 - (-t)^r)(1 - (-t)^{r+1}))^{g-1}` as dense coefficients.
pub fn chi_product(n: usize, g: usize) -> Vec<i128> {
    let mut acc = vec![1i128];
    let mul = |a: &[i128], b: &[i128]| {
        let mut out = vec![0i128; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    };
    let factor = |k: usize| {
        let mut f = vec![0i128; k + 1];
        f[0] = 1;
        f[k] = if k.is_multiple_of(2) { -1 } else { 1 };
        f
    };
    for _ in 0..g - 1 {
        for r in 1..n {
            acc = mul(&acc, &factor(r));
            acc = mul(&acc, &factor(r + 1));
        }
    }
    acc
}

pub fn uni_matches(p: &UniPoly, dense: &[i128]) -> Result<(), String> {
    let top = p.degree().map_or(0, |d| d as usize).max(dense.len().saturating_sub(1));
    for k in 0..=top {
        let want = BigInt::from(dense.get(k).copied().unwrap_or(0));
        if p.coefficient(k as u32) != want {
            return Err(format!("t^{k}: got {}, expected {want}", p.coefficient(k as u32)));
        }
    }
    Ok(())
}

pub fn to_i64(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|b| i64::try_from(b).expect("small")).collect()
}
