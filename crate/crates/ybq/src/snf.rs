//! Smith normal form of integer matrices over arbitrary-precision integers,
//! with the column transform tracked so cosets of the row lattice can be put
//! in a canonical form.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone)]
pub struct SmithForm {
    /// Diagonal entries d1 | d2 | ..., nonnegative, padded with zeros to `cols`.
    pub diag: Vec<BigInt>,
    /// Unimodular matrix with `row_lattice(A)·V = row_lattice(diag)`.
    pub v: Vec<Vec<BigInt>>,
    pub rows: usize,
    pub cols: usize,
}

pub fn smith_normal_form(a: &[Vec<i64>], cols: usize) -> SmithForm {
    let rows = a.len();
    let mut m: Vec<Vec<BigInt>> =
        a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    for r in &m {
        assert_eq!(r.len(), cols);
    }
    let mut v: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| (0..cols).map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() }).collect())
        .collect();

    let swap_cols = |m: &mut Vec<Vec<BigInt>>, v: &mut Vec<Vec<BigInt>>, a: usize, b: usize| {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
        for row in v.iter_mut() {
            row.swap(a, b);
        }
    };
    // col_b -= q * col_a
    let add_col = |m: &mut Vec<Vec<BigInt>>, v: &mut Vec<Vec<BigInt>>, a: usize, b: usize, q: &BigInt| {
        for row in m.iter_mut() {
            let sub = q * &row[a];
            row[b] -= sub;
        }
        for row in v.iter_mut() {
            let sub = q * &row[a];
            row[b] -= sub;
        }
    };

    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: nonzero entry of least magnitude in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero()
                    && pivot.map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        if pj != t {
            swap_cols(&mut m, &mut v, t, pj);
        }

        let mut clean = true;
        for i in t + 1..rows {
            if !m[i][t].is_zero() {
                let q = &m[i][t] / &m[t][t];
                for j in t..cols {
                    let sub = &q * &m[t][j];
                    m[i][j] -= sub;
                }
                if !m[i][t].is_zero() {
                    clean = false;
                }
            }
        }
        for j in t + 1..cols {
            if !m[t][j].is_zero() {
                let q = m[t][j].clone() / &m[t][t];
                add_col(&mut m, &mut v, t, j, &q);
                if !m[t][j].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue; // a smaller pivot now exists in the block
        }

        // divisibility: the pivot must divide the rest of the block
        let mut fixed = true;
        'scan: for i in t + 1..rows {
            for j in t + 1..cols {
                if !(&m[i][j] % &m[t][t]).is_zero() {
                    for k in t..cols {
                        let add = m[i][k].clone();
                        m[t][k] += add;
                    }
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if !fixed {
            continue;
        }
        if m[t][t].is_negative() {
            for j in t..cols {
                m[t][j] = -m[t][j].clone();
            }
        }
        t += 1;
    }

    let diag: Vec<BigInt> = (0..cols)
        .map(|j| if j < rows { m[j][j].abs() } else { BigInt::zero() })
        .collect();
    SmithForm { diag, v, rows, cols }
}

impl SmithForm {
    /// Invariant factors greater than one, in divisibility order.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diag.iter().filter(|d| !d.is_zero() && **d != BigInt::from(1)).cloned().collect()
    }

    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }

    pub fn free_rank(&self) -> usize {
        self.cols - self.rank()
    }

    /// Canonical representative of `x + row_lattice(A)`: coordinates in the
    /// transformed basis, reduced modulo the diagonal.
    pub fn canonical_coset(&self, x: &[i64]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.cols);
        let mut y = vec![BigInt::zero(); self.cols];
        for (j, yj) in y.iter_mut().enumerate() {
            for (k, xv) in x.iter().enumerate() {
                *yj += BigInt::from(*xv) * &self.v[k][j];
            }
        }
        for (j, yj) in y.iter_mut().enumerate() {
            if !self.diag[j].is_zero() {
                let d = &self.diag[j];
                let mut r = yj.clone() % d;
                if r.is_negative() {
                    r += d;
                }
                *yj = r;
            }
        }
        y
    }
}

/// Invariant-factor summary of the abelianization of a presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl std::fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        for _ in 0..self.free_rank {
            parts.push("Z".to_string());
        }
        if parts.is_empty() {
            write!(f, "trivial")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
