//! Small exact linear-algebra helpers over Q(τ,√2): Gaussian elimination for
//! inverses, linear solves, and rank computations.  Everything here works on
//! row-major `Vec<Vec<GoldenScalar>>` matrices of tiny dimension (≤ 4 columns).

use crate::golden::GoldenScalar as Gs;

pub type Mat = Vec<Vec<Gs>>;

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Gs::one() } else { Gs::zero() })
                .collect()
        })
        .collect()
}

/// Exact inverse by Gauss–Jordan elimination; panics on singular input
/// (never happens for the Cartan matrices this crate builds).
pub fn invert(m: &Mat) -> Mat {
    let n = m.len();
    let mut a = m.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("singular matrix");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        let pinv = p.inv().expect("pivot is nonzero");
        for j in 0..n {
            a[col][j] = &a[col][j] * &pinv;
            inv[col][j] = &inv[col][j] * &pinv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                a[r][j] = &a[r][j] - &(&f * &a[col][j]);
                inv[r][j] = &inv[r][j] - &(&f * &inv[col][j]);
            }
        }
    }
    inv
}

/// Solve M·x = rhs exactly (square, nonsingular).
pub fn solve(m: &Mat, rhs: &[Gs]) -> Vec<Gs> {
    let inv = invert(m);
    mat_vec(&inv, rhs)
}

pub fn mat_vec(m: &Mat, v: &[Gs]) -> Vec<Gs> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(Gs::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    (0..k).fold(Gs::zero(), |acc, l| acc + &a[i][l] * &b[l][j])
                })
                .collect()
        })
        .collect()
}

/// Exact rank of a list of row vectors.
pub fn rank(rows: &[Vec<Gs>]) -> usize {
    let mut rows: Vec<Vec<Gs>> = rows.to_vec();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][col].inv().expect("pivot nonzero");
        for j in col..ncols {
            rows[rank][j] = &rows[rank][j] * &p;
        }
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].clone();
            for j in col..ncols {
                rows[r][j] = &rows[r][j] - &(&f * &rows[rank][j]);
            }
        }
        rank += 1;
    }
    rank
}

/// A basis of the null space of the row span: vectors x with rows·x = 0.
pub fn null_space(rows: &[Vec<Gs>]) -> Vec<Vec<Gs>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Gs>> = rows.to_vec();
    // reduced row echelon form
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].inv().unwrap();
        for j in 0..ncols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..ncols {
                    m[i][j] = &m[i][j] - &(&f * &m[r][j]);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Gs::zero(); ncols];
        v[free] = Gs::one();
        for (row_idx, &pc) in pivots.iter().enumerate() {
            v[pc] = -&m[row_idx][free];
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tau_mat() -> Mat {
        // H4 Cartan matrix
        let t = Gs::tau;
        vec![
            vec![Gs::from_int(2), -t(), Gs::zero(), Gs::zero()],
            vec![-t(), Gs::from_int(2), Gs::from_int(-1), Gs::zero()],
            vec![Gs::zero(), Gs::from_int(-1), Gs::from_int(2), Gs::from_int(-1)],
            vec![Gs::zero(), Gs::zero(), Gs::from_int(-1), Gs::from_int(2)],
        ]
    }

    #[test]
    fn inverse_of_cartan() {
        let c = tau_mat();
        let inv = invert(&c);
        assert_eq!(mat_mul(&c, &inv), identity(4));
        // (C⁻¹)₄₄ = 2τ² — the squared length of ω4
        let two_tau_sq = Gs::from_int(2) * Gs::tau() * Gs::tau();
        assert_eq!(inv[3][3], two_tau_sq);
    }

    #[test]
    fn rank_and_null_space() {
        let rows = vec![
            vec![Gs::one(), Gs::zero(), Gs::tau()],
            vec![Gs::zero(), Gs::one(), Gs::sqrt2()],
            vec![Gs::one(), Gs::one(), Gs::tau() + Gs::sqrt2()],
        ];
        assert_eq!(rank(&rows), 2);
        let ns = null_space(&rows);
        assert_eq!(ns.len(), 1);
        for row in &rows {
            let dot = row
                .iter()
                .zip(&ns[0])
                .fold(Gs::zero(), |acc, (a, b)| acc + a * b);
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn solve_roundtrip() {
        let c = tau_mat();
        let rhs = vec![Gs::one(), Gs::sigma(), Gs::sqrt2(), Gs::ratio(2, 7)];
        let x = solve(&c, &rhs);
        assert_eq!(mat_vec(&c, &x), rhs);
    }
}
