//! Equitable quotient matrices and the cubic attached to
//! `K_t ∇ (2K_1 ∪ K_{n−t−2})`.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest dimension accepted by [`char_poly`].
pub const CHAR_POLY_MAX_DIM: usize = 8;

/// Quotient matrix of an equitable partition: entry `(r, c)` is the number
/// of neighbours in cell `c` of any vertex of cell `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub entries: Vec<Vec<i64>>,
    pub partition: Vec<VertexSet>,
}

impl QuotientMatrix {
    /// A bare matrix without an underlying partition.
    pub fn from_rows(entries: Vec<Vec<i64>>) -> Result<QuotientMatrix> {
        let d = entries.len();
        if entries.iter().any(|r| r.len() != d) {
            return Err(Error::Parameter("matrix must be square".into()));
        }
        Ok(QuotientMatrix {
            entries,
            partition: Vec::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }
}

/// Builds the quotient matrix, checking that `partition` covers the vertex
/// set disjointly and is equitable.
pub fn quotient_matrix(g: &Graph, partition: &[VertexSet]) -> Result<QuotientMatrix> {
    let mut seen = VertexSet::EMPTY;
    for (i, cell) in partition.iter().enumerate() {
        if cell.is_empty() {
            return Err(Error::Parameter(format!("cell {i} is empty")));
        }
        if !seen.intersection(*cell).is_empty() {
            return Err(Error::Parameter(format!(
                "cell {i} overlaps an earlier cell"
            )));
        }
        seen = seen.union(*cell);
    }
    if seen != g.vertices() {
        return Err(Error::Parameter(
            "partition does not cover the vertex set".into(),
        ));
    }
    let d = partition.len();
    let mut entries = vec![vec![0i64; d]; d];
    for (r, cell) in partition.iter().enumerate() {
        let rep = cell.first().expect("non-empty");
        for (c, other) in partition.iter().enumerate() {
            let expected = g.neighbors(rep).intersection(*other).len();
            for v in *cell {
                let found = g.neighbors(v).intersection(*other).len();
                if found != expected {
                    return Err(Error::NotEquitable {
                        vertex: v,
                        cell: c,
                        found,
                        expected,
                    });
                }
            }
            entries[r][c] = expected as i64;
        }
    }
    Ok(QuotientMatrix {
        entries,
        partition: partition.to_vec(),
    })
}

/// Largest eigenvalue of a small nonnegative matrix, by power iteration on
/// `B + cI` with `c = max |entry|`.
pub fn matrix_spectral_radius(m: &QuotientMatrix, tol: f64) -> Result<f64> {
    let d = m.dim();
    if d == 0 {
        return Err(Error::Parameter("empty matrix".into()));
    }
    if m.entries.iter().flatten().any(|&x| x < 0) {
        return Err(Error::Parameter("matrix has negative entries".into()));
    }
    let shift = m.entries.iter().flatten().copied().max().unwrap_or(0) as f64;
    let b: Vec<Vec<f64>> = m
        .entries
        .iter()
        .map(|r| r.iter().map(|&x| x as f64).collect())
        .collect();
    let mut x = vec![1.0f64; d];
    let mut bx = vec![0.0f64; d];
    let mut residual = f64::INFINITY;
    for _ in 0..crate::spectral::MAX_ITERATIONS {
        for i in 0..d {
            bx[i] = (0..d).map(|j| b[i][j] * x[j]).sum();
        }
        let xx: f64 = x.iter().map(|v| v * v).sum();
        let lambda = x.iter().zip(&bx).map(|(a, b)| a * b).sum::<f64>() / xx;
        let xmax = x.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        residual = (0..d)
            .map(|i| (bx[i] - lambda * x[i]).abs())
            .fold(0.0, f64::max)
            / xmax;
        if residual <= tol {
            return Ok(lambda);
        }
        let mut norm = 0.0f64;
        for i in 0..d {
            x[i] = bx[i] + shift * x[i];
            norm = norm.max(x[i].abs());
        }
        if norm == 0.0 {
            // nilpotent direction: the zero matrix
            return Ok(0.0);
        }
        for v in &mut x {
            *v /= norm;
        }
    }
    Err(Error::NonConvergence {
        iterations: crate::spectral::MAX_ITERATIONS,
        residual,
    })
}

/// Characteristic polynomial `det(λI − B)`, highest degree first, by the
/// Faddeev–LeVerrier recurrence in exact integer arithmetic.
pub fn char_poly(m: &QuotientMatrix) -> Result<Vec<i64>> {
    let d = m.dim();
    if d > CHAR_POLY_MAX_DIM {
        return Err(Error::Capacity(format!(
            "characteristic polynomial limited to dimension {CHAR_POLY_MAX_DIM}, got {d}"
        )));
    }
    let a: Vec<Vec<i128>> = m
        .entries
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mul = |x: &Vec<Vec<i128>>, y: &Vec<Vec<i128>>| -> Vec<Vec<i128>> {
        let mut out = vec![vec![0i128; d]; d];
        for i in 0..d {
            for k in 0..d {
                if x[i][k] == 0 {
                    continue;
                }
                for j in 0..d {
                    out[i][j] += x[i][k] * y[k][j];
                }
            }
        }
        out
    };
    let mut coeffs = vec![0i128; d + 1];
    coeffs[0] = 1;
    // M_0 = 0; M_k = A M_{k-1} + c_{k-1} I; c_k = -tr(A M_k) / k
    let mut mk = vec![vec![0i128; d]; d];
    for k in 1..=d {
        let mut next = mul(&a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += coeffs[k - 1];
        }
        mk = next;
        let am = mul(&a, &mk);
        let trace: i128 = (0..d).map(|i| am[i][i]).sum();
        debug_assert_eq!(trace % k as i128, 0);
        coeffs[k] = -trace / k as i128;
    }
    coeffs
        .into_iter()
        .map(|c| i64::try_from(c).map_err(|_| Error::Capacity("coefficient overflows i64".into())))
        .collect()
}

/// Evaluates `f(λ) = λ³ − (n−4)λ² − (n+2t−3)λ + 2tn − 2t² − 6t`.
pub fn f_poly(n: f64, t: f64, lam: f64) -> f64 {
    ((lam - (n - 4.0)) * lam - (n + 2.0 * t - 3.0)) * lam + 2.0 * t * n - 2.0 * t * t - 6.0 * t
}

/// Exact integer coefficients of `f`, highest degree first.
pub fn f_poly_coefficients(n: i64, t: i64) -> [i64; 4] {
    [1, -(n - 4), -(n + 2 * t - 3), 2 * t * n - 2 * t * t - 6 * t]
}

/// Exact evaluation of a polynomial at an integer point (Horner).
pub fn eval_int(coeffs: &[i64], x: i64) -> i64 {
    coeffs.iter().fold(0i64, |acc, &c| acc * x + c)
}

/// `B_1`: quotient of `K_t ∇ (2K_1 ∪ K_{n−t−2})` over the cells
/// `{2K_1, K_t, K_{n−t−2}}`.
pub fn b1_partition(n: usize, t: usize) -> Vec<VertexSet> {
    vec![
        VertexSet::range(t, t + 2),
        VertexSet::range(0, t),
        VertexSet::range(t + 2, n),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::two_pendant_join;

    #[test]
    fn b1_matrix_for_n10_t2() {
        let g = two_pendant_join(10, 2).unwrap();
        let q = quotient_matrix(&g, &b1_partition(10, 2)).unwrap();
        assert_eq!(q.entries, vec![vec![0, 2, 0], vec![2, 1, 6], vec![0, 2, 5]]);
        assert_eq!(char_poly(&q).unwrap(), vec![1, -6, -11, 20]);
        let lam = matrix_spectral_radius(&q, 1e-13).unwrap();
        assert!(f_poly(10.0, 2.0, lam).abs() < 1e-8);
        assert!(lam > 7.0 && lam < 8.0);
    }

    #[test]
    fn singleton_partition_of_k4_is_adjacency() {
        let g = Graph::complete(4).unwrap();
        let cells: Vec<VertexSet> = (0..4).map(VertexSet::singleton).collect();
        let q = quotient_matrix(&g, &cells).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(q.entries[i][j], (i != j) as i64);
            }
        }
    }

    #[test]
    fn non_equitable_split_of_c4() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        // {0,1} vs {2,3}: vertex 0 has one neighbour in {0,1}, fine, but
        // {0,2} antipodal vs {1,3} is equitable; use {0,2,1} vs {3}
        let bad = [VertexSet::from_iter([0, 1, 2]), VertexSet::singleton(3)];
        let err = quotient_matrix(&c4, &bad).unwrap_err();
        assert!(matches!(err, Error::NotEquitable { .. }), "{err}");
        let good = [VertexSet::from_iter([0, 2]), VertexSet::from_iter([1, 3])];
        assert_eq!(
            quotient_matrix(&c4, &good).unwrap().entries,
            vec![vec![0, 2], vec![2, 0]]
        );
        assert!(quotient_matrix(&c4, &[VertexSet::from_iter([0, 1])]).is_err());
    }

    #[test]
    fn small_matrices() {
        let z = QuotientMatrix::from_rows(vec![vec![0]]).unwrap();
        assert_eq!(matrix_spectral_radius(&z, 1e-12).unwrap(), 0.0);
        let p = QuotientMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert!((matrix_spectral_radius(&p, 1e-12).unwrap() - 1.0).abs() < 1e-12);
        let i2 = QuotientMatrix::from_rows(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(char_poly(&i2).unwrap(), vec![1, -2, 1]);
        let big = QuotientMatrix::from_rows(vec![vec![0; 9]; 9]).unwrap();
        assert!(char_poly(&big).is_err());
    }

    #[test]
    fn cubic_values() {
        assert_eq!(f_poly(10.0, 2.0, 0.0), 20.0);
        assert_eq!(f_poly(10.0, 2.0, 7.0), -8.0);
        assert_eq!(f_poly(10.0, 2.0, 8.0), 60.0);
        assert_eq!(f_poly_coefficients(12, 3), [1, -8, -15, 36]);
    }
}
