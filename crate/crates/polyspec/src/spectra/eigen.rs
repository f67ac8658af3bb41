//! Cyclic Jacobi eigensolver for dense symmetric matrices, and the
//! eigenvalue-multiset bookkeeping built on top of it.
//!
//! Jacobi is the simplest symmetric eigensolver with guaranteed
//! convergence; the largest instance here is 1440×1440, well inside its
//! comfortable range, and its eigenvalues come out accurate to a few ulps
//! of ‖A‖ — far below the 1e-8 coalescing tolerance.

use super::SpectraError;

/// Dense symmetric matrix in row-major storage, f64.
pub struct SymMatrix {
    pub n: usize,
    pub data: Vec<f64>,
}

impl SymMatrix {
    pub fn new(n: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), n * n);
        SymMatrix { n, data }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n);
            data.extend_from_slice(r);
        }
        SymMatrix { n, data }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.n + c]
    }

    /// Largest |a_ij − a_ji|.
    pub fn asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..self.n {
            for c in r + 1..self.n {
                worst = worst.max((self.get(r, c) - self.get(c, r)).abs());
            }
        }
        worst
    }
}

/// Eigenvalues (ascending) and optionally eigenvectors (columns of `vectors`
/// matching the eigenvalue order).
pub struct EigenResult {
    pub values: Vec<f64>,
    pub vectors: Option<Vec<Vec<f64>>>,
}

const MAX_SWEEPS: usize = 64;

/// Eigendecomposition by cyclic Jacobi rotations with the usual threshold
/// schedule. `tol` bounds the final off-diagonal Frobenius norm relative to
/// the Frobenius norm of the input. Input must be symmetric to 1e-12
/// (relative to its largest entry).
pub fn symmetric_eigen(
    m: &SymMatrix,
    tol: f64,
    want_vectors: bool,
) -> Result<EigenResult, SpectraError> {
    let n = m.n;
    if n == 0 {
        return Ok(EigenResult {
            values: Vec::new(),
            vectors: want_vectors.then_some(Vec::new()),
        });
    }
    let scale = m.data.iter().fold(0.0f64, |acc, &x| acc.max(x.abs()));
    if m.asymmetry() > 1e-12 * scale.max(1.0) {
        return Err(SpectraError::NotSymmetric {
            asymmetry: m.asymmetry(),
        });
    }

    let mut a = m.data.clone();
    let mut v: Option<Vec<f64>> = if want_vectors {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        Some(id)
    } else {
        None
    };

    // Work on the upper triangle only, with the diagonal kept in `d` and
    // per-sweep corrections accumulated in `z` for better roundoff.
    let mut d: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let mut b = d.clone();
    let mut z = vec![0.0f64; n];

    let frob: f64 = m.data.iter().map(|x| x * x).sum::<f64>().sqrt();
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for r in 0..n {
            for c in r + 1..n {
                s += a[r * n + c] * a[r * n + c];
            }
        }
        (2.0 * s).sqrt()
    };

    let target = tol * frob.max(f64::MIN_POSITIVE);
    let mut converged = false;
    for sweep in 0..MAX_SWEEPS {
        let mut sm = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                sm += a[p * n + q].abs();
            }
        }
        if sm == 0.0 || off(&a) <= target {
            converged = true;
            break;
        }
        let thresh = if sweep < 3 {
            0.2 * sm / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let g = 100.0 * apq.abs();
                // tiny off-diagonal entries are flushed once the diagonal
                // dwarfs them (they can no longer change the eigenvalues)
                if sweep > 3 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    a[p * n + q] = 0.0;
                    continue;
                }
                if apq.abs() <= thresh || apq == 0.0 {
                    continue;
                }
                let h = d[q] - d[p];
                let t = if h.abs() + g == h.abs() {
                    apq / h
                } else {
                    let theta = 0.5 * h / apq;
                    let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * apq;
                z[p] -= h;
                z[q] += h;
                d[p] -= h;
                d[q] += h;
                a[p * n + q] = 0.0;

                let rot = |a: &mut [f64], i: usize, j: usize| {
                    let (g_, h_) = (a[i], a[j]);
                    a[i] = g_ - s * (h_ + g_ * tau);
                    a[j] = h_ + s * (g_ - h_ * tau);
                };
                for j in 0..p {
                    rot(&mut a, j * n + p, j * n + q);
                }
                for j in p + 1..q {
                    rot(&mut a, p * n + j, j * n + q);
                }
                for j in q + 1..n {
                    rot(&mut a, p * n + j, q * n + j);
                }
                if let Some(vm) = v.as_mut() {
                    for j in 0..n {
                        rot(vm, j * n + p, j * n + q);
                    }
                }
            }
        }
        for i in 0..n {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    if !converged && off(&a) > target {
        return Err(SpectraError::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let vectors = v.map(|vm| {
        order
            .iter()
            .map(|&col| (0..n).map(|r| vm[r * n + col]).collect())
            .collect()
    });
    Ok(EigenResult { values, vectors })
}

/// An eigenvalue multiset: strictly increasing distinct values with
/// positive multiplicities, produced by coalescing a sorted eigenvalue list
/// at a tolerance. The raw sorted list is retained for exact-width
/// comparisons.
#[derive(Clone, Debug)]
pub struct SpectrumMultiset {
    pub raw: Vec<f64>,
    pub entries: Vec<(f64, usize)>,
    pub tol: f64,
}

impl SpectrumMultiset {
    /// Coalesce a sorted list; adjacent values within `tol` of the running
    /// cluster representative collapse into one entry holding their mean.
    pub fn from_sorted(raw: Vec<f64>, tol: f64) -> Self {
        assert!(tol > 0.0, "coalescing tolerance must be positive");
        let mut entries: Vec<(f64, usize)> = Vec::new();
        let mut cluster: Vec<f64> = Vec::new();
        let flush = |cluster: &mut Vec<f64>, entries: &mut Vec<(f64, usize)>| {
            if !cluster.is_empty() {
                let mean = cluster.iter().sum::<f64>() / cluster.len() as f64;
                entries.push((mean, cluster.len()));
                cluster.clear();
            }
        };
        for &x in &raw {
            if let Some(&last) = cluster.last() {
                if (x - last).abs() > tol {
                    flush(&mut cluster, &mut entries);
                }
            }
            cluster.push(x);
        }
        flush(&mut cluster, &mut entries);
        SpectrumMultiset { raw, entries, tol }
    }

    pub fn dimension(&self) -> usize {
        self.raw.len()
    }

    pub fn max_value(&self) -> f64 {
        *self.raw.last().expect("empty spectrum")
    }

    /// Σλ and Σλ².
    pub fn power_sums(&self) -> (f64, f64) {
        let s1 = self.raw.iter().sum();
        let s2 = self.raw.iter().map(|x| x * x).sum();
        (s1, s2)
    }

    /// Multiplicity of the eigenvalue 0 (within tol).
    pub fn zero_multiplicity(&self) -> usize {
        self.entries
            .iter()
            .filter(|(v, _)| v.abs() <= self.tol)
            .map(|(_, m)| m)
            .sum()
    }

    /// Entries coalesce correctly: gaps exceed tol, multiplicities sum to
    /// the dimension.
    pub fn consistent(&self) -> bool {
        let total: usize = self.entries.iter().map(|e| e.1).sum();
        if total != self.raw.len() {
            return false;
        }
        self.entries
            .windows(2)
            .all(|w| (w[1].0 - w[0].0) > self.tol)
    }
}

/// Outcome of comparing a spectrum `s2` against `s1` padded with extra zero
/// eigenvalues.
#[derive(Clone, Debug)]
pub struct SpectrumComparison {
    pub ok: bool,
    pub max_deviation: f64,
    pub detail: String,
}

/// True when s2 = s1 ∪ {0 × zero_padding} as multisets, matching
/// eigenvalues pairwise within `tol` after sorting.
pub fn compare_spectra(
    s1: &SpectrumMultiset,
    s2: &SpectrumMultiset,
    zero_padding: usize,
    tol: f64,
) -> SpectrumComparison {
    let mut padded: Vec<f64> = s1.raw.clone();
    padded.extend(std::iter::repeat_n(0.0, zero_padding));
    padded.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if padded.len() != s2.raw.len() {
        return SpectrumComparison {
            ok: false,
            max_deviation: f64::INFINITY,
            detail: format!(
                "dimension mismatch: {} + {} zeros vs {}",
                s1.raw.len(),
                zero_padding,
                s2.raw.len()
            ),
        };
    }
    let mut max_dev = 0.0f64;
    let mut first_bad: Option<(usize, f64, f64)> = None;
    for (i, (&a, &b)) in padded.iter().zip(&s2.raw).enumerate() {
        let dev = (a - b).abs();
        if dev > max_dev {
            max_dev = dev;
        }
        if dev > tol && first_bad.is_none() {
            first_bad = Some((i, a, b));
        }
    }
    match first_bad {
        None => SpectrumComparison {
            ok: true,
            max_deviation: max_dev,
            detail: format!("matched {} eigenvalues, max deviation {max_dev:.3e}", padded.len()),
        },
        Some((i, a, b)) => SpectrumComparison {
            ok: false,
            max_deviation: max_dev,
            detail: format!("position {i}: expected {a:.12e}, got {b:.12e}"),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytopes::{complete_graph, cycle_graph, petersen_graph};
    use crate::spectra::operator::adjacency_matrix;

    fn graph_spectrum(g: &crate::polytopes::Graph) -> SpectrumMultiset {
        let adj = adjacency_matrix(g);
        let m = SymMatrix::new(adj.rows, adj.to_f64());
        let eig = symmetric_eigen(&m, 1e-12, false).unwrap();
        SpectrumMultiset::from_sorted(eig.values, 1e-8)
    }

    #[test]
    fn k2_spectrum() {
        let s = graph_spectrum(&complete_graph(2));
        assert_eq!(s.entries.len(), 2);
        assert!((s.entries[0].0 + 1.0).abs() < 1e-12);
        assert!((s.entries[1].0 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn c5_spectrum_hits_golden_ratios() {
        // C5 eigenvalues: 2, (√5−1)/2 twice, −(√5+1)/2 twice
        let s = graph_spectrum(&cycle_graph(5));
        assert!(s.consistent());
        assert_eq!(
            s.entries.iter().map(|e| e.1).collect::<Vec<_>>(),
            vec![2, 2, 1]
        );
        let phi = (5.0f64.sqrt() + 1.0) / 2.0;
        assert!((s.entries[0].0 + phi).abs() < 1e-10);
        assert!((s.entries[1].0 - (phi - 1.0)).abs() < 1e-10);
        assert!((s.entries[2].0 - 2.0).abs() < 1e-10);
    }

    #[test]
    fn petersen_spectrum() {
        // classic spectrum: 3, 1 (×5), −2 (×4)
        let s = graph_spectrum(&petersen_graph());
        assert_eq!(s.entries.len(), 3);
        assert!((s.entries[0].0 + 2.0).abs() < 1e-10 && s.entries[0].1 == 4);
        assert!((s.entries[1].0 - 1.0).abs() < 1e-10 && s.entries[1].1 == 5);
        assert!((s.entries[2].0 - 3.0).abs() < 1e-10 && s.entries[2].1 == 1);
    }

    #[test]
    fn eigenvectors_satisfy_definition() {
        let adj = adjacency_matrix(&petersen_graph());
        let m = SymMatrix::new(adj.rows, adj.to_f64());
        let eig = symmetric_eigen(&m, 1e-12, true).unwrap();
        let vecs = eig.vectors.unwrap();
        for (lambda, vec) in eig.values.iter().zip(&vecs) {
            for r in 0..m.n {
                let av: f64 = (0..m.n).map(|c| m.get(r, c) * vec[c]).sum();
                assert!((av - lambda * vec[r]).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn rejects_nonsymmetric_input() {
        let m = SymMatrix::new(2, vec![0.0, 1.0, 0.0, 0.0]);
        assert!(matches!(
            symmetric_eigen(&m, 1e-12, false),
            Err(SpectraError::NotSymmetric { .. })
        ));
    }

    #[test]
    fn spectrum_comparison_with_padding() {
        let s1 = SpectrumMultiset::from_sorted(vec![-1.0, 1.0], 1e-8);
        let s2 = SpectrumMultiset::from_sorted(vec![-1.0, 0.0, 0.0, 1.0 + 1e-10], 1e-8);
        assert!(compare_spectra(&s1, &s2, 2, 1e-8).ok);
        assert!(!compare_spectra(&s1, &s2, 1, 1e-8).ok);
        assert!(compare_spectra(&s1, &s1, 0, 1e-8).ok);
        let s3 = SpectrumMultiset::from_sorted(vec![-1.0, 0.0, 0.0, 1.1], 1e-8);
        assert!(!compare_spectra(&s1, &s3, 2, 1e-8).ok);
    }

    #[test]
    fn coalescing_groups_near_values() {
        let s = SpectrumMultiset::from_sorted(vec![0.0, 1e-10, 2e-10, 0.5, 1.0], 1e-8);
        assert_eq!(s.entries.len(), 3);
        assert_eq!(s.entries[0].1, 3);
        assert_eq!(s.zero_multiplicity(), 3);
        assert!(s.consistent());
    }
}
