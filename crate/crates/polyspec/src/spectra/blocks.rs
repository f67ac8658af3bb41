//! Spectrum of the group-algebra operator Y = B(I + R_s) through the
//! isotypic decomposition of the regular representation.
//!
//! Y itself is not symmetric, so the eigensolve runs on the symmetric
//! surrogate W = (I+S)·B·(I+S)/2 with S = R_s: writing P = (I+S)/2 (the
//! orthogonal projector onto the special-pair-symmetric functions),
//! W = 2PBP shares its nonzero spectrum with B·(I+S)·... = Y because
//! spec(UV) and spec(VU) agree away from zero and the dimensions match, so
//! the full multisets coincide. W lies in the span of right translations,
//! hence commutes with every central idempotent e_χ and restricts to each
//! isotypic component, giving one small symmetric eigenproblem per
//! irreducible character.
//!
//! Characters with non-real values are handled by merging each conjugate
//! pair {χ, χ̄} into one real projector e_χ + e_χ̄; the merged block is the
//! realification of the complex χ-block, so its eigenvalues come in equal
//! pairs which are split evenly between χ and χ̄.

use crate::groups::{CharacterTable, ConjugacyData, FiniteGroup};

use super::eigen::{symmetric_eigen, SpectrumMultiset, SymMatrix};
use super::operator::{right_translation, translation_sum, IMat};
use super::SpectraError;

/// The exact integer double of the symmetric surrogate: W2 = (I+S)·B·(I+S),
/// kept both as a matrix and as its right-translation coefficient vector
/// (W2 has entry w[x⁻¹y] at (x,y)).
pub struct Surrogate {
    pub w2: IMat,
    pub coeff: Vec<i64>,
}

/// Build W2 by exact integer matrix products and cross-check it against the
/// group-algebra convolution form. Requires s² = id and an inverse-closed
/// non-special set (B must be symmetric).
pub fn symmetric_surrogate(
    group: &FiniteGroup,
    nonspecial: &[u32],
    special: u32,
) -> Result<Surrogate, SpectraError> {
    let n = group.order();
    if group.mul(special, special) != group.identity() {
        return Err(SpectraError::SpecialNotInvolution);
    }
    let b = translation_sum(group, nonspecial);
    if !b.is_symmetric() {
        return Err(SpectraError::ProjectorDefect(
            "non-special translation sum is not symmetric; connection set not inverse-closed"
                .into(),
        ));
    }
    let s = right_translation(group, special);
    let ident = IMat::identity(n);
    if s.mul(&s)? != ident {
        return Err(SpectraError::SpecialNotInvolution);
    }
    let ips = ident.add(&s);
    let w2 = ips.mul(&b)?.mul(&ips)?;
    if !w2.is_symmetric() {
        return Err(SpectraError::ProjectorDefect(
            "symmetric surrogate came out asymmetric".into(),
        ));
    }

    // Convolution form: W2 = Σ_{h} (R_h + R_{sh} + R_{hs} + R_{shs}).
    let mut coeff = vec![0i64; n];
    for &h in nonspecial {
        coeff[h as usize] += 1;
        coeff[group.mul(special, h) as usize] += 1;
        coeff[group.mul(h, special) as usize] += 1;
        coeff[group.mul(group.mul(special, h), special) as usize] += 1;
    }
    for x in 0..n as u32 {
        for y in 0..n as u32 {
            let k = group.mul(group.inv(x), y);
            if w2.get(x as usize, y as usize) != coeff[k as usize] {
                return Err(SpectraError::ProjectorDefect(format!(
                    "surrogate matrix disagrees with its convolution form at ({x},{y})"
                )));
            }
        }
    }
    Ok(Surrogate { w2, coeff })
}

/// Per-character outcome of the block method.
#[derive(Clone, Debug)]
pub struct IrrepBlock {
    /// Character table row.
    pub row: usize,
    pub degree: u32,
    /// Conjugate row when the character is not real-valued.
    pub paired_with: Option<usize>,
    /// Isotypic dimension χ(1)² contributed by this row.
    pub block_dim: usize,
    /// The χ(1)² eigenvalues of W restricted to this row's component.
    pub eigenvalues: Vec<f64>,
}

pub struct BlockSpectrum {
    /// One entry per character table row, in row order.
    pub blocks: Vec<IrrepBlock>,
    /// Union of all block eigenvalues; dimension |G|.
    pub spectrum: SpectrumMultiset,
    /// max_k |(c∗c)_k − c_k| over all projectors (e_χ² = e_χ).
    pub idempotency_residual: f64,
    /// ‖Σ_χ e_χ − I‖∞ in coefficient form.
    pub projector_sum_residual: f64,
    /// Largest asymmetry among the restricted blocks.
    pub block_symmetry_residual: f64,
    /// Largest gap inside the eigenvalue pairs of merged conjugate blocks.
    pub pair_gap_residual: f64,
}

/// Spectrum of W = (I+S)B(I+S)/2 via isotypic blocks. `jobs` ≥ 1 spreads
/// independent blocks over threads; results are merged in row order, so the
/// output does not depend on the thread count.
pub fn spectrum_via_blocks(
    group: &FiniteGroup,
    cd: &ConjugacyData,
    ct: &CharacterTable,
    nonspecial: &[u32],
    special: u32,
    tol: f64,
    jobs: usize,
) -> Result<BlockSpectrum, SpectraError> {
    let n = group.order();
    let surrogate = symmetric_surrogate(group, nonspecial, special)?;
    let wcoeff: Vec<f64> = surrogate.coeff.iter().map(|&c| c as f64 / 2.0).collect();
    let wsupport: Vec<(u32, f64)> = wcoeff
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0.0)
        .map(|(k, &c)| (k as u32, c))
        .collect();

    // Group table rows into real rows and conjugate pairs; the pair is
    // processed once at its smaller row index.
    let mut tasks: Vec<(usize, Option<usize>)> = Vec::new();
    for row in 0..ct.row_count() {
        let conj = ct.conjugate_row(row);
        if conj == row {
            tasks.push((row, None));
        } else if row < conj {
            tasks.push((row, Some(conj)));
        }
    }

    // Real projector coefficients for each task, and the running sum for
    // the resolution-of-identity check.
    let mut sum_coeff = vec![0.0f64; n];
    let mut task_coeffs: Vec<Vec<f64>> = Vec::with_capacity(tasks.len());
    for &(row, pair) in &tasks {
        let d = ct.degrees[row] as f64;
        let mut c = vec![0.0f64; n];
        for g in 0..n as u32 {
            let cls = cd.class_of[g as usize] as usize;
            let v = ct.values[row][cls];
            // conj(χ(g)) for the row, plus χ(g) for the paired conjugate row
            let real_part = if pair.is_some() { 2.0 * v.re } else { v.re };
            if pair.is_none() && v.im.abs() > 1e-9 {
                return Err(SpectraError::ProjectorDefect(format!(
                    "character row {row} treated as real has imaginary part {}",
                    v.im
                )));
            }
            c[g as usize] = d / n as f64 * real_part;
        }
        for (s, &v) in sum_coeff.iter_mut().zip(&c) {
            *s += v;
        }
        task_coeffs.push(c);
    }
    let mut projector_sum_residual = 0.0f64;
    for g in 0..n {
        let expect = if g == group.identity() as usize { 1.0 } else { 0.0 };
        projector_sum_residual = projector_sum_residual.max((sum_coeff[g] - expect).abs());
    }
    if projector_sum_residual > 1e-9 {
        return Err(SpectraError::ProjectorDefect(format!(
            "projectors do not sum to the identity (residual {projector_sum_residual:.3e})"
        )));
    }

    struct TaskResult {
        row: usize,
        pair: Option<usize>,
        eigen: Vec<f64>,
        idempotency: f64,
        symmetry: f64,
        pair_gap: f64,
    }

    let run_task = |ti: usize| -> Result<TaskResult, SpectraError> {
        let (row, pair) = tasks[ti];
        let c = &task_coeffs[ti];
        let d = ct.degrees[row] as usize;
        let expected_rank = if pair.is_some() { 2 * d * d } else { d * d };

        // e² = e in coefficient form: (c∗c)_k = Σ_g c_g·c_{g⁻¹k}.
        let mut idem = 0.0f64;
        for k in 0..n as u32 {
            let mut acc = 0.0f64;
            for g in 0..n as u32 {
                let cg = c[g as usize];
                if cg != 0.0 {
                    acc += cg * c[group.mul(group.inv(g), k) as usize];
                }
            }
            idem = idem.max((acc - c[k as usize]).abs());
        }
        if idem > 1e-9 {
            return Err(SpectraError::ProjectorDefect(format!(
                "projector for row {row} is not idempotent (residual {idem:.3e})"
            )));
        }

        // Orthonormal basis of the image by modified Gram–Schmidt over the
        // projector's columns; rank must match the isotypic dimension.
        let mut basis: Vec<Vec<f64>> = Vec::with_capacity(expected_rank);
        let mut col = vec![0.0f64; n];
        for y in 0..n as u32 {
            for x in 0..n as u32 {
                col[x as usize] = c[group.mul(group.inv(x), y) as usize];
            }
            for _pass in 0..2 {
                for q in &basis {
                    let dot: f64 = q.iter().zip(&col).map(|(a, b)| a * b).sum();
                    for (ci, qi) in col.iter_mut().zip(q) {
                        *ci -= dot * qi;
                    }
                }
            }
            let norm: f64 = col.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 1e-6 {
                basis.push(col.iter().map(|x| x / norm).collect());
            }
        }
        if basis.len() != expected_rank {
            return Err(SpectraError::IsotypicRank {
                row,
                expected: expected_rank,
                got: basis.len(),
            });
        }

        // Restrict W to the component: QᵀWQ through the sparse
        // translation support of W.
        let k = basis.len();
        let mut wq: Vec<Vec<f64>> = vec![vec![0.0f64; n]; k];
        for (qi, q) in basis.iter().enumerate() {
            let out = &mut wq[qi];
            for x in 0..n as u32 {
                let mut acc = 0.0f64;
                for &(t, wv) in &wsupport {
                    acc += wv * q[group.mul(x, t) as usize];
                }
                out[x as usize] = acc;
            }
        }
        let mut block = vec![vec![0.0f64; k]; k];
        for r in 0..k {
            for s in 0..k {
                block[r][s] = basis[r].iter().zip(&wq[s]).map(|(a, b)| a * b).sum();
            }
        }
        let mut symmetry = 0.0f64;
        for r in 0..k {
            for s in r + 1..k {
                symmetry = symmetry.max((block[r][s] - block[s][r]).abs());
                let avg = (block[r][s] + block[s][r]) / 2.0;
                block[r][s] = avg;
                block[s][r] = avg;
            }
        }
        if symmetry > 1e-9 {
            return Err(SpectraError::ProjectorDefect(format!(
                "restricted block for row {row} is not symmetric (residual {symmetry:.3e})"
            )));
        }

        let eig = symmetric_eigen(&SymMatrix::from_rows(&block), 1e-13, false)?;
        let mut pair_gap = 0.0f64;
        let eigen = if let Some(conj_row) = pair {
            // realified complex block: eigenvalues arrive in equal pairs
            let mut halved = Vec::with_capacity(k / 2);
            for chunk in eig.values.chunks_exact(2) {
                pair_gap = pair_gap.max((chunk[1] - chunk[0]).abs());
                halved.push((chunk[0] + chunk[1]) / 2.0);
            }
            if pair_gap > 1e-8 {
                return Err(SpectraError::ProjectorDefect(format!(
                    "conjugate-pair block for rows {row}/{conj_row} has unpaired eigenvalues (gap {pair_gap:.3e})"
                )));
            }
            halved
        } else {
            eig.values
        };
        Ok(TaskResult {
            row,
            pair,
            eigen,
            idempotency: idem,
            symmetry,
            pair_gap,
        })
    };

    // Distribute tasks over threads; collect in task order.
    let results: Vec<TaskResult> = if jobs <= 1 || tasks.len() <= 1 {
        tasks
            .iter()
            .enumerate()
            .map(|(ti, _)| run_task(ti))
            .collect::<Result<_, _>>()?
    } else {
        let mut slots: Vec<Option<Result<TaskResult, SpectraError>>> =
            (0..tasks.len()).map(|_| None).collect();
        let counter = std::sync::atomic::AtomicUsize::new(0);
        let slots_mutex = std::sync::Mutex::new(&mut slots);
        std::thread::scope(|scope| {
            for _ in 0..jobs.min(tasks.len()) {
                scope.spawn(|| loop {
                    let ti = counter.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                    if ti >= tasks.len() {
                        break;
                    }
                    let res = run_task(ti);
                    slots_mutex.lock().unwrap()[ti] = Some(res);
                });
            }
        });
        slots
            .into_iter()
            .map(|s| s.expect("every task slot filled"))
            .collect::<Result<_, _>>()?
    };

    // Assemble per-row blocks in row order and aggregate the spectrum.
    let mut per_row: Vec<Option<IrrepBlock>> = (0..ct.row_count()).map(|_| None).collect();
    let mut idempotency_residual = 0.0f64;
    let mut block_symmetry_residual = 0.0f64;
    let mut pair_gap_residual = 0.0f64;
    for r in results {
        idempotency_residual = idempotency_residual.max(r.idempotency);
        block_symmetry_residual = block_symmetry_residual.max(r.symmetry);
        pair_gap_residual = pair_gap_residual.max(r.pair_gap);
        let d = ct.degrees[r.row] as usize;
        per_row[r.row] = Some(IrrepBlock {
            row: r.row,
            degree: ct.degrees[r.row],
            paired_with: r.pair,
            block_dim: d * d,
            eigenvalues: r.eigen.clone(),
        });
        if let Some(p) = r.pair {
            per_row[p] = Some(IrrepBlock {
                row: p,
                degree: ct.degrees[p],
                paired_with: Some(r.row),
                block_dim: d * d,
                eigenvalues: r.eigen,
            });
        }
    }
    let blocks: Vec<IrrepBlock> = per_row
        .into_iter()
        .map(|b| b.expect("every character row produced a block"))
        .collect();

    let mut all: Vec<f64> = blocks.iter().flat_map(|b| b.eigenvalues.clone()).collect();
    if all.len() != n {
        return Err(SpectraError::ProjectorDefect(format!(
            "block dimensions sum to {} instead of {}",
            all.len(),
            n
        )));
    }
    all.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let spectrum = SpectrumMultiset::from_sorted(all, tol);

    Ok(BlockSpectrum {
        blocks,
        spectrum,
        idempotency_residual,
        projector_sum_residual,
        block_symmetry_residual,
        pair_gap_residual,
    })
}
