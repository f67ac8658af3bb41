//! Character tables of explicit finite groups by the Burnside–Dixon
//! class-matrix method.
//!
//! The class matrices M_i, with (M_i)_{jk} = a_{ijk}, commute and share the
//! eigenvectors u^χ with u_j = |C_j|·χ(g_j)/χ(1). Over F_p with
//! p ≡ 1 (mod exp G) and p > 2√|G| they split completely, and the exact
//! modular eigendata lifts to complex character values by counting root-of-
//! unity multiplicities. Class matrices are nonsymmetric, so exact modular
//! splitting replaces a general complex eigensolver.

use num_complex::Complex64;

use super::conjugacy::ConjugacyData;
use super::modp::{find_split_prime, matvec, modinv, modpow, nullspace, primitive_root, rref};
use super::{FiniteGroup, GroupError};

pub struct CharacterTable {
    /// Degrees χ(1), one per irreducible character.
    pub degrees: Vec<u32>,
    /// values[row][class] = χ(g_class) as a complex double.
    pub values: Vec<Vec<Complex64>>,
    pub class_sizes: Vec<u32>,
    pub class_rep_orders: Vec<u32>,
    /// Index of the class containing the inverses of class j.
    pub inverse_class: Vec<u32>,
    pub group_order: usize,
}

impl CharacterTable {
    pub fn row_count(&self) -> usize {
        self.degrees.len()
    }

    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }

    /// Max |⟨χ_r, χ_s⟩ − δ_rs| over all row pairs.
    pub fn row_orthogonality_residual(&self) -> f64 {
        let n = self.group_order as f64;
        let r = self.row_count();
        let mut worst = 0.0f64;
        for s in 0..r {
            for t in 0..r {
                let mut acc = Complex64::new(0.0, 0.0);
                for j in 0..self.class_count() {
                    acc += self.class_sizes[j] as f64 * self.values[s][j] * self.values[t][j].conj();
                }
                acc /= n;
                let expect = if s == t { 1.0 } else { 0.0 };
                worst = worst.max((acc - Complex64::new(expect, 0.0)).norm());
            }
        }
        worst
    }

    /// Max |Σ_χ χ(g_j)·conj(χ(g_k)) − δ_jk·|G|/|C_j|| over all class pairs,
    /// normalized by |G|/|C_j| so the residual is scale-free.
    pub fn column_orthogonality_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for j in 0..self.class_count() {
            let scale = self.group_order as f64 / self.class_sizes[j] as f64;
            for k in 0..self.class_count() {
                let mut acc = Complex64::new(0.0, 0.0);
                for s in 0..self.row_count() {
                    acc += self.values[s][j] * self.values[s][k].conj();
                }
                let expect = if j == k { scale } else { 0.0 };
                worst = worst.max((acc - Complex64::new(expect, 0.0)).norm() / scale);
            }
        }
        worst
    }

    /// Row index of the trivial character.
    pub fn trivial_row(&self) -> usize {
        (0..self.row_count())
            .find(|&s| {
                self.values[s]
                    .iter()
                    .all(|v| (v - Complex64::new(1.0, 0.0)).norm() < 1e-9)
            })
            .expect("trivial character missing")
    }

    /// Pair each row with the row of its complex conjugate (self for real
    /// characters). Used to assemble real isotypic projectors.
    pub fn conjugate_row(&self, s: usize) -> usize {
        let mut best = usize::MAX;
        for t in 0..self.row_count() {
            let close = self.values[s]
                .iter()
                .zip(&self.values[t])
                .all(|(a, b)| (a.conj() - b).norm() < 1e-6);
            if close {
                best = t;
                break;
            }
        }
        assert!(best != usize::MAX, "conjugate character not found");
        best
    }
}

/// Compute the character table of `g` with Dixon's method.
pub fn character_table(g: &FiniteGroup, cd: &ConjugacyData) -> Result<CharacterTable, GroupError> {
    let r = cd.class_count();
    let order = g.order() as u64;
    let exponent = g.exponent();
    let lower = 2 * (order as f64).sqrt().ceil() as u64;
    let p = find_split_prime(exponent, lower, order);

    // Class matrices (M_i)_{jk} = a_{ijk} mod p.
    let class_matrix = |i: usize| -> Vec<Vec<u64>> {
        (0..r)
            .map(|j| (0..r).map(|k| cd.cmc(i, j, k) as u64 % p).collect())
            .collect()
    };

    // Split F_p^r into common eigenspaces of all class matrices.
    let mut subspaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut e = vec![0u64; r];
            e[i] = 1;
            e
        })
        .collect()];
    for i in 1..r {
        if subspaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mi = class_matrix(i);
        let mut next = Vec::with_capacity(subspaces.len());
        for basis in subspaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            next.extend(split_subspace(&mi, basis, p)?);
        }
        subspaces = next;
    }
    if subspaces.len() != r || subspaces.iter().any(|s| s.len() != 1) {
        return Err(GroupError::CharacterTable(format!(
            "common eigenspace refinement produced {} spaces for {} classes",
            subspaces.len(),
            r
        )));
    }

    // Normalize each eigenvector at the identity class: u_1 = 1, then
    // u_i = ω_χ(K_i) = |C_i|χ(g_i)/χ(1) mod p.
    let mut omegas: Vec<Vec<u64>> = Vec::with_capacity(r);
    for space in &subspaces {
        let u = &space[0];
        if u[0] == 0 {
            return Err(GroupError::CharacterTable(
                "eigenvector vanishes at the identity class".into(),
            ));
        }
        let scale = modinv(u[0], p);
        omegas.push(u.iter().map(|&x| x * scale % p).collect());
    }

    // Degrees from Σ_i ω_i ω_{i*} / n_i = |G| / χ(1)².
    let isqrt = (order as f64).sqrt() as u64 + 1;
    let mut degrees = Vec::with_capacity(r);
    for u in &omegas {
        let mut acc = 0u64;
        for i in 0..r {
            let istar = cd.inverse_class[i] as usize;
            let term = u[i] * u[istar] % p * modinv(cd.sizes[i] as u64 % p, p) % p;
            acc = (acc + term) % p;
        }
        let target = order % p * modinv(acc, p) % p;
        let d = (1..=isqrt)
            .find(|&d| d * d % p == target)
            .ok_or_else(|| GroupError::CharacterTable("no integer degree matches".into()))?;
        degrees.push(d as u32);
    }
    let degree_sq_sum: u64 = degrees.iter().map(|&d| d as u64 * d as u64).sum();
    if degree_sq_sum != order {
        return Err(GroupError::CharacterTable(format!(
            "Σ deg² = {degree_sq_sum} ≠ |G| = {order}"
        )));
    }

    // Character values mod p: χ(g_i) = χ(1)·u_i/n_i.
    let mut modular: Vec<Vec<u64>> = Vec::with_capacity(r);
    for (u, &d) in omegas.iter().zip(&degrees) {
        modular.push(
            (0..r)
                .map(|i| d as u64 % p * u[i] % p * modinv(cd.sizes[i] as u64 % p, p) % p)
                .collect(),
        );
    }

    // Power map on classes: class of g_j^t for t in 0..e.
    let e = exponent as usize;
    let mut power_class = vec![vec![0usize; e]; r];
    for (j, &rep) in cd.reps.iter().enumerate() {
        let mut acc = g.identity();
        for t in 0..e {
            power_class[j][t] = cd.class_of[acc as usize] as usize;
            acc = g.mul(acc, rep);
        }
    }

    // Lift via root-of-unity multiplicities:
    // μ_s = e⁻¹ Σ_t χ(g^t)·z^{−st}, an exact small integer, and
    // χ(g) = Σ_s μ_s·ζ^s with ζ = exp(2πi/e).
    let z = modpow(primitive_root(p), (p - 1) / exponent, p);
    let zinv = modinv(z, p);
    let einv = modinv(exponent % p, p);
    let mut zpow = vec![0u64; e];
    zpow[0] = 1;
    for s in 1..e {
        zpow[s] = zpow[s - 1] * zinv % p;
    }
    let mut values = vec![vec![Complex64::new(0.0, 0.0); r]; r];
    for (row, chi) in modular.iter().enumerate() {
        for j in 0..r {
            let mut val = Complex64::new(0.0, 0.0);
            let mut musum = 0u64;
            for s in 0..e {
                let mut acc = 0u64;
                for t in 0..e {
                    // z^{−st} = (z^{−s})^t
                    acc = (acc + chi[power_class[j][t]] * modpow(zpow[s], t as u64, p)) % p;
                }
                let mu = acc * einv % p;
                if mu != 0 {
                    musum += mu;
                    let angle = 2.0 * std::f64::consts::PI * s as f64 / e as f64;
                    val += mu as f64 * Complex64::new(angle.cos(), angle.sin());
                }
            }
            if musum != degrees[row] as u64 {
                return Err(GroupError::CharacterTable(format!(
                    "eigenvalue multiplicities sum to {musum}, expected degree {}",
                    degrees[row]
                )));
            }
            values[row][j] = val;
        }
    }

    // Deterministic row order: by degree, then by value list.
    let mut perm: Vec<usize> = (0..r).collect();
    perm.sort_by(|&a, &b| {
        degrees[a].cmp(&degrees[b]).then_with(|| {
            for j in 0..r {
                let va = (values[a][j].re, values[a][j].im);
                let vb = (values[b][j].re, values[b][j].im);
                match va.partial_cmp(&vb).unwrap() {
                    std::cmp::Ordering::Equal => continue,
                    o => return o,
                }
            }
            std::cmp::Ordering::Equal
        })
    });
    let degrees: Vec<u32> = perm.iter().map(|&s| degrees[s]).collect();
    let values: Vec<Vec<Complex64>> = perm.iter().map(|&s| values[s].clone()).collect();

    Ok(CharacterTable {
        degrees,
        values,
        class_sizes: cd.sizes.clone(),
        class_rep_orders: cd.rep_orders.clone(),
        inverse_class: cd.inverse_class.clone(),
        group_order: g.order(),
    })
}

/// Split an invariant subspace into eigenspaces of one class matrix.
fn split_subspace(
    m: &[Vec<u64>],
    basis: Vec<Vec<u64>>,
    p: u64,
) -> Result<Vec<Vec<Vec<u64>>>, GroupError> {
    let d = basis.len();
    let r = basis[0].len();

    // Row-reduce a copy of the basis so coordinates can be read off pivots.
    let mut echelon = basis.clone();
    let pivots = rref(&mut echelon, p);
    if echelon.len() != d {
        return Err(GroupError::CharacterTable("degenerate subspace basis".into()));
    }

    // Restriction T of M to the subspace: M·b_t = Σ_s T[s][t]·e_s.
    let mut t_mat = vec![vec![0u64; d]; d];
    for (t, b) in echelon.iter().enumerate() {
        let mut w = matvec(m, b, p);
        for (s, &pc) in pivots.iter().enumerate() {
            let coef = w[pc] % p;
            t_mat[s][t] = coef;
            if coef != 0 {
                for c in 0..r {
                    let sub = coef * echelon[s][c] % p;
                    w[c] = (w[c] + p - sub) % p;
                }
            }
        }
        if w.iter().any(|&x| x != 0) {
            return Err(GroupError::CharacterTable(
                "class matrix does not preserve subspace".into(),
            ));
        }
    }

    // Eigenspaces of T over F_p by scanning all eigenvalues.
    let mut pieces = Vec::new();
    let mut found = 0usize;
    for lambda in 0..p {
        let shifted: Vec<Vec<u64>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        if i == j {
                            (t_mat[i][j] + p - lambda) % p
                        } else {
                            t_mat[i][j]
                        }
                    })
                    .collect()
            })
            .collect();
        let ns = nullspace(&shifted, p);
        if ns.is_empty() {
            continue;
        }
        found += ns.len();
        // Map eigenvector coordinates back to ambient space.
        let mut amb: Vec<Vec<u64>> = ns
            .iter()
            .map(|c| {
                let mut v = vec![0u64; r];
                for (s, &cs) in c.iter().enumerate() {
                    for j in 0..r {
                        v[j] = (v[j] + cs * echelon[s][j]) % p;
                    }
                }
                v
            })
            .collect();
        rref(&mut amb, p);
        pieces.push(amb);
        if found == d {
            break;
        }
    }
    if found != d {
        return Err(GroupError::CharacterTable(format!(
            "class matrix restriction not diagonalizable: {found} of {d} dimensions"
        )));
    }
    Ok(pieces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{alternating5, binary_tetrahedral, conjugacy_classes, cyclic, FiniteGroup};

    #[test]
    fn a5_degrees() {
        let a5 = alternating5().unwrap();
        let cd = conjugacy_classes(&a5.group);
        let ct = character_table(&a5.group, &cd).unwrap();
        assert_eq!(ct.degrees, vec![1, 3, 3, 4, 5]);
        assert!(ct.row_orthogonality_residual() < 1e-9);
        assert!(ct.column_orthogonality_residual() < 1e-9);
        // trivial row is all ones
        let t = ct.trivial_row();
        assert_eq!(ct.degrees[t], 1);
        // A5 characters are all real
        for row in &ct.values {
            for v in row {
                assert!(v.im.abs() < 1e-9);
            }
        }
    }

    #[test]
    fn q24_degrees_and_complex_pairing() {
        let q24 = binary_tetrahedral().unwrap();
        let cd = conjugacy_classes(&q24);
        let ct = character_table(&q24, &cd).unwrap();
        assert_eq!(ct.degrees, vec![1, 1, 1, 2, 2, 2, 3]);
        assert!(ct.row_orthogonality_residual() < 1e-9);
        assert!(ct.column_orthogonality_residual() < 1e-9);
        // conjugation pairs rows and is an involution
        for s in 0..ct.row_count() {
            let t = ct.conjugate_row(s);
            assert_eq!(ct.conjugate_row(t), s);
        }
        // the binary tetrahedral group has non-real characters
        let complex_rows = (0..ct.row_count())
            .filter(|&s| ct.conjugate_row(s) != s)
            .count();
        assert_eq!(complex_rows, 4);
    }

    #[test]
    fn small_abelian_table() {
        let z6 = FiniteGroup::direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap());
        let cd = conjugacy_classes(&z6);
        let ct = character_table(&z6, &cd).unwrap();
        assert_eq!(ct.degrees, vec![1; 6]);
        assert!(ct.row_orthogonality_residual() < 1e-9);
    }
}
