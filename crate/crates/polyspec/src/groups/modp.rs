//! Small dense linear algebra over a prime field F_p, p < 2³², used by the
//! class-matrix character table computation. Vectors are `Vec<u64>` with
//! entries reduced mod p.

pub fn modpow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub fn modinv(a: u64, p: u64) -> u64 {
    // p prime
    modpow(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime p ≡ 1 (mod m) with p > lower and p ∤ order.
pub fn find_split_prime(m: u64, lower: u64, order: u64) -> u64 {
    let mut p = (lower / m + 1) * m + 1;
    loop {
        if p > lower && is_prime(p) && order % p != 0 {
            return p;
        }
        p += m;
    }
}

/// Smallest generator of the cyclic group F_p^×.
pub fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    'outer: for g in 2..p {
        for &q in &factors {
            if modpow(g, (p - 1) / q, p) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("no primitive root found");
}

/// Reduced row echelon form in place; returns pivot column per row.
pub fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = if rows.is_empty() { 0 } else { rows[0].len() };
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = modinv(rows[rank][col], p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..ncols {
                    let sub = factor * rows[rank][c] % p;
                    rows[r][c] = (rows[r][c] + p - sub) % p;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

/// Basis of the nullspace of a square matrix (row-major), as vectors.
pub fn nullspace(mat: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = mat.len();
    let mut rows: Vec<Vec<u64>> = mat.to_vec();
    let pivots = rref(&mut rows, p);
    let pivot_set: Vec<Option<usize>> = {
        let mut v = vec![None; n];
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = Some(r);
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_set[free].is_some() {
            continue;
        }
        let mut vec = vec![0u64; n];
        vec[free] = 1;
        for (col, &pr) in pivot_set.iter().enumerate() {
            if let Some(r) = pr {
                // pivot var = −(coefficient of free var)
                vec[col] = (p - rows[r][free] % p) % p;
            }
        }
        basis.push(vec);
    }
    basis
}

/// y = M·x for a square row-major matrix.
pub fn matvec(mat: &[Vec<u64>], x: &[u64], p: u64) -> Vec<u64> {
    mat.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(0u64, |acc, (&m, &v)| (acc + m * v) % p)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_search() {
        assert_eq!(find_split_prime(30, 15, 60), 31);
        assert_eq!(find_split_prime(60, 76, 1440), 181);
        assert_eq!(find_split_prime(12, 10, 24), 13);
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(31), 3);
        let p = 181;
        let g = primitive_root(p);
        let mut seen = vec![false; p as usize];
        let mut acc = 1u64;
        for _ in 0..p - 1 {
            acc = acc * g % p;
            seen[acc as usize] = true;
        }
        assert_eq!(seen.iter().filter(|&&b| b).count() as u64, p - 1);
    }

    #[test]
    fn nullspace_of_singular_matrix() {
        let p = 31;
        // rank-1 matrix: rows (1,2), (2,4)
        let m = vec![vec![1, 2], vec![2, 4]];
        let ns = nullspace(&m, p);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert_eq!((v[0] + 2 * v[1]) % p, 0);
    }
}
