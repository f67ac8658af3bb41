use crate::exactnum::{QRoot5, QuaternionQ5};

use super::{ElemKey, FiniteGroup, GroupError};

/// The two defining generators of Q₁₂₀: (1+i+j+k)/2 of order 6, and the
/// nearest-neighbour vertex (τ + i − τ̄·j)/2 of order 10.
pub fn icosian_generators() -> [QuaternionQ5; 2] {
    let half = QRoot5::from_ratio(1, 2);
    [
        QuaternionQ5::from_ints(1, 1, 1, 1, 2),
        QuaternionQ5::new(
            QRoot5::tau() * half.clone(),
            half.clone(),
            (-&QRoot5::taubar()) * half,
            QRoot5::zero(),
        ),
    ]
}

/// The binary icosahedral group Q₁₂₀: the 120 icosian unit quaternions,
/// generated as the multiplicative closure of (1+i+j+k)/2 and
/// (τ + i − τ̄·j)/2. Its elements are the vertices of the 600-cell.
pub fn binary_icosahedral() -> Result<FiniteGroup, GroupError> {
    let [a, b] = icosian_generators();
    let g = FiniteGroup::from_generators("Q120", vec![ElemKey::quat(a), ElemKey::quat(b)], 1000)?;
    if g.order() != 120 {
        return Err(GroupError::UnexpectedOrder {
            expected: 120,
            actual: g.order(),
        });
    }
    Ok(g)
}

/// The binary tetrahedral group Q₂₄: the 24 unit quaternions
/// {±1, ±i, ±j, ±k, (±1±i±j±k)/2}, a subgroup of Q₁₂₀.
pub fn binary_tetrahedral() -> Result<FiniteGroup, GroupError> {
    let g1 = ElemKey::quat(QuaternionQ5::i());
    let g2 = ElemKey::quat(QuaternionQ5::from_ints(1, 1, 1, 1, 2));
    let g = FiniteGroup::from_generators("Q24", vec![g1, g2], 1000)?;
    if g.order() != 24 {
        return Err(GroupError::UnexpectedOrder {
            expected: 24,
            actual: g.order(),
        });
    }
    Ok(g)
}

/// The alternating group A₅ on 5 points with the distinguished elements
/// a = (12345) and b = (253) used by the ⟨3,10,10⟩ Cayley structure.
pub struct Alternating5 {
    pub group: FiniteGroup,
    pub a: u32,
    pub b: u32,
}

/// Permutations act on 0-based points; cycles below are the 1-based
/// (12345) and (253).
pub fn alternating5() -> Result<Alternating5, GroupError> {
    let a_key = ElemKey::Perm(cycle_perm(5, &[&[0, 1, 2, 3, 4]]));
    let b_key = ElemKey::Perm(cycle_perm(5, &[&[1, 4, 2]]));
    let group = FiniteGroup::from_generators("A5", vec![a_key.clone(), b_key.clone()], 1000)?;
    if group.order() != 60 {
        return Err(GroupError::UnexpectedOrder {
            expected: 60,
            actual: group.order(),
        });
    }
    let a = group.index_of(&a_key).unwrap();
    let b = group.index_of(&b_key).unwrap();
    Ok(Alternating5 { group, a, b })
}

/// Cyclic group of order n as rotation permutations of n points.
pub fn cyclic(n: u8) -> Result<FiniteGroup, GroupError> {
    let rot: Vec<u8> = (0..n).map(|x| (x + 1) % n).collect();
    let g = FiniteGroup::from_generators(format!("Z{n}"), vec![ElemKey::Perm(rot)], 512)?;
    if g.order() != n as usize {
        return Err(GroupError::UnexpectedOrder {
            expected: n as usize,
            actual: g.order(),
        });
    }
    Ok(g)
}

/// Build the image vector of a product of cycles on `n` points
/// (cycle entries 0-based).
fn cycle_perm(n: u8, cycles: &[&[u8]]) -> Vec<u8> {
    let mut p: Vec<u8> = (0..n).collect();
    for cyc in cycles {
        for w in 0..cyc.len() {
            p[cyc[w] as usize] = cyc[(w + 1) % cyc.len()];
        }
    }
    p
}

/// The orientation-preserving isometry x ↦ l·x·r⁻¹ of the unit quaternions.
/// With (l, r) ranging over pairs of unit quaternions this gives every
/// rotation of R⁴, and pairs from Q₁₂₀×Q₁₂₀ permute the 600-cell vertices.
pub fn isometry_action(l: &QuaternionQ5, r: &QuaternionQ5, x: &QuaternionQ5) -> QuaternionQ5 {
    let rinv = r.inv().expect("isometry components must be unit quaternions");
    &(l * x) * &rinv
}

/// The orientation-reversing isometry x ↦ x̄ (quaternion conjugation),
/// a hyperplane reflection preserving the 600-cell vertex set.
pub fn reflection(x: &QuaternionQ5) -> QuaternionQ5 {
    x.conj()
}

/// Permutation induced by x ↦ l·x·r⁻¹ on an indexed vertex list.
/// Returns None if some image is not a listed vertex.
pub fn isometry_permutation(
    l: &QuaternionQ5,
    r: &QuaternionQ5,
    vertices: &[QuaternionQ5],
    lookup: impl Fn(&QuaternionQ5) -> Option<u32>,
) -> Option<Vec<u8>> {
    let rinv = r.inv().ok()?;
    let mut perm = Vec::with_capacity(vertices.len());
    for v in vertices {
        let img = &(l * v) * &rinv;
        perm.push(lookup(&img)? as u8);
    }
    Some(perm)
}

/// Permutation induced by quaternion conjugation on an indexed vertex list.
pub fn reflection_permutation(
    vertices: &[QuaternionQ5],
    lookup: impl Fn(&QuaternionQ5) -> Option<u32>,
) -> Option<Vec<u8>> {
    vertices
        .iter()
        .map(|v| lookup(&v.conj()).map(|i| i as u8))
        .collect()
}

/// The isometry groups of the 600-cell as permutation groups on the 120
/// vertices (in Q₁₂₀ element order): G₇₂₀₀ generated by the one-sided
/// actions x ↦ g·x and x ↦ x·g⁻¹ of the Q₁₂₀ generators, and G₁₄₄₀₀ by
/// adding the reflection x ↦ x̄.
pub struct IsometryGroups {
    pub g7200: FiniteGroup,
    pub g14400: FiniteGroup,
}

pub fn isometry_permutation_groups(q120: &FiniteGroup) -> Result<IsometryGroups, GroupError> {
    let vertices: Vec<QuaternionQ5> = q120
        .keys()
        .iter()
        .map(|k| match k {
            ElemKey::Quat(q) => q.clone(),
            _ => unreachable!(),
        })
        .collect();
    let lookup = |q: &QuaternionQ5| q120.index_of(&ElemKey::Quat(q.clone()));
    let one = QuaternionQ5::one();

    // one-sided actions of the two Q120 generators
    let gen_quats = icosian_generators();
    let mut gens = Vec::new();
    for g in &gen_quats {
        let left = isometry_permutation(g, &one, &vertices, lookup)
            .ok_or_else(|| GroupError::NotAnElement("left action image".into()))?;
        let right = isometry_permutation(&one, g, &vertices, lookup)
            .ok_or_else(|| GroupError::NotAnElement("right action image".into()))?;
        gens.push(ElemKey::Perm(left));
        gens.push(ElemKey::Perm(right));
    }
    let g7200 = FiniteGroup::from_generators("G7200", gens.clone(), 20000)?;
    if g7200.order() != 7200 {
        return Err(GroupError::UnexpectedOrder {
            expected: 7200,
            actual: g7200.order(),
        });
    }

    let refl = reflection_permutation(&vertices, lookup)
        .ok_or_else(|| GroupError::NotAnElement("reflection image".into()))?;
    gens.push(ElemKey::Perm(refl));
    let g14400 = FiniteGroup::from_generators("G14400", gens, 40000)?;
    if g14400.order() != 14400 {
        return Err(GroupError::UnexpectedOrder {
            expected: 14400,
            actual: g14400.order(),
        });
    }
    Ok(IsometryGroups { g7200, g14400 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn q120_has_order_120_and_expected_members() {
        let q120 = binary_icosahedral().unwrap();
        assert_eq!(q120.order(), 120);
        // ±1, ±i, ±j, ±k
        for unit in [
            QuaternionQ5::one(),
            QuaternionQ5::i(),
            QuaternionQ5::j(),
            QuaternionQ5::k(),
        ] {
            assert!(q120.contains(&ElemKey::quat(unit.clone())));
            assert!(q120.contains(&ElemKey::quat(-&unit)));
        }
        // all 16 of (±1±i±j±k)/2
        for sw in [1i64, -1] {
            for sx in [1i64, -1] {
                for sy in [1i64, -1] {
                    for sz in [1i64, -1] {
                        let q = QuaternionQ5::from_ints(sw, sx, sy, sz, 2);
                        assert!(q120.contains(&ElemKey::quat(q)));
                    }
                }
            }
        }
        // the named nearest-neighbour vertex (τ + i − τ̄j)/2
        let half = QRoot5::from_ratio(1, 2);
        let v = QuaternionQ5::new(
            QRoot5::tau() * half.clone(),
            half.clone(),
            (-&QRoot5::taubar()) * half,
            QRoot5::zero(),
        );
        assert!(q120.contains(&ElemKey::quat(v)));
    }

    #[test]
    fn q120_element_orders() {
        let q120 = binary_icosahedral().unwrap();
        let orders: BTreeSet<u32> = (0..120).map(|i| q120.element_order(i)).collect();
        assert_eq!(orders, BTreeSet::from([1, 2, 3, 4, 5, 6, 10]));
    }

    #[test]
    fn q24_is_a_subgroup_of_q120() {
        let q120 = binary_icosahedral().unwrap();
        let q24 = binary_tetrahedral().unwrap();
        assert_eq!(q24.order(), 24);
        assert!(q24.contains(&ElemKey::quat(QuaternionQ5::k())));
        for k in q24.keys() {
            assert!(q120.contains(k));
        }
    }

    #[test]
    fn a5_distinguished_elements() {
        let a5 = alternating5().unwrap();
        assert_eq!(a5.group.order(), 60);
        assert_eq!(a5.group.element_order(a5.a), 5);
        assert_eq!(a5.group.element_order(a5.b), 3);
        let ab = a5.group.mul(a5.a, a5.b);
        assert_eq!(a5.group.element_order(ab), 2);
        assert_eq!(a5.group.inv(ab), ab);
    }

    #[test]
    fn axioms_hold() {
        let q24 = binary_tetrahedral().unwrap();
        assert!(q24.check_axioms());
        let a5 = alternating5().unwrap();
        assert!(a5.group.check_axioms());
    }

    #[test]
    fn quotient_orders() {
        let q120 = binary_icosahedral().unwrap();
        let q24 = binary_tetrahedral().unwrap();
        let minus_one = ElemKey::pair(
            ElemKey::quat(-&QuaternionQ5::one()),
            ElemKey::quat(-&QuaternionQ5::one()),
        );

        let prod_small = FiniteGroup::direct_product(&q120, &q24);
        assert_eq!(prod_small.order(), 2880);
        let g1440 = FiniteGroup::central_quotient(&prod_small, &minus_one).unwrap();
        assert_eq!(g1440.order(), 1440);

        let prod_big = FiniteGroup::direct_product(&q120, &q120);
        assert_eq!(prod_big.order(), 14400);
        let g7200 = FiniteGroup::central_quotient(&prod_big, &minus_one).unwrap();
        assert_eq!(g7200.order(), 7200);
    }

    #[test]
    fn quotient_rejects_bad_centre() {
        let a5 = alternating5().unwrap();
        let z2 = cyclic(2).unwrap();
        let g = FiniteGroup::direct_product(&a5.group, &z2);
        // (b, 0) has order 3: not an involution
        let bad = ElemKey::pair(a5.group.key(a5.b).clone(), z2.key(z2.identity()).clone());
        assert!(matches!(
            FiniteGroup::central_quotient(&g, &bad),
            Err(GroupError::NotInvolution { order: 3 })
        ));
        // (ab, 1) is an involution but not central
        let ab = a5.group.mul(a5.a, a5.b);
        let noncentral = ElemKey::pair(a5.group.key(ab).clone(), z2.key(1 - z2.identity()).clone());
        assert!(matches!(
            FiniteGroup::central_quotient(&g, &noncentral),
            Err(GroupError::NotCentral { .. })
        ));
    }

    #[test]
    fn direct_product_order() {
        let a5 = alternating5().unwrap();
        let z2 = cyclic(2).unwrap();
        let g = FiniteGroup::direct_product(&a5.group, &z2);
        assert_eq!(g.order(), 120);
        assert!(g.check_axioms());
    }

    #[test]
    fn quotient_well_defined_on_representatives() {
        // Exhaustive for G_1440: the product of cosets does not depend on
        // which representative of each coset is multiplied.
        let q120 = binary_icosahedral().unwrap();
        let q24 = binary_tetrahedral().unwrap();
        let prod = FiniteGroup::direct_product(&q120, &q24);
        let minus_one = ElemKey::pair(
            ElemKey::quat(-&QuaternionQ5::one()),
            ElemKey::quat(-&QuaternionQ5::one()),
        );
        let zi = prod.index_of(&minus_one).unwrap();
        let q = FiniteGroup::central_quotient(&prod, &minus_one).unwrap();

        // For each pair of quotient elements, multiply all four representative
        // combinations in the parent and compare classes.
        let reps: Vec<u32> = q
            .keys()
            .iter()
            .map(|k| prod.index_of(k).unwrap())
            .collect();
        let mut compress = vec![u32::MAX; prod.order()];
        for x in 0..prod.order() as u32 {
            compress[x as usize] = q.resolve(prod.key(x)).unwrap();
        }
        for &x in &reps {
            let zx = prod.mul(zi, x);
            for &y in &reps {
                let zy = prod.mul(zi, y);
                let c = compress[prod.mul(x, y) as usize];
                assert_eq!(compress[prod.mul(zx, y) as usize], c);
                assert_eq!(compress[prod.mul(x, zy) as usize], c);
                assert_eq!(compress[prod.mul(zx, zy) as usize], c);
            }
        }
    }

    #[test]
    fn isometry_fixes_one_diagonally() {
        let q120 = binary_icosahedral().unwrap();
        for i in (0..120).step_by(17) {
            let ElemKey::Quat(q) = q120.key(i) else {
                unreachable!()
            };
            assert_eq!(isometry_action(q, q, &QuaternionQ5::one()), QuaternionQ5::one());
        }
    }
}
