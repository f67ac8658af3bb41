//! Computational evidence that P₇₂₀ and ⟨3,5,3,5⟩ admit no Cayley
//! structure.
//!
//! For ⟨3,5,3,5⟩ the obstruction is finished here outright: its isometry
//! group A₅⊕Z/2 has no subgroup of order 30, verified by an exhaustive
//! sweep over generating pairs (every group of order 30 is metacyclic,
//! hence 2-generated, so pairs suffice).
//!
//! For P₇₂₀ a full enumeration of order-720 subgroups of G₁₄₄₀₀ is far out
//! of desk scale; instead this module verifies every checkable ingredient
//! of the 5-Sylow argument: the Sylow subgroups of Q₁₂₀×Q₁₂₀ have order 25
//! and product form C₅×C₅, the diagonal (q,q) fixes the vertex 1, and every
//! order-5 isometry with a fixed vertex splits the 12 neighbours into
//! orbits of sizes 1 and 5 — leaving at least two fixed neighbours, hence a
//! fixed edge. The one step that remains paper-level (not machine-checked)
//! is the transfer of Sylow conjugacy into an abstract order-720 subgroup.

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::exactnum::QuaternionQ5;
use crate::groups::{
    alternating5, cyclic, subgroup_closure, subgroups_of_order, ElemKey, FiniteGroup, GroupError,
};
use crate::polytopes::Graph;

#[derive(Debug, Error)]
pub enum ObstructionError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("no order-5 quaternion found in Q120")]
    NoOrderFive,
    #[error("{0}")]
    InvariantViolation(String),
}

/// Result of the exhaustive 2-generated subgroup sweep in A₅⊕Z/2.
#[derive(Debug)]
pub struct SmallCayleyObstruction {
    /// Subgroups of order 30 (must be empty).
    pub order30_count: usize,
    /// Subgroups of order 60 (sanity: contains A₅×{0}).
    pub order60_count: usize,
    /// Subgroups of order 120 (the whole group, iff it is 2-generated).
    pub order120_count: usize,
    pub no_cayley: bool,
}

/// Exhaustive search for an order-30 subgroup of A₅⊕Z/2 (the isometry
/// group of ⟨3,5,3,5⟩, which has 30 vertices). An empty result obstructs
/// any Cayley structure on the icosidodecahedron.
pub fn no_cayley_small() -> Result<SmallCayleyObstruction, ObstructionError> {
    let a5 = alternating5()?;
    let z2 = cyclic(2)?;
    let g = FiniteGroup::direct_product(&a5.group, &z2);
    let order30 = subgroups_of_order(&g, 30, 2);
    let order60 = subgroups_of_order(&g, 60, 2);
    let order120 = subgroups_of_order(&g, 120, 2);
    if order60.is_empty() {
        return Err(ObstructionError::InvariantViolation(
            "sweep missed A5×{0}, which is 2-generated of order 60".into(),
        ));
    }
    Ok(SmallCayleyObstruction {
        order30_count: order30.len(),
        order60_count: order60.len(),
        order120_count: order120.len(),
        no_cayley: order30.is_empty(),
    })
}

/// Facts established about the 5-Sylow structure of Q₁₂₀×Q₁₂₀.
#[derive(Debug)]
pub struct Sylow5Report {
    /// 5-part of |Q₁₂₀×Q₁₂₀| = 14400.
    pub five_part: u64,
    /// Order of the located product subgroup {1..q⁴}×{1..q⁴}.
    pub subgroup_order: usize,
    pub abelian: bool,
    pub exponent_five: bool,
    /// Number of distinct conjugates (all of product form).
    pub conjugate_count: usize,
    pub all_conjugates_product_form: bool,
    /// Count ≡ 1 (mod 5), as Sylow's theorem requires.
    pub count_is_one_mod_five: bool,
    /// (q,q) fixes the vertex 1 under x ↦ l·x·r⁻¹.
    pub diagonal_fixes_vertex_one: bool,
}

/// Locate a 5-Sylow subgroup of Q₁₂₀×Q₁₂₀ of the product form
/// {1,q,q²,q³,q⁴}×{1,q,q²,q³,q⁴} and verify its structure, then enumerate
/// all its conjugates. Conjugation by (x, y) acts componentwise, so the
/// conjugate set is exactly {xQx⁻¹ × yQy⁻¹}; enumerating the component
/// conjugates covers conjugation by all 14400 pairs.
pub fn sylow5_structure(q120: &FiniteGroup) -> Result<Sylow5Report, ObstructionError> {
    let q_idx = (0..q120.order() as u32)
        .find(|&i| q120.element_order(i) == 5)
        .ok_or(ObstructionError::NoOrderFive)?;

    // the cyclic component subgroup Q = {1, q, q², q³, q⁴} as index set
    let q_cyc = subgroup_closure(q120, &[q_idx]);
    if q_cyc.len() != 5 {
        return Err(ObstructionError::InvariantViolation(format!(
            "closure of an order-5 element has {} elements",
            q_cyc.len()
        )));
    }

    // P = Q×Q inside the direct product, via pair keys
    let prod = FiniteGroup::direct_product(q120, q120);
    let gens = [
        ElemKey::pair(q120.key(q_idx).clone(), ElemKey::quat(QuaternionQ5::one())),
        ElemKey::pair(ElemKey::quat(QuaternionQ5::one()), q120.key(q_idx).clone()),
    ];
    let gen_idx: Vec<u32> = gens
        .iter()
        .map(|k| prod.index_of(k).expect("generator in product"))
        .collect();
    let sylow = subgroup_closure(&prod, &gen_idx);

    let five_part = {
        let mut n = prod.order() as u64;
        let mut p5 = 1u64;
        while n % 5 == 0 {
            p5 *= 5;
            n /= 5;
        }
        p5
    };
    let abelian = sylow.iter().all(|&x| {
        sylow
            .iter()
            .all(|&y| prod.mul(x, y) == prod.mul(y, x))
    });
    let exponent_five = sylow
        .iter()
        .all(|&x| x == prod.identity() || prod.element_order(x) == 5);

    // component conjugates xQx⁻¹ over all x ∈ Q120, deduplicated
    let mut component_conjugates: BTreeSet<Vec<u32>> = BTreeSet::new();
    for x in 0..q120.order() as u32 {
        let conj: BTreeSet<u32> = q_cyc.iter().map(|&a| q120.conjugate(x, a)).collect();
        component_conjugates.insert(conj.into_iter().collect());
    }
    // each component conjugate must be a closed cyclic order-5 subgroup
    let mut all_product_form = true;
    for comp in &component_conjugates {
        let closed = comp.iter().all(|&a| {
            comp.iter()
                .all(|&b| comp.binary_search(&q120.mul(a, b)).is_ok())
        });
        let orders_ok = comp
            .iter()
            .all(|&a| a == q120.identity() || q120.element_order(a) == 5);
        if comp.len() != 5 || !closed || !orders_ok {
            all_product_form = false;
        }
    }
    let conjugate_count = component_conjugates.len() * component_conjugates.len();

    // (q,q) fixes 1: q·1·q⁻¹ = 1
    let ElemKey::Quat(qq) = q120.key(q_idx) else {
        unreachable!()
    };
    let diagonal_fixes_vertex_one =
        crate::groups::isometry_action(qq, qq, &QuaternionQ5::one()) == QuaternionQ5::one();

    Ok(Sylow5Report {
        five_part,
        subgroup_order: sylow.len(),
        abelian,
        exponent_five,
        conjugate_count,
        all_conjugates_product_form: all_product_form,
        count_is_one_mod_five: conjugate_count % 5 == 1,
        diagonal_fixes_vertex_one,
    })
}

/// Fixed-point data for one conjugacy class of order-5 isometries of the
/// 600-cell.
#[derive(Debug, Clone)]
pub struct FixedSetReport {
    pub class_index: usize,
    pub class_size: usize,
    pub element_order: u32,
    pub fixed_vertices: usize,
    /// Edges fixed setwise ({x,y} mapped to itself).
    pub fixed_edges_setwise: usize,
    /// Edges fixed pointwise (both endpoints fixed). For order-5 elements
    /// these must agree with the setwise count: a swapped edge would give
    /// the element even order.
    pub fixed_edges_pointwise: usize,
    /// Distinct neighbour-orbit profiles over all fixed vertices of all
    /// class members, each profile the sorted orbit sizes on the 12
    /// neighbours.
    pub neighbor_profiles: Vec<Vec<usize>>,
}

impl FixedSetReport {
    pub fn profile_sizes_ok(&self) -> bool {
        self.neighbor_profiles
            .iter()
            .all(|p| p.iter().all(|&s| s == 1 || s == 5) && p.iter().sum::<usize>() == 12)
    }

    pub fn has_fixed_vertex(&self) -> bool {
        self.fixed_vertices > 0
    }

    /// Every fixed vertex forces ≥ 2 fixed neighbours (12 ≡ 2 mod 5) and
    /// hence a fixed edge.
    pub fn fixed_edge_claim_ok(&self) -> bool {
        if !self.has_fixed_vertex() {
            return true;
        }
        self.neighbor_profiles
            .iter()
            .all(|p| p.iter().filter(|&&s| s == 1).count() >= 2)
            && self.fixed_edges_pointwise >= 1
            && self.fixed_edges_setwise == self.fixed_edges_pointwise
    }
}

/// Classify every order-5 element of the permutation image of G₇₂₀₀ by
/// conjugacy class and record fixed vertices, fixed edges, and the orbit
/// profile of each fixed vertex's 12 neighbours.
pub fn order5_fixed_edge_report(
    g7200: &FiniteGroup,
    cell600: &Graph,
) -> Result<Vec<FixedSetReport>, ObstructionError> {
    let n = g7200.order() as u32;
    // generators for conjugation orbits: any generating set works; recover
    // one from the stored keys by taking a few non-identity elements and
    // checking closure
    let gens: Vec<u32> = {
        let mut cand = Vec::new();
        for i in 0..n {
            if i != g7200.identity() {
                cand.push(i);
                if subgroup_closure(g7200, &cand).len() == n as usize {
                    break;
                }
            }
        }
        cand
    };

    let order5: Vec<u32> = (0..n).filter(|&i| g7200.element_order(i) == 5).collect();
    let mut class_of = vec![u32::MAX; n as usize];
    let mut classes: Vec<Vec<u32>> = Vec::new();
    for &seed in &order5 {
        if class_of[seed as usize] != u32::MAX {
            continue;
        }
        let cid = classes.len() as u32;
        let mut members = vec![seed];
        class_of[seed as usize] = cid;
        let mut frontier = 0;
        while frontier < members.len() {
            let x = members[frontier];
            for &t in &gens {
                let y = g7200.conjugate(t, x);
                if class_of[y as usize] == u32::MAX {
                    class_of[y as usize] = cid;
                    members.push(y);
                }
            }
            frontier += 1;
        }
        classes.push(members);
    }

    let mut reports = Vec::new();
    for (cid, members) in classes.iter().enumerate() {
        let mut fixed_vertices: Option<usize> = None;
        let mut setwise: Option<usize> = None;
        let mut pointwise: Option<usize> = None;
        let mut profiles: HashSet<Vec<usize>> = HashSet::new();
        for &m in members {
            let ElemKey::Perm(perm) = g7200.key(m) else {
                unreachable!("isometry groups have permutation keys")
            };
            let fixed: Vec<u32> = (0..cell600.vertex_count() as u32)
                .filter(|&v| perm[v as usize] as u32 == v)
                .collect();
            let mut sw = 0usize;
            let mut pw = 0usize;
            for &(x, y) in cell600.edges() {
                let (ix, iy) = (perm[x as usize] as u32, perm[y as usize] as u32);
                if (ix, iy) == (x, y) {
                    sw += 1;
                    pw += 1;
                } else if (iy, ix) == (x, y) {
                    sw += 1;
                }
            }
            for &v in &fixed {
                let mut profile = Vec::new();
                let mut seen: HashSet<u32> = HashSet::new();
                for &w in cell600.neighbors(v) {
                    if seen.contains(&w) {
                        continue;
                    }
                    let mut orbit = vec![w];
                    let mut cur = perm[w as usize] as u32;
                    while cur != w {
                        orbit.push(cur);
                        cur = perm[cur as usize] as u32;
                    }
                    for &o in &orbit {
                        seen.insert(o);
                    }
                    profile.push(orbit.len());
                }
                profile.sort_unstable();
                if profile.iter().sum::<usize>() != 12 {
                    return Err(ObstructionError::InvariantViolation(format!(
                        "neighbour orbits of a fixed vertex sum to {} ≠ 12",
                        profile.iter().sum::<usize>()
                    )));
                }
                profiles.insert(profile);
            }
            // fixed counts are class invariants; verify across members
            for (slot, val) in [
                (&mut fixed_vertices, fixed.len()),
                (&mut setwise, sw),
                (&mut pointwise, pw),
            ] {
                match slot {
                    None => *slot = Some(val),
                    Some(prev) => {
                        if *prev != val {
                            return Err(ObstructionError::InvariantViolation(format!(
                                "class {cid} members disagree on a fixed count"
                            )));
                        }
                    }
                }
            }
        }
        let mut neighbor_profiles: Vec<Vec<usize>> = profiles.into_iter().collect();
        neighbor_profiles.sort();
        reports.push(FixedSetReport {
            class_index: cid,
            class_size: members.len(),
            element_order: 5,
            fixed_vertices: fixed_vertices.unwrap_or(0),
            fixed_edges_setwise: setwise.unwrap_or(0),
            fixed_edges_pointwise: pointwise.unwrap_or(0),
            neighbor_profiles,
        });
    }
    Ok(reports)
}
