//! Assembled pipelines for the two Cayley-structure cases: the A₅ warm-up
//! (dodecahedron → ⟨3,5,3,5⟩ and ⟨3,10,10⟩) and the main case
//! (600-cell → P₇₂₀ and P₁₄₄₀ over G₁₄₄₀). Everything downstream — the
//! verification suites, the spectra commands, the acceptance tests — works
//! from these structs so the objects are built one way only.

use std::collections::HashMap;

use thiserror::Error;

use crate::exactnum::QuaternionQ5;
use crate::groups::{
    alternating5, binary_icosahedral, binary_tetrahedral, Alternating5, ElemKey, FiniteGroup,
    GroupError,
};
use crate::polytopes::{
    action_permutations, cayley_dart_isomorphism, cayley_graph, dart_graph, dart_index,
    dodecahedron_from_a5, g1440_generators, rectified, AdjacencyMode, CayleyStructure,
    G1440Generators, Graph, PolytopeError,
};
use crate::spectra::{lift_average, LiftAverage, SpectraError};

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

/// The A₅ case: ⟨3,10,10⟩ = Cay(A₅, {b, b⁻¹, ab}) realized on the darts of
/// the dodecahedron, with ⟨3,5,3,5⟩ on the edge midpoints.
pub struct A5Scenario {
    pub a5: Alternating5,
    pub ab: u32,
    /// {b, b⁻¹}: the non-special (triangle) generators.
    pub nonspecial: Vec<u32>,
    /// {b, b⁻¹, ab}.
    pub connection: Vec<u32>,
    pub cayley: CayleyStructure,
    pub dodecahedron: Graph,
    /// A₅ element → coset vertex of the dodecahedron.
    pub coset_of: Vec<u32>,
    /// ⟨3,5,3,5⟩, the icosidodecahedron graph.
    pub icosidodecahedron: Graph,
    /// ⟨3,10,10⟩ as the dart graph of the dodecahedron.
    pub trunc_dodecahedron: Graph,
    /// Group element → dart vertex; a verified graph isomorphism.
    pub bijection: Vec<u32>,
    pub base_dart: u32,
}

impl A5Scenario {
    pub fn build() -> Result<A5Scenario, FixtureError> {
        let a5 = alternating5()?;
        let g = &a5.group;
        let ab = g.mul(a5.a, a5.b);
        let nonspecial = vec![a5.b, g.inv(a5.b)];
        let mut connection = nonspecial.clone();
        connection.push(ab);
        let cayley = cayley_graph(g, &connection)?;
        let (dodecahedron, coset_of) = dodecahedron_from_a5(&a5)?;
        let icosidodecahedron =
            rectified(&dodecahedron, AdjacencyMode::AllAtVertex)?.renamed("icosidodecahedron");
        let trunc_dodecahedron =
            dart_graph(&dodecahedron, AdjacencyMode::AllAtVertex)?.renamed("truncdodecahedron");
        let didx = dart_index(&trunc_dodecahedron);
        // left multiplication on cosets; base dart (⟨b⟩, ab⟨b⟩)
        let bijection: Vec<u32> = (0..g.order() as u32)
            .map(|x| didx[&(coset_of[x as usize], coset_of[g.mul(x, ab) as usize])])
            .collect();
        let base_dart = bijection[g.identity() as usize];
        cayley_dart_isomorphism(&cayley, &trunc_dodecahedron, &bijection)?;
        Ok(A5Scenario {
            a5,
            ab,
            nonspecial,
            connection,
            cayley,
            dodecahedron,
            coset_of,
            icosidodecahedron,
            trunc_dodecahedron,
            bijection,
            base_dart,
        })
    }

    /// A1/A2 in the group basis (rows/columns indexed by A₅ elements).
    pub fn lift_average(&self) -> Result<LiftAverage, FixtureError> {
        let inv = invert_bijection(&self.bijection);
        Ok(lift_average(
            &self.trunc_dodecahedron,
            &self.icosidodecahedron,
            |d| inv[d as usize],
        )?)
    }
}

/// The main case: P₁₄₄₀ = Cay(G₁₄₄₀, {g₀..g₄, g_s}) realized on the darts
/// of the 600-cell, with P₇₂₀ on the edge midpoints.
pub struct MainScenario {
    pub q120: FiniteGroup,
    pub q24: FiniteGroup,
    pub g1440: FiniteGroup,
    pub gens: G1440Generators,
    pub connection: Vec<u32>,
    pub cell600: Graph,
    pub p720: Graph,
    pub p1440: Graph,
    pub cayley: CayleyStructure,
    /// Permutation of the 120 cell600 vertices for every G₁₄₄₀ element,
    /// acting as x ↦ l·x·r⁻¹.
    pub vertex_perms: Vec<Vec<u32>>,
    /// Group element → dart vertex of P₁₄₄₀; a verified graph isomorphism.
    pub bijection: Vec<u32>,
    /// Dart (1, (τ+i−τ̄j)/2): the Cayley identity vertex.
    pub base_dart: u32,
    /// cell600 vertex index of the quaternion 1.
    pub vertex_one: u32,
}

impl MainScenario {
    pub fn build() -> Result<MainScenario, FixtureError> {
        let q120 = binary_icosahedral()?;
        let q24 = binary_tetrahedral()?;
        let prod = FiniteGroup::direct_product(&q120, &q24);
        let minus_one = ElemKey::pair(
            ElemKey::quat(-&QuaternionQ5::one()),
            ElemKey::quat(-&QuaternionQ5::one()),
        );
        let g1440 = FiniteGroup::central_quotient(&prod, &minus_one)?;
        let gens = g1440_generators(&q120, &q24, &g1440)?;
        let connection = gens.connection_set();

        let cell600 = crate::polytopes::cell600(&q120)?;
        let p720 = rectified(&cell600, AdjacencyMode::TriangleRestricted)?.renamed("p720");
        let p1440 = dart_graph(&cell600, AdjacencyMode::TriangleRestricted)?.renamed("p1440");
        let cayley = cayley_graph(&g1440, &connection)?;

        // Vertex action of the generators, propagated to the whole group.
        let gen_perms: Vec<Vec<u32>> = connection
            .iter()
            .map(|&h| quotient_pair_vertex_perm(&g1440, h, &q120))
            .collect::<Result<_, _>>()?;
        let vertex_perms = action_permutations(&g1440, &connection, &gen_perms)?;

        // Base dart: from the vertex 1 towards (τ + i − τ̄j)/2 — the second
        // Q120 generator, so it is resolvable by key.
        let vertex_one = q120
            .index_of(&ElemKey::quat(QuaternionQ5::one()))
            .expect("1 is an icosian");
        let didx = dart_index(&p1440);
        let neighbor = {
            use crate::exactnum::QRoot5;
            let half = QRoot5::from_ratio(1, 2);
            let v = QuaternionQ5::new(
                QRoot5::tau() * half.clone(),
                half.clone(),
                (-&QRoot5::taubar()) * half,
                QRoot5::zero(),
            );
            q120
                .index_of(&ElemKey::quat(v))
                .expect("(τ+i−τ̄j)/2 is an icosian")
        };
        let base_dart = didx[&(vertex_one, neighbor)];

        let bijection: Vec<u32> = vertex_perms
            .iter()
            .map(|perm| didx[&(perm[vertex_one as usize], perm[neighbor as usize])])
            .collect();
        cayley_dart_isomorphism(&cayley, &p1440, &bijection)?;

        Ok(MainScenario {
            q120,
            q24,
            g1440,
            gens,
            connection,
            cell600,
            p720,
            p1440,
            cayley,
            vertex_perms,
            bijection,
            base_dart,
            vertex_one,
        })
    }

    /// A1/A2 in the group basis (rows/columns indexed by G₁₄₄₀ elements).
    pub fn lift_average(&self) -> Result<LiftAverage, FixtureError> {
        let inv = invert_bijection(&self.bijection);
        Ok(lift_average(&self.p1440, &self.p720, |d| inv[d as usize])?)
    }

    /// Images of the base dart under every group element (for transitivity
    /// checks this is the whole action).
    pub fn base_dart_images(&self) -> &[u32] {
        &self.bijection
    }
}

fn invert_bijection(b: &[u32]) -> Vec<u32> {
    let mut inv = vec![u32::MAX; b.len()];
    for (i, &x) in b.iter().enumerate() {
        inv[x as usize] = i as u32;
    }
    inv
}

/// Vertex permutation of a G₁₄₄₀ element given by its canonical
/// (l, r) representative: x ↦ l·x·r⁻¹ on the Q₁₂₀ elements in index order.
/// Both representatives of the coset act identically since the signs cancel.
fn quotient_pair_vertex_perm(
    g1440: &FiniteGroup,
    elem: u32,
    q120: &FiniteGroup,
) -> Result<Vec<u32>, PolytopeError> {
    let ElemKey::Pair(l, r) = g1440.key(elem) else {
        return Err(PolytopeError::Construction(
            "G1440 keys must be quaternion pairs".into(),
        ));
    };
    let (ElemKey::Quat(l), ElemKey::Quat(r)) = (l.as_ref(), r.as_ref()) else {
        return Err(PolytopeError::Construction(
            "G1440 keys must be quaternion pairs".into(),
        ));
    };
    let rinv = r.inv().expect("unit quaternion");
    let mut perm = Vec::with_capacity(q120.order());
    for key in q120.keys() {
        let ElemKey::Quat(x) = key else { unreachable!() };
        let img = &(l * x) * &rinv;
        let idx = q120.index_of(&ElemKey::quat(img)).ok_or_else(|| {
            PolytopeError::Construction("isometry image leaves Q120".into())
        })?;
        perm.push(idx);
    }
    Ok(perm)
}

/// Dart images of a vertex permutation, through a dart index map.
pub fn dart_images(
    perm: &[u32],
    darts: &Graph,
    didx: &HashMap<(u32, u32), u32>,
) -> Vec<u32> {
    darts
        .labels()
        .iter()
        .map(|l| match l {
            crate::polytopes::VertexLabel::Dart(u, v) => {
                didx[&(perm[*u as usize], perm[*v as usize])]
            }
            _ => panic!("not a dart graph"),
        })
        .collect()
}
