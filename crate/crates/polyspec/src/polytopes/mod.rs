//! The graphs of the 600-cell family and their Cayley structures.
//!
//! The central objects: the 600-cell {3,3,5} on the 120 icosians; its
//! rectification P₇₂₀ on the 720 edge midpoints; the dart polytope P₁₄₄₀
//! (two points per edge, realized combinatorially as ordered adjacent
//! pairs); the dodecahedron with its medial graph ⟨3,5,3,5⟩ and truncation
//! ⟨3,10,10⟩; and the identifications of the dart graphs with Cayley graphs
//! of G₁₄₄₀ and A₅.

mod graph;

pub use graph::{
    complete_graph, cycle_graph, pentagonal_prism, petersen_graph, Graph, VertexLabel,
};

use std::collections::HashMap;

use thiserror::Error;

use crate::exactnum::{QRoot5, QuaternionQ5};
use crate::groups::{Alternating5, ElemKey, FiniteGroup};

#[derive(Debug, Error)]
pub enum PolytopeError {
    #[error("graph construction: {0}")]
    Construction(String),
    #[error("connection set: {0}")]
    BadConnectionSet(String),
    #[error("generator validation: {0}")]
    GeneratorValidation(String),
    #[error("action is not a bijection onto the target vertices")]
    NotBijective,
    #[error("cayley edge ({0},{1}) maps to the non-edge ({2},{3})")]
    EdgeNotPreserved(u32, u32, u32, u32),
}

/// Which pairs of incident parent edges count as adjacent in a rectified
/// or dart graph.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AdjacencyMode {
    /// Incident edges are adjacent only when their far endpoints are
    /// adjacent too (edges spanning a triangle). Correct for the 600-cell,
    /// whose faces are triangles.
    TriangleRestricted,
    /// All edges meeting at a vertex are adjacent (medial rule). Correct
    /// for 3-valent polyhedra such as the dodecahedron.
    AllAtVertex,
}

/// The 600-cell: vertices are the 120 icosians in the element order of
/// Q₁₂₀, and two vertices are adjacent exactly when their inner product is
/// τ/2 (the nearest-neighbour angle of 36°). The result is 12-regular with
/// 720 edges.
pub fn cell600(q120: &FiniteGroup) -> Result<Graph, PolytopeError> {
    let verts: Vec<QuaternionQ5> = q120
        .keys()
        .iter()
        .map(|k| match k {
            ElemKey::Quat(q) => q.clone(),
            _ => unreachable!("Q120 keys are quaternions"),
        })
        .collect();
    let threshold = QRoot5::tau() * QRoot5::from_ratio(1, 2);
    let labels: Vec<VertexLabel> = verts.iter().cloned().map(VertexLabel::Quat).collect();
    let mut edges = Vec::new();
    for a in 0..verts.len() as u32 {
        for b in (a + 1)..verts.len() as u32 {
            if verts[a as usize].dot(&verts[b as usize]) == threshold {
                edges.push((a, b));
            }
        }
    }
    let g = Graph::from_edges("cell600", labels, edges)?;
    if g.regular_degree() != Some(12) {
        return Err(PolytopeError::Construction(format!(
            "600-cell graph is not 12-regular: degrees {:?}",
            g.degree_histogram()
        )));
    }
    Ok(g)
}

/// Rectified graph: one vertex per edge of `g`, labelled by that edge.
/// Adjacency follows `mode`.
pub fn rectified(g: &Graph, mode: AdjacencyMode) -> Result<Graph, PolytopeError> {
    let edge_index: HashMap<(u32, u32), u32> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i as u32))
        .collect();
    let labels: Vec<VertexLabel> = g
        .edges()
        .iter()
        .map(|&(a, b)| VertexLabel::Edge(a, b))
        .collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        for (shared, far) in [(a, b), (b, a)] {
            for &t in g.neighbors(shared) {
                if t == far {
                    continue;
                }
                let other = (shared.min(t), shared.max(t));
                let j = edge_index[&other];
                if j as usize <= i {
                    continue;
                }
                let adjacent = match mode {
                    AdjacencyMode::AllAtVertex => true,
                    AdjacencyMode::TriangleRestricted => g.adjacent(far, t),
                };
                if adjacent {
                    edges.push((i as u32, j));
                }
            }
        }
    }
    // the sweep may see an edge pair from both shared endpoints; dedupe
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(format!("rectified-{}", g.name()), labels, edges)
}

/// Dart graph: one vertex per ordered adjacent pair (v, w) of `g`,
/// realizing "a point on edge {v,w} near v". The reversal (w, v) is always
/// adjacent (the special edge inside {v,w}); darts with the same source are
/// adjacent according to `mode`.
pub fn dart_graph(g: &Graph, mode: AdjacencyMode) -> Result<Graph, PolytopeError> {
    let mut labels = Vec::with_capacity(2 * g.edge_count());
    let mut index = HashMap::with_capacity(2 * g.edge_count());
    for &(a, b) in g.edges() {
        index.insert((a, b), labels.len() as u32);
        labels.push(VertexLabel::Dart(a, b));
        index.insert((b, a), labels.len() as u32);
        labels.push(VertexLabel::Dart(b, a));
    }
    let mut edges = Vec::new();
    for (di, lab) in labels.iter().enumerate() {
        let &VertexLabel::Dart(v, w) = lab else {
            unreachable!()
        };
        // special edge
        let rev = index[&(w, v)];
        if (di as u32) < rev {
            edges.push((di as u32, rev));
        }
        // same-source edges
        for &u in g.neighbors(v) {
            if u == w {
                continue;
            }
            let keep = match mode {
                AdjacencyMode::AllAtVertex => true,
                AdjacencyMode::TriangleRestricted => g.adjacent(u, w),
            };
            if keep {
                let dj = index[&(v, u)];
                if (di as u32) < dj {
                    edges.push((di as u32, dj));
                }
            }
        }
    }
    Graph::from_edges(format!("darts-{}", g.name()), labels, edges)
}

/// Dart-index lookup for a dart graph.
pub fn dart_index(darts: &Graph) -> HashMap<(u32, u32), u32> {
    darts
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| match l {
            VertexLabel::Dart(a, b) => ((*a, *b), i as u32),
            _ => panic!("not a dart graph"),
        })
        .collect()
}

/// A Cayley graph: vertices are the elements of a group, edges {g, gh} for
/// h in an inverse-closed connection set avoiding the identity.
pub struct CayleyStructure {
    pub connection: Vec<u32>,
    pub graph: Graph,
}

pub fn cayley_graph(g: &FiniteGroup, connection: &[u32]) -> Result<CayleyStructure, PolytopeError> {
    for &h in connection {
        if h == g.identity() {
            return Err(PolytopeError::BadConnectionSet(
                "identity in connection set".into(),
            ));
        }
        if !connection.contains(&g.inv(h)) {
            return Err(PolytopeError::BadConnectionSet(format!(
                "connection set not inverse-closed at element {h}"
            )));
        }
    }
    let labels: Vec<VertexLabel> = (0..g.order() as u32).map(VertexLabel::Group).collect();
    let mut edges = Vec::new();
    for x in 0..g.order() as u32 {
        for &h in connection {
            let y = g.mul(x, h);
            if x < y {
                edges.push((x, y));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let graph = Graph::from_edges(format!("cayley-{}", g.name()), labels, edges)?;
    Ok(CayleyStructure {
        connection: connection.to_vec(),
        graph,
    })
}

/// The dodecahedron obtained from ⟨3,10,10⟩ = Cay(A₅, {b, b⁻¹, ab}) by
/// contracting each b-triangle {g, gb, gb²} — i.e. each coset g⟨b⟩ — to a
/// single vertex. Edges are induced by the ab-edges. Returns the graph and
/// the element→coset-vertex map.
pub fn dodecahedron_from_a5(a5: &Alternating5) -> Result<(Graph, Vec<u32>), PolytopeError> {
    let g = &a5.group;
    let ab = g.mul(a5.a, a5.b);
    let n = g.order() as u32;

    // cosets g⟨b⟩, labelled by minimal member
    let mut coset_of = vec![u32::MAX; n as usize];
    let mut coset_min = Vec::new();
    for x in 0..n {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let members = [x, g.mul(x, a5.b), g.mul(g.mul(x, a5.b), a5.b)];
        let cid = coset_min.len() as u32;
        let mut minimum = u32::MAX;
        for &m in &members {
            coset_of[m as usize] = cid;
            minimum = minimum.min(m);
        }
        coset_min.push(minimum);
    }
    let labels: Vec<VertexLabel> = coset_min.iter().map(|&m| VertexLabel::Coset(m)).collect();

    let mut edges = Vec::new();
    for x in 0..n {
        let y = g.mul(x, ab);
        let (cx, cy) = (coset_of[x as usize], coset_of[y as usize]);
        if cx == cy {
            return Err(PolytopeError::Construction(
                "contraction produced a loop".into(),
            ));
        }
        if cx < cy {
            edges.push((cx, cy));
        }
    }
    edges.sort_unstable();
    let before = edges.len();
    edges.dedup();
    if before != edges.len() {
        return Err(PolytopeError::Construction(
            "contraction produced a multi-edge".into(),
        ));
    }
    let graph = Graph::from_edges("dodecahedron", labels, edges)?;
    Ok((graph, coset_of))
}

/// The six connection-set generators of the P₁₄₄₀ Cayley structure as
/// elements of G₁₄₄₀ = (Q₁₂₀×Q₂₄)/(−1,−1): five diagonal rotations
/// g₀ = (i,i), g₁..g₄ = ((1±i±j±k)/2 diagonal pairs), and the special
/// generator g_s = ((−τ̄i−j+τk)/2, k).
pub struct G1440Generators {
    /// g₀..g₄ (indices in G₁₄₄₀); these generate the non-special edges.
    pub rotations: [u32; 5],
    /// g_s, the special-edge generator.
    pub special: u32,
}

impl G1440Generators {
    pub fn connection_set(&self) -> Vec<u32> {
        let mut h = self.rotations.to_vec();
        h.push(self.special);
        h
    }
}

pub fn g1440_generators(
    q120: &FiniteGroup,
    q24: &FiniteGroup,
    g1440: &FiniteGroup,
) -> Result<G1440Generators, PolytopeError> {
    let half = QRoot5::from_ratio(1, 2);
    let diag = |q: QuaternionQ5| ElemKey::pair(ElemKey::quat(q.clone()), ElemKey::quat(q));
    let keys = [
        diag(QuaternionQ5::i()),
        diag(QuaternionQ5::from_ints(1, 1, 1, 1, 2)),
        diag(QuaternionQ5::from_ints(1, 1, 1, -1, 2)),
        diag(QuaternionQ5::from_ints(1, -1, -1, 1, 2)),
        diag(QuaternionQ5::from_ints(1, -1, -1, -1, 2)),
        ElemKey::pair(
            ElemKey::quat(QuaternionQ5::new(
                QRoot5::zero(),
                (-&QRoot5::taubar()) * half.clone(),
                -&half,
                QRoot5::tau() * half,
            )),
            ElemKey::quat(QuaternionQ5::k()),
        ),
    ];
    let mut idx = [0u32; 6];
    for (n, key) in keys.iter().enumerate() {
        let ElemKey::Pair(l, r) = key else {
            unreachable!()
        };
        if !q120.contains(l) {
            return Err(PolytopeError::GeneratorValidation(format!(
                "left component of generator {n} is not in Q120"
            )));
        }
        if !q24.contains(r) {
            return Err(PolytopeError::GeneratorValidation(format!(
                "right component of generator {n} is not in Q24"
            )));
        }
        idx[n] = g1440.resolve(key).ok_or_else(|| {
            PolytopeError::GeneratorValidation(format!("generator {n} not in G1440"))
        })?;
    }
    Ok(G1440Generators {
        rotations: [idx[0], idx[1], idx[2], idx[3], idx[4]],
        special: idx[5],
    })
}

/// Permutations of an indexed point set for every element of a group,
/// propagated from generator permutations through a BFS over the group:
/// Φ(g·h) = Φ(g)∘Φ(h). `gen_perms[i]` must be the action of `gens[i]`.
/// Fails if the generators do not generate the whole group.
pub fn action_permutations(
    group: &FiniteGroup,
    gens: &[u32],
    gen_perms: &[Vec<u32>],
) -> Result<Vec<Vec<u32>>, PolytopeError> {
    assert_eq!(gens.len(), gen_perms.len());
    let n = group.order();
    let npts = gen_perms.first().map_or(0, Vec::len);
    let mut perms: Vec<Option<Vec<u32>>> = vec![None; n];
    perms[group.identity() as usize] = Some((0..npts as u32).collect());
    let mut queue = std::collections::VecDeque::from([group.identity()]);
    while let Some(g) = queue.pop_front() {
        let pg = perms[g as usize].clone().unwrap();
        for (h, ph) in gens.iter().zip(gen_perms) {
            let gh = group.mul(g, *h);
            if perms[gh as usize].is_none() {
                // Φ(g·h) = Φ(g)∘Φ(h): apply h first, then g
                let composed: Vec<u32> = ph.iter().map(|&x| pg[x as usize]).collect();
                perms[gh as usize] = Some(composed);
                queue.push_back(gh);
            }
        }
    }
    perms
        .into_iter()
        .map(|p| {
            p.ok_or_else(|| {
                PolytopeError::Construction("generators do not generate the group".into())
            })
        })
        .collect()
}

/// Outcome of a (simple) transitivity check of a group action, determined
/// entirely by the images of a base point under every group element.
#[derive(Debug)]
pub struct TransitivityReport {
    pub group_order: usize,
    pub point_count: usize,
    pub orbit_size: usize,
    /// Elements fixing the base point.
    pub stabilizer: Vec<u32>,
    pub transitive: bool,
    pub simply_transitive: bool,
}

/// `base_images[g]` = image of the base point under element g.
pub fn simply_transitive_check(
    base_images: &[u32],
    point_count: usize,
    base: u32,
) -> TransitivityReport {
    let mut seen = vec![false; point_count];
    let mut orbit_size = 0usize;
    let mut stabilizer = Vec::new();
    for (g, &img) in base_images.iter().enumerate() {
        if !seen[img as usize] {
            seen[img as usize] = true;
            orbit_size += 1;
        }
        if img == base {
            stabilizer.push(g as u32);
        }
    }
    let transitive = orbit_size == point_count;
    let simply_transitive =
        transitive && stabilizer.len() == 1 && base_images.len() == point_count;
    TransitivityReport {
        group_order: base_images.len(),
        point_count,
        orbit_size,
        stabilizer,
        transitive,
        simply_transitive,
    }
}

/// Verify that g ↦ (image of base dart under g) is a graph isomorphism from
/// a Cayley graph onto a dart graph, and return the vertex bijection.
///
/// Since each group element acts by a graph automorphism of the dart graph,
/// checking that every Cayley edge lands on a dart edge, together with
/// bijectivity and equal edge counts, establishes the isomorphism.
pub fn cayley_dart_isomorphism(
    cayley: &CayleyStructure,
    darts: &Graph,
    base_images: &[u32],
) -> Result<Vec<u32>, PolytopeError> {
    let n = darts.vertex_count();
    if base_images.len() != n || cayley.graph.vertex_count() != n {
        return Err(PolytopeError::NotBijective);
    }
    let mut seen = vec![false; n];
    for &img in base_images {
        if seen[img as usize] {
            return Err(PolytopeError::NotBijective);
        }
        seen[img as usize] = true;
    }
    if cayley.graph.edge_count() != darts.edge_count() {
        return Err(PolytopeError::Construction(format!(
            "edge counts differ: cayley {} vs darts {}",
            cayley.graph.edge_count(),
            darts.edge_count()
        )));
    }
    for &(x, y) in cayley.graph.edges() {
        let (ix, iy) = (base_images[x as usize], base_images[y as usize]);
        if !darts.adjacent(ix, iy) {
            return Err(PolytopeError::EdgeNotPreserved(x, y, ix, iy));
        }
    }
    Ok(base_images.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{alternating5, binary_icosahedral, binary_tetrahedral};

    #[test]
    fn rectified_triangle_is_a_triangle() {
        let k3 = complete_graph(3);
        let r = rectified(&k3, AdjacencyMode::TriangleRestricted).unwrap();
        assert_eq!(r.vertex_count(), 3);
        assert_eq!(r.edge_count(), 3);
        assert!(r.isomorphic_small(&complete_graph(3)));
    }

    #[test]
    fn dart_count_is_twice_edge_count() {
        for g in [complete_graph(4), cycle_graph(6), petersen_graph()] {
            let d = dart_graph(&g, AdjacencyMode::AllAtVertex).unwrap();
            assert_eq!(d.vertex_count(), 2 * g.edge_count());
        }
    }

    #[test]
    fn a5_cayley_family() {
        let a5 = alternating5().unwrap();
        let g = &a5.group;
        let ab = g.mul(a5.a, a5.b);
        let h = vec![a5.b, g.inv(a5.b), ab];
        let cay = cayley_graph(g, &h).unwrap();
        assert_eq!(cay.graph.vertex_count(), 60);
        assert_eq!(cay.graph.regular_degree(), Some(3));
        assert!(cay.graph.is_connected());

        let (dodec, coset_of) = dodecahedron_from_a5(&a5).unwrap();
        assert_eq!(dodec.vertex_count(), 20);
        assert_eq!(dodec.edge_count(), 30);
        assert_eq!(dodec.regular_degree(), Some(3));
        assert_eq!(dodec.girth(), Some(5));
        assert!(dodec.is_connected());
        assert_eq!(coset_of.len(), 60);

        let medial = rectified(&dodec, AdjacencyMode::AllAtVertex).unwrap();
        assert_eq!(medial.vertex_count(), 30);
        assert_eq!(medial.regular_degree(), Some(4));
        assert!(medial.is_connected());

        let trunc = dart_graph(&dodec, AdjacencyMode::AllAtVertex).unwrap();
        assert_eq!(trunc.vertex_count(), 60);
        assert_eq!(trunc.regular_degree(), Some(3));
        assert!(trunc.is_connected());
    }

    #[test]
    fn cayley_rejects_bad_connection_sets() {
        let a5 = alternating5().unwrap();
        let g = &a5.group;
        assert!(matches!(
            cayley_graph(g, &[g.identity()]),
            Err(PolytopeError::BadConnectionSet(_))
        ));
        // b alone is not inverse-closed (b has order 3)
        assert!(matches!(
            cayley_graph(g, &[a5.b]),
            Err(PolytopeError::BadConnectionSet(_))
        ));
    }

    #[test]
    fn a5_dart_isomorphism() {
        let a5 = alternating5().unwrap();
        let g = &a5.group;
        let ab = g.mul(a5.a, a5.b);
        let h = vec![a5.b, g.inv(a5.b), ab];
        let cay = cayley_graph(g, &h).unwrap();
        let (dodec, coset_of) = dodecahedron_from_a5(&a5).unwrap();
        let trunc = dart_graph(&dodec, AdjacencyMode::AllAtVertex).unwrap();
        let didx = dart_index(&trunc);

        // left multiplication on cosets; base dart (⟨b⟩, ab⟨b⟩)
        let base = didx[&(
            coset_of[g.identity() as usize],
            coset_of[ab as usize],
        )];
        let images: Vec<u32> = (0..60u32)
            .map(|x| {
                let src = coset_of[g.mul(x, g.identity()) as usize];
                let dst = coset_of[g.mul(x, ab) as usize];
                didx[&(src, dst)]
            })
            .collect();
        assert_eq!(images[g.identity() as usize], base);
        let iso = cayley_dart_isomorphism(&cay, &trunc, &images).unwrap();
        assert_eq!(iso.len(), 60);

        let report = simply_transitive_check(&images, 60, base);
        assert!(report.simply_transitive);
    }

    #[test]
    fn cell600_counts() {
        let q120 = binary_icosahedral().unwrap();
        let c = cell600(&q120).unwrap();
        assert_eq!(c.vertex_count(), 120);
        assert_eq!(c.edge_count(), 720);
        assert_eq!(c.regular_degree(), Some(12));
        assert!(c.is_connected());
    }

    #[test]
    fn p720_and_p1440_counts() {
        let q120 = binary_icosahedral().unwrap();
        let c = cell600(&q120).unwrap();
        let p720 = rectified(&c, AdjacencyMode::TriangleRestricted).unwrap();
        assert_eq!(p720.vertex_count(), 720);
        assert_eq!(p720.regular_degree(), Some(10));
        assert!(p720.is_connected());

        let p1440 = dart_graph(&c, AdjacencyMode::TriangleRestricted).unwrap();
        assert_eq!(p1440.vertex_count(), 1440);
        assert_eq!(p1440.regular_degree(), Some(6));
        assert!(p1440.is_connected());
    }

    #[test]
    fn g1440_generator_inverse_pairing() {
        let q120 = binary_icosahedral().unwrap();
        let q24 = binary_tetrahedral().unwrap();
        let prod = FiniteGroup::direct_product(&q120, &q24);
        let minus_one = ElemKey::pair(
            ElemKey::quat(-&QuaternionQ5::one()),
            ElemKey::quat(-&QuaternionQ5::one()),
        );
        let g1440 = FiniteGroup::central_quotient(&prod, &minus_one).unwrap();
        let gens = g1440_generators(&q120, &q24, &g1440).unwrap();
        let [g0, g1, g2, g3, g4] = gens.rotations;
        let gs = gens.special;
        // g0 and gs are involutions; g1↔g4 and g2↔g3 are inverse pairs
        assert_eq!(g1440.mul(g0, g0), g1440.identity());
        assert_eq!(g1440.mul(gs, gs), g1440.identity());
        assert_eq!(g1440.mul(g1, g4), g1440.identity());
        assert_eq!(g1440.mul(g2, g3), g1440.identity());
        // connection set is inverse-closed without the identity
        let cay = cayley_graph(&g1440, &gens.connection_set()).unwrap();
        assert_eq!(cay.graph.vertex_count(), 1440);
        assert_eq!(cay.graph.regular_degree(), Some(6));
    }
}
