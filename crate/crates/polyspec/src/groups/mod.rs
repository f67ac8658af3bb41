//! Explicit finite groups: element tables, quaternion group constructions,
//! products, central quotients, permutation images, conjugacy classes and
//! character tables.

mod chartab;
mod conjugacy;
mod constructions;
mod modp;
mod subgroups;

pub use chartab::{character_table, CharacterTable};
pub use conjugacy::{conjugacy_classes, ConjugacyData};
pub use constructions::{
    alternating5, binary_icosahedral, binary_tetrahedral, cyclic, icosian_generators,
    isometry_action, isometry_permutation, isometry_permutation_groups, reflection,
    reflection_permutation, Alternating5, IsometryGroups,
};
pub use subgroups::{subgroup_closure, subgroups_of_order};

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::exactnum::QuaternionQ5;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("closure exceeded the cap of {cap} elements")]
    ClosureExceeded { cap: usize },
    #[error("expected a group of order {expected}, closure produced {actual}")]
    UnexpectedOrder { expected: usize, actual: usize },
    #[error("central quotient requires a central element, but {witness} does not commute")]
    NotCentral { witness: String },
    #[error("central quotient requires an involution, got an element of order {order}")]
    NotInvolution { order: u32 },
    #[error("element not in group: {0}")]
    NotAnElement(String),
    #[error("incompatible element keys: {0}")]
    KeyMismatch(String),
    #[error("character table: {0}")]
    CharacterTable(String),
}

/// Canonical label of a group element. Keys are self-contained: they
/// multiply and invert structurally, and their derived ordering picks
/// canonical coset representatives in central quotients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElemKey {
    /// A unit quaternion over Q(√5).
    Quat(QuaternionQ5),
    /// A permutation of 0..n−1 (image vector).
    Perm(Vec<u8>),
    /// An ordered pair, for direct products.
    Pair(Box<ElemKey>, Box<ElemKey>),
}

impl ElemKey {
    pub fn quat(q: QuaternionQ5) -> Self {
        ElemKey::Quat(q)
    }

    pub fn pair(a: ElemKey, b: ElemKey) -> Self {
        ElemKey::Pair(Box::new(a), Box::new(b))
    }

    /// Permutation composition acts right-to-left: (p·q)(x) = p(q(x)).
    pub fn mul(&self, other: &ElemKey) -> ElemKey {
        match (self, other) {
            (ElemKey::Quat(p), ElemKey::Quat(q)) => ElemKey::Quat(p * q),
            (ElemKey::Perm(p), ElemKey::Perm(q)) => {
                debug_assert_eq!(p.len(), q.len());
                ElemKey::Perm(q.iter().map(|&x| p[x as usize]).collect())
            }
            (ElemKey::Pair(a1, a2), ElemKey::Pair(b1, b2)) => {
                ElemKey::pair(a1.mul(b1), a2.mul(b2))
            }
            _ => panic!("ElemKey::mul on mismatched variants"),
        }
    }

    pub fn invert(&self) -> ElemKey {
        match self {
            // Group elements are unit quaternions, so q⁻¹ = q̄.
            ElemKey::Quat(q) => ElemKey::Quat(q.conj()),
            ElemKey::Perm(p) => {
                let mut inv = vec![0u8; p.len()];
                for (i, &x) in p.iter().enumerate() {
                    inv[x as usize] = i as u8;
                }
                ElemKey::Perm(inv)
            }
            ElemKey::Pair(a, b) => ElemKey::pair(a.invert(), b.invert()),
        }
    }

    pub fn identity_like(&self) -> ElemKey {
        match self {
            ElemKey::Quat(_) => ElemKey::Quat(QuaternionQ5::one()),
            ElemKey::Perm(p) => ElemKey::Perm((0..p.len() as u8).collect()),
            ElemKey::Pair(a, b) => ElemKey::pair(a.identity_like(), b.identity_like()),
        }
    }
}

impl fmt::Debug for ElemKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElemKey::Quat(q) => write!(f, "{q}"),
            ElemKey::Perm(p) => write!(f, "{p:?}"),
            ElemKey::Pair(a, b) => write!(f, "({a:?}, {b:?})"),
        }
    }
}

/// Groups up to this order get a dense multiplication table; larger ones
/// multiply through their keys and a hash lookup.
const TABLE_LIMIT: usize = 4096;

/// An explicit finite group: an indexed list of canonical element keys with
/// total multiplication, identity and inverses by index.
pub struct FiniteGroup {
    name: String,
    keys: Vec<ElemKey>,
    index: HashMap<ElemKey, u32>,
    id: u32,
    inv: Vec<u32>,
    table: Option<Vec<u32>>,
    /// For central quotients: the nontrivial coset representative shift.
    quotient_center: Option<ElemKey>,
}

impl FiniteGroup {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.keys.len()
    }

    pub fn identity(&self) -> u32 {
        self.id
    }

    pub fn key(&self, i: u32) -> &ElemKey {
        &self.keys[i as usize]
    }

    pub fn keys(&self) -> &[ElemKey] {
        &self.keys
    }

    pub fn index_of(&self, key: &ElemKey) -> Option<u32> {
        self.index.get(key).copied()
    }

    /// Index of the canonical representative of `key` (reduces modulo the
    /// quotient centre first, so either member of a coset resolves).
    pub fn resolve(&self, key: &ElemKey) -> Option<u32> {
        self.index.get(&self.canonicalize(key.clone())).copied()
    }

    pub fn contains(&self, key: &ElemKey) -> bool {
        self.resolve(key).is_some()
    }

    fn canonicalize(&self, key: ElemKey) -> ElemKey {
        match &self.quotient_center {
            None => key,
            Some(z) => {
                let other = z.mul(&key);
                if other < key {
                    other
                } else {
                    key
                }
            }
        }
    }

    #[inline]
    pub fn mul(&self, i: u32, j: u32) -> u32 {
        match &self.table {
            Some(t) => t[i as usize * self.keys.len() + j as usize],
            None => {
                let prod = self.canonicalize(self.keys[i as usize].mul(&self.keys[j as usize]));
                *self
                    .index
                    .get(&prod)
                    .expect("group not closed under multiplication")
            }
        }
    }

    #[inline]
    pub fn inv(&self, i: u32) -> u32 {
        self.inv[i as usize]
    }

    pub fn conjugate(&self, t: u32, x: u32) -> u32 {
        self.mul(self.mul(t, x), self.inv(t))
    }

    pub fn element_order(&self, i: u32) -> u32 {
        let mut n = 1u32;
        let mut acc = i;
        while acc != self.id {
            acc = self.mul(acc, i);
            n += 1;
        }
        n
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        let mut e = 1u64;
        for i in 0..self.order() as u32 {
            e = num_integer::lcm(e, self.element_order(i) as u64);
        }
        e
    }

    /// Generate a group as the multiplicative closure of `gens`.
    ///
    /// `cap` bounds the closure; exceeding it signals a construction bug
    /// rather than silently building a huge group.
    pub fn from_generators(
        name: impl Into<String>,
        gens: Vec<ElemKey>,
        cap: usize,
    ) -> Result<FiniteGroup, GroupError> {
        assert!(!gens.is_empty(), "need at least one generator");
        let id = gens[0].identity_like();
        let mut keys = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0u32);

        // Right-multiplying by generators and their inverses reaches every
        // word, so BFS from the identity covers the whole subgroup.
        let mut steps: Vec<ElemKey> = Vec::new();
        for g in &gens {
            let gi = g.invert();
            if !steps.contains(g) {
                steps.push(g.clone());
            }
            if !steps.contains(&gi) {
                steps.push(gi);
            }
        }

        let mut frontier = 0usize;
        while frontier < keys.len() {
            let current = keys[frontier].clone();
            for s in &steps {
                let next = current.mul(s);
                if !index.contains_key(&next) {
                    if keys.len() >= cap {
                        return Err(GroupError::ClosureExceeded { cap });
                    }
                    index.insert(next.clone(), keys.len() as u32);
                    keys.push(next);
                }
            }
            frontier += 1;
        }

        Self::finish(name.into(), keys, index, None)
    }

    fn finish(
        name: String,
        keys: Vec<ElemKey>,
        index: HashMap<ElemKey, u32>,
        quotient_center: Option<ElemKey>,
    ) -> Result<FiniteGroup, GroupError> {
        let mut g = FiniteGroup {
            name,
            keys,
            index,
            id: 0,
            inv: Vec::new(),
            table: None,
            quotient_center,
        };
        let id_key = g.canonicalize(g.keys[0].identity_like());
        g.id = *g
            .index
            .get(&id_key)
            .ok_or_else(|| GroupError::NotAnElement("identity".into()))?;

        let n = g.keys.len();
        let mut inv = Vec::with_capacity(n);
        for k in &g.keys {
            let ik = g.canonicalize(k.invert());
            let idx = g
                .index
                .get(&ik)
                .ok_or_else(|| GroupError::NotAnElement(format!("{ik:?}")))?;
            inv.push(*idx);
        }
        g.inv = inv;

        if n <= TABLE_LIMIT {
            let mut table = vec![0u32; n * n];
            for i in 0..n {
                for j in 0..n {
                    let prod = g.canonicalize(g.keys[i].mul(&g.keys[j]));
                    table[i * n + j] = *g
                        .index
                        .get(&prod)
                        .ok_or_else(|| GroupError::NotAnElement(format!("{prod:?}")))?;
                }
            }
            g.table = Some(table);
        }
        Ok(g)
    }

    /// Direct product with pair keys; the table, when both factors fit, is
    /// composed from the factor tables without touching the keys.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let na = a.order();
        let nb = b.order();
        let n = na * nb;
        let mut keys = Vec::with_capacity(n);
        let mut index = HashMap::with_capacity(n);
        for i in 0..na {
            for j in 0..nb {
                let k = ElemKey::pair(a.keys[i].clone(), b.keys[j].clone());
                index.insert(k.clone(), keys.len() as u32);
                keys.push(k);
            }
        }
        let id = (a.id as usize * nb + b.id as usize) as u32;
        let mut inv = Vec::with_capacity(n);
        for i in 0..na {
            for j in 0..nb {
                inv.push(a.inv(i as u32) * nb as u32 + b.inv(j as u32));
            }
        }
        let table = if n <= TABLE_LIMIT {
            let mut t = vec![0u32; n * n];
            for i1 in 0..na {
                for j1 in 0..nb {
                    let row = i1 * nb + j1;
                    for i2 in 0..na {
                        for j2 in 0..nb {
                            let col = i2 * nb + j2;
                            t[row * n + col] = a.mul(i1 as u32, i2 as u32) * nb as u32
                                + b.mul(j1 as u32, j2 as u32);
                        }
                    }
                }
            }
            Some(t)
        } else {
            None
        };
        FiniteGroup {
            name: format!("{}x{}", a.name, b.name),
            keys,
            index,
            id,
            inv,
            table,
            quotient_center: None,
        }
    }

    /// Quotient by a central involution ⟨z⟩. Elements are the canonical
    /// (ordering-minimal) members of the cosets {g, zg}; multiplication of
    /// representatives is well defined because z is central, which is
    /// verified here rather than assumed.
    pub fn central_quotient(g: &FiniteGroup, z: &ElemKey) -> Result<FiniteGroup, GroupError> {
        let zi = g
            .index_of(z)
            .ok_or_else(|| GroupError::NotAnElement(format!("{z:?}")))?;
        let zord = g.element_order(zi);
        if zord != 2 {
            return Err(GroupError::NotInvolution { order: zord });
        }

        let n = g.order();
        // Map each parent element to its coset partner z·x, verifying
        // centrality (z·x = x·z) along the way.
        let mut partner = vec![0u32; n];
        for x in 0..n as u32 {
            let zx = g.mul(zi, x);
            if g.mul(x, zi) != zx {
                return Err(GroupError::NotCentral {
                    witness: format!("{:?}", g.key(x)),
                });
            }
            partner[x as usize] = zx;
        }
        let mut keys = Vec::with_capacity(n / 2);
        let mut index = HashMap::with_capacity(n / 2);
        let mut compress = vec![u32::MAX; n];
        let mut rep_parent = Vec::with_capacity(n / 2);
        for x in 0..n as u32 {
            if compress[x as usize] != u32::MAX {
                continue;
            }
            let p = partner[x as usize];
            let key_x = &g.keys[x as usize];
            let key_p = &g.keys[p as usize];
            let (rep, rep_key) = if key_x <= key_p {
                (x, key_x.clone())
            } else {
                (p, key_p.clone())
            };
            let qidx = keys.len() as u32;
            compress[x as usize] = qidx;
            compress[p as usize] = qidx;
            index.insert(rep_key.clone(), qidx);
            keys.push(rep_key);
            rep_parent.push(rep);
        }
        let m = keys.len();

        let id = compress[g.id as usize];
        let mut inv = Vec::with_capacity(m);
        for &r in &rep_parent {
            inv.push(compress[g.inv(r) as usize]);
        }
        let table = if m <= TABLE_LIMIT && g.table.is_some() {
            let mut t = vec![0u32; m * m];
            for (i, &ri) in rep_parent.iter().enumerate() {
                for (j, &rj) in rep_parent.iter().enumerate() {
                    t[i * m + j] = compress[g.mul(ri, rj) as usize];
                }
            }
            Some(t)
        } else {
            None
        };

        Ok(FiniteGroup {
            name: format!("{}/<z>", g.name),
            keys,
            index,
            id,
            inv,
            table,
            quotient_center: Some(z.clone()),
        })
    }

    /// Check mul(id, g) = g, mul(g, inv(g)) = id for every element, and
    /// associativity — exhaustively for |G| ≤ 200, on a deterministic
    /// strided sample above that.
    pub fn check_axioms(&self) -> bool {
        let n = self.order() as u32;
        for gidx in 0..n {
            if self.mul(self.id, gidx) != gidx
                || self.mul(gidx, self.id) != gidx
                || self.mul(gidx, self.inv(gidx)) != self.id
            {
                return false;
            }
        }
        let triples: Box<dyn Iterator<Item = (u32, u32, u32)>> = if n <= 200 {
            Box::new((0..n).flat_map(move |a| {
                (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c)))
            }))
        } else {
            // ~10^5 strided triples, deterministic.
            let step = (n as u64 * n as u64 * n as u64 / 100_000).max(1);
            Box::new((0..100_000u64).map(move |t| {
                let v = t * step;
                let a = (v % n as u64) as u32;
                let b = ((v / n as u64) % n as u64) as u32;
                let c = ((v / (n as u64 * n as u64)) % n as u64) as u32;
                (a, b, c)
            }))
        };
        for (a, b, c) in triples {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return false;
            }
        }
        true
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order())
    }
}
