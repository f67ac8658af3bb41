use super::FiniteGroup;

/// Conjugacy classes of a finite group together with the class
/// multiplication coefficients a_{ijk} = #{(x,y) ∈ C_i×C_j : xy = z_k}
/// for a fixed representative z_k of C_k.
pub struct ConjugacyData {
    pub classes: Vec<Vec<u32>>,
    pub class_of: Vec<u32>,
    pub reps: Vec<u32>,
    pub sizes: Vec<u32>,
    /// Class of the inverses of class i.
    pub inverse_class: Vec<u32>,
    /// Orders of the class representatives.
    pub rep_orders: Vec<u32>,
    /// Flattened a_{ijk}, index (i·r + j)·r + k.
    cmc: Vec<u32>,
}

impl ConjugacyData {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    pub fn cmc(&self, i: usize, j: usize, k: usize) -> u32 {
        let r = self.classes.len();
        self.cmc[(i * r + j) * r + k]
    }
}

/// Partition a group into conjugacy classes by orbit enumeration and count
/// the class multiplication coefficients exactly.
pub fn conjugacy_classes(g: &FiniteGroup) -> ConjugacyData {
    let n = g.order();
    let mut class_of = vec![u32::MAX; n];
    let mut classes: Vec<Vec<u32>> = Vec::new();
    let mut reps = Vec::new();

    // Identity first, then discovery order: deterministic.
    for x in 0..n as u32 {
        if class_of[x as usize] != u32::MAX {
            continue;
        }
        let cid = classes.len() as u32;
        let mut members = Vec::new();
        for t in 0..n as u32 {
            let y = g.conjugate(t, x);
            if class_of[y as usize] == u32::MAX {
                class_of[y as usize] = cid;
                members.push(y);
            }
        }
        members.sort_unstable();
        reps.push(x);
        classes.push(members);
    }

    let r = classes.len();
    let sizes: Vec<u32> = classes.iter().map(|c| c.len() as u32).collect();
    let inverse_class: Vec<u32> = reps
        .iter()
        .map(|&x| class_of[g.inv(x) as usize])
        .collect();
    let rep_orders: Vec<u32> = reps.iter().map(|&x| g.element_order(x)).collect();

    // a_{ijk}: for fixed z_k, each x ∈ C_i pairs with the unique y = x⁻¹z_k;
    // count the class that y lands in.
    let mut cmc = vec![0u32; r * r * r];
    for (k, &zk) in reps.iter().enumerate() {
        for x in 0..n as u32 {
            let i = class_of[x as usize] as usize;
            let y = g.mul(g.inv(x), zk);
            let j = class_of[y as usize] as usize;
            cmc[(i * r + j) * r + k] += 1;
        }
    }

    ConjugacyData {
        classes,
        class_of,
        reps,
        sizes,
        inverse_class,
        rep_orders,
        cmc,
    }
}
