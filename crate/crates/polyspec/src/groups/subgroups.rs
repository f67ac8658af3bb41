use std::collections::HashSet;

use super::FiniteGroup;

/// Closure of a generating set inside `g`, as a sorted list of element
/// indices. BFS by right multiplication with the generators and their
/// inverses; `bound`, when hit, aborts early (the closure is then known to
/// exceed it and the partial set is returned unsorted-complete).
pub fn subgroup_closure(g: &FiniteGroup, gens: &[u32]) -> Vec<u32> {
    closure_bounded(g, gens, g.order()).expect("closure bounded by the group order")
}

fn closure_bounded(g: &FiniteGroup, gens: &[u32], bound: usize) -> Option<Vec<u32>> {
    let mut member = vec![false; g.order()];
    let mut elems = vec![g.identity()];
    member[g.identity() as usize] = true;
    let mut steps = Vec::new();
    for &x in gens {
        if !steps.contains(&x) {
            steps.push(x);
        }
        let xi = g.inv(x);
        if !steps.contains(&xi) {
            steps.push(xi);
        }
    }
    let mut frontier = 0;
    while frontier < elems.len() {
        let cur = elems[frontier];
        for &s in &steps {
            let nxt = g.mul(cur, s);
            if !member[nxt as usize] {
                if elems.len() >= bound {
                    return None;
                }
                member[nxt as usize] = true;
                elems.push(nxt);
            }
        }
        frontier += 1;
    }
    elems.sort_unstable();
    Some(elems)
}

/// Every subgroup of order `n` generated by at most `max_gens` elements,
/// found by sweeping all generating tuples with Lagrange pruning (generator
/// orders must divide n, and a closure that grows past n is abandoned).
/// Subgroups are deduplicated by element set. The sweep is exhaustive over
/// tuples, not sampled.
pub fn subgroups_of_order(g: &FiniteGroup, n: usize, max_gens: usize) -> Vec<Vec<u32>> {
    assert!((1..=2).contains(&max_gens), "sweep supports 1 or 2 generators");
    let order = g.order() as u32;
    let mut found: Vec<Vec<u32>> = Vec::new();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();

    let admissible: Vec<u32> = (0..order)
        .filter(|&x| n % g.element_order(x) as usize == 0)
        .collect();

    for &x in &admissible {
        if let Some(c) = closure_bounded(g, &[x], n + 1) {
            if c.len() == n && seen.insert(c.clone()) {
                found.push(c);
            }
        }
    }
    if max_gens >= 2 {
        for &x in &admissible {
            for &y in &admissible {
                if y <= x {
                    continue;
                }
                if let Some(c) = closure_bounded(g, &[x, y], n + 1) {
                    if c.len() == n && seen.insert(c.clone()) {
                        found.push(c);
                    }
                }
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{alternating5, cyclic, FiniteGroup};

    #[test]
    fn closure_of_identity() {
        let a5 = alternating5().unwrap();
        assert_eq!(
            subgroup_closure(&a5.group, &[a5.group.identity()]),
            vec![a5.group.identity()]
        );
    }

    #[test]
    fn a_and_b_generate_a5() {
        let a5 = alternating5().unwrap();
        let c = subgroup_closure(&a5.group, &[a5.a, a5.b]);
        assert_eq!(c.len(), 60);
    }

    #[test]
    fn a5_is_not_cyclic() {
        let a5 = alternating5().unwrap();
        assert!(subgroups_of_order(&a5.group, 60, 1).is_empty());
    }

    #[test]
    fn z6_subgroups() {
        let z6 = FiniteGroup::direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap());
        assert_eq!(subgroups_of_order(&z6, 2, 2).len(), 1);
        assert_eq!(subgroups_of_order(&z6, 3, 2).len(), 1);
        assert_eq!(subgroups_of_order(&z6, 6, 2).len(), 1);
        assert!(subgroups_of_order(&z6, 4, 2).is_empty());
    }

    #[test]
    fn a4_has_no_order_six_subgroup() {
        // classic: A4 (order 12) has no subgroup of order 6
        let a5 = alternating5().unwrap();
        // A4 inside A5: permutations fixing point 0 — generate from two of them
        let g = &a5.group;
        let fixing: Vec<u32> = (0..60u32)
            .filter(|&i| match g.key(i) {
                crate::groups::ElemKey::Perm(p) => p[0] == 0,
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(fixing.len(), 12);
        // build A4 as its own FiniteGroup via generators among `fixing`
        let keys: Vec<_> = fixing.iter().map(|&i| g.key(i).clone()).collect();
        let a4 = FiniteGroup::from_generators("A4", keys, 100).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(subgroups_of_order(&a4, 6, 2).is_empty());
        assert_eq!(subgroups_of_order(&a4, 4, 2).len(), 1);
        assert_eq!(subgroups_of_order(&a4, 3, 2).len(), 4);
    }
}
