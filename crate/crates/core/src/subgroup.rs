//! Subgroups, centralizers and the element sets underlying the subgroup
//! lattice, the centralizer lattice and the normal-centralizer lattice.

use std::collections::{BTreeSet, HashSet};

use crate::bitset::SubgroupSet;
use crate::error::{Error, Limits, Result};
use crate::group::GroupTable;

/// True if `h` contains the identity and is closed under multiplication
/// (closure suffices for finite groups).
pub fn is_subgroup(g: &GroupTable, h: &SubgroupSet) -> bool {
    if h.parent_order() != g.order() || !h.contains(g.identity()) {
        return false;
    }
    let members: Vec<usize> = h.iter().collect();
    members
        .iter()
        .all(|&a| members.iter().all(|&b| h.contains(g.mul(a, b))))
}

/// The smallest subgroup containing `seed`.
pub fn generated_subgroup(g: &GroupTable, seed: &SubgroupSet) -> SubgroupSet {
    let gens: Vec<usize> = seed.iter().collect();
    g.generate(&gens)
}

/// Every subgroup of `g`, duplicate-free and sorted by `(size, bitset value)`.
///
/// Starts from the distinct cyclic subgroups and closes under joins with a
/// cyclic subgroup until nothing new appears. Every subgroup is reached,
/// since `⟨x1, …, xk⟩` is an iterated join of cyclic subgroups.
pub fn all_subgroups(g: &GroupTable, limits: &Limits) -> Result<Vec<SubgroupSet>> {
    if g.order() > limits.subgroup_cap {
        return Err(Error::OrderCapExceeded {
            order: g.order(),
            cap: limits.subgroup_cap,
        });
    }
    // one generator per distinct cyclic subgroup
    let mut cyclic: Vec<(usize, SubgroupSet)> = Vec::new();
    let mut seen_cyclic: HashSet<SubgroupSet> = HashSet::new();
    for x in g.elements() {
        let c = g.generate(&[x]);
        if seen_cyclic.insert(c.clone()) {
            cyclic.push((x, c));
        }
    }

    let mut found: Vec<(SubgroupSet, Vec<usize>)> = Vec::new();
    let mut seen: HashSet<SubgroupSet> = HashSet::new();
    for (x, c) in &cyclic {
        seen.insert(c.clone());
        let gens = if *x == g.identity() { vec![] } else { vec![*x] };
        found.push((c.clone(), gens));
    }
    let mut i = 0;
    while i < found.len() {
        for (x, c) in &cyclic {
            if c.is_subset(&found[i].0) {
                continue;
            }
            let mut join = found[i].0.clone();
            let mut gens = found[i].1.clone();
            gens.push(*x);
            g.extend_closure(&mut join, &gens);
            if seen.insert(join.clone()) {
                found.push((join, gens));
            }
        }
        i += 1;
    }
    let mut out: Vec<SubgroupSet> = found.into_iter().map(|(s, _)| s).collect();
    out.sort();
    Ok(out)
}

/// True iff `h` is normal in `g`. Only conjugation by the generators of `g`
/// is checked.
pub fn is_normal(g: &GroupTable, h: &SubgroupSet) -> Result<bool> {
    if !is_subgroup(g, h) {
        return Err(Error::NotASubgroup);
    }
    Ok(is_normal_unchecked(g, h))
}

fn is_normal_unchecked(g: &GroupTable, h: &SubgroupSet) -> bool {
    g.generators()
        .iter()
        .all(|&x| h.iter().all(|y| h.contains(g.conjugate(x, y))))
}

/// `C_G(x)`.
pub fn element_centralizer(g: &GroupTable, x: usize) -> SubgroupSet {
    SubgroupSet::from_indices(g.order(), g.elements().filter(|&y| g.commutes(x, y)))
}

/// `C_G(S) = {x ∈ G : xs = sx for all s ∈ S}`; the whole group for empty `S`.
pub fn centralizer(g: &GroupTable, s: &SubgroupSet) -> SubgroupSet {
    let members: Vec<usize> = s.iter().collect();
    SubgroupSet::from_indices(
        g.order(),
        g.elements()
            .filter(|&x| members.iter().all(|&y| g.commutes(x, y))),
    )
}

/// `Z(G) = C_G(G)`.
pub fn center(g: &GroupTable) -> SubgroupSet {
    centralizer(g, &SubgroupSet::full(g.order()))
}

/// The commutator subgroup `[G, G]`.
pub fn derived_subgroup(g: &GroupTable) -> SubgroupSet {
    let mut commutators = BTreeSet::new();
    for x in g.elements() {
        for y in g.elements() {
            let c = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
            commutators.insert(c);
        }
    }
    let gens: Vec<usize> = commutators.into_iter().collect();
    g.generate(&gens)
}

/// Closes `sets` under pairwise intersection and returns them sorted.
pub fn meet_closure(sets: impl IntoIterator<Item = SubgroupSet>) -> Vec<SubgroupSet> {
    let mut seen: HashSet<SubgroupSet> = HashSet::new();
    let mut list: Vec<SubgroupSet> = Vec::new();
    for s in sets {
        if seen.insert(s.clone()) {
            list.push(s);
        }
    }
    let mut i = 0;
    while i < list.len() {
        for j in 0..i {
            let m = list[i].intersection(&list[j]);
            if seen.insert(m.clone()) {
                list.push(m);
            }
        }
        i += 1;
    }
    list.sort();
    list
}

/// The members of the centralizer lattice, `{C_G(H) : H ≤ G}`.
///
/// Computed without enumerating subgroups: `C_G(H)` is the intersection of
/// the `C_G(h)` for `h ∈ H`, so the family is the meet-closure of the element
/// centralizers together with `G` itself.
pub fn centralizer_lattice_elements(g: &GroupTable) -> Vec<SubgroupSet> {
    let mut base = vec![SubgroupSet::full(g.order())];
    base.extend(g.elements().map(|x| element_centralizer(g, x)));
    meet_closure(base)
}

/// Every normal subgroup of `g`, sorted.
pub fn normal_subgroups(g: &GroupTable, limits: &Limits) -> Result<Vec<SubgroupSet>> {
    Ok(all_subgroups(g, limits)?
        .into_iter()
        .filter(|h| is_normal_unchecked(g, h))
        .collect())
}

/// The members of the normal-centralizer lattice, `{C_G(H) : H ⊴ G}`.
pub fn normal_centralizer_lattice_elements(
    g: &GroupTable,
    limits: &Limits,
) -> Result<Vec<SubgroupSet>> {
    let set: BTreeSet<SubgroupSet> = normal_subgroups(g, limits)?
        .iter()
        .map(|h| centralizer(g, h))
        .collect();
    Ok(set.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{dihedral, quaternion, symmetric};

    fn l() -> Limits {
        Limits::default()
    }

    /// Naive oracle: every identity-containing subset closed under the table.
    fn naive_subgroups(g: &GroupTable) -> Vec<SubgroupSet> {
        assert!(g.order() <= 16);
        let n = g.order();
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let s = SubgroupSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1));
            if is_subgroup(g, &s) {
                out.push(s);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_naive_oracle() {
        for g in [
            symmetric(3, &l()).unwrap(),
            quaternion(8).unwrap(),
            dihedral(4),
            crate::families::cyclic(1),
            crate::families::cyclic(12),
            quaternion(16).unwrap(),
            dihedral(8),
        ] {
            assert_eq!(
                all_subgroups(&g, &l()).unwrap(),
                naive_subgroups(&g),
                "{}",
                g.name()
            );
        }
    }

    #[test]
    fn known_subgroup_counts() {
        assert_eq!(
            all_subgroups(&symmetric(3, &l()).unwrap(), &l())
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            all_subgroups(&quaternion(8).unwrap(), &l()).unwrap().len(),
            6
        );
        assert_eq!(all_subgroups(&dihedral(4), &l()).unwrap().len(), 10);
        assert_eq!(
            all_subgroups(&crate::families::cyclic(1), &l())
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn subgroup_cap_is_enforced() {
        let tight = Limits {
            subgroup_cap: 5,
            ..l()
        };
        let err = all_subgroups(&symmetric(3, &l()).unwrap(), &tight).unwrap_err();
        assert_eq!(err, Error::OrderCapExceeded { order: 6, cap: 5 });
    }

    #[test]
    fn generated_subgroups() {
        let s3 = symmetric(3, &l()).unwrap();
        let t = SubgroupSet::from_indices(6, [2]);
        assert_eq!(generated_subgroup(&s3, &t).len(), 2);
        assert_eq!(
            generated_subgroup(&s3, &SubgroupSet::empty(6)),
            SubgroupSet::from_indices(6, [0])
        );
        let q8 = quaternion(8).unwrap();
        let ab = SubgroupSet::from_indices(
            8,
            [
                q8.element_by_name("a").unwrap(),
                q8.element_by_name("b").unwrap(),
            ],
        );
        assert!(generated_subgroup(&q8, &ab).is_full());
    }

    #[test]
    fn normality() {
        let s3 = symmetric(3, &l()).unwrap();
        let a3 = s3.generate(&[1]);
        assert!(is_normal(&s3, &a3).unwrap());
        let t = s3.generate(&[2]);
        assert!(!is_normal(&s3, &t).unwrap());
        assert!(is_normal(&s3, &s3.generate(&[])).unwrap());
        assert_eq!(
            is_normal(&s3, &SubgroupSet::from_indices(6, [0, 1])),
            Err(Error::NotASubgroup)
        );
    }

    #[test]
    fn centralizers_and_centers() {
        let s3 = symmetric(3, &l()).unwrap();
        let c = centralizer(&s3, &SubgroupSet::from_indices(6, [1]));
        assert_eq!(c, s3.generate(&[1]));
        assert_eq!(c.len(), 3);
        assert_eq!(center(&s3).len(), 1);
        assert!(centralizer(&s3, &SubgroupSet::empty(6)).is_full());

        let q8 = quaternion(8).unwrap();
        let a = q8.element_by_name("a").unwrap();
        let ca = centralizer(&q8, &SubgroupSet::from_indices(8, [a]));
        assert_eq!(ca, q8.generate(&[a]));
        assert_eq!(ca.len(), 4);
        let z = center(&q8);
        assert_eq!(z.len(), 2);
        assert!(z.contains(q8.element_by_name("a^2").unwrap()));

        let c6 = crate::families::cyclic(6);
        assert!(centralizer(&c6, &SubgroupSet::from_indices(6, [1, 2])).is_full());
        assert!(center(&c6).is_full());
    }

    #[test]
    fn centralizer_lattices_match_subgroup_route() {
        for g in [
            symmetric(3, &l()).unwrap(),
            dihedral(4),
            quaternion(8).unwrap(),
        ] {
            let direct = centralizer_lattice_elements(&g);
            let via: BTreeSet<SubgroupSet> = all_subgroups(&g, &l())
                .unwrap()
                .iter()
                .map(|h| centralizer(&g, h))
                .collect();
            assert_eq!(direct, via.into_iter().collect::<Vec<_>>());
        }
        assert_eq!(
            centralizer_lattice_elements(&symmetric(3, &l()).unwrap()).len(),
            6
        );
        assert_eq!(centralizer_lattice_elements(&dihedral(4)).len(), 5);
        assert_eq!(
            centralizer_lattice_elements(&quaternion(8).unwrap()).len(),
            5
        );
        let c5 = crate::families::cyclic(5);
        assert_eq!(
            centralizer_lattice_elements(&c5),
            vec![SubgroupSet::full(5)]
        );
    }

    #[test]
    fn normal_centralizer_lattices() {
        let s3 = symmetric(3, &l()).unwrap();
        let nc = normal_centralizer_lattice_elements(&s3, &l()).unwrap();
        assert_eq!(
            nc.iter().map(|s| s.len()).collect::<Vec<_>>(),
            vec![1, 3, 6]
        );

        let s4 = symmetric(4, &l()).unwrap();
        let nc = normal_centralizer_lattice_elements(&s4, &l()).unwrap();
        assert_eq!(
            nc.iter().map(|s| s.len()).collect::<Vec<_>>(),
            vec![1, 4, 24]
        );
        // the order-4 member is the Klein four-group of double transpositions
        let v4 = &nc[1];
        for x in v4.iter().filter(|&x| x != s4.identity()) {
            assert_eq!(s4.element_order(x), 2);
            let p = s4.permutation(x).unwrap();
            assert!(p.iter().enumerate().all(|(i, &v)| v as usize != i));
        }
        assert_eq!(normal_subgroups(&s4, &l()).unwrap().len(), 4);

        let c4 = crate::families::cyclic(4);
        assert_eq!(
            normal_centralizer_lattice_elements(&c4, &l()).unwrap(),
            vec![SubgroupSet::full(4)]
        );
    }

    #[test]
    fn double_centralizer_contains_element() {
        let g = symmetric(4, &l()).unwrap();
        for x in g.elements() {
            let cc = centralizer(&g, &element_centralizer(&g, x));
            assert!(cc.contains(x));
        }
    }
}
