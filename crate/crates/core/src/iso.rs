//! Isomorphism testing for small groups: invariant fingerprints for quick
//! rejection, then backtracking over images of a generating set.

use std::collections::BTreeMap;

use crate::group::GroupTable;
use crate::subgroup;

/// Isomorphism invariants. Two groups with different fingerprints are never
/// isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    /// `(element order, number of elements of that order)`, ascending.
    pub element_orders: Vec<(usize, usize)>,
    pub center_size: usize,
    pub derived_size: usize,
}

impl Fingerprint {
    pub(crate) fn compute(g: &GroupTable) -> Fingerprint {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for x in g.elements() {
            *counts.entry(g.element_order(x)).or_default() += 1;
        }
        let center_size = subgroup::center(g).len();
        let abelian = center_size == g.order();
        let derived_size = if abelian {
            1
        } else {
            subgroup::derived_subgroup(g).len()
        };
        Fingerprint {
            order: g.order(),
            abelian,
            element_orders: counts.into_iter().collect(),
            center_size,
            derived_size,
        }
    }
}

/// An isomorphism `g → h` as the image of every element of `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub images: Vec<usize>,
}

impl Isomorphism {
    /// Exhaustive check that this map is a bijective homomorphism `g → h`.
    pub fn verify(&self, g: &GroupTable, h: &GroupTable) -> bool {
        if g.order() != h.order() || self.images.len() != g.order() {
            return false;
        }
        let mut seen = vec![false; h.order()];
        for &y in &self.images {
            if y >= h.order() || seen[y] {
                return false;
            }
            seen[y] = true;
        }
        g.elements().all(|a| {
            g.elements()
                .all(|b| self.images[g.mul(a, b)] == h.mul(self.images[a], self.images[b]))
        })
    }
}

pub fn is_isomorphic(g: &GroupTable, h: &GroupTable) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Searches for an isomorphism `g → h`.
///
/// The generators of `g` are its greedy generating set; each is tried against
/// the elements of `h` of the same order, in ascending index order, and the
/// partial map is extended over the subgroup generated so far.
pub fn find_isomorphism(g: &GroupTable, h: &GroupTable) -> Option<Isomorphism> {
    if g.order() != h.order() || g.fingerprint() != h.fingerprint() {
        return None;
    }
    let gens = g.generators().to_vec();
    let h_orders: Vec<usize> = h.elements().map(|y| h.element_order(y)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let o = g.element_order(s);
            h.elements().filter(|&y| h_orders[y] == o).collect()
        })
        .collect();

    let mut images = vec![0usize; gens.len()];
    let map = search(g, h, &gens, &candidates, &mut images, 0)?;
    let iso = Isomorphism { images: map };
    debug_assert!(iso.verify(g, h));
    Some(iso)
}

fn search(
    g: &GroupTable,
    h: &GroupTable,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    depth: usize,
) -> Option<Vec<usize>> {
    if depth == gens.len() {
        let map = extend(g, h, gens, images)?;
        return map
            .iter()
            .all(|m| m.is_some())
            .then(|| map.into_iter().flatten().collect());
    }
    for &c in &candidates[depth] {
        images[depth] = c;
        if extend(g, h, &gens[..=depth], &images[..=depth]).is_none() {
            continue;
        }
        if let Some(found) = search(g, h, gens, candidates, images, depth + 1) {
            return Some(found);
        }
    }
    None
}

/// Extends `gens[i] ↦ images[i]` to the subgroup generated by `gens`.
/// Returns `None` if the assignment is not a well-defined injective homomorphism.
fn extend(
    g: &GroupTable,
    h: &GroupTable,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<Option<usize>>> {
    let mut map: Vec<Option<usize>> = vec![None; g.order()];
    let mut used = vec![false; h.order()];
    map[g.identity()] = Some(h.identity());
    used[h.identity()] = true;
    let mut queue = vec![g.identity()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let fx = map[x].expect("queued elements are mapped");
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = h.mul(fx, t);
            match map[y] {
                Some(existing) if existing != fy => return None,
                Some(_) => {}
                None => {
                    if used[fy] {
                        return None;
                    }
                    used[fy] = true;
                    map[y] = Some(fy);
                    queue.push(y);
                }
            }
        }
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::group::direct_product;
    use crate::Limits;

    #[test]
    fn dihedral_three_is_s3() {
        let d3 = families::dihedral(3);
        let s3 = families::symmetric(3, &Limits::default()).unwrap();
        let iso = find_isomorphism(&d3, &s3).expect("D3 ≅ S3");
        assert!(iso.verify(&d3, &s3));
    }

    #[test]
    fn q8_is_not_d4() {
        let q8 = families::quaternion(8).unwrap();
        let d4 = families::dihedral(4);
        assert_ne!(q8.fingerprint(), d4.fingerprint());
        assert!(!is_isomorphic(&q8, &d4));
    }

    #[test]
    fn c4_is_not_klein() {
        let c2 = families::cyclic(2);
        let v4 = direct_product(&c2, &c2, &Limits::default()).unwrap();
        assert!(!is_isomorphic(&families::cyclic(4), &v4));
    }

    #[test]
    fn c2_times_c3_is_c6() {
        let p = direct_product(
            &families::cyclic(2),
            &families::cyclic(3),
            &Limits::default(),
        )
        .unwrap();
        let iso = find_isomorphism(&p, &families::cyclic(6)).unwrap();
        assert!(iso.verify(&p, &families::cyclic(6)));
    }

    #[test]
    fn abelian_and_nonabelian_of_equal_order() {
        let l = Limits::default();
        let a = direct_product(&families::cyclic(4), &families::cyclic(4), &l).unwrap();
        let b =
            direct_product(&families::quaternion(8).unwrap(), &families::cyclic(2), &l).unwrap();
        assert!(!is_isomorphic(&a, &b));
    }

    #[test]
    fn isomorphism_is_symmetric_on_reordered_tables() {
        let l = Limits::default();
        let a = direct_product(&families::dihedral(4), &families::cyclic(3), &l).unwrap();
        let b = direct_product(&families::cyclic(3), &families::dihedral(4), &l).unwrap();
        let ab = find_isomorphism(&a, &b).unwrap();
        let ba = find_isomorphism(&b, &a).unwrap();
        assert!(ab.verify(&a, &b));
        assert!(ba.verify(&b, &a));
    }
}
