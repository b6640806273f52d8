//! Group catalogs: named families, optional two-factor products, optional
//! deduplication up to isomorphism.

use std::collections::BTreeMap;

use crate::error::{Error, Limits};
use crate::group::{direct_product, GroupTable};
use crate::iso::{is_isomorphic, Fingerprint};
use crate::lab::run_parallel;
use crate::spec::{catalog_group, Family, GroupSpec};

#[derive(Debug, Clone)]
pub struct Catalog {
    pub specs: Vec<GroupSpec>,
    pub max_order: usize,
    /// Add every product `X x Y` of two catalog specs with order ≤ `max_order`.
    pub include_products: bool,
    /// Keep only the first member of each isomorphism class.
    pub dedup: bool,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub spec: GroupSpec,
    pub group: Result<GroupTable, Error>,
}

impl CatalogEntry {
    pub fn order(&self) -> Option<usize> {
        self.group.as_ref().ok().map(|g| g.order())
    }
}

/// The named families of order at most `max_order`: `S3`, `S4`, `A4`, `A5`,
/// cyclic `C2..`, dihedral `D3..`, generalized quaternion and elementary
/// abelian `E p^k` with `k ≥ 2`. Under deduplication the earlier name wins,
/// so `S3` is kept over `D3`.
pub fn default_families(max_order: usize) -> Vec<GroupSpec> {
    let mut fams = vec![
        Family::Symmetric(3),
        Family::Symmetric(4),
        Family::Alternating(4),
        Family::Alternating(5),
    ];
    fams.extend((2..=max_order).map(Family::Cyclic));
    fams.extend((3..=max_order / 2).map(Family::Dihedral));
    fams.extend(
        (3..usize::BITS)
            .map(|n| 1usize << n)
            .take_while(|&n| n <= max_order)
            .map(Family::Quaternion),
    );
    for p in (2..=max_order).filter(|&p| crate::families::is_prime(p)) {
        let mut k = 2;
        while p.checked_pow(k).is_some_and(|n| n <= max_order) {
            fams.push(Family::ElementaryAbelian { p, k: k as usize });
            k += 1;
        }
    }
    fams.into_iter()
        .filter(|f| f.order().is_some_and(|n| n <= max_order))
        .map(GroupSpec::family)
        .collect()
}

/// `S5`, `A6` and `S6`: beyond the default subgroup-enumeration cap.
pub fn large_families() -> Vec<GroupSpec> {
    [
        Family::Symmetric(5),
        Family::Alternating(6),
        Family::Symmetric(6),
    ]
    .into_iter()
    .map(GroupSpec::family)
    .collect()
}

impl Catalog {
    pub fn new(specs: Vec<GroupSpec>, max_order: usize) -> Catalog {
        Catalog {
            specs,
            max_order,
            include_products: false,
            dedup: false,
        }
    }

    /// Named families plus two-factor products, deduplicated.
    pub fn default_catalog(max_order: usize) -> Catalog {
        Catalog {
            specs: default_families(max_order),
            max_order,
            include_products: true,
            dedup: true,
        }
    }

    /// Builds every catalog group. Entries are sorted by `(order, spec)`;
    /// entries that fail to build are kept with their error.
    pub fn resolve(&self, limits: &Limits, jobs: usize) -> Vec<CatalogEntry> {
        let wanted: Vec<&GroupSpec> = self
            .specs
            .iter()
            .filter(|s| s.order().is_none_or(|n| n <= self.max_order))
            .collect();
        let mut entries: Vec<CatalogEntry> = run_parallel(jobs, &wanted, |s| CatalogEntry {
            spec: (*s).clone(),
            group: catalog_group(s, limits),
        });
        entries.retain(|e| e.order().is_none_or(|n| n <= self.max_order));

        if self.include_products {
            let built: Vec<(&GroupSpec, &GroupTable)> = entries
                .iter()
                .filter_map(|e| e.group.as_ref().ok().map(|g| (&e.spec, g)))
                .filter(|(_, g)| g.order() >= 2)
                .collect();
            let mut pairs = Vec::new();
            for i in 0..built.len() {
                for j in i..built.len() {
                    if built[i].1.order() * built[j].1.order() <= self.max_order {
                        pairs.push((i, j));
                    }
                }
            }
            let products = run_parallel(jobs, &pairs, |&(i, j)| {
                let spec = GroupSpec::product(built[i].0, built[j].0);
                let group = direct_product(built[i].1, built[j].1, limits)
                    .map(|g| g.with_name(spec.canonical()));
                CatalogEntry { spec, group }
            });
            entries.extend(products);
        }

        if self.dedup {
            entries = dedup_by_isomorphism(entries, jobs);
        }
        entries.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.spec.canonical().cmp(&b.spec.canonical()))
        });
        entries
    }
}

/// Keeps the first entry of each isomorphism class, in input order.
fn dedup_by_isomorphism(entries: Vec<CatalogEntry>, jobs: usize) -> Vec<CatalogEntry> {
    let prints: Vec<Option<Fingerprint>> = run_parallel(jobs, &entries, |e| {
        e.group.as_ref().ok().map(|g| g.fingerprint().clone())
    });
    let mut buckets: BTreeMap<&Fingerprint, Vec<usize>> = BTreeMap::new();
    for (i, fp) in prints.iter().enumerate() {
        if let Some(fp) = fp {
            buckets.entry(fp).or_default().push(i);
        }
    }
    let bucket_list: Vec<&Vec<usize>> = buckets.values().collect();
    let duplicate_lists: Vec<Vec<usize>> = run_parallel(jobs, &bucket_list, |members| {
        let mut reps: Vec<usize> = Vec::new();
        let mut dups = Vec::new();
        for &i in members.iter() {
            let gi = entries[i].group.as_ref().expect("fingerprinted");
            let seen = reps
                .iter()
                .any(|&r| is_isomorphic(gi, entries[r].group.as_ref().expect("fingerprinted")));
            if seen {
                dups.push(i);
            } else {
                reps.push(i);
            }
        }
        dups
    });
    let mut drop = vec![false; entries.len()];
    for i in duplicate_lists.into_iter().flatten() {
        drop[i] = true;
    }
    entries
        .into_iter()
        .zip(drop)
        .filter_map(|(e, d)| (!d).then_some(e))
        .collect()
}
