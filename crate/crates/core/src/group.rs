//! Finite groups as Cayley tables over dense element indices.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::bitset::SubgroupSet;
use crate::error::{Error, Limits, Result};
use crate::iso::Fingerprint;

/// A finite group given by its full multiplication table.
///
/// Elements are the indices `0..order`. `mul(a, b)` is `a·b`. Tables built by
/// this crate's constructors are trusted; tables from outside go through
/// [`GroupTable::from_cayley`], which checks every group axiom.
#[derive(Clone)]
pub struct GroupTable {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<u32>,
    name: String,
    element_names: Option<Vec<String>>,
    permutations: Option<Vec<Vec<u32>>>,
    fingerprint: OnceLock<Fingerprint>,
    generators: OnceLock<Vec<usize>>,
}

/// The first group axiom violated by a candidate Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableDefect {
    EmptyTable,
    RowCount {
        expected: usize,
        found: usize,
    },
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    RowNotPermutation {
        row: usize,
    },
    ColumnNotPermutation {
        col: usize,
    },
    NoIdentity,
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
    },
    NamesLength {
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for TableDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TableDefect::EmptyTable => write!(f, "table has no elements"),
            TableDefect::RowCount { expected, found } => {
                write!(f, "expected {expected} rows, found {found}")
            }
            TableDefect::RowLength {
                row,
                expected,
                found,
            } => {
                write!(f, "row {row} has {found} entries, expected {expected}")
            }
            TableDefect::EntryOutOfRange { row, col, value } => {
                write!(f, "entry ({row}, {col}) = {value} is not an element index")
            }
            TableDefect::RowNotPermutation { row } => {
                write!(f, "row {row} is not a permutation of the elements")
            }
            TableDefect::ColumnNotPermutation { col } => {
                write!(f, "column {col} is not a permutation of the elements")
            }
            TableDefect::NoIdentity => write!(f, "no two-sided identity element"),
            TableDefect::NotAssociative { a, b, c } => {
                write!(f, "associativity fails at ({a}, {b}, {c})")
            }
            TableDefect::NamesLength { expected, found } => {
                write!(f, "expected {expected} element names, found {found}")
            }
        }
    }
}

impl From<TableDefect> for Error {
    fn from(d: TableDefect) -> Self {
        Error::InvalidTable(d.to_string())
    }
}

fn is_permutation(values: impl Iterator<Item = usize>, n: usize) -> bool {
    let mut seen = vec![false; n];
    for v in values {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Checks the group axioms on a flat row-major table and returns the identity.
fn validate_flat(order: usize, table: &[u32]) -> std::result::Result<usize, TableDefect> {
    if order == 0 {
        return Err(TableDefect::EmptyTable);
    }
    let at = |r: usize, c: usize| table[r * order + c] as usize;
    for row in 0..order {
        if !is_permutation((0..order).map(|c| at(row, c)), order) {
            return Err(TableDefect::RowNotPermutation { row });
        }
    }
    for col in 0..order {
        if !is_permutation((0..order).map(|r| at(r, col)), order) {
            return Err(TableDefect::ColumnNotPermutation { col });
        }
    }
    let identity = (0..order)
        .find(|&e| (0..order).all(|g| at(e, g) == g && at(g, e) == g))
        .ok_or(TableDefect::NoIdentity)?;
    for a in 0..order {
        for b in 0..order {
            let ab = at(a, b);
            for c in 0..order {
                if at(ab, c) != at(a, at(b, c)) {
                    return Err(TableDefect::NotAssociative { a, b, c });
                }
            }
        }
    }
    Ok(identity)
}

impl GroupTable {
    /// Builds a group from a trusted flat table. Inverses are derived.
    pub(crate) fn from_trusted(
        name: impl Into<String>,
        order: usize,
        table: Vec<u32>,
        identity: usize,
        element_names: Option<Vec<String>>,
    ) -> GroupTable {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![0u32; order];
        for x in 0..order {
            let row = &table[x * order..(x + 1) * order];
            let y = row
                .iter()
                .position(|&v| v as usize == identity)
                .expect("trusted table has inverses");
            inverse[x] = y as u32;
        }
        GroupTable {
            order,
            table,
            identity,
            inverse,
            name: name.into(),
            element_names,
            permutations: None,
            fingerprint: OnceLock::new(),
            generators: OnceLock::new(),
        }
    }

    /// Builds a group from an untrusted Cayley table, checking closure, the
    /// Latin-square property, the identity and associativity (O(n³)).
    pub fn from_cayley(
        name: impl Into<String>,
        table: &[Vec<usize>],
        element_names: Option<Vec<String>>,
    ) -> std::result::Result<GroupTable, TableDefect> {
        let order = table.len();
        if order == 0 {
            return Err(TableDefect::EmptyTable);
        }
        let mut flat = Vec::with_capacity(order * order);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != order {
                return Err(TableDefect::RowLength {
                    row,
                    expected: order,
                    found: entries.len(),
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= order {
                    return Err(TableDefect::EntryOutOfRange { row, col, value });
                }
                flat.push(value as u32);
            }
        }
        if let Some(names) = &element_names {
            if names.len() != order {
                return Err(TableDefect::NamesLength {
                    expected: order,
                    found: names.len(),
                });
            }
        }
        let identity = validate_flat(order, &flat)?;
        Ok(GroupTable::from_trusted(
            name,
            order,
            flat,
            identity,
            element_names,
        ))
    }

    /// Re-runs the full axiom check on this table.
    pub fn verify_axioms(&self) -> std::result::Result<(), TableDefect> {
        let e = validate_flat(self.order, &self.table)?;
        if e != self.identity {
            return Err(TableDefect::NoIdentity);
        }
        for x in 0..self.order {
            if self.mul(x, self.inv(x)) != self.identity {
                return Err(TableDefect::RowNotPermutation { row: x });
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn element_names(&self) -> Option<&[String]> {
        self.element_names.as_deref()
    }

    /// Display name of an element; falls back to its index.
    pub fn element_name(&self, x: usize) -> String {
        match &self.element_names {
            Some(names) => names[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.element_names.as_ref()?.iter().position(|n| n == name)
    }

    /// The permutation realizing element `x`, for groups built from permutations.
    pub fn permutation(&self, x: usize) -> Option<&[u32]> {
        self.permutations.as_ref().map(|p| p[x].as_slice())
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commutes(a, b)))
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        let mut acc = self.identity;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Smallest `k ≥ 1` with `x^k = 1`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Closure of `gens` under multiplication: the subgroup they generate.
    pub fn generate(&self, gens: &[usize]) -> SubgroupSet {
        let mut set = SubgroupSet::empty(self.order);
        set.insert(self.identity);
        self.extend_closure(&mut set, gens);
        set
    }

    /// Grows `set` (which must contain the identity) until it is closed under
    /// right multiplication by every element of `gens`.
    pub(crate) fn extend_closure(&self, set: &mut SubgroupSet, gens: &[usize]) {
        let mut queue: Vec<usize> = set.iter().collect();
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &s in gens {
                let y = self.mul(x, s);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
    }

    /// A small generating set chosen greedily: repeatedly take the element of
    /// largest order (lowest index on ties) outside the current span.
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| {
            let mut by_order: Vec<(usize, usize)> = (0..self.order)
                .map(|x| (self.element_order(x), x))
                .collect();
            by_order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            let mut gens = Vec::new();
            let mut span = self.generate(&[]);
            for (_, x) in by_order {
                if span.is_full() {
                    break;
                }
                if !span.contains(x) {
                    gens.push(x);
                    self.extend_closure(&mut span, &gens);
                }
            }
            gens
        })
    }

    pub fn fingerprint(&self) -> &Fingerprint {
        self.fingerprint.get_or_init(|| Fingerprint::compute(self))
    }

    /// `x·h·x⁻¹`
    pub fn conjugate(&self, x: usize, h: usize) -> usize {
        self.mul(self.mul(x, h), self.inv(x))
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

/// Cycle notation for a one-line permutation, `()` for the identity.
pub fn cycle_notation(perm: &[u32]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] as usize == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut i = perm[start] as usize;
        while i != start {
            seen[i] = true;
            cycle.push(i);
            i = perm[i] as usize;
        }
        out.push('(');
        out.push_str(
            &cycle
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// The group generated by permutations of `0..degree`.
///
/// Elements are numbered breadth-first from the identity, applying the
/// generators in list order. Products compose left to right: `(p·q)(i) = q(p(i))`.
pub fn build_from_generators(
    degree: usize,
    generators: &[Vec<usize>],
    limits: &Limits,
) -> Result<GroupTable> {
    let mut gens: Vec<Vec<u32>> = Vec::with_capacity(generators.len());
    for (gi, g) in generators.iter().enumerate() {
        if g.len() != degree {
            return Err(Error::NotAPermutation {
                generator: gi,
                degree,
                reason: format!("has {} images", g.len()),
            });
        }
        let mut seen = vec![false; degree];
        for &v in g {
            if v >= degree {
                return Err(Error::NotAPermutation {
                    generator: gi,
                    degree,
                    reason: format!("image {v} out of range"),
                });
            }
            if seen[v] {
                return Err(Error::NotAPermutation {
                    generator: gi,
                    degree,
                    reason: format!("duplicate image {v}"),
                });
            }
            seen[v] = true;
        }
        gens.push(g.iter().map(|&v| v as u32).collect());
    }

    let identity: Vec<u32> = (0..degree as u32).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
    index.insert(identity, 0);
    // parent[y] = (p, s) with element y = p·gens[s]
    let mut parent: Vec<(u32, u32)> = vec![(0, 0)];
    let mut right_mul: Vec<u32> = Vec::new();
    let ngens = gens.len();

    let mut head = 0;
    while head < elements.len() {
        for (si, s) in gens.iter().enumerate() {
            let y: Vec<u32> = elements[head].iter().map(|&i| s[i as usize]).collect();
            let yi = match index.get(&y) {
                Some(&yi) => yi,
                None => {
                    if elements.len() >= limits.order_cap {
                        return Err(Error::ClosureTooLarge {
                            cap: limits.order_cap,
                        });
                    }
                    let yi = elements.len() as u32;
                    index.insert(y.clone(), yi);
                    elements.push(y);
                    parent.push((head as u32, si as u32));
                    yi
                }
            };
            right_mul.push(yi);
        }
        head += 1;
    }

    let n = elements.len();
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        let row = &mut table[x * n..(x + 1) * n];
        row[0] = x as u32;
        for y in 1..n {
            let (p, s) = parent[y];
            let xp = row[p as usize] as usize;
            row[y] = right_mul[xp * ngens + s as usize];
        }
    }

    let names = elements.iter().map(|p| cycle_notation(p)).collect();
    let mut g = GroupTable::from_trusted(format!("perm({degree})"), n, table, 0, Some(names));
    g.permutations = Some(elements);
    Ok(g)
}

/// Direct product with componentwise multiplication; element `(a, b)` has
/// index `a·|h| + b`.
pub fn direct_product(g: &GroupTable, h: &GroupTable, limits: &Limits) -> Result<GroupTable> {
    let (m, k) = (g.order(), h.order());
    let n = m.checked_mul(k).ok_or(Error::ClosureTooLarge {
        cap: limits.order_cap,
    })?;
    if n > limits.order_cap {
        return Err(Error::ClosureTooLarge {
            cap: limits.order_cap,
        });
    }
    let mut table = vec![0u32; n * n];
    for a in 0..m {
        for b in 0..k {
            let x = a * k + b;
            for c in 0..m {
                let ac = g.mul(a, c) * k;
                for d in 0..k {
                    table[x * n + c * k + d] = (ac + h.mul(b, d)) as u32;
                }
            }
        }
    }
    let names = (0..n)
        .map(|x| format!("({},{})", g.element_name(x / k), h.element_name(x % k)))
        .collect();
    let identity = g.identity() * k + h.identity();
    Ok(GroupTable::from_trusted(
        format!("{} x {}", g.name(), h.name()),
        n,
        table,
        identity,
        Some(names),
    ))
}

/// The quotient `g / n` for a normal subgroup `n`.
///
/// Each coset is represented by its smallest element index; cosets are
/// numbered by ascending representative.
pub fn quotient(g: &GroupTable, n: &SubgroupSet) -> Result<GroupTable> {
    if !crate::subgroup::is_subgroup(g, n) {
        return Err(Error::NotASubgroup);
    }
    if !crate::subgroup::is_normal(g, n)? {
        return Err(Error::NotNormal);
    }
    let order = g.order();
    let mut coset_of = vec![u32::MAX; order];
    let mut reps = Vec::new();
    for x in 0..order {
        if coset_of[x] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for y in n.iter() {
            coset_of[g.mul(x, y)] = id;
        }
    }
    let q = reps.len();
    let mut table = vec![0u32; q * q];
    for (i, &ri) in reps.iter().enumerate() {
        for (j, &rj) in reps.iter().enumerate() {
            table[i * q + j] = coset_of[g.mul(ri, rj)];
        }
    }
    let names = reps
        .iter()
        .map(|&r| format!("[{}]", g.element_name(r)))
        .collect();
    let identity = coset_of[g.identity()] as usize;
    Ok(GroupTable::from_trusted(
        format!("{}/N", g.name()),
        q,
        table,
        identity,
        Some(names),
    ))
}

/// Restricts `g` to the subgroup `h`, renumbering its elements in ascending order.
pub fn subgroup_table(g: &GroupTable, h: &SubgroupSet) -> GroupTable {
    let members: Vec<usize> = h.iter().collect();
    let mut local = vec![u32::MAX; g.order()];
    for (i, &x) in members.iter().enumerate() {
        local[x] = i as u32;
    }
    let k = members.len();
    let mut table = vec![0u32; k * k];
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate() {
            table[i * k + j] = local[g.mul(a, b)];
        }
    }
    let names = members.iter().map(|&x| g.element_name(x)).collect();
    let mut sub = GroupTable::from_trusted(
        format!("subgroup of {}", g.name()),
        k,
        table,
        local[g.identity()] as usize,
        Some(names),
    );
    if let Some(perms) = &g.permutations {
        sub.permutations = Some(members.iter().map(|&x| perms[x].clone()).collect());
    }
    sub
}
