//! Finite bounded lattices of element sets ordered by inclusion.
//!
//! The order relation is stored densely: for every node the set of nodes
//! above it and the set of nodes below it, as bitsets over node ids. Node ids
//! follow the `(size, bitset value)` order of the payloads, so `x ≤ y`
//! implies `id(x) ≤ id(y)`, the bottom is node 0 and the top is the last node.

use std::collections::HashMap;

use crate::bitset::SubgroupSet;
use crate::error::{Error, Result};

pub type NodeId = usize;

#[derive(Debug, Clone)]
pub struct BoundedLattice {
    nodes: Vec<SubgroupSet>,
    up: Vec<SubgroupSet>,
    down: Vec<SubgroupSet>,
    hasse: Vec<(NodeId, NodeId)>,
}

/// The interval `[lower, upper] = {z : lower ≤ z ≤ upper}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lower: NodeId,
    pub upper: NodeId,
    pub members: Vec<NodeId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainClass {
    pub is_chain: bool,
    /// Node count minus one when the lattice is a chain.
    pub length: Option<usize>,
}

impl BoundedLattice {
    /// Builds the lattice on a meet-closed family of sets with a unique
    /// minimum and maximum. Duplicates are dropped.
    pub fn build(elements: Vec<SubgroupSet>) -> Result<BoundedLattice> {
        let mut nodes = elements;
        nodes.sort();
        nodes.dedup();
        let n = nodes.len();
        if n == 0 {
            return Err(Error::EmptyLattice);
        }
        let parent = nodes[0].parent_order();
        if nodes.iter().any(|s| s.parent_order() != parent) {
            return Err(Error::InvalidTable(
                "lattice payloads from different groups".into(),
            ));
        }

        let mut up = vec![SubgroupSet::empty(n); n];
        let mut down = vec![SubgroupSet::empty(n); n];
        for i in 0..n {
            for j in i..n {
                if nodes[i].is_subset(&nodes[j]) {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        let all = SubgroupSet::full(n);
        if up[0] != all {
            return Err(Error::NoUniqueBound("minimum"));
        }
        if down[n - 1] != all {
            return Err(Error::NoUniqueBound("maximum"));
        }

        let index: HashMap<&SubgroupSet, NodeId> =
            nodes.iter().enumerate().map(|(i, s)| (s, i)).collect();
        for i in 0..n {
            for j in 0..i {
                if !index.contains_key(&nodes[i].intersection(&nodes[j])) {
                    return Err(Error::NotMeetClosed(j, i));
                }
            }
        }

        let mut lattice = BoundedLattice {
            nodes,
            up,
            down,
            hasse: Vec::new(),
        };
        debug_assert!(lattice.order_is_partial());
        lattice.hasse = lattice.transitive_reduction();
        Ok(lattice)
    }

    fn order_is_partial(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| {
            self.up[i].contains(i)
                && self.up[i].iter().all(|j| {
                    (j == i || !self.up[j].contains(i)) && self.up[j].is_subset(&self.up[i])
                })
        })
    }

    fn transitive_reduction(&self) -> Vec<(NodeId, NodeId)> {
        let mut edges = Vec::new();
        for i in 0..self.len() {
            let mut strict = self.up[i].clone();
            strict.remove(i);
            let mut covers = strict.clone();
            for k in strict.iter() {
                let mut above_k = self.up[k].clone();
                above_k.remove(k);
                covers.difference_with(&above_k);
            }
            edges.extend(covers.iter().map(|j| (i, j)));
        }
        edges
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[SubgroupSet] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &SubgroupSet {
        &self.nodes[id]
    }

    pub fn id_of(&self, set: &SubgroupSet) -> Option<NodeId> {
        self.nodes.binary_search(set).ok()
    }

    pub fn bottom(&self) -> NodeId {
        0
    }

    pub fn top(&self) -> NodeId {
        self.len() - 1
    }

    #[inline]
    pub fn leq(&self, x: NodeId, y: NodeId) -> bool {
        self.up[x].contains(y)
    }

    /// Nodes `≥ x`, as a bitset over node ids.
    pub fn up_set(&self, x: NodeId) -> &SubgroupSet {
        &self.up[x]
    }

    /// Nodes `≤ x`, as a bitset over node ids.
    pub fn down_set(&self, x: NodeId) -> &SubgroupSet {
        &self.down[x]
    }

    /// Cover pairs `(lower, upper)`, sorted.
    pub fn hasse_edges(&self) -> &[(NodeId, NodeId)] {
        &self.hasse
    }

    pub fn atoms(&self) -> Vec<NodeId> {
        self.hasse
            .iter()
            .filter(|&&(lo, _)| lo == self.bottom())
            .map(|&(_, hi)| hi)
            .collect()
    }

    pub fn coatoms(&self) -> Vec<NodeId> {
        let top = self.top();
        let mut out: Vec<NodeId> = self
            .hasse
            .iter()
            .filter(|&&(_, hi)| hi == top)
            .map(|&(lo, _)| lo)
            .collect();
        out.sort_unstable();
        out
    }

    /// Largest common lower bound.
    pub fn meet(&self, x: NodeId, y: NodeId) -> NodeId {
        let common = self.down[x].intersection(&self.down[y]);
        let ids: Vec<NodeId> = common.iter().collect();
        *ids.iter()
            .rev()
            .find(|&&c| common.is_subset(&self.down[c]))
            .expect("bounded lattice has meets")
    }

    /// Smallest common upper bound.
    pub fn join(&self, x: NodeId, y: NodeId) -> NodeId {
        let common = self.up[x].intersection(&self.up[y]);
        common
            .iter()
            .find(|&c| common.is_subset(&self.up[c]))
            .expect("bounded lattice has joins")
    }

    pub fn interval(&self, x: NodeId, y: NodeId) -> Result<Interval> {
        if !self.leq(x, y) {
            return Err(Error::NotComparable(x, y));
        }
        Ok(Interval {
            lower: x,
            upper: y,
            members: self.up[x].intersection(&self.down[y]).iter().collect(),
        })
    }

    fn proper_nodes(&self) -> std::ops::Range<NodeId> {
        if self.len() <= 2 {
            1..1
        } else {
            1..self.len() - 1
        }
    }

    /// Proper nodes comparable with every node.
    pub fn breaking_points(&self) -> Vec<NodeId> {
        let by_comparison: Vec<NodeId> = self
            .proper_nodes()
            .filter(|&h| (0..self.len()).all(|x| self.leq(x, h) || self.leq(h, x)))
            .collect();
        let by_intervals = self.breaking_points_by_intervals();
        assert_eq!(
            by_comparison, by_intervals,
            "breaking-point formulations disagree"
        );
        by_comparison
    }

    /// Proper nodes `h` with `[bottom, h] ∪ [h, top]` covering the lattice.
    fn breaking_points_by_intervals(&self) -> Vec<NodeId> {
        let (bottom, top) = (self.bottom(), self.top());
        self.proper_nodes()
            .filter(|&h| {
                let below = self.interval(bottom, h).expect("bottom ≤ h").members;
                let above = self.interval(h, top).expect("h ≤ top").members;
                below.len() + above.len() - 1 == self.len()
            })
            .collect()
    }

    /// Every ordered pair `(M, N)` of proper nodes such that each node lies
    /// below `M` or above `N`, in lexicographic order.
    pub fn interval_decompositions(&self) -> Vec<(NodeId, NodeId)> {
        let mut out = Vec::new();
        for m in self.proper_nodes() {
            for n in self.proper_nodes() {
                if self.down[m].union_len(&self.up[n]) == self.len() {
                    out.push((m, n));
                }
            }
        }
        out
    }

    pub fn chain_classification(&self) -> ChainClass {
        let is_chain = (0..self.len()).all(|x| self.up[x].union_len(&self.down[x]) == self.len());
        ChainClass {
            is_chain,
            length: is_chain.then(|| self.len() - 1),
        }
    }
}
