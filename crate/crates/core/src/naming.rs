//! Human-readable isomorphism-type labels for groups and subgroups.

use crate::bitset::SubgroupSet;
use crate::error::Limits;
use crate::families;
use crate::group::{subgroup_table, GroupTable};
use crate::iso::is_isomorphic;

fn prime_factors(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Invariant factors `d1 | d2 | … | dr` of an abelian group (empty for the
/// trivial group).
pub fn abelian_invariants(g: &GroupTable) -> Vec<usize> {
    debug_assert!(g.is_abelian());
    // per prime: exponents of the cyclic p-primary factors, descending
    let mut primary: Vec<(usize, Vec<u32>)> = Vec::new();
    for (p, a) in prime_factors(g.order()) {
        // ranks[k-1] = number of factors of order ≥ p^k
        let mut ranks = Vec::new();
        let mut prev_log = 0u32;
        let mut k = 1u32;
        while prev_log < a {
            let q = (p as u64).pow(k);
            let count = g
                .elements()
                .filter(|&x| g.pow(x, q) == g.identity())
                .count();
            let log = count.ilog(p);
            ranks.push(log - prev_log);
            prev_log = log;
            k += 1;
        }
        let r0 = ranks[0] as usize;
        let exps: Vec<u32> = (0..r0)
            .map(|i| ranks.iter().filter(|&&r| r as usize > i).count() as u32)
            .collect();
        primary.push((p, exps));
    }
    let r = primary.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut factors = vec![1usize; r];
    for (p, exps) in &primary {
        for (i, &e) in exps.iter().enumerate() {
            factors[r - 1 - i] *= p.pow(e);
        }
    }
    factors
}

fn abelian_label(g: &GroupTable) -> String {
    let inv = abelian_invariants(g);
    match inv.as_slice() {
        [] => "1".to_string(),
        [n] => format!("C{n}"),
        [2, 2] => "V4".to_string(),
        _ => {
            let p = inv[0];
            if inv.iter().all(|&d| d == p) && families::is_prime(p) {
                format!("E{p}^{}", inv.len())
            } else {
                inv.iter()
                    .map(|d| format!("C{d}"))
                    .collect::<Vec<_>>()
                    .join("x")
            }
        }
    }
}

/// Label for the isomorphism type of `g`: `1`, `C12`, `V4`, `E2^3`, `C2xC6`,
/// `S4`, `A5`, `D6`, `Q16`, or `G<order>` when no named family matches.
pub fn identify(g: &GroupTable) -> String {
    let n = g.order();
    if n == 1 {
        return "1".to_string();
    }
    if g.fingerprint().abelian {
        return abelian_label(g);
    }
    let limits = Limits::default();
    let factorial = |k: usize| (1..=k).product::<usize>();
    for k in 3..=families::MAX_SYMMETRIC_DEGREE {
        if factorial(k) == n {
            let s = families::symmetric(k, &limits).expect("degree in range");
            if is_isomorphic(g, &s) {
                return format!("S{k}");
            }
        }
        if k >= 4 && factorial(k) / 2 == n {
            let a = families::alternating(k, &limits).expect("degree in range");
            if is_isomorphic(g, &a) {
                return format!("A{k}");
            }
        }
    }
    if n.is_multiple_of(2) && n >= 6 && is_isomorphic(g, &families::dihedral(n / 2)) {
        return format!("D{}", n / 2);
    }
    if n >= 8 && n.is_power_of_two() {
        let q = families::quaternion(n).expect("power of two");
        if is_isomorphic(g, &q) {
            return format!("Q{n}");
        }
    }
    format!("G{n}")
}

fn is_full_symmetric(g: &GroupTable) -> Option<usize> {
    let degree = g.permutation(0)?.len();
    let factorial: usize = (1..=degree).product();
    (degree >= 2 && g.order() == factorial).then_some(degree)
}

fn is_even(perm: &[u32]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut transpositions = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i] as usize;
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

/// Label for a subgroup `h` of `g`. Inside a symmetric group, the subgroup
/// of even permutations is called `A<n>` even when it is cyclic (`A3`).
pub fn subgroup_label(g: &GroupTable, h: &SubgroupSet) -> String {
    if h.len() == 1 {
        return "1".to_string();
    }
    if let Some(degree) = is_full_symmetric(g) {
        let even = g
            .elements()
            .filter(|&x| is_even(g.permutation(x).expect("permutation group")));
        if h.len() * 2 == g.order()
            && even.clone().count() == h.len()
            && even.into_iter().all(|x| h.contains(x))
        {
            return format!("A{degree}");
        }
    }
    identify(&subgroup_table(g, h))
}
