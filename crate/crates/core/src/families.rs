//! Constructors for the named group families of the catalog.

use crate::error::{Error, Limits, Result};
use crate::group::{build_from_generators, GroupTable};

fn power_name(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn word(parts: &[String]) -> String {
    let w: String = parts.concat();
    if w.is_empty() {
        "1".to_string()
    } else {
        w
    }
}

/// The cyclic group of order `n ≥ 1`, generated by `g`.
pub fn cyclic(n: usize) -> GroupTable {
    assert!(n >= 1);
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = ((a + b) % n) as u32;
        }
    }
    let names = (0..n).map(|k| word(&[power_name("g", k)])).collect();
    GroupTable::from_trusted(format!("C{n}"), n, table, 0, Some(names))
}

/// The dihedral group of order `2m`, elements `r^i s^j` at index `i + m·j`.
pub fn dihedral(m: usize) -> GroupTable {
    assert!(m >= 1);
    let n = 2 * m;
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        let (i, j) = (x % m, x / m);
        for y in 0..n {
            let (k, l) = (y % m, y / m);
            // r^i s^j · r^k s^l = r^(i ± k) s^(j+l)
            let rot = if j == 0 { (i + k) % m } else { (i + m - k) % m };
            table[x * n + y] = (rot + m * ((j + l) % 2)) as u32;
        }
    }
    let names = (0..n)
        .map(|x| word(&[power_name("r", x % m), power_name("s", x / m)]))
        .collect();
    GroupTable::from_trusted(format!("D{m}"), n, table, 0, Some(names))
}

/// The generalized quaternion group of the given order `2^n`, `n ≥ 3`.
///
/// Elements are `a^i b^j` with `i ∈ Z_{2^(n-1)}`, `j ∈ {0,1}`, stored at index
/// `i + 2^(n-1)·j`, and multiplied by the dicyclic rule `b a = a⁻¹ b`,
/// `b² = a^(2^(n-2))`. The defining relations are checked before returning.
pub fn quaternion(order: usize) -> Result<GroupTable> {
    if order < 8 || !order.is_power_of_two() {
        return Err(Error::ParameterOutOfRange(format!(
            "generalized quaternion order must be a power of two ≥ 8, got {order}"
        )));
    }
    let m = order / 2;
    let half = m / 2;
    let n = order;
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        let (i, j) = (x % m, x / m);
        for y in 0..n {
            let (k, l) = (y % m, y / m);
            let idx = match (j, l) {
                (0, _) => (i + k) % m + m * l,
                (_, 0) => (i + m - k) % m + m,
                _ => (i + m - k + half) % m,
            };
            table[x * n + y] = idx as u32;
        }
    }
    let names = (0..n)
        .map(|x| word(&[power_name("a", x % m), power_name("b", x / m)]))
        .collect();
    let g = GroupTable::from_trusted(format!("Q{order}"), n, table, 0, Some(names));

    let a = g.element_by_name("a").expect("a");
    let b = g.element_by_name("b").expect("b");
    let e = g.identity();
    assert_eq!(g.pow(a, half as u64), g.pow(b, 2), "a^(2^(n-2)) = b^2");
    assert_eq!(g.pow(a, m as u64), e, "a^(2^(n-1)) = 1");
    assert_eq!(g.element_order(a), m);
    assert_eq!(g.mul(g.mul(g.inv(b), a), b), g.inv(a), "b^-1 a b = a^-1");
    Ok(g)
}

pub const MAX_SYMMETRIC_DEGREE: usize = 6;

fn check_degree(family: &str, n: usize) -> Result<()> {
    if n == 0 || n > MAX_SYMMETRIC_DEGREE {
        return Err(Error::ParameterOutOfRange(format!(
            "{family}{n}: degree must be in 1..={MAX_SYMMETRIC_DEGREE}"
        )));
    }
    Ok(())
}

/// `S_n` on `0..n`, generated by the `n`-cycle and the transposition `(0 1)`.
pub fn symmetric(n: usize, limits: &Limits) -> Result<GroupTable> {
    check_degree("S", n)?;
    let mut gens = vec![(0..n).collect::<Vec<_>>()];
    if n >= 2 {
        gens = vec![(0..n).map(|i| (i + 1) % n).collect()];
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(0, 1);
        gens.push(t);
    }
    Ok(build_from_generators(n, &gens, limits)?.with_name(format!("S{n}")))
}

/// `A_n` on `0..n`, generated by the 3-cycles `(0 1 k)`.
pub fn alternating(n: usize, limits: &Limits) -> Result<GroupTable> {
    check_degree("A", n)?;
    let mut gens: Vec<Vec<usize>> = (2..n)
        .map(|k| {
            let mut p: Vec<usize> = (0..n).collect();
            p[0] = 1;
            p[1] = k;
            p[k] = 0;
            p
        })
        .collect();
    if gens.is_empty() {
        gens.push((0..n).collect());
    }
    Ok(build_from_generators(n, &gens, limits)?.with_name(format!("A{n}")))
}

pub fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// The elementary abelian group `(Z_p)^k`; element index is the base-`p`
/// number whose digits are the coordinates.
pub fn elementary_abelian(p: usize, k: usize, limits: &Limits) -> Result<GroupTable> {
    if !is_prime(p) {
        return Err(Error::ParameterOutOfRange(format!(
            "E{p}^{k}: {p} is not prime"
        )));
    }
    if k == 0 {
        return Err(Error::ParameterOutOfRange(format!(
            "E{p}^{k}: rank must be ≥ 1"
        )));
    }
    let n = (0..k)
        .try_fold(1usize, |acc, _| acc.checked_mul(p))
        .filter(|&n| n <= limits.order_cap)
        .ok_or(Error::ClosureTooLarge {
            cap: limits.order_cap,
        })?;
    let digits = |mut x: usize| {
        let mut d = vec![0; k];
        for slot in d.iter_mut() {
            *slot = x % p;
            x /= p;
        }
        d
    };
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        let dx = digits(x);
        for y in 0..n {
            let dy = digits(y);
            let mut z = 0;
            for i in (0..k).rev() {
                z = z * p + (dx[i] + dy[i]) % p;
            }
            table[x * n + y] = z as u32;
        }
    }
    let names = (0..n)
        .map(|x| {
            let d = digits(x);
            format!(
                "({})",
                d.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    Ok(GroupTable::from_trusted(
        format!("E{p}^{k}"),
        n,
        table,
        0,
        Some(names),
    ))
}
