//! Textual group descriptions.
//!
//! Grammar (case-insensitive, whitespace around `x` optional):
//!
//! ```text
//! spec    := factor ( "x" factor )*          left-associative direct product
//! factor  := "C" n                           cyclic of order n ≥ 1
//!          | "D" m                           dihedral of order 2m, m ≥ 3
//!          | "Q" n                           generalized quaternion, n = 2^k ≥ 8
//!          | "S" n | "A" n                   symmetric / alternating, 1 ≤ n ≤ 6
//!          | "E" p "^" k                     elementary abelian p^k
//!          | "file:" path                    group file; consumes the rest of the input
//! ```

use std::fmt;
use std::path::PathBuf;

use crate::error::{Error, Limits, Result};
use crate::families::{self, is_prime, MAX_SYMMETRIC_DEGREE};
use crate::group::{direct_product, GroupTable};
use crate::groupfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Cyclic(usize),
    /// Dihedral of order `2m`.
    Dihedral(usize),
    /// Generalized quaternion; the parameter is the group order.
    Quaternion(usize),
    Symmetric(usize),
    Alternating(usize),
    ElementaryAbelian {
        p: usize,
        k: usize,
    },
}

impl Family {
    pub fn order(&self) -> Option<usize> {
        let factorial = |n: usize| (1..=n).try_fold(1usize, |a, b| a.checked_mul(b));
        match *self {
            Family::Cyclic(n) => Some(n),
            Family::Dihedral(m) => m.checked_mul(2),
            Family::Quaternion(n) => Some(n),
            Family::Symmetric(n) => factorial(n),
            Family::Alternating(n) => factorial(n).map(|f| if n >= 2 { f / 2 } else { f }),
            Family::ElementaryAbelian { p, k } => (0..k).try_fold(1usize, |a, _| a.checked_mul(p)),
        }
    }

    pub fn build(&self, limits: &Limits) -> Result<GroupTable> {
        match self.order() {
            Some(n) if n <= limits.order_cap => {}
            _ => {
                return Err(Error::ClosureTooLarge {
                    cap: limits.order_cap,
                })
            }
        }
        match *self {
            Family::Cyclic(n) => Ok(families::cyclic(n)),
            Family::Dihedral(m) => Ok(families::dihedral(m)),
            Family::Quaternion(n) => families::quaternion(n),
            Family::Symmetric(n) => families::symmetric(n, limits),
            Family::Alternating(n) => families::alternating(n, limits),
            Family::ElementaryAbelian { p, k } => families::elementary_abelian(p, k, limits),
        }
    }

    fn check(&self) -> std::result::Result<(), String> {
        match *self {
            Family::Cyclic(0) => Err("C0: cyclic order must be ≥ 1".into()),
            Family::Dihedral(m) if m < 3 => Err(format!("D{m}: dihedral parameter must be ≥ 3")),
            Family::Quaternion(n) if n < 8 || !n.is_power_of_two() => Err(format!(
                "Q{n}: generalized quaternion order must be a power of two ≥ 8"
            )),
            Family::Symmetric(n) | Family::Alternating(n) if n == 0 || n > MAX_SYMMETRIC_DEGREE => {
                Err(format!(
                    "{self}: degree must be in 1..={MAX_SYMMETRIC_DEGREE}"
                ))
            }
            Family::ElementaryAbelian { p, .. } if !is_prime(p) => {
                Err(format!("{self}: {p} is not prime"))
            }
            Family::ElementaryAbelian { k: 0, .. } => Err(format!("{self}: rank must be ≥ 1")),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Cyclic(n) => write!(f, "C{n}"),
            Family::Dihedral(m) => write!(f, "D{m}"),
            Family::Quaternion(n) => write!(f, "Q{n}"),
            Family::Symmetric(n) => write!(f, "S{n}"),
            Family::Alternating(n) => write!(f, "A{n}"),
            Family::ElementaryAbelian { p, k } => write!(f, "E{p}^{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SpecExpr {
    Family(Family),
    File(PathBuf),
    Product(Box<SpecExpr>, Box<SpecExpr>),
}

impl SpecExpr {
    pub fn order(&self) -> Option<usize> {
        match self {
            SpecExpr::Family(f) => f.order(),
            SpecExpr::File(_) => None,
            SpecExpr::Product(a, b) => a.order()?.checked_mul(b.order()?),
        }
    }
}

impl fmt::Display for SpecExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecExpr::Family(fam) => fam.fmt(f),
            SpecExpr::File(p) => write!(f, "file:{}", p.display()),
            SpecExpr::Product(a, b) => write!(f, "{a} x {b}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecKind {
    CatalogName,
    ProductExpression,
    FilePath,
}

/// A parsed group description together with the text it came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub raw: String,
    pub expr: SpecExpr,
}

impl GroupSpec {
    pub fn parse(s: &str) -> Result<GroupSpec> {
        let expr = Parser::new(s).parse()?;
        Ok(GroupSpec {
            raw: s.to_string(),
            expr,
        })
    }

    pub fn family(f: Family) -> GroupSpec {
        GroupSpec {
            raw: f.to_string(),
            expr: SpecExpr::Family(f),
        }
    }

    pub fn product(a: &GroupSpec, b: &GroupSpec) -> GroupSpec {
        let expr = SpecExpr::Product(Box::new(a.expr.clone()), Box::new(b.expr.clone()));
        GroupSpec {
            raw: expr.to_string(),
            expr,
        }
    }

    pub fn kind(&self) -> SpecKind {
        match self.expr {
            SpecExpr::Family(_) => SpecKind::CatalogName,
            SpecExpr::Product(..) => SpecKind::ProductExpression,
            SpecExpr::File(_) => SpecKind::FilePath,
        }
    }

    /// Order of the described group, when known without building it.
    pub fn order(&self) -> Option<usize> {
        self.expr.order()
    }

    /// Normalized text, e.g. `C2 x C2 x C3`.
    pub fn canonical(&self) -> String {
        self.expr.to_string()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.expr.fmt(f)
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupSpec> {
        GroupSpec::parse(s)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn err(&self, position: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn parse(mut self) -> Result<SpecExpr> {
        let mut expr = self.factor()?;
        loop {
            self.skip_ws();
            match self.chars.get(self.pos) {
                None => return Ok(expr),
                Some('x') | Some('X') => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    expr = SpecExpr::Product(Box::new(expr), Box::new(rhs));
                }
                Some(c) => {
                    return Err(self.err(
                        self.pos,
                        format!("expected `x` or end of input, found `{c}`"),
                    ))
                }
            }
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(start, "expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse()
            .map_err(|_| Error::ParameterOutOfRange(format!("{digits} is too large")))
    }

    fn factor(&mut self) -> Result<SpecExpr> {
        self.skip_ws();
        let start = self.pos;
        let head: String = self.chars[self.pos..].iter().take(5).collect();
        if head.eq_ignore_ascii_case("file:") {
            let rest: String = self.chars[self.pos + 5..].iter().collect();
            let path = rest.trim();
            if path.is_empty() {
                return Err(self.err(start + 5, "empty file path"));
            }
            self.pos = self.chars.len();
            return Ok(SpecExpr::File(PathBuf::from(path)));
        }
        let Some(&letter) = self.chars.get(self.pos) else {
            return Err(self.err(self.pos, "expected a group"));
        };
        self.pos += 1;
        let family = match letter.to_ascii_uppercase() {
            'C' => Family::Cyclic(self.number()?),
            'D' => Family::Dihedral(self.number()?),
            'Q' => Family::Quaternion(self.number()?),
            'S' => Family::Symmetric(self.number()?),
            'A' => Family::Alternating(self.number()?),
            'E' => {
                let p = self.number()?;
                if self.chars.get(self.pos) != Some(&'^') {
                    return Err(self.err(self.pos, "expected `^` in E<p>^<k>"));
                }
                self.pos += 1;
                let k = self.number()?;
                Family::ElementaryAbelian { p, k }
            }
            other => return Err(self.err(start, format!("unknown group family `{other}`"))),
        };
        family.check().map_err(Error::ParameterOutOfRange)?;
        Ok(SpecExpr::Family(family))
    }
}

/// Builds the group a spec describes.
pub fn catalog_group(spec: &GroupSpec, limits: &Limits) -> Result<GroupTable> {
    let g = build_expr(&spec.expr, limits)?;
    Ok(g.with_name(spec.canonical()))
}

fn build_expr(expr: &SpecExpr, limits: &Limits) -> Result<GroupTable> {
    match expr {
        SpecExpr::Family(f) => f.build(limits),
        SpecExpr::File(path) => groupfile::load_group_file(path, limits),
        SpecExpr::Product(a, b) => {
            if let Some(n) = expr.order() {
                if n > limits.order_cap {
                    return Err(Error::ClosureTooLarge {
                        cap: limits.order_cap,
                    });
                }
            }
            let ga = build_expr(a, limits)?;
            let gb = build_expr(b, limits)?;
            direct_product(&ga, &gb, limits)
        }
    }
}
