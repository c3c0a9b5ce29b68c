//! Exact orders of the group families appearing in the catalog tables.
//!
//! | family      | order                                                        |
//! |-------------|--------------------------------------------------------------|
//! | `A_n`       | `n!/2` (`1` for `n < 2`)                                     |
//! | `S_n`       | `n!`                                                         |
//! | `Z_n`       | `n`                                                          |
//! | `D_n`       | `n` (the subscript is the order)                             |
//! | `F_n`       | `n`, for `n = 13k` with `k | 12`                              |
//! | `PSL(n,q)`  | `q^(n(n-1)/2) ∏_{i=2..n} (q^i - 1) / gcd(n, q-1)`            |
//! | `PSU(n,q)`  | `q^(n(n-1)/2) ∏_{i=2..n} (q^i - (-1)^i) / gcd(n, q+1)`       |
//! | `PSp(2m,q)` | `q^(m²) ∏_{i=1..m} (q^(2i) - 1) / gcd(2, q-1)`               |
//! | `M_n`       | stored constant                                              |
//!
//! Tags combine these with `×` (direct product), `:k` (extension by a group
//! of order `k`) and parentheses, e.g. `PSp(4,3):2` or `(A_13×A_12):Z_2`.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};

use num_integer::Integer;
use num_traits::{One, Pow};
use serde::{Deserialize, Serialize};

use crate::count::{self, BigCount};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum Family {
    Alternating { n: u64 },
    Symmetric { n: u64 },
    Cyclic { n: u64 },
    Dihedral { order: u64 },
    Frobenius { n: u64 },
    Psl { n: u64, q: u64 },
    Psu { n: u64, q: u64 },
    Psp { n: u64, q: u64 },
    Mathieu { n: u64 },
}

impl Family {
    /// Orders taken from a table rather than a formula.
    pub fn is_constant(&self) -> bool {
        matches!(self, Family::Mathieu { .. })
    }
}

impl core::fmt::Display for Family {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match *self {
            Family::Alternating { n } => write!(f, "A_{n}"),
            Family::Symmetric { n } => write!(f, "S_{n}"),
            Family::Cyclic { n } => write!(f, "Z_{n}"),
            Family::Dihedral { order } => write!(f, "D_{order}"),
            Family::Frobenius { n } => write!(f, "F_{n}"),
            Family::Psl { n, q } => write!(f, "PSL({n},{q})"),
            Family::Psu { n, q } => write!(f, "PSU({n},{q})"),
            Family::Psp { n, q } => write!(f, "PSp({n},{q})"),
            Family::Mathieu { n } => write!(f, "M_{n}"),
        }
    }
}

fn prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
    }
    r == 1
}

fn unsupported(f: &Family) -> Error {
    Error::UnsupportedFamily(f.to_string())
}

pub fn classical_order(family: Family) -> Result<BigCount> {
    let one = BigCount::one();
    Ok(match family {
        Family::Alternating { n } if n >= 1 => {
            if n < 2 {
                one
            } else {
                count::alternating_order(n)
            }
        }
        Family::Symmetric { n } if n >= 1 => count::factorial(n),
        Family::Cyclic { n } if n >= 1 => n.into(),
        Family::Dihedral { order } if order >= 4 && order % 2 == 0 => order.into(),
        Family::Frobenius { n } if n % 13 == 0 && n > 0 && 12 % (n / 13) == 0 => n.into(),
        Family::Psl { n, q } if n >= 2 && prime_power(q) => {
            let qb = BigCount::from(q);
            let mut order = Pow::pow(&qb, n * (n - 1) / 2);
            for i in 2..=n {
                order *= Pow::pow(&qb, i) - 1u32;
            }
            order / n.gcd(&(q - 1))
        }
        Family::Psu { n, q } if n >= 2 && prime_power(q) => {
            let qb = BigCount::from(q);
            let mut order = Pow::pow(&qb, n * (n - 1) / 2);
            for i in 2..=n {
                let qi = Pow::pow(&qb, i);
                order *= if i % 2 == 0 { qi - 1u32 } else { qi + 1u32 };
            }
            order / n.gcd(&(q + 1))
        }
        Family::Psp { n, q } if n >= 2 && n % 2 == 0 && prime_power(q) => {
            let m = n / 2;
            let qb = BigCount::from(q);
            let mut order = Pow::pow(&qb, m * m);
            for i in 1..=m {
                order *= Pow::pow(&qb, 2 * i) - 1u32;
            }
            order / 2u64.gcd(&(q - 1))
        }
        Family::Mathieu { n } => match n {
            11 => 7_920u64.into(),
            12 => 95_040u64.into(),
            22 => 443_520u64.into(),
            23 => 10_200_960u64.into(),
            24 => 244_823_040u64.into(),
            _ => return Err(unsupported(&family)),
        },
        _ => return Err(unsupported(&family)),
    })
}

/// A group structure written the way the tables print it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupTag {
    Family(Family),
    Direct(Box<GroupTag>, Box<GroupTag>),
    /// `base:k`, an extension of `base` by a group of order `k`
    Extension(Box<GroupTag>, u64),
}

impl GroupTag {
    pub fn parse(text: &str) -> Result<GroupTag> {
        let mut p = TagParser {
            s: text.as_bytes(),
            i: 0,
            text,
        };
        let tag = p.product()?;
        if p.i != p.s.len() {
            return Err(p.error("trailing input"));
        }
        Ok(tag)
    }

    pub fn order(&self) -> Result<BigCount> {
        match self {
            GroupTag::Family(f) => classical_order(*f),
            GroupTag::Direct(a, b) => Ok(a.order()? * b.order()?),
            GroupTag::Extension(a, k) => Ok(a.order()? * *k),
        }
    }

    pub fn uses_constant(&self) -> bool {
        match self {
            GroupTag::Family(f) => f.is_constant(),
            GroupTag::Direct(a, b) => a.uses_constant() || b.uses_constant(),
            GroupTag::Extension(a, _) => a.uses_constant(),
        }
    }
}

struct TagParser<'a> {
    s: &'a [u8],
    i: usize,
    text: &'a str,
}

impl TagParser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::UnsupportedFamily(format!("{what} at byte {} in {:?}", self.i, self.text))
    }

    fn rest(&self) -> &str {
        &self.text[self.i..]
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.i += token.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        self.text[start..self.i]
            .parse()
            .map_err(|_| self.error("expected a number"))
    }

    fn product(&mut self) -> Result<GroupTag> {
        let mut tag = self.extension()?;
        while self.eat("×") {
            let rhs = self.extension()?;
            tag = GroupTag::Direct(Box::new(tag), Box::new(rhs));
        }
        Ok(tag)
    }

    fn extension(&mut self) -> Result<GroupTag> {
        let mut tag = self.atom()?;
        while self.eat(":") {
            self.eat("Z_");
            let k = self.number()?;
            tag = GroupTag::Extension(Box::new(tag), k);
        }
        Ok(tag)
    }

    fn pair(&mut self) -> Result<(u64, u64)> {
        let n = self.number()?;
        if !self.eat(",") {
            return Err(self.error("expected ','"));
        }
        let q = self.number()?;
        if !self.eat(")") {
            return Err(self.error("expected ')'"));
        }
        Ok((n, q))
    }

    fn atom(&mut self) -> Result<GroupTag> {
        if self.eat("(") {
            let inner = self.product()?;
            if !self.eat(")") {
                return Err(self.error("expected ')'"));
            }
            return Ok(inner);
        }
        let family = if self.eat("PSL(") {
            let (n, q) = self.pair()?;
            Family::Psl { n, q }
        } else if self.eat("PSU(") {
            let (n, q) = self.pair()?;
            Family::Psu { n, q }
        } else if self.eat("PSp(") {
            let (n, q) = self.pair()?;
            Family::Psp { n, q }
        } else if self.eat("A_") {
            Family::Alternating { n: self.number()? }
        } else if self.eat("S_") {
            Family::Symmetric { n: self.number()? }
        } else if self.eat("Z_") {
            Family::Cyclic { n: self.number()? }
        } else if self.eat("D_") {
            Family::Dihedral { order: self.number()? }
        } else if self.eat("F_") {
            Family::Frobenius { n: self.number()? }
        } else if self.eat("M_") {
            Family::Mathieu { n: self.number()? }
        } else {
            return Err(self.error("unknown group family"));
        };
        Ok(GroupTag::Family(family))
    }
}

impl core::fmt::Display for GroupTag {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GroupTag::Family(x) => write!(f, "{x}"),
            GroupTag::Direct(a, b) => write!(f, "{}×{}", Wrapped(a), Wrapped(b)),
            GroupTag::Extension(a, k) => write!(f, "{}:{k}", Wrapped(a)),
        }
    }
}

struct Wrapped<'a>(&'a GroupTag);

impl core::fmt::Display for Wrapped<'_> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self.0 {
            GroupTag::Family(_) => write!(f, "{}", self.0),
            other => write!(f, "({other})"),
        }
    }
}

/// Order of a printed tag, as text for reports.
pub fn tag_order_string(tag: &str) -> String {
    match GroupTag::parse(tag).and_then(|t| t.order()) {
        Ok(o) => o.to_string(),
        Err(e) => e.to_string(),
    }
}
