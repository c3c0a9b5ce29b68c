use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::orders::{Family, GroupTag};
use super::{Check, CheckList};
use crate::count::{self, BigCount};
use crate::error::{Error, Result};
use crate::group::{cyclic, direct_product, frobenius_13, GeneratedGroup};

pub const STAB_BOUND: u64 = 1872;

const ANCHOR: &str = "Lemma 2.3";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabTableRow {
    pub s: u8,
    pub structure_tag: &'static str,
}

/// Soluble vertex stabilizers of 13-valent `(G, s)`-transitive graphs.
pub const STAB_TABLE: &[StabTableRow] = &[
    StabTableRow {
        s: 1,
        structure_tag: "Z_13",
    },
    StabTableRow {
        s: 1,
        structure_tag: "F_26",
    },
    StabTableRow {
        s: 1,
        structure_tag: "F_39",
    },
    StabTableRow {
        s: 1,
        structure_tag: "F_52",
    },
    StabTableRow {
        s: 1,
        structure_tag: "F_78",
    },
    StabTableRow {
        s: 1,
        structure_tag: "F_26×Z_2",
    },
    StabTableRow {
        s: 1,
        structure_tag: "F_39×Z_3",
    },
    StabTableRow {
        s: 1,
        structure_tag: "F_52×Z_2",
    },
    StabTableRow {
        s: 1,
        structure_tag: "F_52×Z_4",
    },
    StabTableRow {
        s: 1,
        structure_tag: "F_78×Z_2",
    },
    StabTableRow {
        s: 1,
        structure_tag: "F_78×Z_3",
    },
    StabTableRow {
        s: 1,
        structure_tag: "F_78×Z_6",
    },
    StabTableRow {
        s: 2,
        structure_tag: "F_156",
    },
    StabTableRow {
        s: 2,
        structure_tag: "F_156×Z_2",
    },
    StabTableRow {
        s: 2,
        structure_tag: "F_156×Z_3",
    },
    StabTableRow {
        s: 2,
        structure_tag: "F_156×Z_4",
    },
    StabTableRow {
        s: 2,
        structure_tag: "F_156×Z_6",
    },
    StabTableRow {
        s: 3,
        structure_tag: "F_156×Z_12",
    },
];

/// Insoluble stabilizers, kept as data.
pub const INSOLUBLE_STABILIZERS: &[&str] = &[
    "A_13",
    "S_13",
    "A_13×A_12",
    "(A_13×A_12):Z_2",
    "S_13×S_12",
    "s=2: (9:Z_l)×PSL(3,3), Z_l ≤ Z_2",
    "s=2: O_3(G_α).Z_l.PSL(3,3), Z_l ≤ Z_2",
    "s=3: (Z_3:Z_l.PSL(2,3).O)×PSL(3,3), Z_l ≤ Z_2, O ≤ Z_2",
    "s=3: O_3(G_α).Z_l.((PSL(2,3).O)×PSL(3,3)), Z_l ≤ Z_2, O ≤ Z_2",
];

impl StabTableRow {
    /// `(k, m)` for `F_{13k} × Z_m`; `Z_13` is `F_13`.
    pub fn shape(&self) -> Result<(usize, usize)> {
        let frob = |t: &GroupTag| match t {
            GroupTag::Family(Family::Frobenius { n }) if n % 13 == 0 => Some(*n as usize / 13),
            GroupTag::Family(Family::Cyclic { n: 13 }) => Some(1),
            _ => None,
        };
        let tag = GroupTag::parse(self.structure_tag)?;
        let shape = match &tag {
            GroupTag::Direct(a, b) => match (frob(a), &**b) {
                (Some(k), GroupTag::Family(Family::Cyclic { n })) => Some((k, *n as usize)),
                _ => None,
            },
            t => frob(t).map(|k| (k, 1)),
        };
        shape.ok_or_else(|| Error::UnsupportedFamily(self.structure_tag.to_string()))
    }

    pub fn order(&self) -> Result<BigCount> {
        GroupTag::parse(self.structure_tag)?.order()
    }

    /// `F_{13k} × Z_m` as a permutation group on `13 + m` points (13 when `m = 1`).
    pub fn construct(&self) -> Result<GeneratedGroup> {
        let (k, m) = self.shape()?;
        let f = frobenius_13(k)?;
        if m == 1 {
            Ok(f)
        } else {
            direct_product(&f, &cyclic(m)?)
        }
    }
}

pub fn check_stabilizer_table() -> Result<CheckList> {
    let bound = BigCount::from(STAB_BOUND);
    let cap = BigCount::from(STAB_BOUND);
    let mut out = CheckList::new();
    let mut max = BigCount::one();
    for row in STAB_TABLE {
        let (k, _) = row.shape()?;
        let group = row.construct()?;
        let fp = group.fingerprint(&cap)?;
        let formula = row.order()?;
        let derived = if k > 1 { 13u32 } else { 1 };
        let pass = fp.order == formula && count::divides(&fp.order, &bound) && fp.derived_order == derived.into();
        out.push(Check::new(
            format!("stabilizer s={} {}", row.s, row.structure_tag),
            ANCHOR,
            format!("order {formula} divides {STAB_BOUND}, derived order {derived}"),
            format!("order {}, derived order {}", fp.order, fp.derived_order),
            pass,
        ));
        if row.s == 3 {
            out.push(Check::new(
                format!("s=3 row {} attains the bound", row.structure_tag),
                ANCHOR,
                format!("order {STAB_BOUND}"),
                format!("order {}", fp.order),
                fp.order == bound,
            ));
        }
        if fp.order > max {
            max = fp.order.clone();
        }
    }
    out.push(Check::new(
        "largest soluble stabilizer",
        ANCHOR,
        format!("{STAB_BOUND}"),
        max.to_string(),
        max == bound,
    ));
    let mut ks: Vec<usize> = STAB_TABLE
        .iter()
        .filter_map(|r| r.shape().ok())
        .map(|(k, _)| k)
        .collect();
    ks.sort_unstable();
    ks.dedup();
    for k in ks {
        let f = frobenius_13(k)?;
        let stab = f.point_stabilizer(0)?.order();
        out.push(Check::new(
            format!("F_{} transitive on 13 points", 13 * k),
            ANCHOR,
            format!("transitive, point stabilizer order {k}"),
            format!("transitive {}, point stabilizer order {stab}", f.is_transitive()),
            f.is_transitive() && stab == BigCount::from(k),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_and_orders() {
        let row = StabTableRow {
            s: 1,
            structure_tag: "F_78×Z_6",
        };
        assert_eq!(row.shape().unwrap(), (6, 6));
        assert_eq!(row.order().unwrap(), BigCount::from(468u32));
        assert_eq!(row.construct().unwrap().order(), BigCount::from(468u32));
        let z13 = StabTableRow {
            s: 1,
            structure_tag: "Z_13",
        };
        assert_eq!(z13.shape().unwrap(), (1, 1));
        assert_eq!(z13.construct().unwrap().order(), BigCount::from(13u32));
    }

    #[test]
    fn every_row_divides_bound() {
        for row in STAB_TABLE {
            let o = row.order().unwrap();
            assert!(count::divides(&o, &BigCount::from(STAB_BOUND)), "{}", row.structure_tag);
        }
    }

    #[test]
    fn table_check_passes() {
        let list = check_stabilizer_table().unwrap();
        assert!(list.pass(), "{:?}", list.first_failure());
        assert!(list.checks.len() > STAB_TABLE.len());
    }

    #[test]
    fn insoluble_tags_with_formulas_parse() {
        for tag in &INSOLUBLE_STABILIZERS[..5] {
            assert!(GroupTag::parse(tag).unwrap().order().unwrap() > BigCount::from(STAB_BOUND));
        }
    }
}
