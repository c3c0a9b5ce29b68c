use alloc::format;
use alloc::string::ToString;

use serde::{Deserialize, Serialize};

use super::{Check, CheckFlag, CheckList};
use crate::construct::feasibility_of;
use crate::count::{self, BigCount};
use crate::error::{Error, Result};
use crate::group::{AltSym, GeneratedGroup};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExampleId {
    A39,
    A117,
    A208,
}

impl ExampleId {
    pub const ALL: [ExampleId; 3] = [ExampleId::A39, ExampleId::A117, ExampleId::A208];

    pub fn name(self) -> &'static str {
        match self {
            ExampleId::A39 => "a39",
            ExampleId::A117 => "a117",
            ExampleId::A208 => "a208",
        }
    }

    pub fn entry(self) -> &'static CatalogEntry {
        match self {
            ExampleId::A39 => &CATALOG[0],
            ExampleId::A117 => &CATALOG[1],
            ExampleId::A208 => &CATALOG[2],
        }
    }
}

impl core::str::FromStr for ExampleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExampleId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown example {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claimed {
    pub h_order: u64,
    pub h_center_order: u64,
    pub h_derived_order: u64,
    pub valency: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: ExampleId,
    pub degree: usize,
    pub paper_anchor: &'static str,
    /// Structure of `H` as printed
    pub h_structure: &'static str,
    pub claimed: Claimed,
}

pub const CATALOG: [CatalogEntry; 3] = [
    CatalogEntry {
        id: ExampleId::A39,
        degree: 39,
        paper_anchor: "Example 4.1",
        h_structure: "F_39",
        claimed: Claimed {
            h_order: 39,
            h_center_order: 1,
            h_derived_order: 13,
            valency: 13,
        },
    },
    CatalogEntry {
        id: ExampleId::A117,
        degree: 117,
        paper_anchor: "Example 4.2",
        h_structure: "Z_3×F_39",
        claimed: Claimed {
            h_order: 117,
            h_center_order: 3,
            h_derived_order: 13,
            valency: 13,
        },
    },
    CatalogEntry {
        id: ExampleId::A208,
        degree: 208,
        paper_anchor: "Example 4.3",
        h_structure: "Z_4×F_52",
        claimed: Claimed {
            h_order: 208,
            h_center_order: 4,
            h_derived_order: 13,
            valency: 13,
        },
    },
];

/// Parsed generators of one example.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExampleGenerators {
    pub x: Permutation,
    pub y: Permutation,
    pub g: Permutation,
    /// The printed `g` listing read as a product, when it differs from `g`.
    pub g_printed: Option<Permutation>,
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// The seven numbered clauses for one example, plus an eighth on any printed
/// `g` listing that is not itself an involution.
pub fn verify_example(entry: &CatalogEntry, gens: &ExampleGenerators, cap: &BigCount) -> Result<CheckList> {
    let n = entry.degree;
    let anchor = entry.paper_anchor;
    let c = &entry.claimed;
    let mut out = CheckList::new();

    let degrees_ok = [&gens.x, &gens.y, &gens.g].iter().all(|p| p.degree() == n);
    let even = [&gens.x, &gens.y, &gens.g].iter().all(|p| p.is_even());
    out.push(Check::new(
        "1. x, y, g even permutations of the stated degree",
        anchor,
        format!("degree {n}, all even"),
        format!(
            "degrees {}/{}/{}, parities {:?}/{:?}/{:?}",
            gens.x.degree(),
            gens.y.degree(),
            gens.g.degree(),
            gens.x.parity(),
            gens.y.parity(),
            gens.g.parity()
        ),
        degrees_ok && even,
    ));
    if !degrees_ok {
        return Ok(out);
    }

    let h = GeneratedGroup::new(n, alloc::vec![gens.x.clone(), gens.y.clone()])?;
    let h_order = h.order();
    out.push(Check::new(
        format!("2. |H| = {}", c.h_order),
        anchor,
        c.h_order.to_string(),
        h_order.to_string(),
        h_order == BigCount::from(c.h_order),
    ));

    let fp = h.fingerprint(cap)?;
    out.push(Check::new(
        format!("3. H ≅ {} fingerprint", entry.h_structure),
        anchor,
        format!(
            "nonabelian, center order {}, derived order {}",
            c.h_center_order, c.h_derived_order
        ),
        format!(
            "{}, center order {}, derived order {}",
            if fp.is_abelian { "abelian" } else { "nonabelian" },
            fp.center_order,
            fp.derived_order
        ),
        !fp.is_abelian
            && fp.center_order == BigCount::from(c.h_center_order)
            && fp.derived_order == BigCount::from(c.h_derived_order),
    ));

    let g_sq_in_h = h.contains(&(&gens.g * &gens.g))?;
    out.push(Check::new(
        "4. g is a 2-element with g² ∈ H",
        anchor,
        "2-power order, g² ∈ H",
        format!("order {}, g² ∈ H: {}", gens.g.order(), yes(g_sq_in_h)),
        gens.g.is_two_element() && g_sq_in_h,
    ));

    let x = h.with_generator(&gens.g)?;
    let x_order = x.order();
    let full = count::alternating_order(n as u64);
    let alt = x.recognize_alt_sym() == Some(AltSym::Alternating);
    out.push(Check::new(
        format!("5. ⟨H, g⟩ = A_{n}"),
        anchor,
        format!("alternating, order {n}!/2"),
        format!(
            "{}, order {}",
            match x.recognize_alt_sym() {
                Some(AltSym::Alternating) => "alternating",
                Some(AltSym::Symmetric) => "symmetric",
                None => "neither alternating nor symmetric",
            },
            if x_order == full {
                format!("{n}!/2")
            } else {
                x_order.to_string()
            }
        ),
        alt && x_order == full,
    ));

    let report = feasibility_of(&x, &h, &gens.g, cap)?;
    out.push(Check::new(
        format!("6. valency = {}", c.valency),
        anchor,
        format!("|H : H ∩ H^g| = {}", c.valency),
        format!("|H : H ∩ H^g| = {}", report.valency),
        report.valency as u64 == c.valency,
    ));

    out.push(Check::new(
        format!("7. H regular on {n} points"),
        anchor,
        "transitive and regular",
        format!(
            "transitive: {}, regular: {}",
            yes(h.is_transitive()),
            yes(h.is_regular())
        ),
        h.is_transitive() && h.is_regular(),
    ));

    if let Some(printed) = &gens.g_printed {
        // printed = g · g₂ with g₂ the second listed involution
        let rest = gens.g.inverse().compose(printed)?;
        let rest_ok = rest.order() == BigCount::from(2u32);
        let rest_feasible = rest_ok && feasibility_of(&x, &h, &rest, cap)?.feasible;
        out.push(
            Check::new(
                "8. printed g listing",
                anchor,
                "two involution lists; the first is used as g",
                format!(
                    "product of the printed listing has order {}, g² ∈ H: {}; second list an involution: {}, also feasible: {}",
                    printed.order(),
                    yes(h.contains(&(printed * printed))?),
                    yes(rest_ok),
                    yes(rest_feasible)
                ),
                rest_ok,
            )
            .flagged(CheckFlag::PaperDiscrepancy),
        );
    }
    Ok(out)
}
