//! Tabulated data for 13-valent symmetric graphs and the checks that replay it.

mod check;
mod examples;
mod orders;
mod stab;
mod table1;

pub use check::{Check, CheckFlag, CheckList};
pub use examples::{verify_example, CatalogEntry, Claimed, ExampleGenerators, ExampleId, CATALOG};
pub use orders::{classical_order, tag_order_string, Family, GroupTag};
pub use stab::{check_stabilizer_table, StabTableRow, INSOLUBLE_STABILIZERS, STAB_BOUND, STAB_TABLE};
pub use table1::{alternating_index, check_table1, Table1Row, NONNORMAL_CANDIDATES, TABLE1, UNDECIDED};
