mod edges;
mod generators;

pub use edges::{parse_edge_list, write_edge_list};
pub use generators::{Directive, GeneratorFile};
