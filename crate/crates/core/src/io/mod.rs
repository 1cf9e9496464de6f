//! Corpus file formats: graph6 lines and binary planar_code streams.

pub mod graph6;
pub mod planar_code;

pub use graph6::{parse_graph6, read_graph6_lines, write_graph6};
pub use planar_code::{parse_planar_code, write_planar_code, PlanarCodeRecords};
