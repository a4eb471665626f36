//! The algebra `TL_∞(0)`: generators `T_i` (`i ∈ ℤ`) subject to `T_i² = 0`,
//! `T_i T_j = T_j T_i` for `|i - j| > 1` and `T_i T_{i±1} T_i = T_i`.

pub mod diagram;
pub mod element;
pub mod fcs;
pub mod witness;

pub use diagram::{
    diagram_product, generator_diagram, word_to_diagram, Endpoint, PlanarMatching, Side, TlDiagram,
};
pub use element::{element_multiply, TlElement};
pub use fcs::{enumerate_fcs, normal_form_of, normalize, FcsWord, MAX_TABLE_GENERATORS};
pub use witness::{faithfulness_witness, min_witness_p, minimal_part, witness_partition};
