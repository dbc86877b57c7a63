//! Defective colouring of planar graphs: rotation-system graphs, exact
//! colourability decisions, obstruction gadgets, discharging audits and a
//! constructive `(5,5)`-colourer for planar graphs without 4-cycles.

pub mod color;
pub mod colorer;
pub mod corpus;
pub mod discharging;
pub mod gadgets;
pub mod graph;
pub mod io;
pub mod par;
