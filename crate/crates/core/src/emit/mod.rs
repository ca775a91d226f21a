//! Polynomial input parsing and identity rendering (LaTeX, text, JSON).

mod parse;
mod render;

pub use parse::{parse_poly, parse_poly_in, PolyExpr};
pub use render::{poly_latex, poly_text, render_identity, render_table, sequence_symbol, Format};
