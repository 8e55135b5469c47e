//! Serialization: JSON, LaTeX and plain text output, and a parser for
//! polynomial expressions.

mod json;
mod parse;
mod text;

pub use json::{expansion_to_json, from_json, from_json_str, to_json};
pub use parse::parse_expr;
pub use text::{to_latex, to_text};
