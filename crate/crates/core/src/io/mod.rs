//! Text formats: graph6, edge lists and the JSON schemas used by the CLI.

mod edgelist;
mod graph6;
mod json;

pub use edgelist::{emit_edge_list, parse_edge_list};
pub use graph6::{code_to_graph6, emit_graph6, parse_graph6, GRAPH6_MAX_N};
pub use json::{
    deck_from_json, deck_to_json, format_rational, parse_rational, polynomial_from_json, polynomial_to_json,
    separation_to_json, three_cards_from_json, three_cards_to_json, verification_to_json, weighted_card_to_json,
    weighted_from_json, weighted_to_json,
};
