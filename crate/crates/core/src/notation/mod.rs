//! Game notations: the compact appendix form (input only), the verbose
//! expression language, and printers.

mod compact;
mod expr;
mod print;

pub use compact::parse_compact;
pub use expr::{parse_expr, parse_impartial, parse_partizan, Value};
pub use print::{print_game, print_pgame};
