//! Alphabets, argument tuples, addressing and dense truth tables.

pub mod address;
pub mod alphabet;
pub mod count;
pub mod table;

pub use address::{address, table_len, tuple_from_address, ArgTuple};
pub use alphabet::{is_valid_symbol, Alphabet, Digit};
pub use count::{count_functions, SolutionCount};
pub use table::{cells_within, TruthTable, DEFAULT_CELL_BUDGET};
