//! Many-valued logic functions given as truth tables.
//!
//! Functions over an alphabet of `r` symbols are stored densely in mixed-radix
//! address order. On top of that representation the crate provides
//! evaluation, composition `y(x) = g(f_1(x), ..., f_m(x))`, and solvers for
//! the two inverse problems: recovering `g` from the `f_k` and `y`, and
//! recovering unknown `f_k` from `g`, `y` and the known arguments.

pub mod cli;
pub mod composer;
pub mod error;
pub mod inverse;
pub mod mvcore;
pub mod tablestore;

pub use composer::{compose, compose_tables, evaluate, Composer, CompositionSpec};
pub use error::{Error, Result, SpecViolation};
pub use inverse::{
    count_f_solutions, enumerate_f_solutions, enumerate_g_solutions, solve_for_f, solve_for_g,
    Cell, FSolutionSpace, GSolution, PartialTable,
};
pub use mvcore::{
    address, count_functions, tuple_from_address, Alphabet, ArgTuple, Digit, SolutionCount,
    TruthTable,
};
