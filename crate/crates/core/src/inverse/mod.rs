//! The two reverse problems of composition: find the transforming function
//! given its arguments and result, or find unknown argument functions given
//! the transforming function and the result.

pub mod arguments;
pub mod transform;

pub use arguments::{
    count_f_solutions, enumerate_f_solutions, solve_for_f, solve_for_f_with_budget, FSolutionSpace,
    FSolutions,
};
pub use transform::{
    enumerate_g_solutions, solve_for_g, solve_for_g_with_budget, Cell, GSolution, GSolutions,
    PartialTable,
};
