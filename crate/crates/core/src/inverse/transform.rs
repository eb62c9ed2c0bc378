//! Recovering the transforming function from its arguments and result.
//!
//! Each argument tuple `x` yields a z-tuple `(f_1(x), ..., f_m(x))`; the cell
//! of `g` at that z-address is bound to `y(x)`. Cells never reached are free,
//! and every way of filling them is a solution.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::mvcore::{
    cells_within, tuple_from_address, Alphabet, ArgTuple, Digit, SolutionCount, TruthTable,
    DEFAULT_CELL_BUDGET,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    Bound(Digit),
    Free,
}

impl Cell {
    pub fn is_bound(self) -> bool {
        matches!(self, Cell::Bound(_))
    }
}

/// A table whose cells are either fixed or open.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialTable {
    alphabet: Alphabet,
    arity: usize,
    cells: Vec<Cell>,
}

impl PartialTable {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, address: usize) -> Option<Cell> {
        self.cells.get(address).copied()
    }

    pub fn bound_addresses(&self) -> impl Iterator<Item = usize> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_bound())
            .map(|(k, _)| k)
    }

    pub fn free_addresses(&self) -> impl Iterator<Item = usize> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_bound())
            .map(|(k, _)| k)
    }

    /// The argument tuple of `g` at `address`.
    pub fn tuple_at(&self, address: usize) -> Result<ArgTuple> {
        tuple_from_address(address, self.alphabet.radix(), self.arity)
    }

    /// True when `table` agrees with every bound cell.
    pub fn admits(&self, table: &TruthTable) -> bool {
        table.alphabet() == &self.alphabet
            && table.arity() == self.arity
            && self
                .cells
                .iter()
                .zip(table.values())
                .all(|(cell, &v)| match cell {
                    Cell::Bound(b) => *b == v,
                    Cell::Free => true,
                })
    }
}

/// All transforming functions consistent with a set of arguments and a result.
#[derive(Debug, Clone)]
pub struct GSolution {
    partial: PartialTable,
    bound_count: usize,
    free_count: usize,
    solution_count: SolutionCount,
}

impl GSolution {
    pub fn partial(&self) -> &PartialTable {
        &self.partial
    }

    pub fn bound_count(&self) -> usize {
        self.bound_count
    }

    pub fn free_count(&self) -> usize {
        self.free_count
    }

    pub fn solution_count(&self) -> &SolutionCount {
        &self.solution_count
    }

    /// The completion at position `index` of [`GSolution::solutions`], or
    /// `None` when `index` is not below the solution count.
    pub fn completion(&self, index: &BigUint) -> Option<TruthTable> {
        if index >= self.solution_count.as_biguint() {
            return None;
        }
        let radix = BigUint::from(self.partial.alphabet.radix());
        let mut rest = index.clone();
        let mut values: Vec<Digit> = self
            .partial
            .cells
            .iter()
            .map(|c| match c {
                Cell::Bound(v) => *v,
                Cell::Free => 0,
            })
            .collect();
        for addr in self
            .partial
            .free_addresses()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
        {
            values[addr] = (&rest % &radix).to_u32().expect("digit below radix");
            rest /= &radix;
        }
        TruthTable::new(self.partial.alphabet.clone(), self.partial.arity, values).ok()
    }

    /// Every completion, ordered by the free-cell values read as a mixed-radix
    /// number with the lowest free address most significant.
    pub fn solutions(&self) -> GSolutions<'_> {
        GSolutions {
            partial: &self.partial,
            free: self.partial.free_addresses().collect(),
            odometer: vec![0; self.free_count],
            done: false,
        }
    }
}

pub fn solve_for_g(args: &[TruthTable], y: &TruthTable) -> Result<GSolution> {
    solve_for_g_with_budget(args, y, DEFAULT_CELL_BUDGET)
}

pub fn solve_for_g_with_budget(
    args: &[TruthTable],
    y: &TruthTable,
    cell_budget: usize,
) -> Result<GSolution> {
    let first = args.first().ok_or(Error::InvalidPosition {
        position: 0,
        arity: 0,
    })?;
    for f in args {
        f.ensure_same_alphabet(y)?;
        if f.arity() != y.arity() {
            return Err(Error::ArityMismatch {
                expected: y.arity(),
                found: f.arity(),
            });
        }
    }
    let alphabet = first.alphabet().clone();
    let radix = alphabet.radix();
    let m = args.len();
    let g_len = cells_within(radix, m, cell_budget)?;

    let mut cells = vec![Cell::Free; g_len];
    // first argument address that reached each z-address, for the witness
    let mut origin = vec![usize::MAX; g_len];
    let mut bound_count = 0;
    for (x, &target) in y.values().iter().enumerate() {
        let z = args
            .iter()
            .fold(0usize, |acc, f| acc * radix + f.values()[x] as usize);
        match cells[z] {
            Cell::Free => {
                cells[z] = Cell::Bound(target);
                origin[z] = x;
                bound_count += 1;
            }
            Cell::Bound(existing) if existing != target => {
                return Err(Error::Inconsistent {
                    first: origin[z],
                    second: x,
                    transform_address: z,
                });
            }
            Cell::Bound(_) => {}
        }
    }

    let free_count = g_len - bound_count;
    Ok(GSolution {
        partial: PartialTable {
            alphabet,
            arity: m,
            cells,
        },
        bound_count,
        free_count,
        solution_count: SolutionCount::power(radix, free_count),
    })
}

/// At most `limit` completions of `sol`, in [`GSolution::solutions`] order.
pub fn enumerate_g_solutions(sol: &GSolution, limit: usize) -> std::iter::Take<GSolutions<'_>> {
    sol.solutions().take(limit)
}

/// Iterator over the completions of a [`PartialTable`].
pub struct GSolutions<'a> {
    partial: &'a PartialTable,
    free: Vec<usize>,
    odometer: Vec<Digit>,
    done: bool,
}

impl Iterator for GSolutions<'_> {
    type Item = TruthTable;

    fn next(&mut self) -> Option<TruthTable> {
        if self.done {
            return None;
        }
        let mut values: Vec<Digit> = self
            .partial
            .cells
            .iter()
            .map(|c| match c {
                Cell::Bound(v) => *v,
                Cell::Free => 0,
            })
            .collect();
        for (&addr, &v) in self.free.iter().zip(&self.odometer) {
            values[addr] = v;
        }

        let radix = self.partial.alphabet.radix() as Digit;
        self.done = true;
        for digit in self.odometer.iter_mut().rev() {
            *digit += 1;
            if *digit < radix {
                self.done = false;
                break;
            }
            *digit = 0;
        }

        Some(
            TruthTable::new(self.partial.alphabet.clone(), self.partial.arity, values)
                .expect("completion of a valid partial table"),
        )
    }
}
