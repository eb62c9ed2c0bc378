//! Recovering unknown argument functions from the transform and the result.
//!
//! The unknown functions are unconstrained maps of `x`, so the problem splits
//! into one independent constraint per argument address: the values of the
//! unknowns at `x`, merged with the known values at `x`, must select a cell of
//! `g` holding `y(x)`. Each address gets the set of such value tuples.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::mvcore::{
    cells_within, tuple_from_address, Alphabet, ArgTuple, Digit, SolutionCount, TruthTable,
    DEFAULT_CELL_BUDGET,
};

/// Per-address admissible assignments to the unknown positions.
#[derive(Debug, Clone)]
pub struct FSolutionSpace {
    alphabet: Alphabet,
    arity: usize,
    unknown: Vec<usize>,
    // each entry is an assignment code: the unknown values read as a
    // mixed-radix number, first unknown position most significant
    admissible: Vec<Vec<usize>>,
    solution_count: SolutionCount,
}

impl FSolutionSpace {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Arity `n` of the argument functions.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// 0-based positions of the unknown argument functions, ascending.
    pub fn unknown_positions(&self) -> &[usize] {
        &self.unknown
    }

    pub fn solution_count(&self) -> &SolutionCount {
        &self.solution_count
    }

    pub fn has_solution(&self) -> bool {
        !self.solution_count.is_zero()
    }

    pub fn admissible_len(&self, address: usize) -> usize {
        self.admissible[address].len()
    }

    /// Admissible value tuples (one value per unknown position) at `address`.
    pub fn admissible_at(&self, address: usize) -> Result<Vec<ArgTuple>> {
        let set = self
            .admissible
            .get(address)
            .ok_or(Error::AddressOutOfRange {
                address,
                len: self.admissible.len(),
            })?;
        set.iter()
            .map(|&code| tuple_from_address(code, self.alphabet.radix(), self.unknown.len()))
            .collect()
    }

    /// Complete assignments in lexicographic order of the per-address choices,
    /// address 0 most significant.
    pub fn solutions(&self) -> FSolutions<'_> {
        FSolutions {
            space: self,
            odometer: vec![0; self.admissible.len()],
            done: !self.has_solution(),
        }
    }
}

pub fn solve_for_f(
    g: &TruthTable,
    y: &TruthTable,
    known: &BTreeMap<usize, TruthTable>,
) -> Result<FSolutionSpace> {
    solve_for_f_with_budget(g, y, known, DEFAULT_CELL_BUDGET)
}

/// `known` maps 0-based argument positions of `g` to their tables; every other
/// position is unknown. The total work `r^n * r^u` for `u` unknowns is bounded
/// by `cell_budget`.
pub fn solve_for_f_with_budget(
    g: &TruthTable,
    y: &TruthTable,
    known: &BTreeMap<usize, TruthTable>,
    cell_budget: usize,
) -> Result<FSolutionSpace> {
    g.ensure_same_alphabet(y)?;
    let m = g.arity();
    let n = y.arity();
    let radix = g.radix();
    for (&position, f) in known {
        if position >= m {
            return Err(Error::InvalidPosition { position, arity: m });
        }
        f.ensure_same_alphabet(g)?;
        if f.arity() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: f.arity(),
            });
        }
    }
    let unknown: Vec<usize> = (0..m).filter(|p| !known.contains_key(p)).collect();
    let x_len = y.len();
    let choices = cells_within(radix, unknown.len(), cell_budget)?;
    if x_len.checked_mul(choices).is_none_or(|w| w > cell_budget) {
        return Err(Error::ResourceLimit {
            radix,
            arity: n + unknown.len(),
            budget: cell_budget,
        });
    }

    // weight of each position in the z-address
    let weights: Vec<usize> = (0..m).map(|p| radix.pow((m - 1 - p) as u32)).collect();
    // z-address offset contributed by each unknown-assignment code
    let offsets: Vec<usize> = (0..choices)
        .map(|code| {
            let mut rest = code;
            let mut offset = 0;
            for &p in unknown.iter().rev() {
                offset += (rest % radix) * weights[p];
                rest /= radix;
            }
            offset
        })
        .collect();

    let g_values = g.values();
    let admissible: Vec<Vec<usize>> = (0..x_len)
        .map(|x| {
            let base: usize = known
                .iter()
                .map(|(&p, f)| f.values()[x] as usize * weights[p])
                .sum();
            let target = y.values()[x];
            offsets
                .iter()
                .enumerate()
                .filter(|(_, &off)| g_values[base + off] == target)
                .map(|(code, _)| code)
                .collect()
        })
        .collect();

    let solution_count = admissible
        .iter()
        .map(|set| SolutionCount::from(set.len() as u64))
        .product();

    Ok(FSolutionSpace {
        alphabet: g.alphabet().clone(),
        arity: n,
        unknown,
        admissible,
        solution_count,
    })
}

pub fn count_f_solutions(space: &FSolutionSpace) -> SolutionCount {
    space.solution_count.clone()
}

/// At most `limit` assignments of `space`, in [`FSolutionSpace::solutions`] order.
pub fn enumerate_f_solutions(
    space: &FSolutionSpace,
    limit: usize,
) -> std::iter::Take<FSolutions<'_>> {
    space.solutions().take(limit)
}

/// Iterator over complete assignments; each item holds one table per unknown
/// position, aligned with [`FSolutionSpace::unknown_positions`].
pub struct FSolutions<'a> {
    space: &'a FSolutionSpace,
    odometer: Vec<usize>,
    done: bool,
}

impl Iterator for FSolutions<'_> {
    type Item = Vec<TruthTable>;

    fn next(&mut self) -> Option<Vec<TruthTable>> {
        if self.done {
            return None;
        }
        let space = self.space;
        let radix = space.alphabet.radix();
        let u = space.unknown.len();
        let mut columns: Vec<Vec<Digit>> = vec![Vec::with_capacity(space.admissible.len()); u];
        for (set, &choice) in space.admissible.iter().zip(&self.odometer) {
            let mut code = set[choice];
            for column in columns.iter_mut().rev() {
                column.push((code % radix) as Digit);
                code /= radix;
            }
        }

        self.done = true;
        for (slot, set) in self.odometer.iter_mut().zip(&space.admissible).rev() {
            *slot += 1;
            if *slot < set.len() {
                self.done = false;
                break;
            }
            *slot = 0;
        }

        Some(
            columns
                .into_iter()
                .map(|values| {
                    TruthTable::new(space.alphabet.clone(), space.arity, values)
                        .expect("admissible values are valid digits")
                })
                .collect(),
        )
    }
}
