//! Evaluation and composition of truth tables.
//!
//! `compose` computes `y(x) = g(f_1(x), ..., f_m(x))` for every argument
//! tuple `x`: the values of the argument functions at `x` form a z-tuple,
//! whose address selects the value of `g`.

use crate::error::{Error, Result, SpecViolation};
use crate::mvcore::{cells_within, ArgTuple, Digit, TruthTable, DEFAULT_CELL_BUDGET};

/// Value of `f` at `tuple`.
pub fn evaluate(f: &TruthTable, tuple: &ArgTuple) -> Result<Digit> {
    f.evaluate(tuple)
}

/// A validated transforming function together with its argument functions.
#[derive(Debug, Clone)]
pub struct CompositionSpec {
    transform: TruthTable,
    args: Vec<TruthTable>,
}

impl CompositionSpec {
    pub fn new(transform: TruthTable, args: Vec<TruthTable>) -> Result<Self> {
        let m = transform.arity();
        if m == 0 {
            return Err(SpecViolation::NullaryTransform.into());
        }
        if args.len() != m {
            return Err(SpecViolation::ArgumentCount {
                expected: m,
                found: args.len(),
            }
            .into());
        }
        let n = args[0].arity();
        for (position, f) in args.iter().enumerate() {
            if f.alphabet() != transform.alphabet() {
                return Err(SpecViolation::AlphabetMismatch { position }.into());
            }
            if f.arity() != n {
                return Err(SpecViolation::ArityMismatch {
                    position,
                    expected: n,
                    found: f.arity(),
                }
                .into());
            }
        }
        Ok(CompositionSpec { transform, args })
    }

    pub fn transform(&self) -> &TruthTable {
        &self.transform
    }

    pub fn args(&self) -> &[TruthTable] {
        &self.args
    }

    /// Arity `n` of the argument functions and of the result.
    pub fn arity(&self) -> usize {
        self.args[0].arity()
    }
}

/// Materializes compositions, refusing results larger than `cell_budget`.
#[derive(Debug, Clone, Copy)]
pub struct Composer {
    pub cell_budget: usize,
}

impl Default for Composer {
    fn default() -> Self {
        Composer {
            cell_budget: DEFAULT_CELL_BUDGET,
        }
    }
}

impl Composer {
    pub fn with_budget(cell_budget: usize) -> Self {
        Composer { cell_budget }
    }

    pub fn compose(&self, spec: &CompositionSpec) -> Result<TruthTable> {
        let g = spec.transform();
        let radix = g.radix();
        let len = cells_within(radix, spec.arity(), self.cell_budget)?;
        let g_values = g.values();
        let values = (0..len)
            .map(|x| {
                // z-address accumulated directly from the argument values at x
                let z = spec
                    .args()
                    .iter()
                    .fold(0usize, |acc, f| acc * radix + f.values()[x] as usize);
                g_values[z]
            })
            .collect();
        TruthTable::new(g.alphabet().clone(), spec.arity(), values)
    }
}

/// Composes with the default cell budget.
pub fn compose(spec: &CompositionSpec) -> Result<TruthTable> {
    Composer::default().compose(spec)
}

/// Validates and composes in one step.
pub fn compose_tables(transform: &TruthTable, args: &[TruthTable]) -> Result<TruthTable> {
    let spec = CompositionSpec::new(transform.clone(), args.to_vec())?;
    compose(&spec)
}

/// Applies a unary function to every value of `f`.
pub fn map_values(unary: &TruthTable, f: &TruthTable) -> Result<TruthTable> {
    if unary.arity() != 1 {
        return Err(Error::ArityMismatch {
            expected: 1,
            found: unary.arity(),
        });
    }
    compose_tables(unary, std::slice::from_ref(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mvcore::Alphabet;

    fn abc() -> Alphabet {
        Alphabet::letters(3).unwrap()
    }

    #[test]
    fn nullary_transform_rejected() {
        let g = TruthTable::constant(abc(), 0, 1).unwrap();
        assert!(matches!(
            CompositionSpec::new(g, vec![]),
            Err(Error::CompositionSpec(SpecViolation::NullaryTransform))
        ));
    }

    #[test]
    fn argument_count_checked() {
        let g = TruthTable::projection(abc(), 2, 0).unwrap();
        let f = TruthTable::constant(abc(), 1, 0).unwrap();
        assert!(matches!(
            CompositionSpec::new(g, vec![f]),
            Err(Error::CompositionSpec(SpecViolation::ArgumentCount {
                expected: 2,
                found: 1
            }))
        ));
    }

    #[test]
    fn alphabet_and_arity_checked() {
        let g = TruthTable::projection(abc(), 2, 0).unwrap();
        let f = TruthTable::constant(abc(), 1, 0).unwrap();
        let f2 = TruthTable::constant(abc(), 2, 0).unwrap();
        let other = TruthTable::constant(Alphabet::new(["x", "y", "z"]).unwrap(), 1, 0).unwrap();
        assert!(matches!(
            CompositionSpec::new(g.clone(), vec![f.clone(), other]),
            Err(Error::CompositionSpec(SpecViolation::AlphabetMismatch {
                position: 1
            }))
        ));
        assert!(matches!(
            CompositionSpec::new(g, vec![f, f2]),
            Err(Error::CompositionSpec(SpecViolation::ArityMismatch {
                position: 1,
                ..
            }))
        ));
    }

    #[test]
    fn identity_permutation_is_neutral() {
        let id = TruthTable::from_fn(abc(), 1, |t| t[0]).unwrap();
        let f = TruthTable::from_symbols(abc(), 2, &["c", "a", "b", "a", "a", "c", "c", "c", "b"])
            .unwrap();
        assert_eq!(map_values(&id, &f).unwrap(), f);
    }

    #[test]
    fn arity_zero_arguments() {
        let g = TruthTable::from_fn(abc(), 2, |t| (t[0] + t[1]) % 3).unwrap();
        let one = TruthTable::constant(abc(), 0, 1).unwrap();
        let two = TruthTable::constant(abc(), 0, 2).unwrap();
        let y = compose_tables(&g, &[one, two]).unwrap();
        assert_eq!(y.arity(), 0);
        assert_eq!(y.values(), [0]);
    }

    #[test]
    fn budget_is_enforced() {
        let g = TruthTable::projection(abc(), 1, 0).unwrap();
        let f = TruthTable::constant(abc(), 3, 0).unwrap();
        let spec = CompositionSpec::new(g, vec![f]).unwrap();
        assert!(matches!(
            Composer::with_budget(26).compose(&spec),
            Err(Error::ResourceLimit { budget: 26, .. })
        ));
        assert!(Composer::with_budget(27).compose(&spec).is_ok());
    }
}
