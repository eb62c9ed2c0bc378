//! Worked-example tables and brute-force oracles shared by the integration
//! tests. The oracles only use table construction and per-cell lookup; they
//! never call the composer or the solvers.

#![allow(dead_code)]

use mvlf::{Alphabet, Digit, TruthTable};

pub fn abc() -> Alphabet {
    Alphabet::letters(3).unwrap()
}

pub fn table(alphabet: &Alphabet, arity: usize, values: &str) -> TruthTable {
    let symbols: Vec<&str> = values.split_whitespace().collect();
    TruthTable::from_symbols(alphabet.clone(), arity, &symbols).unwrap()
}

/// Unary quaternary function, rows 0..3 = a a c b.
pub fn quaternary_f() -> TruthTable {
    table(&Alphabet::letters(4).unwrap(), 1, "a a c b")
}

/// The three binary argument functions, columns of the 9-row table.
pub fn args_f() -> [TruthTable; 3] {
    let ab = abc();
    [
        table(&ab, 2, "a c c b b a a a b"),
        table(&ab, 2, "a c b a c a b a c"),
        table(&ab, 2, "c c b c c c b c b"),
    ]
}

/// The ternary transforming function, 27 rows.
pub fn transform_g() -> TruthTable {
    table(
        &abc(),
        3,
        "a a c c c a b a a \
         c b a c b a c b a \
         b b b a b a c c a",
    )
}

/// The resultant function, 9 rows.
pub fn result_y() -> TruthTable {
    table(&abc(), 2, "c a b a a c c c b")
}

/// Address of a tuple computed by Horner's rule with explicit digits.
fn horner(digits: &[Digit], radix: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * radix + d as usize)
}

/// All tuples of length `n` over `radix`, in lexicographic order, built by
/// nested expansion rather than address decoding.
pub fn all_tuples(radix: usize, n: usize) -> Vec<Vec<Digit>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..radix as Digit).map(move |d| {
                    let mut t = prefix.clone();
                    t.push(d);
                    t
                })
            })
            .collect();
    }
    out
}

/// Every table of the given alphabet and arity.
pub fn all_tables(alphabet: &Alphabet, arity: usize) -> Vec<TruthTable> {
    let cells = alphabet.radix().pow(arity as u32);
    all_tuples(alphabet.radix(), cells)
        .into_iter()
        .map(|values| TruthTable::new(alphabet.clone(), arity, values).unwrap())
        .collect()
}

/// Composition straight from the definition: evaluate every argument function
/// at x, then evaluate g at the collected tuple.
pub fn naive_compose(g: &TruthTable, args: &[TruthTable]) -> TruthTable {
    let n = args[0].arity();
    let radix = g.radix();
    let values = all_tuples(radix, n)
        .iter()
        .map(|x| {
            let z: Vec<Digit> = args.iter().map(|f| f.evaluate_digits(x).unwrap()).collect();
            g.values()[horner(&z, radix)]
        })
        .collect();
    TruthTable::new(g.alphabet().clone(), n, values).unwrap()
}

/// Cells of `g` that can be changed without altering the composition with
/// `args`.
pub fn free_cells_by_perturbation(g: &TruthTable, args: &[TruthTable]) -> Vec<usize> {
    let y = naive_compose(g, args);
    (0..g.len())
        .filter(|&k| {
            (0..g.radix() as Digit).all(|v| {
                let mut values = g.values().to_vec();
                values[k] = v;
                let g2 = TruthTable::new(g.alphabet().clone(), g.arity(), values).unwrap();
                naive_compose(&g2, args) == y
            })
        })
        .collect()
}
