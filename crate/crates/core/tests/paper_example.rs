//! The worked example: three binary ternary functions fed through a ternary
//! transforming function of three variables.

mod common;

use std::collections::BTreeMap;

use common::*;
use mvlf::tablestore::{
    emit_text, emit_vector_line, parse_text, to_binary_bytes, StoredTable, VectorOrder,
};
use mvlf::{
    compose_tables, count_f_solutions, count_functions, enumerate_f_solutions,
    enumerate_g_solutions, solve_for_f, solve_for_g, ArgTuple, Cell, Error, TruthTable,
};
use num_bigint::BigUint;

#[test]
fn fixtures_agree_with_definition() {
    assert_eq!(naive_compose(&transform_g(), &args_f()), result_y());
}

#[test]
fn composition_reproduces_result_table() {
    let y = compose_tables(&transform_g(), &args_f()).unwrap();
    assert_eq!(y, result_y());
    assert_eq!(
        y.symbol_values().collect::<Vec<_>>(),
        ["c", "a", "b", "a", "a", "c", "c", "c", "b"]
    );
}

#[test]
fn single_point_trace() {
    let ab = abc();
    let x = ArgTuple::from_symbols(&ab, &["a", "a"]).unwrap();
    let z: Vec<_> = args_f().iter().map(|f| f.evaluate(&x).unwrap()).collect();
    assert_eq!(
        ArgTuple::new(z.clone()).to_symbols(&ab).unwrap(),
        ["a", "a", "c"]
    );
    assert_eq!(
        transform_g().evaluate_symbols(&["a", "a", "c"]).unwrap(),
        "c"
    );
    assert_eq!(result_y().evaluate(&x).unwrap(), ab.index_of("c").unwrap());
}

#[test]
fn quaternary_lookup() {
    let f = quaternary_f();
    assert_eq!(f.evaluate_symbols(&["d"]).unwrap(), "b");
    assert_eq!(f.evaluate_symbols(&["a"]).unwrap(), "a");
    assert_eq!(count_functions(4, 1).unwrap(), 256);
}

#[test]
fn notation() {
    assert_eq!(
        emit_vector_line(&quaternary_f(), VectorOrder::Paper),
        "[b c a a]"
    );
    assert_eq!(
        emit_vector_line(&quaternary_f(), VectorOrder::Table),
        "[a a c b]"
    );
    assert_eq!(
        emit_vector_line(&result_y(), VectorOrder::Paper),
        "[b c c c a a b a c]"
    );
    assert!(emit_text(&quaternary_f()).ends_with("\na a c b\n"));
    assert!(emit_text(&result_y()).ends_with("\nc a b a a c c c b\n"));
    assert_eq!(
        parse_text(&emit_text(&transform_g())).unwrap(),
        transform_g()
    );
}

#[test]
fn binary_size_of_quaternary_function() {
    assert_eq!(to_binary_bytes(&quaternary_f()).unwrap().len(), 29);
}

#[test]
fn stored_lookups() {
    let g = StoredTable::open(to_binary_bytes(&transform_g()).unwrap()).unwrap();
    assert_eq!(g.evaluate_symbols(&["a", "a", "c"]).unwrap(), "c");
    let f = StoredTable::open(to_binary_bytes(&quaternary_f()).unwrap()).unwrap();
    assert_eq!(f.evaluate_symbols(&["a"]).unwrap(), "a");
}

#[test]
fn transform_recovery_bound_cells() {
    let args = args_f();
    let g = transform_g();
    let sol = solve_for_g(&args, &result_y()).unwrap();

    // independent derivation: the cells of g that cannot be perturbed
    let free = free_cells_by_perturbation(&g, &args);
    let bound: Vec<usize> = (0..27).filter(|k| !free.contains(k)).collect();
    assert_eq!(bound, [2, 4, 11, 16, 17, 22, 26]);

    assert_eq!(sol.partial().bound_addresses().collect::<Vec<_>>(), bound);
    for k in &bound {
        assert_eq!(sol.partial().cell(*k), Some(Cell::Bound(g.values()[*k])));
    }
    let letters: Vec<_> = bound
        .iter()
        .map(|&k| g.alphabet().symbol(g.values()[k]).unwrap())
        .collect();
    assert_eq!(letters, ["c", "c", "a", "b", "a", "b", "a"]);

    assert_eq!(sol.bound_count(), 7);
    assert_eq!(sol.free_count(), free.len());
    assert_eq!(sol.free_count(), 20);
    assert_eq!(
        *sol.solution_count().as_biguint(),
        BigUint::from(3u32).pow(free.len() as u32)
    );
    assert_eq!(*sol.solution_count(), 3_486_784_401);
}

#[test]
fn transform_recovery_first_solutions_compose_back() {
    let args = args_f();
    let sol = solve_for_g(&args, &result_y()).unwrap();
    let first: Vec<TruthTable> = enumerate_g_solutions(&sol, 3).collect();
    assert_eq!(first.len(), 3);
    assert!(first[0] != first[1] && first[1] != first[2] && first[0] != first[2]);
    for g in &first {
        assert_eq!(naive_compose(g, &args), result_y());
    }
}

fn unknown_first_argument() -> (BTreeMap<usize, TruthTable>, TruthTable) {
    let [f1, f2, f3] = args_f();
    (BTreeMap::from([(1, f2), (2, f3)]), f1)
}

#[test]
fn argument_recovery_matches_brute_force() {
    let (known, f1) = unknown_first_argument();
    let g = transform_g();
    let y = result_y();
    let space = solve_for_f(&g, &y, &known).unwrap();
    assert_eq!(space.unknown_positions(), [0]);

    let brute: Vec<TruthTable> = all_tables(&abc(), 2)
        .into_iter()
        .filter(|cand| {
            naive_compose(&g, &[cand.clone(), known[&1].clone(), known[&2].clone()]) == y
        })
        .collect();
    assert!(brute.contains(&f1));
    assert_eq!(count_f_solutions(&space), brute.len() as u64);

    let found: Vec<TruthTable> = space.solutions().map(|mut v| v.remove(0)).collect();
    assert_eq!(found.len(), brute.len());
    // brute force enumerates candidates in the same lexicographic order
    assert_eq!(found, brute);

    for x in 0..9 {
        let admissible = space.admissible_at(x).unwrap();
        assert!(admissible.iter().any(|t| t.digits() == [f1.values()[x]]));
    }
}

#[test]
fn argument_recovery_first_five() {
    let (known, _) = unknown_first_argument();
    let space = solve_for_f(&transform_g(), &result_y(), &known).unwrap();
    let five: Vec<_> = enumerate_f_solutions(&space, 5).collect();
    assert_eq!(five.len(), 5);
    for assignment in five {
        let args = [assignment[0].clone(), known[&1].clone(), known[&2].clone()];
        assert_eq!(naive_compose(&transform_g(), &args), result_y());
    }
}

#[test]
fn inconsistent_binary_instance() {
    let ab = mvlf::Alphabet::letters(2).unwrap();
    let a = TruthTable::constant(ab.clone(), 1, 0).unwrap();
    let id = TruthTable::projection(ab, 1, 0).unwrap();
    assert!(matches!(
        solve_for_g(&[a], &id),
        Err(Error::Inconsistent { .. })
    ));
}
