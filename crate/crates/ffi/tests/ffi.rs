use std::ffi::{CStr, CString};
use std::ptr;

use mvlf_ffi::*;

fn table(symbols: &[&str], arity: usize, values: &[u32]) -> *mut MvlfTable {
    let owned: Vec<CString> = symbols.iter().map(|s| CString::new(*s).unwrap()).collect();
    let ptrs: Vec<_> = owned.iter().map(|s| s.as_ptr()).collect();
    let mut out = ptr::null_mut();
    let status = unsafe {
        mvlf_table_new(
            ptrs.as_ptr(),
            ptrs.len(),
            arity,
            values.as_ptr(),
            values.len(),
            &mut out,
        )
    };
    assert_eq!(status, MvlfStatus::Ok);
    out
}

unsafe fn take_string(s: *mut std::ffi::c_char) -> String {
    let owned = CStr::from_ptr(s).to_str().unwrap().to_owned();
    mvlf_string_free(s);
    owned
}

const ABC: [&str; 3] = ["a", "b", "c"];

fn worked_example() -> (*mut MvlfTable, [*mut MvlfTable; 3], *mut MvlfTable) {
    let g = table(
        &ABC,
        3,
        &[
            0, 0, 2, 2, 2, 0, 1, 0, 0, 2, 1, 0, 2, 1, 0, 2, 1, 0, 1, 1, 1, 0, 1, 0, 2, 2, 0,
        ],
    );
    let f = [
        table(&ABC, 2, &[0, 2, 2, 1, 1, 0, 0, 0, 1]),
        table(&ABC, 2, &[0, 2, 1, 0, 2, 0, 1, 0, 2]),
        table(&ABC, 2, &[2, 2, 1, 2, 2, 2, 1, 2, 1]),
    ];
    let y = table(&ABC, 2, &[2, 0, 1, 0, 0, 2, 2, 2, 1]);
    (g, f, y)
}

#[test]
fn compose_and_notation() {
    let (g, f, y) = worked_example();
    unsafe {
        let args: Vec<*const MvlfTable> = f.iter().map(|&t| t as *const _).collect();
        let mut out = ptr::null_mut();
        assert_eq!(mvlf_compose(g, args.as_ptr(), 3, &mut out), MvlfStatus::Ok);
        assert!(mvlf_table_equal(out, y));
        assert_eq!(mvlf_table_len(out), 9);
        assert_eq!(mvlf_table_arity(out), 2);
        assert_eq!(mvlf_table_radix(out), 3);

        let mut line = ptr::null_mut();
        assert_eq!(mvlf_table_vector_line(out, true, &mut line), MvlfStatus::Ok);
        assert_eq!(take_string(line), "[b c c c a a b a c]");

        let mut value = 0u32;
        assert_eq!(
            mvlf_table_evaluate(g, [0, 0, 2].as_ptr(), 3, &mut value),
            MvlfStatus::Ok
        );
        let mut sym = ptr::null_mut();
        assert_eq!(mvlf_table_symbol(g, value, &mut sym), MvlfStatus::Ok);
        assert_eq!(take_string(sym), "c");

        assert_eq!(
            mvlf_table_evaluate(g, [0, 0].as_ptr(), 2, &mut value),
            MvlfStatus::ArityMismatch
        );
        let msg = CStr::from_ptr(mvlf_last_error_message()).to_str().unwrap();
        assert!(msg.contains("arity 3"), "{msg}");

        assert_eq!(
            mvlf_compose(g, args.as_ptr(), 2, &mut out),
            MvlfStatus::ArityMismatch
        );

        mvlf_table_free(out);
        for t in f {
            mvlf_table_free(t);
        }
        mvlf_table_free(g);
        mvlf_table_free(y);
    }
}

#[test]
fn transform_recovery() {
    let (g, f, y) = worked_example();
    unsafe {
        let args: Vec<*const MvlfTable> = f.iter().map(|&t| t as *const _).collect();
        let mut sol = ptr::null_mut();
        assert_eq!(
            mvlf_solve_g(args.as_ptr(), 3, y, &mut sol, ptr::null_mut()),
            MvlfStatus::Ok
        );
        assert_eq!(mvlf_gsolution_bound_count(sol), 7);
        assert_eq!(mvlf_gsolution_free_count(sol), 20);
        let mut count = ptr::null_mut();
        assert_eq!(mvlf_gsolution_count(sol, &mut count), MvlfStatus::Ok);
        assert_eq!(take_string(count), "3486784401");
        let mut cell = 0i64;
        assert_eq!(mvlf_gsolution_cell(sol, 2, &mut cell), MvlfStatus::Ok);
        assert_eq!(cell, 2);
        assert_eq!(mvlf_gsolution_cell(sol, 0, &mut cell), MvlfStatus::Ok);
        assert_eq!(cell, -1);
        assert_eq!(
            mvlf_gsolution_cell(sol, 27, &mut cell),
            MvlfStatus::InvalidArgument
        );

        let mut it = ptr::null_mut();
        assert_eq!(mvlf_gsolution_iter(sol, &mut it), MvlfStatus::Ok);
        // the iterator owns its own copy
        mvlf_gsolution_free(sol);
        for _ in 0..3 {
            let mut cand = ptr::null_mut();
            assert_eq!(mvlf_giter_next(it, &mut cand), MvlfStatus::Ok);
            let mut back = ptr::null_mut();
            assert_eq!(
                mvlf_compose(cand, args.as_ptr(), 3, &mut back),
                MvlfStatus::Ok
            );
            assert!(mvlf_table_equal(back, y));
            mvlf_table_free(back);
            mvlf_table_free(cand);
        }
        mvlf_giter_free(it);

        // constant argument against the identity result
        let a = table(&["a", "b"], 1, &[0, 0]);
        let id = table(&["a", "b"], 1, &[0, 1]);
        let mut witness = [usize::MAX; 2];
        let status = mvlf_solve_g(&(a as *const _), 1, id, &mut sol, witness.as_mut_ptr());
        assert_eq!(status, MvlfStatus::Inconsistent);
        assert_eq!(witness, [0, 1]);
        mvlf_table_free(a);
        mvlf_table_free(id);

        for t in f {
            mvlf_table_free(t);
        }
        mvlf_table_free(g);
        mvlf_table_free(y);
    }
}

#[test]
fn argument_recovery() {
    let (g, f, y) = worked_example();
    unsafe {
        let positions = [1usize, 2];
        let known = [f[1] as *const MvlfTable, f[2] as *const MvlfTable];
        let mut space = ptr::null_mut();
        assert_eq!(
            mvlf_solve_f(g, y, positions.as_ptr(), known.as_ptr(), 2, &mut space),
            MvlfStatus::Ok
        );
        assert_eq!(mvlf_fspace_unknown_count(space), 1);
        let mut unknown = [9usize; 1];
        assert_eq!(
            mvlf_fspace_unknown_positions(space, unknown.as_mut_ptr(), 1),
            MvlfStatus::Ok
        );
        assert_eq!(unknown, [0]);
        let mut count = ptr::null_mut();
        assert_eq!(mvlf_fspace_count(space, &mut count), MvlfStatus::Ok);
        let count: usize = take_string(count).parse().unwrap();

        let mut it = ptr::null_mut();
        assert_eq!(mvlf_fspace_iter(space, &mut it), MvlfStatus::Ok);
        let mut seen = 0;
        let mut found_original = false;
        loop {
            let mut out = [ptr::null_mut(); 1];
            match mvlf_fiter_next(it, out.as_mut_ptr(), 1) {
                MvlfStatus::Ok => {}
                MvlfStatus::Done => break,
                other => panic!("{other:?}"),
            }
            seen += 1;
            found_original |= mvlf_table_equal(out[0], f[0]);
            let args = [out[0] as *const _, f[1] as *const _, f[2] as *const _];
            let mut back = ptr::null_mut();
            assert_eq!(mvlf_compose(g, args.as_ptr(), 3, &mut back), MvlfStatus::Ok);
            assert!(mvlf_table_equal(back, y));
            mvlf_table_free(back);
            mvlf_table_free(out[0]);
        }
        assert_eq!(seen, count);
        assert!(found_original);
        mvlf_fiter_free(it);
        mvlf_fspace_free(space);

        let dup = [1usize, 1];
        assert_eq!(
            mvlf_solve_f(g, y, dup.as_ptr(), known.as_ptr(), 2, &mut space),
            MvlfStatus::InvalidArgument
        );

        for t in f {
            mvlf_table_free(t);
        }
        mvlf_table_free(g);
        mvlf_table_free(y);
    }
}

#[test]
fn errors_and_text() {
    unsafe {
        let mut out = ptr::null_mut();
        let vals = [0u32; 8];
        let syms: Vec<CString> = ABC.iter().map(|s| CString::new(*s).unwrap()).collect();
        let ptrs: Vec<_> = syms.iter().map(|s| s.as_ptr()).collect();
        assert_eq!(
            mvlf_table_new(ptrs.as_ptr(), 3, 2, vals.as_ptr(), 8, &mut out),
            MvlfStatus::LengthMismatch
        );
        assert_eq!(
            mvlf_table_new(ptrs.as_ptr(), 1, 0, vals.as_ptr(), 1, &mut out),
            MvlfStatus::InvalidArgument
        );
        assert_eq!(
            mvlf_table_parse_text(ptr::null(), &mut out),
            MvlfStatus::NullPointer
        );

        let doc = CString::new("mvlf 1\nradix 4 arity 1\na b c d\na a c b\n").unwrap();
        assert_eq!(
            mvlf_table_parse_text(doc.as_ptr(), &mut out),
            MvlfStatus::Ok
        );
        let mut text = ptr::null_mut();
        assert_eq!(mvlf_table_emit_text(out, &mut text), MvlfStatus::Ok);
        assert_eq!(take_string(text), doc.to_str().unwrap());
        let mut line = ptr::null_mut();
        assert_eq!(mvlf_table_vector_line(out, true, &mut line), MvlfStatus::Ok);
        assert_eq!(take_string(line), "[b c a a]");

        let dir = std::env::temp_dir().join(format!("mvlf-ffi-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = CString::new(dir.join("f.bin").to_str().unwrap()).unwrap();
        assert_eq!(mvlf_table_save_binary(out, path.as_ptr()), MvlfStatus::Ok);
        let mut loaded = ptr::null_mut();
        assert_eq!(mvlf_table_load(path.as_ptr(), &mut loaded), MvlfStatus::Ok);
        assert!(mvlf_table_equal(out, loaded));
        std::fs::remove_dir_all(&dir).unwrap();

        let bad = CString::new("mvlf 1\nradix 4 arity 1\na b c d\na a c\n").unwrap();
        let mut t = ptr::null_mut();
        assert_eq!(
            mvlf_table_parse_text(bad.as_ptr(), &mut t),
            MvlfStatus::LengthMismatch
        );

        let mut count = ptr::null_mut();
        assert_eq!(mvlf_count_functions(4, 1, &mut count), MvlfStatus::Ok);
        assert_eq!(take_string(count), "256");
        assert_eq!(
            mvlf_count_functions(1, 1, &mut count),
            MvlfStatus::InvalidArgument
        );

        mvlf_table_free(out);
        mvlf_table_free(loaded);
        mvlf_table_free(ptr::null_mut());
    }
}
