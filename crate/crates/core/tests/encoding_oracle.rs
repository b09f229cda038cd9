mod common;

use common::{all_models, is_satisfiable, project, without_alo};
use pigeon_core::counts::f_group;
use pigeon_core::{php_amo, php_standard};

#[test]
fn both_encodings_unsat_up_to_four() {
    for n in 1..=4 {
        assert!(!is_satisfiable(&php_standard(n).unwrap()), "standard n={n}");
        assert!(!is_satisfiable(&php_amo(n).unwrap()), "amo n={n}");
    }
}

#[test]
fn x_projections_coincide_without_last_pigeon() {
    for n in 2..=4 {
        let standard = without_alo(&php_standard(n).unwrap(), n);
        let amo = without_alo(&php_amo(n).unwrap(), n);
        let x_vars = (n * (n + 1)) as u64;
        let s = project(&all_models(&standard), x_vars);
        let a = project(&all_models(&amo), x_vars);
        assert!(!s.is_empty(), "n={n}");
        assert_eq!(s, a, "n={n}");
    }
}

#[test]
fn amo_clause_count() {
    for n in 1..=60u64 {
        let f = php_amo(n as usize).unwrap();
        assert_eq!(f.len() as u64, (n + 1) + n * f_group(n).unwrap(), "n={n}");
    }
}

#[test]
fn amo_counts_at_four() {
    let f = php_amo(4).unwrap();
    assert_eq!(f.len(), 5 + 4 * 10);
    assert_eq!(f.num_vars(), 20 + 4);
}
