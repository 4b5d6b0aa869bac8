//! Acceptance suite: exhaustive exact verification on the enumerated weight
//! families. Each test prints one pass/fail line; run with
//! `cargo test --test acceptance -- --nocapture` to see them.

use num_traits::One;

use supergt::coeffs::{coeff_odd_lower, coeff_odd_raise};
use supergt::ratio::{rat, Ratio};
use supergt::tableau::DEFAULT_CAP;
use supergt::{
    build_bundle, character, check_cyclic_generation, check_drinfeld_relation,
    check_highest_vector, check_initial_tableau_identity, check_odd_structure,
    check_super_commutators, dimension, enumerate_covariant_weights, oracle_module,
    CovariantWeight, SparseMatrix, SuperDims, Supertableau,
};

const RELATION_PAIRS: [(usize, usize); 6] = [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2), (2, 3)];
const RELATION_BOXES: i64 = 7;
const RELATION_DIM_CAP: u64 = 3000;

fn dims(m: usize, n: usize) -> SuperDims {
    SuperDims::new(m, n).unwrap()
}

fn relation_sweep() -> Vec<CovariantWeight> {
    let mut out = Vec::new();
    for (m, n) in RELATION_PAIRS {
        for lam in enumerate_covariant_weights(dims(m, n), RELATION_BOXES) {
            if dimension(&lam, DEFAULT_CAP).unwrap() <= RELATION_DIM_CAP {
                out.push(lam);
            }
        }
    }
    out
}

#[test]
fn criterion_1_relation_suite() {
    let mut bundles = 0;
    for lam in relation_sweep() {
        let b = build_bundle(&lam, DEFAULT_CAP).unwrap();
        let rel = check_super_commutators(&b);
        assert!(
            rel.passed(),
            "[criterion 1] FAIL: relations for lambda = {lam}, failures {:?}",
            rel.failures
        );
        let hi = check_highest_vector(&b);
        assert!(
            hi.passed(),
            "[criterion 1] FAIL: highest vector for lambda = {lam}"
        );
        let cyc = check_cyclic_generation(&b);
        assert!(
            cyc.passed(),
            "[criterion 1] FAIL: cyclic rank {} < dim {} for lambda = {lam}",
            cyc.rank,
            cyc.dim
        );
        bundles += 1;
    }
    println!("[criterion 1] PASS: relation suite on {bundles} bundles, exact");
}

#[test]
fn criterion_2_oracle_equivalence() {
    let mut cases = 0;
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        for lam in enumerate_covariant_weights(dims(m, n), 5) {
            let dim = dimension(&lam, DEFAULT_CAP).unwrap();
            let ch = character(&lam, DEFAULT_CAP).unwrap();
            let oracle = oracle_module(&lam, 50_000).unwrap();
            assert_eq!(
                dim, oracle.dimension,
                "[criterion 2] FAIL: dimension mismatch for lambda = {lam}"
            );
            assert_eq!(
                ch, oracle.character,
                "[criterion 2] FAIL: character mismatch for lambda = {lam}"
            );
            assert!(
                oracle.kernel_spans_agree,
                "[criterion 2] FAIL: oracle kernel spans disagree for lambda = {lam}"
            );
            cases += 1;
        }
    }
    println!("[criterion 2] PASS: oracle equivalence on {cases} weights, exact");
}

#[test]
fn criterion_3_gl12_dimensions() {
    let mut cases = 0;
    for l1 in 2..=6i64 {
        for l2 in 0..=4i64 {
            for l3 in 0..=l2 {
                let lam = CovariantWeight::new(dims(1, 2), vec![l1], vec![l2, l3]).unwrap();
                let dim = dimension(&lam, DEFAULT_CAP).unwrap() as i64;
                assert_eq!(
                    dim,
                    4 * (l2 - l3 + 1),
                    "[criterion 3] FAIL: dim L{lam} = {dim}"
                );
                cases += 1;
            }
        }
    }
    println!("[criterion 3] PASS: gl(1|2) dimension formula on {cases} weights");
}

/// The four pattern types of the gl(1|2) module L(l1 | l2, l3), l1 >= 2,
/// recovered from a tableau via its column counts.
fn gl12_type(t: &Supertableau, l1: i64) -> (usize, i64) {
    let r = t.count_row_leq(1, 1);
    let a_plus_1 = t.count_col_leq(1, 2);
    let ty = if r == l1 {
        1
    } else if r == l1 - 2 {
        4
    } else {
        // Middle row ends in 1 for type 2 (entry <= 2 in column r+1).
        if t.count_col_leq(r as usize + 1, 2) == 1 {
            2
        } else {
            3
        }
    };
    (ty, a_plus_1 - 1)
}

#[test]
fn criterion_4_gl12_odd_matrices() {
    let mut checked = 0;
    for l1 in 2..=5i64 {
        for l2 in 0..=3i64 {
            for l3 in 0..=l2 {
                let lam = CovariantWeight::new(dims(1, 2), vec![l1], vec![l2, l3]).unwrap();
                let b = build_bundle(&lam, DEFAULT_CAP).unwrap();
                let dim = b.dim();
                // Index basis tableaux by (type, a).
                let mut by_type = std::collections::HashMap::new();
                for (idx, t) in b.basis().iter().enumerate() {
                    let key = gl12_type(t, l1);
                    assert!((l3..=l2).contains(&key.1), "a out of range for {t}");
                    assert!(by_type.insert(key, idx).is_none(), "type collision at {t}");
                }
                // Expected closed forms: E_12 maps type 2 -> 1 and 4 -> 3;
                // E_21 maps type 1 -> 2 and 3 -> 4; everything else dies.
                let mut e12 = SparseMatrix::zero(dim, 1);
                let mut e21 = SparseMatrix::zero(dim, 1);
                for a in l3..=l2 {
                    let v1 = by_type[&(1, a)];
                    let v2 = by_type[&(2, a)];
                    let v3 = by_type[&(3, a)];
                    let v4 = by_type[&(4, a)];
                    e12.add_to(v1, v2, rat(a + l1) * rat(a + l1 + 1) / rat(l1 + l2 + 1));
                    e12.add_to(
                        v3,
                        v4,
                        -rat(l1 - 1) * rat(a + l1) * rat(a + l1 - 1)
                            / (rat(l1 + l2) * rat(l1 + l2 - 1)),
                    );
                    e21.add_to(v2, v1, rat(l1 + l2 + 1) / rat(a + l1 + 1));
                    e21.add_to(
                        v4,
                        v3,
                        -rat(l1 + l2) * rat(l1 + l2 - 1) / (rat(l1 - 1) * rat(a + l1)),
                    );
                }
                assert_eq!(
                    b.generator(1, 2),
                    &e12,
                    "[criterion 4] FAIL: E_12 differs for lambda = {lam}"
                );
                assert_eq!(
                    b.generator(2, 1),
                    &e21,
                    "[criterion 4] FAIL: E_21 differs for lambda = {lam}"
                );
                checked += 1;
            }
        }
    }
    println!(
        "[criterion 4] PASS: gl(1|2) odd matrices equal the closed forms on {checked} weights"
    );
}

/// Independent transcription of the simplified gl(m|1) raising coefficient:
/// the replacement turns the single entry m+1 of row i into m.
fn glm1_raise(t: &Supertableau, lambda: &CovariantWeight, i: usize) -> Ratio {
    let m = lambda.dims().m();
    let lam_m1 = lambda.component(m + 1);
    let lrow = |s: usize, j: usize| t.count_row_leq(j, s as u16) - j as i64 + 1;
    let l = |j: usize| lambda.l_shift(j);
    let lmi = lrow(m, i);
    let mut c = rat(lmi + lam_m1 + m as i64);
    for j in 1..i {
        let k_j = lambda.even()[j - 1] - t.count_row_leq(j, m as u16);
        let sign = if k_j % 2 == 0 { rat(1) } else { rat(-1) };
        c *= sign * rat(lmi - l(j)) / rat(lmi - lrow(m, j));
    }
    for j in i + 1..=m {
        let k_j = lambda.even()[j - 1] - t.count_row_leq(j, m as u16);
        if k_j == 1 {
            c *= rat(lmi - lrow(m, j) + 1) / rat(lmi - l(j) + 1);
        }
    }
    c
}

/// Independent transcription of the simplified gl(m|1) lowering coefficient.
fn glm1_lower(t: &Supertableau, lambda: &CovariantWeight, i: usize) -> Ratio {
    let m = lambda.dims().m();
    let lrow = |s: usize, j: usize| t.count_row_leq(j, s as u16) - j as i64 + 1;
    let l = |j: usize| lambda.l_shift(j);
    let lmi = lrow(m, i);
    let mut d = Ratio::one();
    for j in 1..m {
        d *= rat(lmi - lrow(m - 1, j));
    }
    for j in 1..=m {
        if j != i {
            d /= rat(lmi - lrow(m, j));
        }
    }
    for j in 1..i {
        let k_j = lambda.even()[j - 1] - t.count_row_leq(j, m as u16);
        let sign = if k_j % 2 == 0 { rat(1) } else { rat(-1) };
        d *= sign * rat(lmi - lrow(m, j) - 1) / rat(lmi - l(j) - 1);
        if k_j == 1 {
            d *= rat(lmi - lrow(m, j)) / rat(lmi - l(j));
        }
    }
    d
}

#[test]
fn criterion_5_gl_m1_specialization() {
    let mut moves = 0;
    for (m, n) in [(2usize, 1usize), (3, 1)] {
        for lam in enumerate_covariant_weights(dims(m, n), 6) {
            for t in supergt::enumerate_supertableaux(&lam, DEFAULT_CAP).unwrap() {
                // Raising moves: an entry m+1 becomes m.
                for (i0, row) in t.rows().iter().enumerate() {
                    for (j0, &e) in row.iter().enumerate() {
                        let (i, j) = (i0 + 1, j0 + 1);
                        if e == (m + 1) as u16 && t.with_entry(i, j, m as u16).is_valid() {
                            let general = coeff_odd_raise(&t, &lam, i).unwrap();
                            let example = glm1_raise(&t, &lam, i);
                            assert_eq!(
                                general, example,
                                "[criterion 5] FAIL: raise at row {i} of {t}, lambda = {lam}"
                            );
                            moves += 1;
                        }
                        if e == m as u16 && t.with_entry(i, j, (m + 1) as u16).is_valid() {
                            let general = coeff_odd_lower(&t, &lam, i).unwrap();
                            let example = glm1_lower(&t, &lam, i);
                            assert_eq!(
                                general, example,
                                "[criterion 5] FAIL: lower at row {i} of {t}, lambda = {lam}"
                            );
                            moves += 1;
                        }
                    }
                }
            }
        }
    }
    println!("[criterion 5] PASS: gl(m|1) specialization equals the general coefficients on {moves} moves");
}

#[test]
fn criterion_6_drinfeld_relation() {
    let mut pairs = 0;
    for lam in relation_sweep() {
        for mu in supergt::admissible_mus(&lam) {
            let rep = check_drinfeld_relation(&lam, &mu).unwrap();
            assert!(
                rep.all_passed(),
                "[criterion 6] FAIL: lambda = {lam}, mu = {mu:?}, failed k = {:?}",
                rep.failed
            );
            pairs += 1;
        }
    }
    println!("[criterion 6] PASS: Drinfeld relation on {pairs} (lambda, mu) pairs, exact");
}

#[test]
fn criterion_7_initial_tableau_identity() {
    let mut triples = 0;
    for lam in relation_sweep() {
        for mu in supergt::admissible_mus(&lam) {
            for p in 1..=lam.dims().n() {
                assert!(
                    check_initial_tableau_identity(&lam, &mu, p).unwrap(),
                    "[criterion 7] FAIL: lambda = {lam}, mu = {mu:?}, p = {p}"
                );
                triples += 1;
            }
        }
    }
    println!("[criterion 7] PASS: initial-tableau identity on {triples} (lambda, mu, p) triples");
}

#[test]
fn criterion_8_nilpotency_and_anticommutator() {
    let mut bundles = 0;
    for lam in relation_sweep() {
        let b = build_bundle(&lam, DEFAULT_CAP).unwrap();
        assert!(
            check_odd_structure(&b),
            "[criterion 8] FAIL: odd structure for lambda = {lam}"
        );
        bundles += 1;
    }
    println!("[criterion 8] PASS: nilpotency and anticommutator on {bundles} bundles");
}
