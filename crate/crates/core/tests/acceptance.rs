//! Acceptance suite. Every criterion is exact (all quantities are
//! integers, tolerance zero) and prints one PASS/FAIL line; a FAIL also
//! fails the test.

mod common;

use std::collections::HashMap;
use std::sync::LazyLock;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use coprime_counts::arith::{euler_phi, gcd, gcd_set, MobiusTable};
use coprime_counts::classify::{
    alpha_status, alpha_status_to_n, count_coprime_free_subsets, count_pairwise_coprime_subsets,
    is_coprime_free, is_coprime_free_with_perm, is_pairwise_coprime, is_pairwise_coprime_with_perm,
    AlphaStatus, PairwiseMethod,
};
use coprime_counts::counting::{
    coprime_element_count, f_alpha, f_incremental, f_interval, f_set, phi_alpha, phi_interval,
    phi_set,
};
use coprime_counts::identities::{mertens_bound, mertens_pair, mertens_triple, scaled_mertens};
use coprime_counts::oracle::{brute_count, PredicateKind, SubsetPredicate};
use coprime_counts::IntSet;

use common::{all_perms, random_perm, random_set, random_subset, Rng};

static TABLE: LazyLock<MobiusTable> = LazyLock::new(|| MobiusTable::new(600).unwrap());

/// Prints the criterion verdict, then enforces it.
fn report(name: &str, violations: &[String], detail: String) {
    let verdict = if violations.is_empty() { "PASS" } else { "FAIL" };
    println!("acceptance {name}: {verdict} ({detail})");
    assert!(
        violations.is_empty(),
        "criterion {name} violated:\n{}",
        violations.join("\n")
    );
}

fn push(violations: &mut Vec<String>, msg: String) {
    if violations.len() < 10 {
        violations.push(msg);
    }
}

/// Criterion 1: the four closed forms equal the enumeration oracle on
/// random sets, for every cardinality and every modulus in range.
#[test]
fn criterion_01_oracle_equivalence() {
    let mut rng = Rng::new(0x01);
    let mut violations = Vec::new();
    let mut checks = 0u64;
    for _ in 0..200 {
        let a = random_set(&mut rng, 12, 40);
        let f = f_set(&TABLE, &a).unwrap();
        let f_oracle = brute_count(&a, &SubsetPredicate::new(PredicateKind::RelPrime)).unwrap();
        checks += 1;
        if f != f_oracle {
            push(&mut violations, format!("f({a}) = {f} != oracle {f_oracle}"));
        }
        for alpha in 1..=a.len() {
            let got = f_alpha(&TABLE, &a, alpha).unwrap();
            let want = brute_count(
                &a,
                &SubsetPredicate::with_cardinality(PredicateKind::RelPrime, alpha),
            )
            .unwrap();
            checks += 1;
            if got != want {
                push(
                    &mut violations,
                    format!("f_{alpha}({a}) = {got} != oracle {want}"),
                );
            }
        }
        for n in 1..=30u64 {
            let got = phi_set(&TABLE, &a, n).unwrap();
            let want =
                brute_count(&a, &SubsetPredicate::new(PredicateKind::RelPrimeToN(n))).unwrap();
            checks += 1;
            if got != want {
                push(
                    &mut violations,
                    format!("phi({a}, {n}) = {got} != oracle {want}"),
                );
            }
            for alpha in 1..=a.len() {
                let got = phi_alpha(&TABLE, &a, n, alpha).unwrap();
                let want = brute_count(
                    &a,
                    &SubsetPredicate::with_cardinality(PredicateKind::RelPrimeToN(n), alpha),
                )
                .unwrap();
                checks += 1;
                if got != want {
                    push(
                        &mut violations,
                        format!("phi_{alpha}({a}, {n}) = {got} != oracle {want}"),
                    );
                }
            }
        }
    }
    report(
        "01 oracle-equivalence",
        &violations,
        format!("200 sets, {checks} comparisons"),
    );
}

/// Criterion 2: on A = [1, n] the coprime-element count is Euler's phi.
#[test]
fn criterion_02_euler_phi_cross_check() {
    let mut violations = Vec::new();
    for n in 2..=500u64 {
        let a = IntSet::new(1..=n).unwrap();
        let got = coprime_element_count(&TABLE, &a, n).unwrap();
        let want = euler_phi(n);
        if got != want {
            push(&mut violations, format!("n = {n}: {got} != phi = {want}"));
        }
    }
    report(
        "02 euler-phi-cross-check",
        &violations,
        "n in [2, 500]".to_string(),
    );
}

/// One enumeration over the subsets of [l, m], bucketed by (gcd, size),
/// from which every f/phi/alpha combination can be read off. Independent
/// of both the closed forms and the oracle module.
fn interval_histogram(l: u64, m: u64) -> HashMap<(u64, usize), u64> {
    let values: Vec<u64> = (l..=m).collect();
    let k = values.len();
    let mut hist: HashMap<(u64, usize), u64> = HashMap::new();
    for mask in 1u64..(1 << k) {
        let mut g = 0u64;
        let mut size = 0usize;
        for (i, &x) in values.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g = gcd(g, x);
                size += 1;
            }
        }
        *hist.entry((g, size)).or_insert(0) += 1;
    }
    hist
}

/// Criterion 3: interval fast paths agree with the general-set formulas
/// everywhere in range, and with brute-force enumeration for short
/// intervals.
#[test]
fn criterion_03_interval_consistency() {
    let mut violations = Vec::new();
    let mut checks = 0u64;
    for l in 1..=60u64 {
        for m in l..=60u64 {
            let set = IntSet::new(l..=m).unwrap();
            let size = set.len();

            let fast = f_interval(&TABLE, l, m, None).unwrap();
            let general = f_set(&TABLE, &set).unwrap();
            checks += 1;
            if fast != general {
                push(
                    &mut violations,
                    format!("f([{l},{m}]) fast {fast} != general {general}"),
                );
            }
            for alpha in 1..=3.min(size) {
                let fast = f_interval(&TABLE, l, m, Some(alpha)).unwrap();
                let general = f_alpha(&TABLE, &set, alpha).unwrap();
                checks += 1;
                if fast != general {
                    push(
                        &mut violations,
                        format!("f_{alpha}([{l},{m}]) fast {fast} != general {general}"),
                    );
                }
            }
            for n in 1..=30u64 {
                let fast = phi_interval(&TABLE, l, m, n, None).unwrap();
                let general = phi_set(&TABLE, &set, n).unwrap();
                checks += 1;
                if fast != general {
                    push(
                        &mut violations,
                        format!("phi([{l},{m}], {n}) fast {fast} != general {general}"),
                    );
                }
                for alpha in 1..=3.min(size) {
                    let fast = phi_interval(&TABLE, l, m, n, Some(alpha)).unwrap();
                    let general = phi_alpha(&TABLE, &set, n, alpha).unwrap();
                    checks += 1;
                    if fast != general {
                        push(
                            &mut violations,
                            format!("phi_{alpha}([{l},{m}], {n}) fast {fast} != general {general}"),
                        );
                    }
                }
            }

            // Brute force for short intervals.
            if m <= 18 {
                let hist = interval_histogram(l, m);
                let count_where = |pred: &dyn Fn(u64, usize) -> bool| -> BigUint {
                    let total: u64 = hist
                        .iter()
                        .filter(|&(&(g, size), _)| pred(g, size))
                        .map(|(_, &c)| c)
                        .sum();
                    BigUint::from(total)
                };
                checks += 1;
                let brute = count_where(&|g, _| g == 1);
                if f_interval(&TABLE, l, m, None).unwrap() != brute {
                    push(&mut violations, format!("f([{l},{m}]) != brute {brute}"));
                }
                for alpha in 1..=3.min(size) {
                    checks += 1;
                    let brute = count_where(&|g, s| g == 1 && s == alpha);
                    if f_interval(&TABLE, l, m, Some(alpha)).unwrap() != brute {
                        push(
                            &mut violations,
                            format!("f_{alpha}([{l},{m}]) != brute {brute}"),
                        );
                    }
                }
                for n in 1..=30u64 {
                    checks += 1;
                    let brute = count_where(&|g, _| gcd(g, n) == 1);
                    if phi_interval(&TABLE, l, m, n, None).unwrap() != brute {
                        push(
                            &mut violations,
                            format!("phi([{l},{m}], {n}) != brute {brute}"),
                        );
                    }
                    for alpha in 1..=3.min(size) {
                        checks += 1;
                        let brute = count_where(&|g, s| gcd(g, n) == 1 && s == alpha);
                        if phi_interval(&TABLE, l, m, n, Some(alpha)).unwrap() != brute {
                            push(
                                &mut violations,
                                format!("phi_{alpha}([{l},{m}], {n}) != brute {brute}"),
                            );
                        }
                    }
                }
            }
        }
    }
    report(
        "03 interval-consistency",
        &violations,
        format!("l <= m <= 60, n <= 30, alpha <= 3; {checks} comparisons"),
    );
}

/// Criterion 4: the classical prefix values f([1, n]) for n = 1..4.
#[test]
fn criterion_04_known_small_values() {
    let mut violations = Vec::new();
    let expected = [1u64, 2, 5, 11];
    for (n, &want) in (1..=4u64).zip(&expected) {
        let want = BigUint::from(want);
        let via_interval = f_interval(&TABLE, 1, n, None).unwrap();
        let via_set = f_set(&TABLE, &IntSet::new(1..=n).unwrap()).unwrap();
        let via_oracle = brute_count(
            &IntSet::new(1..=n).unwrap(),
            &SubsetPredicate::new(PredicateKind::RelPrime),
        )
        .unwrap();
        if via_interval != want || via_set != want || via_oracle != want {
            push(
                &mut violations,
                format!(
                    "f([1,{n}]): interval {via_interval}, set {via_set}, oracle {via_oracle}, expected {want}"
                ),
            );
        }
    }
    report(
        "04 known-small-values",
        &violations,
        "f([1,n]) = 1, 2, 5, 11".to_string(),
    );
}

/// Criterion 5: the pair and triple Mertens identities, exhaustively.
#[test]
fn criterion_05_mertens_identities() {
    let mut violations = Vec::new();
    let mut pair_cases = 0u64;
    for n in 2..=120u64 {
        for m in 2..=n {
            let r = mertens_pair(&TABLE, m, n).unwrap();
            pair_cases += 1;
            if !r.holds {
                push(
                    &mut violations,
                    format!("pair({m},{n}): {} != {} [{}]", r.lhs, r.rhs_expected, r.case_label),
                );
            }
        }
    }

    let mut triple_cases = 0u64;
    let mut branch_counts: HashMap<String, u64> = HashMap::new();
    for n in 2..=60u64 {
        for m in 2..=n {
            for l in 2..m {
                let r = mertens_triple(&TABLE, l, m, n).unwrap();
                triple_cases += 1;
                *branch_counts.entry(r.case_label.clone()).or_insert(0) += 1;
                if !r.holds {
                    push(
                        &mut violations,
                        format!(
                            "triple({l},{m},{n}): {} != {} [{}]",
                            r.lhs, r.rhs_expected, r.case_label
                        ),
                    );
                }
            }
        }
    }
    // The five-way case analysis is exhaustive (every triple got a branch,
    // counted above) and all five branches are hit.
    for branch in [
        "all-pairs-coprime",
        "two-pairs-coprime",
        "one-pair-coprime",
        "no-pair-coprime-gcd-one",
        "common-factor",
    ] {
        if branch_counts.get(branch).copied().unwrap_or(0) == 0 {
            push(&mut violations, format!("branch {branch} never hit"));
        }
    }
    let branch_total: u64 = branch_counts.values().sum();
    if branch_total != triple_cases {
        push(
            &mut violations,
            format!("branches cover {branch_total} of {triple_cases} triples"),
        );
    }
    report(
        "05 mertens-identities",
        &violations,
        format!("{pair_cases} pairs, {triple_cases} triples, all branches hit"),
    );
}

/// Criterion 6: the Mertens lower bound, with its equality condition and
/// the surplus equal to f(A).
#[test]
fn criterion_06_mertens_bound() {
    let mut rng = Rng::new(0x06);
    let mut violations = Vec::new();
    let mut equality_cases = 0u64;
    let mut strict_cases = 0u64;
    for i in 0..500 {
        // Alternate raw sets with sets scaled by b >= 2, which forces
        // gcd(A) > 1 and therefore the equality branch.
        let a = if i % 2 == 0 {
            random_set(&mut rng, 10, 40)
        } else {
            random_set(&mut rng, 10, 40).scale(rng.range(2, 5)).unwrap()
        };
        let r = mertens_bound(&TABLE, &a).unwrap();
        let f = BigInt::from(f_set(&TABLE, &a).unwrap());
        let surplus = &r.lhs - &r.rhs_expected;
        if surplus < BigInt::zero() {
            push(&mut violations, format!("lhs < M(sup) for {a}"));
        }
        if surplus != f {
            push(
                &mut violations,
                format!("surplus {surplus} != f({a}) = {f}"),
            );
        }
        let gcd_gt_one = gcd_set(a.elements()).unwrap() > 1;
        if r.holds != gcd_gt_one {
            push(
                &mut violations,
                format!("equality {} but gcd(A) > 1 is {gcd_gt_one} for {a}", r.holds),
            );
        }
        if r.holds {
            equality_cases += 1;
        } else {
            strict_cases += 1;
        }
    }
    if equality_cases < 50 || strict_cases < 50 {
        push(
            &mut violations,
            format!("branch coverage too thin: equality {equality_cases}, strict {strict_cases}"),
        );
    }
    report(
        "06 mertens-bound",
        &violations,
        format!("500 sets, equality {equality_cases}, strict {strict_cases}"),
    );
}

/// Criterion 7: the scaled-set identity holds for every composite c = a*b.
#[test]
fn criterion_07_scaled_identity() {
    let mut rng = Rng::new(0x07);
    let mut violations = Vec::new();
    let mut cases = 0u64;
    for a_sup in 2..=12u64 {
        for b in 2..=12u64 {
            for _ in 0..3 {
                // Random set with sup exactly a_sup.
                let mut values: Vec<u64> = (1..a_sup).filter(|_| rng.below(2) == 1).collect();
                values.push(a_sup);
                let a = IntSet::new(values).unwrap();
                let r = scaled_mertens(&TABLE, &a, a_sup, b).unwrap();
                cases += 1;
                if !r.holds {
                    push(
                        &mut violations,
                        format!(
                            "scaled({a}, a={a_sup}, b={b}): {} != {}",
                            r.lhs, r.rhs_expected
                        ),
                    );
                }
            }
        }
    }
    report(
        "07 scaled-identity",
        &violations,
        format!("{cases} cases over a, b in [2, 12]"),
    );
}

/// Criterion 8: the three evaluation routes for the pairwise
/// characterizations agree, including under every permutation for small
/// sets.
#[test]
fn criterion_08_sqrt_characterizations() {
    let mut rng = Rng::new(0x08);
    let mut violations = Vec::new();
    let mut perm_checks = 0u64;
    for _ in 0..1000 {
        let a = random_set(&mut rng, 8, 30);
        let direct = is_pairwise_coprime(&TABLE, &a, PairwiseMethod::Direct).unwrap();
        let sqrt = is_pairwise_coprime(&TABLE, &a, PairwiseMethod::SqrtForm).unwrap();
        let direct_free = is_coprime_free(&TABLE, &a, PairwiseMethod::Direct).unwrap();
        let sqrt_free = is_coprime_free(&TABLE, &a, PairwiseMethod::SqrtForm).unwrap();
        if sqrt != direct || sqrt_free != direct_free {
            push(&mut violations, format!("sqrt vs direct mismatch on {a}"));
        }
        if a.len() <= 5 {
            for perm in all_perms(a.len()) {
                perm_checks += 1;
                let inc = is_pairwise_coprime_with_perm(&TABLE, &a, &perm).unwrap();
                let inc_free = is_coprime_free_with_perm(&TABLE, &a, &perm).unwrap();
                if inc != direct || inc_free != direct_free {
                    push(
                        &mut violations,
                        format!("incremental mismatch on {a} under {perm:?}"),
                    );
                }
            }
        } else {
            for _ in 0..4 {
                perm_checks += 1;
                let perm = random_perm(&mut rng, a.len());
                let inc = is_pairwise_coprime_with_perm(&TABLE, &a, &perm).unwrap();
                let inc_free = is_coprime_free_with_perm(&TABLE, &a, &perm).unwrap();
                if inc != direct || inc_free != direct_free {
                    push(
                        &mut violations,
                        format!("incremental mismatch on {a} under {perm:?}"),
                    );
                }
            }
        }
    }
    report(
        "08 sqrt-characterizations",
        &violations,
        format!("1000 sets, {perm_checks} permutation checks"),
    );
}

/// Criterion 9: the characterization-based subset counts match the naive
/// oracle.
#[test]
fn criterion_09_pairwise_counts() {
    let mut rng = Rng::new(0x09);
    let mut violations = Vec::new();
    for _ in 0..200 {
        let a = random_set(&mut rng, 10, 40);
        let got = count_pairwise_coprime_subsets(&TABLE, &a).unwrap();
        let want = brute_count(&a, &SubsetPredicate::new(PredicateKind::PairwiseCoprime)).unwrap();
        if got != want {
            push(
                &mut violations,
                format!("pairwise count for {a}: {got} != oracle {want}"),
            );
        }
        let got = count_coprime_free_subsets(&TABLE, &a).unwrap();
        let want = brute_count(&a, &SubsetPredicate::new(PredicateKind::CoprimeFree)).unwrap();
        if got != want {
            push(
                &mut violations,
                format!("coprime-free count for {a}: {got} != oracle {want}"),
            );
        }
    }
    report("09 pairwise-counts", &violations, "200 sets".to_string());
}

/// Criterion 10: the All/None monotonicity implications across larger
/// cardinalities and subsets, for both classifications.
#[test]
fn criterion_10_monotonicity() {
    let mut rng = Rng::new(0x10);
    let mut violations = Vec::new();
    let mut all_premises = 0u64;
    let mut none_premises = 0u64;
    const PRIMES: [u64; 9] = [2, 3, 5, 7, 11, 13, 17, 19, 23];
    for i in 0..200 {
        // Mix generators so that the All and None premises actually fire:
        // distinct primes are pairwise coprime (All for alpha >= 2),
        // scaled sets share a factor (None at every alpha).
        let a = match i % 3 {
            0 => random_set(&mut rng, 8, 30),
            1 => {
                let k = rng.range(2, 6) as usize;
                let mut picks: Vec<u64> = PRIMES.to_vec();
                for i in (1..picks.len()).rev() {
                    let j = rng.below(i as u64 + 1) as usize;
                    picks.swap(i, j);
                }
                IntSet::new(picks[..k].to_vec()).unwrap()
            }
            _ => random_set(&mut rng, 6, 15).scale(rng.range(2, 4)).unwrap(),
        };
        let b = random_subset(&mut rng, &a);
        let alpha = rng.range(1, b.len() as u64) as usize;
        let beta = rng.range(alpha as u64, a.len() as u64) as usize;
        let n = rng.range(1, 30);

        // alpha <= beta <= |A| cardinality monotonicity on A itself.
        let status_alpha = alpha_status(&TABLE, &a, alpha).unwrap();
        let status_beta = alpha_status(&TABLE, &a, beta).unwrap();
        if status_alpha == AlphaStatus::All {
            all_premises += 1;
            if status_beta != AlphaStatus::All {
                push(
                    &mut violations,
                    format!("{a}: All at {alpha} but {status_beta:?} at {beta}"),
                );
            }
        }
        if status_beta == AlphaStatus::None {
            none_premises += 1;
            if status_alpha != AlphaStatus::None {
                push(
                    &mut violations,
                    format!("{a}: None at {beta} but {status_alpha:?} at {alpha}"),
                );
            }
        }

        let status_alpha_n = alpha_status_to_n(&TABLE, &a, alpha, n).unwrap();
        let status_beta_n = alpha_status_to_n(&TABLE, &a, beta, n).unwrap();
        if status_alpha_n == AlphaStatus::All && status_beta_n != AlphaStatus::All {
            push(
                &mut violations,
                format!("{a}, n={n}: All at {alpha} but {status_beta_n:?} at {beta}"),
            );
        }
        if status_beta_n == AlphaStatus::None && status_alpha_n != AlphaStatus::None {
            push(
                &mut violations,
                format!("{a}, n={n}: None at {beta} but {status_alpha_n:?} at {alpha}"),
            );
        }

        // Subset monotonicity at fixed alpha (alpha <= |B| by construction).
        let sub_status = alpha_status(&TABLE, &b, alpha).unwrap();
        if status_alpha == AlphaStatus::All && sub_status != AlphaStatus::All {
            push(
                &mut violations,
                format!("{a}: All at {alpha} but subset {b} is {sub_status:?}"),
            );
        }
        if status_alpha == AlphaStatus::None && sub_status != AlphaStatus::None {
            push(
                &mut violations,
                format!("{a}: None at {alpha} but subset {b} is {sub_status:?}"),
            );
        }
        let sub_status_n = alpha_status_to_n(&TABLE, &b, alpha, n).unwrap();
        if status_alpha_n == AlphaStatus::All && sub_status_n != AlphaStatus::All {
            push(
                &mut violations,
                format!("{a}, n={n}: All at {alpha} but subset {b} is {sub_status_n:?}"),
            );
        }
        if status_alpha_n == AlphaStatus::None && sub_status_n != AlphaStatus::None {
            push(
                &mut violations,
                format!("{a}, n={n}: None at {alpha} but subset {b} is {sub_status_n:?}"),
            );
        }
    }
    if all_premises == 0 || none_premises == 0 {
        push(
            &mut violations,
            format!("premises never fired: All {all_premises}, None {none_premises}"),
        );
    }
    report(
        "10 monotonicity",
        &violations,
        format!("200 triples, All premise {all_premises}x, None premise {none_premises}x"),
    );
}

/// Criterion 11: Phi(A, n) is even whenever n is an element of A (n >= 2).
#[test]
fn criterion_11_parity() {
    let mut rng = Rng::new(0x11);
    let mut violations = Vec::new();
    for _ in 0..200 {
        let mut a = random_set(&mut rng, 12, 40);
        if a.iter().all(|x| x < 2) {
            a = IntSet::new(a.iter().chain([rng.range(2, 40)])).unwrap();
        }
        let members: Vec<u64> = a.iter().filter(|&x| x >= 2).collect();
        let n = members[rng.below(members.len() as u64) as usize];
        let count = phi_set(&TABLE, &a, n).unwrap();
        if !(&count % 2u32).is_zero() {
            push(&mut violations, format!("phi({a}, {n}) = {count} is odd"));
        }
    }
    report("11 parity", &violations, "200 sets with n in A".to_string());
}

/// Criterion 12: the incremental formula is permutation-invariant.
#[test]
fn criterion_12_permutation_invariance() {
    let mut rng = Rng::new(0x12);
    let mut violations = Vec::new();
    for _ in 0..100 {
        let a = random_set(&mut rng, 10, 40);
        let reference = f_incremental(&TABLE, &a, &(0..a.len()).collect::<Vec<_>>(), None).unwrap();
        let alpha = rng.range(1, a.len() as u64) as usize;
        let reference_alpha =
            f_incremental(&TABLE, &a, &(0..a.len()).collect::<Vec<_>>(), Some(alpha)).unwrap();
        for _ in 0..20 {
            let perm = random_perm(&mut rng, a.len());
            let got = f_incremental(&TABLE, &a, &perm, None).unwrap();
            if got != reference {
                push(
                    &mut violations,
                    format!("f({a}) under {perm:?}: {got} != {reference}"),
                );
            }
            let got = f_incremental(&TABLE, &a, &perm, Some(alpha)).unwrap();
            if got != reference_alpha {
                push(
                    &mut violations,
                    format!("f_{alpha}({a}) under {perm:?}: {got} != {reference_alpha}"),
                );
            }
        }
        // And the closed form agrees.
        if reference != f_set(&TABLE, &a).unwrap() {
            push(&mut violations, format!("f({a}) incremental != closed form"));
        }
    }
    report(
        "12 permutation-invariance",
        &violations,
        "100 sets x 20 permutations".to_string(),
    );
}
