//! Acceptance suite: one `[PASS]`/`[FAIL]` line per criterion, exact values.
//! Exits nonzero when any criterion fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use witnesslab::complexity::sampling::{random_dfa, random_minimal_dfa, sample_upper_bounds};
use witnesslab::complexity::{
    default_witnesses, expected_bound, measure, BoundTable, OperationKind, VerificationReport,
    Verifier, LEMMA_EXCEPTION_BOOL, LEMMA_EXCEPTION_REACHABLE, LEMMA_EXCEPTION_SYMDIFF,
};
use witnesslab::ops::star_nfa;
use witnesslab::*;

type Outcome = Result<String, String>;

const WIDE: usize = StateSet::WIDTH;

fn w(spec: &str) -> Dfa {
    build_witness(&spec.parse().unwrap()).unwrap()
}

fn det(nfa: &Nfa) -> Dfa {
    determinize_with_cap(nfa, WIDE).unwrap().dfa
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Fails with the first non-passing case, otherwise reports the case count.
fn all_pass(report: &VerificationReport) -> Outcome {
    if let Some(bad) = report.cases.iter().find(|c| !c.passed()) {
        return Err(format!(
            "{} m={:?} n={}: measured {:?}, expected {} ({:?})",
            bad.kind, bad.m, bad.n, bad.measured, bad.expected, bad.status
        ));
    }
    Ok(format!("{} cases exact", report.cases.len()))
}

fn within(outcome: Outcome, elapsed: Duration, limit: Option<Duration>) -> Outcome {
    let detail = outcome?;
    match limit {
        Some(limit) if elapsed > limit => Err(format!(
            "{detail}, but took {:.2}s (limit {}s)",
            elapsed.as_secs_f64(),
            limit.as_secs()
        )),
        _ => Ok(detail),
    }
}

fn kinds(list: &str) -> Vec<OperationKind> {
    OperationKind::parse_list(list).unwrap()
}

fn criterion_1() -> Outcome {
    let mut report = VerificationReport::default();
    let verifier = Verifier::default();
    for kind in kinds("bool") {
        for m in 3..=8 {
            for n in (3..=8).filter(|&n| n != m) {
                let case = verifier.verify_case(kind, m, n);
                ensure(case.witnesses.iter().all(|s| s.letters.len() == 2), || {
                    format!("{kind} ({m},{n}) did not use binary witnesses")
                })?;
                ensure(case.expected == (m * n) as u64, || {
                    format!("{kind} ({m},{n}): bound is not mn")
                })?;
                report.cases.push(case);
            }
        }
    }
    all_pass(&report)
}

fn criterion_2() -> Outcome {
    let report = Verifier::default().verify_sweep(&kinds("bool_r_right"), 3..=7, 3..=7);
    for case in &report.cases {
        let (m, n) = (case.m.unwrap() as u64, case.n as u64);
        let want = match case.kind {
            OperationKind::BoolRevRight(BoolOp::SymmetricDifference) => m << n,
            _ => (m << n) - (m - 1),
        };
        ensure(case.expected == want, || {
            format!("{} ({m},{n}): bound {}", case.kind, case.expected)
        })?;
    }
    all_pass(&report)
}

fn criterion_3() -> Outcome {
    let report = Verifier::default().verify_sweep(&kinds("bool_r_both"), 3..=6, 3..=6);
    for case in &report.cases {
        let (m, n) = (case.m.unwrap() as u32, case.n as u32);
        let want = match case.kind {
            OperationKind::BoolRevBoth(BoolOp::SymmetricDifference) => 1u64 << (m + n - 1),
            _ => ((1u64 << m) - 1) * ((1u64 << n) - 1) + 1,
        };
        ensure(case.expected == want, || {
            format!("{} ({m},{n}): bound {}", case.kind, case.expected)
        })?;
        let right = case.witnesses[1].finals.clone();
        let want_finals = if n == 3 { vec![1] } else { vec![1, 3] };
        ensure(right.iter().copied().eq(want_finals), || {
            format!("{} ({m},{n}): right finals {right:?}", case.kind)
        })?;
    }
    let detail = all_pass(&report)?;
    let at = |m: usize, n: usize| {
        report
            .cases
            .iter()
            .filter(move |c| c.m == Some(m) && c.n == n)
    };
    let n3 = (3..=6).flat_map(|m| at(m, 3)).count();
    let m3 = (3..=6).flat_map(|n| at(3, n)).count();
    let four = at(4, 4).count();
    ensure(n3 == 16 && m3 == 16 && four == 4, || {
        "missing n=3 or (4,4) cases".into()
    })?;
    Ok(format!("{detail}, incl. (4,4) and n=3 on both sides"))
}

fn criterion_4() -> Outcome {
    let k = w("U[n=4;letters=abc;finals=3]");
    let l = w("U[n=4;letters=bac;finals=3]");
    for op in BoolOp::ALL {
        let got =
            measure(OperationKind::BoolRevBoth(op), &k, Some(&l), 24).map_err(|e| e.to_string())?;
        let want = if op == BoolOp::SymmetricDifference {
            LEMMA_EXCEPTION_SYMDIFF
        } else {
            LEMMA_EXCEPTION_BOOL
        };
        ensure(got.measured as u64 == want, || {
            format!("{}: measured {}", op.name(), got.measured)
        })?;
        ensure(got.reachable_raw == LEMMA_EXCEPTION_REACHABLE, || {
            format!("{}: reachable {}", op.name(), got.reachable_raw)
        })?;
    }
    let report = Verifier::default().verify_lemma_witnesses(3..=6, 3..=6);
    let general = report
        .cases
        .iter()
        .filter(|c| (c.m, c.n) != (Some(4), 4))
        .all(|c| c.expected == expected_bound(c.kind, c.m.unwrap(), c.n).unwrap());
    ensure(general, || {
        "non-exceptional cases not checked against general bounds".into()
    })?;
    let detail = all_pass(&report)?;
    Ok(format!(
        "202/202/202/116, 232 reachable; {detail} over [3,6]^2"
    ))
}

fn criterion_5() -> Outcome {
    let report = Verifier::default().verify_sweep(&[OperationKind::CatRevRight], 3..=7, 3..=7);
    for case in &report.cases {
        let (m, n) = (case.m.unwrap() as u64, case.n as u32);
        let want = (m - 1) * (1 << n) + (1 << (n - 1)) - (m - 1);
        ensure(case.expected == want, || {
            format!("({m},{n}): bound {}", case.expected)
        })?;
    }
    all_pass(&report)
}

fn criterion_6() -> Outcome {
    let report = Verifier::default().verify_sweep(&[OperationKind::CatRevLeft], 3..=6, 3..=6);
    for case in &report.cases {
        let (m, n) = (case.m.unwrap() as u32, case.n as u32);
        ensure(case.expected == 3 << (m + n - 2), || {
            format!("({m},{n}): bound {}", case.expected)
        })?;
        let specs: Vec<String> = case.witnesses.iter().map(|s| s.to_string()).collect();
        ensure(
            specs[0].starts_with(&format!("V[n={m};letters=abcd"))
                && specs[1].starts_with(&format!("V[n={n};letters=dcba")),
            || format!("({m},{n}): witnesses {specs:?}"),
        )?;
    }
    all_pass(&report)
}

fn criterion_7() -> Outcome {
    let report = Verifier::default().verify_sweep(&[OperationKind::CatRevOuter], 3..=6, 3..=6);
    for case in &report.cases {
        let (m, n) = (case.m.unwrap() as u32, case.n as u32);
        let want = (3u64 << (m + n - 2)) - (1 << n) + 1;
        ensure(case.expected == want, || {
            format!("({m},{n}): bound {}", case.expected)
        })?;
        let specs: Vec<String> = case.witnesses.iter().map(|s| s.to_string()).collect();
        ensure(
            specs[0].starts_with(&format!("U[n={n};letters=dcba"))
                && specs[1].starts_with(&format!("U[n={m};letters=abcd")),
            || format!("({m},{n}): witnesses {specs:?}"),
        )?;
    }
    all_pass(&report)
}

fn criterion_8() -> Outcome {
    let report = Verifier::default().verify_sweep(&[OperationKind::StarRev], 3..=3, 3..=8);
    let measured: Vec<usize> = report.cases.iter().filter_map(|c| c.measured).collect();
    ensure(measured == vec![8, 16, 32, 64, 128, 256], || {
        format!("measured {measured:?}")
    })?;
    let detail = all_pass(&report)?;
    for n in 3..=8 {
        let l = w(&format!("U[n={n};letters=abc;finals=0]"));
        let starred = det(&star(&l));
        ensure(are_equivalent(&starred, &l).unwrap(), || {
            format!("L* != L at n={n}")
        })?;
    }
    Ok(format!("{detail}; L* = L for n in [3,8]"))
}

fn criterion_9() -> Outcome {
    let verifier = Verifier::default();
    let mut report =
        verifier.verify_sweep(&[OperationKind::Rev, OperationKind::Star], 3..=3, 3..=8);
    report.extend(verifier.verify_sweep(&[OperationKind::Cat], 3..=7, 3..=7));
    for case in &report.cases {
        let n = case.n as u32;
        let want = match case.kind {
            OperationKind::Rev => 1u64 << n,
            OperationKind::Star => (1 << (n - 1)) + (1 << (n - 2)),
            _ => (case.m.unwrap() as u64 - 1) * (1 << n) + (1 << (n - 1)),
        };
        ensure(case.expected == want, || {
            format!("{} n={n}: bound {}", case.kind, case.expected)
        })?;
        if case.kind == OperationKind::Star {
            ensure(case.witnesses[0].letters.len() == 2, || {
                "star witness is not binary".into()
            })?;
        }
    }
    let detail = all_pass(&report)?;
    for n in 3..=5usize {
        let size = transition_monoid_size(&w(&format!("U[n={n};letters=abc]")), 10_000).unwrap();
        ensure(size == n.pow(n as u32), || {
            format!("monoid of U_{n} has {size} elements")
        })?;
    }
    Ok(format!("{detail}; monoid sizes 27, 256, 3125"))
}

fn criterion_10a() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x10a);
    let mut count = 0;
    for i in 0..240 {
        let letters = if i % 2 == 0 { "ab" } else { "abc" };
        let n = 2 + i % 5;
        let d = random_minimal_dfa(&mut rng, n, &alphabet(letters));
        let a = minimize_refine(&d);
        let b = minimize_brzozowski(&d).map_err(|e| e.to_string())?;
        ensure(are_isomorphic(&a, &b).unwrap(), || {
            format!("sample {i}: minimizers disagree")
        })?;
        count += 1;
    }
    Ok(format!("{count} random minimal DFAs, n in [2,6]"))
}

fn criterion_10b() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x10b);
    let sigma = alphabet("abc");
    let pairs = 20;
    let words = 1000;
    for i in 0..pairs {
        let (m, n) = (rng.gen_range(2..=6), rng.gen_range(2..=6));
        let k = random_dfa(&mut rng, m, &sigma);
        let l = random_dfa(&mut rng, n, &sigma);
        let products: Vec<(BoolOp, Dfa)> = BoolOp::ALL
            .iter()
            .map(|&op| (op, boolean_product(&k, &l, op).unwrap().dfa))
            .collect();
        for _ in 0..words {
            let len = rng.gen_range(0..=16);
            let word = Word((0..len).map(|_| sigma[rng.gen_range(0..3)]).collect());
            let (a, b) = (k.accepts(&word).unwrap(), l.accepts(&word).unwrap());
            for (op, p) in &products {
                ensure(p.accepts(&word).unwrap() == op.accepts(a, b), || {
                    format!("pair {i}, {}: wrong on {word}", op.name())
                })?;
            }
        }
    }
    Ok(format!("{pairs} pairs x {words} words x 4 ops"))
}

fn criterion_10c() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x10c);
    let sigma = alphabet("abc");
    let mut pairs: Vec<(Dfa, Dfa)> = (0..50)
        .map(|_| {
            let (m, n) = (rng.gen_range(2..=6), rng.gen_range(2..=6));
            (
                random_dfa(&mut rng, m, &sigma),
                random_dfa(&mut rng, n, &sigma),
            )
        })
        .collect();
    for m in 3..=5 {
        for n in 3..=5 {
            pairs.push((
                w(&format!("U[n={m};letters=abc]")),
                w(&format!("U[n={n};letters=bac]")),
            ));
        }
    }
    for (i, (k, l)) in pairs.iter().enumerate() {
        let diff = boolean_product(k, l, BoolOp::Difference).unwrap().dfa;
        let meet = boolean_product(k, &complement(l), BoolOp::Intersection)
            .unwrap()
            .dfa;
        ensure(are_equivalent(&diff, &meet).unwrap(), || {
            format!("pair {i}")
        })?;
    }
    Ok(format!(
        "K \\ L = K ∩ complement(L) on {} pairs",
        pairs.len()
    ))
}

fn criterion_10d() -> Outcome {
    let mut checked = 0;
    for kind in OperationKind::all().into_iter().filter(|k| !k.is_unary()) {
        for m in 3..=5 {
            for n in 3..=5 {
                let (ks, ls) = default_witnesses(kind, m, n).unwrap();
                let (k, l) = (
                    build_witness(&ks).unwrap(),
                    build_witness(&ls.unwrap()).unwrap(),
                );
                if k.alphabet() != l.alphabet() {
                    continue;
                }
                let (kr, lr) = (det(&k.reverse()), det(&l.reverse()));
                for op in BoolOp::ALL {
                    let lhs = det(&boolean_product(&k, &l, op).unwrap().dfa.reverse());
                    let rhs = boolean_product(&kr, &lr, op).unwrap().dfa;
                    ensure(are_equivalent(&lhs, &rhs).unwrap(), || {
                        format!(
                            "{ks} {} {:?}: reversal does not distribute",
                            op.name(),
                            (m, n)
                        )
                    })?;
                }
                let kl = det(&concatenate(&k, &l.to_nfa()).unwrap());
                let lhs = det(&kl.reverse());
                let rhs = det(&concatenate_nfa(&l.reverse(), &k.reverse()).unwrap());
                ensure(are_equivalent(&lhs, &rhs).unwrap(), || {
                    format!("{ks}: (KL)^R != L^R K^R")
                })?;
                checked += 1;
            }
        }
    }
    for kind in OperationKind::all().into_iter().filter(|k| k.is_unary()) {
        for n in 3..=5 {
            let (ls, _) = default_witnesses(kind, 3, n).unwrap();
            let l = build_witness(&ls).unwrap();
            let lhs = det(&star(&l).reverse());
            let rhs = det(&star_nfa(&l.reverse()));
            ensure(are_equivalent(&lhs, &rhs).unwrap(), || {
                format!("{ls}: (L*)^R != (L^R)*")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} witness pairs and singles"))
}

fn criterion_10e() -> Outcome {
    let pairs = 60;
    let samples =
        sample_upper_bounds(0x10e, pairs, 6, &BoundTable::builtin()).map_err(|e| e.to_string())?;
    if let Some(bad) = samples.iter().find(|s| !s.holds()) {
        return Err(format!(
            "{} ({},{}): measured {} > bound {}",
            bad.kind, bad.m, bad.n, bad.measured, bad.bound
        ));
    }
    Ok(format!(
        "{pairs} seeded pairs, {} measurements",
        samples.len()
    ))
}

fn cli_exit(args: &[&str]) -> Result<i32, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_witnesslab"))
        .args(args)
        .env_remove("WITNESSLAB_MAX_N")
        .output()
        .map_err(|e| e.to_string())?;
    out.status.code().ok_or_else(|| "killed by a signal".into())
}

fn criterion_11() -> Outcome {
    let args = ["verify", "all", "--m-range", "3..5", "--n-range", "3..5"];
    let good = cli_exit(&args)?;
    ensure(good == 0, || format!("verify all exited {good}"))?;
    let corrupt =
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/corrupt_bounds.toml");
    let mut bad_args = args.to_vec();
    bad_args.extend(["--bounds", corrupt.to_str().unwrap()]);
    let bad = cli_exit(&bad_args)?;
    ensure(bad == 1, || format!("corrupted catalogue exited {bad}"))?;
    Ok("exit 0 with builtin bounds, exit 1 with corrupted fixture".into())
}

fn main() {
    type Check = (&'static str, &'static str, fn() -> Outcome, Option<u64>);
    let checks: [Check; 15] = [
        (
            "1",
            "boolean ops, identical binary streams, m != n in [3,8]: mn",
            criterion_1,
            Some(1),
        ),
        (
            "2",
            "boolean ops with L^R, [3,7]: m2^n-(m-1) and m2^n",
            criterion_2,
            Some(10),
        ),
        (
            "3",
            "boolean ops with K^R and L^R, [3,6]",
            criterion_3,
            Some(30),
        ),
        ("4", "unmodified witnesses at m = n = 4", criterion_4, None),
        (
            "5",
            "K L^R, [3,7]: (m-1)2^n+2^(n-1)-(m-1)",
            criterion_5,
            Some(10),
        ),
        ("6", "K^R L, [3,6]: 3*2^(m+n-2)", criterion_6, Some(30)),
        (
            "7",
            "(K L)^R, [3,6]: 3*2^(m+n-2)-2^n+1",
            criterion_7,
            Some(30),
        ),
        ("8", "(L^*)^R, n in [3,8]: 2^n", criterion_8, None),
        (
            "9",
            "reversal, star, product and monoid reference bounds",
            criterion_9,
            None,
        ),
        (
            "10a",
            "refinement and double-reversal minimizers agree",
            criterion_10a,
            None,
        ),
        (
            "10b",
            "product membership is pointwise",
            criterion_10b,
            None,
        ),
        (
            "10c",
            "difference equals intersection with complement",
            criterion_10c,
            None,
        ),
        (
            "10d",
            "reversal identities on witness pairs, m,n <= 5",
            criterion_10d,
            None,
        ),
        (
            "10e",
            "upper bounds hold on random pairs",
            criterion_10e,
            None,
        ),
        ("11", "CLI verify exit codes", criterion_11, None),
    ];
    let mut failures = 0;
    for (id, desc, check, limit) in checks {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = within(outcome, elapsed, limit.map(Duration::from_secs));
        let (tag, detail) = match &outcome {
            Ok(detail) => ("PASS", detail),
            Err(detail) => ("FAIL", detail),
        };
        println!(
            "[{tag}] criterion {id}: {desc} -- {detail} ({:.2}s)",
            elapsed.as_secs_f64()
        );
        failures += outcome.is_err() as usize;
    }
    println!(
        "acceptance: {} of {} criteria passed",
        checks.len() - failures,
        checks.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
