//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. All comparisons are exact.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use jackpos::{CheckId, Harness, Params, Status};
use jackpos_core::exactmath::{
    bell, factorial, from_falling, from_shifted, shifted_to_falling, to_falling_basis, to_shifted_basis, AlphaPoly,
    BigInt, BigRational,
};
use jackpos_core::rook::{all_ferrers_boards, content_board, hit_numbers, hook_boards, rook_numbers};
use jackpos_core::symfunc::{diagonal_product, jack_monomial, jack_row_closed_form, schur_coeff};
use jackpos_core::words::{dual_equiv, permutations, rsk, rsk_inverse};
use jackpos_core::{all_partitions, Partition};
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;

type Outcome = Result<String, String>;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Run `id` for every `n` in `ns`; all must verify.
fn verified(h: &Harness, id: CheckId, ns: std::ops::RangeInclusive<usize>) -> Result<u64, String> {
    let mut count = 0;
    for n in ns {
        let r = h.run_check(id, &Params::new(n));
        match r.status {
            Status::Verified => count += r.counts,
            Status::Counterexample => return Err(format!("{id} n={n}: counterexample {}", r.witness.unwrap())),
            Status::Error => return Err(format!("{id} n={n}: {}", r.error.unwrap_or_default())),
        }
    }
    Ok(count)
}

fn ints(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
}

fn a1(h: &Harness) -> Outcome {
    let c1 = verified(h, CheckId::C1Positivity, 1..=8)?;
    let c2 = verified(h, CheckId::C2Positivity, 1..=8)?;
    Ok(format!("n <= 8, {c1} shifted and {c2} falling coefficients"))
}

fn a2(h: &Harness) -> Outcome {
    let c1 = verified(h, CheckId::C1RealRoots, 1..=7)?;
    let c2 = verified(h, CheckId::C2RealRoots, 1..=7)?;
    Ok(format!("n <= 7, {} Sturm sequences", c1 + c2))
}

fn a3(h: &Harness) -> Outcome {
    let c = verified(h, CheckId::T3Qyt, 1..=7)?;
    let a = |mu: &str, lam: &str| to_shifted_basis(&schur_coeff(&p(mu), &p(lam)).unwrap(), 2).unwrap();
    ensure(a("2", "2") == ints(&[0, 2]), || format!("a((2),(2)) = {:?}", a("2", "2")))?;
    ensure(a("2", "1,1") == ints(&[2, 0]), || format!("a((2),(1,1)) = {:?}", a("2", "1,1")))?;
    Ok(format!("n <= 7, {c} coefficients; a((2),(2)) = (0,2), a((2),(1,1)) = (2,0)"))
}

fn a4(h: &Harness) -> Outcome {
    verified(h, CheckId::P3M1n, 1..=10)?;
    verified(h, CheckId::Cor1Mass, 1..=7)?;
    verified(h, CheckId::Cor2Mass, 1..=7)?;
    Ok("P3 n <= 10, Cor1/Cor2 n <= 7".into())
}

fn a5(_: &Harness) -> Outcome {
    for n in 1..=8 {
        let row = Partition::row(n);
        ensure(jack_monomial(&row).unwrap() == jack_row_closed_form(n).unwrap(), || {
            format!("J_({n}) differs from the closed form")
        })?;
    }
    let mut count = 0;
    for n in 1..=7 {
        for mu in all_partitions(n) {
            let got = schur_coeff(&mu, &mu).unwrap();
            let want = diagonal_product(&mu);
            ensure(got == want, || format!("mu = {mu}: {got} vs {want}"))?;
            count += 1;
        }
    }
    Ok(format!("row closed form n <= 8, {count} diagonal products n <= 7"))
}

fn a6(h: &Harness) -> Outcome {
    verified(h, CheckId::T8Qsym, 1..=6)?;
    verified(h, CheckId::Cor9Fexp, 1..=6)?;
    Ok("n <= 6".into())
}

fn a7(h: &Harness) -> Outcome {
    let mut statuses = Vec::new();
    for n in 1..=5 {
        let r = h.run_check(CheckId::C7Exact, &Params::new(n));
        match r.status {
            Status::Error => return Err(format!("n={n}: {}", r.error.unwrap_or_default())),
            Status::Counterexample => {
                let w = r.witness.ok_or("counterexample without witness")?;
                statuses.push(format!("n={n} counterexample ({w})"));
            }
            Status::Verified => statuses.push(format!("n={n} verified")),
        }
    }
    Ok(statuses.join(", "))
}

fn a8(h: &Harness) -> Outcome {
    verified(h, CheckId::P11Hook, 1..=7)?;
    verified(h, CheckId::T12Content, 1..=7)?;
    let (bc, bd) = hook_boards(4, 1).unwrap();
    ensure(bc.to_string() == "B(1,1,2,3)" && bd.to_string() == "B(2,2,2,3)", || format!("hook boards {bc}, {bd}"))?;
    let cb = content_board(&p("3,2")).unwrap();
    ensure(cb.to_string() == "B(2,2,2,3,3)", || format!("content board {cb}"))?;
    Ok("P11 n <= 7, T12 n <= 7, B(1,1,2,3)/B(2,2,2,3) and B(2,2,2,3,3)".into())
}

fn a9(h: &Harness) -> Outcome {
    verified(h, CheckId::L5Bijection, 1..=5)?;
    verified(h, CheckId::L6Rsk, 1..=7)?;
    verified(h, CheckId::L1Symmetry, 1..=8)?;
    verified(h, CheckId::P4Bijection, 1..=8)?;
    Ok("L5 n <= 5 (dotted bijection enumerated), L6 n <= 7, L1 and P4 n <= 8".into())
}

fn a10(_: &Harness) -> Outcome {
    let mut runner = TestRunner::deterministic();
    for n in 1..=8 {
        let strategy = proptest::collection::vec(-1000i64..=1000, n);
        for _ in 0..1000 {
            let mut c = vec![0];
            c.extend(strategy.new_tree(&mut runner).map_err(|e| e.to_string())?.current());
            let poly = AlphaPoly::from_ints(&c);
            let a = to_shifted_basis(&poly, n).unwrap();
            let b = to_falling_basis(&poly, n).unwrap();
            ensure(from_shifted(&a, n) == poly && from_falling(&b, n) == poly && shifted_to_falling(&a) == b, || {
                format!("round trip fails for {poly}")
            })?;
        }
    }
    for n in 1..=6 {
        let mut seen = BTreeSet::new();
        for pi in permutations(n) {
            let (pt, qt) = rsk(&pi);
            ensure(rsk_inverse(&pt, &qt).unwrap() == pi, || format!("RSK inverse fails at {pi}"))?;
            seen.insert((pt, qt));
            for i in 2..n {
                let d = dual_equiv(&pi, i).unwrap();
                ensure(d.descent_set() == pi.descent_set() && rsk(&d).0.shape() == rsk(&pi).0.shape(), || {
                    format!("d_{i}({pi}) = {d}")
                })?;
            }
        }
        ensure(seen.len() == permutations(n).len(), || format!("RSK not injective at n = {n}"))?;
    }
    let mut boards = 0;
    for n in 1..=5 {
        for b in all_ferrers_boards(n) {
            let r = rook_numbers(&b);
            let lhs: AlphaPoly = (0..=n).map(|k| AlphaPoly::falling_factorial(n - k).scale_int(&r[k])).sum();
            ensure(lhs == b.factorization(), || format!("factorization fails on {b}"))?;
            let mut hits = vec![BigInt::from(0); n + 1];
            for pi in permutations(n) {
                let k = pi.as_slice().iter().enumerate().filter(|&(c, &row)| row <= b.heights()[c]).count();
                hits[k] += 1;
            }
            ensure(hit_numbers(&b) == hits, || format!("hit numbers of {b}"))?;
            boards += 1;
        }
    }
    Ok(format!("8000 polynomials, S_1..S_6 RSK and d_i, {boards} boards"))
}

fn a11(h: &Harness) -> Outcome {
    let squared: fn(usize) -> BigInt = |n| factorial(n) * factorial(n);
    let bell_times: fn(usize) -> BigInt = |n| factorial(n) * bell(n);
    for (id, total) in [(CheckId::C5Necessary, squared), (CheckId::C6Necessary, bell_times)] {
        for n in 1..=6 {
            let r = h.run_check(id, &Params::new(n));
            ensure(r.status == Status::Verified, || format!("{id} n={n}: {:?} {:?}", r.witness, r.error))?;
            let want = total(n).to_string();
            ensure(r.details.get("total") == Some(&want), || format!("{id} n={n}: total {:?}", r.details.get("total")))?;
        }
    }
    Ok("n <= 6, totals (n!)^2 and n! Bell(n)".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn(&Harness) -> Outcome); 11] = [
        ("A1", a1),
        ("A2", a2),
        ("A3", a3),
        ("A4", a4),
        ("A5", a5),
        ("A6", a6),
        ("A7", a7),
        ("A8", a8),
        ("A9", a9),
        ("A10", a10),
        ("A11", a11),
    ];
    let h = Harness::default();
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| f(&h)))
            .unwrap_or_else(|e| Err(e.downcast_ref::<String>().cloned().unwrap_or_else(|| "panic".into())));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("{name:<4} PASS  {msg} ({secs:.2}s)"),
            Err(msg) => {
                failed += 1;
                println!("{name:<4} FAIL  {msg} ({secs:.2}s)");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 11 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
