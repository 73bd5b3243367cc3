use jackpos::checks::{exit_code, overall_status};
use jackpos::{CheckId, Fault, Harness, Params, Status};
use jackpos_core::exactmath::{to_shifted_basis, BigRational};
use jackpos_core::symfunc::schur_coeff;
use jackpos_core::Partition;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn harness() -> Harness {
    Harness::default()
}

#[test]
fn catalog_names_round_trip() {
    assert_eq!(CheckId::ALL.len(), 22);
    for &c in CheckId::ALL {
        assert_eq!(c.name().parse::<CheckId>().unwrap(), c);
    }
    assert!("C9-nonsense".parse::<CheckId>().is_err());
}

#[test]
fn small_examples_verify() {
    let h = harness();
    for (id, n) in [(CheckId::C1Positivity, 2), (CheckId::T3Qyt, 2), (CheckId::P3M1n, 3)] {
        let r = h.run_check(id, &Params::new(n));
        assert_eq!(r.status, Status::Verified, "{id} n={n}: {r:?}");
        assert!(r.witness.is_none() && r.counts > 0);
    }
    let a = |mu: &str, lam: &str| to_shifted_basis(&schur_coeff(&p(mu), &p(lam)).unwrap(), 2).unwrap();
    let ints = |v: &[i64]| v.iter().map(|&x| BigRational::from_integer(x.into())).collect::<Vec<_>>();
    assert_eq!(a("2", "2"), ints(&[0, 2]));
    assert_eq!(a("2", "1,1"), ints(&[2, 0]));
}

#[test]
fn out_of_range_is_an_error() {
    let h = harness();
    for (id, n) in [(CheckId::C7Exact, 7), (CheckId::P3M1n, 11), (CheckId::RookRR, 0)] {
        let r = h.run_check(id, &Params::new(n));
        assert_eq!(r.status, Status::Error);
        assert!(r.error.as_deref().unwrap().contains(id.name()));
        assert_eq!(exit_code(r.status), 2);
    }
}

#[test]
fn params_parse() {
    let mut q = Params::new(3);
    q.set("fault", "2,1;1,1,1;0").unwrap();
    q.set("marginals", "true").unwrap();
    q.set("n", "4").unwrap();
    assert_eq!(q.n, 4);
    assert!(q.marginals);
    assert_eq!(q.fault, Some(Fault { mu: p("2,1"), lambda: p("1,1,1"), k: 0 }));
    assert!(q.set("depth", "3").is_err());
    assert!(q.set("fault", "2;2").is_err());
}

#[test]
fn trivial_and_small_sweeps_verify() {
    let h = harness();
    for n_max in [1, 4] {
        let results = h.sweep(n_max, CheckId::ALL, 2, &Params::default()).unwrap();
        assert_eq!(results.len(), CheckId::ALL.len() * n_max);
        for r in &results {
            assert_eq!(r.status, Status::Verified, "{r:?}");
        }
        assert_eq!(overall_status(&results), Status::Verified);
    }
}

#[test]
fn sweep_clamps_to_supported_range() {
    let results = harness().sweep(8, &[CheckId::C7Exact, CheckId::T8Qsym], 1, &Params::default()).unwrap();
    let ns: Vec<(String, String)> = results.iter().map(|r| (r.check_id.clone(), r.params["n"].clone())).collect();
    assert_eq!(ns.iter().filter(|(c, _)| c == "C7-exact").count(), 6);
    assert_eq!(ns.iter().filter(|(c, _)| c == "T8-qsym").count(), 8);
    assert!(results.iter().all(|r| r.status == Status::Verified));
}

#[test]
fn reruns_are_identical() {
    let h = harness();
    for &id in CheckId::ALL {
        let a = h.run_check(id, &Params::new(4));
        let b = harness().run_check(id, &Params::new(4));
        assert_eq!(
            (a.status, a.counts, &a.witness, &a.details),
            (b.status, b.counts, &b.witness, &b.details),
            "{id}"
        );
    }
}

/// `a_k(μ, λ)` recomputed straight from the symmetric function layer, with
/// the same sign flip the fault applies.
fn replay_shifted(f: &Fault) -> BigRational {
    let c = schur_coeff(&f.mu, &f.lambda).unwrap();
    -to_shifted_basis(&c, f.mu.size()).unwrap()[f.k].clone()
}

#[test]
fn injected_fault_yields_replayable_witness() {
    let h = harness();
    let fault = Fault { mu: p("2"), lambda: p("2"), k: 1 };
    let params = Params { n: 2, marginals: false, fault: Some(fault.clone()) };
    let r = h.run_check(CheckId::C1Positivity, &params);
    assert_eq!(r.status, Status::Counterexample);
    assert_eq!(exit_code(r.status), 1);
    let w = r.witness.expect("witness");
    assert_eq!(w.mu.as_deref(), Some("2"));
    assert_eq!(w.lambda.as_deref(), Some("2"));
    assert_eq!(w.k, Some(1));
    let replayed = replay_shifted(&Fault { mu: w.mu.unwrap().parse().unwrap(), lambda: w.lambda.unwrap().parse().unwrap(), k: 1 });
    assert_eq!(replayed.to_string(), w.value);
    assert!(replayed < BigRational::from_integer(0.into()));

    // the same flip is caught by every check that reads the coefficient
    let fault = Fault { mu: p("3"), lambda: p("3"), k: 2 };
    let params = Params { n: 3, marginals: false, fault: Some(fault) };
    for id in [
        CheckId::C1Positivity,
        CheckId::C2Positivity,
        CheckId::T3Qyt,
        CheckId::Cor1Mass,
        CheckId::Cor2Mass,
        CheckId::P3M1n,
        CheckId::Cor7Induction,
        CheckId::Cor9Fexp,
        CheckId::C5Necessary,
        CheckId::C6Necessary,
        CheckId::C7Exact,
        CheckId::P11Hook,
        CheckId::T12Content,
    ] {
        let r = h.run_check(id, &params);
        assert_eq!(r.status, Status::Counterexample, "{id}");
        assert!(r.witness.is_some());
    }
    // a fault in a zero coefficient changes nothing
    let params = Params { n: 3, marginals: false, fault: Some(Fault { mu: p("3"), lambda: p("3"), k: 0 }) };
    assert_eq!(h.run_check(CheckId::C1Positivity, &params).status, Status::Verified);
}

#[test]
fn marginals_are_reported_in_details() {
    let h = harness();
    for id in [CheckId::C5Necessary, CheckId::C6Necessary] {
        let plain = h.run_check(id, &Params::new(5));
        assert!(!plain.details.contains_key("marginals"));
        let r = h.run_check(id, &Params { n: 5, marginals: true, fault: None });
        assert_eq!(r.status, Status::Verified);
        assert_eq!(r.details["marginals"], "verified");
    }
    assert_eq!(h.run_check(CheckId::C5Necessary, &Params::new(4)).details["total"], "576");
    assert_eq!(h.run_check(CheckId::C6Necessary, &Params::new(4)).details["total"], "360");
}

#[test]
fn json_uses_decimal_strings() {
    let fault = Fault { mu: p("3"), lambda: p("3"), k: 2 };
    let r = harness().run_check(CheckId::T3Qyt, &Params { n: 3, marginals: false, fault: Some(fault) });
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    assert_eq!(v["status"], "counterexample");
    assert_eq!(v["witness"]["value"], "-6");
    assert_eq!(v["witness"]["expected"], "6");
    assert_eq!(v["params"]["fault"], "3;3;2");
}
