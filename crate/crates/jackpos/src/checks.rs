//! The check catalog: one runnable verification per identity or conjecture.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use jackpos_core::exactmath::{
    bell, eulerian_row, factorial, from_shifted, is_real_rooted, shifted_to_falling, stirling2_row, to_falling_basis,
    to_shifted_basis, AlphaPoly, BigInt, BigRational,
};
use jackpos_core::rook::{all_ferrers_boards, content_board, generating_poly, hit_numbers, hook_boards, rook_numbers};
use jackpos_core::symfunc::{
    rsk_fundamental_expansion, f_beta_expansion, qyt_schur_side, restricted_monomial_side, schur_to_fundamental,
    theorem8_lhs, theorem8_rhs, Basis, QSymExpansion, SymExpansion,
};
use jackpos_core::tableaux::{
    destandardize, generate_ssyt, generate_syt, is_quasi_yamanouchi, kostka, qyt_count_direct,
    qyt_counts, runs, standardize,
};
use jackpos_core::words::{dotted_forward, dotted_counts, restricted_eulerian_row, restricted_perms, restricted_to_pair, DottedDiagram};
use jackpos_core::{all_partitions, Partition};
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use std::sync::Arc;

use crate::cache::{JackStore, SchurData};
use crate::error::{HarnessError, Result};

macro_rules! catalog {
    ($($variant:ident => $name:literal, $max:literal, $about:literal;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum CheckId { $($variant),* }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$variant),*];

            pub fn name(self) -> &'static str {
                match self { $(CheckId::$variant => $name),* }
            }

            /// Largest supported `n`.
            pub fn max_n(self) -> usize {
                match self { $(CheckId::$variant => $max),* }
            }

            pub fn about(self) -> &'static str {
                match self { $(CheckId::$variant => $about),* }
            }
        }
    };
}

catalog! {
    C1Positivity => "C1-positivity", 10, "shifted-basis coefficients a_k(mu, lambda) are nonnegative integers";
    C1RealRoots => "C1-realroots", 10, "sum_k a_k z^k has only real zeros";
    C2Positivity => "C2-positivity", 10, "falling-basis coefficients b_j(mu, lambda) are nonnegative integers";
    C2RealRoots => "C2-realroots", 10, "sum_k b_{n-k} z^k has only real zeros";
    C1C2Link => "C1C2-link", 10, "shifted_to_falling(a) equals the direct falling expansion";
    P3M1n => "P3-m1n", 10, "n! alpha^n in both binomial bases and as [m_1^n] of every tilde J";
    Cor1Mass => "Cor1-mass", 10, "sum_lambda a_k K_{lambda,1^n} = n! A(n,k)";
    Cor2Mass => "Cor2-mass", 10, "sum_lambda b_{n-k} K_{lambda,1^n} = n! S(n,k)";
    T3Qyt => "T3-qyt", 9, "a_k((n), lambda) = n! QYT_{=k+1}(lambda')";
    L5Bijection => "L5-bijection", 8, "dotted diagrams count restricted permutations by descents";
    L6Rsk => "L6-rsk", 8, "A(lambda,k) = sum_nu K_{nu,lambda} QYT_{=k+1}(nu)";
    Cor7Induction => "Cor7-induction", 8, "restricted Eulerian m-expansion equals the QYT s-expansion";
    T8Qsym => "T8-qsym", 8, "sum_pi t^des(pi) F_Des(P(pi)) = sum QYT_{=k+1}(mu) t^k s_mu";
    Cor9Fexp => "Cor9-Fexp", 8, "F-expansion of tilde J_(n) through RSK insertion tableaux";
    C5Necessary => "C5-necessary", 8, "F-coefficients in the shifted basis are nonnegative with total (n!)^2";
    C6Necessary => "C6-necessary", 8, "F-coefficients in the falling basis are nonnegative with total n! Bell(n)";
    C7Exact => "C7-exact", 6, "F-expansion of tilde J_(n) through set partitions f_beta";
    P11Hook => "P11-hook", 10, "hook diagonal coefficients from the boards B_c and B_d";
    T12Content => "T12-content", 9, "coefficients of tilde J_(n) from content boards";
    L1Symmetry => "L1-symmetry", 9, "QYT_{=k}(lambda) = QYT_{=n+1-k}(lambda')";
    P4Bijection => "P4-bijection", 9, "destandardization is a bijection SYT -> QYT";
    RookRR => "RookRR", 7, "rook and hit polynomials of Ferrers boards have only real zeros";
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .iter()
            .copied()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| HarnessError::UnknownCheck(s.to_string()))
    }
}

/// Negate one shifted-basis coefficient before any check sees it. Used to
/// make sure the harness does report counterexamples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fault {
    pub mu: Partition,
    pub lambda: Partition,
    pub k: usize,
}

impl FromStr for Fault {
    type Err = HarnessError;

    /// `"mu;lambda;k"`, e.g. `"2;2;1"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || HarnessError::BadParam(format!("fault {s:?} is not of the form mu;lambda;k"));
        let mut it = s.split(';');
        let (Some(mu), Some(lambda), Some(k), None) = (it.next(), it.next(), it.next(), it.next()) else {
            return Err(bad());
        };
        Ok(Fault {
            mu: mu.parse().map_err(|_| bad())?,
            lambda: lambda.parse().map_err(|_| bad())?,
            k: k.trim().parse().map_err(|_| bad())?,
        })
    }
}

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};{}", self.mu, self.lambda, self.k)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub n: usize,
    /// Also check per-descent marginals in C5/C6 (reported in `details`).
    pub marginals: bool,
    pub fault: Option<Fault>,
}

impl Params {
    pub fn new(n: usize) -> Self {
        Params { n, ..Self::default() }
    }

    /// Apply `key=value` overrides: `n`, `marginals`, `fault`.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key.trim() {
            "n" => self.n = value.trim().parse().map_err(|_| HarnessError::BadParam(format!("n = {value:?}")))?,
            "marginals" => {
                self.marginals = value.trim().parse().map_err(|_| HarnessError::BadParam(format!("marginals = {value:?}")))?
            }
            "fault" => self.fault = Some(value.parse()?),
            other => return Err(HarnessError::BadParam(format!("unknown parameter {other:?}"))),
        }
        Ok(())
    }

    fn to_map(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        m.insert("n".into(), self.n.to_string());
        if self.marginals {
            m.insert("marginals".into(), "true".into());
        }
        if let Some(f) = &self.fault {
            m.insert("fault".into(), f.to_string());
        }
        m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Counterexample,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Counterexample => "counterexample",
            Status::Error => "error",
        })
    }
}

/// The first violation found. `value` is the quantity read off the Jack
/// expansion (or the left side of an identity), `expected` what the formula
/// predicts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
}

impl Witness {
    fn value(v: impl fmt::Display) -> Self {
        Witness { value: v.to_string(), ..Self::default() }
    }

    fn mu(mut self, mu: &Partition) -> Self {
        self.mu = Some(mu.to_string());
        self
    }

    fn lambda(mut self, lambda: &Partition) -> Self {
        self.lambda = Some(lambda.to_string());
        self
    }

    fn sigma(mut self, sigma: impl fmt::Display) -> Self {
        self.sigma = Some(sigma.to_string());
        self
    }

    fn k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    fn expected(mut self, e: impl fmt::Display) -> Self {
        self.expected = Some(e.to_string());
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(m) = &self.mu {
            parts.push(format!("mu={m}"));
        }
        if let Some(l) = &self.lambda {
            parts.push(format!("lambda={l}"));
        }
        if let Some(s) = &self.sigma {
            parts.push(format!("sigma={s}"));
        }
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        parts.push(format!("value={}", self.value));
        if let Some(e) = &self.expected {
            parts.push(format!("expected={e}"));
        }
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Wall time in seconds.
    pub elapsed: f64,
    /// Instances examined.
    pub counts: u64,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, String>,
}

/// Running count of examined instances with the first failure kept.
#[derive(Default)]
struct Tally {
    count: u64,
    witness: Option<Witness>,
    details: BTreeMap<String, String>,
}

impl Tally {
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.count += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn merge(&mut self, other: Tally) {
        self.count += other.count;
        if self.witness.is_none() {
            self.witness = other.witness;
        }
        for (k, v) in other.details {
            self.details.entry(k).or_insert(v);
        }
    }

    fn merge_all(parts: Vec<Tally>) -> Tally {
        let mut t = Tally::default();
        for p in parts {
            t.merge(p);
        }
        t
    }
}

fn fmt_vec<T: fmt::Display>(v: &[T]) -> String {
    let s: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", s.join(", "))
}

fn is_nat(c: &BigRational) -> bool {
    c.is_integer() && !c.is_negative()
}

fn rat(i: &BigInt) -> BigRational {
    BigRational::from_integer(i.clone())
}

/// One Schur coefficient `⟨J̃_μ, s_λ⟩` with both coordinate vectors.
struct Coeff {
    mu: Partition,
    lambda: Partition,
    poly: AlphaPoly,
    /// `a_0..a_{n-1}`
    shifted: Vec<BigRational>,
    /// `b_0..b_{n-1}`, by subscript
    falling: Vec<BigRational>,
}

/// Catalog runner bound to a Jack store.
#[derive(Debug, Default)]
pub struct Harness {
    store: JackStore,
}

impl Harness {
    pub fn new(store: JackStore) -> Self {
        Harness { store }
    }

    pub fn store(&self) -> &JackStore {
        &self.store
    }

    pub fn run_check(&self, id: CheckId, params: &Params) -> CheckResult {
        let start = Instant::now();
        let outcome = if params.n == 0 || params.n > id.max_n() {
            Err(HarnessError::OutOfRange { check: id.name().into(), n: params.n, max: id.max_n() })
        } else {
            self.dispatch(id, params)
        };
        let elapsed = start.elapsed().as_secs_f64();
        let params_map = params.to_map();
        match outcome {
            Ok(t) => CheckResult {
                check_id: id.name().into(),
                params: params_map,
                status: if t.witness.is_some() { Status::Counterexample } else { Status::Verified },
                witness: t.witness,
                error: None,
                elapsed,
                counts: t.count,
                details: t.details,
            },
            Err(e) => CheckResult {
                check_id: id.name().into(),
                params: params_map,
                status: Status::Error,
                witness: None,
                error: Some(e.to_string()),
                elapsed,
                counts: 0,
                details: BTreeMap::new(),
            },
        }
    }

    fn dispatch(&self, id: CheckId, p: &Params) -> Result<Tally> {
        let n = p.n;
        match id {
            CheckId::C1Positivity => self.c1_positivity(p),
            CheckId::C1RealRoots => self.c1_realroots(p),
            CheckId::C2Positivity => self.c2_positivity(p),
            CheckId::C2RealRoots => self.c2_realroots(p),
            CheckId::C1C2Link => self.c1c2_link(p),
            CheckId::P3M1n => self.p3_m1n(p),
            CheckId::Cor1Mass => self.cor1_mass(p),
            CheckId::Cor2Mass => self.cor2_mass(p),
            CheckId::T3Qyt => self.t3_qyt(p),
            CheckId::L5Bijection => l5_bijection(n),
            CheckId::L6Rsk => l6_rsk(n),
            CheckId::Cor7Induction => self.cor7_induction(p),
            CheckId::T8Qsym => Ok(qsym_compare(&theorem8_lhs(n), &theorem8_rhs(n), "theorem8_rhs")),
            CheckId::Cor9Fexp => self.cor9_fexp(p),
            CheckId::C5Necessary => self.c5_c6(p, true),
            CheckId::C6Necessary => self.c5_c6(p, false),
            CheckId::C7Exact => self.c7_exact(p),
            CheckId::P11Hook => self.p11_hook(p),
            CheckId::T12Content => self.t12_content(p),
            CheckId::L1Symmetry => Ok(l1_symmetry(n)),
            CheckId::P4Bijection => p4_bijection(n),
            CheckId::RookRR => rook_rr(n),
        }
    }

    /// The Schur expansions of degree `p.n`, with the fault (if any) applied.
    fn schur(&self, p: &Params) -> Result<Arc<SchurData>> {
        let data = self.store.schur(p.n)?;
        let Some(f) = p.fault.as_ref().filter(|f| f.mu.size() == p.n && f.lambda.size() == p.n) else {
            return Ok(data);
        };
        let mut expansions = data.expansions.clone();
        for (mu, e) in expansions.iter_mut().filter(|(mu, _)| mu == &f.mu) {
            let mut a = to_shifted_basis(&e.coeff(&f.lambda), p.n)?;
            if let Some(x) = a.get_mut(f.k) {
                *x = -x.clone();
            }
            let faulty = from_shifted(&a, p.n);
            let mut terms = e.terms().clone();
            terms.insert(f.lambda.clone(), faulty);
            *e = SymExpansion::from_terms(p.n, Basis::Schur, terms.into_iter().filter(|(_, c)| !c.is_zero()))
                .map_err(|err| jackpos_core::Error::Integrity(format!("fault on {mu}: {err}")))?;
        }
        Ok(Arc::new(SchurData { kostka: data.kostka.clone(), expansions }))
    }

    /// Every `⟨J̃_μ, s_λ⟩` of degree `n`, μ and λ in descending lexicographic
    /// order.
    fn coefficients(&self, p: &Params) -> Result<Vec<Coeff>> {
        let n = p.n;
        let data = self.schur(p)?;
        let parts = all_partitions(n);
        let rows: Vec<Result<Vec<Coeff>>> = data
            .expansions
            .par_iter()
            .map(|(mu, e)| {
                parts
                    .iter()
                    .map(|lam| {
                        let poly = e.coeff(lam);
                        let shifted = to_shifted_basis(&poly, n)?;
                        let falling = to_falling_basis(&poly, n)?;
                        Ok(Coeff { mu: mu.clone(), lambda: lam.clone(), poly, shifted, falling })
                    })
                    .collect()
            })
            .collect();
        let mut out = Vec::with_capacity(parts.len() * parts.len());
        for r in rows {
            out.extend(r?);
        }
        Ok(out)
    }

    fn c1_positivity(&self, p: &Params) -> Result<Tally> {
        let mut t = Tally::default();
        for c in self.coefficients(p)? {
            for (k, a) in c.shifted.iter().enumerate() {
                t.check(is_nat(a), || Witness::value(a).mu(&c.mu).lambda(&c.lambda).k(k));
            }
        }
        Ok(t)
    }

    fn c2_positivity(&self, p: &Params) -> Result<Tally> {
        let mut t = Tally::default();
        for c in self.coefficients(p)? {
            for (j, b) in c.falling.iter().enumerate() {
                t.check(is_nat(b), || Witness::value(b).mu(&c.mu).lambda(&c.lambda).k(j));
            }
        }
        t.details.insert("k".into(), "falling subscript j of b_j".into());
        Ok(t)
    }

    fn c1_realroots(&self, p: &Params) -> Result<Tally> {
        let coeffs = self.coefficients(p)?;
        let parts: Vec<Result<Tally>> = coeffs
            .par_iter()
            .map(|c| {
                let mut t = Tally::default();
                let g = AlphaPoly::from_coeffs(c.shifted.clone());
                let ok = g.is_zero() || is_real_rooted(&g)?;
                t.check(ok, || Witness::value(fmt_vec(&c.shifted)).mu(&c.mu).lambda(&c.lambda));
                Ok(t)
            })
            .collect();
        Ok(Tally::merge_all(parts.into_iter().collect::<Result<_>>()?))
    }

    fn c2_realroots(&self, p: &Params) -> Result<Tally> {
        let n = p.n;
        let coeffs = self.coefficients(p)?;
        let parts: Vec<Result<Tally>> = coeffs
            .par_iter()
            .map(|c| {
                let mut t = Tally::default();
                // Σ_{k=1}^{n} b_{n-k} z^k
                let mut g = vec![BigRational::zero(); n + 1];
                for k in 1..=n {
                    g[k] = c.falling[n - k].clone();
                }
                let g = AlphaPoly::from_coeffs(g);
                let ok = g.is_zero() || is_real_rooted(&g)?;
                t.check(ok, || Witness::value(fmt_vec(&c.falling)).mu(&c.mu).lambda(&c.lambda));
                Ok(t)
            })
            .collect();
        Ok(Tally::merge_all(parts.into_iter().collect::<Result<_>>()?))
    }

    fn c1c2_link(&self, p: &Params) -> Result<Tally> {
        let mut t = Tally::default();
        for c in self.coefficients(p)? {
            let linked = shifted_to_falling(&c.shifted);
            let direct = to_falling_basis(&c.poly, p.n)?;
            let ok = linked == direct && linked.iter().all(BigRational::is_integer);
            t.check(ok, || {
                Witness::value(fmt_vec(&linked)).expected(fmt_vec(&direct)).mu(&c.mu).lambda(&c.lambda)
            });
        }
        Ok(t)
    }

    fn p3_m1n(&self, p: &Params) -> Result<Tally> {
        let n = p.n;
        let mut t = Tally::default();
        let n_fact = factorial(n);
        let target = AlphaPoly::monomial(rat(&n_fact), n);
        let eul = eulerian_row(n);
        let stir = stirling2_row(n);
        let via_eulerian: AlphaPoly = (0..n)
            .map(|k| AlphaPoly::binomial_shifted(k as i64, n).scale_int(&(&n_fact * &eul[k])))
            .sum();
        let via_stirling: AlphaPoly = (1..=n)
            .map(|k| AlphaPoly::falling_factorial(k).scale_int(&(&n_fact * &stir[k])))
            .sum();
        t.check(via_eulerian == target, || Witness::value(&via_eulerian).expected(&target));
        t.check(via_stirling == target, || Witness::value(&via_stirling).expected(&target));
        let a = to_shifted_basis(&target, n)?;
        let want_a: Vec<BigRational> = (0..n).map(|k| rat(&(&n_fact * &eul[k]))).collect();
        t.check(a == want_a, || Witness::value(fmt_vec(&a)).expected(fmt_vec(&want_a)));
        let b = to_falling_basis(&target, n)?;
        let want_b: Vec<BigRational> = (0..n).map(|j| rat(&(&n_fact * &stir[n - j]))).collect();
        t.check(b == want_b, || Witness::value(fmt_vec(&b)).expected(fmt_vec(&want_b)));
        // [m_{1^n}] is the sum of the Schur coefficients weighted by K_{λ,1^n}
        let data = self.schur(p)?;
        let col = Partition::column(n);
        for (mu, e) in &data.expansions {
            let c = data.kostka.to_monomial(e)?.coeff(&col);
            t.check(c == target, || Witness::value(&c).expected(&target).mu(mu));
        }
        Ok(t)
    }

    fn cor1_mass(&self, p: &Params) -> Result<Tally> {
        let n = p.n;
        let n_fact = factorial(n);
        let eul = eulerian_row(n);
        let mut sums: BTreeMap<Partition, Vec<BigRational>> = BTreeMap::new();
        for c in self.coefficients(p)? {
            let kl = rat(&c.lambda.syt_count());
            let s = sums.entry(c.mu.clone()).or_insert_with(|| vec![BigRational::zero(); n]);
            for (k, a) in c.shifted.iter().enumerate() {
                s[k] += a * &kl;
            }
        }
        let mut t = Tally::default();
        for (mu, s) in &sums {
            for k in 0..n {
                let want = rat(&(&n_fact * &eul[k]));
                t.check(s[k] == want, || Witness::value(&s[k]).expected(&want).mu(mu).k(k));
            }
        }
        Ok(t)
    }

    fn cor2_mass(&self, p: &Params) -> Result<Tally> {
        let n = p.n;
        let n_fact = factorial(n);
        let stir = stirling2_row(n);
        let mut sums: BTreeMap<Partition, Vec<BigRational>> = BTreeMap::new();
        for c in self.coefficients(p)? {
            let kl = rat(&c.lambda.syt_count());
            let s = sums.entry(c.mu.clone()).or_insert_with(|| vec![BigRational::zero(); n]);
            for (j, b) in c.falling.iter().enumerate() {
                s[j] += b * &kl;
            }
        }
        let mut t = Tally::default();
        for (mu, s) in &sums {
            // b_{n-k} multiplies C(α, k) k!, k = 1..n
            for k in 1..=n {
                let want = rat(&(&n_fact * &stir[k]));
                let got = &s[n - k];
                t.check(*got == want, || Witness::value(got).expected(&want).mu(mu).k(k));
            }
        }
        Ok(t)
    }

    fn t3_qyt(&self, p: &Params) -> Result<Tally> {
        let n = p.n;
        let n_fact = factorial(n);
        let row = Partition::row(n);
        let mut t = Tally::default();
        for c in self.coefficients(p)?.into_iter().filter(|c| c.mu == row) {
            let q = qyt_counts(&c.lambda.conjugate());
            for k in 0..n {
                let want = rat(&(&n_fact * BigInt::from(q[k])));
                let got = &c.shifted[k];
                t.check(*got == want, || Witness::value(got).expected(&want).mu(&c.mu).lambda(&c.lambda).k(k));
            }
        }
        Ok(t)
    }

    fn cor7_induction(&self, p: &Params) -> Result<Tally> {
        let n = p.n;
        let data = self.schur(p)?;
        let m_side = restricted_monomial_side(n)?;
        let s_side = qyt_schur_side(n)?;
        let mut t = Tally::default();
        let to_s = data.kostka.to_schur(&m_side)?;
        for lam in all_partitions(n) {
            let (got, want) = (to_s.coeff(&lam), s_side.coeff(&lam));
            t.check(got == want, || Witness::value(&got).expected(&want).lambda(&lam));
        }
        let to_m = data.kostka.to_monomial(&s_side)?;
        for lam in all_partitions(n) {
            let (got, want) = (to_m.coeff(&lam), m_side.coeff(&lam));
            t.check(got == want, || Witness::value(&got).expected(&want).lambda(&lam));
        }
        // n! times the Schur side is the Schur expansion of J̃_(n)
        let row = data.get(&Partition::row(n)).expect("row shape present");
        let scaled = s_side.scale_int(&factorial(n));
        for lam in all_partitions(n) {
            let (got, want) = (scaled.coeff(&lam), row.coeff(&lam));
            t.check(got == want, || Witness::value(&want).expected(&got).mu(&Partition::row(n)).lambda(&lam));
        }
        Ok(t)
    }

    fn fundamental_of(&self, p: &Params, mu: &Partition) -> Result<QSymExpansion> {
        let data = self.schur(p)?;
        Ok(schur_to_fundamental(data.get(mu).expect("partition of n"))?)
    }

    fn cor9_fexp(&self, p: &Params) -> Result<Tally> {
        let n = p.n;
        let lhs = self.fundamental_of(p, &Partition::row(n))?;
        Ok(qsym_compare(&lhs, &rsk_fundamental_expansion(n), "rsk_fundamental_expansion"))
    }

    fn c7_exact(&self, p: &Params) -> Result<Tally> {
        let n = p.n;
        let want = self.fundamental_of(p, &Partition::row(n))?;
        let got = f_beta_expansion(n);
        let mut t = Tally::default();
        let keys: BTreeSet<_> = want.terms().keys().chain(got.terms().keys()).cloned().collect();
        for sigma in keys {
            let (g, w) = (got.coeff(&sigma), want.coeff(&sigma));
            t.check(g == w, || {
                let fall = |p: &AlphaPoly| to_falling_basis(p, n).map(|v| fmt_vec(&v)).unwrap_or_else(|_| p.to_string());
                let mut wit = Witness::value(fall(&w)).expected(fall(&g)).sigma(&sigma);
                wit.mu = Some(Partition::row(n).to_string());
                wit
            });
        }
        t.details.insert("basis".into(), "falling, b_0..b_{n-1}".into());
        Ok(t)
    }

    fn c5_c6(&self, p: &Params, shifted: bool) -> Result<Tally> {
        let n = p.n;
        let n_fact = factorial(n);
        let total_want = if shifted { &n_fact * &n_fact } else { &n_fact * bell(n) };
        // per-index marginals: shifted a_j sums to n! A(n, j); falling b_j to n! S(n, n - j)
        let marginal_want: Vec<BigInt> = if shifted {
            eulerian_row(n).iter().map(|a| &n_fact * a).collect()
        } else {
            let s = stirling2_row(n);
            (0..n).map(|j| &n_fact * &s[n - j]).collect()
        };
        let data = self.schur(p)?;
        let mut t = Tally::default();
        let mut marginal_failure: Option<String> = None;
        for (mu, e) in &data.expansions {
            let f = schur_to_fundamental(e)?;
            let mut total = BigRational::zero();
            let mut marg = vec![BigRational::zero(); n];
            for (sigma, c) in f.terms() {
                let v = if shifted { to_shifted_basis(c, n)? } else { to_falling_basis(c, n)? };
                for (j, x) in v.iter().enumerate() {
                    t.check(is_nat(x), || Witness::value(x).mu(mu).sigma(sigma).k(j));
                    total += x;
                    marg[j] += x;
                }
            }
            let want = rat(&total_want);
            t.check(total == want, || Witness::value(&total).expected(&want).mu(mu));
            if p.marginals && marginal_failure.is_none() {
                if let Some(j) = (0..n).find(|&j| marg[j] != rat(&marginal_want[j])) {
                    marginal_failure = Some(format!("mu={mu} j={j} value={} expected={}", marg[j], marginal_want[j]));
                }
            }
        }
        if p.marginals {
            t.details.insert(
                "marginals".into(),
                marginal_failure.unwrap_or_else(|| "verified".into()),
            );
        }
        t.details.insert("total".into(), total_want.to_string());
        Ok(t)
    }

    fn p11_hook(&self, p: &Params) -> Result<Tally> {
        let n = p.n;
        let coeffs = self.coefficients(p)?;
        let mut t = Tally::default();
        for ell in 0..n {
            let mu = Partition::hook(n, ell)?;
            let c = coeffs.iter().find(|c| c.mu == mu && c.lambda == mu).expect("hook present");
            let (bc, bd) = hook_boards(n, ell)?;
            let lf = factorial(ell);
            let wc = BigInt::from(ell) * &lf;
            let combine = |x: &[BigInt], y: &[BigInt]| -> Vec<BigInt> {
                x.iter().zip(y).map(|(a, b)| &wc * a + &lf * b).collect()
            };
            let h = combine(&hit_numbers(&bc), &hit_numbers(&bd));
            let r = combine(&rook_numbers(&bc), &rook_numbers(&bd));
            let h_rat: Vec<BigRational> = h[..n].iter().map(rat).collect();
            let r_rat: Vec<BigRational> = r[..n].iter().map(rat).collect();
            t.check(h[n].is_zero() && h_rat == c.shifted, || {
                Witness::value(fmt_vec(&c.shifted)).expected(fmt_vec(&h)).mu(&mu).lambda(&mu)
            });
            t.check(r[n].is_zero() && r_rat == c.falling, || {
                Witness::value(fmt_vec(&c.falling)).expected(fmt_vec(&r)).mu(&mu).lambda(&mu)
            });
        }
        Ok(t)
    }

    fn t12_content(&self, p: &Params) -> Result<Tally> {
        let n = p.n;
        let row = Partition::row(n);
        let mut t = Tally::default();
        for c in self.coefficients(p)?.into_iter().filter(|c| c.mu == row) {
            let b = content_board(&c.lambda)?;
            let kl = c.lambda.syt_count();
            let h: Vec<BigInt> = hit_numbers(&b).iter().map(|x| x * &kl).collect();
            let r: Vec<BigInt> = rook_numbers(&b).iter().map(|x| x * &kl).collect();
            let h_rat: Vec<BigRational> = h[..n].iter().map(rat).collect();
            let r_rat: Vec<BigRational> = r[..n].iter().map(rat).collect();
            t.check(h[n].is_zero() && h_rat == c.shifted, || {
                Witness::value(fmt_vec(&c.shifted)).expected(fmt_vec(&h)).mu(&row).lambda(&c.lambda)
            });
            t.check(r[n].is_zero() && r_rat == c.falling, || {
                Witness::value(fmt_vec(&c.falling)).expected(fmt_vec(&r)).mu(&row).lambda(&c.lambda)
            });
        }
        Ok(t)
    }

    /// Run every listed check for each `n ≤ n_max` it supports on a pool of
    /// `jobs` threads (0 picks the machine default). Results come back in
    /// catalog order, then by `n`.
    pub fn sweep(&self, n_max: usize, checks: &[CheckId], jobs: usize, base: &Params) -> Result<Vec<CheckResult>> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| HarnessError::BadParam(format!("thread pool: {e}")))?;
        let units: Vec<(CheckId, usize)> = checks
            .iter()
            .flat_map(|&c| (1..=n_max.min(c.max_n())).map(move |n| (c, n)))
            .collect();
        let degrees = n_max.min(CheckId::ALL.iter().map(|c| c.max_n()).max().unwrap_or(0));
        Ok(pool.install(|| {
            // build each degree once before the checks race for it
            (1..=degrees).into_par_iter().for_each(|n| {
                let _ = self.store.schur(n);
            });
            units
                .par_iter()
                .map(|&(c, n)| self.run_check(c, &Params { n, ..base.clone() }))
                .collect()
        }))
    }
}

/// The worst status: error over counterexample over verified.
pub fn overall_status(results: &[CheckResult]) -> Status {
    results.iter().map(|r| r.status).max().unwrap_or(Status::Verified)
}

pub fn exit_code(status: Status) -> i32 {
    match status {
        Status::Verified => 0,
        Status::Counterexample => 1,
        Status::Error => 2,
    }
}

fn qsym_compare(got: &QSymExpansion, want: &QSymExpansion, want_label: &str) -> Tally {
    let mut t = Tally::default();
    let keys: BTreeSet<_> = got.terms().keys().chain(want.terms().keys()).cloned().collect();
    for sigma in keys {
        let (g, w) = (got.coeff(&sigma), want.coeff(&sigma));
        t.check(g == w, || Witness::value(&g).expected(&w).sigma(&sigma));
    }
    t.details.insert("compared_with".into(), want_label.into());
    t
}

/// Largest `n` whose dotted diagrams are enumerated outright.
const L5_ENUMERATION_MAX: usize = 5;

fn l5_bijection(n: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for lam in all_partitions(n) {
        // exact polynomial identity (both sides have degree n)
        let left = lam
            .parts()
            .iter()
            .map(|&p| AlphaPoly::binomial_shifted(p as i64 - 1, p))
            .fold(AlphaPoly::one(), |acc, f| &acc * &f);
        let right: AlphaPoly = restricted_eulerian_row(&lam)
            .iter()
            .enumerate()
            .map(|(k, &a)| AlphaPoly::binomial_shifted(n as i64 - 1 - k as i64, n).scale_int(&BigInt::from(a)))
            .sum();
        t.check(left == right && left.degree() == Some(n), || {
            Witness::value(&left).expected(&right).lambda(&lam)
        });
        for alpha in n..=n + 3 {
            let (l, r) = dotted_counts(alpha, &lam);
            t.check(l == r, || Witness::value(&l).expected(&r).lambda(&lam).k(alpha));
            if n > L5_ENUMERATION_MAX {
                continue;
            }
            let diagrams = DottedDiagram::enumerate(alpha, &lam)?;
            t.check(BigInt::from(diagrams.len()) == l, || {
                Witness::value(diagrams.len()).expected(&l).lambda(&lam).k(alpha)
            });
            let mut image = BTreeSet::new();
            let mut bad: Option<String> = None;
            for d in &diagrams {
                let img = dotted_forward(d)?;
                let ok = jackpos_core::words::is_restricted(&img.word, &lam)
                    && img.column.len() == alpha + n - 1 - img.word.des()
                    && img.column.iter().filter(|&&b| b).count() == n;
                if !ok && bad.is_none() {
                    bad = Some(format!("{:?} -> {} invalid", d.dots(), img.word));
                }
                if !image.insert(img) && bad.is_none() {
                    bad = Some(format!("{:?} collides", d.dots()));
                }
            }
            t.check(bad.is_none(), || Witness::value(bad.clone().unwrap_or_default()).lambda(&lam).k(alpha));
        }
    }
    t.details.insert(
        "enumeration".into(),
        if n <= L5_ENUMERATION_MAX { "explicit".into() } else { "counts only".into() },
    );
    Ok(t)
}

fn l6_rsk(n: usize) -> Result<Tally> {
    let parts = all_partitions(n);
    let qyt: Vec<Vec<u64>> = parts.iter().map(qyt_counts).collect();
    let mut t = Tally::default();
    for lam in &parts {
        let a = restricted_eulerian_row(lam);
        for k in 0..n {
            let mut want = 0u64;
            for (nu, q) in parts.iter().zip(&qyt) {
                want += kostka(nu, lam)? * q[k];
            }
            t.check(a[k] == want, || Witness::value(a[k]).expected(want).lambda(lam).k(k));
        }
        if n <= 6 {
            let mut seen = BTreeSet::new();
            for sigma in restricted_perms(lam) {
                let (p, q) = restricted_to_pair(&sigma, lam)?;
                let mut w = q.weight();
                w.resize(lam.len(), 0);
                let ok = p.is_standard() && runs(&p)? == sigma.des() + 1 && w == lam.parts();
                let fresh = seen.insert((p, q));
                t.check(ok && fresh, || Witness::value(&sigma).lambda(lam));
            }
        }
    }
    Ok(t)
}

fn l1_symmetry(n: usize) -> Tally {
    let mut t = Tally::default();
    for lam in all_partitions(n) {
        let q = qyt_counts(&lam);
        let qc = qyt_counts(&lam.conjugate());
        for k in 1..=n {
            t.check(q[k - 1] == qc[n - k], || Witness::value(q[k - 1]).expected(qc[n - k]).lambda(&lam).k(k));
            if n <= 6 {
                let direct = qyt_count_direct(&lam, k);
                t.check(direct == q[k - 1], || Witness::value(direct).expected(q[k - 1]).lambda(&lam).k(k));
            }
        }
    }
    t
}

fn p4_bijection(n: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for mu in all_partitions(n) {
        let mut image = BTreeSet::new();
        for s in generate_syt(&mu) {
            let q = destandardize(&s);
            let back = standardize(&q)?;
            let ok = is_quasi_yamanouchi(&q) && q.max_value() == runs(&s)? && back == s;
            t.check(ok, || Witness::value(&q).expected(&s).mu(&mu));
            image.insert(q);
        }
        t.check(BigInt::from(image.len()) == mu.syt_count(), || {
            Witness::value(image.len()).expected(mu.syt_count()).mu(&mu)
        });
        if n <= 6 {
            let direct: BTreeSet<_> = generate_ssyt(&mu, n).into_iter().filter(is_quasi_yamanouchi).collect();
            t.check(direct == image, || Witness::value(direct.len()).expected(image.len()).mu(&mu));
        }
    }
    Ok(t)
}

fn rook_rr(n: usize) -> Result<Tally> {
    let boards = all_ferrers_boards(n);
    let parts: Vec<Result<Tally>> = boards
        .par_iter()
        .map(|b| {
            let mut t = Tally::default();
            for (label, v) in [("rook", rook_numbers(b)), ("hit", hit_numbers(b))] {
                let g = generating_poly(&v);
                let ok = is_real_rooted(&g)?;
                t.check(ok, || Witness::value(format!("{label} {}", fmt_vec(&v))).sigma(b));
            }
            Ok(t)
        })
        .collect();
    Ok(Tally::merge_all(parts.into_iter().collect::<Result<_>>()?))
}
