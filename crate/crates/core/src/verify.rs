//! Cross-verification over an exhaustive small corpus and seeded random
//! instances. Every determinant equality, LGV identity, permutation claim,
//! and bijection is checked per instance; enumeration-based checks are
//! skipped when the guard trips.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::exact::permutation_sign;
use crate::exact::{determinant, IntMatrix};
use crate::guard::Guard;
use crate::paths::{
    cut_q_to_p, enumerate_families, extend_p_to_q, lgv_matrix, p_spec, q_spec, r_spec, FamilySpec,
    PathFamily,
};
use crate::schubert::{
    multiplicity_lw, multiplicity_rz, multiplicity_thm5, s_vector, thm5_matrix,
    thm5_printed_variant, validate, SchubertDatum,
};
use crate::tableaux::{array_to_r_family, enumerate_arrays, r_family_to_array, shape_of};

/// Deliberate fault injected to show that a broken formula is caught.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Replace the dual-path determinant by its printed-index variant.
    Thm5Printed,
}

impl std::str::FromStr for Fault {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "thm5-printed" => Ok(Fault::Thm5Printed),
            other => Err(Error::Parse(format!("unknown fault {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub random_count: usize,
    pub random_max_n: i64,
    pub random_max_d: i64,
    pub exhaustive_max_n: i64,
    pub exhaustive_max_d: i64,
    pub guard: Guard,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 42,
            random_count: 200,
            random_max_n: 12,
            random_max_d: 5,
            exhaustive_max_n: 7,
            exhaustive_max_d: 3,
            guard: Guard::DEFAULT,
            fault: None,
        }
    }
}

/// Every valid `(i, j)` with `d <= max_d` and entries at most `max_n`,
/// reported with `n = max_n`.
pub fn exhaustive_corpus(max_n: i64, max_d: i64) -> Vec<SchubertDatum> {
    let mut out = Vec::new();
    for d in 1..=max_d.min(max_n) {
        let subsets = increasing_sequences(max_n, d as usize);
        for i in &subsets {
            for j in &subsets {
                if let Ok(datum) = validate(max_n, d, i, j) {
                    out.push(datum);
                }
            }
        }
    }
    out
}

fn increasing_sequences(n: i64, len: usize) -> Vec<Vec<i64>> {
    fn go(next: i64, n: i64, len: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in next..=n {
            cur.push(v);
            go(v + 1, n, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, len, &mut Vec::new(), &mut out);
    out
}

/// `count` seeded random instances with `d <= n <= max_n`, `d <= max_d`.
pub fn random_corpus(seed: u64, count: usize, max_n: i64, max_d: i64) -> Vec<SchubertDatum> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let d = rng.gen_range(1..=max_d.min(n));
            let mut pool: Vec<i64> = (1..=n).collect();
            for k in 0..d as usize {
                let pick = rng.gen_range(k..pool.len());
                pool.swap(k, pick);
            }
            let mut i = pool[..d as usize].to_vec();
            i.sort_unstable();
            let mut j = Vec::with_capacity(i.len());
            let mut floor = 0;
            for &ik in &i {
                let jk = rng.gen_range(floor + 1..=ik);
                j.push(jk);
                floor = jk;
            }
            validate(n, d, &i, &j).expect("construction yields a valid datum")
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

/// All checks for one instance, plus the values used in the CSV table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceReport {
    pub datum: SchubertDatum,
    pub rz: BigInt,
    pub thm5: BigInt,
    pub lw: Option<BigInt>,
    pub enum_q: Option<BigInt>,
    pub enum_r: Option<BigInt>,
    pub enum_p: Option<BigInt>,
    pub enum_tableaux: Option<BigInt>,
    pub checks: Vec<CheckResult>,
}

impl InstanceReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }
}

struct Checks(Vec<CheckResult>);

impl Checks {
    fn record(&mut self, name: &'static str, ok: bool, detail: impl Into<String>) {
        self.0.push(CheckResult {
            name,
            status: if ok { Status::Pass } else { Status::Fail },
            detail: if ok { String::new() } else { detail.into() },
        });
    }

    fn skip(&mut self, name: &'static str, why: impl Into<String>) {
        self.0.push(CheckResult {
            name,
            status: Status::Skip,
            detail: why.into(),
        });
    }

    fn error(&mut self, name: &'static str, e: &Error) {
        match e {
            Error::GuardExceeded { .. } => self.skip(name, e.to_string()),
            _ => self.record(name, false, e.to_string()),
        }
    }
}

/// `e_d` as the last column and the determinant equal to the leading minor.
pub fn last_column_is_unit(m: &IntMatrix) -> bool {
    let d = m.order();
    if d == 0 {
        return true;
    }
    let unit = (0..d).all(|p| {
        let v = m.get(p, d - 1);
        if p == d - 1 {
            v.is_one()
        } else {
            v.is_zero()
        }
    });
    unit && determinant(m) == determinant(&m.leading_minor(d - 1))
}

struct Enumerated {
    families: Vec<(Vec<usize>, PathFamily)>,
    det: BigInt,
}

fn enumerate_with_det(spec: &FamilySpec, guard: Guard) -> Result<Enumerated, Error> {
    let families = enumerate_families(spec, guard)?;
    Ok(Enumerated {
        families,
        det: determinant(&lgv_matrix(spec)),
    })
}

fn signed_total(fams: &[(Vec<usize>, PathFamily)]) -> BigInt {
    fams.iter()
        .map(|(perm, _)| BigInt::from(permutation_sign(perm)))
        .sum()
}

fn permutations(fams: &[(Vec<usize>, PathFamily)]) -> BTreeSet<Vec<usize>> {
    fams.iter().map(|(p, _)| p.clone()).collect()
}

fn identity_only(fams: &[(Vec<usize>, PathFamily)]) -> bool {
    fams.iter()
        .all(|(p, _)| p.iter().enumerate().all(|(k, &e)| k == e))
}

/// Runs every applicable check on one instance.
pub fn check_instance(datum: &SchubertDatum, guard: Guard, fault: Option<Fault>) -> InstanceReport {
    let mut c = Checks(Vec::new());
    let s = s_vector(datum);
    let d = datum.d();

    let sv = s.as_slice();
    let s_ok = sv.windows(2).all(|w| w[0] >= w[1])
        && sv[d - 1] == 0
        && (1..=d).all(|q| s.at(q) <= (d - q) as i64);
    c.record("s_vector_invariants", s_ok, format!("s = {sv:?}"));

    let rz = multiplicity_rz(datum);
    let thm5 = match fault {
        Some(Fault::Thm5Printed) => thm5_printed_variant(datum),
        None => multiplicity_thm5(datum),
    };
    c.record(
        "rz_eq_thm5",
        rz == thm5,
        format!("rz = {rz}, thm5 = {thm5}"),
    );
    c.record("rz_positive", rz >= BigInt::one(), format!("rz = {rz}"));
    c.record(
        "last_column_unit",
        last_column_is_unit(&thm5_matrix(datum)),
        "last column is not e_d or minor differs",
    );

    let lw = if datum.is_special() {
        let lw = multiplicity_lw(datum).expect("special case");
        c.record("rz_eq_lw", lw == rz, format!("rz = {rz}, lw = {lw}"));
        Some(lw)
    } else {
        None
    };

    // Q-families: LGV identity, unique permutation with the predicted sign.
    let mut enum_q = None;
    let qspec = q_spec(datum);
    let q_enum = enumerate_with_det(&qspec, guard);
    match &q_enum {
        Ok(q) => {
            let count = BigInt::from(q.families.len());
            c.record(
                "lgv_identity_q",
                signed_total(&q.families) == q.det,
                format!("signed {} vs det {}", signed_total(&q.families), q.det),
            );
            let perms = permutations(&q.families);
            let expected_sign = if s.sum() % 2 == 0 { 1 } else { -1 };
            let unique =
                perms.len() == 1 && perms.iter().all(|p| permutation_sign(p) == expected_sign);
            c.record(
                "q_unique_permutation",
                unique,
                format!("permutations {perms:?}, expected sign {expected_sign}"),
            );
            c.record(
                "enum_q_eq_rz",
                count == rz,
                format!("|Q| = {count}, rz = {rz}"),
            );
            enum_q = Some(count);
        }
        Err(e) => {
            for name in ["lgv_identity_q", "q_unique_permutation", "enum_q_eq_rz"] {
                c.error(name, e);
            }
        }
    }

    // R-families: identity permutation only, count equals the dual determinant.
    let mut enum_r = None;
    let r_enum = enumerate_with_det(&r_spec(datum), guard);
    match &r_enum {
        Ok(r) => {
            let count = BigInt::from(r.families.len());
            c.record(
                "lgv_identity_r",
                signed_total(&r.families) == r.det,
                format!("signed {} vs det {}", signed_total(&r.families), r.det),
            );
            c.record(
                "r_identity_permutation",
                identity_only(&r.families),
                format!("permutations {:?}", permutations(&r.families)),
            );
            c.record(
                "enum_r_eq_thm5",
                count == thm5,
                format!("|R| = {count}, thm5 = {thm5}"),
            );
            enum_r = Some(count);
        }
        Err(e) => {
            for name in ["lgv_identity_r", "r_identity_permutation", "enum_r_eq_thm5"] {
                c.error(name, e);
            }
        }
    }

    // P-families and the height cut.
    let mut enum_p = None;
    if datum.is_special() {
        let pspec = p_spec(datum).expect("special case");
        match enumerate_with_det(&pspec, guard) {
            Ok(p) => {
                let count = BigInt::from(p.families.len());
                c.record(
                    "lgv_identity_p",
                    signed_total(&p.families) == p.det,
                    format!("signed {} vs det {}", signed_total(&p.families), p.det),
                );
                c.record(
                    "p_identity_permutation",
                    identity_only(&p.families),
                    format!("permutations {:?}", permutations(&p.families)),
                );
                let lw = lw.clone().expect("special case");
                c.record(
                    "enum_p_eq_lw",
                    count == lw,
                    format!("|P| = {count}, lw = {lw}"),
                );
                enum_p = Some(count);
                match &q_enum {
                    Ok(q) => c.record(
                        "cut_bijection",
                        cut_is_bijective(datum, &q.families, &p.families),
                        "cut is not a bijection Q -> P",
                    ),
                    Err(e) => c.error("cut_bijection", e),
                }
            }
            Err(e) => {
                for name in [
                    "lgv_identity_p",
                    "p_identity_permutation",
                    "enum_p_eq_lw",
                    "cut_bijection",
                ] {
                    c.error(name, &e);
                }
            }
        }
    }

    // Arrays and the labeling bijection.
    let mut enum_tableaux = None;
    if d < 2 {
        enum_tableaux = Some(BigInt::one());
        c.record("enum_tableaux_eq_rz", rz.is_one(), format!("rz = {rz}"));
    } else {
        let shape = shape_of(datum).expect("d >= 2");
        match enumerate_arrays(&shape, guard) {
            Ok(arrays) => {
                let count = BigInt::from(arrays.len());
                c.record(
                    "enum_tableaux_eq_rz",
                    count == rz,
                    format!("arrays = {count}, rz = {rz}"),
                );
                enum_tableaux = Some(count);
                match &r_enum {
                    Ok(r) => {
                        let ok = labeling_is_bijective(datum, &r.families, &arrays);
                        c.record(
                            "labeling_bijection",
                            ok,
                            "labeling is not a bijection R -> arrays",
                        );
                    }
                    Err(e) => c.error("labeling_bijection", e),
                }
            }
            Err(e) => {
                c.error("enum_tableaux_eq_rz", &e);
                c.error("labeling_bijection", &e);
            }
        }
    }

    InstanceReport {
        datum: datum.clone(),
        rz,
        thm5,
        lw,
        enum_q,
        enum_r,
        enum_p,
        enum_tableaux,
        checks: c.0,
    }
}

/// Injective on Q, image equal to P, and inverted by the extension.
pub fn cut_is_bijective(
    datum: &SchubertDatum,
    q: &[(Vec<usize>, PathFamily)],
    p: &[(Vec<usize>, PathFamily)],
) -> bool {
    let mut image = BTreeSet::new();
    for (_, fam) in q {
        let Ok(cut) = cut_q_to_p(datum, fam) else {
            return false;
        };
        match extend_p_to_q(datum, &cut) {
            Ok(back) if &back == fam => {}
            _ => return false,
        }
        if !image.insert(cut) {
            return false;
        }
    }
    let target: BTreeSet<PathFamily> = p.iter().map(|(_, f)| f.clone()).collect();
    image == target
}

/// Injective on R, image equal to the enumerated arrays, and inverted by
/// [`array_to_r_family`].
pub fn labeling_is_bijective(
    datum: &SchubertDatum,
    r: &[(Vec<usize>, PathFamily)],
    arrays: &[crate::tableaux::UnusualArray],
) -> bool {
    let mut image = BTreeSet::new();
    for (_, fam) in r {
        let Ok(array) = r_family_to_array(datum, fam) else {
            return false;
        };
        match array_to_r_family(datum, &array) {
            Ok(back) if &back == fam => {}
            _ => return false,
        }
        if !image.insert(array) {
            return false;
        }
    }
    image == arrays.iter().cloned().collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub exhaustive: Vec<InstanceReport>,
    pub random: Vec<InstanceReport>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

impl VerifyReport {
    pub fn instances(&self) -> impl Iterator<Item = &InstanceReport> {
        self.exhaustive.iter().chain(&self.random)
    }

    pub fn passed(&self) -> bool {
        self.instances().all(InstanceReport::passed)
    }

    /// Pass/fail/skip counts per check name, in first-seen order.
    pub fn tally(&self) -> Vec<(&'static str, Tally)> {
        let mut out: Vec<(&'static str, Tally)> = Vec::new();
        for check in self.instances().flat_map(|r| &r.checks) {
            let idx = match out.iter().position(|(n, _)| *n == check.name) {
                Some(i) => i,
                None => {
                    out.push((check.name, Tally::default()));
                    out.len() - 1
                }
            };
            let t = &mut out[idx].1;
            match check.status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::Skip => t.skip += 1,
            }
        }
        out
    }

    /// Human-readable table followed by the first few failures.
    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "instances: {} exhaustive, {} random",
            self.exhaustive.len(),
            self.random.len()
        );
        let _ = writeln!(
            s,
            "{:<24} {:>6} {:>6} {:>6}  result",
            "check", "pass", "fail", "skip"
        );
        for (name, t) in self.tally() {
            let verdict = if t.fail == 0 { "PASS" } else { "FAIL" };
            let _ = writeln!(
                s,
                "{name:<24} {:>6} {:>6} {:>6}  {verdict}",
                t.pass, t.fail, t.skip
            );
        }
        let failures: Vec<_> = self
            .instances()
            .flat_map(|r| {
                r.checks
                    .iter()
                    .filter(|c| c.status == Status::Fail)
                    .map(move |c| (r, c))
            })
            .collect();
        for (r, c) in failures.iter().take(20) {
            let _ = writeln!(s, "FAIL {} [{}]: {}", c.name, r.datum, c.detail);
        }
        if failures.len() > 20 {
            let _ = writeln!(s, "... {} more failures", failures.len() - 20);
        }
        let _ = writeln!(
            s,
            "overall: {}",
            if self.passed() { "PASS" } else { "FAIL" }
        );
        s
    }

    /// One row per instance with every computed value.
    pub fn to_csv(&self) -> String {
        fn opt(v: &Option<BigInt>) -> String {
            v.as_ref().map(ToString::to_string).unwrap_or_default()
        }
        let mut s =
            String::from("corpus,n,d,i,j,rz,thm5,lw,enum_q,enum_r,enum_p,enum_tableaux,passed\n");
        for (corpus, reports) in [("exhaustive", &self.exhaustive), ("random", &self.random)] {
            for r in reports {
                let _ = writeln!(
                    s,
                    "{corpus},{},{},\"{}\",\"{}\",{},{},{},{},{},{},{},{}",
                    r.datum.n(),
                    r.datum.d(),
                    crate::schubert::join(r.datum.i()),
                    crate::schubert::join(r.datum.j()),
                    r.rz,
                    r.thm5,
                    opt(&r.lw),
                    opt(&r.enum_q),
                    opt(&r.enum_r),
                    opt(&r.enum_p),
                    opt(&r.enum_tableaux),
                    r.passed()
                );
            }
        }
        s
    }
}

/// Checks a corpus on worker threads; the report keeps corpus order.
pub fn check_corpus(
    corpus: &[SchubertDatum],
    guard: Guard,
    fault: Option<Fault>,
) -> Vec<InstanceReport> {
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(corpus.len().max(1));
    let chunk = corpus.len().div_ceil(workers).max(1);
    std::thread::scope(|scope| {
        let handles: Vec<_> = corpus
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|d| check_instance(d, guard, fault))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("verification worker panicked"))
            .collect()
    })
}

pub fn run(config: &VerifyConfig) -> VerifyReport {
    let exhaustive = exhaustive_corpus(config.exhaustive_max_n, config.exhaustive_max_d);
    let random = random_corpus(
        config.seed,
        config.random_count,
        config.random_max_n,
        config.random_max_d,
    );
    VerifyReport {
        exhaustive: check_corpus(&exhaustive, config.guard, config.fault),
        random: check_corpus(&random, config.guard, config.fault),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpora_are_valid_and_deterministic() {
        let ex = exhaustive_corpus(4, 2);
        // d = 1: 10 pairs; d = 2: pairs of 2-subsets of [4] with j <= i
        assert_eq!(ex.iter().filter(|d| d.d() == 1).count(), 10);
        assert_eq!(random_corpus(7, 30, 12, 5), random_corpus(7, 30, 12, 5));
        assert_ne!(random_corpus(7, 30, 12, 5), random_corpus(8, 30, 12, 5));
        assert!(random_corpus(1, 100, 12, 5)
            .iter()
            .all(|d| d.n() <= 12 && d.d() <= 5));
    }

    #[test]
    fn cone_passes_every_check() {
        let datum = validate(4, 2, &[2, 4], &[1, 2]).unwrap();
        let report = check_instance(&datum, Guard::DEFAULT, None);
        assert!(report.passed(), "{:?}", report.checks);
        assert!(report.checks.iter().all(|c| c.status == Status::Pass));
        assert_eq!(report.enum_tableaux, Some(BigInt::from(2)));
    }

    #[test]
    fn injected_fault_is_reported() {
        let datum = validate(4, 2, &[2, 4], &[1, 2]).unwrap();
        let report = check_instance(&datum, Guard::DEFAULT, Some(Fault::Thm5Printed));
        assert!(!report.passed());
        assert!(report
            .checks
            .iter()
            .any(|c| c.name == "rz_eq_thm5" && c.status == Status::Fail));
    }
}
