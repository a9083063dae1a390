//! Nonintersecting lattice paths: path counting, the LGV matrix, exhaustive
//! enumeration of vertex-disjoint families, the three family models built
//! from a Schubert datum, and the height-cut bijection between Q- and
//! P-families.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exact::{binomial, permutation_sign, IntMatrix};
use crate::guard::Guard;
use crate::schubert::{frobenius, partition_from_i, s_vector, SchubertDatum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    fn shifted(self, step: Step) -> Self {
        let (dx, dy) = step.delta();
        LatticePoint::new(self.x + dx, self.y + dy)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A unit step. The derived order `E < N < S` is the lexicographic order of
/// step strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    E,
    N,
    S,
}

impl Step {
    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::E => (1, 0),
            Step::N => (0, 1),
            Step::S => (0, -1),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::E => 'E',
            Step::N => 'N',
            Step::S => 'S',
        }
    }

    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'E' => Some(Step::E),
            'N' => Some(Step::N),
            'S' => Some(Step::S),
            _ => None,
        }
    }
}

/// The two monotone step systems used here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StepSystem {
    /// Steps `(0, 1)` and `(1, 0)`.
    NorthEast,
    /// Steps `(1, 0)` and `(0, -1)`.
    EastSouth,
}

impl StepSystem {
    pub fn vertical(self) -> Step {
        match self {
            StepSystem::NorthEast => Step::N,
            StepSystem::EastSouth => Step::S,
        }
    }

    /// Both steps in lexicographic order.
    pub fn steps(self) -> [Step; 2] {
        [Step::E, self.vertical()]
    }

    pub fn allows(self, step: Step) -> bool {
        step == Step::E || step == self.vertical()
    }

    /// Horizontal and (signed) vertical displacement needed to go from `a`
    /// to `e`, or `None` if the system cannot do it.
    fn displacement(self, a: LatticePoint, e: LatticePoint) -> Option<(i64, i64)> {
        let dx = e.x - a.x;
        let dy = match self {
            StepSystem::NorthEast => e.y - a.y,
            StepSystem::EastSouth => a.y - e.y,
        };
        (dx >= 0 && dy >= 0).then_some((dx, dy))
    }

    fn can_reach(self, a: LatticePoint, e: LatticePoint) -> bool {
        self.displacement(a, e).is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotonePath {
    pub start: LatticePoint,
    pub steps: Vec<Step>,
}

impl MonotonePath {
    pub fn new(start: LatticePoint, steps: Vec<Step>) -> Self {
        MonotonePath { start, steps }
    }

    /// Parses a step string such as `"NNEN"`.
    pub fn parse(start: LatticePoint, steps: &str) -> Result<Self, Error> {
        let steps = steps
            .chars()
            .map(|c| Step::from_char(c).ok_or_else(|| Error::Parse(format!("bad step {c:?}"))))
            .collect::<Result<_, _>>()?;
        Ok(MonotonePath { start, steps })
    }

    pub fn vertices(&self) -> Vec<LatticePoint> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut p = self.start;
        out.push(p);
        for &s in &self.steps {
            p = p.shifted(s);
            out.push(p);
        }
        out
    }

    pub fn end(&self) -> LatticePoint {
        self.steps.iter().fold(self.start, |p, &s| p.shifted(s))
    }

    pub fn step_string(&self) -> String {
        self.steps.iter().map(|s| s.as_char()).collect()
    }
}

/// Paths indexed by start point: `paths[k]` leaves `starts[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PathFamily(pub Vec<MonotonePath>);

impl PathFamily {
    pub fn paths(&self) -> &[MonotonePath] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Model {
    Q,
    P,
    R,
    Custom,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Model::Q => "q",
            Model::P => "p",
            Model::R => "r",
            Model::Custom => "custom",
        };
        f.write_str(s)
    }
}

/// Starting and end points for a family of paths in one step system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub system: StepSystem,
    pub starts: Vec<LatticePoint>,
    pub ends: Vec<LatticePoint>,
    pub model: Model,
}

impl FamilySpec {
    pub fn new(
        system: StepSystem,
        starts: Vec<LatticePoint>,
        ends: Vec<LatticePoint>,
        model: Model,
    ) -> Result<Self, Error> {
        if starts.len() != ends.len() {
            return Err(Error::FamilyInvalid(format!(
                "{} starts but {} ends",
                starts.len(),
                ends.len()
            )));
        }
        Ok(FamilySpec {
            system,
            starts,
            ends,
            model,
        })
    }

    pub fn len(&self) -> usize {
        self.starts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.starts.is_empty()
    }
}

/// Signed count of nonintersecting families, split by the permutation
/// `start k -> end perm[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignedCount {
    pub total: BigInt,
    pub by_permutation: BTreeMap<Vec<usize>, BigInt>,
}

impl SignedCount {
    /// Number of families regardless of sign.
    pub fn unsigned(&self) -> BigInt {
        self.by_permutation.values().sum()
    }
}

/// Number of monotone paths from `a` to `e`.
pub fn count_paths(system: StepSystem, a: LatticePoint, e: LatticePoint) -> BigInt {
    match system.displacement(a, e) {
        Some((dx, dy)) => binomial(dx + dy, dx),
        None => BigInt::zero(),
    }
}

/// `det` of this matrix is the signed number of nonintersecting families.
pub fn lgv_matrix(spec: &FamilySpec) -> IntMatrix {
    IntMatrix::from_fn(spec.len(), |p, q| {
        count_paths(spec.system, spec.starts[p], spec.ends[q])
    })
}

/// Checks that no bijection of starts to ends has a path-count product
/// above the guard.
pub fn check_guard(spec: &FamilySpec, guard: Guard) -> Result<(), Error> {
    let d = spec.len();
    let counts: Vec<Vec<u128>> = (0..d)
        .map(|p| {
            (0..d)
                .map(|q| {
                    count_paths(spec.system, spec.starts[p], spec.ends[q])
                        .to_u128()
                        .unwrap_or(u128::MAX)
                })
                .collect()
        })
        .collect();
    let limit = guard.limit() as u128;
    let mut used = vec![false; d];
    fn search(
        k: usize,
        acc: u128,
        counts: &[Vec<u128>],
        used: &mut [bool],
        limit: u128,
    ) -> Option<u128> {
        if acc > limit {
            return Some(acc);
        }
        if k == counts.len() {
            return None;
        }
        for q in 0..counts.len() {
            if used[q] || counts[k][q] == 0 {
                continue;
            }
            used[q] = true;
            let hit = search(k + 1, acc.saturating_mul(counts[k][q]), counts, used, limit);
            used[q] = false;
            if hit.is_some() {
                return hit;
            }
        }
        None
    }
    match search(0, 1, &counts, &mut used, limit) {
        Some(work) => Err(Error::GuardExceeded {
            work: if work == u128::MAX {
                "overflow".to_string()
            } else {
                format!(">= {work}")
            },
            guard: guard.limit(),
        }),
        None => Ok(()),
    }
}

struct Occupancy {
    xmin: i64,
    ymin: i64,
    width: i64,
    height: i64,
    cells: Vec<bool>,
}

impl Occupancy {
    fn covering(points: impl Iterator<Item = LatticePoint>) -> Self {
        let (mut xmin, mut xmax, mut ymin, mut ymax) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
        for p in points {
            xmin = xmin.min(p.x);
            xmax = xmax.max(p.x);
            ymin = ymin.min(p.y);
            ymax = ymax.max(p.y);
        }
        if xmin > xmax {
            (xmin, xmax, ymin, ymax) = (0, 0, 0, 0);
        }
        let (width, height) = (xmax - xmin + 1, ymax - ymin + 1);
        Occupancy {
            xmin,
            ymin,
            width,
            height,
            cells: vec![false; (width * height) as usize],
        }
    }

    fn index(&self, p: LatticePoint) -> usize {
        let (dx, dy) = (p.x - self.xmin, p.y - self.ymin);
        debug_assert!(dx >= 0 && dy >= 0 && dx < self.width && dy < self.height);
        (dy * self.width + dx) as usize
    }

    fn get(&self, p: LatticePoint) -> bool {
        self.cells[self.index(p)]
    }

    fn set(&mut self, p: LatticePoint, v: bool) {
        let i = self.index(p);
        self.cells[i] = v;
    }
}

struct Enumerator<'a, F> {
    spec: &'a FamilySpec,
    grid: Occupancy,
    used: Vec<bool>,
    perm: Vec<usize>,
    paths: Vec<Vec<Step>>,
    visit: F,
}

impl<F: FnMut(&[usize], &PathFamily)> Enumerator<'_, F> {
    fn place(&mut self, k: usize) {
        let d = self.spec.len();
        if k == d {
            let family = PathFamily(
                self.paths
                    .iter()
                    .zip(&self.spec.starts)
                    .map(|(steps, &start)| MonotonePath::new(start, steps.clone()))
                    .collect(),
            );
            (self.visit)(&self.perm, &family);
            return;
        }
        let start = self.spec.starts[k];
        if self.grid.get(start) {
            return;
        }
        for e in 0..d {
            let end = self.spec.ends[e];
            if self.used[e] || !self.spec.system.can_reach(start, end) || self.grid.get(end) {
                continue;
            }
            self.used[e] = true;
            self.perm[k] = e;
            self.grid.set(start, true);
            self.walk(k, start, end);
            self.grid.set(start, false);
            self.used[e] = false;
        }
    }

    fn walk(&mut self, k: usize, at: LatticePoint, end: LatticePoint) {
        if at == end {
            self.place(k + 1);
            return;
        }
        for step in self.spec.system.steps() {
            let next = at.shifted(step);
            if !self.spec.system.can_reach(next, end) || self.grid.get(next) {
                continue;
            }
            self.grid.set(next, true);
            self.paths[k].push(step);
            self.walk(k, next, end);
            self.paths[k].pop();
            self.grid.set(next, false);
        }
    }
}

/// Visits every vertex-disjoint family over every bijection of starts to
/// ends, in deterministic order: start 1's end index first, then its path in
/// lexicographic step order, then start 2, and so on.
pub fn for_each_nonintersecting<F>(spec: &FamilySpec, guard: Guard, visit: F) -> Result<(), Error>
where
    F: FnMut(&[usize], &PathFamily),
{
    check_guard(spec, guard)?;
    let d = spec.len();
    let mut en = Enumerator {
        spec,
        grid: Occupancy::covering(spec.starts.iter().chain(&spec.ends).copied()),
        used: vec![false; d],
        perm: vec![0; d],
        paths: vec![Vec::new(); d],
        visit,
    };
    en.place(0);
    Ok(())
}

/// Signed enumeration of nonintersecting families.
///
/// The signed total equals `det(lgv_matrix(spec))`.
pub fn enumerate_nonintersecting(spec: &FamilySpec, guard: Guard) -> Result<SignedCount, Error> {
    let mut by_permutation: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    for_each_nonintersecting(spec, guard, |perm, _| {
        *by_permutation.entry(perm.to_vec()).or_default() += 1;
    })?;
    let total = by_permutation
        .iter()
        .map(|(perm, c)| c * permutation_sign(perm))
        .sum();
    Ok(SignedCount {
        total,
        by_permutation,
    })
}

/// All nonintersecting families together with their permutations.
pub fn enumerate_families(
    spec: &FamilySpec,
    guard: Guard,
) -> Result<Vec<(Vec<usize>, PathFamily)>, Error> {
    let mut out = Vec::new();
    for_each_nonintersecting(spec, guard, |perm, fam| {
        out.push((perm.to_vec(), fam.clone()))
    })?;
    Ok(out)
}

/// Checks that `family` is a nonintersecting family for `spec` and returns
/// the induced permutation `start k -> end perm[k]`.
pub fn validate_family(spec: &FamilySpec, family: &PathFamily) -> Result<Vec<usize>, Error> {
    if family.len() != spec.len() {
        return Err(Error::FamilyInvalid(format!(
            "{} paths for {} starts",
            family.len(),
            spec.len()
        )));
    }
    let mut perm = Vec::with_capacity(spec.len());
    let mut taken = vec![false; spec.len()];
    let mut seen: HashSet<LatticePoint> = HashSet::new();
    for (k, path) in family.paths().iter().enumerate() {
        if path.start != spec.starts[k] {
            return Err(Error::FamilyInvalid(format!(
                "path {} starts at {} instead of {}",
                k + 1,
                path.start,
                spec.starts[k]
            )));
        }
        if let Some(bad) = path.steps.iter().find(|&&s| !spec.system.allows(s)) {
            return Err(Error::FamilyInvalid(format!(
                "path {} uses step {} outside the step system",
                k + 1,
                bad.as_char()
            )));
        }
        let end = path.end();
        let e = (0..spec.len())
            .find(|&e| !taken[e] && spec.ends[e] == end)
            .ok_or_else(|| {
                Error::FamilyInvalid(format!(
                    "path {} ends at {}, not a free end point",
                    k + 1,
                    end
                ))
            })?;
        taken[e] = true;
        perm.push(e);
        for v in path.vertices() {
            if !seen.insert(v) {
                return Err(Error::FamilyInvalid(format!(
                    "path {} meets another path at {}",
                    k + 1,
                    v
                )));
            }
        }
    }
    Ok(perm)
}

/// The permutation of a nonintersecting family and its sign.
pub fn sigma_of(spec: &FamilySpec, family: &PathFamily) -> Result<(Vec<usize>, i32), Error> {
    let perm = validate_family(spec, family)?;
    let sign = permutation_sign(&perm);
    Ok((perm, sign))
}

/// North/east paths from `(-l+1, l-1)` to `(-s_q, s_q + i_q)`; the matching
/// of starts to ends is left to enumeration.
pub fn q_spec(datum: &SchubertDatum) -> FamilySpec {
    let s = s_vector(datum);
    let d = datum.d() as i64;
    FamilySpec {
        system: StepSystem::NorthEast,
        starts: (1..=d).map(|l| LatticePoint::new(-l + 1, l - 1)).collect(),
        ends: datum
            .i()
            .iter()
            .zip(s.as_slice())
            .map(|(&iq, &sq)| LatticePoint::new(-sq, sq + iq))
            .collect(),
        model: Model::Q,
    }
}

/// North/east paths from `(-β_l, 0)` to `(0, α_l)` built from the Frobenius
/// coordinates of `(i_d - d, ..., i_1 - 1)`.
pub fn p_spec(datum: &SchubertDatum) -> Result<FamilySpec, Error> {
    if !datum.is_special() {
        return Err(Error::NotSpecialCase);
    }
    let fc = frobenius(&partition_from_i(datum));
    Ok(FamilySpec {
        system: StepSystem::NorthEast,
        starts: fc.beta.iter().map(|&b| LatticePoint::new(-b, 0)).collect(),
        ends: fc.alpha.iter().map(|&a| LatticePoint::new(0, a)).collect(),
        model: Model::P,
    })
}

/// East/south paths from `(-d + l, i_d + l)` to `(-s_l, i_l + d)`. The last
/// path has length zero.
pub fn r_spec(datum: &SchubertDatum) -> FamilySpec {
    let s = s_vector(datum);
    let d = datum.d() as i64;
    let top = datum.i_at(datum.d());
    FamilySpec {
        system: StepSystem::EastSouth,
        starts: (1..=d)
            .map(|l| LatticePoint::new(-d + l, top + l))
            .collect(),
        ends: datum
            .i()
            .iter()
            .zip(s.as_slice())
            .map(|(&il, &sl)| LatticePoint::new(-sl, il + d))
            .collect(),
        model: Model::R,
    }
}

/// Cuts a Q-family at height `d + 1`.
///
/// Paths ending below that height are dropped, the vertical prefix of every
/// other path up to height `d + 1` is removed, and what remains is moved
/// down by `d + 1`. The result is a P-family.
pub fn cut_q_to_p(datum: &SchubertDatum, family: &PathFamily) -> Result<PathFamily, Error> {
    let pspec = p_spec(datum)?;
    validate_family(&q_spec(datum), family)?;
    let cut = datum.d() as i64 + 1;
    let mut slots: Vec<Option<MonotonePath>> = vec![None; pspec.len()];
    for path in family.paths() {
        if path.end().y < cut {
            continue;
        }
        let rise = (cut - path.start.y) as usize;
        if path.steps.len() < rise || path.steps[..rise].iter().any(|&s| s != Step::N) {
            return Err(Error::FamilyInvalid(format!(
                "path from {} is not vertical up to height {cut}",
                path.start
            )));
        }
        let start = LatticePoint::new(path.start.x, 0);
        let m = pspec
            .starts
            .iter()
            .position(|&p| p == start)
            .ok_or_else(|| Error::FamilyInvalid(format!("no P-start at {start}")))?;
        slots[m] = Some(MonotonePath::new(start, path.steps[rise..].to_vec()));
    }
    let paths = slots
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::FamilyInvalid("cut leaves a P-start unused".to_string()))?;
    let out = PathFamily(paths);
    validate_family(&pspec, &out)?;
    Ok(out)
}

/// Inverse of [`cut_q_to_p`]: restores the forced vertical prefixes and the
/// short vertical paths that end at height `d`.
pub fn extend_p_to_q(datum: &SchubertDatum, family: &PathFamily) -> Result<PathFamily, Error> {
    let pspec = p_spec(datum)?;
    validate_family(&pspec, family)?;
    let d = datum.d() as i64;
    let qspec = q_spec(datum);
    let mut paths = Vec::with_capacity(qspec.len());
    for (l, &start) in (1..).zip(&qspec.starts) {
        let tail = family.paths().iter().find(|p| p.start.x == start.x);
        let path = match tail {
            Some(p) => {
                let mut steps = vec![Step::N; (d + 1 - (l - 1)) as usize];
                steps.extend_from_slice(&p.steps);
                MonotonePath::new(start, steps)
            }
            None => MonotonePath::new(start, vec![Step::N; (d - (l - 1)) as usize]),
        };
        paths.push(path);
    }
    let out = PathFamily(paths);
    validate_family(&qspec, &out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::determinant;
    use crate::schubert::validate;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn cone() -> SchubertDatum {
        validate(4, 2, &[2, 4], &[1, 2]).unwrap()
    }

    #[test]
    fn path_counts() {
        let ne = StepSystem::NorthEast;
        assert_eq!(count_paths(ne, pt(0, 0), pt(2, 2)), BigInt::from(6));
        assert_eq!(count_paths(ne, pt(-3, 0), pt(0, 4)), binomial(7, 4));
        assert_eq!(count_paths(ne, pt(0, 0), pt(-1, 3)), BigInt::zero());
        let es = StepSystem::EastSouth;
        assert_eq!(count_paths(es, pt(0, 5), pt(2, 2)), BigInt::from(10));
        assert_eq!(count_paths(es, pt(0, 0), pt(0, 0)), BigInt::from(1));
        assert_eq!(count_paths(es, pt(0, 0), pt(1, 1)), BigInt::zero());
    }

    #[test]
    fn model_specs_for_the_cone() {
        let q = q_spec(&cone());
        assert_eq!(q.starts, vec![pt(0, 0), pt(-1, 1)]);
        assert_eq!(q.ends, vec![pt(0, 2), pt(0, 4)]);
        let p = p_spec(&cone()).unwrap();
        assert_eq!(
            (p.starts.clone(), p.ends.clone()),
            (vec![pt(-1, 0)], vec![pt(0, 1)])
        );
        assert_eq!(lgv_matrix(&p), IntMatrix::from_rows(&[vec![2]]).unwrap());
        let r = r_spec(&cone());
        assert_eq!(r.starts, vec![pt(-1, 5), pt(0, 6)]);
        assert_eq!(r.ends, vec![pt(0, 4), pt(0, 6)]);
    }

    #[test]
    fn q_enumeration_of_the_cone() {
        let q = q_spec(&cone());
        let fams = enumerate_families(&q, Guard::DEFAULT).unwrap();
        let strings: Vec<Vec<String>> = fams
            .iter()
            .map(|(_, f)| f.paths().iter().map(MonotonePath::step_string).collect())
            .collect();
        assert_eq!(
            strings,
            vec![
                vec!["NN".to_string(), "NNEN".to_string()],
                vec!["NN".to_string(), "NNNE".to_string()],
            ]
        );
        let signed = enumerate_nonintersecting(&q, Guard::DEFAULT).unwrap();
        assert_eq!(signed.total, BigInt::from(2));
        assert_eq!(signed.total, determinant(&lgv_matrix(&q)));
    }

    #[test]
    fn seven_dimensional_specs() {
        let d7 = validate(17, 7, &[3, 5, 9, 10, 14, 15, 17], &[1, 2, 3, 4, 5, 6, 7]).unwrap();
        let q = q_spec(&d7);
        for e in [
            pt(-4, 7),
            pt(-2, 7),
            pt(0, 9),
            pt(0, 10),
            pt(0, 14),
            pt(0, 15),
            pt(0, 17),
        ] {
            assert!(q.ends.contains(&e));
        }
        let p = p_spec(&d7).unwrap();
        assert_eq!(
            p.starts,
            vec![pt(-6, 0), pt(-5, 0), pt(-3, 0), pt(-1, 0), pt(0, 0)]
        );
        assert_eq!(
            p.ends,
            vec![pt(0, 9), pt(0, 7), pt(0, 6), pt(0, 2), pt(0, 1)]
        );
    }

    #[test]
    fn r_spec_distances() {
        let d9 = validate(
            21,
            9,
            &[4, 6, 7, 13, 14, 17, 19, 20, 21],
            &[1, 2, 4, 7, 10, 12, 13, 15, 16],
        )
        .unwrap();
        let r = r_spec(&d9);
        assert_eq!(r.starts[0], pt(-8, 22));
        assert_eq!(r.ends[0], pt(-6, 13));
        assert_eq!(r.starts[8], r.ends[8]);
        assert_eq!(r.starts[8], pt(0, 30));
    }

    #[test]
    fn unreachable_start_gives_zero_row() {
        let spec = FamilySpec::new(
            StepSystem::NorthEast,
            vec![pt(0, 0), pt(5, 5)],
            vec![pt(1, 1), pt(2, 2)],
            Model::Custom,
        )
        .unwrap();
        let m = lgv_matrix(&spec);
        assert!(m.row(1).iter().all(Zero::is_zero));
        assert_eq!(determinant(&m), BigInt::zero());
        assert_eq!(
            enumerate_nonintersecting(&spec, Guard::DEFAULT)
                .unwrap()
                .total,
            BigInt::zero()
        );
    }

    #[test]
    fn crossing_spec_has_signed_terms() {
        // starts/ends placed so both permutations occur
        let spec = FamilySpec::new(
            StepSystem::NorthEast,
            vec![pt(0, 0), pt(1, -1)],
            vec![pt(2, 2), pt(3, 1)],
            Model::Custom,
        )
        .unwrap();
        let signed = enumerate_nonintersecting(&spec, Guard::DEFAULT).unwrap();
        assert_eq!(signed.total, determinant(&lgv_matrix(&spec)));
    }

    #[test]
    fn guard_trips() {
        let spec = FamilySpec::new(
            StepSystem::NorthEast,
            vec![pt(0, 0)],
            vec![pt(10, 10)],
            Model::Custom,
        )
        .unwrap();
        assert!(matches!(
            enumerate_nonintersecting(&spec, Guard(1000)),
            Err(Error::GuardExceeded { guard: 1000, .. })
        ));
        assert!(enumerate_nonintersecting(&spec, Guard(184_756)).is_ok());
    }

    #[test]
    fn single_path_family() {
        let spec = FamilySpec::new(
            StepSystem::EastSouth,
            vec![pt(0, 3)],
            vec![pt(2, 0)],
            Model::Custom,
        )
        .unwrap();
        let signed = enumerate_nonintersecting(&spec, Guard::DEFAULT).unwrap();
        assert_eq!(signed.by_permutation.len(), 1);
        assert_eq!(signed.total, BigInt::from(10));
    }

    #[test]
    fn cut_and_extend_on_the_cone() {
        let datum = cone();
        let q = q_spec(&datum);
        let right_at_3 = PathFamily(vec![
            MonotonePath::parse(pt(0, 0), "NN").unwrap(),
            MonotonePath::parse(pt(-1, 1), "NNEN").unwrap(),
        ]);
        let right_at_4 = PathFamily(vec![
            MonotonePath::parse(pt(0, 0), "NN").unwrap(),
            MonotonePath::parse(pt(-1, 1), "NNNE").unwrap(),
        ]);
        assert_eq!(sigma_of(&q, &right_at_3).unwrap(), (vec![0, 1], 1));

        let p3 = cut_q_to_p(&datum, &right_at_3).unwrap();
        assert_eq!(
            p3.paths()[0].vertices(),
            vec![pt(-1, 0), pt(0, 0), pt(0, 1)]
        );
        let p4 = cut_q_to_p(&datum, &right_at_4).unwrap();
        assert_eq!(
            p4.paths()[0].vertices(),
            vec![pt(-1, 0), pt(-1, 1), pt(0, 1)]
        );

        assert_eq!(extend_p_to_q(&datum, &p3).unwrap(), right_at_3);
        assert_eq!(extend_p_to_q(&datum, &p4).unwrap(), right_at_4);
    }

    #[test]
    fn cut_of_trivial_datum_is_empty() {
        let datum = validate(6, 3, &[1, 2, 3], &[1, 2, 3]).unwrap();
        let fams = enumerate_families(&q_spec(&datum), Guard::DEFAULT).unwrap();
        assert_eq!(fams.len(), 1);
        let p = cut_q_to_p(&datum, &fams[0].1).unwrap();
        assert!(p.is_empty());
        assert_eq!(
            extend_p_to_q(&datum, &PathFamily::default()).unwrap(),
            fams[0].1
        );
    }

    #[test]
    fn invalid_families_are_rejected() {
        let datum = cone();
        let q = q_spec(&datum);
        let crossing = PathFamily(vec![
            MonotonePath::parse(pt(0, 0), "NN").unwrap(),
            MonotonePath::parse(pt(-1, 1), "ENN").unwrap(),
        ]);
        assert!(matches!(
            sigma_of(&q, &crossing),
            Err(Error::FamilyInvalid(_))
        ));
        let wrong_step = PathFamily(vec![
            MonotonePath::parse(pt(0, 0), "NN").unwrap(),
            MonotonePath::parse(pt(-1, 1), "NNSNNE").unwrap(),
        ]);
        assert!(sigma_of(&q, &wrong_step).is_err());
        let general = validate(4, 2, &[2, 4], &[2, 3]).unwrap();
        assert_eq!(p_spec(&general), Err(Error::NotSpecialCase));
    }

    #[test]
    fn zero_length_path_blocks_its_point() {
        let spec = FamilySpec::new(
            StepSystem::EastSouth,
            vec![pt(0, 2), pt(1, 1)],
            vec![pt(2, 0), pt(1, 1)],
            Model::Custom,
        )
        .unwrap();
        // every path (0,2) -> (2,0) through (1,1) is excluded
        let signed = enumerate_nonintersecting(&spec, Guard::DEFAULT).unwrap();
        assert_eq!(signed.total, BigInt::from(2));
        assert_eq!(signed.total, determinant(&lgv_matrix(&spec)));
    }
}
