//! Exhaustive counting of ordered arcs, frames and sectionable arcs at desk scale.
//!
//! Backtracking over points in lexicographic order. Each level keeps a bitset of
//! points that may no longer be added: the span of the prefix while it has at
//! most n points, then every hyperplane through n prefix points. Hyperplane
//! bitsets are precomputed, so the hot path is word-wise OR plus popcount.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arcs::random_arc;
use crate::desargues::{binomial, section_arc};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::projlin::{all_points, hyperplane_from_dual, Subspace};

/// Largest supported ambient dimension + 1.
const MAX_COLS: usize = 9;
/// Ceiling on the number of points of the search space.
pub const POINT_CEILING: u64 = 4096;
/// Ceiling on `q^(n+1)`, the size of the coordinate lookup table.
pub const TABLE_CEILING: u64 = 1 << 22;
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;
/// Upper bound on the number of sampled arcs sectioned after a count.
pub const MAX_SAMPLES: u64 = 200;

const FLUSH_EVERY: u64 = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnumKind {
    Arcs,
    Frames,
    SectionedConfigs,
}

/// A counting job. For `SectionedConfigs`, `n` is the configuration dimension and
/// the search runs over (n+3)-arcs of PG(n+1, q).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumJob {
    pub n: usize,
    pub field: FieldSpec,
    pub kind: EnumKind,
    /// Arc size for `Arcs`; ignored otherwise.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    /// Dual coordinates of a hyperplane of the search space whose points are excluded.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub avoid: Option<Vec<u32>>,
    pub count_only: bool,
    pub budget: u64,
}

impl EnumJob {
    pub fn new(n: usize, field: FieldSpec, kind: EnumKind) -> EnumJob {
        EnumJob { n, field, kind, size: None, avoid: None, count_only: false, budget: DEFAULT_BUDGET }
    }

    pub fn arcs(n: usize, field: FieldSpec, size: usize) -> EnumJob {
        EnumJob { size: Some(size), ..EnumJob::new(n, field, EnumKind::Arcs) }
    }

    /// Dimension of the space searched.
    pub fn search_dim(&self) -> usize {
        match self.kind {
            EnumKind::SectionedConfigs => self.n + 1,
            _ => self.n,
        }
    }

    /// Number of points in each counted tuple.
    pub fn tuple_size(&self) -> Result<usize> {
        match self.kind {
            EnumKind::Arcs => self.size.ok_or_else(|| Error::Format("arc size is required".into())),
            EnumKind::Frames => Ok(self.n + 2),
            EnumKind::SectionedConfigs => Ok(self.n + 3),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnumReport {
    pub job: EnumJob,
    /// Ordered tuples.
    pub raw: u64,
    /// `raw / m!`: unordered point sets.
    pub unordered: u64,
    /// Prefix extensions visited (the last level is counted, not visited).
    pub nodes: u64,
    /// Points available to the search.
    pub points: u64,
    /// Order of PGL(n+1, q); frames are in bijection with its elements.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group_order: Option<u64>,
    /// Randomly drawn arcs that sectioned to a valid configuration.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sections_checked: Option<u64>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// `|PGL(n+1, q)| = q^(n(n+1)/2) * prod_{i=2}^{n+1} (q^i - 1)`, if it fits in a u64.
pub fn projectivity_group_order(n: usize, q: u64) -> Option<u64> {
    let mut order = q.checked_pow(u32::try_from(n * (n + 1) / 2).ok()?)?;
    for i in 2..=n as u32 + 1 {
        order = order.checked_mul(q.checked_pow(i)? - 1)?;
    }
    Some(order)
}

/// Ordered m-arcs of PG(n, q), optionally all off `avoid`.
pub fn count_arcs(n: usize, spec: &FieldSpec, m: usize, avoid: Option<&Subspace>) -> Result<u64> {
    let mut job = EnumJob::arcs(n, spec.clone(), m);
    job.avoid = avoid.map(Subspace::hyperplane_dual).transpose()?;
    Ok(run(&job)?.raw)
}

/// Ordered frames ((n+2)-arcs) of PG(n, q).
pub fn count_frames(n: usize, spec: &FieldSpec) -> Result<u64> {
    Ok(run(&EnumJob::new(n, spec.clone(), EnumKind::Frames))?.raw)
}

/// Ordered (n+3)-arcs of PG(n+1, q) with no point on `h`.
pub fn count_sectioned_configs(n: usize, spec: &FieldSpec, h: &Subspace) -> Result<u64> {
    let mut job = EnumJob::new(n, spec.clone(), EnumKind::SectionedConfigs);
    job.avoid = Some(h.hyperplane_dual()?);
    job.count_only = true;
    Ok(run(&job)?.raw)
}

pub fn run(job: &EnumJob) -> Result<EnumReport> {
    let start = Instant::now();
    if job.budget == 0 {
        return Err(Error::BudgetExceeded(0));
    }
    let field = Field::new(job.field.clone())?;
    let dim = job.search_dim();
    let m = job.tuple_size()?;
    let avoid = match (&job.avoid, job.kind) {
        (Some(d), _) => Some(hyperplane_from_dual(&field, d)?),
        (None, EnumKind::SectionedConfigs) => {
            Some(crate::desargues::standard_hyperplane(&field, job.n))
        }
        (None, _) => None,
    };
    if let Some(h) = &avoid {
        if h.ambient() != dim {
            return Err(Error::AmbientMismatch(dim, h.ambient()));
        }
    }
    let space = Space::new(&field, dim)?;
    let mut start_bits = vec![0u64; space.words];
    if let Some(h) = &avoid {
        let d = h.hyperplane_dual()?;
        start_bits.copy_from_slice(&space.hyper[space.index_of(&d)]);
    }
    let (raw, nodes) = space.count(m, &start_bits, job.budget)?;
    let labelings: u64 = (1..=m as u64).product();

    let group_order = match job.kind {
        EnumKind::Frames => projectivity_group_order(dim, u64::from(field.q())),
        _ => None,
    };
    let sections_checked = match (job.kind, job.count_only, &avoid) {
        (EnumKind::SectionedConfigs, false, Some(h)) if raw > 0 => {
            Some(check_sections(&field, job.n, h, raw.div_ceil(100).min(MAX_SAMPLES))?)
        }
        _ => None,
    };
    Ok(EnumReport {
        job: job.clone(),
        raw,
        unordered: raw / labelings,
        nodes,
        points: space.len() as u64,
        group_order,
        sections_checked,
        elapsed: start.elapsed(),
    })
}

/// Draw `samples` arcs off `h` and check each sections to C(n+3, 2) distinct points.
fn check_sections(field: &Field, n: usize, h: &Subspace, samples: u64) -> Result<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let want = binomial(n as u64 + 3, 2) as usize;
    for _ in 0..samples {
        let arc = random_arc(field, n + 1, n + 3, Some(h), &mut rng, 1000)?;
        let config = section_arc(&arc, h)?;
        if config.len() != want {
            return Err(Error::DegenerateSection("sampled arc failed to section".into()));
        }
    }
    Ok(samples)
}

type Coords = [u32; MAX_COLS];

/// Points of PG(n, q) with dense lookup and per-hyperplane bitsets.
struct Space {
    field: Field,
    cols: usize,
    coords: Vec<Coords>,
    /// `sum c_i q^i` of a normalized vector to its point index.
    lookup: Vec<u32>,
    words: usize,
    /// Bitset of each hyperplane, indexed by the point index of its dual vector.
    hyper: Vec<Vec<u64>>,
}

impl Space {
    fn new(field: &Field, n: usize) -> Result<Space> {
        let cols = n + 1;
        let q = u64::from(field.q());
        let count = crate::projlin::point_count(q, n);
        let table = q.checked_pow(cols as u32).unwrap_or(u64::MAX);
        if cols > MAX_COLS || count > POINT_CEILING || table > TABLE_CEILING {
            return Err(Error::SearchSpaceTooLarge(count));
        }
        let coords: Vec<Coords> = all_points(field, n)
            .iter()
            .map(|p| {
                let mut c = [0; MAX_COLS];
                c[..cols].copy_from_slice(p.codes());
                c
            })
            .collect();
        let mut space = Space {
            field: field.clone(),
            cols,
            lookup: vec![u32::MAX; table as usize],
            words: coords.len().div_ceil(64),
            hyper: Vec::new(),
            coords,
        };
        for (i, c) in space.coords.iter().enumerate() {
            let key = space.key(c);
            space.lookup[key] = i as u32;
        }
        space.hyper = space
            .coords
            .iter()
            .map(|d| {
                let mut bits = vec![0u64; space.words];
                for (i, c) in space.coords.iter().enumerate() {
                    if space.dot(c, d) == 0 {
                        bits[i / 64] |= 1 << (i % 64);
                    }
                }
                bits
            })
            .collect();
        Ok(space)
    }

    fn len(&self) -> usize {
        self.coords.len()
    }

    fn key(&self, c: &[u32]) -> usize {
        let q = self.field.q() as usize;
        c[..self.cols].iter().rev().fold(0, |acc, &x| acc * q + x as usize)
    }

    fn dot(&self, a: &Coords, b: &Coords) -> u32 {
        (0..self.cols).fold(0, |acc, i| self.field.add(acc, self.field.mul(a[i], b[i])))
    }

    fn normalize(&self, v: &mut Coords) {
        if let Some(&lead) = v[..self.cols].iter().find(|&&x| x != 0) {
            if lead != 1 {
                let inv = self.field.inv(lead);
                for x in &mut v[..self.cols] {
                    *x = self.field.mul(*x, inv);
                }
            }
        }
    }

    fn index_of(&self, v: &[u32]) -> usize {
        let mut c = [0; MAX_COLS];
        c[..self.cols].copy_from_slice(&v[..self.cols]);
        self.normalize(&mut c);
        self.lookup[self.key(&c)] as usize
    }

    /// Dual vector of the hyperplane spanned by `n` independent points.
    fn hyperplane_through(&self, pts: &[usize]) -> usize {
        let f = &self.field;
        let cols = self.cols;
        let mut rows = [[0u32; MAX_COLS]; MAX_COLS];
        for (r, &p) in rows.iter_mut().zip(pts) {
            *r = self.coords[p];
        }
        let k = pts.len();
        let mut pivots = [0usize; MAX_COLS];
        let mut r = 0;
        for c in 0..cols {
            if r == k {
                break;
            }
            let Some(pr) = (r..k).find(|&i| rows[i][c] != 0) else { continue };
            rows.swap(r, pr);
            let inv = f.inv(rows[r][c]);
            for x in &mut rows[r][c..cols] {
                *x = f.mul(*x, inv);
            }
            let pivot = rows[r];
            for (i, row) in rows[..k].iter_mut().enumerate() {
                if i != r && row[c] != 0 {
                    let factor = f.neg(row[c]);
                    for j in c..cols {
                        row[j] = f.add(row[j], f.mul(factor, pivot[j]));
                    }
                }
            }
            pivots[r] = c;
            r += 1;
        }
        debug_assert_eq!(r, k, "hyperplane points must be independent");
        let free = (0..cols).find(|c| !pivots[..k].contains(c)).expect("one free column");
        let mut v = [0u32; MAX_COLS];
        v[free] = 1;
        for i in 0..k {
            v[pivots[i]] = f.neg(rows[i][free]);
        }
        self.index_of(&v)
    }

    /// Mark every point in the span of fewer than n points.
    fn mark_span(&self, bits: &mut [u64], pts: &[usize]) {
        let q = self.field.q();
        let k = pts.len();
        let mut coeff = vec![0u32; k];
        loop {
            let mut v = [0u32; MAX_COLS];
            for (&a, &p) in coeff.iter().zip(pts) {
                if a != 0 {
                    for (x, &c) in v.iter_mut().zip(&self.coords[p][..self.cols]) {
                        *x = self.field.add(*x, self.field.mul(a, c));
                    }
                }
            }
            if v[..self.cols].iter().any(|&x| x != 0) {
                let i = self.index_of(&v);
                bits[i / 64] |= 1 << (i % 64);
            }
            let Some(pos) = coeff.iter().position(|&a| a + 1 < q) else { break };
            coeff[pos] += 1;
            coeff[..pos].fill(0);
        }
    }

    /// Add the constraints introduced by appending `x` to `prefix`.
    fn extend(&self, bits: &mut [u64], prefix: &[usize], x: usize) {
        let n = self.cols - 1;
        let mut buf = [0usize; MAX_COLS];
        let k = prefix.len() + 1;
        buf[..prefix.len()].copy_from_slice(prefix);
        buf[prefix.len()] = x;
        if k < n {
            self.mark_span(bits, &buf[..k]);
        } else if k == n {
            self.or_hyper(bits, &buf[..k]);
        } else {
            let mut chosen = [0usize; MAX_COLS];
            chosen[n - 1] = x;
            for_each_combination(prefix.len(), n - 1, &mut |idx| {
                for (c, &i) in chosen.iter_mut().zip(idx) {
                    *c = prefix[i];
                }
                self.or_hyper(bits, &chosen[..n]);
            });
        }
    }

    fn or_hyper(&self, bits: &mut [u64], pts: &[usize]) {
        let h = &self.hyper[self.hyperplane_through(pts)];
        for (b, &w) in bits.iter_mut().zip(h) {
            *b |= w;
        }
    }

    fn free_count(&self, bits: &[u64]) -> u64 {
        let total = self.len();
        bits.iter()
            .enumerate()
            .map(|(w, &b)| {
                let valid = if (w + 1) * 64 <= total { u64::MAX } else { (1u64 << (total % 64)) - 1 };
                u64::from((!b & valid).count_ones())
            })
            .sum()
    }

    fn free_points<'a>(&'a self, bits: &'a [u64]) -> impl Iterator<Item = usize> + 'a {
        (0..self.len()).filter(move |&i| bits[i / 64] & (1 << (i % 64)) == 0)
    }

    /// (count, nodes) of ordered m-arcs starting from `start` blocked points.
    fn count(&self, m: usize, start: &[u64], budget: u64) -> Result<(u64, u64)> {
        if m == 0 {
            return Ok((1, 0));
        }
        if m == 1 {
            return Ok((self.free_count(start), 0));
        }
        let spent = AtomicU64::new(0);
        let firsts: Vec<usize> = self.free_points(start).collect();
        let parts = firsts
            .par_iter()
            .map(|&x| {
                let mut w = Worker { budget, spent: &spent, local: 0, nodes: 0 };
                w.tick()?;
                let mut bits = start.to_vec();
                self.extend(&mut bits, &[], x);
                let mut prefix = vec![x];
                let c = self.dfs(m, &mut prefix, &bits, &mut w)?;
                Ok((c, w.nodes))
            })
            .collect::<Result<Vec<(u64, u64)>>>()?;
        Ok(parts.iter().fold((0, 0), |(c, n), &(a, b)| (c + a, n + b)))
    }

    fn dfs(&self, m: usize, prefix: &mut Vec<usize>, bits: &[u64], w: &mut Worker) -> Result<u64> {
        if prefix.len() == m - 1 {
            return Ok(self.free_count(bits));
        }
        let mut total = 0;
        let mut next = vec![0u64; self.words];
        for x in self.free_points(bits) {
            w.tick()?;
            next.copy_from_slice(bits);
            self.extend(&mut next, prefix, x);
            prefix.push(x);
            total += self.dfs(m, prefix, &next, w)?;
            prefix.pop();
        }
        Ok(total)
    }
}

struct Worker<'a> {
    budget: u64,
    spent: &'a AtomicU64,
    local: u64,
    nodes: u64,
}

impl Worker<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        self.local += 1;
        if self.local == FLUSH_EVERY {
            let total = self.spent.fetch_add(self.local, Ordering::Relaxed) + self.local;
            self.local = 0;
            if total > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
        }
        if self.spent.load(Ordering::Relaxed) + self.local > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        Ok(())
    }
}

/// Calls `f` with every increasing k-subset of `0..len`.
fn for_each_combination(len: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    if k > len {
        return;
    }
    let mut idx = [0usize; MAX_COLS];
    for (i, x) in idx[..k].iter_mut().enumerate() {
        *x = i;
    }
    loop {
        f(&idx[..k]);
        let Some(pos) = (0..k).rev().find(|&i| idx[i] < len - k + i) else { return };
        idx[pos] += 1;
        for i in pos + 1..k {
            idx[i] = idx[i - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arcs::is_arc;
    use crate::projlin::ProjPoint;
    use itertools::Itertools;

    fn spec(p: u32) -> FieldSpec {
        FieldSpec::prime(p)
    }

    /// Invertible 3x3 matrices over GF(3), by brute force, modulo scalars.
    fn pgl3_over_gf3_brute() -> u64 {
        let f = Field::prime(3).unwrap();
        let mut invertible = 0u64;
        for code in 0..3u32.pow(9) {
            let e: Vec<u32> = (0..9).map(|i| (code / 3u32.pow(i)) % 3).collect();
            let m = |r: usize, c: usize| e[r * 3 + c];
            let t1 = f.mul(m(0, 0), f.sub(f.mul(m(1, 1), m(2, 2)), f.mul(m(1, 2), m(2, 1))));
            let t2 = f.mul(m(0, 1), f.sub(f.mul(m(1, 0), m(2, 2)), f.mul(m(1, 2), m(2, 0))));
            let t3 = f.mul(m(0, 2), f.sub(f.mul(m(1, 0), m(2, 1)), f.mul(m(1, 1), m(2, 0))));
            if f.add(f.sub(t1, t2), t3) != 0 {
                invertible += 1;
            }
        }
        invertible / 2
    }

    /// Ordered m-arcs by checking every ordered tuple of distinct points.
    fn brute_arcs(field: &Field, n: usize, m: usize, avoid: Option<&Subspace>) -> u64 {
        let pts: Vec<ProjPoint> =
            all_points(field, n).into_iter().filter(|p| avoid.is_none_or(|h| !h.contains_point(p))).collect();
        pts.iter()
            .cloned()
            .combinations(m)
            .filter(|c| is_arc(c).unwrap())
            .count() as u64
            * (1..=m as u64).product::<u64>()
    }

    #[test]
    fn line_triples() {
        assert_eq!(count_arcs(1, &spec(3), 3, None).unwrap(), 24);
        assert_eq!(count_frames(1, &spec(3)).unwrap(), 24);
    }

    #[test]
    fn plane_frames_match_group_order() {
        let oracle = pgl3_over_gf3_brute();
        assert_eq!(oracle, 5616);
        assert_eq!(count_frames(2, &spec(3)).unwrap(), oracle);
        assert_eq!(projectivity_group_order(2, 3), Some(5616));
    }

    #[test]
    fn gf4_frames() {
        let s = FieldSpec::with_degree(2, 2).unwrap();
        assert_eq!(count_frames(2, &s).unwrap(), 60480);
        assert_eq!(projectivity_group_order(2, 4), Some(60480));
    }

    #[test]
    fn matches_brute_force() {
        for (p, n, m) in [(3, 2, 4), (3, 2, 3), (5, 2, 5), (2, 3, 4), (3, 3, 5)] {
            let f = Field::prime(p).unwrap();
            assert_eq!(count_arcs(n, &spec(p), m, None).unwrap(), brute_arcs(&f, n, m, None), "{p} {n} {m}");
        }
        let f = Field::prime(3).unwrap();
        let h = hyperplane_from_dual(&f, &[1, 1, 1]).unwrap();
        assert_eq!(count_arcs(2, &spec(3), 4, Some(&h)).unwrap(), brute_arcs(&f, 2, 4, Some(&h)));
    }

    #[test]
    fn gf2_five_arcs_off_a_plane() {
        let f = Field::prime(2).unwrap();
        let h = crate::desargues::standard_hyperplane(&f, 2);
        assert_eq!(count_arcs(3, &spec(2), 5, Some(&h)).unwrap(), 0);
        assert_eq!(brute_arcs(&f, 3, 5, Some(&h)), 0);
        assert_eq!(count_sectioned_configs(2, &spec(2), &h).unwrap(), 0);
        // Frames of PG(3,2) exist; they just always meet the plane.
        assert!(count_arcs(3, &spec(2), 5, None).unwrap() > 0);
    }

    #[test]
    fn avoiding_never_increases() {
        let f = Field::prime(3).unwrap();
        let h = hyperplane_from_dual(&f, &[0, 1, 2]).unwrap();
        for m in 1..=4 {
            assert!(count_arcs(2, &spec(3), m, Some(&h)).unwrap() <= count_arcs(2, &spec(3), m, None).unwrap());
        }
    }

    #[test]
    fn sectioned_q3_with_samples() {
        let mut job = EnumJob::new(2, spec(3), EnumKind::SectionedConfigs);
        let r = run(&job).unwrap();
        let f = Field::prime(3).unwrap();
        let h = crate::desargues::standard_hyperplane(&f, 2);
        assert_eq!(r.raw, brute_arcs(&f, 3, 5, Some(&h)));
        assert_eq!(r.raw % 120, 0);
        assert_eq!(r.unordered * 120, r.raw);
        assert_eq!(r.sections_checked, Some(r.raw.div_ceil(100).min(MAX_SAMPLES)));
        job.count_only = true;
        assert_eq!(run(&job).unwrap().sections_checked, None);
    }

    #[test]
    fn budget_and_ceiling() {
        let mut job = EnumJob::new(2, spec(3), EnumKind::Frames);
        job.budget = 10;
        assert_eq!(run(&job).unwrap_err(), Error::BudgetExceeded(10));
        let big = EnumJob::new(3, spec(31), EnumKind::Frames);
        assert!(matches!(run(&big), Err(Error::SearchSpaceTooLarge(_))));
    }

    #[test]
    fn combinations_helper() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, &mut |c| seen.push(c.to_vec()));
        assert_eq!(seen, (0..4).combinations(2).collect::<Vec<_>>());
        let mut count = 0;
        for_each_combination(3, 0, &mut |_| count += 1);
        assert_eq!(count, 1);
    }
}
