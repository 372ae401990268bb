//! Sections of arcs and simplexes in perspective.
//!
//! An (n+3)-arc in PG(n+1, q) cut by a hyperplane `H` yields one point of `H`
//! per pair of arc points: the point where the joining line crosses `H`. Those
//! C(n+3, 2) points, labelled by unordered symbol pairs, form a
//! [`LabeledConfiguration`]. Any two symbols `a, b` pick out two simplexes
//! `{(a,i)}` and `{(b,i)}` in perspective from `(a,b)`; [`lift_to_arc`] runs
//! the construction backwards.
//!
//! Points of `H` are expressed in the coordinates of its RREF basis (see
//! [`Subspace::local_coords`]), so a configuration lives in PG(n, q).

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arcs::{is_arc, is_simplex, random_arc, Arc};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::projlin::{all_points, hyperplane_from_dual, join, meet, rank_of, span, ProjPoint, Subspace};

/// Unordered pair of distinct symbols, stored with `i < j`. Symbols start at 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[u8; 2]", into = "[u8; 2]")]
pub struct Label(u8, u8);

impl Label {
    pub fn new(i: u8, j: u8) -> Result<Label> {
        if i == j || i == 0 || j == 0 {
            return Err(Error::BadSymbols(i, j));
        }
        Ok(Label(i.min(j), i.max(j)))
    }

    pub fn i(self) -> u8 {
        self.0
    }

    pub fn j(self) -> u8 {
        self.1
    }

    pub fn contains(self, s: u8) -> bool {
        self.0 == s || self.1 == s
    }

    pub fn shares_symbol(self, other: Label) -> bool {
        self.contains(other.0) || self.contains(other.1)
    }

    /// The remaining symbol of `self` once `s` is removed.
    pub fn other(self, s: u8) -> Option<u8> {
        if self.0 == s {
            Some(self.1)
        } else if self.1 == s {
            Some(self.0)
        } else {
            None
        }
    }
}

impl TryFrom<[u8; 2]> for Label {
    type Error = Error;
    fn try_from(v: [u8; 2]) -> Result<Label> {
        Label::new(v[0], v[1])
    }
}

impl From<Label> for [u8; 2] {
    fn from(l: Label) -> [u8; 2] {
        [l.0, l.1]
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// The labelled section of an (n+3)-arc: one point of PG(n, q) per symbol pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledConfiguration {
    field: Field,
    n: usize,
    table: BTreeMap<Label, ProjPoint>,
}

impl LabeledConfiguration {
    /// Validates the label set `{1..n+3}` choose 2 and that all points are distinct.
    pub fn new(field: &Field, n: usize, table: BTreeMap<Label, ProjPoint>) -> Result<Self> {
        let s = (n + 3) as u8;
        let expected = binomial(n as u64 + 3, 2) as usize;
        if table.len() != expected {
            return Err(Error::BadTable(format!("expected {expected} entries, got {}", table.len())));
        }
        if let Some(l) = table.keys().find(|l| l.j() > s) {
            return Err(Error::BadTable(format!("label {l} uses a symbol above {s}")));
        }
        for p in table.values() {
            if p.ambient() != n {
                return Err(Error::AmbientMismatch(n, p.ambient()));
            }
            if p.field() != field {
                return Err(Error::MixedFields);
            }
        }
        let distinct: HashSet<&ProjPoint> = table.values().collect();
        if distinct.len() != table.len() {
            return Err(Error::DegenerateSection("labelled points are not distinct".into()));
        }
        Ok(LabeledConfiguration { field: field.clone(), n, table })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Dimension of the space holding the points.
    pub fn ambient(&self) -> usize {
        self.n
    }

    /// Number of symbols, n+3.
    pub fn symbols(&self) -> u8 {
        (self.n + 3) as u8
    }

    pub fn table(&self) -> &BTreeMap<Label, ProjPoint> {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn point(&self, label: Label) -> &ProjPoint {
        &self.table[&label]
    }

    pub fn get(&self, i: u8, j: u8) -> Result<&ProjPoint> {
        let l = Label::new(i, j)?;
        self.table.get(&l).ok_or(Error::BadSymbols(i, j))
    }

    pub fn label_of(&self, p: &ProjPoint) -> Option<Label> {
        self.table.iter().find(|(_, q)| *q == p).map(|(l, _)| *l)
    }
}

/// Two simplexes of PG(n, q) with an index-wise correspondence.
///
/// Construction checks both are simplexes and that they share no point and no face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerspectivePair {
    field: Field,
    n: usize,
    a: Vec<ProjPoint>,
    b: Vec<ProjPoint>,
}

impl PerspectivePair {
    pub fn new(a: Vec<ProjPoint>, b: Vec<ProjPoint>) -> Result<PerspectivePair> {
        if !is_simplex(&a)? || !is_simplex(&b)? {
            return Err(Error::NotASimplex);
        }
        let n = a[0].ambient();
        if b[0].ambient() != n {
            return Err(Error::AmbientMismatch(n, b[0].ambient()));
        }
        if a[0].field() != b[0].field() {
            return Err(Error::MixedFields);
        }
        if let Some(i) = a.iter().position(|p| b.contains(p)) {
            return Err(Error::SharedPoint(i));
        }
        let pair = PerspectivePair { field: a[0].field().clone(), n, a, b };
        let faces_a: HashSet<Subspace> = (0..=n).map(|k| pair.face_a(k)).collect();
        if (0..=n).any(|k| faces_a.contains(&pair.face_b(k))) {
            return Err(Error::SharedFace);
        }
        Ok(pair)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &[ProjPoint] {
        &self.a
    }

    pub fn b(&self) -> &[ProjPoint] {
        &self.b
    }

    /// Face `k` of A: the span of every point but `A_k`.
    pub fn face_a(&self, k: usize) -> Subspace {
        face(&self.a, k)
    }

    pub fn face_b(&self, k: usize) -> Subspace {
        face(&self.b, k)
    }

    fn sub_a(&self, idx: &[usize]) -> Subspace {
        span(&idx.iter().map(|&i| self.a[i].clone()).collect::<Vec<_>>()).expect("nonempty")
    }

    fn sub_b(&self, idx: &[usize]) -> Subspace {
        span(&idx.iter().map(|&i| self.b[i].clone()).collect::<Vec<_>>()).expect("nonempty")
    }
}

fn face(points: &[ProjPoint], k: usize) -> Subspace {
    let rest: Vec<ProjPoint> =
        points.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, p)| p.clone()).collect();
    span(&rest).expect("simplex has at least two points")
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Cut the lines joining pairs of an (n+3)-arc of PG(n+1, q) by the hyperplane `h`.
pub fn section_arc(gamma: &Arc, h: &Subspace) -> Result<LabeledConfiguration> {
    let field = gamma.field();
    if field.q() <= 2 {
        return Err(Error::FieldTooSmall(field.q()));
    }
    if h.ambient() != gamma.ambient() {
        return Err(Error::AmbientMismatch(gamma.ambient(), h.ambient()));
    }
    if !h.is_hyperplane() {
        return Err(Error::NotAHyperplane { dim: h.dim(), ambient: h.ambient() });
    }
    if gamma.ambient() == 0 {
        return Err(Error::TooFew { min: 1, got: 0 });
    }
    let n = gamma.ambient() - 1;
    if gamma.len() != n + 3 {
        return Err(Error::WrongCount { expected: n + 3, got: gamma.len() });
    }
    if let Some(i) = gamma.points().iter().position(|p| h.contains_point(p)) {
        return Err(Error::PointOnHyperplane(i + 1));
    }
    let mut table = BTreeMap::new();
    for (i, j) in (0..n + 3).tuple_combinations() {
        let line = span(&[gamma.points()[i].clone(), gamma.points()[j].clone()])?;
        let p = meet(&line, h)?
            .as_point()
            .ok_or_else(|| Error::DegenerateSection(format!("line {}-{} misses H", i + 1, j + 1)))?;
        table.insert(Label::new(i as u8 + 1, j as u8 + 1)?, h.local_coords(&p)?);
    }
    LabeledConfiguration::new(field, n, table)
}

/// The simplexes `{(a,i)}` and `{(b,i)}` (ascending `i`) and the vertex `(a,b)`.
pub fn extract_perspective_pair(
    config: &LabeledConfiguration,
    a: u8,
    b: u8,
) -> Result<(PerspectivePair, ProjPoint)> {
    let s = config.symbols();
    if a == b || !(1..=s).contains(&a) || !(1..=s).contains(&b) {
        return Err(Error::BadSymbols(a, b));
    }
    let others: Vec<u8> = (1..=s).filter(|&i| i != a && i != b).collect();
    let side = |x: u8| -> Result<Vec<ProjPoint>> { others.iter().map(|&i| config.get(x, i).cloned()).collect() };
    let pair = PerspectivePair::new(side(a)?, side(b)?)?;
    Ok((pair, config.get(a, b)?.clone()))
}

fn edge_meet(pair: &PerspectivePair, i: usize, j: usize) -> Result<ProjPoint> {
    let ea = pair.sub_a(&[i, j]);
    let eb = pair.sub_b(&[i, j]);
    meet(&ea, &eb)?.as_point().ok_or(Error::EdgesDisjoint(i, j))
}

/// The common point of the lines `A_i B_i`, given that corresponding edges meet.
pub fn find_vertex(pair: &PerspectivePair) -> Result<ProjPoint> {
    for (i, j) in (0..=pair.n).tuple_combinations() {
        edge_meet(pair, i, j)?;
    }
    let spoke = |i: usize| span(&[pair.a[i].clone(), pair.b[i].clone()]).expect("distinct points");
    let v = meet(&spoke(0), &spoke(1))?.as_point().ok_or(Error::NoCommonVertex)?;
    if (2..=pair.n).any(|i| !spoke(i).contains_point(&v)) {
        return Err(Error::NoCommonVertex);
    }
    if pair.a.contains(&v) || pair.b.contains(&v) {
        return Err(Error::NoCommonVertex);
    }
    Ok(v)
}

/// `A_iA_j ∩ B_iB_j` for every `i < j` (0-based indices).
pub fn edge_intersections(pair: &PerspectivePair) -> Result<BTreeMap<(usize, usize), ProjPoint>> {
    let mut out = BTreeMap::new();
    for (i, j) in (0..=pair.n).tuple_combinations() {
        out.insert((i, j), edge_meet(pair, i, j)?);
    }
    let distinct: HashSet<&ProjPoint> = out.values().collect();
    if distinct.len() != out.len() || out.values().any(|p| pair.a.contains(p) || pair.b.contains(p)) {
        return Err(Error::CoincidentIntersections);
    }
    Ok(out)
}

/// The hyperplane spanned by the edge intersections; it must also hold every
/// face-pair meet `α_k ∩ β_k`.
pub fn axis_hyperplane(pair: &PerspectivePair) -> Result<Subspace> {
    let pts: Vec<ProjPoint> = edge_intersections(pair)?.into_values().collect();
    let axis = span(&pts)?;
    if !axis.is_hyperplane() {
        return Err(Error::NoAxis(axis.dim()));
    }
    for k in 0..=pair.n {
        if !axis.contains(&meet(&pair.face_a(k), &pair.face_b(k))?) {
            return Err(Error::NoAxis(axis.dim()));
        }
    }
    Ok(axis)
}

/// `⟨A_J⟩ ∩ ⟨B_J⟩` for every (t+1)-subset `J`, in lexicographic order of `J`.
///
/// Each meet must be a (t-1)-space inside the axis hyperplane.
pub fn tspace_intersections(pair: &PerspectivePair, t: usize) -> Result<Vec<Subspace>> {
    let max = pair.n.saturating_sub(1);
    if t == 0 || t > max {
        return Err(Error::BadT { t, max });
    }
    let axis = axis_hyperplane(pair)?;
    let mut out = Vec::new();
    for idx in (0..=pair.n).combinations(t + 1) {
        let m = meet(&pair.sub_a(&idx), &pair.sub_b(&idx))?;
        let expected = t as isize - 1;
        if m.dim() != expected || !axis.contains(&m) {
            return Err(Error::WrongMeetDimension { t, got: m.dim(), expected });
        }
        out.push(m);
    }
    Ok(out)
}

/// `⟨α_i ∩ α_j, β_i ∩ β_j⟩` for every `i < j`; each should be a hyperplane.
pub fn face_pair_joins(pair: &PerspectivePair) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for (i, j) in (0..=pair.n).tuple_combinations() {
        let ma = meet(&pair.face_a(i), &pair.face_a(j))?;
        let mb = meet(&pair.face_b(i), &pair.face_b(j))?;
        out.push(join(&[&ma, &mb])?);
    }
    Ok(out)
}

/// Whether corresponding t-spaces meet in (t-1)-spaces lying in one hyperplane,
/// for t = 1..n-1. Returns that hyperplane.
pub fn perspective_from_hyperplane(pair: &PerspectivePair) -> Result<Option<Subspace>> {
    let mut meets = Vec::new();
    for t in 1..pair.n {
        for idx in (0..=pair.n).combinations(t + 1) {
            let m = meet(&pair.sub_a(&idx), &pair.sub_b(&idx))?;
            if m.dim() != t as isize - 1 {
                return Ok(None);
            }
            meets.push(m);
        }
    }
    let parts: Vec<&dyn crate::projlin::Flat> = meets.iter().map(|m| m as &dyn crate::projlin::Flat).collect();
    if parts.is_empty() {
        return Ok(None);
    }
    let v = join(&parts)?;
    Ok(v.is_hyperplane().then_some(v))
}

/// How [`lift_to_arc`] picks the line through the vertex and the two points on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftChoice {
    /// First point off `H` in coordinate order, then the first two points of the line.
    First,
    Seeded(u64),
}

/// Rebuild an (n+3)-arc of PG(n+1, q) whose section by `h` contains the pair.
///
/// The output order is `[1, 2, A_0-point, A_1-point, ...]`, so sectioning it by
/// `h` puts `A_i` at label `(1, i+3)`, `B_i` at `(2, i+3)` and the vertex at `(1,2)`.
pub fn lift_to_arc(pair: &PerspectivePair, vertex: &ProjPoint, h: &Subspace, choice: LiftChoice) -> Result<Arc> {
    let n = pair.n;
    if h.ambient() != n + 1 {
        return Err(Error::AmbientMismatch(n + 1, h.ambient()));
    }
    if !h.is_hyperplane() {
        return Err(Error::NotAHyperplane { dim: h.dim(), ambient: h.ambient() });
    }
    if vertex.ambient() != n {
        return Err(Error::AmbientMismatch(n, vertex.ambient()));
    }
    for i in 0..=n {
        let spoke = span(&[pair.a[i].clone(), pair.b[i].clone()])?;
        if !spoke.contains_point(vertex) {
            return Err(Error::NoCommonVertex);
        }
    }
    if (0..=n).any(|k| pair.face_a(k).contains_point(vertex) || pair.face_b(k).contains_point(vertex)) {
        return Err(Error::SharedFace);
    }
    let v = h.embed(vertex)?;
    let a: Vec<ProjPoint> = pair.a.iter().map(|p| h.embed(p)).collect::<Result<_>>()?;
    let b: Vec<ProjPoint> = pair.b.iter().map(|p| h.embed(p)).collect::<Result<_>>()?;

    let off_h: Vec<ProjPoint> = all_points(h.field(), n + 1).into_iter().filter(|p| !h.contains_point(p)).collect();
    let mut rng = match choice {
        LiftChoice::First => None,
        LiftChoice::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let through = match rng.as_mut() {
        None => off_h[0].clone(),
        Some(r) => off_h.choose(r).expect("points off a hyperplane exist").clone(),
    };
    let line = span(&[v.clone(), through])?;
    let mut on_line: Vec<ProjPoint> = line.points().into_iter().filter(|p| *p != v).collect();
    if let Some(r) = rng.as_mut() {
        on_line.shuffle(r);
    }
    let (p1, p2) = (on_line[0].clone(), on_line[1].clone());

    let mut pts = vec![p1.clone(), p2.clone()];
    for i in 0..=n {
        let l1 = span(&[p1.clone(), a[i].clone()])?;
        let l2 = span(&[p2.clone(), b[i].clone()])?;
        let p = meet(&l1, &l2)?
            .as_point()
            .ok_or_else(|| Error::LiftFailed(format!("lines through point {} do not meet", i + 3)))?;
        pts.push(p);
    }
    if let Some(i) = pts.iter().position(|p| h.contains_point(p)) {
        return Err(Error::LiftFailed(format!("point {} lies on H", i + 1)));
    }
    if !is_arc(&pts)? {
        return Err(Error::LiftFailed("lifted points are not an arc".into()));
    }
    Arc::new(pts)
}

/// Intermediate objects of the lift-and-project argument.
#[derive(Clone, Debug)]
pub struct ConwayLift {
    pub a2_star: ProjPoint,
    pub b2_star: ProjPoint,
    /// Spans of the lifted simplexes, hyperplanes of PG(n+1, q).
    pub h1: Subspace,
    pub h2: Subspace,
    /// `h1 ∩ h2`, which carries the lifted edge intersections.
    pub lifted_axis: Subspace,
    /// Projection of `lifted_axis` from `w` back into `H`, in the pair's coordinates.
    pub axis: Subspace,
}

/// Lift `A_2, B_2` (index 1) off `H` through `w`, intersect the spans of the lifted
/// simplexes, and project the result back from `w` into `H`.
pub fn conway_lift(pair: &PerspectivePair, w: &ProjPoint, h: &Subspace) -> Result<ConwayLift> {
    let n = pair.n;
    if n < 2 {
        return Err(Error::TooFew { min: 3, got: n + 1 });
    }
    if h.ambient() != n + 1 || w.ambient() != n + 1 {
        return Err(Error::AmbientMismatch(n + 1, h.ambient().max(w.ambient())));
    }
    if !h.is_hyperplane() {
        return Err(Error::NotAHyperplane { dim: h.dim(), ambient: h.ambient() });
    }
    if h.contains_point(w) {
        return Err(Error::WInH);
    }
    let v = h.embed(&find_vertex(pair)?)?;
    let mut a: Vec<ProjPoint> = pair.a.iter().map(|p| h.embed(p)).collect::<Result<_>>()?;
    let mut b: Vec<ProjPoint> = pair.b.iter().map(|p| h.embed(p)).collect::<Result<_>>()?;
    if rank_of(&[w.clone(), a[1].clone(), b[1].clone()]) < 3 {
        return Err(Error::DegenerateLift);
    }
    let wa = span(&[w.clone(), a[1].clone()])?;
    let a2_star = wa
        .points()
        .into_iter()
        .find(|p| p != w && *p != a[1])
        .ok_or(Error::DegenerateLift)?;
    let b2_star = meet(&span(&[v, a2_star.clone()])?, &span(&[w.clone(), b[1].clone()])?)?
        .as_point()
        .ok_or(Error::DegenerateLift)?;
    a[1] = a2_star.clone();
    b[1] = b2_star.clone();
    let h1 = span(&a)?;
    let h2 = span(&b)?;
    if !h1.is_hyperplane() || !h2.is_hyperplane() || h1 == h2 {
        return Err(Error::LiftNotSeparated);
    }
    let lifted_axis = meet(&h1, &h2)?;
    let projected = meet(&join(&[&lifted_axis, w])?, h)?;
    let axis = h.local_subspace(&projected)?;
    Ok(ConwayLift { a2_star, b2_star, h1, h2, lifted_axis, axis })
}

/// The projected axis of [`conway_lift`]; equals [`axis_hyperplane`] of the pair.
pub fn conway_lift_axis(pair: &PerspectivePair, w: &ProjPoint, h: &Subspace) -> Result<Subspace> {
    Ok(conway_lift(pair, w, h)?.axis)
}

/// The hyperplane `x_{n+2} = 0` of PG(n+1, q); its local coordinates are the
/// first n+1 coordinates.
pub fn standard_hyperplane(field: &Field, n: usize) -> Subspace {
    let mut dual = vec![0; n + 2];
    dual[n + 1] = 1;
    hyperplane_from_dual(field, &dual).expect("nonzero dual")
}

/// A random hyperplane of PG(dim, q).
pub fn random_hyperplane<R: Rng>(field: &Field, dim: usize, rng: &mut R) -> Subspace {
    loop {
        let dual: Vec<u32> = (0..=dim).map(|_| rng.gen_range(0..field.q())).collect();
        if let Ok(h) = hyperplane_from_dual(field, &dual) {
            return h;
        }
    }
}

/// A random (n+3)-arc of PG(n+1, q) off a random hyperplane, and its section.
pub fn random_configuration<R: Rng>(
    field: &Field,
    n: usize,
    rng: &mut R,
) -> Result<(Arc, Subspace, LabeledConfiguration)> {
    if field.q() <= 2 {
        return Err(Error::FieldTooSmall(field.q()));
    }
    let h = random_hyperplane(field, n + 1, rng);
    let arc = random_arc(field, n + 1, n + 3, Some(&h), rng, 1000)?;
    let config = section_arc(&arc, &h)?;
    Ok((arc, h, config))
}

/// [`random_configuration`] driven by a ChaCha8 stream seeded with `seed`.
pub fn seeded_configuration(field: &Field, n: usize, seed: u64) -> Result<(Arc, Subspace, LabeledConfiguration)> {
    random_configuration(field, n, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// [`random_perspective_pair`] driven by a ChaCha8 stream seeded with `seed`.
pub fn seeded_perspective_pair(field: &Field, n: usize, seed: u64) -> Result<(PerspectivePair, ProjPoint, Label)> {
    random_perspective_pair(field, n, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// A random sectioned perspective pair with its vertex and vertex label.
pub fn random_perspective_pair<R: Rng>(
    field: &Field,
    n: usize,
    rng: &mut R,
) -> Result<(PerspectivePair, ProjPoint, Label)> {
    let (_, _, config) = random_configuration(field, n, rng)?;
    let syms: Vec<u8> = (1..=config.symbols()).collect();
    let chosen: Vec<u8> = syms.choose_multiple(rng, 2).copied().collect();
    let (pair, v) = extract_perspective_pair(&config, chosen[0], chosen[1])?;
    Ok((pair, v, Label::new(chosen[0], chosen[1])?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arcs::frame_off_hyperplane;

    fn gf(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    fn pt(f: &Field, c: &[u32]) -> ProjPoint {
        ProjPoint::from_codes(f, c).unwrap()
    }

    fn config(p: u32, n: usize) -> LabeledConfiguration {
        let f = gf(p);
        let h = standard_hyperplane(&f, n);
        let arc = frame_off_hyperplane(&h).unwrap();
        section_arc(&arc, &h).unwrap()
    }

    #[test]
    fn labels() {
        assert_eq!(Label::new(4, 2).unwrap(), Label::new(2, 4).unwrap());
        assert_eq!(Label::new(3, 3).unwrap_err(), Error::BadSymbols(3, 3));
        assert!(Label::new(0, 1).is_err());
        let l = Label::new(1, 2).unwrap();
        assert!(l.shares_symbol(Label::new(2, 5).unwrap()));
        assert!(!l.shares_symbol(Label::new(3, 4).unwrap()));
        assert_eq!(serde_json::to_string(&l).unwrap(), "[1,2]");
    }

    #[test]
    fn section_sizes() {
        assert_eq!(config(5, 3).len(), 15);
        assert_eq!(config(5, 4).len(), 21);
        assert_eq!(config(3, 2).len(), 10);
    }

    #[test]
    fn section_rejects_q2_and_points_on_h() {
        for (p, expected) in [(2, Error::FieldTooSmall(2)), (5, Error::PointOnHyperplane(1))] {
            let f = gf(p);
            let h = standard_hyperplane(&f, 2);
            let mut pts: Vec<_> = (0..4).map(|i| ProjPoint::unit(&f, 3, i)).collect();
            pts.push(pt(&f, &[1, 1, 1, 1]));
            let arc = Arc::new(pts).unwrap();
            assert_eq!(section_arc(&arc, &h).unwrap_err(), expected);
        }
    }

    #[test]
    fn extract_examples() {
        let c = config(5, 3);
        let (pair, v) = extract_perspective_pair(&c, 1, 2).unwrap();
        let expect_a: Vec<_> = (3..=6).map(|i| c.get(1, i).unwrap().clone()).collect();
        let expect_b: Vec<_> = (3..=6).map(|i| c.get(2, i).unwrap().clone()).collect();
        assert_eq!(pair.a(), expect_a.as_slice());
        assert_eq!(pair.b(), expect_b.as_slice());
        assert_eq!(&v, c.get(1, 2).unwrap());
        assert_eq!(find_vertex(&pair).unwrap(), v);
        assert_eq!(extract_perspective_pair(&c, 2, 2).unwrap_err(), Error::BadSymbols(2, 2));
        assert_eq!(extract_perspective_pair(&c, 1, 7).unwrap_err(), Error::BadSymbols(1, 7));
    }

    #[test]
    fn pair_invariants_enforced() {
        let f = gf(5);
        let a = vec![pt(&f, &[1, 0, 0]), pt(&f, &[0, 1, 0]), pt(&f, &[0, 0, 1])];
        let b = vec![pt(&f, &[1, 0, 0]), pt(&f, &[1, 2, 0]), pt(&f, &[1, 0, 2])];
        assert_eq!(PerspectivePair::new(a.clone(), b).unwrap_err(), Error::SharedPoint(0));
        // B_0, B_1 on the line A_0 A_1: faces opposite index 2 coincide.
        let b = vec![pt(&f, &[1, 1, 0]), pt(&f, &[1, 2, 0]), pt(&f, &[1, 1, 1])];
        assert_eq!(PerspectivePair::new(a.clone(), b).unwrap_err(), Error::SharedFace);
        let flat = vec![pt(&f, &[1, 1, 0]), pt(&f, &[1, 2, 0]), pt(&f, &[1, 3, 0])];
        assert_eq!(PerspectivePair::new(a, flat).unwrap_err(), Error::NotASimplex);
    }

    #[test]
    fn edge_intersections_match_labels() {
        for n in [3usize, 4] {
            let c = config(5, n);
            let (pair, _) = extract_perspective_pair(&c, 1, 2).unwrap();
            let e = edge_intersections(&pair).unwrap();
            assert_eq!(e.len() as u64, binomial(n as u64 + 1, 2));
            for ((i, j), p) in e {
                assert_eq!(p, *c.get(i as u8 + 3, j as u8 + 3).unwrap());
            }
        }
    }

    #[test]
    fn axis_is_span_of_y() {
        let c = config(5, 4);
        let (pair, _) = extract_perspective_pair(&c, 1, 2).unwrap();
        let axis = axis_hyperplane(&pair).unwrap();
        assert_eq!(axis.dim(), 3);
        let y: Vec<_> = (3..=7u8).tuple_combinations().map(|(i, j)| c.get(i, j).unwrap().clone()).collect();
        assert_eq!(span(&y).unwrap(), axis);
    }

    #[test]
    fn tspaces() {
        let c = config(7, 4);
        let (pair, _) = extract_perspective_pair(&c, 1, 2).unwrap();
        let axis = axis_hyperplane(&pair).unwrap();
        let t1 = tspace_intersections(&pair, 1).unwrap();
        let e = edge_intersections(&pair).unwrap();
        assert_eq!(t1, e.values().map(ProjPoint::to_subspace).collect::<Vec<_>>());
        let t2 = tspace_intersections(&pair, 2).unwrap();
        assert_eq!(t2.len(), 10);
        for line in &t2 {
            assert_eq!(line.dim(), 1);
            assert_eq!(e.values().filter(|p| line.contains_point(p)).count(), 3);
        }
        let t3 = tspace_intersections(&pair, 3).unwrap();
        assert_eq!(t3.len(), 5);
        assert!(t3.iter().all(|s| s.dim() == 2 && axis.contains(s)));
        assert_eq!(tspace_intersections(&pair, 0).unwrap_err(), Error::BadT { t: 0, max: 3 });
        assert_eq!(tspace_intersections(&pair, 4).unwrap_err(), Error::BadT { t: 4, max: 3 });
        assert!(face_pair_joins(&pair).unwrap().iter().all(Subspace::is_hyperplane));
        assert_eq!(perspective_from_hyperplane(&pair).unwrap(), Some(axis));
    }

    #[test]
    fn planar_axis_through_three_points() {
        let c = config(5, 2);
        let (pair, _) = extract_perspective_pair(&c, 1, 2).unwrap();
        let axis = axis_hyperplane(&pair).unwrap();
        assert_eq!(axis.dim(), 1);
        assert_eq!(edge_intersections(&pair).unwrap().len(), 3);
    }

    #[test]
    fn planar_non_perspective_triangles() {
        // Corresponding edges always meet in the plane, yet these are not in perspective.
        let f = gf(7);
        let a = vec![pt(&f, &[1, 0, 0]), pt(&f, &[0, 1, 0]), pt(&f, &[0, 0, 1])];
        let b = vec![pt(&f, &[1, 2, 3]), pt(&f, &[1, 5, 1]), pt(&f, &[1, 1, 4])];
        let pair = PerspectivePair::new(a, b).unwrap();
        assert_eq!(find_vertex(&pair).unwrap_err(), Error::NoCommonVertex);
        assert!(matches!(axis_hyperplane(&pair), Err(Error::NoAxis(2))));
    }

    #[test]
    fn skew_edges_reported() {
        let f = gf(5);
        let a: Vec<_> = (0..4).map(|i| ProjPoint::unit(&f, 3, i)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let pts = all_points(&f, 3);
        let mut seen = 0;
        for _ in 0..200 {
            let b: Vec<_> = pts.choose_multiple(&mut rng, 4).cloned().collect();
            if let Ok(pair) = PerspectivePair::new(a.clone(), b) {
                if let Err(e) = find_vertex(&pair) {
                    assert!(matches!(e, Error::EdgesDisjoint(..)));
                    seen += 1;
                }
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn lift_round_trip() {
        let c = config(5, 3);
        let (pair, v) = extract_perspective_pair(&c, 1, 2).unwrap();
        let h = standard_hyperplane(c.field(), 3);
        for choice in [LiftChoice::First, LiftChoice::Seeded(9)] {
            let arc = lift_to_arc(&pair, &v, &h, choice).unwrap();
            assert_eq!(arc.len(), 6);
            let back = section_arc(&arc, &h).unwrap();
            assert_eq!(back.get(1, 2).unwrap(), &v);
            for i in 0..4 {
                assert_eq!(back.get(1, i as u8 + 3).unwrap(), &pair.a()[i]);
                assert_eq!(back.get(2, i as u8 + 3).unwrap(), &pair.b()[i]);
            }
        }
    }

    #[test]
    fn lift_rejects_vertex_on_face() {
        let c = config(5, 2);
        let (pair, _) = extract_perspective_pair(&c, 1, 2).unwrap();
        let h = standard_hyperplane(c.field(), 2);
        // A vertex on a face of A that is not on the spokes.
        let bogus = pair.a()[0].clone();
        assert!(lift_to_arc(&pair, &bogus, &h, LiftChoice::First).is_err());
        let f = gf(5);
        // Triangles in perspective from V = (1,1,1) with V on the face A_0A_1 (line x3 = 0)?
        // V must be off every face; construct V on face x3=0 of A.
        let a = vec![pt(&f, &[1, 0, 0]), pt(&f, &[0, 1, 0]), pt(&f, &[0, 0, 1])];
        let v = pt(&f, &[1, 1, 0]);
        let b = vec![pt(&f, &[1, 3, 0]), pt(&f, &[3, 1, 0]), pt(&f, &[1, 1, 1])];
        match PerspectivePair::new(a, b) {
            Ok(pair) => assert_eq!(lift_to_arc(&pair, &v, &h, LiftChoice::First).unwrap_err(), Error::SharedFace),
            Err(e) => assert_eq!(e, Error::SharedFace),
        }
    }

    #[test]
    fn conway_matches_axis() {
        let f = gf(7);
        let h = standard_hyperplane(&f, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let (pair, _, _) = random_perspective_pair(&f, 2, &mut rng).unwrap();
            let w = pt(&f, &[1, 2, 3, 1]);
            let lift = conway_lift(&pair, &w, &h).unwrap();
            assert_ne!(lift.h1, lift.h2);
            assert_eq!(lift.axis, axis_hyperplane(&pair).unwrap());
        }
        let c = config(7, 2);
        let (pair, _) = extract_perspective_pair(&c, 1, 2).unwrap();
        let w_in_h = pt(&f, &[1, 0, 0, 0]);
        assert_eq!(conway_lift_axis(&pair, &w_in_h, &h).unwrap_err(), Error::WInH);
    }

    #[test]
    fn random_configurations_work() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for p in [3u32, 5, 7] {
            for n in 2..=4 {
                let (_, _, c) = random_configuration(&gf(p), n, &mut rng).unwrap();
                assert_eq!(c.len() as u64, binomial(n as u64 + 3, 2));
            }
        }
    }
}
