//! Structure of a sectioned configuration: which labelled points are collinear,
//! how many subspaces the symbol subsets span, and how the configuration
//! decomposes around each of its points.
//!
//! For any vertex `(a,b)` the C(n+3, 2) points split into the two simplexes
//! `{(a,i)}`, `{(b,i)}`, the vertex itself, and the C(n+1, 2) edge intersections
//! `{(i,j) : i, j ∉ {a,b}}`. The edge-intersection part is again a table on
//! fewer symbols and decomposes the same way ([`replicate`]).

use std::collections::{BTreeMap, HashSet};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::desargues::{
    binomial, edge_intersections, extract_perspective_pair, find_vertex, Label, LabeledConfiguration,
};
use crate::error::{Error, Result};
use crate::projlin::{meet, rank_of, span, ProjPoint, Subspace};

/// The points of a configuration whose labels use only `symbols`.
///
/// Borrows the parent table, so points keep their labels across recursion levels.
#[derive(Clone, Debug)]
pub struct SubTable<'a> {
    parent: &'a LabeledConfiguration,
    symbols: Vec<u8>,
}

impl<'a> SubTable<'a> {
    pub fn full(parent: &'a LabeledConfiguration) -> SubTable<'a> {
        SubTable { parent, symbols: (1..=parent.symbols()).collect() }
    }

    pub fn restrict(parent: &'a LabeledConfiguration, symbols: &[u8]) -> Result<SubTable<'a>> {
        let mut symbols = symbols.to_vec();
        symbols.sort_unstable();
        symbols.dedup();
        if let Some(&s) = symbols.iter().find(|&&s| s == 0 || s > parent.symbols()) {
            return Err(Error::BadSymbols(s, s));
        }
        Ok(SubTable { parent, symbols })
    }

    /// The edge-intersection table `Y_n`: symbols 3..n+3.
    pub fn y(parent: &'a LabeledConfiguration) -> SubTable<'a> {
        SubTable { parent, symbols: (3..=parent.symbols()).collect() }
    }

    pub fn parent(&self) -> &'a LabeledConfiguration {
        self.parent
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> + '_ {
        self.symbols
            .iter()
            .tuple_combinations()
            .map(|(&i, &j)| Label::new(i, j).expect("distinct symbols"))
    }

    pub fn len(&self) -> usize {
        binomial(self.symbols.len() as u64, 2) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.len() < 2
    }

    pub fn point(&self, label: Label) -> &'a ProjPoint {
        self.parent.point(label)
    }

    pub fn points(&self) -> Vec<ProjPoint> {
        self.labels().map(|l| self.point(l).clone()).collect()
    }

    /// Span of every point in the table; empty when the table is.
    pub fn span(&self) -> Subspace {
        let pts = self.points();
        if pts.is_empty() {
            return Subspace::empty(self.parent.field(), self.parent.ambient());
        }
        span(&pts).expect("points share an ambient space")
    }
}

/// Whether two labelled points are collinear with a third table point exactly when
/// their labels share a symbol, and every such line carries exactly three table points.
pub fn verify_symbol_incidence(config: &LabeledConfiguration) -> bool {
    symbol_incidence_holds(&SubTable::full(config))
}

pub fn symbol_incidence_holds(table: &SubTable<'_>) -> bool {
    incidence_report(table).holds()
}

/// Lines of the table carrying three or more of its points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceReport {
    /// Symbol triples `{i,j,k}` whose points `(i,j),(i,k),(j,k)` are collinear.
    pub triangle_lines: usize,
    pub triangles_expected: usize,
    /// Lines through three or more table points other than the bare triangles
    /// (a coincidence such as a vertex lying on its own axis), as sorted label lists.
    pub extra_lines: Vec<Vec<Label>>,
}

impl IncidenceReport {
    pub fn holds(&self) -> bool {
        self.triangle_lines == self.triangles_expected && self.extra_lines.is_empty()
    }
}

pub fn incidence_report(table: &SubTable<'_>) -> IncidenceReport {
    let lab = |i: u8, j: u8| Label::new(i, j).expect("distinct symbols");
    let entries: Vec<(Label, &ProjPoint)> = table.labels().map(|l| (l, table.point(l))).collect();
    let mut lines: BTreeMap<Vec<Label>, ()> = BTreeMap::new();
    let mut seen: HashSet<Subspace> = HashSet::new();
    for ((_, p1), (_, p2)) in entries.iter().tuple_combinations() {
        let line = span(&[(*p1).clone(), (*p2).clone()]).expect("same ambient");
        if !seen.insert(line.clone()) {
            continue;
        }
        let on: Vec<Label> = entries.iter().filter(|(_, p)| line.contains_point(p)).map(|(l, _)| *l).collect();
        if on.len() >= 3 {
            lines.insert(on, ());
        }
    }
    let is_triangle = |ls: &[Label]| {
        let mut syms: Vec<u8> = ls.iter().flat_map(|l| [l.i(), l.j()]).collect();
        syms.sort_unstable();
        syms.dedup();
        ls.len() == 3 && syms.len() == 3
    };
    let triangle_lines = table
        .symbols()
        .iter()
        .tuple_combinations()
        .filter(|&(&i, &j, &k)| {
            let pts = [table.point(lab(i, j)).clone(), table.point(lab(i, k)).clone(), table.point(lab(j, k)).clone()];
            rank_of(&pts) == 2
        })
        .count();
    IncidenceReport {
        triangle_lines,
        triangles_expected: binomial(table.symbols().len() as u64, 3) as usize,
        extra_lines: lines.into_keys().filter(|ls| !is_triangle(ls)).collect(),
    }
}

/// Distinct subspaces spanned by k-subsets of symbols, k = 2..=n+1, keyed by dimension.
///
/// For a sectioned configuration every k-subset spans a (k-2)-space and distinct
/// subsets span distinct spaces, so the count at dimension k-2 is C(n+3, k).
pub fn substructure_counts(config: &LabeledConfiguration) -> BTreeMap<isize, usize> {
    let s = config.symbols();
    let mut by_dim: BTreeMap<isize, HashSet<Subspace>> = BTreeMap::new();
    for k in 2..=config.ambient() + 1 {
        for subset in (1..=s).combinations(k) {
            let pts: Vec<ProjPoint> = subset
                .iter()
                .tuple_combinations()
                .map(|(&i, &j)| config.get(i, j).expect("label in range").clone())
                .collect();
            let sp = span(&pts).expect("nonempty");
            by_dim.entry(sp.dim()).or_default().insert(sp);
        }
    }
    by_dim.into_iter().map(|(d, set)| (d, set.len())).collect()
}

/// `C(n+3,2) = 2(n+1) + 1 + C(n+1,2)`: simplex points, vertex, edge intersections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PartitionIdentity {
    pub total: u64,
    pub simplex_points: u64,
    pub vertex: u64,
    pub edge_points: u64,
}

impl PartitionIdentity {
    /// The split of a table over `s` symbols around one of its points.
    pub fn for_symbols(s: u64) -> PartitionIdentity {
        PartitionIdentity {
            total: binomial(s, 2),
            simplex_points: 2 * s.saturating_sub(2),
            vertex: u64::from(s >= 2),
            edge_points: binomial(s.saturating_sub(2), 2),
        }
    }

    /// The full configuration in PG(n, q).
    pub fn configuration(n: u64) -> PartitionIdentity {
        Self::for_symbols(n + 3)
    }

    /// The edge-intersection table `Y_n`.
    pub fn edge_table(n: u64) -> PartitionIdentity {
        Self::for_symbols(n + 1)
    }

    pub fn holds(&self) -> bool {
        self.total == self.simplex_points + self.vertex + self.edge_points
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexOutcome {
    pub label: Label,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub points: usize,
    pub passed: usize,
    pub vertices: Vec<VertexOutcome>,
    pub identity: PartitionIdentity,
}

impl SweepReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.vertices.len() && self.identity.holds()
    }
}

fn check_vertex(config: &LabeledConfiguration, label: Label) -> Result<()> {
    let (a, b) = (label.i(), label.j());
    let (pair, v) = extract_perspective_pair(config, a, b)?;
    if find_vertex(&pair)? != v {
        return Err(Error::NoCommonVertex);
    }
    let others: Vec<u8> = (1..=config.symbols()).filter(|&s| s != a && s != b).collect();
    let edges = edge_intersections(&pair)?;
    for (&(i, j), p) in &edges {
        if p != config.get(others[i], others[j])? {
            return Err(Error::CoincidentIntersections);
        }
    }
    // Geometric partition: simplex points, vertex and edge points are disjoint and exhaust the table.
    let mut seen: HashSet<&ProjPoint> = HashSet::new();
    let parts = pair.a().iter().chain(pair.b()).chain(std::iter::once(&v)).chain(edges.values());
    let mut count = 0;
    for p in parts {
        seen.insert(p);
        count += 1;
    }
    let all: HashSet<&ProjPoint> = config.table().values().collect();
    if count != config.len() || seen != all {
        return Err(Error::BadTable("vertex partition does not cover the configuration".into()));
    }
    Ok(())
}

/// Treat every labelled point as a vertex of perspectivity and check the decomposition.
pub fn vertex_sweep(config: &LabeledConfiguration) -> SweepReport {
    let labels: Vec<Label> = config.table().keys().copied().collect();
    let vertices: Vec<VertexOutcome> = labels
        .par_iter()
        .map(|&label| match check_vertex(config, label) {
            Ok(()) => VertexOutcome { label, passed: true, error: None },
            Err(e) => VertexOutcome { label, passed: false, error: Some(e.name().to_string()) },
        })
        .collect();
    SweepReport {
        n: config.ambient(),
        points: config.len(),
        passed: vertices.iter().filter(|v| v.passed).count(),
        vertices,
        identity: PartitionIdentity::configuration(config.ambient() as u64),
    }
}

/// Apply a permutation of the symbols; `perm[s-1]` is the image of symbol `s`.
pub fn relabel(config: &LabeledConfiguration, perm: &[u8]) -> Result<LabeledConfiguration> {
    let s = config.symbols() as usize;
    let mut sorted = perm.to_vec();
    sorted.sort_unstable();
    if perm.len() != s || sorted != (1..=s as u8).collect::<Vec<_>>() {
        return Err(Error::BadTable(format!("{perm:?} is not a permutation of 1..={s}")));
    }
    let table = config
        .table()
        .iter()
        .map(|(l, p)| Ok((Label::new(perm[l.i() as usize - 1], perm[l.j() as usize - 1])?, p.clone())))
        .collect::<Result<BTreeMap<_, _>>>()?;
    LabeledConfiguration::new(config.field(), config.ambient(), table)
}

/// Two point sets each spanning a hyperplane of the table's span, in perspective from `vertex`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiSimplexPair {
    /// Dimension of the space the pair lives in (the span of its table).
    pub ambient_dim: isize,
    pub c: Vec<ProjPoint>,
    pub d: Vec<ProjPoint>,
    pub vertex: ProjPoint,
}

impl SemiSimplexPair {
    pub fn new(ambient_dim: isize, c: Vec<ProjPoint>, d: Vec<ProjPoint>, vertex: ProjPoint) -> Result<Self> {
        let want = ambient_dim - 1;
        for side in [&c, &d] {
            if side.is_empty() || rank_of(side) as isize - 1 != want || side.len() as isize - 1 != want {
                return Err(Error::NotASemiSimplex);
            }
        }
        for (ci, di) in c.iter().zip(&d) {
            if !span(&[ci.clone(), di.clone()])?.contains_point(&vertex) {
                return Err(Error::NoCommonVertex);
            }
        }
        Ok(SemiSimplexPair { ambient_dim, c, d, vertex })
    }
}

/// One step of self-replication.
#[derive(Debug, Clone)]
pub struct Replication<'a> {
    pub vertex: Label,
    pub pair: SemiSimplexPair,
    /// Intersections of corresponding edges of the pair.
    pub residual: SubTable<'a>,
}

/// Split a sub-table around `(a,b)`: `C = {(a,i)}`, `D = {(b,i)}`, vertex `(a,b)`,
/// and the residual table on the remaining symbols, whose points are the
/// intersections of corresponding edges of `C` and `D`.
pub fn replicate<'a>(table: &SubTable<'a>, a: u8, b: u8) -> Result<Replication<'a>> {
    let s = table.symbols().len();
    if s < 3 {
        return Err(Error::TooFewSymbols(s));
    }
    if a == b || !table.symbols().contains(&a) || !table.symbols().contains(&b) {
        return Err(Error::BadSymbols(a, b));
    }
    let others: Vec<u8> = table.symbols().iter().copied().filter(|&x| x != a && x != b).collect();
    let parent = table.parent();
    let side = |x: u8| -> Result<Vec<ProjPoint>> { others.iter().map(|&i| parent.get(x, i).cloned()).collect() };
    let vertex = Label::new(a, b)?;
    let pair = SemiSimplexPair::new(table.span().dim(), side(a)?, side(b)?, parent.point(vertex).clone())?;
    for ((x, &i), (y, &j)) in others.iter().enumerate().tuple_combinations() {
        let ec = span(&[pair.c[x].clone(), pair.c[y].clone()])?;
        let ed = span(&[pair.d[x].clone(), pair.d[y].clone()])?;
        if meet(&ec, &ed)?.as_point().as_ref() != Some(parent.get(i, j)?) {
            return Err(Error::EdgesDisjoint(x, y));
        }
    }
    let residual = SubTable::restrict(parent, &others)?;
    Ok(Replication { vertex, pair, residual })
}

/// One level of the recursive decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub symbols: Vec<u8>,
    pub span_dim: isize,
    pub vertex: Label,
    pub identity: PartitionIdentity,
}

/// Decompose `X_n` around `(1,2)`, then repeatedly replicate the residual around its
/// two smallest symbols while it has at least 3 symbols.
pub fn replication_trace(config: &LabeledConfiguration) -> Result<Vec<TraceStep>> {
    let (pair, _) = extract_perspective_pair(config, 1, 2)?;
    find_vertex(&pair)?;
    let full = SubTable::full(config);
    let mut steps = vec![TraceStep {
        symbols: full.symbols().to_vec(),
        span_dim: full.span().dim(),
        vertex: Label::new(1, 2)?,
        identity: PartitionIdentity::for_symbols(full.symbols().len() as u64),
    }];
    let mut table = SubTable::y(config);
    while table.symbols().len() >= 3 {
        let (a, b) = (table.symbols()[0], table.symbols()[1]);
        let step = replicate(&table, a, b)?;
        steps.push(TraceStep {
            symbols: table.symbols().to_vec(),
            span_dim: step.pair.ambient_dim,
            vertex: step.vertex,
            identity: PartitionIdentity::for_symbols(table.symbols().len() as u64),
        });
        table = step.residual;
    }
    Ok(steps)
}

/// Result of the three-semi-simplex check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriplePerspective {
    /// `(1,2)`, `(2,3)`, `(1,3)` lie on one line.
    pub vertices_collinear: bool,
    /// Each pair `(A,B)`, `(B,C)`, `(A,C)` is in perspective from its vertex.
    pub pairs_in_perspective: bool,
    /// Every pairwise edge-intersection set lies in `z`.
    pub edges_in_z: bool,
    /// `z` equals both `⟨(4,j)⟩` and the meet of the spans of any two semi-simplexes.
    pub z_consistent: bool,
    pub z: Subspace,
}

impl TriplePerspective {
    pub fn holds(&self) -> bool {
        self.vertices_collinear && self.pairs_in_perspective && self.edges_in_z && self.z_consistent
    }
}

/// Semi-simplexes `A = {(1,i)}`, `B = {(2,i)}`, `C = {(3,i)}` for `i = 4..n+3`, pairwise
/// in perspective from `(1,2)`, `(2,3)`, `(1,3)`, and their common axis
/// `Z = ⟨(i,j) : 4 <= i < j <= n+3⟩`.
pub fn triple_perspective(config: &LabeledConfiguration) -> Result<TriplePerspective> {
    let n = config.ambient();
    if n < 2 {
        return Err(Error::TooFew { min: 2, got: n });
    }
    let s = config.symbols();
    let rest: Vec<u8> = (4..=s).collect();
    let side = |x: u8| -> Result<Vec<ProjPoint>> { rest.iter().map(|&i| config.get(x, i).cloned()).collect() };
    let sides = [side(1)?, side(2)?, side(3)?];
    let v12 = config.get(1, 2)?.clone();
    let v23 = config.get(2, 3)?.clone();
    let v13 = config.get(1, 3)?.clone();
    let vertices_collinear = rank_of(&[v12.clone(), v23.clone(), v13.clone()]) == 2;

    let z_pts: Vec<ProjPoint> =
        rest.iter().tuple_combinations().map(|(&i, &j)| config.get(i, j).cloned()).collect::<Result<_>>()?;
    let z = span(&z_pts)?;
    let z_from_4: Vec<ProjPoint> = rest[1..].iter().map(|&j| config.get(4, j).cloned()).collect::<Result<_>>()?;
    let mut z_consistent = span(&z_from_4)? == z;

    let mut pairs_in_perspective = true;
    let mut edges_in_z = true;
    for ((x, y), v) in [((0, 1), &v12), ((1, 2), &v23), ((0, 2), &v13)] {
        let (p, q) = (&sides[x], &sides[y]);
        for (pi, qi) in p.iter().zip(q) {
            pairs_in_perspective &= span(&[pi.clone(), qi.clone()])?.contains_point(v);
        }
        for (i, j) in (0..p.len()).tuple_combinations() {
            let m = meet(&span(&[p[i].clone(), p[j].clone()])?, &span(&[q[i].clone(), q[j].clone()])?)?;
            edges_in_z &= m.as_point().is_some_and(|pt| z.contains_point(&pt));
        }
        z_consistent &= meet(&span(p)?, &span(q)?)? == z;
    }
    Ok(TriplePerspective { vertices_collinear, pairs_in_perspective, edges_in_z, z_consistent, z })
}

/// The common axis `Z`; fails with `NoAxis` if any part of the check fails.
pub fn triple_perspective_axis(config: &LabeledConfiguration) -> Result<Subspace> {
    let t = triple_perspective(config)?;
    if t.holds() {
        Ok(t.z)
    } else {
        Err(Error::NoAxis(t.z.dim()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arcs::frame_off_hyperplane;
    use crate::desargues::{section_arc, standard_hyperplane};
    use crate::field::Field;

    fn config(p: u32, n: usize) -> LabeledConfiguration {
        let f = Field::prime(p).unwrap();
        let h = standard_hyperplane(&f, n);
        section_arc(&frame_off_hyperplane(&h).unwrap(), &h).unwrap()
    }

    #[test]
    fn symbol_incidence_examples() {
        let c = config(5, 3);
        let line = span(&[c.get(1, 2).unwrap().clone(), c.get(1, 3).unwrap().clone()]).unwrap();
        assert!(line.contains_point(c.get(2, 3).unwrap()));
        let other = span(&[c.get(1, 2).unwrap().clone(), c.get(3, 4).unwrap().clone()]).unwrap();
        let on = c.table().values().filter(|p| other.contains_point(p)).count();
        assert_eq!(on, 2);
        assert!(verify_symbol_incidence(&c));
        let r = incidence_report(&SubTable::full(&c));
        assert_eq!((r.triangle_lines, r.triangles_expected), (20, 20));
    }

    /// Over GF(3) the ten points fill most of a 13-point plane; coincidences are forced.
    #[test]
    fn small_plane_has_extra_lines() {
        let c = config(3, 2);
        let r = incidence_report(&SubTable::full(&c));
        assert_eq!(r.triangle_lines, 10);
        assert!(!r.extra_lines.is_empty());
        assert!(!verify_symbol_incidence(&c));
        // The ten triangle lines are still there, so the counts and sweep are unaffected.
        assert!(vertex_sweep(&c).all_passed());
    }

    #[test]
    fn counts() {
        let expect3: BTreeMap<isize, usize> = [(0, 15), (1, 20), (2, 15)].into();
        assert_eq!(substructure_counts(&config(5, 3)), expect3);
        let expect4: BTreeMap<isize, usize> = [(0, 21), (1, 35), (2, 35), (3, 21)].into();
        assert_eq!(substructure_counts(&config(5, 4)), expect4);
        let expect2: BTreeMap<isize, usize> = [(0, 10), (1, 10)].into();
        assert_eq!(substructure_counts(&config(5, 2)), expect2);
    }

    #[test]
    fn identities() {
        let x3 = PartitionIdentity::configuration(3);
        assert_eq!((x3.total, x3.simplex_points, x3.vertex, x3.edge_points), (15, 8, 1, 6));
        let y4 = PartitionIdentity::edge_table(4);
        assert_eq!((y4.total, y4.simplex_points, y4.vertex, y4.edge_points), (10, 6, 1, 3));
        let y3 = PartitionIdentity::edge_table(3);
        assert_eq!((y3.total, y3.simplex_points, y3.vertex, y3.edge_points), (6, 4, 1, 1));
        for n in 2..=12 {
            assert!(PartitionIdentity::configuration(n).holds());
            assert!(PartitionIdentity::edge_table(n).holds());
        }
    }

    #[test]
    fn sweep_n4() {
        let r = vertex_sweep(&config(5, 4));
        assert_eq!((r.points, r.passed), (21, 21));
        assert!(r.all_passed());
    }

    #[test]
    fn sweep_survives_relabeling() {
        let c = config(5, 3);
        let perm = [4, 6, 1, 3, 5, 2];
        let r = relabel(&c, &perm).unwrap();
        assert!(verify_symbol_incidence(&r));
        assert_eq!(substructure_counts(&r), substructure_counts(&c));
        assert!(vertex_sweep(&r).all_passed());
        assert!(relabel(&c, &[1, 1, 2, 3, 4, 5]).is_err());
    }

    #[test]
    fn replicate_y4() {
        let c = config(5, 4);
        let y = SubTable::y(&c);
        assert_eq!(y.span().dim(), 3);
        let step = replicate(&y, 3, 4).unwrap();
        let expect_c: Vec<_> = [5, 6, 7].iter().map(|&i| c.get(3, i).unwrap().clone()).collect();
        let expect_d: Vec<_> = [5, 6, 7].iter().map(|&i| c.get(4, i).unwrap().clone()).collect();
        assert_eq!(step.pair.c, expect_c);
        assert_eq!(step.pair.d, expect_d);
        assert_eq!(step.residual.symbols(), &[5, 6, 7]);
        assert_eq!(step.residual.len(), 3);
        assert_eq!(step.residual.span().dim(), 1);
        // Triangles in different planes.
        assert_ne!(span(&step.pair.c).unwrap(), span(&step.pair.d).unwrap());
    }

    #[test]
    fn replicate_errors() {
        let c = config(5, 4);
        let t = SubTable::restrict(&c, &[5, 6]).unwrap();
        assert_eq!(replicate(&t, 5, 6).unwrap_err(), Error::TooFewSymbols(2));
        let y = SubTable::y(&c);
        assert_eq!(replicate(&y, 1, 3).unwrap_err(), Error::BadSymbols(1, 3));
        assert_eq!(replicate(&SubTable::full(&c), 1, 2).unwrap_err(), Error::NotASemiSimplex);
    }

    #[test]
    fn traces() {
        let t2 = replication_trace(&config(5, 2)).unwrap();
        assert_eq!(t2.len(), 2);
        assert_eq!(t2[1].symbols, vec![3, 4, 5]);
        let t4 = replication_trace(&config(5, 4)).unwrap();
        let sizes: Vec<usize> = t4.iter().map(|s| s.symbols.len()).collect();
        assert_eq!(sizes, vec![7, 5, 3]);
        let dims: Vec<isize> = t4.iter().map(|s| s.span_dim).collect();
        assert_eq!(dims, vec![4, 3, 1]);
        assert!(t4.iter().all(|s| s.identity.holds()));
    }

    /// Line/plane structure of the ten axis points at n = 4.
    #[test]
    fn axis_structure_n4() {
        let c = config(7, 4);
        let y: Vec<u8> = (3..=7).collect();
        let join_of = |syms: &[u8]| {
            let pts: Vec<_> = syms.iter().tuple_combinations().map(|(&i, &j)| c.get(i, j).unwrap().clone()).collect();
            span(&pts).unwrap()
        };
        let lines: Vec<Subspace> = y.iter().copied().combinations(3).map(|s| join_of(&s)).collect();
        let planes: Vec<Subspace> = y.iter().copied().combinations(4).map(|s| join_of(&s)).collect();
        assert!(lines.iter().all(|l| l.dim() == 1));
        assert!(planes.iter().all(|p| p.dim() == 2));
        for l in &lines {
            assert_eq!(planes.iter().filter(|p| p.contains(l)).count(), 2);
        }
        for (i, j) in y.iter().tuple_combinations() {
            let p = c.get(*i, *j).unwrap();
            assert_eq!(lines.iter().filter(|l| l.contains_point(p)).count(), 3);
            assert_eq!(planes.iter().filter(|pl| pl.contains_point(p)).count(), 3);
        }
    }

    #[test]
    fn triple() {
        for n in [2usize, 3, 4] {
            let c = config(5, n);
            let t = triple_perspective(&c).unwrap();
            assert!(t.holds(), "n = {n}");
            assert_eq!(t.z.dim(), n as isize - 2);
            assert_eq!(triple_perspective_axis(&c).unwrap(), t.z);
        }
    }
}
