//! Points, subspaces and collineations of PG(n, q).
//!
//! Dimensions are projective: a point has dimension 0, the whole space `n`,
//! and the empty subspace `-1`. Subspaces are stored as row spans in reduced
//! row-echelon form, which is canonical, so `==` and `Hash` are exact.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::{self, Row};

/// A point of PG(n, q) with first nonzero coordinate equal to 1.
#[derive(Clone)]
pub struct ProjPoint {
    field: Field,
    coords: Row,
}

impl ProjPoint {
    /// Normalize raw codes; fails on the zero vector or out-of-range codes.
    pub fn from_codes(field: &Field, raw: &[u32]) -> Result<ProjPoint> {
        if let Some(&bad) = raw.iter().find(|&&c| c >= field.q()) {
            return Err(Error::BadElement(bad));
        }
        let lead = raw.iter().copied().find(|&c| c != 0).ok_or(Error::ZeroVector)?;
        let inv = field.inv(lead);
        let coords = raw.iter().map(|&c| field.mul(c, inv)).collect();
        Ok(ProjPoint { field: field.clone(), coords })
    }

    /// Caller guarantees `coords` is nonzero.
    pub(crate) fn from_row(field: &Field, raw: Row) -> ProjPoint {
        let lead = raw.iter().copied().find(|&c| c != 0).expect("nonzero vector");
        let coords = if lead == 1 {
            raw
        } else {
            let inv = field.inv(lead);
            raw.iter().map(|&c| field.mul(c, inv)).collect()
        };
        ProjPoint { field: field.clone(), coords }
    }

    /// Unit point `e_i` (0-based) in PG(n, q).
    pub fn unit(field: &Field, n: usize, i: usize) -> ProjPoint {
        let mut coords = vec![0; n + 1];
        coords[i] = 1;
        ProjPoint { field: field.clone(), coords }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn codes(&self) -> &[u32] {
        &self.coords
    }

    pub fn coords(&self) -> Vec<FieldElement> {
        self.coords.iter().map(|&c| self.field.element(c).expect("valid code")).collect()
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace { field: self.field.clone(), ambient: self.ambient(), rows: vec![self.coords.clone()] }
    }

    /// Dot product of the coordinates with a dual vector.
    pub fn pairing(&self, dual: &[u32]) -> u32 {
        let f = &self.field;
        self.coords.iter().zip(dual).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
    }
}

/// Scale `raw` so its first nonzero entry is 1.
pub fn normalize(raw: &[FieldElement]) -> Result<ProjPoint> {
    let first = raw.first().ok_or(Error::ZeroVector)?;
    let field = first.field();
    if raw.iter().any(|e| e.field() != field) {
        return Err(Error::MixedFields);
    }
    let codes: Vec<u32> = raw.iter().map(FieldElement::code).collect();
    ProjPoint::from_codes(field, &codes)
}

impl PartialEq for ProjPoint {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.field == other.field
    }
}

impl Eq for ProjPoint {}

impl Hash for ProjPoint {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A projective subspace given by an RREF basis.
#[derive(Clone)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Row>,
}

impl Subspace {
    pub(crate) fn from_rows(field: &Field, ambient: usize, mut rows: Vec<Row>) -> Subspace {
        linalg::rref(field, &mut rows);
        Subspace { field: field.clone(), ambient, rows }
    }

    pub fn empty(field: &Field, ambient: usize) -> Subspace {
        Subspace { field: field.clone(), ambient, rows: Vec::new() }
    }

    pub fn whole(field: &Field, ambient: usize) -> Subspace {
        let rows = (0..=ambient)
            .map(|i| (0..=ambient).map(|j| u32::from(i == j)).collect())
            .collect();
        Subspace { field: field.clone(), ambient, rows }
    }

    /// Span of arbitrary (not necessarily reduced) rows of codes.
    pub fn from_codes(field: &Field, ambient: usize, rows: &[Vec<u32>]) -> Result<Subspace> {
        for r in rows {
            if r.len() != ambient + 1 {
                return Err(Error::AmbientMismatch(ambient, r.len().saturating_sub(1)));
            }
            if let Some(&bad) = r.iter().find(|&&c| c >= field.q()) {
                return Err(Error::BadElement(bad));
            }
        }
        Ok(Subspace::from_rows(field, ambient, rows.to_vec()))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Projective dimension; `-1` for the empty subspace.
    pub fn dim(&self) -> isize {
        self.rows.len() as isize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_hyperplane(&self) -> bool {
        self.dim() == self.ambient as isize - 1
    }

    /// The canonical RREF basis.
    pub fn basis(&self) -> &[Row] {
        &self.rows
    }

    /// Linear equations cutting out this subspace (basis of the annihilator).
    pub fn equations(&self) -> Vec<Row> {
        linalg::null_space(&self.field, &self.rows, self.ambient + 1)
    }

    /// The normalized dual vector of a hyperplane.
    pub fn hyperplane_dual(&self) -> Result<Row> {
        if !self.is_hyperplane() {
            return Err(Error::NotAHyperplane { dim: self.dim(), ambient: self.ambient });
        }
        let eq = self.equations().pop().expect("hyperplane has one equation");
        Ok(ProjPoint::from_row(&self.field, eq).coords)
    }

    pub fn contains_point(&self, p: &ProjPoint) -> bool {
        if p.ambient() != self.ambient || self.rows.is_empty() {
            return false;
        }
        let pivots = linalg::pivots_of(&self.rows);
        let mut v = p.coords.clone();
        linalg::reduce_against(&self.field, &self.rows, &pivots, &mut v);
        v.iter().all(|&x| x == 0)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        if other.ambient != self.ambient {
            return false;
        }
        let pivots = linalg::pivots_of(&self.rows);
        other.rows.iter().all(|r| {
            let mut v = r.clone();
            linalg::reduce_against(&self.field, &self.rows, &pivots, &mut v);
            v.iter().all(|&x| x == 0)
        })
    }

    /// The unique point of a 0-dimensional subspace.
    pub fn as_point(&self) -> Option<ProjPoint> {
        (self.rows.len() == 1).then(|| ProjPoint { field: self.field.clone(), coords: self.rows[0].clone() })
    }

    /// Every point, in lexicographic order of the coefficient vectors.
    pub fn points(&self) -> Vec<ProjPoint> {
        let f = &self.field;
        normalized_vectors(f.q(), self.rows.len())
            .map(|coef| {
                let mut v = vec![0u32; self.ambient + 1];
                for (&c, row) in coef.iter().zip(&self.rows) {
                    if c != 0 {
                        for (x, &y) in v.iter_mut().zip(row) {
                            *x = f.add(*x, f.mul(c, y));
                        }
                    }
                }
                ProjPoint { field: f.clone(), coords: v }
            })
            .collect()
    }

    /// Coordinates of a contained point relative to the basis rows; these are
    /// the point's coordinates once this subspace is identified with PG(d, q).
    pub fn local_coords(&self, p: &ProjPoint) -> Result<ProjPoint> {
        if !self.contains_point(p) {
            return Err(Error::DegenerateSection("point not in subspace".into()));
        }
        let pivots = linalg::pivots_of(&self.rows);
        let local: Row = pivots.iter().map(|&c| p.coords[c]).collect();
        Ok(ProjPoint::from_row(&self.field, local))
    }

    /// Inverse of [`Subspace::local_coords`]: the point with the given basis coordinates.
    pub fn embed(&self, local: &ProjPoint) -> Result<ProjPoint> {
        if local.ambient() as isize != self.dim() {
            return Err(Error::AmbientMismatch(self.dim().max(0) as usize, local.ambient()));
        }
        let f = &self.field;
        let mut v = vec![0u32; self.ambient + 1];
        for (&c, row) in local.coords.iter().zip(&self.rows) {
            for (x, &y) in v.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(c, y));
            }
        }
        Ok(ProjPoint::from_row(f, v))
    }

    /// Re-express a subspace of this one in local coordinates.
    pub fn local_subspace(&self, s: &Subspace) -> Result<Subspace> {
        if !self.contains(s) {
            return Err(Error::DegenerateSection("subspace not contained".into()));
        }
        let pivots = linalg::pivots_of(&self.rows);
        let rows = s.rows.iter().map(|r| pivots.iter().map(|&c| r[c]).collect()).collect();
        Ok(Subspace::from_rows(&self.field, self.dim() as usize, rows))
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.rows == other.rows && self.field == other.field
    }
}

impl Eq for Subspace {}

impl Hash for Subspace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.rows.hash(state);
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in PG({}), {:?})", self.dim(), self.ambient, self.rows)
    }
}

/// Anything that spans a subspace: points and subspaces.
pub trait Flat {
    fn field(&self) -> &Field;
    fn ambient(&self) -> usize;
    fn span_rows(&self) -> Vec<Row>;
}

impl Flat for ProjPoint {
    fn field(&self) -> &Field {
        &self.field
    }
    fn ambient(&self) -> usize {
        self.coords.len() - 1
    }
    fn span_rows(&self) -> Vec<Row> {
        vec![self.coords.clone()]
    }
}

impl Flat for Subspace {
    fn field(&self) -> &Field {
        &self.field
    }
    fn ambient(&self) -> usize {
        self.ambient
    }
    fn span_rows(&self) -> Vec<Row> {
        self.rows.clone()
    }
}

/// Smallest subspace containing every part.
pub fn join(parts: &[&dyn Flat]) -> Result<Subspace> {
    let first = parts.first().ok_or(Error::EmptyJoin)?;
    let (field, ambient) = (first.field(), first.ambient());
    let mut rows = Vec::new();
    for part in parts {
        if part.ambient() != ambient {
            return Err(Error::AmbientMismatch(ambient, part.ambient()));
        }
        if part.field() != field {
            return Err(Error::MixedFields);
        }
        rows.extend(part.span_rows());
    }
    Ok(Subspace::from_rows(field, ambient, rows))
}

/// Span of a list of points.
pub fn span(points: &[ProjPoint]) -> Result<Subspace> {
    let parts: Vec<&dyn Flat> = points.iter().map(|p| p as &dyn Flat).collect();
    join(&parts)
}

/// Largest subspace contained in both, computed through the dual spaces.
pub fn meet(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    if a.ambient != b.ambient {
        return Err(Error::AmbientMismatch(a.ambient, b.ambient));
    }
    if a.field != b.field {
        return Err(Error::MixedFields);
    }
    let mut eqs = a.equations();
    eqs.extend(b.equations());
    let rows = linalg::null_space(&a.field, &eqs, a.ambient + 1);
    Ok(Subspace::from_rows(&a.field, a.ambient, rows))
}

/// The hyperplane `{x : coeffs . x = 0}`.
pub fn hyperplane_from_dual(field: &Field, coeffs: &[u32]) -> Result<Subspace> {
    if coeffs.is_empty() || coeffs.iter().all(|&c| c == 0) {
        return Err(Error::ZeroVector);
    }
    if let Some(&bad) = coeffs.iter().find(|&&c| c >= field.q()) {
        return Err(Error::BadElement(bad));
    }
    let rows = linalg::null_space(field, &[coeffs.to_vec()], coeffs.len());
    Ok(Subspace::from_rows(field, coeffs.len() - 1, rows))
}

/// Rank of the coordinate matrix of a point list.
pub fn rank_of(points: &[ProjPoint]) -> usize {
    match points.first() {
        None => 0,
        Some(p) => linalg::rank(&p.field, &points.iter().map(|x| x.coords.clone()).collect::<Vec<_>>()),
    }
}

/// All points of PG(n, q) in lexicographic coordinate order.
pub fn all_points(field: &Field, n: usize) -> Vec<ProjPoint> {
    let mut pts: Vec<ProjPoint> = normalized_vectors(field.q(), n + 1)
        .map(|coords| ProjPoint { field: field.clone(), coords })
        .collect();
    pts.sort();
    pts
}

/// Number of points of PG(n, q).
pub fn point_count(q: u64, n: usize) -> u64 {
    (0..=n as u32).map(|i| q.pow(i)).sum()
}

/// Nonzero vectors of length `len` over codes `0..q` whose first nonzero entry is 1,
/// ordered by leading position (last first) then lexicographically.
fn normalized_vectors(q: u32, len: usize) -> impl Iterator<Item = Row> {
    (0..len).rev().flat_map(move |lead| {
        let tail = len - lead - 1;
        let count = (q as u64).pow(tail as u32);
        (0..count).map(move |mut x| {
            let mut v = vec![0u32; len];
            v[lead] = 1;
            for j in (lead + 1..len).rev() {
                v[j] = (x % q as u64) as u32;
                x /= q as u64;
            }
            v
        })
    })
}

/// An invertible linear map of PG(n, q), acting on column vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct Collineation {
    field: Field,
    n: usize,
    matrix: Vec<Row>,
}

impl Collineation {
    pub fn new(field: &Field, matrix: Vec<Vec<u32>>) -> Result<Collineation> {
        let size = matrix.len();
        if size == 0 || matrix.iter().any(|r| r.len() != size) {
            return Err(Error::Format("collineation matrix must be square".into()));
        }
        if linalg::rank(field, &matrix) != size {
            return Err(Error::Singular);
        }
        Ok(Collineation::canonical(field, matrix))
    }

    fn canonical(field: &Field, mut matrix: Vec<Row>) -> Collineation {
        let lead = matrix.iter().flatten().copied().find(|&c| c != 0).expect("invertible");
        if lead != 1 {
            let inv = field.inv(lead);
            for x in matrix.iter_mut().flatten() {
                *x = field.mul(*x, inv);
            }
        }
        Collineation { field: field.clone(), n: matrix.len() - 1, matrix }
    }

    pub fn identity(field: &Field, n: usize) -> Collineation {
        Collineation { field: field.clone(), n, matrix: Subspace::whole(field, n).rows }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &[Row] {
        &self.matrix
    }

    pub fn inverse(&self) -> Collineation {
        let inv = linalg::invert(&self.field, &self.matrix).expect("collineations are invertible");
        Collineation::canonical(&self.field, inv)
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &Collineation) -> Result<Collineation> {
        if self.n != first.n {
            return Err(Error::AmbientMismatch(self.n, first.n));
        }
        Ok(Collineation::canonical(&self.field, linalg::mat_mul(&self.field, &self.matrix, &first.matrix)))
    }

    pub fn apply_point(&self, p: &ProjPoint) -> Result<ProjPoint> {
        if p.ambient() != self.n {
            return Err(Error::AmbientMismatch(self.n, p.ambient()));
        }
        Ok(ProjPoint::from_row(&self.field, linalg::mat_vec(&self.field, &self.matrix, &p.coords)))
    }

    pub fn apply_subspace(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient != self.n {
            return Err(Error::AmbientMismatch(self.n, s.ambient));
        }
        let rows = s.rows.iter().map(|r| linalg::mat_vec(&self.field, &self.matrix, r)).collect();
        Ok(Subspace::from_rows(&self.field, self.n, rows))
    }
}

impl fmt::Debug for Collineation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Collineation({:?})", self.matrix)
    }
}

/// A collineation whose point action maps hyperplane `source` onto `target`.
///
/// With dual vectors `u` (source) and `w` (target) the matrix `M` must satisfy
/// `w^T M ~ u^T`. Let `j` be the leading index of `w`. If `u_j != 0` the answer is
/// the identity with row `j` replaced so that `w^T M = u^T`; otherwise first swap
/// coordinate `j` with the leading index of `u`.
pub fn collineation_to_hyperplane(source: &Subspace, target: &Subspace) -> Result<Collineation> {
    if source.ambient != target.ambient {
        return Err(Error::AmbientMismatch(source.ambient, target.ambient));
    }
    let f = &source.field;
    let u = source.hyperplane_dual()?;
    let w = target.hyperplane_dual()?;
    let size = u.len();
    let j = w.iter().position(|&c| c != 0).expect("normalized");

    let mut perm: Vec<usize> = (0..size).collect();
    if u[j] == 0 {
        let lead_u = u.iter().position(|&c| c != 0).expect("normalized");
        perm.swap(j, lead_u);
    }
    // T x permutes coordinates: (T x)_i = x_{perm[i]}; (T u) for symmetric T.
    let tu: Row = (0..size).map(|i| u[perm[i]]).collect();

    let mut e = Subspace::whole(f, size - 1).rows;
    for c in 0..size {
        e[j][c] = if c == j { tu[j] } else { f.sub(tu[c], w[c]) };
    }
    let t: Vec<Row> = (0..size).map(|i| (0..size).map(|c| u32::from(perm[i] == c)).collect()).collect();
    let m = linalg::mat_mul(f, &e, &t);
    Collineation::new(f, m)
}

/// Apply a collineation to a point or subspace.
pub fn apply_collineation_point(c: &Collineation, p: &ProjPoint) -> Result<ProjPoint> {
    c.apply_point(p)
}

pub fn apply_collineation_subspace(c: &Collineation, s: &Subspace) -> Result<Subspace> {
    c.apply_subspace(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    fn pt(f: &Field, c: &[u32]) -> ProjPoint {
        ProjPoint::from_codes(f, c).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let f = gf(5);
        let e = |c| f.element(c).unwrap();
        assert_eq!(normalize(&[e(0), e(2), e(4)]).unwrap().codes(), &[0, 1, 2]);
        assert_eq!(normalize(&[e(3), e(1)]).unwrap().codes(), &[1, 2]);
        assert_eq!(normalize(&[e(0), e(0), e(0)]).unwrap_err(), Error::ZeroVector);
    }

    #[test]
    fn join_examples() {
        let f = gf(5);
        let a = pt(&f, &[1, 0, 0, 0]);
        let b = pt(&f, &[0, 1, 0, 0]);
        let c = pt(&f, &[0, 0, 1, 0]);
        let d = pt(&f, &[0, 0, 0, 1]);
        let l1 = span(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(l1.dim(), 1);
        let l2 = span(&[c, d]).unwrap();
        assert_eq!(join(&[&l1, &l2]).unwrap().dim(), 3);
        assert_eq!(meet(&l1, &l2).unwrap().dim(), -1);
        assert_eq!(join(&[&a, &l1]).unwrap(), l1);
        let other = pt(&f, &[0, 0, 1]);
        assert!(matches!(join(&[&a, &other]), Err(Error::AmbientMismatch(3, 2))));
    }

    #[test]
    fn meet_examples() {
        let f = gf(5);
        let p1 = hyperplane_from_dual(&f, &[1, 0, 0, 0]).unwrap();
        let p2 = hyperplane_from_dual(&f, &[0, 1, 0, 0]).unwrap();
        assert_eq!(meet(&p1, &p2).unwrap().dim(), 1);
        assert_eq!(meet(&p1, &p1).unwrap(), p1);
    }

    #[test]
    fn hyperplane_examples() {
        let f = gf(5);
        let k = hyperplane_from_dual(&f, &[1, 1, 1]).unwrap();
        let pts = k.points();
        assert_eq!(pts.len(), 6);
        for p in &pts {
            assert_eq!(p.pairing(&[1, 1, 1]), 0);
        }
        let x1 = hyperplane_from_dual(&f, &[1, 0, 0]).unwrap();
        assert!(x1.points().iter().all(|p| p.codes()[0] == 0));
        assert_eq!(hyperplane_from_dual(&f, &[0, 0, 0]).unwrap_err(), Error::ZeroVector);
    }

    #[test]
    fn collineation_examples() {
        let f = gf(5);
        let k = hyperplane_from_dual(&f, &[1, 1, 1]).unwrap();
        assert_eq!(collineation_to_hyperplane(&k, &k).unwrap(), Collineation::identity(&f, 2));

        let x1 = hyperplane_from_dual(&f, &[1, 0, 0]).unwrap();
        let x2 = hyperplane_from_dual(&f, &[0, 1, 0]).unwrap();
        let t = collineation_to_hyperplane(&x1, &x2).unwrap();
        assert_eq!(t.matrix(), &[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);

        // Exhaustive image check of all q+1 points of the source line.
        let c = collineation_to_hyperplane(&k, &x1).unwrap();
        let src = k.points();
        assert_eq!(src.len(), 6);
        for p in &src {
            assert!(x1.contains_point(&c.apply_point(p).unwrap()));
        }
        assert_eq!(c.apply_subspace(&k).unwrap(), x1);

        let nl = span(&[pt(&f, &[1, 0, 0]), pt(&f, &[0, 1, 0])]).unwrap();
        assert!(matches!(collineation_to_hyperplane(&nl.clone(), &pt(&f, &[1, 1, 1]).to_subspace()), Err(Error::NotAHyperplane { .. })));
    }

    #[test]
    fn apply_examples() {
        let f = gf(7);
        let c = Collineation::new(&f, vec![vec![1, 2, 0], vec![3, 1, 4], vec![0, 5, 6]]).unwrap();
        let p = pt(&f, &[2, 3, 1]);
        assert_eq!(Collineation::identity(&f, 2).apply_point(&p).unwrap(), p);
        assert_eq!(c.inverse().apply_point(&c.apply_point(&p).unwrap()).unwrap(), p);
        let l = span(&[p.clone(), pt(&f, &[0, 1, 1])]).unwrap();
        assert_eq!(c.apply_subspace(&l).unwrap().dim(), 1);
        assert_eq!(Collineation::new(&f, vec![vec![1, 2], vec![2, 4]]).unwrap_err(), Error::Singular);
    }

    #[test]
    fn points_counts() {
        let f = gf(3);
        assert_eq!(all_points(&f, 2).len(), 13);
        assert_eq!(all_points(&f, 3).len() as u64, point_count(3, 3));
        let line = span(&[pt(&f, &[1, 0, 0]), pt(&f, &[0, 1, 1])]).unwrap();
        assert_eq!(line.points().len(), 4);
    }

    #[test]
    fn local_coordinates_round_trip() {
        let f = gf(5);
        let h = hyperplane_from_dual(&f, &[1, 2, 3, 4]).unwrap();
        for p in h.points() {
            let local = h.local_coords(&p).unwrap();
            assert_eq!(local.ambient(), 2);
            assert_eq!(h.embed(&local).unwrap(), p);
        }
    }
}
