//! Simplexes, arcs and coordinate frames.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::projlin::{
    all_points, collineation_to_hyperplane, hyperplane_from_dual, rank_of, span, ProjPoint, Subspace,
};

/// An ordered point set of PG(n, q) in which every n+1 points form a simplex.
///
/// Index `i` holds the point labelled `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    field: Field,
    n: usize,
    points: Vec<ProjPoint>,
}

impl Arc {
    pub fn new(points: Vec<ProjPoint>) -> Result<Arc> {
        if !is_arc(&points)? {
            return Err(Error::NotAnArc);
        }
        let field = points[0].field().clone();
        let n = points[0].ambient();
        Ok(Arc { field, n, points })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Dimension of the ambient space.
    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The sub-arc on the given indices, which must leave at least n+1 points.
    pub fn select(&self, indices: &[usize]) -> Result<Arc> {
        let pts: Vec<ProjPoint> = indices.iter().map(|&i| self.points[i].clone()).collect();
        if pts.len() < self.n + 1 {
            return Err(Error::TooFew { min: self.n + 1, got: pts.len() });
        }
        Ok(Arc { field: self.field.clone(), n: self.n, points: pts })
    }
}

fn common_ambient(points: &[ProjPoint]) -> Result<usize> {
    let n = points.first().map(ProjPoint::ambient).ok_or(Error::TooFew { min: 1, got: 0 })?;
    for p in points {
        if p.ambient() != n {
            return Err(Error::AmbientMismatch(n, p.ambient()));
        }
        if p.field() != points[0].field() {
            return Err(Error::MixedFields);
        }
    }
    Ok(n)
}

/// True iff exactly n+1 points span PG(n, q).
pub fn is_simplex(points: &[ProjPoint]) -> Result<bool> {
    let n = common_ambient(points)?;
    if points.len() != n + 1 {
        return Err(Error::WrongCount { expected: n + 1, got: points.len() });
    }
    Ok(rank_of(points) == n + 1)
}

/// True iff every (n+1)-subset is a simplex.
pub fn is_arc(points: &[ProjPoint]) -> Result<bool> {
    if points.is_empty() {
        return Err(Error::TooFew { min: 1, got: 0 });
    }
    let n = common_ambient(points)?;
    if points.len() < n + 1 {
        return Err(Error::TooFew { min: n + 1, got: points.len() });
    }
    Ok(points
        .iter()
        .cloned()
        .combinations(n + 1)
        .all(|subset| rank_of(&subset) == n + 1))
}

/// A coordinate frame of n+2 points none of which lies on the hyperplane `h`.
///
/// Built from the unit points plus `(1, ..., 1, z)` avoiding `x_1 + ... + x_{n+1} = 0`,
/// then carried onto `h` by [`collineation_to_hyperplane`]. `z` is the first
/// element in field order with `z != 0` and `n + z != 0`.
pub fn frame_off_hyperplane(h: &Subspace) -> Result<Arc> {
    let field = h.field();
    let n = h.ambient();
    if field.q() <= 2 {
        return Err(Error::FieldTooSmall(field.q()));
    }
    if !h.is_hyperplane() {
        return Err(Error::NotAHyperplane { dim: h.dim(), ambient: n });
    }
    let n_elem = field.from_int(n as i64);
    let z = (1..field.q())
        .find(|&z| field.add(n_elem, z) != 0)
        .expect("q > 2 leaves a valid z");
    let mut pts: Vec<ProjPoint> = (0..=n).map(|i| ProjPoint::unit(field, n, i)).collect();
    let mut last = vec![1u32; n + 1];
    last[n] = z;
    pts.push(ProjPoint::from_codes(field, &last)?);

    let k = hyperplane_from_dual(field, &vec![1; n + 1])?;
    let c = collineation_to_hyperplane(&k, h)?;
    let moved = pts.iter().map(|p| c.apply_point(p)).collect::<Result<Vec<_>>>()?;
    Arc::new(moved)
}

/// A uniformly shuffled greedy arc of `size` points in PG(n, q), none on `avoid`.
///
/// Restarts on dead ends; fails after `max_attempts` restarts.
pub fn random_arc<R: Rng>(
    field: &Field,
    n: usize,
    size: usize,
    avoid: Option<&Subspace>,
    rng: &mut R,
    max_attempts: usize,
) -> Result<Arc> {
    if let Some(h) = avoid {
        if h.ambient() != n {
            return Err(Error::AmbientMismatch(n, h.ambient()));
        }
    }
    let candidates: Vec<ProjPoint> = all_points(field, n)
        .into_iter()
        .filter(|p| avoid.is_none_or(|h| !h.contains_point(p)))
        .collect();
    for _ in 0..max_attempts {
        let mut pool = candidates.clone();
        pool.shuffle(rng);
        let mut chosen: Vec<ProjPoint> = Vec::with_capacity(size);
        for p in pool {
            if chosen.len() == size {
                break;
            }
            if extends_arc(&chosen, &p, n) {
                chosen.push(p);
            }
        }
        if chosen.len() == size {
            return Arc::new(chosen);
        }
    }
    Err(Error::ConstructionFailed(max_attempts))
}

/// Whether `p` keeps `prefix` an arc-in-progress in PG(n, q).
pub(crate) fn extends_arc(prefix: &[ProjPoint], p: &ProjPoint, n: usize) -> bool {
    let k = prefix.len().min(n);
    prefix.iter().cloned().combinations(k).all(|mut subset| {
        subset.push(p.clone());
        rank_of(&subset) == k + 1
    })
}

/// Dimension of the span of the given arc points.
pub fn span_dim(points: &[ProjPoint]) -> Result<isize> {
    Ok(span(points)?.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    fn pt(f: &Field, c: &[u32]) -> ProjPoint {
        ProjPoint::from_codes(f, c).unwrap()
    }

    #[test]
    fn simplex_examples() {
        let f = gf(5);
        let units: Vec<_> = (0..3).map(|i| ProjPoint::unit(&f, 2, i)).collect();
        assert!(is_simplex(&units).unwrap());
        let collinear = [pt(&f, &[1, 0, 0]), pt(&f, &[0, 1, 0]), pt(&f, &[1, 1, 0])];
        assert!(!is_simplex(&collinear).unwrap());
        let repeated = [units[0].clone(), units[0].clone(), units[1].clone()];
        assert!(!is_simplex(&repeated).unwrap());
        assert!(matches!(is_simplex(&units[..2]), Err(Error::WrongCount { expected: 3, got: 2 })));
        let mixed = [units[0].clone(), pt(&f, &[1, 0]), units[1].clone()];
        assert!(matches!(is_simplex(&mixed), Err(Error::AmbientMismatch(..))));
    }

    #[test]
    fn arc_examples() {
        let f = gf(5);
        let mut frame: Vec<_> = (0..3).map(|i| ProjPoint::unit(&f, 2, i)).collect();
        frame.push(pt(&f, &[1, 1, 1]));
        assert!(is_arc(&frame).unwrap());

        // Conic {(1,t,t^2)} plus (0,0,1).
        let mut conic: Vec<_> = (0..5).map(|t| pt(&f, &[1, t, (t * t) % 5])).collect();
        conic.push(pt(&f, &[0, 0, 1]));
        assert!(is_arc(&conic).unwrap());

        let mut bad = frame.clone();
        bad.push(pt(&f, &[1, 1, 0]));
        assert!(!is_arc(&bad).unwrap());
        assert!(matches!(is_arc(&frame[..2]), Err(Error::TooFew { .. })));
    }

    #[test]
    fn frame_off_k() {
        let f = gf(5);
        let k = hyperplane_from_dual(&f, &[1, 1, 1]).unwrap();
        let frame = frame_off_hyperplane(&k).unwrap();
        let expect: Vec<ProjPoint> = vec![
            pt(&f, &[1, 0, 0]),
            pt(&f, &[0, 1, 0]),
            pt(&f, &[0, 0, 1]),
            pt(&f, &[1, 1, 1]),
        ];
        assert_eq!(frame.points(), expect.as_slice());
    }

    #[test]
    fn frame_off_x1() {
        let f = gf(5);
        let h = hyperplane_from_dual(&f, &[1, 0, 0]).unwrap();
        let frame = frame_off_hyperplane(&h).unwrap();
        assert_eq!(frame.len(), 4);
        for p in frame.points() {
            assert_ne!(p.codes()[0], 0);
            assert!(!h.contains_point(p));
        }
        assert!(is_arc(frame.points()).unwrap());
    }

    #[test]
    fn frame_needs_q_above_two() {
        let f = gf(2);
        let h = hyperplane_from_dual(&f, &[1, 1, 1]).unwrap();
        assert_eq!(frame_off_hyperplane(&h).unwrap_err(), Error::FieldTooSmall(2));
    }

    #[test]
    fn frame_when_n_plus_one_plus_z_rule_would_fail() {
        // n = 2, q = 3: (1,1,1) lies on x1+x2+x3 = 0, so z must be 2 here.
        let f = gf(3);
        let k = hyperplane_from_dual(&f, &[1, 1, 1]).unwrap();
        let frame = frame_off_hyperplane(&k).unwrap();
        assert_eq!(frame.points()[3].codes(), &[1, 1, 2]);
        assert!(frame.points().iter().all(|p| !k.contains_point(p)));
    }

    #[test]
    fn frames_avoid_every_hyperplane() {
        for q in [3u32, 4, 5] {
            let f = Field::gf(if q == 4 { 2 } else { q }, if q == 4 { 2 } else { 1 }).unwrap();
            for n in 1..=3 {
                for h in all_points(&f, n) {
                    let hyp = hyperplane_from_dual(&f, h.codes()).unwrap();
                    let frame = frame_off_hyperplane(&hyp).unwrap();
                    assert_eq!(frame.len(), n + 2);
                    assert!(frame.points().iter().all(|p| !hyp.contains_point(p)));
                }
            }
        }
    }

    #[test]
    fn sub_arcs_and_spans() {
        let f = gf(7);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let arc = random_arc(&f, 3, 6, None, &mut rng, 50).unwrap();
        for t in 1..=4 {
            for idx in (0..6).combinations(t) {
                let pts: Vec<_> = idx.iter().map(|&i| arc.points()[i].clone()).collect();
                assert_eq!(span_dim(&pts).unwrap(), t as isize - 1);
            }
        }
        for idx in (0..6).combinations(4) {
            assert!(is_arc(arc.select(&idx).unwrap().points()).unwrap());
        }
    }
}
