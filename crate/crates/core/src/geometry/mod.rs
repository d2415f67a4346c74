//! Exact rational convex geometry over V-polytopes.
//!
//! Every set is the convex hull of finitely many rational points, and every
//! question (intersection, membership, separation, slicing) reduces to exact
//! LP feasibility or Gaussian elimination. Nothing here ever compares with a
//! tolerance.

pub mod linalg;
pub mod lp;
pub mod rational;

pub use rational::{format_rational, parse_rational, rat, Rational};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use linalg::{dot, in_span, is_zero_vec, rank, sub};
use lp::{feasible_nonneg, LpOutcome};

/// A point with exact rational coordinates; the coordinate count is the
/// ambient dimension, at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroAmbientDimension);
        }
        Ok(Point { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }
}

/// A compact convex set given as the hull of its generators. Redundant
/// (non-extreme) generators are allowed; the represented set is the hull.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    ambient_dim: usize,
    generators: Vec<Point>,
}

impl Polytope {
    pub fn new(ambient_dim: usize, generators: Vec<Point>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::ZeroAmbientDimension);
        }
        if generators.is_empty() {
            return Err(Error::NoGenerators);
        }
        for g in &generators {
            if g.dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: g.dim(),
                });
            }
        }
        Ok(Polytope {
            ambient_dim,
            generators,
        })
    }

    /// Infers the ambient dimension from the first generator.
    pub fn from_points(generators: Vec<Point>) -> Result<Self> {
        let dim = generators.first().ok_or(Error::NoGenerators)?.dim();
        Self::new(dim, generators)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[Point] {
        &self.generators
    }
}

/// The set `{x : normal . x = offset}` with a nonzero rational normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    normal: Vec<Rational>,
    offset: Rational,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Result<Self> {
        if normal.is_empty() {
            return Err(Error::ZeroAmbientDimension);
        }
        if is_zero_vec(&normal) {
            return Err(Error::ZeroNormal);
        }
        Ok(Hyperplane { normal, offset })
    }

    pub fn ambient_dim(&self) -> usize {
        self.normal.len()
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// Signed evaluation `normal . p - offset`; zero exactly on the plane.
    pub fn eval(&self, p: &Point) -> Rational {
        dot(&self.normal, p.coords()) - &self.offset
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }
}

/// An affine parametrization `t -> origin + sum t_i * direction_i` of a
/// hyperplane, used to express slices in one fewer coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chart {
    origin: Point,
    directions: Vec<Vec<Rational>>,
}

impl Chart {
    pub fn new(origin: Point, directions: Vec<Vec<Rational>>) -> Result<Self> {
        let d = origin.dim();
        for dir in &directions {
            if dir.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: dir.len(),
                });
            }
        }
        Ok(Chart { origin, directions })
    }

    /// Deterministic chart for `h`: drop the first coordinate whose normal
    /// entry is nonzero. With pivot `i`, the origin is `(offset/n_i) e_i` and
    /// the directions are `e_j - (n_j/n_i) e_i` for the other coordinates.
    pub fn standard(h: &Hyperplane) -> Result<Chart> {
        let d = h.ambient_dim();
        if d < 2 {
            return Err(Error::DegenerateChart(
                "a hyperplane in ambient dimension 1 has no chart coordinates",
            ));
        }
        let pivot = h
            .normal()
            .iter()
            .position(|c| !c.is_zero())
            .expect("hyperplane normals are nonzero");
        let n_p = &h.normal()[pivot];
        let mut origin = vec![Rational::zero(); d];
        origin[pivot] = h.offset() / n_p;
        let mut directions = Vec::with_capacity(d - 1);
        for j in (0..d).filter(|&j| j != pivot) {
            let mut dir = vec![Rational::zero(); d];
            dir[j] = Rational::one();
            dir[pivot] = -(&h.normal()[j] / n_p);
            directions.push(dir);
        }
        Ok(Chart {
            origin: Point::new(origin).expect("d >= 2"),
            directions,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.origin.dim()
    }

    /// Number of chart coordinates.
    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    /// Checks that this chart exactly parametrizes `h`.
    pub fn validate_for(&self, h: &Hyperplane) -> Result<()> {
        let d = h.ambient_dim();
        if self.ambient_dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: self.ambient_dim(),
            });
        }
        if d < 2 {
            return Err(Error::DegenerateChart(
                "a hyperplane in ambient dimension 1 has no chart coordinates",
            ));
        }
        if self.directions.len() != d - 1 {
            return Err(Error::DegenerateChart(
                "direction count must be ambient dimension minus 1",
            ));
        }
        if !h.contains(&self.origin) {
            return Err(Error::DegenerateChart("origin is not on the hyperplane"));
        }
        if self
            .directions
            .iter()
            .any(|dir| !dot(h.normal(), dir).is_zero())
        {
            return Err(Error::DegenerateChart(
                "direction is not parallel to the hyperplane",
            ));
        }
        if rank(&self.directions) != d - 1 {
            return Err(Error::DegenerateChart("directions are linearly dependent"));
        }
        Ok(())
    }

    /// Chart coordinates of an ambient point, or `None` when the point is
    /// outside the chart's affine image.
    pub fn to_chart(&self, p: &Point) -> Option<Vec<Rational>> {
        let rhs = sub(p.coords(), self.origin.coords());
        let d = self.ambient_dim();
        let cols = self.directions.len();
        let matrix: Vec<Vec<Rational>> = (0..d)
            .map(|r| (0..cols).map(|c| self.directions[c][r].clone()).collect())
            .collect();
        let t = linalg::solve(&matrix, &rhs)?;
        // A rank-deficient chart can make `solve` return a pseudo-solution;
        // accept only exact preimages.
        if self.to_ambient(&t).coords() == p.coords() {
            Some(t)
        } else {
            None
        }
    }

    /// The ambient point at chart coordinates `t`.
    pub fn to_ambient(&self, t: &[Rational]) -> Point {
        debug_assert_eq!(t.len(), self.directions.len());
        let mut coords = self.origin.coords().to_vec();
        for (ti, dir) in t.iter().zip(&self.directions) {
            for (c, dc) in coords.iter_mut().zip(dir) {
                *c += ti * dc;
            }
        }
        Point::new(coords).expect("origin has positive dimension")
    }
}

/// Dimension of the affine hull of the generators: the rank of the (v - v0)
/// difference matrix for a fixed generator v0.
pub fn affine_dimension(p: &Polytope) -> usize {
    let gens = p.generators();
    let v0 = gens[0].coords();
    let diffs: Vec<Vec<Rational>> = gens[1..].iter().map(|v| sub(v.coords(), v0)).collect();
    rank(&diffs)
}

/// Feasibility system for a common point of all hulls: per-set convex
/// weights, one convexity row per set, and coordinate rows forcing every
/// set's combination to agree with the first set's.
fn intersection_lp(sets: &[&Polytope]) -> LpOutcome {
    let d = sets[0].ambient_dim();
    let s = sets.len();
    let sizes: Vec<usize> = sets.iter().map(|p| p.generators().len()).collect();
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &sz| {
            let o = *acc;
            *acc += sz;
            Some(o)
        })
        .collect();
    let n: usize = sizes.iter().sum();
    let m = s + (s - 1) * d;

    let mut a = vec![vec![Rational::zero(); n]; m];
    let mut b = vec![Rational::zero(); m];
    for i in 0..s {
        for g in 0..sizes[i] {
            a[i][offsets[i] + g] = Rational::one();
        }
        b[i] = Rational::one();
    }
    for i in 1..s {
        for r in 0..d {
            let row = s + (i - 1) * d + r;
            for (g, p) in sets[0].generators().iter().enumerate() {
                a[row][offsets[0] + g] = p.coords()[r].clone();
            }
            for (g, p) in sets[i].generators().iter().enumerate() {
                a[row][offsets[i] + g] = -p.coords()[r].clone();
            }
        }
    }
    feasible_nonneg(&a, &b)
}

fn check_same_ambient(sets: &[&Polytope]) -> Result<usize> {
    let d = sets.first().ok_or(Error::EmptyFamily)?.ambient_dim();
    for s in sets {
        if s.ambient_dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: s.ambient_dim(),
            });
        }
    }
    Ok(d)
}

/// A point in the intersection of all hulls, or `None` when the intersection
/// is empty. Exact in both directions.
pub fn feasible_common_point(sets: &[&Polytope]) -> Result<Option<Point>> {
    let d = check_same_ambient(sets)?;
    match intersection_lp(sets) {
        LpOutcome::Feasible(x) => {
            let first = sets[0].generators();
            let weights = &x[..first.len()];
            let mut coords = vec![Rational::zero(); d];
            for (w, g) in weights.iter().zip(first) {
                for (c, gc) in coords.iter_mut().zip(g.coords()) {
                    *c += w * gc;
                }
            }
            Ok(Some(Point::new(coords).expect("ambient dimension >= 1")))
        }
        LpOutcome::Infeasible(_) => Ok(None),
    }
}

/// Exact hull membership test.
pub fn contains_point(p: &Polytope, x: &Point) -> Result<bool> {
    if x.dim() != p.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: p.ambient_dim(),
            got: x.dim(),
        });
    }
    let singleton = Polytope::new(x.dim(), vec![x.clone()]).expect("point has positive dimension");
    Ok(feasible_common_point(&[p, &singleton])?.is_some())
}

/// A hyperplane strictly separating two disjoint polytopes, extracted from
/// the Farkas certificate of the infeasible intersection system. Generators
/// of `a` land strictly below the offset, generators of `b` strictly above.
pub fn separating_hyperplane(a: &Polytope, b: &Polytope) -> Result<Hyperplane> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_dim(),
            got: b.ambient_dim(),
        });
    }
    let y = match intersection_lp(&[a, b]) {
        LpOutcome::Feasible(_) => return Err(Error::SetsIntersect),
        LpOutcome::Infeasible(y) => y,
    };
    // Multipliers split as (alpha, beta, c) over the two convexity rows and
    // the coordinate rows: c.u <= -alpha on a, c.w >= beta on b, and
    // alpha + beta > 0 places (beta - alpha)/2 strictly between the sets.
    let alpha = &y[0];
    let beta = &y[1];
    let normal: Vec<Rational> = y[2..].to_vec();
    let offset = (beta - alpha) / rat(2, 1);
    let h = Hyperplane::new(normal, offset).expect("zero normal contradicts alpha + beta > 0");
    for u in a.generators() {
        assert!(
            h.eval(u) < Rational::zero(),
            "separation post-check failed on the first set"
        );
    }
    for w in b.generators() {
        assert!(
            h.eval(w) > Rational::zero(),
            "separation post-check failed on the second set"
        );
    }
    Ok(h)
}

/// The intersection `hull(P) ∩ h` in chart coordinates, or `None` when it is
/// empty. Generators on the plane survive as is; each generator pair
/// strictly straddling the plane contributes its segment's crossing point.
pub fn slice(p: &Polytope, h: &Hyperplane, chart: &Chart) -> Result<Option<Polytope>> {
    let d = p.ambient_dim();
    if h.ambient_dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: h.ambient_dim(),
        });
    }
    chart.validate_for(h)?;

    let evals: Vec<Rational> = p.generators().iter().map(|g| h.eval(g)).collect();
    let mut on_plane: Vec<Point> = Vec::new();
    for (g, e) in p.generators().iter().zip(&evals) {
        if e.is_zero() {
            on_plane.push(g.clone());
        }
    }
    for (i, u) in p.generators().iter().enumerate() {
        if evals[i] <= Rational::zero() {
            continue;
        }
        for (j, w) in p.generators().iter().enumerate() {
            if evals[j] >= Rational::zero() {
                continue;
            }
            // e(t) = e_u + t (e_w - e_u) vanishes at t in (0, 1).
            let t = &evals[i] / (&evals[i] - &evals[j]);
            let coords: Vec<Rational> = u
                .coords()
                .iter()
                .zip(w.coords())
                .map(|(uc, wc)| uc + &t * (wc - uc))
                .collect();
            on_plane.push(Point::new(coords).expect("ambient dimension >= 1"));
        }
    }
    if on_plane.is_empty() {
        return Ok(None);
    }
    let in_chart: Vec<Point> = on_plane
        .iter()
        .map(|pt| {
            let t = chart
                .to_chart(pt)
                .expect("points on the hyperplane are in the chart image");
            Point::new(t).expect("chart dimension >= 1")
        })
        .collect();
    Ok(Some(Polytope::new(d - 1, in_chart)?))
}

/// The product `hull(P) x [lo, hi]` one dimension up.
pub fn prism(p: &Polytope, lo: &Rational, hi: &Rational) -> Result<Polytope> {
    if lo >= hi {
        return Err(Error::EmptyPrismInterval);
    }
    let mut gens = Vec::with_capacity(2 * p.generators().len());
    for level in [lo, hi] {
        for g in p.generators() {
            let mut coords = g.coords().to_vec();
            coords.push(level.clone());
            gens.push(Point::new(coords).expect("one more coordinate"));
        }
    }
    Polytope::new(p.ambient_dim() + 1, gens)
}

/// Thickens a non-full-dimensional polytope by `eps` along the first
/// standard basis vector outside its affine hull, raising the affine
/// dimension by exactly 1.
pub fn extrude(p: &Polytope, eps: &Rational) -> Result<Polytope> {
    if *eps <= Rational::zero() {
        return Err(Error::InvalidParameter(
            "extrude requires eps > 0".to_owned(),
        ));
    }
    let d = p.ambient_dim();
    let gens = p.generators();
    let v0 = gens[0].coords();
    let diffs: Vec<Vec<Rational>> = gens[1..].iter().map(|v| sub(v.coords(), v0)).collect();
    if rank(&diffs) == d {
        return Err(Error::AlreadyFullDimensional);
    }
    let axis = (0..d)
        .find(|&i| {
            let mut e = vec![Rational::zero(); d];
            e[i] = Rational::one();
            !in_span(&diffs, &e)
        })
        .expect("a deficient span misses some basis vector");
    let mut out = gens.to_vec();
    for g in gens {
        let mut coords = g.coords().to_vec();
        coords[axis] += eps;
        out.push(Point::new(coords).expect("same dimension"));
    }
    Polytope::new(d, out)
}

/// The same polytope with one zero coordinate appended; affine dimension is
/// unchanged.
pub fn embed(p: &Polytope) -> Polytope {
    let gens = p
        .generators()
        .iter()
        .map(|g| {
            let mut coords = g.coords().to_vec();
            coords.push(Rational::zero());
            Point::new(coords).expect("one more coordinate")
        })
        .collect();
    Polytope::new(p.ambient_dim() + 1, gens).expect("valid by construction")
}
