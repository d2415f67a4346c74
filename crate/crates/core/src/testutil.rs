//! Shorthand constructors shared by the unit tests of several modules.

use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::geometry::{rat, Point, Polytope};
use crate::nerve::ConvexFamily;

pub fn vid(s: &str) -> VertexId {
    VertexId::new(s).unwrap()
}

pub fn fc(labels: &[&str]) -> Face {
    labels.iter().map(|s| vid(s)).collect()
}

pub fn cx(faces: &[&[&str]]) -> SimplicialComplex {
    SimplicialComplex::from_faces(faces.iter().map(|f| fc(f))).unwrap()
}

pub fn pt(xs: &[i64]) -> Point {
    Point::new(xs.iter().map(|&x| rat(x, 1)).collect()).unwrap()
}

pub fn ptr(xs: &[(i64, i64)]) -> Point {
    Point::new(xs.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
}

pub fn poly(points: &[&[i64]]) -> Polytope {
    Polytope::from_points(points.iter().map(|xs| pt(xs)).collect()).unwrap()
}

pub fn interval(lo: i64, hi: i64) -> Polytope {
    poly(&[&[lo], &[hi]])
}

pub fn family(members: Vec<(&str, Polytope)>) -> ConvexFamily {
    let d = members[0].1.ambient_dim();
    ConvexFamily::new(d, members.into_iter().map(|(l, p)| (vid(l), p)).collect()).unwrap()
}
