//! Nerves of convex families, certificate verification, and the
//! bounded-intersection reconstruction harness.
//!
//! The nerve of a family of convex sets has one vertex per set and a face for
//! every subfamily with a common point. In R^d a face never needs more than
//! d + 1 witnesses: if all subfamilies of size d + 1 intersect, so does the
//! whole subfamily. That fact turns the exponential face enumeration into
//! LP tests on small subfamilies plus a combinatorial fill.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::geometry::{affine_dimension, feasible_common_point, Point, Polytope};

/// A labeled family of convex polytopes in a shared ambient dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexFamily {
    ambient_dim: usize,
    members: Vec<(VertexId, Polytope)>,
}

impl ConvexFamily {
    pub fn new(ambient_dim: usize, members: Vec<(VertexId, Polytope)>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::ZeroAmbientDimension);
        }
        if members.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let mut seen = BTreeSet::new();
        for (label, set) in &members {
            if !seen.insert(label.clone()) {
                return Err(Error::DuplicateMember(label.as_str().to_owned()));
            }
            if set.ambient_dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: set.ambient_dim(),
                });
            }
        }
        Ok(ConvexFamily {
            ambient_dim,
            members,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn members(&self) -> &[(VertexId, Polytope)] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn get(&self, label: &VertexId) -> Option<&Polytope> {
        self.members
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, p)| p)
    }

    pub fn labels(&self) -> impl Iterator<Item = &VertexId> {
        self.members.iter().map(|(l, _)| l)
    }
}

fn subfamily_intersects(f: &ConvexFamily, indices: &[usize]) -> bool {
    let sets: Vec<&Polytope> = indices.iter().map(|&i| &f.members()[i].1).collect();
    feasible_common_point(&sets)
        .expect("family members share an ambient dimension")
        .is_some()
}

/// The k-skeleton of the nerve. Sets of size up to min(k+1, d+1) are tested
/// with exact LP feasibility; beyond d + 1 vertices no new information
/// exists, so larger faces come from the combinatorial fill. Subfamilies
/// containing a known-empty subfamily are skipped outright.
pub fn nerve_skeleton(f: &ConvexFamily, k: usize) -> Result<SimplicialComplex> {
    if k < 1 {
        return Err(Error::InvalidParameter(
            "nerve skeleton requires k >= 1".to_owned(),
        ));
    }
    let d = f.ambient_dim();
    let n = f.len();
    let cap = (k + 1).min(d + 1);

    // Nonempty sets intersect themselves, so all singletons are faces.
    let mut level: BTreeSet<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    let mut intersecting: Vec<Vec<usize>> = level.iter().cloned().collect();
    for _size in 2..=cap {
        let mut next: BTreeSet<Vec<usize>> = BTreeSet::new();
        for base in &level {
            let last = *base.last().expect("levels hold nonempty subfamilies");
            for v in last + 1..n {
                let mut cand = base.clone();
                cand.push(v);
                let all_subs_intersect = (0..cand.len()).all(|drop| {
                    let mut sub = cand.clone();
                    sub.remove(drop);
                    level.contains(&sub)
                });
                if all_subs_intersect && subfamily_intersects(f, &cand) {
                    next.insert(cand);
                }
            }
        }
        intersecting.extend(next.iter().cloned());
        level = next;
    }

    let faces = intersecting.into_iter().map(|idxs| {
        idxs.into_iter()
            .map(|i| f.members()[i].0.clone())
            .collect::<Face>()
    });
    let skel = SimplicialComplex::from_faces(faces).expect("labels are valid and faces nonempty");
    if k > d {
        Ok(skel.helly_fill(d + 1)?.skeleton(k))
    } else {
        Ok(skel)
    }
}

/// The whole nerve: the d-skeleton plus everything the bounded-intersection
/// property fills in above it.
pub fn full_nerve(f: &ConvexFamily) -> SimplicialComplex {
    let d = f.ambient_dim();
    let skel = nerve_skeleton(f, d).expect("d >= 1");
    skel.helly_fill(d + 1).expect("d + 1 >= 2")
}

/// A claimed realization of a complex: one point per maximal face, plus
/// optional extra generators per set so the rebuilt sets can reach the
/// required affine dimension without changing the nerve.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Certificate {
    face_points: BTreeMap<Face, Point>,
    padding_points: BTreeMap<VertexId, Vec<Point>>,
}

impl Certificate {
    pub fn new(
        face_points: BTreeMap<Face, Point>,
        padding_points: BTreeMap<VertexId, Vec<Point>>,
    ) -> Self {
        Certificate {
            face_points,
            padding_points,
        }
    }

    pub fn face_points(&self) -> &BTreeMap<Face, Point> {
        &self.face_points
    }

    pub fn padding_points(&self) -> &BTreeMap<VertexId, Vec<Point>> {
        &self.padding_points
    }

    /// Builds the certificate a realizing family induces: an intersection
    /// witness for every maximal face, padded with each set's own
    /// generators. Fails if some face has no common point in the family.
    pub fn from_realization(f: &ConvexFamily, complex: &SimplicialComplex) -> Result<Self> {
        let mut face_points = BTreeMap::new();
        for m in complex.maximal_faces() {
            let sets: Vec<&Polytope> = m
                .iter()
                .map(|v| {
                    f.get(v)
                        .ok_or_else(|| Error::MissingMember(v.as_str().to_owned()))
                })
                .collect::<Result<_>>()?;
            let witness = feasible_common_point(&sets)?.ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "face {{{}}} has no common point in the family",
                    m.iter().join(",")
                ))
            })?;
            face_points.insert(m.clone(), witness);
        }
        let padding_points = f
            .members()
            .iter()
            .map(|(l, p)| (l.clone(), p.generators().to_vec()))
            .collect();
        Ok(Certificate {
            face_points,
            padding_points,
        })
    }
}

/// Outcome of certificate verification. On rejection the diagnostics hold
/// one line naming the first failing set or face in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub accepted: bool,
    pub diagnostics: Vec<String>,
}

impl VerifyReport {
    fn accept() -> Self {
        VerifyReport {
            accepted: true,
            diagnostics: Vec::new(),
        }
    }

    fn reject(reason: String) -> Self {
        VerifyReport {
            accepted: false,
            diagnostics: vec![reason],
        }
    }
}

fn face_key(face: &Face) -> String {
    face.iter().join(",")
}

/// Rebuilds a candidate family from the certificate and checks the two-part
/// contract: every rebuilt set has affine dimension exactly `j`, and the
/// k-skeleton of the rebuilt family's nerve equals the input complex.
/// Accepting therefore proves the complex realizable.
pub fn verify_certificate(
    complex: &SimplicialComplex,
    k: usize,
    j: usize,
    d: usize,
    cert: &Certificate,
) -> Result<VerifyReport> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".to_owned()));
    }
    if d < 1 || j > d {
        return Err(Error::InvalidParameter(format!(
            "need 0 <= j <= d with d >= 1, got j={j}, d={d}"
        )));
    }
    if complex.is_empty() {
        return Err(Error::EmptyFamily);
    }

    for m in complex.maximal_faces() {
        match cert.face_points.get(m) {
            None => {
                return Err(Error::MalformedCertificate(format!(
                    "missing face point for maximal face {{{}}}",
                    face_key(m)
                )))
            }
            Some(p) if p.dim() != d => {
                return Err(Error::MalformedCertificate(format!(
                    "face point for {{{}}} has dimension {}, expected {d}",
                    face_key(m),
                    p.dim()
                )))
            }
            Some(_) => {}
        }
    }
    for f in cert.face_points.keys() {
        if !complex.maximal_faces().contains(f) {
            return Err(Error::MalformedCertificate(format!(
                "face point for {{{}}} does not match any maximal face",
                face_key(f)
            )));
        }
    }
    for (v, pts) in &cert.padding_points {
        if !complex.vertices().contains(v) {
            return Err(Error::MalformedCertificate(format!(
                "padding points for unknown vertex `{v}`"
            )));
        }
        if let Some(p) = pts.iter().find(|p| p.dim() != d) {
            return Err(Error::MalformedCertificate(format!(
                "padding point for `{v}` has dimension {}, expected {d}",
                p.dim()
            )));
        }
    }

    // Rebuild one polytope per vertex from the face points of its maximal
    // faces plus any padding.
    let mut members = Vec::new();
    for v in complex.vertices() {
        let mut gens: Vec<Point> = complex
            .maximal_faces()
            .iter()
            .filter(|m| m.contains(v))
            .map(|m| cert.face_points[m].clone())
            .collect();
        if let Some(extra) = cert.padding_points.get(v) {
            gens.extend(extra.iter().cloned());
        }
        let set = Polytope::new(d, gens).expect("every vertex lies in some maximal face");
        members.push((v.clone(), set));
    }
    let built = ConvexFamily::new(d, members).expect("vertex labels are distinct");

    for (label, set) in built.members() {
        let dim = affine_dimension(set);
        if dim != j {
            return Ok(VerifyReport::reject(format!(
                "set `{label}` has affine dimension {dim}, expected exactly {j}"
            )));
        }
    }

    let skel = nerve_skeleton(&built, k)?;
    if &skel != complex {
        for f in skel.maximal_faces() {
            if !complex.has_face(f) {
                return Ok(VerifyReport::reject(format!(
                    "rebuilt nerve skeleton gains the face {{{}}}",
                    face_key(f)
                )));
            }
        }
        for f in complex.maximal_faces() {
            if !skel.has_face(f) {
                return Ok(VerifyReport::reject(format!(
                    "rebuilt nerve skeleton loses the face {{{}}}",
                    face_key(f)
                )));
            }
        }
        // Same downward closure but different maximal-face antichains.
        return Ok(VerifyReport::reject(
            "rebuilt nerve skeleton disagrees on maximal faces".to_owned(),
        ));
    }
    Ok(VerifyReport::accept())
}

/// What the bounded-intersection theorem predicts for families of flat sets:
/// if every j + 2 members meet, all members meet, and the whole nerve is
/// recoverable from its (j+1)-skeleton.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HellyReport {
    /// All subfamilies with at most j + 2 members intersect.
    pub premise_holds: bool,
    /// The whole family has a common point.
    pub conclusion_holds: bool,
    /// full_nerve equals the (j+1)-skeleton filled at h = j + 2.
    pub reconstruction_ok: bool,
}

/// Checks the dimension-limited intersection pattern of a family whose
/// members all have affine dimension at most `j`.
pub fn check_helly_type(f: &ConvexFamily, j: usize) -> Result<HellyReport> {
    for (label, set) in f.members() {
        let dim = affine_dimension(set);
        if dim > j {
            return Err(Error::MemberDimensionTooHigh {
                label: label.as_str().to_owned(),
                got: dim,
                bound: j,
            });
        }
    }

    let skel = nerve_skeleton(f, j + 1)?;
    let full_simplex_skel =
        SimplicialComplex::simplex(f.labels().cloned())?.skeleton(j + 1);
    let premise_holds = skel == full_simplex_skel;

    let all: Vec<&Polytope> = f.members().iter().map(|(_, p)| p).collect();
    let conclusion_holds = feasible_common_point(&all)?.is_some();

    let reconstruction_ok = full_nerve(f) == skel.helly_fill(j + 2)?;

    Ok(HellyReport {
        premise_holds,
        conclusion_holds,
        reconstruction_ok,
    })
}
