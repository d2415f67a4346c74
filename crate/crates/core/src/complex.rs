//! Abstract simplicial complexes stored by their maximal faces.
//!
//! A complex is kept in canonical form: the ground set is the union of the
//! maximal faces, the maximal faces form an antichain, and both are held in
//! sorted order so that structural equality is well defined. Isolated
//! vertices are singleton maximal faces.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A vertex label. Nonempty and comma-free (commas separate labels in the
/// certificate wire format).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty() {
            return Err(Error::InvalidLabel(label, "label must be nonempty"));
        }
        if label.contains(',') {
            return Err(Error::InvalidLabel(label, "label must not contain a comma"));
        }
        Ok(VertexId(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A face is a set of vertices; `BTreeSet` keeps it sorted and gives
/// lexicographic ordering between faces for free.
pub type Face = BTreeSet<VertexId>;

/// Builds a face from labels; convenient in tests and constructors.
pub fn face<I>(labels: I) -> Result<Face>
where
    I: IntoIterator,
    I::Item: Into<String>,
{
    labels.into_iter().map(VertexId::new).collect()
}

/// An abstract simplicial complex on a finite ground set, represented by the
/// antichain of its maximal faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: BTreeSet<VertexId>,
    maximal_faces: BTreeSet<Face>,
}

impl SimplicialComplex {
    /// Normalizes an arbitrary list of faces into canonical form: subsets of
    /// other faces are absorbed and the ground set is the union of the input.
    pub fn from_faces<I>(faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = Face>,
    {
        let faces: Vec<Face> = faces.into_iter().collect();
        if faces.iter().any(Face::is_empty) {
            return Err(Error::EmptyFace);
        }
        let vertices: BTreeSet<VertexId> = faces.iter().flatten().cloned().collect();
        Ok(SimplicialComplex {
            vertices,
            maximal_faces: antichain(faces),
        })
    }

    /// Like [`from_faces`](Self::from_faces), but with an explicitly declared
    /// ground set. Declared vertices not covered by any face become singleton
    /// maximal faces; duplicate declarations and undeclared face vertices are
    /// rejected.
    pub fn from_declared<I>(declared: I, faces: Vec<Face>) -> Result<Self>
    where
        I: IntoIterator<Item = VertexId>,
    {
        let mut vertices = BTreeSet::new();
        for v in declared {
            if !vertices.insert(v.clone()) {
                return Err(Error::DuplicateVertex(v.as_str().to_owned()));
            }
        }
        for f in &faces {
            if f.is_empty() {
                return Err(Error::EmptyFace);
            }
            if let Some(v) = f.iter().find(|v| !vertices.contains(*v)) {
                return Err(Error::UnknownVertex(v.as_str().to_owned()));
            }
        }
        let covered: BTreeSet<VertexId> = faces.iter().flatten().cloned().collect();
        let mut all = faces;
        for v in &vertices {
            if !covered.contains(v) {
                all.push(BTreeSet::from([v.clone()]));
            }
        }
        Ok(SimplicialComplex {
            vertices,
            maximal_faces: antichain(all),
        })
    }

    /// The full simplex on the given vertices.
    pub fn simplex<I>(vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexId>,
    {
        let f: Face = vertices.into_iter().collect();
        Self::from_faces([f])
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn maximal_faces(&self) -> &BTreeSet<Face> {
        &self.maximal_faces
    }

    pub fn is_empty(&self) -> bool {
        self.maximal_faces.is_empty()
    }

    /// Maximum face dimension (cardinality minus one); -1 for the empty
    /// complex.
    pub fn dimension(&self) -> isize {
        self.maximal_faces
            .iter()
            .map(|f| f.len() as isize - 1)
            .max()
            .unwrap_or(-1)
    }

    /// Whether `f` is a face, i.e. a subset of some maximal face.
    pub fn has_face(&self, f: &Face) -> bool {
        self.maximal_faces.iter().any(|m| f.is_subset(m))
    }

    /// All nonempty faces, enumerated explicitly. Exponential in the largest
    /// face; intended for desk-scale complexes and tests.
    pub fn all_faces(&self) -> BTreeSet<Face> {
        let mut out = BTreeSet::new();
        for m in &self.maximal_faces {
            let elems: Vec<&VertexId> = m.iter().collect();
            for size in 1..=elems.len() {
                for sub in elems.iter().combinations(size) {
                    out.insert(sub.into_iter().map(|v| (*v).clone()).collect());
                }
            }
        }
        out
    }

    /// The subcomplex of faces with at most `k + 1` vertices.
    pub fn skeleton(&self, k: usize) -> SimplicialComplex {
        let cap = k + 1;
        let mut faces = Vec::new();
        for m in &self.maximal_faces {
            if m.len() <= cap {
                faces.push(m.clone());
            } else {
                let elems: Vec<&VertexId> = m.iter().collect();
                for sub in elems.iter().combinations(cap) {
                    faces.push(sub.into_iter().map(|v| (*v).clone()).collect());
                }
            }
        }
        SimplicialComplex {
            vertices: self.vertices.clone(),
            maximal_faces: antichain(faces),
        }
    }

    /// The suspension: two fresh apex vertices, each joined to every face.
    /// Maximal faces become `m ∪ {a}` and `m ∪ {b}`.
    pub fn suspension(&self, a: &VertexId, b: &VertexId) -> Result<SimplicialComplex> {
        if a == b {
            return Err(Error::EqualApexLabels(a.as_str().to_owned()));
        }
        for apex in [a, b] {
            if self.vertices.contains(apex) {
                return Err(Error::LabelCollision(apex.as_str().to_owned()));
            }
        }
        let mut faces = Vec::new();
        if self.maximal_faces.is_empty() {
            faces.push(BTreeSet::from([a.clone()]));
            faces.push(BTreeSet::from([b.clone()]));
        }
        for m in &self.maximal_faces {
            for apex in [a, b] {
                let mut f = m.clone();
                f.insert(apex.clone());
                faces.push(f);
            }
        }
        let mut vertices = self.vertices.clone();
        vertices.insert(a.clone());
        vertices.insert(b.clone());
        Ok(SimplicialComplex {
            vertices,
            maximal_faces: antichain(faces),
        })
    }

    /// Closes the complex under the rule "a face may be added whenever all of
    /// its subsets of size at most `h` are present". Candidates are grown
    /// level by level from the size-`h` faces, so the cost is proportional to
    /// what actually gets filled rather than to the power set.
    pub fn helly_fill(&self, h: usize) -> Result<SimplicialComplex> {
        if h < 2 {
            return Err(Error::InvalidParameter(
                "helly_fill requires h >= 2".to_owned(),
            ));
        }
        // Faces of size exactly h.
        let mut level: BTreeSet<Face> = BTreeSet::new();
        for m in &self.maximal_faces {
            if m.len() >= h {
                let elems: Vec<&VertexId> = m.iter().collect();
                for sub in elems.iter().combinations(h) {
                    level.insert(sub.into_iter().map(|v| (*v).clone()).collect());
                }
            }
        }

        let mut pool: Vec<Face> = self.maximal_faces.iter().cloned().collect();
        // Grow one vertex at a time: f ∪ {v} joins the next level iff every
        // drop-one subset sits in the current level, which by induction is
        // equivalent to all size-h subsets being faces.
        while !level.is_empty() {
            let mut next: BTreeSet<Face> = BTreeSet::new();
            for f in &level {
                let last = f.iter().next_back().expect("level faces are nonempty");
                for v in self.vertices.range::<VertexId, _>((
                    std::ops::Bound::Excluded(last),
                    std::ops::Bound::Unbounded,
                )) {
                    let mut cand = f.clone();
                    cand.insert(v.clone());
                    if next.contains(&cand) {
                        continue;
                    }
                    let ok = cand.iter().all(|drop| {
                        let mut sub = cand.clone();
                        sub.remove(drop);
                        level.contains(&sub)
                    });
                    if ok {
                        next.insert(cand);
                    }
                }
            }
            pool.extend(level);
            level = next;
        }

        Ok(SimplicialComplex {
            vertices: self.vertices.clone(),
            maximal_faces: antichain(pool),
        })
    }

    /// All unordered vertex pairs contained in some face.
    pub fn one_skeleton_edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut edges = BTreeSet::new();
        for m in &self.maximal_faces {
            for pair in m.iter().combinations(2) {
                edges.insert((pair[0].clone(), pair[1].clone()));
            }
        }
        edges.into_iter().collect()
    }
}

/// Keeps only the faces not strictly contained in another; duplicates
/// collapse through the set.
fn antichain(faces: Vec<Face>) -> BTreeSet<Face> {
    let distinct: BTreeSet<Face> = faces.into_iter().collect();
    distinct
        .iter()
        .filter(|f| {
            !distinct
                .iter()
                .any(|g| g.len() > f.len() && f.is_subset(g))
        })
        .cloned()
        .collect()
}
