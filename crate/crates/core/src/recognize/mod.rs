//! Interval graph recognition with witnesses, the decision procedure for
//! one-dimensional nerve skeletons, and the complexity-status classifier.

mod chordal;

use std::collections::{BTreeMap, BTreeSet};

use pq_tree::{PQTree, ReductionError};

use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::geometry::{rat, Point, Polytope, Rational};
use crate::nerve::{nerve_skeleton, ConvexFamily};

/// Finite simple graph over vertex labels. Vertices are kept sorted and
/// edges stored as ordered pairs, so equal graphs compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<VertexId>,
    edges: BTreeSet<(VertexId, VertexId)>,
}

impl Graph {
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Graph> {
        let mut seen = BTreeSet::new();
        for v in vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::DuplicateVertex(v.as_str().to_owned()));
            }
        }
        let mut sorted_edges = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidParameter(format!(
                    "loop edge at vertex {a}"
                )));
            }
            for end in [&a, &b] {
                if !seen.contains(end) {
                    return Err(Error::UnknownVertex(end.as_str().to_owned()));
                }
            }
            let pair = if a < b { (a, b) } else { (b, a) };
            sorted_edges.insert(pair);
        }
        Ok(Graph {
            vertices: seen.into_iter().collect(),
            edges: sorted_edges,
        })
    }

    /// The graph whose edges are the one-element and two-element faces of
    /// `complex`.
    pub fn from_complex_one_skeleton(complex: &SimplicialComplex) -> Graph {
        Graph::new(
            complex.vertices().iter().cloned(),
            complex.one_skeleton_edges(),
        )
        .expect("complexes have distinct vertices and loop-free edges")
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(VertexId, VertexId)> {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn has_edge(&self, a: &VertexId, b: &VertexId) -> bool {
        let pair = if a < b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        self.edges.contains(&pair)
    }

    /// Neighbor sets over vertex indices in sorted-label order.
    fn adjacency(&self) -> Vec<BTreeSet<usize>> {
        let index: BTreeMap<&VertexId, usize> =
            self.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut adj = vec![BTreeSet::new(); self.vertices.len()];
        for (a, b) in &self.edges {
            let (i, j) = (index[a], index[b]);
            adj[i].insert(j);
            adj[j].insert(i);
        }
        adj
    }
}

/// A closed interval per vertex, found by recognition. Intervals intersect
/// exactly where the graph has an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalRealization {
    intervals: BTreeMap<VertexId, (Rational, Rational)>,
}

impl IntervalRealization {
    pub fn intervals(&self) -> &BTreeMap<VertexId, (Rational, Rational)> {
        &self.intervals
    }

    pub fn get(&self, v: &VertexId) -> Option<&(Rational, Rational)> {
        self.intervals.get(v)
    }

    /// The intervals as a one-dimensional convex family in label order.
    pub fn to_family(&self) -> Result<ConvexFamily> {
        let members = self
            .intervals
            .iter()
            .map(|(label, (lo, hi))| {
                let gens = vec![
                    Point::new(vec![lo.clone()]).expect("one coordinate"),
                    Point::new(vec![hi.clone()]).expect("one coordinate"),
                ];
                let interval = Polytope::new(1, gens).expect("intervals are one-dimensional");
                (label.clone(), interval)
            })
            .collect();
        ConvexFamily::new(1, members)
    }
}

/// Finds an interval realization of `g`, or reports that none exists.
///
/// The graph must be chordal (checked by a lexicographic BFS followed by the
/// perfect elimination test) and its maximal cliques must admit an order in
/// which the cliques containing each vertex are consecutive (enforced with a
/// PQ-tree). Reading each vertex's interval off the clique order then
/// realizes the graph exactly, which a final assertion re-verifies from the
/// intervals alone.
pub fn recognize_interval(g: &Graph) -> Option<IntervalRealization> {
    let n = g.len();
    if n == 0 {
        return Some(IntervalRealization {
            intervals: BTreeMap::new(),
        });
    }
    let adj = g.adjacency();
    let order = chordal::lex_bfs(&adj);
    if !chordal::is_perfect_elimination(&adj, &order) {
        return None;
    }
    let cliques = chordal::maximal_cliques(&adj, &order);
    let m = cliques.len();

    let leaves: Vec<usize> = (0..m).collect();
    let mut tree = PQTree::from_leaves(&leaves).expect("clique indices are distinct");
    for v in 0..n {
        let holding: Vec<usize> = (0..m).filter(|&c| cliques[c].contains(&v)).collect();
        tree = match tree.reduction(&holding) {
            Ok(t) => t,
            Err(ReductionError::IrreducibleTree) => return None,
            Err(e) => unreachable!("cliques only hold known leaves: {e:?}"),
        };
    }

    let mut clique_pos = vec![0usize; m];
    for (p, &c) in tree.frontier().iter().enumerate() {
        clique_pos[c] = p;
    }
    let mut intervals = BTreeMap::new();
    for (v, label) in g.vertices().iter().enumerate() {
        let positions: Vec<usize> = (0..m)
            .filter(|&c| cliques[c].contains(&v))
            .map(|c| clique_pos[c])
            .collect();
        let lo = *positions.iter().min().expect("every vertex lies in a clique");
        let hi = *positions.iter().max().expect("every vertex lies in a clique");
        assert_eq!(
            hi - lo + 1,
            positions.len(),
            "cliques holding {label} must sit consecutively"
        );
        intervals.insert(label.clone(), (rat(lo as i64, 1), rat(hi as i64, 1)));
    }

    for (i, a) in g.vertices().iter().enumerate() {
        for b in g.vertices().iter().skip(i + 1) {
            let (alo, ahi) = &intervals[a];
            let (blo, bhi) = &intervals[b];
            let meet = alo.max(blo) <= ahi.min(bhi);
            assert_eq!(
                meet,
                g.has_edge(a, b),
                "intervals for {a} and {b} must realize the edge set"
            );
        }
    }
    Some(IntervalRealization { intervals })
}

/// Outcome of the one-dimensional skeleton decision, with the realizing
/// interval family on yes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub realizable: bool,
    pub witness: Option<ConvexFamily>,
}

impl Decision {
    fn no() -> Decision {
        Decision {
            realizable: false,
            witness: None,
        }
    }
}

/// Whether every clique of the graph with at most `max_size` vertices is a
/// face, by growing cliques in sorted order and failing on the first
/// non-face, which also prunes all its extensions.
fn small_cliques_are_faces(
    adj: &[BTreeSet<usize>],
    labels: &[VertexId],
    complex: &SimplicialComplex,
    max_size: usize,
) -> bool {
    fn grow(
        adj: &[BTreeSet<usize>],
        labels: &[VertexId],
        complex: &SimplicialComplex,
        clique: &mut Vec<usize>,
        max_size: usize,
    ) -> bool {
        if !clique.is_empty() {
            let face: Face = clique.iter().map(|&i| labels[i].clone()).collect();
            if !complex.has_face(&face) {
                return false;
            }
        }
        if clique.len() == max_size {
            return true;
        }
        let start = clique.last().map_or(0, |&last| last + 1);
        for v in start..adj.len() {
            if clique.iter().all(|&u| adj[u].contains(&v)) {
                clique.push(v);
                let ok = grow(adj, labels, complex, clique, max_size);
                clique.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    grow(adj, labels, complex, &mut Vec::new(), max_size)
}

/// Decides whether `complex` is the k-skeleton of the nerve of a family of
/// closed intervals on the line, returning the family when it is.
///
/// The tests, each necessary: the one-skeleton graph is an interval graph,
/// the complex has dimension at most k, and every clique with at most k+1
/// vertices is a face. Every face is a clique by construction. When all
/// pass, the recognition witness realizes the complex, which is asserted
/// before returning. Empty complexes are rejected because a witness family
/// needs at least one member.
pub fn decide_r_k11(complex: &SimplicialComplex, k: usize) -> Result<Decision> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".to_owned()));
    }
    if complex.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if complex.dimension() > k as isize {
        return Ok(Decision::no());
    }
    let g = Graph::from_complex_one_skeleton(complex);
    let Some(realization) = recognize_interval(&g) else {
        return Ok(Decision::no());
    };
    if !small_cliques_are_faces(&g.adjacency(), g.vertices(), complex, k + 1) {
        return Ok(Decision::no());
    }
    let family = realization.to_family()?;
    let skeleton = nerve_skeleton(&family, k).expect("interval witnesses are valid families");
    assert_eq!(
        &skeleton, complex,
        "the witness family's nerve skeleton must reproduce the input"
    );
    Ok(Decision {
        realizable: true,
        witness: Some(family),
    })
}

/// Complexity status of the recognition problem for one set of parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StatusKind {
    Polynomial,
    ExistsRComplete,
    Trivial,
    OpenInExistsR,
}

/// A status together with the name of the result it follows from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Status {
    pub kind: StatusKind,
    pub source: String,
}

/// The hardness results: j=1 in dimension at least 2, j=2 in the plane, and
/// codimension at most one once k reaches d.
pub fn hardness_rule_applies(k: usize, j: usize, d: usize) -> bool {
    (j == 1 && d >= 2) || (j == 2 && d == 2) || (d >= 2 && k >= d && (j + 1 == d || j == d))
}

/// The triviality results and their closure under growing d and j: every
/// complex qualifies, so the answer is always yes.
pub fn triviality_rule_applies(k: usize, j: usize, d: usize) -> bool {
    (d >= 2 * k + 1 && (2 * k + 1..=d).contains(&j))
        || (k == 1 && d >= 3 && (2..=d).contains(&j))
}

/// Classifies the recognition problem for parameters (k, j, d), requiring
/// 1 <= j <= d and k >= 1. Rules are tried in a fixed priority order; the
/// hardness and triviality rules never both apply, which the test suite
/// audits. Anything not covered is open but still contained in ∃ℝ.
pub fn classify(k: usize, j: usize, d: usize) -> Result<Status> {
    if k < 1 || j < 1 || d < 1 {
        return Err(Error::InvalidParameter(
            "k, j, and d must all be at least 1".to_owned(),
        ));
    }
    if j > d {
        return Err(Error::InvalidParameter(format!(
            "no {j}-dimensional convex set fits in R^{d}"
        )));
    }
    let status = |kind, source: &str| Status {
        kind,
        source: source.to_owned(),
    };
    if j == 1 && d == 1 {
        return Ok(status(StatusKind::Polynomial, "Lemma: R(k,1,1) is in P"));
    }
    if hardness_rule_applies(k, j, d) {
        let source = if j == 1 {
            "Lemma: R(k,1,d) is ∃ℝ-hard"
        } else if j == 2 && d == 2 {
            "Lemma: R(k,2,2) is ∃ℝ-hard"
        } else {
            "Theorem: R(k,d-1,d) and R(k,d,d)"
        };
        return Ok(status(StatusKind::ExistsRComplete, source));
    }
    if triviality_rule_applies(k, j, d) {
        let source = if d >= 2 * k + 1 && (2 * k + 1..=d).contains(&j) {
            "Lemma: R(k,2k+1,2k+1) is trivial"
        } else {
            "Lemma: R(1,2,3) is trivial"
        };
        return Ok(status(StatusKind::Trivial, source));
    }
    Ok(status(StatusKind::OpenInExistsR, "contained in ∃ℝ"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_interval_decide;
    use crate::testutil::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn graph(vertices: &[&str], edges: &[(&str, &str)]) -> Graph {
        Graph::new(
            vertices.iter().map(|v| vid(v)),
            edges.iter().map(|(a, b)| (vid(a), vid(b))),
        )
        .unwrap()
    }

    /// Backtracking over endpoint interleavings, independent of the
    /// recognition pipeline. Opening a vertex while a non-neighbor is active
    /// or closing one before all its neighbors opened can never be repaired,
    /// so both moves are pruned.
    fn endpoint_oracle(adj: &[BTreeSet<usize>]) -> bool {
        const UNSEEN: u8 = 0;
        const ACTIVE: u8 = 1;
        const CLOSED: u8 = 2;
        fn step(adj: &[BTreeSet<usize>], state: &mut [u8]) -> bool {
            if state.iter().all(|&s| s == CLOSED) {
                return true;
            }
            for v in 0..adj.len() {
                match state[v] {
                    UNSEEN => {
                        let compatible = (0..adj.len())
                            .all(|u| state[u] != ACTIVE || adj[v].contains(&u));
                        if compatible {
                            state[v] = ACTIVE;
                            if step(adj, state) {
                                return true;
                            }
                            state[v] = UNSEEN;
                        }
                    }
                    ACTIVE => {
                        if adj[v].iter().all(|&u| state[u] != UNSEEN) {
                            state[v] = CLOSED;
                            if step(adj, state) {
                                return true;
                            }
                            state[v] = ACTIVE;
                        }
                    }
                    _ => {}
                }
            }
            false
        }
        step(adj, &mut vec![UNSEEN; adj.len()])
    }

    fn adjacency_of(n: usize, edges: &[(usize, usize)]) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        adj
    }

    #[test]
    fn path_graph_gets_intervals() {
        let g = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let r = recognize_interval(&g).unwrap();
        let (alo, ahi) = r.get(&vid("a")).unwrap();
        let (clo, chi) = r.get(&vid("c")).unwrap();
        assert!(ahi < clo || chi < alo, "a and c stay apart");
        let family = r.to_family().unwrap();
        assert_eq!(
            crate::nerve::full_nerve(&family),
            cx(&[&["a", "b"], &["b", "c"]])
        );
    }

    #[test]
    fn four_cycle_is_not_interval() {
        let g = graph(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        );
        assert!(recognize_interval(&g).is_none());
    }

    #[test]
    fn long_claw_is_not_interval() {
        // A center, three middles, three tips: chordal, yet not interval.
        let g = graph(
            &["c", "m1", "m2", "m3", "t1", "t2", "t3"],
            &[
                ("c", "m1"),
                ("c", "m2"),
                ("c", "m3"),
                ("m1", "t1"),
                ("m2", "t2"),
                ("m3", "t3"),
            ],
        );
        assert!(recognize_interval(&g).is_none());
        let adj = adjacency_of(
            7,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)],
        );
        assert!(!endpoint_oracle(&adj));
    }

    #[test]
    fn complete_and_edgeless_graphs_are_interval() {
        let all = [("a", "b"), ("a", "c"), ("b", "c")];
        for edges in [&all[..], &[]] {
            let g = graph(&["a", "b", "c"], edges);
            let r = recognize_interval(&g).unwrap();
            assert_eq!(r.intervals().len(), 3);
        }
    }

    #[test]
    fn empty_graph_realizes_vacuously() {
        let g = Graph::new([], []).unwrap();
        let r = recognize_interval(&g).unwrap();
        assert!(r.intervals().is_empty());
        assert!(matches!(r.to_family(), Err(Error::EmptyFamily)));
    }

    #[test]
    fn graph_validation_rejects_bad_input() {
        assert!(matches!(
            Graph::new([vid("a"), vid("a")], []),
            Err(Error::DuplicateVertex(_))
        ));
        assert!(matches!(
            Graph::new([vid("a")], [(vid("a"), vid("a"))]),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            Graph::new([vid("a")], [(vid("a"), vid("b"))]),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn recognition_agrees_with_the_brute_decider_on_small_graphs() {
        // Every graph on up to five labeled vertices, as a one-dimensional
        // complex; recognition must match the endpoint-ordering decider.
        let labels = ["a", "b", "c", "d", "e"];
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            for mask in 0..1u32 << pairs.len() {
                let edges: Vec<(&str, &str)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(t, _)| mask >> t & 1 == 1)
                    .map(|(_, &(i, j))| (labels[i], labels[j]))
                    .collect();
                let g = graph(&labels[..n], &edges);
                let complex = SimplicialComplex::from_declared(
                    (0..n).map(|i| vid(labels[i])),
                    edges.iter().map(|(a, b)| fc(&[a, b])).collect(),
                )
                .unwrap();
                let expected = brute_interval_decide(&complex, 1).unwrap();
                assert_eq!(
                    recognize_interval(&g).is_some(),
                    expected,
                    "n={n} mask={mask}"
                );
            }
        }
    }

    #[test]
    fn recognition_agrees_with_the_endpoint_oracle_on_random_graphs() {
        let labels = ["a", "b", "c", "d", "e", "f", "g"];
        let mut rng = ChaCha8Rng::seed_from_u64(0xC11);
        for round in 0..500 {
            let n = rng.gen_range(2..=7usize);
            let mut edges = Vec::new();
            let mut index_edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((labels[i], labels[j]));
                        index_edges.push((i, j));
                    }
                }
            }
            let g = graph(&labels[..n], &edges);
            let adj = adjacency_of(n, &index_edges);
            assert_eq!(
                recognize_interval(&g).is_some(),
                endpoint_oracle(&adj),
                "round {round}: n={n} edges={index_edges:?}"
            );
        }
    }

    #[test]
    fn deciding_a_path_complex_yields_a_witness() {
        let k = cx(&[&["a", "b"], &["b", "c"]]);
        let decision = decide_r_k11(&k, 1).unwrap();
        assert!(decision.realizable);
        let witness = decision.witness.unwrap();
        assert_eq!(crate::nerve::nerve_skeleton(&witness, 1).unwrap(), k);
    }

    #[test]
    fn hollow_triangle_fails_at_k2() {
        // The triangle's three edges force a clique whose triple face is
        // missing.
        let k = cx(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
        let decision = decide_r_k11(&k, 2).unwrap();
        assert!(!decision.realizable);
        assert!(decision.witness.is_none());
    }

    #[test]
    fn four_cycle_complex_fails_at_k1() {
        let k = cx(&[&["a", "b"], &["b", "c"], &["c", "d"], &["a", "d"]]);
        assert!(!decide_r_k11(&k, 1).unwrap().realizable);
    }

    #[test]
    fn overfull_dimension_fails_fast() {
        let k = cx(&[&["a", "b", "c"]]);
        assert!(!decide_r_k11(&k, 1).unwrap().realizable);
        assert!(decide_r_k11(&k, 2).unwrap().realizable);
    }

    #[test]
    fn decide_rejects_degenerate_input() {
        let k = cx(&[&["a", "b"]]);
        assert!(matches!(
            decide_r_k11(&k, 0),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            decide_r_k11(&SimplicialComplex::from_faces(vec![]).unwrap(), 1),
            Err(Error::EmptyFamily)
        ));
    }

    #[test]
    fn decide_agrees_with_the_brute_decider_on_three_vertex_complexes() {
        let faces = [
            fc(&["a"]),
            fc(&["b"]),
            fc(&["c"]),
            fc(&["a", "b"]),
            fc(&["b", "c"]),
            fc(&["a", "c"]),
            fc(&["a", "b", "c"]),
        ];
        for mask in 1u32..1 << faces.len() {
            let chosen: Vec<Face> = faces
                .iter()
                .enumerate()
                .filter(|(t, _)| mask >> t & 1 == 1)
                .map(|(_, f)| f.clone())
                .collect();
            let complex = SimplicialComplex::from_faces(chosen).unwrap();
            for k in 1..=2usize {
                assert_eq!(
                    decide_r_k11(&complex, k).unwrap().realizable,
                    brute_interval_decide(&complex, k).unwrap(),
                    "mask={mask} k={k}"
                );
            }
        }
    }

    #[test]
    fn classifier_matches_the_published_table() {
        let rows = [
            (1, 1, 1, StatusKind::Polynomial),
            (2, 2, 2, StatusKind::ExistsRComplete),
            (1, 2, 3, StatusKind::Trivial),
            (2, 5, 5, StatusKind::Trivial),
            (3, 2, 4, StatusKind::OpenInExistsR),
        ];
        for (k, j, d, kind) in rows {
            assert_eq!(classify(k, j, d).unwrap().kind, kind, "({k},{j},{d})");
        }
        assert_eq!(
            classify(3, 2, 4).unwrap().source,
            "contained in ∃ℝ"
        );
    }

    #[test]
    fn classifier_reproduces_the_k1_row() {
        for d in 1..=8usize {
            for j in 1..=d {
                let kind = classify(1, j, d).unwrap().kind;
                let expected = if j == 1 && d == 1 {
                    StatusKind::Polynomial
                } else if j == 1 || (j == 2 && d == 2) {
                    StatusKind::ExistsRComplete
                } else {
                    StatusKind::Trivial
                };
                assert_eq!(kind, expected, "(1,{j},{d})");
            }
        }
    }

    #[test]
    fn hardness_and_triviality_rules_never_overlap() {
        for k in 1..=12usize {
            for d in 1..=12usize {
                for j in 1..=d {
                    assert!(
                        !(hardness_rule_applies(k, j, d) && triviality_rule_applies(k, j, d)),
                        "rules overlap at ({k},{j},{d})"
                    );
                }
            }
        }
    }

    #[test]
    fn classifier_rejects_out_of_range_parameters() {
        assert!(matches!(classify(1, 3, 2), Err(Error::InvalidParameter(_))));
        assert!(matches!(classify(0, 1, 1), Err(Error::InvalidParameter(_))));
        assert!(matches!(classify(1, 0, 1), Err(Error::InvalidParameter(_))));
    }
}
