//! Moving realizations between ambient dimensions.
//!
//! `lift_suspension` turns a family realizing a complex K into one ambient
//! dimension higher realizing the suspension of K: every set becomes a prism
//! over the segment [-2, 2], and two new sets sit near the levels 1 and -1,
//! wide enough to meet every prism but never each other. `project_suspension`
//! inverts the construction by slicing along a hyperplane separating the two
//! apex sets. `embed_family` and `extrude_family` move a family up one
//! dimension without touching its nerve, the latter giving every member
//! positive thickness in the new direction.

use crate::complex::VertexId;
use crate::error::{Error, Result};
use crate::geometry::{
    affine_dimension, embed, extrude, feasible_common_point, prism, rat, separating_hyperplane,
    slice, Chart, Point, Polytope, Rational,
};
use crate::nerve::{full_nerve, ConvexFamily};

/// Axis-aligned box with the given per-coordinate bounds, as the hull of its
/// corners.
fn box_polytope(bounds: &[(Rational, Rational)]) -> Polytope {
    let d = bounds.len();
    let corners = (0..1usize << d).map(|mask| {
        let coords = bounds
            .iter()
            .enumerate()
            .map(|(i, (lo, hi))| {
                if mask >> i & 1 == 1 {
                    hi.clone()
                } else {
                    lo.clone()
                }
            })
            .collect();
        Point::new(coords).expect("boxes have positive dimension")
    });
    Polytope::new(d, corners.collect()).expect("corner dimensions match")
}

/// Per-coordinate bounding range of all generators, widened by margin 1.
fn padded_bounds(f: &ConvexFamily) -> Vec<(Rational, Rational)> {
    let d = f.ambient_dim();
    let mut bounds: Vec<(Rational, Rational)> = Vec::with_capacity(d);
    for i in 0..d {
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for (_, set) in f.members() {
            for g in set.generators() {
                let c = &g.coords()[i];
                if lo.as_ref().is_none_or(|l| c < l) {
                    lo = Some(c.clone());
                }
                if hi.as_ref().is_none_or(|h| c > h) {
                    hi = Some(c.clone());
                }
            }
        }
        let lo = lo.expect("families are nonempty") - rat(1, 1);
        let hi = hi.expect("families are nonempty") + rat(1, 1);
        bounds.push((lo, hi));
    }
    bounds
}

/// Lifts a realization one dimension up so that its full nerve becomes the
/// suspension with apexes `a` and `b`. Members become prisms over [-2, 2].
/// For j = d-1 the apex sets are flat boxes at the levels 1 and -1; for
/// j = d flat boxes would be one dimension short, so slabs over [1, 3/2] and
/// [-3/2, -1] stand in. Either way both apex sets meet every prism, miss
/// each other, and have affine dimension j + 1.
pub fn lift_suspension(
    f: &ConvexFamily,
    j: usize,
    a: &VertexId,
    b: &VertexId,
) -> Result<ConvexFamily> {
    let d = f.ambient_dim();
    if j + 1 != d && j != d {
        return Err(Error::UnsupportedLiftDimension { j, d });
    }
    if a == b {
        return Err(Error::EqualApexLabels(a.as_str().to_owned()));
    }
    for apex in [a, b] {
        if f.get(apex).is_some() {
            return Err(Error::LabelCollision(apex.as_str().to_owned()));
        }
    }
    for (label, set) in f.members() {
        let dim = affine_dimension(set);
        if dim != j {
            return Err(Error::MemberDimensionMismatch {
                label: label.as_str().to_owned(),
                got: dim,
                expected: j,
            });
        }
    }

    let mut members: Vec<(VertexId, Polytope)> = f
        .members()
        .iter()
        .map(|(label, set)| {
            let lifted = prism(set, &rat(-2, 1), &rat(2, 1)).expect("-2 < 2");
            (label.clone(), lifted)
        })
        .collect();

    let base = padded_bounds(f);
    let (top, bottom) = if j == d {
        (
            [rat(1, 1), rat(3, 2)],
            [rat(-3, 2), rat(-1, 1)],
        )
    } else {
        (
            [rat(1, 1), rat(1, 1)],
            [rat(-1, 1), rat(-1, 1)],
        )
    };
    for (apex, [lo, hi]) in [(a, top), (b, bottom)] {
        let mut bounds = base.clone();
        bounds.push((lo, hi));
        members.push((apex.clone(), box_polytope(&bounds)));
    }
    ConvexFamily::new(d + 1, members)
}

/// Inverts a suspension lift: separates the two apex sets by a hyperplane,
/// slices every other member by it, and returns the sliced family in the
/// hyperplane's chart coordinates. Members missing the hyperplane are
/// dropped; a member meeting both apex sets always crosses it.
pub fn project_suspension(
    f2: &ConvexFamily,
    a: &VertexId,
    b: &VertexId,
) -> Result<ConvexFamily> {
    let set_a = f2
        .get(a)
        .ok_or_else(|| Error::MissingMember(a.as_str().to_owned()))?;
    let set_b = f2
        .get(b)
        .ok_or_else(|| Error::MissingMember(b.as_str().to_owned()))?;
    if feasible_common_point(&[set_a, set_b])?.is_some() {
        return Err(Error::ApexSetsIntersect {
            a: a.as_str().to_owned(),
            b: b.as_str().to_owned(),
        });
    }
    let h = separating_hyperplane(set_a, set_b)?;
    let chart = Chart::standard(&h)?;
    let mut members = Vec::new();
    for (label, set) in f2.members() {
        if label == a || label == b {
            continue;
        }
        if let Some(sliced) = slice(set, &h, &chart)? {
            members.push((label.clone(), sliced));
        }
    }
    ConvexFamily::new(f2.ambient_dim() - 1, members)
}

/// Appends a zero coordinate to every member; the nerve is untouched because
/// intersections are computed coordinate-wise.
pub fn embed_family(f: &ConvexFamily) -> ConvexFamily {
    let members = f
        .members()
        .iter()
        .map(|(label, set)| (label.clone(), embed(set)))
        .collect();
    ConvexFamily::new(f.ambient_dim() + 1, members).expect("labels unchanged")
}

/// Maximum number of halvings before extrusion gives up. Far more than any
/// family with bounded coordinates can need; hitting it means a bug.
const EXTRUDE_MAX_HALVINGS: u32 = 128;

/// Thickens every member by a common eps without changing the full nerve.
/// Extrusion only enlarges sets, so the nerve can only gain faces; starting
/// at eps = 1 and halving until the nerve matches finds a safe value because
/// a small enough eps always exists for compact sets with positive gaps.
pub fn extrude_family(f: &ConvexFamily) -> Result<ConvexFamily> {
    let d = f.ambient_dim();
    for (_, set) in f.members() {
        if affine_dimension(set) == d {
            return Err(Error::AlreadyFullDimensional);
        }
    }
    let target = full_nerve(f);
    let mut eps = rat(1, 1);
    for _ in 0..EXTRUDE_MAX_HALVINGS {
        let members: Vec<(VertexId, Polytope)> = f
            .members()
            .iter()
            .map(|(label, set)| Ok((label.clone(), extrude(set, &eps)?)))
            .collect::<Result<_>>()?;
        let candidate = ConvexFamily::new(d, members).expect("labels unchanged");
        if full_nerve(&candidate) == target {
            return Ok(candidate);
        }
        eps /= rat(2, 1);
    }
    Err(Error::ExtrusionDidNotStabilize(EXTRUDE_MAX_HALVINGS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;
    use crate::oracle::{random_family, GeneratorConfig};
    use crate::testutil::*;

    fn suspension_of(f: &ConvexFamily, a: &str, b: &str) -> SimplicialComplex {
        full_nerve(f).suspension(&vid(a), &vid(b)).unwrap()
    }

    #[test]
    fn lifting_one_interval_gives_a_suspended_point() {
        let f = family(vec![("v", interval(0, 1))]);
        let lifted = lift_suspension(&f, 1, &vid("a"), &vid("b")).unwrap();
        assert_eq!(lifted.ambient_dim(), 2);
        assert_eq!(full_nerve(&lifted), cx(&[&["v", "a"], &["v", "b"]]));
        assert_eq!(full_nerve(&lifted), suspension_of(&f, "a", "b"));
    }

    #[test]
    fn lifting_crossing_segments_suspends_the_edge() {
        let f = family(vec![
            ("u", poly(&[&[-1, 0], &[1, 0]])),
            ("v", poly(&[&[0, -1], &[0, 1]])),
        ]);
        let lifted = lift_suspension(&f, 1, &vid("a"), &vid("b")).unwrap();
        assert_eq!(lifted.ambient_dim(), 3);
        assert_eq!(
            full_nerve(&lifted),
            cx(&[&["u", "v", "a"], &["u", "v", "b"]])
        );
    }

    #[test]
    fn lifting_disjoint_intervals_keeps_the_apexes_apart() {
        let f = family(vec![("u", interval(0, 1)), ("v", interval(3, 4))]);
        let lifted = lift_suspension(&f, 1, &vid("a"), &vid("b")).unwrap();
        let nerve = full_nerve(&lifted);
        assert_eq!(
            nerve,
            cx(&[&["u", "a"], &["u", "b"], &["v", "a"], &["v", "b"]])
        );
        assert!(!nerve.has_face(&fc(&["a", "b"])));
    }

    #[test]
    fn apex_sets_have_dimension_j_plus_one() {
        for (f, j) in [
            (family(vec![("v", interval(0, 1))]), 1),
            (family(vec![("v", poly(&[&[2]]))]), 0),
        ] {
            let lifted = lift_suspension(&f, j, &vid("a"), &vid("b")).unwrap();
            for apex in ["a", "b"] {
                let set = lifted.get(&vid(apex)).unwrap();
                assert_eq!(affine_dimension(set), j + 1, "apex {apex} with j={j}");
            }
            for (label, _) in f.members() {
                assert_eq!(affine_dimension(lifted.get(label).unwrap()), j + 1);
            }
        }
    }

    #[test]
    fn lift_rejects_bad_dimensions() {
        let f = family(vec![("v", interval(0, 1))]);
        assert!(matches!(
            lift_suspension(&f, 3, &vid("a"), &vid("b")),
            Err(Error::UnsupportedLiftDimension { j: 3, d: 1 })
        ));
        assert!(matches!(
            lift_suspension(&f, 0, &vid("a"), &vid("b")),
            Err(Error::MemberDimensionMismatch { .. })
        ));
        assert!(matches!(
            lift_suspension(&f, 1, &vid("v"), &vid("b")),
            Err(Error::LabelCollision(_))
        ));
        assert!(matches!(
            lift_suspension(&f, 1, &vid("a"), &vid("a")),
            Err(Error::EqualApexLabels(_))
        ));
    }

    #[test]
    fn project_inverts_the_lift_for_one_interval() {
        let f = family(vec![("v", interval(0, 1))]);
        let lifted = lift_suspension(&f, 1, &vid("a"), &vid("b")).unwrap();
        let back = project_suspension(&lifted, &vid("a"), &vid("b")).unwrap();
        assert_eq!(back.ambient_dim(), 1);
        assert_eq!(full_nerve(&back), cx(&[&["v"]]));
    }

    #[test]
    fn project_inverts_the_lift_for_crossing_segments() {
        let f = family(vec![
            ("u", poly(&[&[-1, 0], &[1, 0]])),
            ("v", poly(&[&[0, -1], &[0, 1]])),
        ]);
        let lifted = lift_suspension(&f, 1, &vid("a"), &vid("b")).unwrap();
        let back = project_suspension(&lifted, &vid("a"), &vid("b")).unwrap();
        assert_eq!(full_nerve(&back), full_nerve(&f));
        // The round trip recovers the original affine dimensions.
        for (_, set) in back.members() {
            assert_eq!(affine_dimension(set), 1);
        }
    }

    #[test]
    fn project_rejects_overlapping_apex_sets() {
        let f2 = family(vec![
            ("a", poly(&[&[0, 0], &[1, 0]])),
            ("b", poly(&[&[0, 0], &[0, 1]])),
            ("v", poly(&[&[5, 5]])),
        ]);
        assert!(matches!(
            project_suspension(&f2, &vid("a"), &vid("b")),
            Err(Error::ApexSetsIntersect { .. })
        ));
        assert!(matches!(
            project_suspension(&f2, &vid("x"), &vid("b")),
            Err(Error::MissingMember(_))
        ));
    }

    #[test]
    fn embedding_preserves_the_nerve() {
        for seed in 0..6 {
            let f = random_family(&GeneratorConfig::new(seed, 4, 1)).unwrap();
            let embedded = embed_family(&f);
            assert_eq!(embedded.ambient_dim(), 2);
            assert_eq!(full_nerve(&embedded), full_nerve(&f), "seed {seed}");
        }
        let disjoint = family(vec![("u", interval(0, 1)), ("v", interval(2, 3))]);
        assert_eq!(
            full_nerve(&embed_family(&disjoint)),
            cx(&[&["u"], &["v"]])
        );
    }

    #[test]
    fn extruding_touching_segments_keeps_their_edge() {
        let f = family(vec![
            ("u", poly(&[&[0, 0], &[1, 0]])),
            ("v", poly(&[&[1, 0], &[2, 0]])),
        ]);
        let thick = extrude_family(&f).unwrap();
        for (_, set) in thick.members() {
            assert_eq!(affine_dimension(set), 2);
        }
        assert_eq!(full_nerve(&thick), cx(&[&["u", "v"]]));
    }

    #[test]
    fn extruding_close_segments_halves_until_disjoint() {
        // Distance 1 apart: eps = 1 merges them, so halving must kick in.
        let f = family(vec![
            ("u", poly(&[&[0, 0], &[0, 2]])),
            ("v", poly(&[&[1, 0], &[1, 2]])),
        ]);
        let thick = extrude_family(&f).unwrap();
        assert_eq!(full_nerve(&thick), cx(&[&["u"], &["v"]]));
        let u = thick.get(&vid("u")).unwrap();
        // The found eps is strictly below the gap.
        for g in u.generators() {
            assert!(g.coords()[0] < rat(1, 1));
        }
    }

    #[test]
    fn extruding_a_point_gives_a_segment() {
        let f = family(vec![("v", poly(&[&[0, 0]]))]);
        let thick = extrude_family(&f).unwrap();
        assert_eq!(full_nerve(&thick), cx(&[&["v"]]));
        assert_eq!(affine_dimension(thick.get(&vid("v")).unwrap()), 1);
    }

    #[test]
    fn extrude_family_rejects_full_dimensional_members() {
        let f = family(vec![("v", poly(&[&[0, 0], &[1, 0], &[0, 1]]))]);
        assert_eq!(extrude_family(&f), Err(Error::AlreadyFullDimensional));
    }

    // Seeded sweep over both j cases in dimensions 1 and 2; the acceptance
    // suite runs the larger version.
    #[test]
    fn lift_then_project_round_trips_on_random_realizations() {
        let mut checked = 0;
        let mut seed = 0u64;
        for (d, j) in [(1, 0), (1, 1), (2, 1), (2, 2)] {
            let mut remaining = 3;
            while remaining > 0 {
                seed += 1;
                assert!(seed < 600, "not enough exact-dimension families found");
                let mut cfg = GeneratorConfig::new(seed, 3, d);
                cfg.max_generators = if j == 0 { 1 } else { 4 };
                if 0 < j && j < d {
                    cfg.flat_dim = Some(j);
                }
                let f = random_family(&cfg).unwrap();
                if f.members()
                    .iter()
                    .any(|(_, set)| affine_dimension(set) != j)
                {
                    continue;
                }
                remaining -= 1;
                checked += 1;
                let lifted = lift_suspension(&f, j, &vid("ap0"), &vid("ap1")).unwrap();
                assert_eq!(
                    full_nerve(&lifted),
                    suspension_of(&f, "ap0", "ap1"),
                    "suspension mismatch at seed {seed}, d={d}, j={j}"
                );
                let back = project_suspension(&lifted, &vid("ap0"), &vid("ap1")).unwrap();
                assert_eq!(
                    full_nerve(&back),
                    full_nerve(&f),
                    "round trip mismatch at seed {seed}, d={d}, j={j}"
                );
            }
        }
        assert_eq!(checked, 12);
    }
}
