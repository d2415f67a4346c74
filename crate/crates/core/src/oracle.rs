//! Brute-force oracles and seeded instance generators.
//!
//! Everything here trades speed for independence: the oracles answer by
//! exhaustive enumeration so the clever paths elsewhere in the crate have
//! something dumb and trustworthy to disagree with. The interval oracle in
//! particular never touches the LP machinery; on the line, a subfamily
//! intersects exactly when the largest left endpoint is at most the smallest
//! right endpoint.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::geometry::{feasible_common_point, rat, Point, Polytope, Rational};
use crate::nerve::ConvexFamily;

/// Largest family `brute_nerve` will enumerate (2^n - 1 subfamilies).
pub const BRUTE_NERVE_MAX_MEMBERS: usize = 12;

/// Largest ground set `brute_interval_decide` will enumerate
/// ((2n)!/2^n endpoint orders).
pub const BRUTE_INTERVAL_MAX_VERTICES: usize = 5;

/// The nerve by definition: one exact LP feasibility test per nonempty
/// subfamily, no shortcuts.
pub fn brute_nerve(f: &ConvexFamily) -> Result<SimplicialComplex> {
    let n = f.len();
    if n > BRUTE_NERVE_MAX_MEMBERS {
        return Err(Error::FamilyTooLarge(n, BRUTE_NERVE_MAX_MEMBERS));
    }
    let mut faces: Vec<Face> = Vec::new();
    for mask in 1u32..1 << n {
        let idxs: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let sets: Vec<&Polytope> = idxs.iter().map(|&i| &f.members()[i].1).collect();
        if feasible_common_point(&sets)?.is_some() {
            faces.push(idxs.iter().map(|&i| f.members()[i].0.clone()).collect());
        }
    }
    SimplicialComplex::from_faces(faces)
}

/// Whether `complex` is the k-skeleton of the nerve of some closed intervals
/// on the line, decided by trying every interleaving of 2n endpoints.
/// Distinct endpoint positions lose no generality: expanding intervals by
/// tiny distinct amounts preserves every intersection pattern.
pub fn brute_interval_decide(complex: &SimplicialComplex, k: usize) -> Result<bool> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".to_owned()));
    }
    let n = complex.vertices().len();
    if n > BRUTE_INTERVAL_MAX_VERTICES {
        return Err(Error::TooManyVertices(n, BRUTE_INTERVAL_MAX_VERTICES));
    }
    if n == 0 {
        return Err(Error::EmptyFamily);
    }
    // Two complexes of dimension <= k are equal exactly when they agree on
    // all faces with at most k + 1 vertices, so a per-leaf bitmask sweep
    // replaces building a complex per interleaving.
    if complex.dimension() > k as isize {
        return Ok(false);
    }
    let labels: Vec<&VertexId> = complex.vertices().iter().collect();
    let mut is_face = vec![false; 1 << n];
    for m in complex.maximal_faces() {
        let mask = m.iter().fold(0usize, |acc, v| {
            acc | 1 << labels.iter().position(|l| *l == v).expect("own vertex")
        });
        // Mark every nonempty submask.
        let mut sub = mask;
        while sub != 0 {
            is_face[sub] = true;
            sub = (sub - 1) & mask;
        }
    }

    let mut lo = vec![0usize; n];
    let mut hi = vec![0usize; n];
    let mut state = vec![0u8; n];
    search_orders(n, 0, &mut lo, &mut hi, &mut state, k, &is_face)
}

fn search_orders(
    n: usize,
    pos: usize,
    lo: &mut [usize],
    hi: &mut [usize],
    state: &mut [u8],
    k: usize,
    is_face: &[bool],
) -> Result<bool> {
    if pos == 2 * n {
        return Ok(matches_skeleton(n, lo, hi, k, is_face));
    }
    for v in 0..n {
        match state[v] {
            0 => {
                state[v] = 1;
                lo[v] = pos;
                if search_orders(n, pos + 1, lo, hi, state, k, is_face)? {
                    return Ok(true);
                }
                state[v] = 0;
            }
            1 => {
                state[v] = 2;
                hi[v] = pos;
                if search_orders(n, pos + 1, lo, hi, state, k, is_face)? {
                    return Ok(true);
                }
                state[v] = 1;
            }
            _ => {}
        }
    }
    Ok(false)
}

fn matches_skeleton(n: usize, lo: &[usize], hi: &[usize], k: usize, is_face: &[bool]) -> bool {
    for mask in 1usize..1 << n {
        if (mask.count_ones() as usize) > k + 1 {
            continue;
        }
        let mut max_lo = 0;
        let mut min_hi = usize::MAX;
        for v in 0..n {
            if mask >> v & 1 == 1 {
                max_lo = max_lo.max(lo[v]);
                min_hi = min_hi.min(hi[v]);
            }
        }
        if (max_lo <= min_hi) != is_face[mask] {
            return false;
        }
    }
    true
}

/// Parameters for the seeded family generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub count: usize,
    pub ambient_dim: usize,
    /// When less than the ambient dimension, every member is confined to a
    /// random flat of this dimension.
    pub flat_dim: Option<usize>,
    /// All generated coordinates have absolute value at most this.
    pub coordinate_bound: i64,
    pub max_generators: usize,
}

impl GeneratorConfig {
    pub fn new(seed: u64, count: usize, ambient_dim: usize) -> Self {
        GeneratorConfig {
            seed,
            count,
            ambient_dim,
            flat_dim: None,
            coordinate_bound: 8,
            max_generators: 6,
        }
    }

    pub fn with_flat_dim(mut self, flat_dim: usize) -> Self {
        self.flat_dim = Some(flat_dim);
        self
    }

    fn validate(&self) -> Result<()> {
        if self.count < 1 {
            return Err(Error::InvalidParameter("count must be at least 1".to_owned()));
        }
        if self.ambient_dim < 1 {
            return Err(Error::ZeroAmbientDimension);
        }
        if let Some(f) = self.flat_dim {
            if f < 1 || f > self.ambient_dim {
                return Err(Error::InvalidParameter(format!(
                    "flat_dim must lie in 1..={}, got {f}",
                    self.ambient_dim
                )));
            }
        }
        if self.coordinate_bound < 1 {
            return Err(Error::InvalidParameter(
                "coordinate_bound must be at least 1".to_owned(),
            ));
        }
        if self.max_generators < 1 {
            return Err(Error::InvalidParameter(
                "max_generators must be at least 1".to_owned(),
            ));
        }
        Ok(())
    }
}

/// Labels members A, B, ..., Z, AA, AB, ... like spreadsheet columns.
pub fn spreadsheet_label(mut i: usize) -> String {
    let mut bytes = Vec::new();
    loop {
        bytes.push(b'A' + (i % 26) as u8);
        i /= 26;
        if i == 0 {
            break;
        }
        i -= 1;
    }
    bytes.reverse();
    String::from_utf8(bytes).expect("ASCII letters")
}

/// Small denominators keep LP pivots from blowing up coefficient sizes.
fn random_rational(rng: &mut ChaCha8Rng, bound_numer_per_denom: i64) -> Rational {
    let denom = rng.gen_range(1..=4i64);
    let range = bound_numer_per_denom * denom;
    rat(rng.gen_range(-range..=range), denom)
}

/// A reproducible random family: a pure function of its configuration.
/// With `flat_dim` set below the ambient dimension, each member's generators
/// are convex-parameter samples inside one random flat, which caps the
/// affine dimension at `flat_dim`; coordinates stay within the bound by
/// splitting it between the flat's offset and the span of the directions.
pub fn random_family(cfg: &GeneratorConfig) -> Result<ConvexFamily> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let d = cfg.ambient_dim;
    let bound = cfg.coordinate_bound;
    let mut members = Vec::with_capacity(cfg.count);
    for i in 0..cfg.count {
        let label = VertexId::new(spreadsheet_label(i)).expect("generated labels are valid");
        let gen_count = rng.gen_range(1..=cfg.max_generators);
        let gens: Vec<Point> = match cfg.flat_dim {
            Some(f) if f < d => {
                let offset: Vec<Rational> = (0..d)
                    .map(|_| {
                        let denom = rng.gen_range(1..=4i64);
                        rat(rng.gen_range(-(bound * denom / 2)..=bound * denom / 2), denom)
                    })
                    .collect();
                let directions: Vec<Vec<Rational>> = loop {
                    let dirs: Vec<Vec<Rational>> = (0..f)
                        .map(|_| (0..d).map(|_| random_rational(&mut rng, 1)).collect())
                        .collect();
                    if crate::geometry::linalg::rank(&dirs) == f {
                        break dirs;
                    }
                };
                (0..gen_count)
                    .map(|_| {
                        let mut coords = offset.clone();
                        for dir in &directions {
                            let denom = rng.gen_range(1..=4i64);
                            let range = bound * denom / (2 * f as i64);
                            let t = rat(rng.gen_range(-range..=range), denom);
                            for (c, dc) in coords.iter_mut().zip(dir) {
                                *c += &t * dc;
                            }
                        }
                        Point::new(coords).expect("ambient dimension >= 1")
                    })
                    .collect()
            }
            _ => (0..gen_count)
                .map(|_| {
                    Point::new((0..d).map(|_| random_rational(&mut rng, bound)).collect())
                        .expect("ambient dimension >= 1")
                })
                .collect(),
        };
        members.push((label, Polytope::new(d, gens).expect("matching dimensions")));
    }
    ConvexFamily::new(d, members)
}
