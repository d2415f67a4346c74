//! JSON wire formats for complexes, polytopes, families, certificates, and
//! classification statuses.
//!
//! Rationals travel as strings like "1/2" or "3" so nothing is read back
//! lossily. Writers emit canonical compact JSON with every collection
//! sorted, so equal values always produce identical bytes. Readers accept
//! redundant input where the underlying constructor does, notably
//! non-maximal faces in complex files.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::{face, Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::geometry::{format_rational, parse_rational, Point, Polytope};
use crate::nerve::{Certificate, ConvexFamily};
use crate::oracle::GeneratorConfig;
use crate::recognize::{Status, StatusKind};

#[derive(Serialize, Deserialize)]
struct ComplexFile {
    vertices: Vec<String>,
    maximal_faces: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct PolytopeFile {
    ambient_dim: usize,
    generators: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct MemberFile {
    label: String,
    generators: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct FamilyFile {
    ambient_dim: usize,
    members: Vec<MemberFile>,
}

#[derive(Serialize, Deserialize)]
struct CertificateFile {
    face_points: BTreeMap<String, Vec<String>>,
    padding_points: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize)]
struct StatusFile {
    status: String,
    source: String,
}

#[derive(Serialize, Deserialize)]
struct GeneratorConfigFile {
    seed: u64,
    count: usize,
    ambient_dim: usize,
    #[serde(default)]
    flat_dim: Option<usize>,
    coordinate_bound: i64,
    max_generators: usize,
}

fn emit<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("wire structs always serialize")
}

fn parse<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::MalformedJson(e.to_string()))
}

fn point_to_strings(p: &Point) -> Vec<String> {
    p.coords().iter().map(format_rational).collect()
}

fn point_from_strings(coords: &[String]) -> Result<Point> {
    let parsed = coords.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?;
    Point::new(parsed)
}

pub fn complex_to_json(complex: &SimplicialComplex) -> String {
    emit(&ComplexFile {
        vertices: complex.vertices().iter().map(|v| v.as_str().to_owned()).collect(),
        maximal_faces: complex
            .maximal_faces()
            .iter()
            .map(|f| f.iter().map(|v| v.as_str().to_owned()).collect())
            .collect(),
    })
}

pub fn complex_from_json(text: &str) -> Result<SimplicialComplex> {
    let file: ComplexFile = parse(text)?;
    let vertices = file
        .vertices
        .into_iter()
        .map(VertexId::new)
        .collect::<Result<Vec<_>>>()?;
    let faces = file
        .maximal_faces
        .into_iter()
        .map(face)
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::from_declared(vertices, faces)
}

pub fn polytope_to_json(p: &Polytope) -> String {
    emit(&PolytopeFile {
        ambient_dim: p.ambient_dim(),
        generators: p.generators().iter().map(point_to_strings).collect(),
    })
}

pub fn polytope_from_json(text: &str) -> Result<Polytope> {
    let file: PolytopeFile = parse(text)?;
    let gens = file
        .generators
        .iter()
        .map(|coords| point_from_strings(coords))
        .collect::<Result<_>>()?;
    Polytope::new(file.ambient_dim, gens)
}

pub fn family_to_json(f: &ConvexFamily) -> String {
    emit(&FamilyFile {
        ambient_dim: f.ambient_dim(),
        members: f
            .members()
            .iter()
            .map(|(label, set)| MemberFile {
                label: label.as_str().to_owned(),
                generators: set.generators().iter().map(point_to_strings).collect(),
            })
            .collect(),
    })
}

pub fn family_from_json(text: &str) -> Result<ConvexFamily> {
    let file: FamilyFile = parse(text)?;
    let members = file
        .members
        .into_iter()
        .map(|m| {
            let gens = m
                .generators
                .iter()
                .map(|coords| point_from_strings(coords))
                .collect::<Result<_>>()?;
            Ok((VertexId::new(m.label)?, Polytope::new(file.ambient_dim, gens)?))
        })
        .collect::<Result<Vec<_>>>()?;
    ConvexFamily::new(file.ambient_dim, members)
}

/// Certificate face keys are the face's sorted labels joined with commas,
/// unambiguous because labels cannot contain commas.
fn face_key(f: &Face) -> String {
    f.iter().map(VertexId::as_str).collect::<Vec<_>>().join(",")
}

pub fn certificate_to_json(cert: &Certificate) -> String {
    emit(&CertificateFile {
        face_points: cert
            .face_points()
            .iter()
            .map(|(f, p)| (face_key(f), point_to_strings(p)))
            .collect(),
        padding_points: cert
            .padding_points()
            .iter()
            .map(|(v, points)| {
                (
                    v.as_str().to_owned(),
                    points.iter().map(point_to_strings).collect(),
                )
            })
            .collect(),
    })
}

pub fn certificate_from_json(text: &str) -> Result<Certificate> {
    let file: CertificateFile = parse(text)?;
    let mut face_points = BTreeMap::new();
    for (key, coords) in &file.face_points {
        let f = face(key.split(','))?;
        face_points.insert(f, point_from_strings(coords)?);
    }
    let mut padding_points = BTreeMap::new();
    for (label, points) in &file.padding_points {
        let v = VertexId::new(label.clone())?;
        let parsed = points
            .iter()
            .map(|coords| point_from_strings(coords))
            .collect::<Result<_>>()?;
        padding_points.insert(v, parsed);
    }
    Ok(Certificate::new(face_points, padding_points))
}

fn status_kind_name(kind: StatusKind) -> &'static str {
    match kind {
        StatusKind::Polynomial => "Polynomial",
        StatusKind::ExistsRComplete => "ExistsRComplete",
        StatusKind::Trivial => "Trivial",
        StatusKind::OpenInExistsR => "OpenInExistsR",
    }
}

pub fn status_to_json(status: &Status) -> String {
    emit(&StatusFile {
        status: status_kind_name(status.kind).to_owned(),
        source: status.source.clone(),
    })
}

pub fn status_from_json(text: &str) -> Result<Status> {
    let file: StatusFile = parse(text)?;
    let kind = match file.status.as_str() {
        "Polynomial" => StatusKind::Polynomial,
        "ExistsRComplete" => StatusKind::ExistsRComplete,
        "Trivial" => StatusKind::Trivial,
        "OpenInExistsR" => StatusKind::OpenInExistsR,
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown status `{other}`"
            )))
        }
    };
    Ok(Status {
        kind,
        source: file.source,
    })
}

pub fn generator_config_to_json(cfg: &GeneratorConfig) -> String {
    emit(&GeneratorConfigFile {
        seed: cfg.seed,
        count: cfg.count,
        ambient_dim: cfg.ambient_dim,
        flat_dim: cfg.flat_dim,
        coordinate_bound: cfg.coordinate_bound,
        max_generators: cfg.max_generators,
    })
}

pub fn generator_config_from_json(text: &str) -> Result<GeneratorConfig> {
    let file: GeneratorConfigFile = parse(text)?;
    Ok(GeneratorConfig {
        seed: file.seed,
        count: file.count,
        ambient_dim: file.ambient_dim,
        flat_dim: file.flat_dim,
        coordinate_bound: file.coordinate_bound,
        max_generators: file.max_generators,
    })
}
