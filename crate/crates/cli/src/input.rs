//! JSON schemas for triangulations, presentations and modules.

use serde::{Deserialize, Serialize};
use syzygy_core::polygon::{Chord, PolygonTriangulation};
use syzygy_core::surface::{notched, peripheral, plain, Tag, TaggedArc, Triangulation};
use syzygy_core::{AlgebraPresentation, Field, PathWord, Quiver, RelationElement, Rep};

use crate::CliError;

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum TagJson {
    Plain,
    Notched,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum ArcJson {
    Radial { at: usize, tag: TagJson },
    Peripheral { from: usize, to: usize },
    Chord { from: usize, to: usize },
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum SurfaceJson {
    PuncturedDisc,
    Polygon,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriangulationJson {
    pub surface: SurfaceJson,
    pub n: usize,
    pub arcs: Vec<ArcJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowJson {
    pub id: String,
    pub from: String,
    pub to: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: i64,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationJson {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowJson>,
    pub relations: Vec<Vec<TermJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub char: Option<u32>,
}

/// A representation: dimensions, then one row-major matrix per arrow.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepJson {
    pub dims: Vec<usize>,
    pub maps: Vec<Vec<Vec<u32>>>,
}

impl From<&Rep> for RepJson {
    fn from(m: &Rep) -> Self {
        let maps = m
            .maps
            .iter()
            .map(|a| (0..a.rows()).map(|r| (0..a.cols()).map(|c| a.get(r, c)).collect()).collect())
            .collect();
        RepJson { dims: m.dims.clone(), maps }
    }
}

#[derive(Clone, Debug)]
pub enum Input {
    Punctured(Triangulation),
    Polygon(PolygonTriangulation),
    Algebra(AlgebraPresentation),
}

impl Input {
    pub fn presentation(&self, f: Field) -> Result<AlgebraPresentation, CliError> {
        Ok(match self {
            Input::Punctured(t) => t.presentation(f)?,
            Input::Polygon(t) => t.presentation(f)?,
            Input::Algebra(p) => p.clone(),
        })
    }
}

pub fn arc_json(a: &TaggedArc) -> ArcJson {
    match *a {
        TaggedArc::Radial { at, tag } => {
            ArcJson::Radial { at, tag: if tag == Tag::Plain { TagJson::Plain } else { TagJson::Notched } }
        }
        TaggedArc::Peripheral { from, to } => ArcJson::Peripheral { from, to },
    }
}

pub fn triangulation_json(t: &Triangulation) -> TriangulationJson {
    TriangulationJson { surface: SurfaceJson::PuncturedDisc, n: t.n, arcs: t.arcs.iter().map(arc_json).collect() }
}

pub fn polygon_json(t: &PolygonTriangulation) -> TriangulationJson {
    TriangulationJson {
        surface: SurfaceJson::Polygon,
        n: t.n,
        arcs: t.chords.iter().map(|c| ArcJson::Chord { from: c.a, to: c.b }).collect(),
    }
}

pub fn presentation_json(p: &AlgebraPresentation) -> PresentationJson {
    let q = &p.quiver;
    PresentationJson {
        vertices: q.vertices.clone(),
        arrows: q
            .arrows
            .iter()
            .map(|a| ArrowJson { id: a.name.clone(), from: q.vertices[a.source].clone(), to: q.vertices[a.target].clone() })
            .collect(),
        relations: p
            .relations
            .iter()
            .map(|r| {
                r.terms
                    .iter()
                    .map(|(c, w)| TermJson {
                        coeff: p.field.to_signed(*c),
                        path: w.arrows.iter().map(|&a| q.arrows[a].name.clone()).collect(),
                    })
                    .collect()
            })
            .collect(),
        char: Some(p.field.characteristic()),
    }
}

fn json_error(e: serde_json::Error) -> CliError {
    CliError::Input(format!("line {}, column {}: {e}", e.line(), e.column()))
}

fn triangulation(t: TriangulationJson) -> Result<Input, CliError> {
    match t.surface {
        SurfaceJson::PuncturedDisc => {
            let mut arcs = Vec::with_capacity(t.arcs.len());
            for (k, a) in t.arcs.into_iter().enumerate() {
                arcs.push(match a {
                    ArcJson::Radial { at, tag: TagJson::Plain } => plain(at),
                    ArcJson::Radial { at, tag: TagJson::Notched } => notched(at),
                    ArcJson::Peripheral { from, to } => peripheral(from, to),
                    ArcJson::Chord { .. } => {
                        return Err(CliError::Input(format!("arcs[{k}]: chords belong to polygon inputs")))
                    }
                });
            }
            Ok(Input::Punctured(Triangulation::new(t.n, arcs)?))
        }
        SurfaceJson::Polygon => {
            let mut chords = Vec::with_capacity(t.arcs.len());
            for (k, a) in t.arcs.into_iter().enumerate() {
                match a {
                    ArcJson::Chord { from, to } => chords.push(Chord::new(t.n, from, to)?),
                    _ => return Err(CliError::Input(format!("arcs[{k}]: polygon inputs take chords only"))),
                }
            }
            Ok(Input::Polygon(PolygonTriangulation::new(t.n, chords)?))
        }
    }
}

fn presentation(p: PresentationJson, char_override: Option<u32>) -> Result<Input, CliError> {
    let f = Field::new(char_override.or(p.char).unwrap_or(syzygy_core::field::DEFAULT_CHARACTERISTIC))?;
    let mut q = Quiver::new();
    for v in &p.vertices {
        if q.vertex_index(v).is_some() {
            return Err(CliError::Input(format!("vertices: duplicate name {v:?}")));
        }
        q.add_vertex(v.clone());
    }
    for (k, a) in p.arrows.iter().enumerate() {
        let s = q.vertex_index(&a.from).ok_or_else(|| CliError::Input(format!("arrows[{k}].from: unknown vertex {:?}", a.from)))?;
        let t = q.vertex_index(&a.to).ok_or_else(|| CliError::Input(format!("arrows[{k}].to: unknown vertex {:?}", a.to)))?;
        if q.arrow_index(&a.id).is_some() {
            return Err(CliError::Input(format!("arrows[{k}].id: duplicate name {:?}", a.id)));
        }
        q.add_arrow(a.id.clone(), s, t);
    }
    let mut rels = Vec::with_capacity(p.relations.len());
    for (r, terms) in p.relations.iter().enumerate() {
        let mut out = Vec::with_capacity(terms.len());
        for (k, t) in terms.iter().enumerate() {
            let at = || format!("relations[{r}][{k}].path");
            if t.path.is_empty() {
                return Err(CliError::Input(format!("{}: empty path", at())));
            }
            let mut arrows = Vec::with_capacity(t.path.len());
            for name in &t.path {
                arrows.push(q.arrow_index(name).ok_or_else(|| CliError::Input(format!("{}: unknown arrow {name:?}", at())))?);
            }
            let w = PathWord::from_arrows(&q, arrows).map_err(|e| CliError::Input(format!("{}: {e}", at())))?;
            out.push((f.from_i64(t.coeff), w));
        }
        rels.push(RelationElement { terms: out });
    }
    Ok(Input::Algebra(AlgebraPresentation::new(q, rels, f).validate()?))
}

/// Parses either schema; the presence of `surface` selects a triangulation.
pub fn parse(text: &str, char_override: Option<u32>) -> Result<Input, CliError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(json_error)?;
    if value.get("surface").is_some() {
        triangulation(serde_json::from_str(text).map_err(json_error)?)
    } else {
        presentation(serde_json::from_str(text).map_err(json_error)?, char_override)
    }
}
