//! JSON documents for arcs, configurations and pairs, and incidence exports.
//!
//! Coordinates are written as residues over a prime field and as coefficient
//! arrays (constant term first) over an extension field. Readers also accept a
//! bare integer code for extension elements. Subspaces are RREF basis matrices.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arcs::Arc;
use crate::desargues::{Label, LabeledConfiguration, PerspectivePair};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::projlin::{span, ProjPoint, Subspace};

pub type Coords = Vec<Value>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledPointDoc {
    pub label: Label,
    pub coords: Coords,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigDoc {
    pub n: usize,
    pub field: FieldSpec,
    pub points: Vec<LabeledPointDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairDoc {
    pub n: usize,
    pub field: FieldSpec,
    pub a: Vec<Coords>,
    pub b: Vec<Coords>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<Coords>,
    /// Basis of a hyperplane of PG(n+1, q) whose local coordinates the pair uses.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hyperplane: Option<Vec<Coords>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArcDoc {
    pub n: usize,
    pub field: FieldSpec,
    pub points: Vec<Coords>,
    /// Basis of a hyperplane of PG(n, q), typically the one to section by.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hyperplane: Option<Vec<Coords>>,
}

pub fn element_to_json(field: &Field, code: u32) -> Value {
    if field.is_prime_field() {
        Value::from(code)
    } else {
        Value::from(field.coeffs(code))
    }
}

pub fn element_from_json(field: &Field, v: &Value) -> Result<u32> {
    match v {
        Value::Number(n) => {
            let code = n.as_u64().ok_or_else(|| Error::Format(format!("bad field element {v}")))?;
            let code = u32::try_from(code).map_err(|_| Error::BadElement(u32::MAX))?;
            field.element(code).map(|e| e.code())
        }
        Value::Array(cs) => {
            let coeffs = cs
                .iter()
                .map(|c| c.as_u64().and_then(|x| u32::try_from(x).ok()))
                .collect::<Option<Vec<u32>>>()
                .ok_or_else(|| Error::Format(format!("bad coefficient array {v}")))?;
            field.from_coeffs(&coeffs)
        }
        _ => Err(Error::Format(format!("bad field element {v}"))),
    }
}

pub fn codes_to_json(field: &Field, codes: &[u32]) -> Coords {
    codes.iter().map(|&c| element_to_json(field, c)).collect()
}

pub fn codes_from_json(field: &Field, coords: &[Value]) -> Result<Vec<u32>> {
    coords.iter().map(|v| element_from_json(field, v)).collect()
}

pub fn point_to_json(p: &ProjPoint) -> Coords {
    codes_to_json(p.field(), p.codes())
}

pub fn point_from_json(field: &Field, coords: &[Value]) -> Result<ProjPoint> {
    ProjPoint::from_codes(field, &codes_from_json(field, coords)?)
}

fn check_ambient(p: &ProjPoint, n: usize) -> Result<()> {
    if p.ambient() != n {
        return Err(Error::AmbientMismatch(n, p.ambient()));
    }
    Ok(())
}

pub fn subspace_to_json(s: &Subspace) -> Vec<Coords> {
    s.basis().iter().map(|r| codes_to_json(s.field(), r)).collect()
}

pub fn subspace_from_json(field: &Field, ambient: usize, rows: &[Coords]) -> Result<Subspace> {
    let rows = rows.iter().map(|r| codes_from_json(field, r)).collect::<Result<Vec<_>>>()?;
    Subspace::from_codes(field, ambient, &rows)
}

fn hyperplane_from_json(field: &Field, ambient: usize, rows: &[Coords]) -> Result<Subspace> {
    let h = subspace_from_json(field, ambient, rows)?;
    if !h.is_hyperplane() {
        return Err(Error::NotAHyperplane { dim: h.dim(), ambient });
    }
    Ok(h)
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}

fn render<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn config_to_doc(config: &LabeledConfiguration) -> ConfigDoc {
    ConfigDoc {
        n: config.ambient(),
        field: config.field().spec().clone(),
        points: config
            .table()
            .iter()
            .map(|(&label, p)| LabeledPointDoc { label, coords: point_to_json(p) })
            .collect(),
    }
}

pub fn config_from_doc(doc: &ConfigDoc) -> Result<LabeledConfiguration> {
    let field = Field::new(doc.field.clone())?;
    let mut table = BTreeMap::new();
    for entry in &doc.points {
        let p = point_from_json(&field, &entry.coords)?;
        check_ambient(&p, doc.n)?;
        if table.insert(entry.label, p).is_some() {
            return Err(Error::BadTable(format!("label {} appears twice", entry.label)));
        }
    }
    LabeledConfiguration::new(&field, doc.n, table)
}

pub fn config_to_json(config: &LabeledConfiguration) -> String {
    render(&config_to_doc(config))
}

pub fn config_from_json(text: &str) -> Result<LabeledConfiguration> {
    config_from_doc(&parse(text)?)
}

/// A pair read from disk, with whatever optional parts the file carried.
#[derive(Debug, Clone)]
pub struct PairFile {
    pub pair: PerspectivePair,
    pub vertex: Option<ProjPoint>,
    pub hyperplane: Option<Subspace>,
}

pub fn pair_to_json(pair: &PerspectivePair, vertex: Option<&ProjPoint>, h: Option<&Subspace>) -> String {
    render(&PairDoc {
        n: pair.ambient(),
        field: pair.field().spec().clone(),
        a: pair.a().iter().map(point_to_json).collect(),
        b: pair.b().iter().map(point_to_json).collect(),
        vertex: vertex.map(point_to_json),
        hyperplane: h.map(subspace_to_json),
    })
}

pub fn pair_from_json(text: &str) -> Result<PairFile> {
    let doc: PairDoc = parse(text)?;
    let field = Field::new(doc.field.clone())?;
    let side = |pts: &[Coords]| -> Result<Vec<ProjPoint>> {
        pts.iter()
            .map(|c| {
                let p = point_from_json(&field, c)?;
                check_ambient(&p, doc.n)?;
                Ok(p)
            })
            .collect()
    };
    let pair = PerspectivePair::new(side(&doc.a)?, side(&doc.b)?)?;
    let vertex = doc.vertex.as_ref().map(|c| side(std::slice::from_ref(c)).map(|mut v| v.remove(0))).transpose()?;
    let hyperplane = doc.hyperplane.as_ref().map(|rows| hyperplane_from_json(&field, doc.n + 1, rows)).transpose()?;
    Ok(PairFile { pair, vertex, hyperplane })
}

pub fn arc_to_json(arc: &Arc, h: Option<&Subspace>) -> String {
    render(&ArcDoc {
        n: arc.ambient(),
        field: arc.field().spec().clone(),
        points: arc.points().iter().map(point_to_json).collect(),
        hyperplane: h.map(subspace_to_json),
    })
}

pub fn arc_from_json(text: &str) -> Result<(Arc, Option<Subspace>)> {
    let doc: ArcDoc = parse(text)?;
    let field = Field::new(doc.field.clone())?;
    let pts = doc
        .points
        .iter()
        .map(|c| {
            let p = point_from_json(&field, c)?;
            check_ambient(&p, doc.n)?;
            Ok(p)
        })
        .collect::<Result<Vec<_>>>()?;
    let arc = Arc::new(pts)?;
    let h = doc.hyperplane.as_ref().map(|rows| hyperplane_from_json(&field, doc.n, rows)).transpose()?;
    Ok((arc, h))
}

/// Point-line incidence of a configuration against its symbol-triangle lines.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Incidence {
    /// Row labels, "i-j".
    pub points: Vec<String>,
    /// Column labels, "i-j-k".
    pub lines: Vec<String>,
    pub matrix: Vec<Vec<u8>>,
}

/// Entry (r, c) is 1 iff point r lies on the line through the three points of triangle c.
pub fn incidence(config: &LabeledConfiguration) -> Result<Incidence> {
    let s = config.symbols();
    let triples: Vec<(u8, u8, u8)> = (1..=s).tuple_combinations().collect();
    let lines = triples
        .iter()
        .map(|&(i, j, k)| span(&[config.get(i, j)?.clone(), config.get(i, k)?.clone(), config.get(j, k)?.clone()]))
        .collect::<Result<Vec<_>>>()?;
    let matrix = config
        .table()
        .values()
        .map(|p| lines.iter().map(|l| u8::from(l.contains_point(p))).collect())
        .collect();
    Ok(Incidence {
        points: config.table().keys().map(Label::to_string).collect(),
        lines: triples.iter().map(|(i, j, k)| format!("{i}-{j}-{k}")).collect(),
        matrix,
    })
}

impl Incidence {
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header = std::iter::once("point").chain(self.lines.iter().map(String::as_str));
        w.write_record(header).expect("in-memory write");
        for (label, row) in self.points.iter().zip(&self.matrix) {
            let cells = std::iter::once(label.clone()).chain(row.iter().map(u8::to_string));
            w.write_record(cells).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii")
    }

    pub fn to_json(&self) -> String {
        render(self)
    }
}
