//! JSON file formats. Every element is 1-based on disk; unknown fields are
//! rejected. Structural errors carry a JSON pointer to the offending value.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::action::{MagmaAction, RMagma};
use crate::algebra::{FiniteMagma, FiniteMap};
use crate::error::AlgebraError;
use crate::semibiproduct::{PseudoActionData, Semibiproduct};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("at {pointer}: {message}")]
    Schema { pointer: String, message: String },
}

fn schema(pointer: impl Into<String>, message: impl Into<String>) -> IoError {
    IoError::Schema {
        pointer: pointer.into(),
        message: message.into(),
    }
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MagmaFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub dom: usize,
    pub cod: usize,
    pub values: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    #[serde(rename = "X")]
    pub x: usize,
    #[serde(rename = "B")]
    pub b: usize,
    pub theta: Vec<Vec<usize>>,
    /// Row-major over `(x, b, x', b')`.
    pub phi: Vec<usize>,
    pub h: Vec<usize>,
    pub t: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SbpFile {
    #[serde(rename = "X")]
    pub x: MagmaFile,
    #[serde(rename = "A")]
    pub a: MagmaFile,
    #[serde(rename = "B")]
    pub b: MagmaFile,
    pub k: Vec<usize>,
    pub p: Vec<usize>,
    pub q: Vec<usize>,
    pub s: Vec<usize>,
}

/// The correction system, pre-action, factor system and `R` of a
/// semibiproduct; write-only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedFile {
    pub h: Vec<usize>,
    pub rho: Vec<Vec<usize>>,
    pub phi: Vec<Vec<usize>>,
    pub gamma: Vec<Vec<usize>>,
    pub t: Vec<usize>,
    #[serde(rename = "R")]
    pub r: Vec<[usize; 2]>,
    #[serde(rename = "R_table")]
    pub r_table: Vec<Vec<usize>>,
}

fn one_based_entry(pointer: String, value: usize, order: usize) -> Result<usize, IoError> {
    if value == 0 || value > order {
        return Err(schema(pointer, format!("entry {value} is outside 1..={order}")));
    }
    Ok(value - 1)
}

fn read_table(base: &str, order: usize, rows: &[Vec<usize>]) -> Result<FiniteMagma, IoError> {
    if order == 0 {
        return Err(schema(base, "order must be at least 1"));
    }
    if rows.len() != order {
        return Err(schema(base, format!("table has {} rows, expected {order}", rows.len())));
    }
    let mut flat = Vec::with_capacity(order * order);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != order {
            return Err(schema(
                format!("{base}/{i}"),
                format!("row has {} entries, expected {order}", row.len()),
            ));
        }
        for (j, &v) in row.iter().enumerate() {
            flat.push(one_based_entry(format!("{base}/{i}/{j}"), v, order)?);
        }
    }
    Ok(FiniteMagma::from_flat(order, flat).expect("validated"))
}

fn read_map(base: &str, dom: usize, cod: usize, values: &[usize]) -> Result<FiniteMap, IoError> {
    if dom == 0 || cod == 0 {
        return Err(schema(base, "domain and codomain must be non-empty"));
    }
    if values.len() != dom {
        return Err(schema(base, format!("{} values, expected {dom}", values.len())));
    }
    let zero = values
        .iter()
        .enumerate()
        .map(|(i, &v)| one_based_entry(format!("{base}/{i}"), v, cod))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FiniteMap::new(cod, zero).expect("validated"))
}

fn rows_of(m: &FiniteMagma) -> Vec<Vec<usize>> {
    m.rows_one_based()
}

impl MagmaFile {
    fn to_magma_at(&self, base: &str) -> Result<FiniteMagma, IoError> {
        read_table(&format!("{base}/table"), self.order, &self.table)
    }

    pub fn to_magma(&self) -> Result<FiniteMagma, IoError> {
        self.to_magma_at("")
    }
}

impl From<&FiniteMagma> for MagmaFile {
    fn from(m: &FiniteMagma) -> Self {
        MagmaFile {
            order: m.order(),
            table: rows_of(m),
        }
    }
}

impl MapFile {
    pub fn to_map(&self) -> Result<FiniteMap, IoError> {
        read_map("/values", self.dom, self.cod, &self.values)
    }
}

impl From<&FiniteMap> for MapFile {
    fn from(f: &FiniteMap) -> Self {
        MapFile {
            dom: f.dom(),
            cod: f.cod(),
            values: f.one_based(),
        }
    }
}

impl ActionFile {
    pub fn to_action(&self) -> Result<MagmaAction, IoError> {
        let theta = read_table("/theta", self.b, &self.theta)?;
        if self.x == 0 {
            return Err(schema("/X", "order must be at least 1"));
        }
        let h = read_map("/h", self.x, self.b, &self.h)?;
        let t = read_map("/t", self.b, self.x, &self.t)?;
        let expected = (self.x * self.b).pow(2);
        if self.phi.len() != expected {
            return Err(schema("/phi", format!("{} entries, expected {expected}", self.phi.len())));
        }
        let phi = self
            .phi
            .iter()
            .enumerate()
            .map(|(i, &v)| one_based_entry(format!("/phi/{i}"), v, self.x))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MagmaAction::new(theta, phi, h, t).expect("validated"))
    }
}

impl From<&MagmaAction> for ActionFile {
    fn from(a: &MagmaAction) -> Self {
        ActionFile {
            x: a.x_order(),
            b: a.b_order(),
            theta: rows_of(a.theta()),
            phi: a.phi_table().iter().map(|v| v + 1).collect(),
            h: a.h().one_based(),
            t: a.t().one_based(),
        }
    }
}

impl SbpFile {
    pub fn to_sbp(&self) -> Result<Semibiproduct, IoError> {
        let x = self.x.to_magma_at("/X")?;
        let a = self.a.to_magma_at("/A")?;
        let b = self.b.to_magma_at("/B")?;
        let (nx, na, nb) = (x.order(), a.order(), b.order());
        let k = read_map("/k", nx, na, &self.k)?;
        let p = read_map("/p", na, nb, &self.p)?;
        let q = read_map("/q", na, nx, &self.q)?;
        let s = read_map("/s", nb, na, &self.s)?;
        Ok(Semibiproduct::new(x, a, b, k, p, q, s).expect("validated"))
    }
}

impl From<&Semibiproduct> for SbpFile {
    fn from(sb: &Semibiproduct) -> Self {
        SbpFile {
            x: (&sb.x).into(),
            a: (&sb.a).into(),
            b: (&sb.b).into(),
            k: sb.k.one_based(),
            p: sb.p.one_based(),
            q: sb.q.one_based(),
            s: sb.s.one_based(),
        }
    }
}

impl DerivedFile {
    pub fn new(data: &PseudoActionData, r: &RMagma) -> Self {
        DerivedFile {
            h: data.h.one_based(),
            rho: data.rho.rows_one_based(),
            phi: data.phi_pre.rows_one_based(),
            gamma: data.gamma.rows_one_based(),
            t: data.t.one_based(),
            r: r.pairs.iter().map(|&(x, b)| [x + 1, b + 1]).collect(),
            r_table: r.magma.rows_one_based(),
        }
    }
}

pub fn parse_magma(text: &str) -> Result<FiniteMagma, IoError> {
    serde_json::from_str::<MagmaFile>(text)?.to_magma()
}

pub fn parse_map(text: &str) -> Result<FiniteMap, IoError> {
    serde_json::from_str::<MapFile>(text)?.to_map()
}

pub fn parse_action(text: &str) -> Result<MagmaAction, IoError> {
    serde_json::from_str::<ActionFile>(text)?.to_action()
}

pub fn parse_sbp(text: &str) -> Result<Semibiproduct, IoError> {
    serde_json::from_str::<SbpFile>(text)?.to_sbp()
}

fn compact<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

pub fn magma_to_json(m: &FiniteMagma) -> String {
    compact(&MagmaFile::from(m))
}

pub fn map_to_json(f: &FiniteMap) -> String {
    compact(&MapFile::from(f))
}

pub fn action_to_json(a: &MagmaAction) -> String {
    compact(&ActionFile::from(a))
}

pub fn sbp_to_json(sb: &Semibiproduct) -> String {
    compact(&SbpFile::from(sb))
}

/// Lifts a structural error raised after parsing into a schema error at
/// the document root.
impl From<AlgebraError> for IoError {
    fn from(e: AlgebraError) -> Self {
        schema("", e.to_string())
    }
}
