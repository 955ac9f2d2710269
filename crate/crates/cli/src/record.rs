//! The structured record format. Every record is a JSON object carrying
//! `"schema": "unbias/v1"` and a `"kind"`; unknown fields are ignored on
//! input, so result records can be fed back as inputs.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use unbias_core::finspan::{FinFun, Span};

use crate::error::CliError;
use crate::syntax::{parse_obj, render_obj, Obj};

pub const SCHEMA: &str = "unbias/v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunRecord {
    pub src: usize,
    pub dst: usize,
    pub img: Vec<usize>,
}

impl FunRecord {
    pub fn of(f: &FinFun) -> Self {
        FunRecord { src: f.src(), dst: f.dst(), img: f.images().to_vec() }
    }

    pub fn to_fun(&self) -> Result<FinFun, CliError> {
        if self.img.len() != self.src {
            return Err(CliError::Record(format!("function declares src {} but has {} images", self.src, self.img.len())));
        }
        Ok(FinFun::new(self.dst, self.img.clone())?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanRecord {
    pub left: FunRecord,
    pub right: FunRecord,
}

impl SpanRecord {
    pub fn of(s: &Span) -> Self {
        SpanRecord { left: FunRecord::of(s.left()), right: FunRecord::of(s.right()) }
    }

    pub fn to_span(&self) -> Result<Span, CliError> {
        Ok(Span::new(self.left.to_fun()?, self.right.to_fun()?)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub size: usize,
    pub values: Vec<String>,
}

impl FamilyRecord {
    pub fn of(values: &[Obj]) -> Self {
        FamilyRecord { size: values.len(), values: values.iter().map(render_obj).collect() }
    }

    pub fn objects(&self) -> Result<Vec<Obj>, CliError> {
        if self.values.len() != self.size {
            return Err(CliError::Record(format!("family declares size {} but has {} values", self.size, self.values.len())));
        }
        self.values.iter().map(|v| parse_obj(v)).collect()
    }
}

#[derive(Serialize)]
struct Envelope<'a, T> {
    schema: &'a str,
    kind: &'a str,
    #[serde(flatten)]
    payload: T,
}

/// One line of JSON: the payload's fields after `schema` and `kind`.
pub fn envelope(kind: &str, payload: impl Serialize) -> String {
    serde_json::to_string(&Envelope { schema: SCHEMA, kind, payload }).expect("records serialize")
}

fn open<T: for<'de> Deserialize<'de>>(text: &str, kind: &str) -> Result<T, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Record(e.to_string()))?;
    match v.get("schema").and_then(Value::as_str) {
        Some(SCHEMA) => {}
        Some(other) => return Err(CliError::Record(format!("unsupported schema `{other}`, expected `{SCHEMA}`"))),
        None => return Err(CliError::Record("missing `schema` field".into())),
    }
    match v.get("kind").and_then(Value::as_str) {
        Some(k) if k == kind => {}
        Some(k) => return Err(CliError::Record(format!("expected a `{kind}` record, found `{k}`"))),
        None => return Err(CliError::Record("missing `kind` field".into())),
    }
    serde_json::from_value(v).map_err(|e| CliError::Record(e.to_string()))
}

pub fn read_span(text: &str) -> Result<Span, CliError> {
    open::<SpanRecord>(text, "span")?.to_span()
}

pub fn read_family(text: &str) -> Result<Vec<Obj>, CliError> {
    open::<FamilyRecord>(text, "family")?.objects()
}
