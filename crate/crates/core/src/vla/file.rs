//! On-disk schema for presentations.
//!
//! Files are JSON. Rational values are strings `"p"` or `"p/q"`. Unknown keys
//! are rejected everywhere.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TranslationKind {
    /// `U` is free over `C[D]` on the generators.
    #[default]
    Free,
    /// `D` acts as zero on `U`.
    Zero,
}

impl TranslationKind {
    fn is_free(&self) -> bool {
        *self == TranslationKind::Free
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub name: String,
    #[serde(rename = "N")]
    pub loop_n: i64,
    #[serde(default, skip_serializing_if = "TranslationKind::is_free")]
    pub translation: TranslationKind,
    pub generators: Vec<GeneratorDecl>,
    #[serde(default)]
    pub centrals: Vec<CentralDecl>,
    #[serde(default)]
    pub differential: BTreeMap<String, Vec<TermDecl>>,
    #[serde(default)]
    pub products: Vec<ProductDecl>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<FormEntry>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDecl {
    pub id: String,
    pub degree: i64,
    pub weight: Scalar,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CentralDecl {
    pub id: String,
    pub degree: i64,
}

/// One term of an element: `coeff * D^dpower gen` or `coeff * central`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDecl {
    pub coeff: Scalar,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dpower: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gen: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub central: Option<String>,
}

impl TermDecl {
    pub fn gen(coeff: Scalar, dpower: u32, gen: &str) -> Self {
        TermDecl { coeff, dpower: Some(dpower), gen: Some(gen.to_string()), central: None }
    }

    pub fn central(coeff: Scalar, central: &str) -> Self {
        TermDecl { coeff, dpower: None, gen: None, central: Some(central.to_string()) }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductDecl {
    pub left: String,
    pub n: u32,
    pub right: String,
    pub result: Vec<TermDecl>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormEntry {
    pub left: String,
    pub right: String,
    pub value: Scalar,
}

impl PresentationFile {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Canonical pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("presentation serializes");
        s.push('\n');
        s
    }
}
