//! Loading JSON inputs. Every object is validated on load, and a failure names
//! the field path where deserialization stopped.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use tannaka::liere::Character;
use tannaka::schottky::PpavInput;
use tannaka::{CleanCycleModel, GroupRingElement, TensorConstruction};

use crate::UsageError;

pub fn load<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let at = e.path().to_string();
        let at = if at == "." { "top level".to_string() } else { format!("`{at}`") };
        UsageError(format!("{}: invalid input at {at}: {}", path.display(), e.into_inner())).into()
    })
}

pub fn load_cycle(path: &Path) -> Result<CleanCycleModel> {
    load(path)
}

pub fn load_character(path: &Path) -> Result<Character> {
    load(path)
}

pub fn load_ppav(path: &Path) -> Result<PpavInput> {
    load(path)
}

/// A tensor construction together with the group-ring elements it is applied to.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstructionInput {
    pub construction: TensorConstruction,
    pub elements: Vec<GroupRingElement>,
}

/// Data for checking `[e]₊ target = S(candidates)`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InverseGaloisInput {
    pub target: GroupRingElement,
    pub construction: TensorConstruction,
    pub e: i64,
    pub candidates: Vec<GroupRingElement>,
}
