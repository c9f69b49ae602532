use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use twotrace::algebras::{ActionJson, GroupAction};
use twotrace::cocycles::GroupSpec;
use twotrace::groups::FiniteGroup;
use twotrace::{Algebra, CycScalar};

use crate::report::InputDigest;
use crate::Target;

pub struct Loaded<T> {
    pub value: T,
    pub digest: InputDigest,
}

pub fn load<T: DeserializeOwned>(path: &Path) -> Result<Loaded<T>> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let value = serde_json::from_slice(&bytes).with_context(|| format!("parsing {}", path.display()))?;
    Ok(Loaded {
        value,
        digest: InputDigest::of(&path.display().to_string(), &bytes),
    })
}

/// `{"algebra": {...}, "group": ..., "auto": [...]}`.
#[derive(Deserialize)]
pub struct ActionFile {
    pub algebra: Algebra,
    pub group: GroupSpec,
    pub auto: Vec<Vec<Vec<CycScalar>>>,
}

impl ActionFile {
    pub fn build(self) -> Result<GroupAction<CycScalar>> {
        let json = ActionJson {
            group: self.group,
            auto: self.auto,
        };
        Ok(GroupAction::from_json(json, Arc::new(self.algebra))?)
    }
}

pub fn check_order(g: &FiniteGroup, cap: usize) -> Result<()> {
    if g.order() > cap {
        bail!("group order {} exceeds --cap-order {cap}", g.order());
    }
    Ok(())
}

impl Target {
    pub fn one_input(&self) -> Result<&Path> {
        match self.input.as_slice() {
            [p] => Ok(p),
            _ => bail!("expected exactly one --input, got {}", self.input.len()),
        }
    }

    pub fn two_inputs(&self) -> Result<(&Path, &Path)> {
        match self.input.as_slice() {
            [a, b] => Ok((a, b)),
            _ => bail!("expected two --input files, got {}", self.input.len()),
        }
    }

    pub fn modulus(&self) -> Result<u32> {
        self.modulus.context("--modulus is required")
    }

    /// The group from `--group`, or from a group JSON given as `--input`.
    pub fn resolve_group(&self, cap: usize) -> Result<(Arc<FiniteGroup>, Vec<InputDigest>)> {
        let (g, digests) = match (&self.group, self.input.as_slice()) {
            (Some(name), []) => (FiniteGroup::by_name(name)?, vec![]),
            (None, [p]) => {
                let l: Loaded<FiniteGroup> = load(p)?;
                (l.value, vec![l.digest])
            }
            _ => bail!("give either --group or one --input group file"),
        };
        check_order(&g, cap)?;
        Ok((Arc::new(g), digests))
    }
}
