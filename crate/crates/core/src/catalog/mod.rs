//! Built-in groups and user-supplied group files.
//!
//! A group spec is either a builtin expression or a path to a group file.
//! Builtin expressions are products of factors separated by `*`, where each
//! factor is `name:param` (or the compact `S3`, `D4`, `Q8`, `H5` forms),
//! optionally raised to a direct power with `^k`:
//!
//! ```text
//! symmetric:3        S3        dihedral:5^2        Q8*C2
//! ```

mod families;
mod format;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub use families::{
    Alternating, Cyclic, Dihedral, GroupFamily, Heisenberg, Quaternion8, Symmetric,
};
pub use format::{dump_group, load_group, parse_group};

use crate::error::{Error, Result};
use crate::group::{GroupTable, Limits};

/// Registry of group families, keyed by name.
pub struct Catalog {
    families: BTreeMap<&'static str, Box<dyn GroupFamily>>,
}

impl Default for Catalog {
    fn default() -> Self {
        let mut c = Self::empty();
        c.register(Box::new(Cyclic));
        c.register(Box::new(Dihedral));
        c.register(Box::new(Symmetric));
        c.register(Box::new(Alternating));
        c.register(Box::new(Quaternion8));
        c.register(Box::new(Heisenberg));
        c
    }
}

impl Catalog {
    pub fn empty() -> Self {
        Self {
            families: BTreeMap::new(),
        }
    }

    /// Adds a family; a family already registered under the same name is
    /// replaced and returned.
    pub fn register(&mut self, family: Box<dyn GroupFamily>) -> Option<Box<dyn GroupFamily>> {
        self.families.insert(family.name(), family)
    }

    pub fn get(&self, name: &str) -> Option<&dyn GroupFamily> {
        self.families.get(name).map(|f| f.as_ref())
    }

    pub fn families(&self) -> impl Iterator<Item = &dyn GroupFamily> {
        self.families.values().map(|f| f.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.families.keys().copied().collect()
    }

    /// One member of a registered family.
    pub fn builtin(&self, name: &str, param: Option<u64>, limits: &Limits) -> Result<GroupTable> {
        self.get(name)
            .ok_or_else(|| Error::UnknownFamily(name.into()))?
            .build(param, limits)
    }

    fn by_alias(&self, token: &str) -> Option<(&dyn GroupFamily, Option<u64>)> {
        for f in self.families() {
            if !f.takes_parameter() {
                if token == f.alias() {
                    return Some((f, None));
                }
                continue;
            }
            if let Some(digits) = token.strip_prefix(f.alias()) {
                if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                    return digits.parse().ok().map(|p| (f, Some(p)));
                }
            }
        }
        None
    }

    fn parse_factor(&self, text: &str) -> Result<Factor> {
        let (body, power) = match text.split_once('^') {
            Some((b, p)) => {
                let k = p.trim().parse::<u32>().map_err(|_| Error::BadParameter {
                    family: b.into(),
                    detail: format!("bad power {p:?}"),
                })?;
                (b.trim(), k)
            }
            None => (text.trim(), 1),
        };
        let (family, param) = match body.split_once(':') {
            Some((name, p)) => {
                let fam = self
                    .get(name)
                    .ok_or_else(|| Error::UnknownFamily(name.into()))?;
                let p = p.parse::<u64>().map_err(|_| Error::BadParameter {
                    family: name.into(),
                    detail: format!("bad parameter {p:?}"),
                })?;
                (fam.name(), Some(p))
            }
            None => match self.get(body) {
                Some(f) => (f.name(), None),
                None => self
                    .by_alias(body)
                    .map(|(f, p)| (f.name(), p))
                    .ok_or_else(|| Error::UnknownFamily(body.into()))?,
            },
        };
        Ok(Factor {
            family: family.to_string(),
            param,
            power,
        })
    }

    /// Parses a builtin expression without building it.
    pub fn parse_builtin(&self, text: &str) -> Result<Vec<Factor>> {
        text.split('*').map(|f| self.parse_factor(f)).collect()
    }

    pub fn build_factors(&self, factors: &[Factor], limits: &Limits) -> Result<GroupTable> {
        let mut acc: Option<GroupTable> = None;
        let mut names = Vec::new();
        for f in factors {
            let base = self.builtin(&f.family, f.param, limits)?;
            names.push(if f.power == 1 {
                base.name().to_string()
            } else {
                format!("{}^{}", base.name(), f.power)
            });
            for _ in 0..f.power {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(g) => g.direct_product(&base, limits)?,
                });
            }
        }
        let g = acc.unwrap_or_else(GroupTable::trivial);
        Ok(g.with_name(names.join("*")))
    }

    pub fn resolve(&self, spec: &GroupSpec, limits: &Limits) -> Result<GroupTable> {
        match spec {
            GroupSpec::Builtin(factors) => self.build_factors(factors, limits),
            GroupSpec::File(path) => load_group(path, limits),
        }
    }

    /// Parses and builds a group spec string in one step.
    pub fn load(&self, text: &str, limits: &Limits) -> Result<GroupTable> {
        self.resolve(&GroupSpec::parse(self, text)?, limits)
    }
}

/// One factor `family:param^power` of a builtin expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub family: String,
    pub param: Option<u64>,
    pub power: u32,
}

/// Where a group comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Builtin(Vec<Factor>),
    /// A group file in either `perm` or `table` mode.
    File(PathBuf),
}

impl GroupSpec {
    /// Builtin expressions take precedence; anything that does not parse as
    /// one is treated as a file path, which must exist.
    pub fn parse(catalog: &Catalog, text: &str) -> Result<Self> {
        match catalog.parse_builtin(text) {
            Ok(factors) => Ok(Self::Builtin(factors)),
            Err(e) => {
                if Path::new(text).is_file() {
                    Ok(Self::File(PathBuf::from(text)))
                } else {
                    Err(e)
                }
            }
        }
    }
}
