use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A polynomial ring over the rationals with named, ordered variables.
///
/// Cloning is cheap; the variable list is shared.
#[derive(Clone)]
pub struct Ring {
    vars: Arc<[String]>,
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<I, S>(vars: I) -> Result<Ring>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::InvalidRing(
                "a ring needs at least one variable".into(),
            ));
        }
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!("`{v}` is not an identifier")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Ring { vars: vars.into() })
    }

    /// Parse a comma separated variable list such as `x,y,z`.
    pub fn from_list(list: &str) -> Result<Ring> {
        Ring::new(
            list.split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty()),
        )
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index < self.nvars() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index,
                len: self.nvars(),
            })
        }
    }

    /// Ring with `names` appended after the existing variables.
    pub fn extend<S: AsRef<str>>(&self, names: &[S]) -> Result<Ring> {
        for n in names {
            if self.index_of(n.as_ref()).is_some() {
                return Err(Error::NameCollision(n.as_ref().to_string()));
            }
        }
        Ring::new(
            self.vars
                .iter()
                .cloned()
                .chain(names.iter().map(|n| n.as_ref().to_string())),
        )
    }

    /// Ring with `names` placed before the existing variables.
    pub fn prepend<S: AsRef<str>>(&self, names: &[S]) -> Result<Ring> {
        for n in names {
            if self.index_of(n.as_ref()).is_some() {
                return Err(Error::NameCollision(n.as_ref().to_string()));
            }
        }
        Ring::new(
            names
                .iter()
                .map(|n| n.as_ref().to_string())
                .chain(self.vars.iter().cloned()),
        )
    }

    /// Ring with variable `index` removed.
    pub fn without(&self, index: usize) -> Result<Ring> {
        self.check_index(index)?;
        Ring::new(
            self.vars
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != index)
                .map(|(_, v)| v.clone()),
        )
    }

    /// A variable name starting with `prefix` that is not yet used.
    pub fn fresh_name(&self, prefix: &str) -> String {
        if self.index_of(prefix).is_none() {
            return prefix.to_string();
        }
        (0..)
            .map(|i| format!("{prefix}_{i}"))
            .find(|n| self.index_of(n).is_none())
            .expect("unbounded search")
    }

    /// `count` fresh names `{prefix}0 .. {prefix}{count-1}`, renaming the prefix if any clash.
    pub fn fresh_names(&self, prefix: &str, count: usize) -> Vec<String> {
        let mut p = prefix.to_string();
        loop {
            let names: Vec<String> = (0..count).map(|i| format!("{p}{i}")).collect();
            if names.iter().all(|n| self.index_of(n).is_none()) {
                return names;
            }
            p.push('_');
        }
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.vars.join(","))
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_rings() {
        assert!(Ring::new(Vec::<String>::new()).is_err());
        assert!(Ring::new(["x", "x"]).is_err());
        assert!(Ring::new(["1x"]).is_err());
        assert!(Ring::from_list("x, y ,z").is_ok());
    }

    #[test]
    fn extend_detects_collision() {
        let r = Ring::new(["x", "y"]).unwrap();
        assert_eq!(r.extend(&["y"]), Err(Error::NameCollision("y".into())));
        assert_eq!(r.extend(&["z"]).unwrap().vars(), ["x", "y", "z"]);
        assert_eq!(r.fresh_name("x"), "x_0");
        assert_eq!(r.fresh_names("T", 2), vec!["T0", "T1"]);
    }
}
