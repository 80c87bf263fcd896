//! Class configuration and the registry resolving class and rank ids.
//!
//! ```text
//! class <id> = builtin(<name>) | np(<p>, <id>) | e(<id>) | fr(<base>, <rank>) | preset(<n>[, <base>])
//! flags: hereditary, !saturated
//! ```
//!
//! A `flags:` line overrides flags of the class defined just above it; `!`
//! clears a flag. The same expressions are accepted wherever the command
//! line takes a class id.

use std::collections::BTreeMap;
use std::path::Path;

use frlab_core::class::{e_closure, np_extend, ClassSpec};
use frlab_core::fr::{fr_class, preset, preset_class, PresetParams, PRESET_NAMES};
use frlab_core::rank::RankSpec;

use crate::error::{Error, Result};
use crate::rankfile::load_rank;

/// Splits `head(a, b(c, d))` into `head` and its top-level arguments.
fn split_call(text: &str) -> Result<(&str, Option<Vec<&str>>)> {
    let text = text.trim();
    let Some(open) = text.find('(') else {
        return Ok((text, None));
    };
    if !text.ends_with(')') {
        return Err(Error::Config(format!("unbalanced parentheses in `{text}`")));
    }
    let inner = &text[open + 1..text.len() - 1];
    let mut args = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                args.push(inner[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Config(format!("unbalanced parentheses in `{text}`")));
        }
    }
    if depth != 0 {
        return Err(Error::Config(format!("unbalanced parentheses in `{text}`")));
    }
    args.push(inner[start..].trim());
    Ok((text[..open].trim(), Some(args)))
}

/// Named classes and rank specs. Starts with the built-in classes, the
/// presets under their names and the preset rank functions.
#[derive(Clone)]
pub struct Registry {
    classes: BTreeMap<String, ClassSpec>,
    ranks: BTreeMap<String, RankSpec>,
    pub params: PresetParams,
}

impl Default for Registry {
    fn default() -> Self {
        Self::new(PresetParams::default())
    }
}

impl Registry {
    pub fn new(params: PresetParams) -> Registry {
        let mut reg = Registry {
            classes: BTreeMap::new(),
            ranks: BTreeMap::new(),
            params,
        };
        for c in [
            ClassSpec::trivial(),
            ClassSpec::nilpotent(),
            ClassSpec::soluble(),
            ClassSpec::supersoluble(),
            ClassSpec::all(),
        ] {
            reg.classes.insert(c.id().to_string(), c);
        }
        for item in 1..=7u8 {
            let (_, r) = preset(item, &reg.params).expect("presets 1-7 need no base");
            reg.ranks.insert(r.id.clone(), r);
            let c = preset_class(item, &reg.params).expect("presets 1-7 need no base");
            reg.classes.insert(c.id().to_string(), c);
        }
        reg
    }

    pub fn class_ids(&self) -> impl Iterator<Item = &str> {
        self.classes.keys().map(String::as_str)
    }

    pub fn add_rank(&mut self, r: RankSpec) {
        self.ranks.insert(r.id.clone(), r);
    }

    pub fn add_class(&mut self, id: &str, c: ClassSpec) {
        self.classes.insert(id.to_string(), c.with_id(id));
    }

    pub fn rank(&self, id: &str) -> Result<RankSpec> {
        if let Some(r) = self.ranks.get(id) {
            return Ok(r.clone());
        }
        if id.ends_with(".rank") || id.contains('/') {
            return load_rank(Path::new(id));
        }
        Err(Error::UnknownRank(id.to_string()))
    }

    /// A registered id or a class expression.
    pub fn resolve(&self, text: &str) -> Result<ClassSpec> {
        let text = text.trim();
        if let Some(c) = self.classes.get(text) {
            return Ok(c.clone());
        }
        let (head, args) = split_call(text)?;
        let args = args.unwrap_or_default();
        let want = |n: usize| -> Result<()> {
            if args.len() == n {
                Ok(())
            } else {
                Err(Error::Config(format!("`{head}` takes {n} argument(s) in `{text}`")))
            }
        };
        let num = |s: &str| -> Result<u64> {
            s.parse()
                .map_err(|_| Error::Config(format!("expected a number, found `{s}` in `{text}`")))
        };
        match head {
            "builtin" => {
                want(1)?;
                Ok(ClassSpec::builtin(args[0])?)
            }
            "np" => {
                want(2)?;
                Ok(np_extend(num(args[0])?, &self.resolve(args[1])?))
            }
            "e" => {
                want(1)?;
                Ok(e_closure(&self.resolve(args[0])?))
            }
            "fr" => {
                want(2)?;
                Ok(fr_class(&self.resolve(args[0])?, &self.rank(args[1])?)?)
            }
            "preset" => {
                if args.is_empty() || args.len() > 2 {
                    return Err(Error::Config(format!("`preset` takes 1 or 2 arguments in `{text}`")));
                }
                let item = u8::try_from(num(args[0])?)
                    .ok()
                    .filter(|i| (1..=PRESET_NAMES.len() as u8).contains(i))
                    .ok_or_else(|| Error::Config(format!("no preset `{}`", args[0])))?;
                let mut params = self.params.clone();
                if let Some(b) = args.get(1) {
                    params.base = Some(self.resolve(b)?);
                }
                Ok(preset_class(item, &params)?)
            }
            _ => ClassSpec::builtin(text).map_err(|_| Error::Config(format!("unknown class `{text}`"))),
        }
    }

    /// Reads `class` and `flags:` lines into the registry.
    pub fn load_config(&mut self, text: &str) -> Result<()> {
        let mut last: Option<String> = None;
        for (i, raw) in text.lines().enumerate() {
            let ln = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("class ") {
                let (id, expr) = rest
                    .split_once('=')
                    .ok_or_else(|| Error::syntax(ln, 1, "expected `class <id> = <expr>`"))?;
                let id = id.trim();
                if id.is_empty() || id.contains(char::is_whitespace) {
                    return Err(Error::syntax(ln, 7, format!("bad class id `{id}`")));
                }
                let c = self.resolve(expr)?;
                self.add_class(id, c);
                last = Some(id.to_string());
            } else if let Some(rest) = line.strip_prefix("flags:") {
                let id = last
                    .as_ref()
                    .ok_or_else(|| Error::syntax(ln, 1, "`flags:` before any `class` line"))?;
                let c = self.classes.get(id).expect("just added").clone();
                let mut flags = c.flags();
                for f in rest.split(',').map(str::trim).filter(|f| !f.is_empty()) {
                    let (name, value) = match f.strip_prefix('!') {
                        Some(n) => (n.trim(), false),
                        None => (f, true),
                    };
                    flags
                        .set(name, value)
                        .map_err(|_| Error::syntax(ln, 1, format!("unknown flag `{name}`")))?;
                }
                self.classes.insert(id.clone(), c.with_flags(flags));
            } else {
                return Err(Error::syntax(ln, 1, format!("unexpected `{line}`")));
            }
        }
        Ok(())
    }

    pub fn load_config_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        self.load_config(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use frlab_core::families::{alternating, symmetric};
    use frlab_core::Caps;

    #[test]
    fn builtins_presets_and_expressions() {
        let reg = Registry::default();
        let c = Caps::default();
        let s4 = symmetric(4, &c).unwrap();
        assert!(reg.resolve("supersoluble").is_ok());
        assert!(!reg.resolve("u_c").unwrap().member(&s4, &c).unwrap());
        assert!(reg.resolve("np(2, nilpotent)").unwrap().member(&s4, &c).is_ok());
        let a5 = alternating(5, &c).unwrap();
        assert!(reg.resolve("fr(nilpotent, n_star)").unwrap().member(&a5, &c).unwrap());
        assert!(reg.resolve("preset(8, nilpotent)").unwrap().member(&a5, &c).unwrap());
        assert!(reg.resolve("builtin(p_groups(2))").unwrap().member(&symmetric(2, &c).unwrap(), &c).unwrap());
        assert!(reg.resolve("preset(8, soluble)").is_err());
        assert!(reg.resolve("preset(10)").is_err());
        assert!(matches!(reg.resolve("fr(nilpotent, nope)"), Err(Error::UnknownRank(_))));
        assert!(reg.resolve("wat").is_err());
    }

    #[test]
    fn config_with_flag_overrides() {
        let mut reg = Registry::default();
        reg.load_config("class q = fr(nilpotent, n_star)\nflags: !hereditary, saturated\nclass ee = e(supersoluble)\n")
            .unwrap();
        let q = reg.resolve("q").unwrap();
        assert_eq!(q.id(), "q");
        assert!(q.flags().saturated);
        assert!(!q.flags().hereditary);
        assert!(reg.resolve("ee").is_ok());
        assert!(matches!(reg.load_config("flags: hereditary"), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(reg.load_config("class x = nilpotent\nflags: shiny"), Err(Error::Syntax { line: 2, .. })));
    }
}
