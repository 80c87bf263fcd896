//! Cap overrides from `FRLAB_CAPS`, e.g. `table_order=4000,subgroup_enumeration=500`.

use frlab_core::Caps;

use crate::error::{Error, Result};

pub const ENV_VAR: &str = "FRLAB_CAPS";

pub fn parse_caps(text: &str, mut caps: Caps) -> Result<Caps> {
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("cap override `{item}` is not `name=value`")))?;
        let value: usize = value
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("cap `{key}` needs a non-negative integer")))?;
        let slot = match key.trim() {
            "table_order" | "table" => &mut caps.table_order,
            "subgroup_enumeration" => &mut caps.subgroup_enumeration,
            "automorphism" => &mut caps.automorphism,
            "construction" => &mut caps.construction,
            "central_semidirect" => &mut caps.central_semidirect,
            "abelian_section" => &mut caps.abelian_section,
            other => return Err(Error::Config(format!("unknown cap `{other}`"))),
        };
        *slot = value;
    }
    Ok(caps)
}

/// Defaults overridden by the environment, if set.
pub fn caps_from_env() -> Result<Caps> {
    match std::env::var(ENV_VAR) {
        Ok(s) => parse_caps(&s, Caps::default()),
        Err(_) => Ok(Caps::default()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides() {
        let c = parse_caps("table_order=4000, subgroup_enumeration=500", Caps::default()).unwrap();
        assert_eq!(c.table_order, 4000);
        assert_eq!(c.subgroup_enumeration, 500);
        assert_eq!(c.automorphism, Caps::default().automorphism);
        assert_eq!(parse_caps("", Caps::default()).unwrap(), Caps::default());
        assert!(parse_caps("speed=9", Caps::default()).is_err());
        assert!(parse_caps("automorphism", Caps::default()).is_err());
        assert!(parse_caps("automorphism=-1", Caps::default()).is_err());
    }
}
