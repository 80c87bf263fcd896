//! The `.grp` group file: `perm <degree>` followed by one generator per line
//! in cycle notation, or `table <n>` followed by `n` rows of `n` zero-based
//! indices. `#` starts a comment.

use std::path::Path;

use frlab_core::perm::{from_permutations, parse_cycles};
use frlab_core::{Caps, GroupTable};

use crate::error::{Error, Result};

/// Lines with comments removed, keeping 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

pub fn parse_group(text: &str, caps: &Caps) -> Result<GroupTable> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::syntax(1, 1, "empty group file"))?;
    let mut words = header.split_whitespace();
    let kind = words.next().unwrap_or("");
    let size: usize = words
        .next()
        .and_then(|w| w.parse().ok())
        .ok_or_else(|| Error::syntax(hline, 1, "expected `perm <degree>` or `table <n>`"))?;
    if words.next().is_some() {
        return Err(Error::syntax(hline, 1, "trailing text after header"));
    }
    match kind {
        "perm" => {
            let gens = lines
                .map(|(ln, l)| parse_cycles(size, l, ln))
                .collect::<frlab_core::Result<Vec<_>>>()?;
            Ok(from_permutations(size, &gens, caps)?)
        }
        "table" => {
            let mut rows = Vec::with_capacity(size);
            for (ln, l) in lines {
                let row = l
                    .split_whitespace()
                    .map(|w| w.parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::syntax(ln, 1, "table entries must be non-negative integers"))?;
                rows.push(row);
            }
            Ok(GroupTable::from_rows(&rows, caps)?)
        }
        other => Err(Error::syntax(hline, 1, format!("unknown group file kind `{other}`"))),
    }
}

pub fn load_group(path: &Path, caps: &Caps) -> Result<GroupTable> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let label = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    Ok(parse_group(&text, caps)?.with_label(label))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_and_table_files() {
        let c = Caps::default();
        let a5 = parse_group("# A5\nperm 5\n(1 2 3 4 5)\n(1 2 3)\n", &c).unwrap();
        assert_eq!(a5.order(), 60);
        assert_eq!(parse_group("table 1\n0\n", &c).unwrap().order(), 1);
        let c2 = parse_group("table 2\n0 1\n1 0 # swap\n", &c).unwrap();
        assert_eq!(c2.order(), 2);
    }

    #[test]
    fn malformed_inputs() {
        let c = Caps::default();
        let e = parse_group("perm 3\n(1 2\n", &c).unwrap_err();
        assert!(matches!(e, Error::Group(frlab_core::Error::Syntax { line: 2, .. })), "{e}");
        assert!(matches!(parse_group("", &c), Err(Error::Syntax { .. })));
        assert!(matches!(parse_group("matrix 2\n", &c), Err(Error::Syntax { .. })));
        assert!(parse_group("table 2\n0 1\n0 1\n", &c).is_err());
    }
}
