//! The rank-spec file: `bound M`, then one `type <key> A={..} B={..}` line
//! per selector, where `<key>` is `abelian`, `nonabelian`, `order:<n>` or
//! `default`. A set is a comma list of ranks and ranges `a..b`; `1..M` and
//! `1..` stand for every natural number.

use std::path::Path;

use frlab_core::rank::{RankEntry, RankSet, RankSpec, Selector};

use crate::error::{Error, Result};

fn parse_set(text: &str, bound: u32, line: usize, column: usize) -> Result<RankSet> {
    let bad = |m: &str| Error::syntax(line, column, format!("{m} in rank set `{text}`"));
    let inner = text.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(text).trim();
    if inner.is_empty() || inner == "∅" {
        return Ok(RankSet::empty());
    }
    let mut ranks = Vec::new();
    for item in inner.split(',').map(str::trim) {
        match item.split_once("..") {
            Some((lo, hi)) => {
                let lo: u32 = lo.trim().parse().map_err(|_| bad("bad range start"))?;
                match hi.trim() {
                    "" | "M" if lo == 1 => return Ok(RankSet::all(bound)),
                    "" | "M" => ranks.extend(lo..=bound),
                    hi => {
                        let hi: u32 = hi.parse().map_err(|_| bad("bad range end"))?;
                        ranks.extend(lo..=hi);
                    }
                }
            }
            None => ranks.push(item.parse().map_err(|_| bad("bad rank"))?),
        }
    }
    Ok(RankSet::of(ranks))
}

fn parse_selector(text: &str, line: usize, column: usize) -> Result<Selector> {
    match text {
        "abelian" => Ok(Selector::Abelian),
        "nonabelian" => Ok(Selector::NonAbelian),
        "default" => Ok(Selector::Default),
        other => other
            .strip_prefix("order:")
            .and_then(|n| n.parse().ok())
            .map(Selector::Order)
            .ok_or_else(|| Error::syntax(line, column, format!("unknown type key `{other}`"))),
    }
}

pub fn parse_rank(text: &str, id: &str) -> Result<RankSpec> {
    let mut bound = None;
    let mut pending = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let col = raw.find(line).unwrap_or(0) + 1;
        if let Some(m) = line.strip_prefix("bound") {
            if bound.is_some() {
                return Err(Error::syntax(ln, col, "duplicate `bound`"));
            }
            bound = Some(
                m.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::syntax(ln, col, "expected `bound <M>`"))?,
            );
        } else if let Some(rest) = line.strip_prefix("type ") {
            let rest = rest.trim_start();
            let (key, sets) = rest
                .split_once(char::is_whitespace)
                .ok_or_else(|| Error::syntax(ln, col, "expected `type <key> A={..} B={..}`"))?;
            let sets = sets.trim();
            let b_at = sets
                .find("B=")
                .ok_or_else(|| Error::syntax(ln, col, "missing `B=`"))?;
            let a = sets[..b_at]
                .trim()
                .strip_prefix("A=")
                .ok_or_else(|| Error::syntax(ln, col, "missing `A=`"))?;
            let b = &sets[b_at + 2..];
            pending.push((ln, col, parse_selector(key, ln, col)?, a.trim().to_string(), b.trim().to_string()));
        } else {
            return Err(Error::syntax(ln, col, format!("unexpected `{line}`")));
        }
    }
    let bound = bound.ok_or_else(|| Error::syntax(1, 1, "missing `bound <M>` line"))?;
    let entries = pending
        .into_iter()
        .map(|(ln, col, selector, a, b)| {
            Ok(RankEntry {
                selector,
                a: parse_set(&a, bound, ln, col)?,
                b: parse_set(&b, bound, ln, col)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RankSpec::new(id, bound, entries)?)
}

/// Loads a rank spec; its id is the file stem.
pub fn load_rank(path: &Path) -> Result<RankSpec> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let id = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "rank".into());
    parse_rank(&text, &id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use frlab_core::rank::SimpleTypeKey;

    #[test]
    fn parses_the_documented_shapes() {
        let r = parse_rank(
            "# quasinilpotent with a bounded tail\nbound 8\ntype abelian A={} B={1}\ntype order:60 A={1, 3..4} B={2}\ntype nonabelian A={} B=1..M\n",
            "mix",
        )
        .unwrap();
        assert_eq!(r.id, "mix");
        assert_eq!(r.bound(), 8);
        assert_eq!(r.entries()[1].a, RankSet::of([1, 3, 4]));
        assert!(r.entries()[2].b.is_unbounded());
        assert_eq!(r.resolve(&SimpleTypeKey::cyclic(5)).b, RankSet::of([1]));
    }

    #[test]
    fn display_round_trip() {
        let text = "bound 6\ntype abelian A={1} B={}\ntype default A={1..} B={}\n";
        let r = parse_rank(text, "x").unwrap();
        assert_eq!(r.to_string(), "bound 6\ntype abelian A={1} B={}\ntype default A={1..} B={}\n");
        assert_eq!(parse_rank(&r.to_string(), "x").unwrap(), r);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_rank("type default A={} B={}", "x"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_rank("bound 4\nkind x", "x"), Err(Error::Syntax { line: 2, .. })));
        assert!(matches!(parse_rank("bound 4\ntype weird A={} B={}", "x"), Err(Error::Syntax { .. })));
        // overlapping sets are rejected by the spec validator
        assert!(matches!(parse_rank("bound 4\ntype default A={1} B={1}", "x"), Err(Error::Group(_))));
        // a rank above the bound
        assert!(parse_rank("bound 2\ntype default A={3} B={}", "x").is_err());
    }
}
