//! Group construction recipes.
//!
//! ```text
//! EXPR   := NAME '(' ARG (',' ARG)* ')' | NAME
//! ARG    := EXPR | INTEGER | "quoted path"
//! ```
//!
//! Constructors: `cyclic(n)`, `dihedral(n)`, `dicyclic(n)`, `quaternion(n)`,
//! `symmetric(n)`, `alternating(n)`, `sl2(q)`, `psl2(q)`, `gl2(q)`,
//! `direct(r, …)`, `semidirect(A, Q, ACTION)`, `wreath(r, n)`,
//! `wreath_reg(S, G)`, `from_file("path")`.
//!
//! `ACTION` gives, for each canonical generator of `Q`, an automorphism of
//! `A`: `trivial`, `invert`, `power(k)`, `images(i, …)` (images of the
//! canonical generators of `A`), or `act(ACTION, …)` with one entry per
//! generator of `Q`; a single non-`act` action applies to every generator.

use std::fmt;
use std::path::{Path, PathBuf};

use frlab_core::families::{alternating, cyclic, dicyclic, dihedral, quaternion, symmetric};
use frlab_core::product::{direct_product, semidirect_product, wreath_natural, wreath_regular};
use frlab_core::{Caps, GroupAction, GroupTable};

use crate::error::{Error, Result};
use crate::groupfile::{load_group, parse_group};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Action {
    Trivial,
    Invert,
    Power(u64),
    Images(Vec<usize>),
    PerGenerator(Vec<Action>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Quaternion(usize),
    Symmetric(usize),
    Alternating(usize),
    Sl2(u64),
    Psl2(u64),
    Gl2(u64),
    Direct(Vec<Recipe>),
    Semidirect(Box<Recipe>, Box<Recipe>, Action),
    Wreath(Box<Recipe>, usize),
    WreathReg(Box<Recipe>, Box<Recipe>),
    FromFile(String),
}

/// Shipped permutation generators for the matrix groups.
const DATA: [(&str, &str); 10] = [
    ("sl2(3)", include_str!("../data/sl2_3.grp")),
    ("sl2(5)", include_str!("../data/sl2_5.grp")),
    ("sl2(7)", include_str!("../data/sl2_7.grp")),
    ("psl2(5)", include_str!("../data/psl2_5.grp")),
    ("psl2(7)", include_str!("../data/psl2_7.grp")),
    ("psl2(8)", include_str!("../data/psl2_8.grp")),
    ("psl2(11)", include_str!("../data/psl2_11.grp")),
    ("psl2(13)", include_str!("../data/psl2_13.grp")),
    ("psl2(17)", include_str!("../data/psl2_17.grp")),
    ("gl2(3)", include_str!("../data/gl2_3.grp")),
];

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::Trivial => write!(f, "trivial"),
            Action::Invert => write!(f, "invert"),
            Action::Power(k) => write!(f, "power({k})"),
            Action::Images(v) => write!(f, "images({})", join(v)),
            Action::PerGenerator(v) => write!(f, "act({})", join(v)),
        }
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Cyclic(n) => write!(f, "cyclic({n})"),
            Recipe::Dihedral(n) => write!(f, "dihedral({n})"),
            Recipe::Dicyclic(n) => write!(f, "dicyclic({n})"),
            Recipe::Quaternion(n) => write!(f, "quaternion({n})"),
            Recipe::Symmetric(n) => write!(f, "symmetric({n})"),
            Recipe::Alternating(n) => write!(f, "alternating({n})"),
            Recipe::Sl2(q) => write!(f, "sl2({q})"),
            Recipe::Psl2(q) => write!(f, "psl2({q})"),
            Recipe::Gl2(q) => write!(f, "gl2({q})"),
            Recipe::Direct(v) => write!(f, "direct({})", join(v)),
            Recipe::Semidirect(a, q, act) => write!(f, "semidirect({a}, {q}, {act})"),
            Recipe::Wreath(r, n) => write!(f, "wreath({r}, {n})"),
            Recipe::WreathReg(s, g) => write!(f, "wreath_reg({s}, {g})"),
            Recipe::FromFile(p) => write!(f, "from_file({p:?})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Node {
    Call {
        name: String,
        args: Option<Vec<Node>>,
        line: usize,
        column: usize,
    },
    Int(u64, usize, usize),
    Str(String, usize, usize),
}

impl Node {
    fn pos(&self) -> (usize, usize) {
        match self {
            Node::Call { line, column, .. } => (*line, *column),
            Node::Int(_, l, c) | Node::Str(_, l, c) => (*l, *c),
        }
    }
}

struct Parser {
    chars: Vec<char>,
    i: usize,
    line: usize,
    column: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        Parser {
            chars: src.chars().collect(),
            i: 0,
            line: 1,
            column: 1,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.i += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c == '#' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::syntax(self.line, self.column, message)
    }

    fn node(&mut self) -> Result<Node> {
        self.skip_ws();
        let (line, column) = (self.line, self.column);
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
                    s.push(c);
                    self.bump();
                }
                let v = s
                    .parse()
                    .map_err(|_| Error::syntax(line, column, "integer out of range"))?;
                Ok(Node::Int(v, line, column))
            }
            Some('"') => {
                self.bump();
                let mut s = String::new();
                loop {
                    match self.bump() {
                        Some('"') => break,
                        Some('\\') => match self.bump() {
                            Some(c) => s.push(c),
                            None => return Err(self.err("unterminated string")),
                        },
                        Some(c) => s.push(c),
                        None => return Err(Error::syntax(line, column, "unterminated string")),
                    }
                }
                Ok(Node::Str(s, line, column))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(c) = self.peek().filter(|c| c.is_ascii_alphanumeric() || *c == '_') {
                    name.push(c);
                    self.bump();
                }
                self.skip_ws();
                let args = if self.peek() == Some('(') {
                    self.bump();
                    let mut args = vec![self.node()?];
                    loop {
                        self.skip_ws();
                        match self.peek() {
                            Some(',') => {
                                self.bump();
                                args.push(self.node()?);
                            }
                            Some(')') => {
                                self.bump();
                                break;
                            }
                            Some(c) => return Err(self.err(format!("expected `,` or `)`, found `{c}`"))),
                            None => return Err(self.err("unclosed argument list")),
                        }
                    }
                    Some(args)
                } else {
                    None
                };
                Ok(Node::Call {
                    name,
                    args,
                    line,
                    column,
                })
            }
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

fn int(n: &Node) -> Result<u64> {
    match n {
        Node::Int(v, ..) => Ok(*v),
        other => {
            let (l, c) = other.pos();
            Err(Error::syntax(l, c, "expected an integer"))
        }
    }
}

fn arity(name: &str, args: &[Node], want: usize, line: usize, column: usize) -> Result<()> {
    if args.len() == want {
        Ok(())
    } else {
        Err(Error::syntax(
            line,
            column,
            format!("`{name}` takes {want} argument(s), got {}", args.len()),
        ))
    }
}

fn to_action(n: &Node) -> Result<Action> {
    let Node::Call { name, args, line, column } = n else {
        let (l, c) = n.pos();
        return Err(Error::syntax(l, c, "expected an action"));
    };
    match (name.as_str(), args) {
        ("trivial", None) => Ok(Action::Trivial),
        ("invert", None) => Ok(Action::Invert),
        ("power", Some(a)) => {
            arity(name, a, 1, *line, *column)?;
            Ok(Action::Power(int(&a[0])?))
        }
        ("images", Some(a)) => Ok(Action::Images(
            a.iter().map(|x| int(x).map(|v| v as usize)).collect::<Result<_>>()?,
        )),
        ("act", Some(a)) => Ok(Action::PerGenerator(a.iter().map(to_action).collect::<Result<_>>()?)),
        _ => Err(Error::UnknownConstructor(format!("action `{name}` at {line}:{column}"))),
    }
}

fn to_recipe(n: &Node) -> Result<Recipe> {
    let Node::Call { name, args, line, column } = n else {
        let (l, c) = n.pos();
        return Err(Error::syntax(l, c, "expected a group expression"));
    };
    let (line, column) = (*line, *column);
    let Some(a) = args else {
        return Err(Error::UnknownConstructor(format!("{name} at {line}:{column}")));
    };
    let one = |f: fn(usize) -> Recipe| -> Result<Recipe> {
        arity(name, a, 1, line, column)?;
        Ok(f(int(&a[0])? as usize))
    };
    let field = |f: fn(u64) -> Recipe| -> Result<Recipe> {
        arity(name, a, 1, line, column)?;
        Ok(f(int(&a[0])?))
    };
    match name.as_str() {
        "cyclic" => one(Recipe::Cyclic),
        "dihedral" => one(Recipe::Dihedral),
        "dicyclic" => one(Recipe::Dicyclic),
        "quaternion" => one(Recipe::Quaternion),
        "symmetric" => one(Recipe::Symmetric),
        "alternating" => one(Recipe::Alternating),
        "sl2" => field(Recipe::Sl2),
        "psl2" => field(Recipe::Psl2),
        "gl2" => field(Recipe::Gl2),
        "direct" => Ok(Recipe::Direct(a.iter().map(to_recipe).collect::<Result<_>>()?)),
        "semidirect" => {
            arity(name, a, 3, line, column)?;
            Ok(Recipe::Semidirect(
                Box::new(to_recipe(&a[0])?),
                Box::new(to_recipe(&a[1])?),
                to_action(&a[2])?,
            ))
        }
        "wreath" => {
            arity(name, a, 2, line, column)?;
            Ok(Recipe::Wreath(Box::new(to_recipe(&a[0])?), int(&a[1])? as usize))
        }
        "wreath_reg" => {
            arity(name, a, 2, line, column)?;
            Ok(Recipe::WreathReg(Box::new(to_recipe(&a[0])?), Box::new(to_recipe(&a[1])?)))
        }
        "from_file" => {
            arity(name, a, 1, line, column)?;
            match &a[0] {
                Node::Str(s, ..) => Ok(Recipe::FromFile(s.clone())),
                other => {
                    let (l, c) = other.pos();
                    Err(Error::syntax(l, c, "from_file expects a quoted path"))
                }
            }
        }
        _ => Err(Error::UnknownConstructor(format!("{name} at {line}:{column}"))),
    }
}

pub fn parse_recipe(text: &str) -> Result<Recipe> {
    let mut p = Parser::new(text);
    let node = p.node()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.err(format!("unexpected `{c}` after expression")));
    }
    to_recipe(&node)
}

/// Automorphism of `a` (as an image list) for one generator of the acting group.
fn automorphism(a: &GroupTable, act: &Action) -> Result<Vec<usize>> {
    let n = a.order();
    match act {
        Action::Trivial => Ok((0..n).collect()),
        Action::Invert => Ok((0..n).map(|x| a.inv(x)).collect()),
        Action::Power(k) => Ok((0..n).map(|x| a.pow(x, *k)).collect()),
        Action::Images(imgs) => {
            let gens = a.generators();
            if imgs.len() != gens.len() || imgs.iter().any(|&y| y >= n) {
                return Err(Error::Config(format!(
                    "images: need {} element indices below {n}",
                    gens.len()
                )));
            }
            let mut img = vec![usize::MAX; n];
            img[0] = 0;
            let mut queue = std::collections::VecDeque::from([0usize]);
            while let Some(x) = queue.pop_front() {
                for (g, &y) in gens.iter().zip(imgs) {
                    let xg = a.mul(x, *g);
                    let v = a.mul(img[x], y);
                    if img[xg] == usize::MAX {
                        img[xg] = v;
                        queue.push_back(xg);
                    } else if img[xg] != v {
                        return Err(frlab_core::Error::NotAutomorphism.into());
                    }
                }
            }
            Ok(img)
        }
        Action::PerGenerator(_) => Err(Error::Config("nested act(...)".into())),
    }
}

fn action_of(a: &GroupTable, q: &GroupTable, act: &Action) -> Result<GroupAction> {
    let qgens = q.generators();
    let per: Vec<Vec<usize>> = match act {
        Action::PerGenerator(v) => {
            if v.len() != qgens.len() {
                return Err(Error::Config(format!(
                    "act(...) needs {} entries, one per generator of the acting group",
                    qgens.len()
                )));
            }
            v.iter().map(|x| automorphism(a, x)).collect::<Result<_>>()?
        }
        single => {
            let p = automorphism(a, single)?;
            vec![p; qgens.len()]
        }
    };
    let mut perm_of: Vec<Option<Vec<usize>>> = vec![None; q.order()];
    perm_of[0] = Some((0..a.order()).collect());
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (g, pg) in qgens.iter().zip(&per) {
            let y = q.mul(x, *g);
            if perm_of[y].is_none() {
                let px = perm_of[x].as_ref().expect("visited");
                perm_of[y] = Some(pg.iter().map(|&d| px[d]).collect());
                queue.push_back(y);
            }
        }
    }
    Ok(GroupAction {
        domain_size: a.order(),
        perm_of: perm_of.into_iter().map(|p| p.expect("generators span")).collect(),
    })
}

impl Recipe {
    /// Builds the group; `from_file` paths resolve against `base_dir`.
    pub fn eval(&self, caps: &Caps, base_dir: Option<&Path>) -> Result<GroupTable> {
        let t = match self {
            Recipe::Cyclic(n) => cyclic(*n, caps)?,
            Recipe::Dihedral(n) => dihedral(*n, caps)?,
            Recipe::Dicyclic(n) => dicyclic(*n, caps)?,
            Recipe::Quaternion(n) => quaternion(*n, caps)?,
            Recipe::Symmetric(n) => symmetric(*n, caps)?,
            Recipe::Alternating(n) => alternating(*n, caps)?,
            Recipe::Sl2(_) | Recipe::Psl2(_) | Recipe::Gl2(_) => {
                let key = self.to_string();
                let text = DATA
                    .iter()
                    .find(|(k, _)| *k == key)
                    .map(|(_, t)| *t)
                    .ok_or_else(|| Error::UnknownConstructor(format!("{key}: no shipped generators")))?;
                parse_group(text, caps)?
            }
            Recipe::Direct(parts) => {
                let mut acc = cyclic(1, caps)?;
                for (i, p) in parts.iter().enumerate() {
                    let t = p.eval(caps, base_dir)?;
                    acc = if i == 0 { t } else { direct_product(&acc, &t, caps)? };
                }
                acc
            }
            Recipe::Semidirect(a, q, act) => {
                let a = a.eval(caps, base_dir)?;
                let q = q.eval(caps, base_dir)?;
                let action = action_of(&a, &q, act)?;
                semidirect_product(&a, &q, &action, caps)?
            }
            Recipe::Wreath(r, n) => wreath_natural(&r.eval(caps, base_dir)?, *n, caps)?,
            Recipe::WreathReg(s, g) => wreath_regular(&s.eval(caps, base_dir)?, &g.eval(caps, base_dir)?, caps)?,
            Recipe::FromFile(p) => {
                let path = match base_dir {
                    Some(d) => d.join(p),
                    None => PathBuf::from(p),
                };
                load_group(&path, caps)?
            }
        };
        Ok(t.with_label(self.to_string()).with_provenance(self.to_string()))
    }

    /// Order without building the group, where it is determined by the
    /// recipe alone.
    pub fn order(&self) -> Option<u128> {
        Some(match self {
            Recipe::Cyclic(n) | Recipe::Dihedral(n) | Recipe::Dicyclic(n) | Recipe::Quaternion(n) => *n as u128,
            Recipe::Symmetric(n) => (1..=*n as u128).product(),
            Recipe::Alternating(n) => ((1..=*n as u128).product::<u128>() / 2).max(1),
            Recipe::Sl2(q) => (*q as u128).pow(3) - *q as u128,
            Recipe::Gl2(q) => {
                let q = *q as u128;
                (q * q - 1) * (q * q - q)
            }
            Recipe::Psl2(q) => {
                let q = *q as u128;
                (q * q * q - q) / if q.is_multiple_of(2) { 1 } else { 2 }
            }
            Recipe::Direct(v) => v.iter().map(|r| r.order()).product::<Option<u128>>()?,
            Recipe::Semidirect(a, q, _) => a.order()? * q.order()?,
            Recipe::Wreath(r, n) => r.order()?.checked_pow(*n as u32)? * Recipe::Symmetric(*n).order()?,
            Recipe::WreathReg(s, g) => {
                let k = g.order()?;
                s.order()?.checked_pow(u32::try_from(k).ok()?)? * k
            }
            Recipe::FromFile(_) => return None,
        })
    }
}

impl std::str::FromStr for Recipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Recipe> {
        parse_recipe(s)
    }
}
