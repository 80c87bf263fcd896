//! Group classes with membership oracles, canonical local definitions and
//! the two centrality routes.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::caps::Caps;
use crate::charsub::{is_abelian, is_nilpotent, is_soluble, o_p};
use crate::error::{Error, Result};
use crate::fr::FrClass;
use crate::product::semidirect_unchecked;
use crate::quotient::{quotient, quotient_section};
use crate::series::{chief_series, ChiefFactor};
use crate::subgroup::{all_subgroups, Subgroup};
use crate::table::{induced_table, is_prime, prime_divisors, prime_power_base, GroupTable};

pub type Predicate = Arc<dyn Fn(&GroupTable) -> bool + Send + Sync>;

/// Declared closure properties. They are promises checked on catalog
/// instances, not proofs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClassFlags {
    pub formation: bool,
    pub hereditary: bool,
    pub normally_hereditary: bool,
    pub saturated: bool,
    pub solubly_saturated: bool,
    pub contains_nilpotent: bool,
    pub contains_own_composition_factors: bool,
}

impl ClassFlags {
    pub const NAMES: [&'static str; 7] = [
        "formation",
        "hereditary",
        "normally_hereditary",
        "saturated",
        "solubly_saturated",
        "contains_nilpotent",
        "contains_own_composition_factors",
    ];

    /// Saturated hereditary formation flags.
    const fn local(contains_nilpotent: bool) -> ClassFlags {
        ClassFlags {
            formation: true,
            hereditary: true,
            normally_hereditary: true,
            saturated: true,
            solubly_saturated: true,
            contains_nilpotent,
            contains_own_composition_factors: true,
        }
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        Some(match name {
            "formation" => self.formation,
            "hereditary" => self.hereditary,
            "normally_hereditary" => self.normally_hereditary,
            "saturated" => self.saturated,
            "solubly_saturated" => self.solubly_saturated,
            "contains_nilpotent" => self.contains_nilpotent,
            "contains_own_composition_factors" => self.contains_own_composition_factors,
            _ => return None,
        })
    }

    pub fn set(&mut self, name: &str, value: bool) -> Result<()> {
        let slot = match name {
            "formation" => &mut self.formation,
            "hereditary" => &mut self.hereditary,
            "normally_hereditary" => &mut self.normally_hereditary,
            "saturated" => &mut self.saturated,
            "solubly_saturated" => &mut self.solubly_saturated,
            "contains_nilpotent" => &mut self.contains_nilpotent,
            "contains_own_composition_factors" => &mut self.contains_own_composition_factors,
            _ => return Err(Error::UnknownClass(format!("flag {name}"))),
        };
        *slot = value;
        Ok(())
    }
}

#[derive(Clone)]
pub enum ClassKind {
    /// No groups at all; only appears as a value of a local definition.
    Empty,
    Trivial,
    Nilpotent,
    Soluble,
    Supersoluble,
    All,
    PGroups(u64),
    PiGroups(Vec<u64>),
    AbelianExponent(u64),
    Np(u64, Box<ClassSpec>),
    E(Box<ClassSpec>),
    Fr(Arc<FrClass>),
    /// The class locally defined by the canonical definition of the inner class.
    Local(Box<ClassSpec>),
    Custom(Predicate),
}

#[derive(Clone)]
pub struct ClassSpec {
    id: String,
    kind: ClassKind,
    flags: ClassFlags,
}

impl fmt::Debug for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClassSpec")
            .field("id", &self.id)
            .field("flags", &self.flags)
            .finish()
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id)
    }
}

impl ClassSpec {
    fn make(id: impl ToString, kind: ClassKind, flags: ClassFlags) -> ClassSpec {
        ClassSpec {
            id: id.to_string(),
            kind,
            flags,
        }
    }

    pub fn empty() -> ClassSpec {
        Self::make("empty", ClassKind::Empty, ClassFlags::local(false))
    }

    pub fn trivial() -> ClassSpec {
        Self::make("trivial", ClassKind::Trivial, ClassFlags::local(false))
    }

    pub fn nilpotent() -> ClassSpec {
        Self::make("nilpotent", ClassKind::Nilpotent, ClassFlags::local(true))
    }

    pub fn soluble() -> ClassSpec {
        Self::make("soluble", ClassKind::Soluble, ClassFlags::local(true))
    }

    pub fn supersoluble() -> ClassSpec {
        Self::make("supersoluble", ClassKind::Supersoluble, ClassFlags::local(true))
    }

    pub fn all() -> ClassSpec {
        Self::make("all", ClassKind::All, ClassFlags::local(true))
    }

    pub fn p_groups(p: u64) -> Result<ClassSpec> {
        if !is_prime(p) {
            return Err(Error::UnknownClass(format!("p_groups({p}): not a prime")));
        }
        Ok(Self::make(format!("p_groups({p})"), ClassKind::PGroups(p), ClassFlags::local(false)))
    }

    pub fn pi_groups(pi: &[u64]) -> Result<ClassSpec> {
        let mut pi = pi.to_vec();
        pi.sort_unstable();
        pi.dedup();
        if pi.iter().any(|&p| !is_prime(p)) {
            return Err(Error::UnknownClass(format!("pi_groups({pi:?}): not all primes")));
        }
        let id = format!(
            "pi_groups({})",
            pi.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        );
        Ok(Self::make(id, ClassKind::PiGroups(pi), ClassFlags::local(false)))
    }

    pub fn abelian_exponent_dividing(d: u64) -> Result<ClassSpec> {
        if d == 0 {
            return Err(Error::UnknownClass("abelian_exponent_dividing(0)".into()));
        }
        let flags = ClassFlags {
            formation: true,
            hereditary: true,
            normally_hereditary: true,
            contains_own_composition_factors: true,
            ..ClassFlags::default()
        };
        Ok(Self::make(
            format!("abelian_exponent_dividing({d})"),
            ClassKind::AbelianExponent(d),
            flags,
        ))
    }

    /// A built-in by name: `trivial`, `nilpotent`, `soluble`, `supersoluble`,
    /// `all`, `p_groups(p)`, `pi_groups(p,q,..)`, `abelian_exponent_dividing(d)`.
    pub fn builtin(name: &str) -> Result<ClassSpec> {
        let name = name.trim();
        let (head, args) = match name.find('(') {
            Some(i) if name.ends_with(')') => (&name[..i], Some(&name[i + 1..name.len() - 1])),
            _ => (name, None),
        };
        let nums = |s: &str| -> Result<Vec<u64>> {
            s.split(',')
                .map(|t| t.trim().parse::<u64>().map_err(|_| Error::UnknownClass(name.into())))
                .collect()
        };
        match (head.trim(), args) {
            ("trivial", None) => Ok(Self::trivial()),
            ("nilpotent", None) => Ok(Self::nilpotent()),
            ("soluble", None) => Ok(Self::soluble()),
            ("supersoluble", None) => Ok(Self::supersoluble()),
            ("all", None) => Ok(Self::all()),
            ("p_groups", Some(a)) => match nums(a)?.as_slice() {
                [p] => Self::p_groups(*p),
                _ => Err(Error::UnknownClass(name.into())),
            },
            ("pi_groups", Some(a)) => Self::pi_groups(&nums(a)?),
            ("abelian_exponent_dividing", Some(a)) => match nums(a)?.as_slice() {
                [d] => Self::abelian_exponent_dividing(*d),
                _ => Err(Error::UnknownClass(name.into())),
            },
            _ => Err(Error::UnknownClass(name.into())),
        }
    }

    pub fn custom(id: impl ToString, flags: ClassFlags, f: impl Fn(&GroupTable) -> bool + Send + Sync + 'static) -> ClassSpec {
        Self::make(id, ClassKind::Custom(Arc::new(f)), flags)
    }

    pub(crate) fn from_fr(id: impl ToString, fr: FrClass, flags: ClassFlags) -> ClassSpec {
        Self::make(id, ClassKind::Fr(Arc::new(fr)), flags)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn kind(&self) -> &ClassKind {
        &self.kind
    }

    pub fn flags(&self) -> ClassFlags {
        self.flags
    }

    pub fn with_id(mut self, id: impl ToString) -> ClassSpec {
        self.id = id.to_string();
        self
    }

    pub fn with_flags(mut self, flags: ClassFlags) -> ClassSpec {
        self.flags = flags;
        self
    }

    pub fn as_fr(&self) -> Option<&FrClass> {
        match &self.kind {
            ClassKind::Fr(fr) => Some(fr),
            _ => None,
        }
    }

    pub fn require(&self, flag: &'static str) -> Result<()> {
        if self.flags.get(flag) == Some(true) {
            Ok(())
        } else {
            Err(Error::MissingFlag {
                class: self.id.clone(),
                flag,
            })
        }
    }

    pub fn member(&self, g: &GroupTable, caps: &Caps) -> Result<bool> {
        Ok(match &self.kind {
            ClassKind::Empty => false,
            ClassKind::Trivial => g.order() == 1,
            ClassKind::Nilpotent => is_nilpotent(g),
            ClassKind::Soluble => is_soluble(g),
            ClassKind::Supersoluble => chief_series(g)
                .terms
                .windows(2)
                .all(|w| is_prime((w[1].size() / w[0].size()) as u64)),
            ClassKind::All => true,
            ClassKind::PGroups(p) => g.order() == 1 || prime_power_base(g.order() as u64) == Some(*p),
            ClassKind::PiGroups(pi) => prime_divisors(g.order() as u64).iter().all(|p| pi.contains(p)),
            ClassKind::AbelianExponent(d) => {
                is_abelian(g) && g.element_orders().iter().all(|&o| d % o as u64 == 0)
            }
            ClassKind::Np(p, x) => {
                let (q, _) = quotient(g, &o_p(g, *p))?;
                x.member(&q, caps)?
            }
            ClassKind::E(x) => {
                for cf in chief_series(g).factors(g) {
                    if !x.member(&cf.simple_table(), caps)? {
                        return Ok(false);
                    }
                }
                true
            }
            ClassKind::Fr(fr) => crate::fr::in_fr(g, &fr.base, &fr.rank, caps)?.member,
            ClassKind::Local(x) => {
                for cf in chief_series(g).factors(g) {
                    let (q, _) = quotient(g, &cf.centralizer)?;
                    for p in cf.primes() {
                        let def = x.local_def(p).ok_or_else(|| Error::MissingDefinition(x.id.clone()))?;
                        if !def.member(&q, caps)? {
                            return Ok(false);
                        }
                    }
                }
                true
            }
            ClassKind::Custom(f) => f(g),
        })
    }

    /// Membership of a subgroup, via its induced table.
    pub fn member_subgroup(&self, g: &GroupTable, h: &Subgroup, caps: &Caps) -> Result<bool> {
        if h.size() == g.order() {
            return self.member(g, caps);
        }
        self.member(&induced_table(g, h).0, caps)
    }

    /// Value at `p` of the canonical local (or composition) definition.
    pub fn local_def(&self, p: u64) -> Option<ClassSpec> {
        match &self.kind {
            ClassKind::Empty | ClassKind::Trivial => Some(Self::empty()),
            ClassKind::Nilpotent => Self::p_groups(p).ok(),
            ClassKind::Supersoluble => Some(np_extend(p, &Self::abelian_exponent_dividing(p - 1).ok()?)),
            ClassKind::Soluble => Some(Self::soluble()),
            ClassKind::All => Some(Self::all()),
            ClassKind::PGroups(q) => Some(if p == *q { self.clone() } else { Self::empty() }),
            ClassKind::PiGroups(pi) => Some(if pi.contains(&p) { self.clone() } else { Self::empty() }),
            ClassKind::Fr(fr) => fr.local_def(p),
            ClassKind::Local(x) => x.local_def(p),
            ClassKind::AbelianExponent(_) | ClassKind::Np(..) | ClassKind::E(_) | ClassKind::Custom(_) => None,
        }
    }

    pub fn has_local_def(&self) -> bool {
        self.local_def(2).is_some()
    }

    /// `f(0)` of the canonical composition definition: the class itself for
    /// solubly saturated classes.
    pub fn comp_def_zero(&self) -> Option<ClassSpec> {
        self.flags.solubly_saturated.then(|| self.clone())
    }
}

/// `𝔑_p X = (G | G/O_p(G) ∈ X)`.
pub fn np_extend(p: u64, x: &ClassSpec) -> ClassSpec {
    let flags = ClassFlags {
        formation: x.flags.formation,
        hereditary: x.flags.hereditary,
        normally_hereditary: x.flags.normally_hereditary,
        saturated: x.flags.saturated,
        solubly_saturated: x.flags.saturated,
        contains_nilpotent: x.flags.contains_nilpotent,
        contains_own_composition_factors: x.flags.contains_own_composition_factors,
    };
    ClassSpec::make(format!("np({p},{})", x.id), ClassKind::Np(p, Box::new(x.clone())), flags)
}

/// Groups all of whose composition factors lie in `X`.
pub fn e_closure(x: &ClassSpec) -> ClassSpec {
    let flags = ClassFlags {
        formation: true,
        normally_hereditary: true,
        contains_nilpotent: x.flags.contains_nilpotent,
        contains_own_composition_factors: true,
        ..ClassFlags::default()
    };
    ClassSpec::make(format!("e({})", x.id), ClassKind::E(Box::new(x.clone())), flags)
}

/// The class locally defined by `p ↦ F(p)` for the canonical definition `F`
/// of `X`: its largest saturated subformation when `X` is solubly saturated.
pub fn locally_defined(x: &ClassSpec) -> Result<ClassSpec> {
    if matches!(x.kind, ClassKind::Local(_)) {
        return Ok(x.clone());
    }
    if !x.has_local_def() {
        return Err(Error::MissingDefinition(x.id.clone()));
    }
    if x.flags.saturated {
        return Ok(x.clone());
    }
    Ok(ClassSpec::make(
        format!("local({})", x.id),
        ClassKind::Local(Box::new(x.clone())),
        ClassFlags {
            formation: true,
            saturated: true,
            solubly_saturated: true,
            contains_nilpotent: x.flags.contains_nilpotent,
            ..ClassFlags::default()
        },
    ))
}

/// How [`is_f_central`] decides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CentralMode {
    /// Run every applicable route and require agreement.
    #[default]
    Both,
    /// Canonical definition when available, the semidirect product otherwise.
    PreferCanonical,
    SemidirectOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Semidirect,
    Canonical,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Centrality {
    pub central: bool,
    pub route: Route,
}

/// `H̄ ⋊ G/C_G(H̄)` with `gC` acting by `h ↦ ghg⁻¹`.
pub fn central_product_table(g: &GroupTable, cf: &ChiefFactor, caps: &Caps) -> Result<GroupTable> {
    let q = quotient_section(g, &cf.centralizer)?;
    Caps::check("semidirect centrality test", cf.factor_order * q.order(), caps.central_semidirect)?;
    let h = &cf.section;
    let perm_of: Vec<Vec<usize>> = q
        .reps
        .iter()
        .map(|&x| {
            let xi = g.inv(x);
            h.reps.iter().map(|&r| h.index(g.conj(r, xi))).collect()
        })
        .collect();
    Ok(semidirect_unchecked(&h.table, &q.table, &perm_of))
}

fn semidirect_route(g: &GroupTable, cf: &ChiefFactor, x: &ClassSpec, caps: &Caps) -> Result<Option<bool>> {
    match central_product_table(g, cf, caps) {
        Ok(t) => x.member(&t, caps).map(Some),
        Err(Error::OrderCapExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn canonical_route(g: &GroupTable, cf: &ChiefFactor, x: &ClassSpec, caps: &Caps) -> Result<Option<bool>> {
    if matches!(x.kind, ClassKind::All) {
        return Ok(Some(true));
    }
    if !x.flags.solubly_saturated || !x.has_local_def() {
        return Ok(None);
    }
    let (q, _) = quotient(g, &cf.centralizer)?;
    if let Some(p) = cf.char_prime {
        let def = x.local_def(p).ok_or_else(|| Error::MissingDefinition(x.id.clone()))?;
        return def.member(&q, caps).map(Some);
    }
    if x.flags.saturated {
        for p in cf.primes() {
            let def = x.local_def(p).ok_or_else(|| Error::MissingDefinition(x.id.clone()))?;
            if !def.member(&q, caps)? {
                return Ok(Some(false));
            }
        }
        Ok(Some(true))
    } else {
        x.member(&q, caps).map(Some)
    }
}

/// Whether the chief factor `cf` of `G` is `X`-central.
pub fn is_f_central(g: &GroupTable, cf: &ChiefFactor, x: &ClassSpec, mode: CentralMode, caps: &Caps) -> Result<Centrality> {
    let undecidable = || {
        Error::Undecidable(format!(
            "factor of order {} in a group of order {} for class {}",
            cf.factor_order,
            g.order(),
            x.id
        ))
    };
    let canonical = if mode == CentralMode::SemidirectOnly {
        None
    } else {
        canonical_route(g, cf, x, caps)?
    };
    if mode == CentralMode::PreferCanonical {
        if let Some(c) = canonical {
            return Ok(Centrality {
                central: c,
                route: Route::Canonical,
            });
        }
    }
    let semi = semidirect_route(g, cf, x, caps)?;
    match (canonical, semi) {
        (Some(a), Some(b)) if a != b => Err(Error::RouteDisagreement(format!(
            "class {}: canonical says {a}, semidirect says {b} (factor order {}, group order {})",
            x.id,
            cf.factor_order,
            g.order()
        ))),
        (Some(a), Some(_)) => Ok(Centrality {
            central: a,
            route: Route::Both,
        }),
        (Some(a), None) => Ok(Centrality {
            central: a,
            route: Route::Canonical,
        }),
        (None, Some(b)) => Ok(Centrality {
            central: b,
            route: Route::Semidirect,
        }),
        (None, None) => Err(undecidable()),
    }
}

/// `G ∉ X` while every proper subgroup lies in `X`.
pub fn s_critical(g: &GroupTable, x: &ClassSpec, caps: &Caps) -> Result<bool> {
    if x.member(g, caps)? {
        return Ok(false);
    }
    for h in all_subgroups(g, caps)? {
        if h.size() < g.order() && !x.member_subgroup(g, &h, caps)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `G^X`: the least normal subgroup with quotient in the formation `X`.
pub fn residual(g: &GroupTable, x: &ClassSpec, caps: &Caps) -> Result<Subgroup> {
    if !x.flags.formation {
        return Err(Error::NotAFormation(x.id.clone()));
    }
    let mut r = g.whole();
    for n in g.normal_subgroup_list() {
        if !r.is_subgroup_of(n) {
            let (q, _) = quotient(g, n)?;
            if x.member(&q, caps)? {
                r = r.intersection(n);
            }
        }
    }
    Ok(r)
}
