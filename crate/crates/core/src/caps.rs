use crate::error::{Error, Result};

/// Size limits for the brute-force algorithms. Exceeding one is an error,
/// never a silent degradation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest group built as a dense Cayley table from permutations or files.
    pub table_order: usize,
    /// Largest group whose full subgroup lattice is enumerated.
    pub subgroup_enumeration: usize,
    /// Largest group for automorphism and isomorphism searches.
    pub automorphism: usize,
    /// Largest product group (direct, semidirect, wreath).
    pub construction: usize,
    /// Largest `H ⋊ G/C_G(H)` built for the semidirect centrality route.
    pub central_semidirect: usize,
    /// Largest abelian chief factor whose sections are enumerated exhaustively.
    pub abelian_section: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            table_order: 2000,
            subgroup_enumeration: 400,
            automorphism: 120,
            construction: 20000,
            central_semidirect: 2000,
            abelian_section: 1 << 12,
        }
    }
}

impl Caps {
    /// Element indices are stored as `u16`.
    pub const HARD_LIMIT: usize = u16::MAX as usize;

    pub(crate) fn check(what: &'static str, needed: usize, cap: usize) -> Result<()> {
        let cap = cap.min(Self::HARD_LIMIT);
        if needed > cap {
            Err(Error::OrderCapExceeded { what, needed, cap })
        } else {
            Ok(())
        }
    }
}
