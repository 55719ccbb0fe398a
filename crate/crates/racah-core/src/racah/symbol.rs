//! Generator symbols and their index normalization.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymbolKind {
    P,
    F,
}

/// A canonical generator symbol: `P_ij` with `i <= j`, `F_ijk` with `i < j < k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RacahSymbol {
    kind: SymbolKind,
    indices: Vec<usize>,
}

impl RacahSymbol {
    /// Canonical `P_ij`; the index order is irrelevant (`P_ij = P_ji`).
    pub fn p(i: usize, j: usize) -> Self {
        RacahSymbol {
            kind: SymbolKind::P,
            indices: vec![i.min(j), i.max(j)],
        }
    }

    /// Normalize `F_ijk`. Returns the canonical symbol together with the sign
    /// of the sorting permutation, or `None` when two indices coincide
    /// (antisymmetry forces the symbol to zero).
    pub fn f(i: usize, j: usize, k: usize) -> Option<(Self, i64)> {
        if i == j || j == k || i == k {
            return None;
        }
        let mut indices = [i, j, k];
        let mut sign = 1i64;
        // Three-element bubble sort tracking the permutation signature.
        for pass in 0..2 {
            for slot in 0..2 - pass {
                if indices[slot] > indices[slot + 1] {
                    indices.swap(slot, slot + 1);
                    sign = -sign;
                }
            }
        }
        Some((
            RacahSymbol {
                kind: SymbolKind::F,
                indices: indices.to_vec(),
            },
            sign,
        ))
    }

    pub fn kind(&self) -> SymbolKind {
        self.kind
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn max_index(&self) -> usize {
        *self.indices.iter().max().expect("symbols are non-empty")
    }

    /// Filtration degree: 2 for `P`, 3 for `F`.
    pub fn degree(&self) -> u32 {
        match self.kind {
            SymbolKind::P => 2,
            SymbolKind::F => 3,
        }
    }

    pub fn check_bound(&self, n: usize) -> Result<()> {
        for &i in &self.indices {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
        }
        Ok(())
    }
}

impl fmt::Display for RacahSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            SymbolKind::P => "P",
            SymbolKind::F => "F",
        };
        write!(f, "{kind}_")?;
        for i in &self.indices {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_is_symmetric() {
        assert_eq!(RacahSymbol::p(3, 1), RacahSymbol::p(1, 3));
        assert_eq!(RacahSymbol::p(3, 1).to_string(), "P_13");
        assert_eq!(RacahSymbol::p(2, 2).indices(), &[2, 2]);
    }

    #[test]
    fn f_sign_tracks_permutation_parity() {
        let (canon, sign) = RacahSymbol::f(2, 1, 3).unwrap();
        assert_eq!(canon, RacahSymbol::f(1, 2, 3).unwrap().0);
        assert_eq!(sign, -1);
        let (_, sign_cycle) = RacahSymbol::f(2, 3, 1).unwrap();
        assert_eq!(sign_cycle, 1);
        let (_, sign_rev) = RacahSymbol::f(3, 2, 1).unwrap();
        assert_eq!(sign_rev, -1);
    }

    #[test]
    fn f_with_repeated_index_is_zero() {
        assert!(RacahSymbol::f(1, 1, 2).is_none());
        assert!(RacahSymbol::f(1, 2, 1).is_none());
    }
}
