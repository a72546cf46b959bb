//! Rank and size ceilings for the exact computations.
//!
//! Everything here grows factorially, so each entry point that builds a
//! table or enumerates a group checks these limits first and fails with
//! [`Error::UnsupportedRank`] or [`Error::CeilingExceeded`].

use crate::error::{Error, Result};
use crate::labels::Family;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest rank for character tables, per family.
    pub table_rank_a: usize,
    pub table_rank_bc: usize,
    pub table_rank_d: usize,
    /// Largest rank for which group elements are enumerated (Reynolds
    /// averaging, coinvariant traces).
    pub enum_rank_a: usize,
    pub enum_rank_bc: usize,
    pub enum_rank_d: usize,
    /// Largest multigraded monomial space handled by the coinvariant code.
    pub monomial_ceiling: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            table_rank_a: 8,
            table_rank_bc: 5,
            table_rank_d: 5,
            enum_rank_a: 6,
            enum_rank_bc: 5,
            enum_rank_d: 5,
            monomial_ceiling: 5000,
        }
    }
}

impl Limits {
    pub fn table_rank(&self, family: Family) -> usize {
        match family {
            Family::A => self.table_rank_a,
            Family::BC => self.table_rank_bc,
            Family::D => self.table_rank_d,
        }
    }

    pub fn enum_rank(&self, family: Family) -> usize {
        match family {
            Family::A => self.enum_rank_a,
            Family::BC => self.enum_rank_bc,
            Family::D => self.enum_rank_d,
        }
    }

    pub fn check_table_rank(&self, family: Family, n: usize) -> Result<()> {
        let max = self.table_rank(family);
        if n > max {
            return Err(Error::UnsupportedRank { family, n, max });
        }
        Ok(())
    }

    pub fn check_enum_rank(&self, family: Family, n: usize) -> Result<()> {
        let max = self.enum_rank(family);
        if n > max {
            return Err(Error::UnsupportedRank { family, n, max });
        }
        Ok(())
    }
}
