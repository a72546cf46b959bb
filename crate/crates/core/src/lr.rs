//! Littlewood–Richardson coefficients `C^ν_{λ,μ}`.
//!
//! Counted directly as LR tableaux: fillings of the skew shape `ν/λ` with
//! content `μ` that are weakly increasing along rows, strictly increasing
//! down columns, and whose reverse reading word (right to left, top to
//! bottom) is a lattice word.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::partitions::Partition;

/// `C^ν_{λ,μ}`; zero unless `|ν| = |λ| + |μ|`, `λ ⊆ ν` and `μ ⊆ ν`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    if mu.is_empty() || lambda.is_empty() {
        return 1;
    }
    let mut cells = Vec::new();
    for r in 0..nu.len() {
        for c in (lambda.get(r)..nu.get(r)).rev() {
            cells.push((r, c));
        }
    }
    let mut search = TableauSearch {
        lambda,
        content: mu.parts(),
        cells: &cells,
        grid: nu.parts().iter().map(|&len| vec![0usize; len]).collect(),
        used: vec![0; mu.len() + 1],
    };
    search.count(0)
}

struct TableauSearch<'a> {
    lambda: &'a Partition,
    content: &'a [usize],
    cells: &'a [(usize, usize)],
    grid: Vec<Vec<usize>>,
    // used[k] = how many k's placed so far (1-based letters)
    used: Vec<usize>,
}

impl TableauSearch<'_> {
    fn count(&mut self, idx: usize) -> u64 {
        if idx == self.cells.len() {
            return 1;
        }
        let (r, c) = self.cells[idx];
        // row weakly increasing: bounded by the entry to the right, if skew
        let hi_row = if c + 1 < self.grid[r].len() {
            self.grid[r][c + 1]
        } else {
            usize::MAX
        };
        // column strict: above entry (if inside the skew part) must be smaller
        let lo = if r > 0 && c >= self.lambda.get(r - 1) {
            self.grid[r - 1][c] + 1
        } else {
            1
        };
        let hi = hi_row.min(self.content.len()).min(r + 1);
        let mut total = 0;
        for k in lo..=hi {
            if self.used[k] == self.content[k - 1] {
                continue;
            }
            if k > 1 && self.used[k] + 1 > self.used[k - 1] {
                continue;
            }
            self.used[k] += 1;
            self.grid[r][c] = k;
            total += self.count(idx + 1);
            self.used[k] -= 1;
        }
        self.grid[r][c] = 0;
        total
    }
}

/// The full product `s_λ · s_μ = Σ_ν C^ν_{λ,μ} s_ν`, zero terms omitted.
pub fn lr_expand(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    LrMemo::default().expand(lambda, mu)
}

/// A memo table over canonicalized `(λ, μ, ν)` triples, using the symmetry
/// `C^ν_{λ,μ} = C^ν_{μ,λ}`. Owned by one computation; not shared.
#[derive(Debug, Default, Clone)]
pub struct LrMemo {
    table: BTreeMap<(Partition, Partition, Partition), u64>,
}

impl LrMemo {
    pub fn coefficient(&mut self, lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        let (a, b) = if lambda <= mu {
            (lambda, mu)
        } else {
            (mu, lambda)
        };
        let key = (a.clone(), b.clone(), nu.clone());
        if let Some(&v) = self.table.get(&key) {
            return v;
        }
        // fewer cells to fill with the larger shape removed
        let v = if a.size() >= b.size() {
            lr_coefficient(a, b, nu)
        } else {
            lr_coefficient(b, a, nu)
        };
        self.table.insert(key, v);
        v
    }

    pub fn expand(&mut self, lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
        let n = lambda.size() + mu.size();
        let mut out = BTreeMap::new();
        for nu in Partition::all_of_size(n) {
            if !nu.contains(lambda) || !nu.contains(mu) {
                continue;
            }
            let c = self.coefficient(lambda, mu, &nu);
            if c > 0 {
                out.insert(nu, c);
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}
