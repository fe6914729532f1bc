//! Dellac configurations: representation, enumeration, labels, inversion
//! statistics, switching transformations, and the configuration-side
//! polynomials.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::qpolys::QPoly;

/// `n(n-1)/2`, the maximal inversion count on configurations of size `n`.
pub fn binom2(n: usize) -> usize {
    n * (n - 1) / 2
}

/// A Dellac configuration of size `n`: a tableau of width `n` and height
/// `2n` with one dot per row and two per column, every dot confined to
/// the band `col <= row <= col + n`.
///
/// Stored as the row-to-column map `col`, 1-based values; `col[r-1]` is
/// the column of the dot in row `r` (rows counted bottom to top).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DellacConfig {
    n: usize,
    col: Vec<usize>,
}

/// Per-dot refinements of the inversion statistic. `l_even` is only
/// defined for the even dots (rows `1..=n`), `r_odd` only for the odd
/// dots (rows `n+1..=2n`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RefinedStats {
    pub l: usize,
    pub r: usize,
    pub l_even: Option<usize>,
    pub r_odd: Option<usize>,
}

impl DellacConfig {
    pub fn new(n: usize, col: Vec<usize>) -> Result<Self> {
        if n == 0 || col.len() != 2 * n {
            return Err(Error::InvalidConfig(format!(
                "size {} needs exactly {} rows, got {}",
                n,
                2 * n,
                col.len()
            )));
        }
        let mut counts = vec![0usize; n + 1];
        for (idx, &c) in col.iter().enumerate() {
            let row = idx + 1;
            if c == 0 || c > n {
                return Err(Error::InvalidConfig(format!(
                    "row {} has column {} outside 1..={}",
                    row, c, n
                )));
            }
            if !(c <= row && row <= c + n) {
                return Err(Error::InvalidConfig(format!(
                    "dot at row {}, column {} leaves the band",
                    row, c
                )));
            }
            counts[c] += 1;
        }
        if let Some(c) = (1..=n).find(|&c| counts[c] != 2) {
            return Err(Error::InvalidConfig(format!(
                "column {} holds {} dots instead of 2",
                c, counts[c]
            )));
        }
        Ok(DellacConfig { n, col })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The row-to-column map (index `r-1` holds the column of row `r`).
    pub fn col(&self) -> &[usize] {
        &self.col
    }

    /// Column of the dot in row `i` (1-based).
    pub fn column_of(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= 2 * self.n);
        self.col[i - 1]
    }

    /// For every column `j`, the rows `(i1, i2)` of its two dots with
    /// `i1 < i2` (lower and upper dot).
    pub fn columns(&self) -> Vec<(usize, usize)> {
        let mut cols = vec![(0usize, 0usize); self.n];
        for (idx, &c) in self.col.iter().enumerate() {
            let row = idx + 1;
            let slot = &mut cols[c - 1];
            if slot.0 == 0 {
                slot.0 = row;
            } else {
                slot.1 = row;
            }
        }
        cols
    }

    /// Number of inversions: pairs of rows `p < q` with `col[q] < col[p]`.
    pub fn inv(&self) -> usize {
        let mut count = 0;
        for p in 0..self.col.len() {
            for q in p + 1..self.col.len() {
                if self.col[q] < self.col[p] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Inversions between the dot of row `i` and dots of rows above it.
    pub fn l(&self, i: usize) -> usize {
        (i + 1..=2 * self.n)
            .filter(|&j| self.column_of(j) < self.column_of(i))
            .count()
    }

    /// Inversions between the dot of row `i` and dots of rows below it.
    pub fn r(&self, i: usize) -> usize {
        (1..i)
            .filter(|&j| self.column_of(j) > self.column_of(i))
            .count()
    }

    /// `l` restricted to even-dot partners (rows `<= n`); row `i` must be
    /// an even dot.
    pub fn l_even(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.n);
        (i + 1..=self.n)
            .filter(|&j| self.column_of(j) < self.column_of(i))
            .count()
    }

    /// `r` restricted to odd-dot partners (rows `> n`); row `i` must be
    /// an odd dot.
    pub fn r_odd(&self, i: usize) -> usize {
        assert!(i > self.n && i <= 2 * self.n);
        (self.n + 1..i)
            .filter(|&j| self.column_of(j) > self.column_of(i))
            .count()
    }

    pub fn refined_stats(&self, i: usize) -> Result<RefinedStats> {
        if i == 0 || i > 2 * self.n {
            return Err(Error::OutOfRange(format!(
                "row {} of a configuration of height {}",
                i,
                2 * self.n
            )));
        }
        Ok(RefinedStats {
            l: self.l(i),
            r: self.r(i),
            l_even: (i <= self.n).then(|| self.l_even(i)),
            r_odd: (i > self.n).then(|| self.r_odd(i)),
        })
    }

    /// Whether exchanging the columns of the dots in rows `i` and `i+1`
    /// yields another Dellac configuration.
    pub fn is_switchable(&self, i: usize) -> Result<bool> {
        if i == 0 || i >= 2 * self.n {
            return Err(Error::OutOfRange(format!(
                "switch index {} not in 1..={}",
                i,
                2 * self.n - 1
            )));
        }
        Ok(if i <= self.n {
            self.column_of(i + 1) < i + 1
        } else {
            self.column_of(i) > i - self.n
        })
    }

    /// The switching transformation `Sw^i`; refusing the unswitchable
    /// case keeps caller logic errors from producing invalid tableaux.
    pub fn switch(&self, i: usize) -> Result<DellacConfig> {
        if !self.is_switchable(i)? {
            return Err(Error::NotSwitchable(i));
        }
        let mut col = self.col.clone();
        col.swap(i - 1, i);
        let switched = DellacConfig { n: self.n, col };
        debug_assert!(DellacConfig::new(self.n, switched.col.clone()).is_ok());
        Ok(switched)
    }

    /// The height `h(j) = n_e(j) - n_o(j)` counting even minus odd dots
    /// in the first `j-1` columns (defined for `1 <= j <= n+1`).
    pub fn height(&self, j: usize) -> usize {
        assert!(j >= 1 && j <= self.n + 1);
        let ne = (1..=self.n).filter(|&i| self.column_of(i) < j).count();
        let no = (self.n + 1..=2 * self.n)
            .filter(|&i| self.column_of(i) < j)
            .count();
        assert!(ne >= no, "height would be negative: invalid configuration");
        ne - no
    }

    /// ASCII rendering, top row first, dots as `*`.
    pub fn ascii_grid(&self) -> String {
        let mut out = String::new();
        for row in (1..=2 * self.n).rev() {
            let c = self.column_of(row);
            for j in 1..=self.n {
                out.push(if j == c { '*' } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for DellacConfig {
    /// Canonical textual form: the col vector, comma-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.col.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The label of the dot in row `i`: `2i+2` for the even dots (rows
/// `1..=n`), `2(i-n)-1` for the odd dots (rows `n+1..=2n`).
pub fn label(i: usize, n: usize) -> Result<usize> {
    if i == 0 || i > 2 * n {
        return Err(Error::OutOfRange(format!("row {} with size {}", i, n)));
    }
    Ok(if i <= n { 2 * i + 2 } else { 2 * (i - n) - 1 })
}

/// Inverse of [`label`]: the row carrying a given label.
pub fn row_of_label(lab: usize, n: usize) -> Result<usize> {
    if lab % 2 == 0 {
        if lab >= 4 && lab <= 2 * n + 2 {
            return Ok((lab - 2) / 2);
        }
    } else if lab >= 1 && lab <= 2 * n - 1 {
        return Ok(n + (lab + 1) / 2);
    }
    Err(Error::OutOfRange(format!(
        "{} is not a dot label for size {}",
        lab, n
    )))
}

/// All Dellac configurations of size `n`, in lexicographic order of the
/// col vector.
///
/// Backtracks over rows with live column-capacity counters; a column that
/// falls behind the band is pruned immediately, so the search tree stays
/// proportional to the output.
pub fn enumerate_dellac(n: usize) -> Vec<DellacConfig> {
    assert!(n >= 1);
    let mut counts = vec![0u8; n + 1];
    let mut col = Vec::with_capacity(2 * n);
    let mut out = Vec::new();
    fill_dellac(n, &mut counts, &mut col, &mut out);
    out
}

fn fill_dellac(n: usize, counts: &mut Vec<u8>, col: &mut Vec<usize>, out: &mut Vec<DellacConfig>) {
    let row = col.len() + 1;
    if row > 2 * n {
        out.push(DellacConfig {
            n,
            col: col.clone(),
        });
        return;
    }
    // once rows move past column `row - n - 1`, it can never fill up
    if row > n + 1 && counts[row - n - 1] != 2 {
        return;
    }
    let lo = row.saturating_sub(n).max(1);
    let hi = row.min(n);
    for c in lo..=hi {
        if counts[c] < 2 {
            counts[c] += 1;
            col.push(c);
            fill_dellac(n, counts, col, out);
            col.pop();
            counts[c] -= 1;
        }
    }
}

/// The unique configuration with zero inversions: column `j` holds the
/// dots of rows `2j-1` and `2j`.
pub fn c0(n: usize) -> DellacConfig {
    assert!(n >= 1);
    let mut col = vec![0; 2 * n];
    for j in 1..=n {
        col[2 * j - 2] = j;
        col[2 * j - 1] = j;
    }
    DellacConfig { n, col }
}

/// The unique configuration with `binom(n,2)` inversions: column `j`
/// holds the dots of rows `j` and `n+j`.
pub fn c1(n: usize) -> DellacConfig {
    assert!(n >= 1);
    let mut col = vec![0; 2 * n];
    for j in 1..=n {
        col[j - 1] = j;
        col[n + j - 1] = j;
    }
    DellacConfig { n, col }
}

/// Poincaré polynomial `Σ_C q^{2·inv(C)}` over `DC(n)`.
pub fn poincare(n: usize) -> QPoly {
    if n == 0 {
        return QPoly::one();
    }
    let mut acc = QPoly::zero();
    for c in enumerate_dellac(n) {
        acc = &acc + &QPoly::monomial(2 * c.inv());
    }
    acc
}

/// The q-analog `h̃_n(q) = Σ_C q^{binom(n,2) - inv(C)}` over `DC(n)`.
pub fn htilde(n: usize) -> QPoly {
    if n == 0 {
        return QPoly::one();
    }
    let top = binom2(n);
    let mut acc = QPoly::zero();
    for c in enumerate_dellac(n) {
        acc = &acc + &QPoly::monomial(top - c.inv());
    }
    acc
}

/// The switching graph on `DC(n)`: vertices in enumeration order, edges
/// between a configuration and each distinct switch of it.
#[derive(Clone, Debug)]
pub struct SwitchingGraph {
    configs: Vec<DellacConfig>,
    adj: Vec<Vec<usize>>,
}

impl SwitchingGraph {
    pub fn vertex_count(&self) -> usize {
        self.configs.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn configs(&self) -> &[DellacConfig] {
        &self.configs
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn is_connected(&self) -> bool {
        if self.configs.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.configs.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut visited = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    visited += 1;
                    stack.push(w);
                }
            }
        }
        visited == self.configs.len()
    }

    /// Graphviz rendering; vertices are labelled by their col vectors.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph switching {\n");
        for (v, c) in self.configs.iter().enumerate() {
            out.push_str(&format!("  v{} [label=\"{}\"];\n", v, c));
        }
        for (v, ns) in self.adj.iter().enumerate() {
            for &w in ns {
                if v < w {
                    out.push_str(&format!("  v{} -- v{};\n", v, w));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

pub fn switching_graph(n: usize) -> SwitchingGraph {
    let configs = enumerate_dellac(n);
    let index: HashMap<&[usize], usize> = configs
        .iter()
        .enumerate()
        .map(|(i, c)| (c.col(), i))
        .collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); configs.len()];
    for (v, c) in configs.iter().enumerate() {
        for i in 1..2 * n {
            if c.is_switchable(i).unwrap() {
                let s = c.switch(i).unwrap();
                if s != *c {
                    let w = index[s.col()];
                    if !adj[v].contains(&w) {
                        adj[v].push(w);
                    }
                }
            }
        }
        adj[v].sort_unstable();
    }
    SwitchingGraph { configs, adj }
}
