//! Dyck paths, μ-weighted path sums, Dellac histories, and the bijection
//! `Φ : DC(n) -> DH(n)` with its inverse `Ψ`.
//!
//! A history decorates each down step of a Dyck path with a pair of
//! integers whose bounds depend on the shape of the two-step block
//! (column) containing the step; the blocks pair up the `2n` steps as
//! `(p_{2j-2}, p_{2j-1}), (p_{2j-1}, p_{2j})` for `j = 1..n`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::dellac::DellacConfig;
use crate::error::{Error, Result};
use crate::qpolys::QPoly;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Step {
    Up,
    Down,
}

/// A Dyck path: `2n` up/down steps from height 0 back to height 0,
/// never dipping below 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DyckPath {
    steps: Vec<Step>,
}

/// Shape of the two-step block over column `j`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairShape {
    UpUp,
    DownUp,
    UpDown,
    DownDown,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.len() % 2 != 0 {
            return Err(Error::InvalidArgument(format!(
                "a Dyck path has even length, got {}",
                steps.len()
            )));
        }
        let mut height = 0i64;
        for (i, s) in steps.iter().enumerate() {
            height += match s {
                Step::Up => 1,
                Step::Down => -1,
            };
            if height < 0 {
                return Err(Error::InvalidArgument(format!(
                    "path dips below zero after step {}",
                    i + 1
                )));
            }
        }
        if height != 0 {
            return Err(Error::InvalidArgument(
                "path does not return to height zero".into(),
            ));
        }
        Ok(DyckPath { steps })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'U' => Ok(Step::Up),
                'D' => Ok(Step::Down),
                other => Err(Error::InvalidArgument(format!(
                    "unexpected path character {:?}",
                    other
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }

    /// Half-length `n` (the number of up steps).
    pub fn n(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Heights after each prefix; `heights()[i]` is the height after `i`
    /// steps, so the vector has length `2n + 1`.
    pub fn heights(&self) -> Vec<usize> {
        let mut hs = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0usize;
        hs.push(h);
        for s in &self.steps {
            match s {
                Step::Up => h += 1,
                Step::Down => h -= 1,
            }
            hs.push(h);
        }
        hs
    }

    pub fn max_height(&self) -> usize {
        self.heights().into_iter().max().unwrap_or(0)
    }

    /// Shape of the block over column `j` (1-based).
    pub fn pair_shape(&self, j: usize) -> PairShape {
        match (self.steps[2 * j - 2], self.steps[2 * j - 1]) {
            (Step::Up, Step::Up) => PairShape::UpUp,
            (Step::Down, Step::Up) => PairShape::DownUp,
            (Step::Up, Step::Down) => PairShape::UpDown,
            (Step::Down, Step::Down) => PairShape::DownDown,
        }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

/// All Dyck paths of length `2n`, U-before-D lexicographic.
pub fn enumerate_dyck(n: usize) -> Vec<DyckPath> {
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(2 * n);
    fill_dyck(n, n, 0, &mut steps, &mut out);
    out
}

fn fill_dyck(
    ups: usize,
    downs: usize,
    height: usize,
    steps: &mut Vec<Step>,
    out: &mut Vec<DyckPath>,
) {
    if ups == 0 && downs == 0 {
        out.push(DyckPath {
            steps: steps.clone(),
        });
        return;
    }
    if ups > 0 {
        steps.push(Step::Up);
        fill_dyck(ups - 1, downs, height + 1, steps, out);
        steps.pop();
    }
    if height > 0 {
        steps.push(Step::Down);
        fill_dyck(ups, downs - 1, height - 1, steps, out);
        steps.pop();
    }
}

/// Weight of a path under the sequence `mu`: every down step from height
/// `h` contributes the factor `mu[h-1]`, up steps contribute 1.
pub fn weight_mu(path: &DyckPath, mu: &[QPoly]) -> Result<QPoly> {
    let mut acc = QPoly::one();
    let mut height = 0usize;
    for s in path.steps() {
        match s {
            Step::Up => height += 1,
            Step::Down => {
                let factor = mu.get(height - 1).ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "weight sequence too short: need mu_{}, have {} weights",
                        height,
                        mu.len()
                    ))
                })?;
                acc = &acc * factor;
                height -= 1;
            }
        }
    }
    Ok(acc)
}

/// A Dellac history: a Dyck path together with one integer pair per down
/// step (indexed by down-step ordinal), subject to the case bounds of
/// [`validate_history`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DellacHistory {
    pub path: DyckPath,
    pub xi: Vec<(usize, usize)>,
}

impl fmt::Display for DellacHistory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ", self.path)?;
        let parts: Vec<String> = self
            .xi
            .iter()
            .map(|(a, b)| format!("({},{})", a, b))
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Which of the three weight cases a down step falls in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum CaseKind {
    /// down-then-up block
    DownUp,
    /// up-then-down block
    UpDown,
    /// first of two consecutive down steps
    DdFirst,
    /// second of two consecutive down steps
    DdSecond,
}

/// Per-down-step data: the column `j` of its block, the anchor `k`
/// (the block starts at even height `2k`), and the case.
#[derive(Clone, Copy, Debug)]
struct DownCase {
    pair: usize,
    k: usize,
    kind: CaseKind,
}

fn down_cases(path: &DyckPath) -> Vec<DownCase> {
    let mut cases = Vec::with_capacity(path.n());
    let mut height = 0usize;
    for j in 1..=path.n() {
        let k = height / 2;
        match path.pair_shape(j) {
            PairShape::UpUp => height += 2,
            PairShape::DownUp => cases.push(DownCase {
                pair: j,
                k,
                kind: CaseKind::DownUp,
            }),
            PairShape::UpDown => cases.push(DownCase {
                pair: j,
                k,
                kind: CaseKind::UpDown,
            }),
            PairShape::DownDown => {
                cases.push(DownCase {
                    pair: j,
                    k,
                    kind: CaseKind::DdFirst,
                });
                cases.push(DownCase {
                    pair: j,
                    k,
                    kind: CaseKind::DdSecond,
                });
                height -= 2;
            }
        }
    }
    cases
}

fn case_allows(kind: CaseKind, k: usize, n1: usize, n2: usize) -> bool {
    match kind {
        CaseKind::DownUp => n1 <= k && n1 > n2,
        CaseKind::UpDown => n1 <= n2 && n2 <= k,
        CaseKind::DdFirst => k >= 1 && n1 <= k - 1 && n1 >= n2,
        CaseKind::DdSecond => k >= 1 && n1 <= n2 && n2 <= k - 1,
    }
}

fn case_exponent(kind: CaseKind, k: usize, n1: usize, n2: usize) -> usize {
    match kind {
        CaseKind::DownUp | CaseKind::UpDown => 2 * k - n1 - n2,
        CaseKind::DdFirst => 2 * k - 1 - n1 - n2,
        CaseKind::DdSecond => 2 * k - 2 - n1 - n2,
    }
}

fn case_choices(kind: CaseKind, k: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n1 in 0..=k {
        for n2 in 0..=k {
            if case_allows(kind, k, n1, n2) {
                out.push((n1, n2));
            }
        }
    }
    out
}

fn case_choice_count(kind: CaseKind, k: usize) -> usize {
    match kind {
        CaseKind::DownUp | CaseKind::DdFirst | CaseKind::DdSecond => k * (k + 1) / 2,
        CaseKind::UpDown => (k + 1) * (k + 2) / 2,
    }
}

/// True iff every `ξ_i` satisfies the inequality chain of its down
/// step's case.
pub fn validate_history(h: &DellacHistory) -> bool {
    let cases = down_cases(&h.path);
    if h.xi.len() != cases.len() {
        return false;
    }
    cases
        .iter()
        .zip(&h.xi)
        .all(|(c, &(n1, n2))| case_allows(c.kind, c.k, n1, n2))
}

/// Exponent of the history weight `q^e`.
pub fn weight_exponent(h: &DellacHistory) -> Result<usize> {
    if !validate_history(h) {
        return Err(Error::InvalidHistory(format!("{}", h)));
    }
    Ok(down_cases(&h.path)
        .iter()
        .zip(&h.xi)
        .map(|(c, &(n1, n2))| case_exponent(c.kind, c.k, n1, n2))
        .sum())
}

/// The history weight, a monomial `q^e`.
pub fn history_weight(h: &DellacHistory) -> Result<QPoly> {
    Ok(QPoly::monomial(weight_exponent(h)?))
}

/// All histories carried by one fixed path (the fiber above it).
pub fn histories_for_path(path: &DyckPath) -> Vec<DellacHistory> {
    let cases = down_cases(path);
    let choice_sets: Vec<Vec<(usize, usize)>> =
        cases.iter().map(|c| case_choices(c.kind, c.k)).collect();
    let mut out = Vec::new();
    let mut xi = Vec::with_capacity(cases.len());
    fill_xi(path, &choice_sets, &mut xi, &mut out);
    out
}

fn fill_xi(
    path: &DyckPath,
    choice_sets: &[Vec<(usize, usize)>],
    xi: &mut Vec<(usize, usize)>,
    out: &mut Vec<DellacHistory>,
) {
    if xi.len() == choice_sets.len() {
        out.push(DellacHistory {
            path: path.clone(),
            xi: xi.clone(),
        });
        return;
    }
    for &choice in &choice_sets[xi.len()] {
        xi.push(choice);
        fill_xi(path, choice_sets, xi, out);
        xi.pop();
    }
}

/// All Dellac histories of length `2n`, grouped by path in path
/// enumeration order.
pub fn enumerate_histories(n: usize) -> Vec<DellacHistory> {
    enumerate_dyck(n)
        .iter()
        .flat_map(histories_for_path)
        .collect()
}

/// `|DH(n)|` by the per-step choice-count product, without materializing
/// the histories.
pub fn count_histories(n: usize) -> BigInt {
    let mut total = BigInt::zero();
    for path in enumerate_dyck(n) {
        let mut prod = BigInt::one();
        for c in down_cases(&path) {
            prod *= BigInt::from(case_choice_count(c.kind, c.k));
        }
        total += prod;
    }
    total
}

/// For each two-up column, the two-down column it is matched with (and
/// vice versa): a two-down block starting at height `2k` matches the
/// last preceding two-up block ending at height `2k`.
fn uu_dd_matches(path: &DyckPath) -> Vec<Option<usize>> {
    let n = path.n();
    let mut partner = vec![None; n + 1];
    let mut stacks: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut height = 0usize;
    for j in 1..=n {
        match path.pair_shape(j) {
            PairShape::UpUp => {
                height += 2;
                stacks[height / 2].push(j);
            }
            PairShape::DownDown => {
                let jm = stacks[height / 2]
                    .pop()
                    .expect("every two-down block has a matching two-up block");
                partner[jm] = Some(j);
                partner[j] = Some(jm);
                height -= 2;
            }
            _ => {}
        }
    }
    partner
}

/// The bijection `Φ`: reads the configuration column by column, emitting
/// two ups for a two-even column, an up/down block for a mixed column
/// (down first exactly when `l^e` of the lower dot exceeds `r^o` of the
/// upper dot), and two downs for a two-odd column. The ξ pair of a mixed
/// column's down step is `(l^e(lower), r^o(upper))`; a two-odd column
/// takes `(l^e, l^e)` of its matched two-even column on the first down
/// step and `(r^o, r^o)` of its own dots on the second.
pub fn big_phi(config: &DellacConfig) -> DellacHistory {
    let n = config.n();
    let cols = config.columns();
    let mut steps = Vec::with_capacity(2 * n);
    let mut xi = vec![(0usize, 0usize); n];
    let mut down_count = 0usize;
    let mut up_count = 0usize;
    let mut height = 0usize;
    let mut uu_stack: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (idx, &(i1, i2)) in cols.iter().enumerate() {
        let j = idx + 1;
        let k = height / 2;
        if i2 <= n {
            steps.push(Step::Up);
            steps.push(Step::Up);
            up_count += 2;
            debug_assert_eq!(up_count - 1, j + k);
            height += 2;
            uu_stack[height / 2].push(j);
        } else if i1 <= n {
            let le = config.l_even(i1);
            let ro = config.r_odd(i2);
            down_count += 1;
            up_count += 1;
            debug_assert_eq!(down_count, j - k);
            debug_assert_eq!(up_count, j + k);
            xi[down_count - 1] = (le, ro);
            if le > ro {
                steps.push(Step::Down);
                steps.push(Step::Up);
            } else {
                steps.push(Step::Up);
                steps.push(Step::Down);
            }
        } else {
            let jm = uu_stack[k]
                .pop()
                .expect("a two-even column precedes every two-odd column at its level");
            let (m1, m2) = cols[jm - 1];
            down_count += 1;
            debug_assert_eq!(down_count, j - k);
            xi[down_count - 1] = (config.l_even(m1), config.l_even(m2));
            xi[down_count] = (config.r_odd(i1), config.r_odd(i2));
            down_count += 1;
            steps.push(Step::Down);
            steps.push(Step::Down);
            assert!(height >= 2, "path would cross below zero");
            height -= 2;
        }
    }
    let path = DyckPath::new(steps).expect("the construction yields a Dyck path");
    let history = DellacHistory { path, xi };
    debug_assert!(validate_history(&history));
    history
}

/// The inverse bijection `Ψ`: two independent insertion sweeps.
///
/// Odd dots are inserted following the down steps left to right,
/// consuming entries of an ascending index list; even dots follow the up
/// steps right to left, consuming entries of a descending list. Which
/// entry is consumed is dictated by the ξ pairs.
pub fn big_psi(h: &DellacHistory) -> Result<DellacConfig> {
    if !validate_history(h) {
        return Err(Error::InvalidHistory(format!("{}", h)));
    }
    let n = h.path.n();
    if n == 0 {
        return Err(Error::InvalidArgument(
            "the empty history has no configuration".into(),
        ));
    }

    let cases = down_cases(&h.path);
    // column -> ordinal of its first down step / its up steps
    let mut first_down_of_col = vec![0usize; n + 1];
    let mut down_col = vec![0usize; n + 1];
    for (ord0, c) in cases.iter().enumerate() {
        down_col[ord0 + 1] = c.pair;
        if first_down_of_col[c.pair] == 0 {
            first_down_of_col[c.pair] = ord0 + 1;
        }
    }
    let mut up_col = vec![0usize; n + 1];
    let mut ups = 0usize;
    for j in 1..=n {
        let shape = h.path.pair_shape(j);
        let count = match shape {
            PairShape::UpUp => 2,
            PairShape::DownUp | PairShape::UpDown => 1,
            PairShape::DownDown => 0,
        };
        for _ in 0..count {
            ups += 1;
            up_col[ups] = j;
        }
    }
    let partner = uu_dd_matches(&h.path);

    let mut col = vec![0usize; 2 * n];

    // odd dots, down steps left to right
    let mut io: Vec<usize> = (1..=n).collect();
    let mut i = 1;
    while i <= n {
        let j = down_col[i];
        match h.path.pair_shape(j) {
            PairShape::DownUp | PairShape::UpDown => {
                let (_, n2) = h.xi[i - 1];
                let q = io.remove(n2);
                col[n + q - 1] = j;
                i += 1;
            }
            PairShape::DownDown => {
                let (n1, n2) = h.xi[i]; // pair of the second down step
                let q2 = io.remove(n2 + 1);
                let q1 = io.remove(n1);
                col[n + q1 - 1] = j;
                col[n + q2 - 1] = j;
                i += 2;
            }
            PairShape::UpUp => unreachable!("a down step cannot sit in a two-up block"),
        }
    }

    // even dots, up steps right to left
    let mut ie: Vec<usize> = (1..=n).rev().collect();
    let mut i = 1;
    while i <= n {
        let u = n + 1 - i;
        let j = up_col[u];
        match h.path.pair_shape(j) {
            PairShape::DownUp | PairShape::UpDown => {
                let i0 = first_down_of_col[j];
                let (n1, _) = h.xi[i0 - 1];
                let p = ie.remove(n1);
                col[p - 1] = j;
                i += 1;
            }
            PairShape::UpUp => {
                let j0 = partner[j].expect("two-up blocks are always matched");
                let i0 = first_down_of_col[j0];
                let (n1, n2) = h.xi[i0 - 1]; // pair of the matched first down step
                let p2 = ie.remove(n1 + 1);
                let p1 = ie.remove(n2);
                col[p2 - 1] = j;
                col[p1 - 1] = j;
                i += 2;
            }
            PairShape::DownDown => unreachable!("an up step cannot sit in a two-down block"),
        }
    }

    DellacConfig::new(n, col)
        .map_err(|e| Error::Integrity(format!("Psi produced an invalid configuration: {}", e)))
}
