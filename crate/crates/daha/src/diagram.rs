//! Periodic Cherednik and skew diagrams, the row-reading tableau, contents
//! and standard tableaux.
//!
//! A diagram is given by its fundamental domain, rows `1..=m`, with row `a`
//! occupying columns `mu_a..=lam_a`. Other rows follow from the period
//! `(m, -l)`: `mu_{a + km} = mu_a - kl`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{DahaError, Result};
use crate::weyl::{split_index, AffinePermutation, Character};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Box {
    pub a: i64,
    pub b: i64,
}

impl Box {
    pub fn new(a: i64, b: i64) -> Self {
        Box { a, b }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagramKind {
    Cherednik,
    Skew,
}

/// The first violated condition of the diagram definition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: String,
    pub row: Option<i64>,
    pub message: String,
}

/// JSON form: `{"m":2,"l":1,"mu":[1,1],"lambda":[2,2]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramSpec {
    pub m: usize,
    pub l: i64,
    pub mu: Vec<i64>,
    #[serde(rename = "lambda")]
    pub lam: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodicDiagram {
    m: usize,
    l: i64,
    mu: Vec<i64>,
    lam: Vec<i64>,
    n: usize,
    /// `prefix[a]` = number of boxes in fundamental rows before row `a + 1`.
    prefix: Vec<i64>,
}

impl PeriodicDiagram {
    /// Builds a diagram from its fundamental domain. Checks conditions (i)
    /// and (ii) of the definition; the edge conditions are left to
    /// [`PeriodicDiagram::validate`].
    pub fn new(m: usize, l: i64, mu: Vec<i64>, lam: Vec<i64>) -> Result<Self> {
        if m == 0 || mu.len() != m || lam.len() != m {
            return Err(DahaError::InvalidDiagram(format!(
                "need m >= 1 and m row ends; got m = {m}, |mu| = {}, |lambda| = {}",
                mu.len(),
                lam.len()
            )));
        }
        if let Some(a) = (0..m).find(|&a| mu[a] > lam[a]) {
            return Err(DahaError::InvalidDiagram(format!("row {} is empty", a + 1)));
        }
        let mut prefix = vec![0i64; m + 1];
        for a in 0..m {
            prefix[a + 1] = prefix[a] + lam[a] - mu[a] + 1;
        }
        let n = prefix[m] as usize;
        if n < 2 || m > n {
            return Err(DahaError::InvalidDiagram(format!("need 2 <= n and m <= n; got n = {n}, m = {m}")));
        }
        if m as i64 + l < 1 {
            return Err(DahaError::InvalidDiagram(format!("kappa = m + l = {} < 1", m as i64 + l)));
        }
        Ok(Self {
            m,
            l,
            mu,
            lam,
            n,
            prefix,
        })
    }

    /// Builds a diagram whose fundamental rows start at `first_row` and
    /// shifts it by `(r, r)` so that they become rows `1..=m`. Returns the
    /// normalized diagram and `r`.
    pub fn placed(first_row: i64, m: usize, l: i64, mu: Vec<i64>, lam: Vec<i64>) -> Result<(Self, i64)> {
        let r = first_row - 1;
        let mu = mu.into_iter().map(|v| v - r).collect();
        let lam = lam.into_iter().map(|v| v - r).collect();
        Ok((Self::new(m, l, mu, lam)?, r))
    }

    pub fn from_spec(spec: &DiagramSpec) -> Result<Self> {
        Self::new(spec.m, spec.l, spec.mu.clone(), spec.lam.clone())
    }

    pub fn to_spec(&self) -> DiagramSpec {
        DiagramSpec {
            m: self.m,
            l: self.l,
            mu: self.mu.clone(),
            lam: self.lam.clone(),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let spec: DiagramSpec =
            serde_json::from_str(s).map_err(|e| DahaError::InvalidDiagram(format!("malformed JSON: {e}")))?;
        Self::from_spec(&spec)
    }

    pub fn m(&self) -> usize {
        self.m
    }
    pub fn l(&self) -> i64 {
        self.l
    }
    pub fn mu(&self) -> &[i64] {
        &self.mu
    }
    pub fn lam(&self) -> &[i64] {
        &self.lam
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn kappa(&self) -> i64 {
        self.m as i64 + self.l
    }

    /// `(mu_a, lam_a)` for any row `a`.
    pub fn row_bounds(&self, a: i64) -> (i64, i64) {
        let (r, k) = split_index(a, self.m);
        (self.mu[r - 1] - k * self.l, self.lam[r - 1] - k * self.l)
    }

    pub fn contains(&self, bx: Box) -> bool {
        let (lo, hi) = self.row_bounds(bx.a);
        lo <= bx.b && bx.b <= hi
    }

    /// Checks the edge conditions, including the wrap from row `m` to `m+1`.
    pub fn validate(&self, kind: DiagramKind) -> std::result::Result<(), Violation> {
        for a in 1..=self.m as i64 {
            let (mu_a, lam_a) = self.row_bounds(a);
            let (mu_b, lam_b) = self.row_bounds(a + 1);
            match kind {
                DiagramKind::Cherednik => {
                    if mu_b > mu_a + 1 {
                        return Err(Violation {
                            condition: "(iv)".into(),
                            row: Some(a),
                            message: format!("mu_{} = {mu_b} > mu_{a} + 1 = {}", a + 1, mu_a + 1),
                        });
                    }
                    if mu_b == mu_a + 1 && lam_b > lam_a + 1 {
                        return Err(Violation {
                            condition: "(iv)".into(),
                            row: Some(a),
                            message: format!(
                                "mu_{} = mu_{a} + 1 but lambda_{} = {lam_b} > lambda_{a} + 1 = {}",
                                a + 1,
                                a + 1,
                                lam_a + 1
                            ),
                        });
                    }
                }
                DiagramKind::Skew => {
                    if mu_b > mu_a {
                        return Err(Violation {
                            condition: "(iv')".into(),
                            row: Some(a),
                            message: format!("mu_{} = {mu_b} > mu_{a} = {mu_a}", a + 1),
                        });
                    }
                    if lam_b > lam_a {
                        return Err(Violation {
                            condition: "(iv')".into(),
                            row: Some(a),
                            message: format!("lambda_{} = {lam_b} > lambda_{a} = {lam_a}", a + 1),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_skew(&self) -> bool {
        self.validate(DiagramKind::Skew).is_ok()
    }

    pub fn is_cherednik(&self) -> bool {
        self.validate(DiagramKind::Cherednik).is_ok()
    }

    fn require_skew(&self) -> Result<()> {
        self.validate(DiagramKind::Skew)
            .map_err(|v| DahaError::Precondition(format!("not a periodic skew diagram: {}", v.message)))
    }

    /// For a skew diagram, infinite columns occur exactly when `l = 0`.
    pub fn has_infinite_column(&self) -> Result<bool> {
        self.require_skew()?;
        Ok(self.l == 0)
    }

    /// The row-reading tableau `T_0`.
    pub fn t0_label(&self, bx: Box) -> Result<i64> {
        if !self.contains(bx) {
            return Err(DahaError::BoxNotInDiagram(bx.a, bx.b));
        }
        let (r, k) = split_index(bx.a, self.m);
        let b = bx.b + k * self.l;
        Ok(self.prefix[r - 1] + b - self.mu[r - 1] + 1 + k * self.n as i64)
    }

    /// The box of `T_0` holding `i`.
    pub fn t0_box(&self, i: i64) -> Box {
        let (r, k) = split_index(i, self.n);
        let r = r as i64;
        let a = (0..self.m).rfind(|&a| self.prefix[a] < r).expect("label in range");
        let b = self.mu[a] + (r - self.prefix[a] - 1);
        Box::new(a as i64 + 1 + k * self.m as i64, b - k * self.l)
    }

    pub fn row_of(&self, i: i64) -> i64 {
        self.t0_box(i).a
    }

    /// Content `b - a` of the box of `T_0` holding `i`.
    pub fn content(&self, i: i64) -> i64 {
        let bx = self.t0_box(i);
        bx.b - bx.a
    }

    /// `χ_D = (C_{T_0}(1), ..., C_{T_0}(n))` with `κ = m + l`.
    pub fn chi(&self) -> Character {
        let vals: Vec<i64> = (1..=self.n as i64).map(|i| self.content(i)).collect();
        Character::from_ints(self.kappa(), &vals)
    }

    /// Indices `i` in `1..=n` with `i` and `i+1` in the same row of `T_0`.
    pub fn row_set(&self) -> BTreeSet<usize> {
        (1..=self.n)
            .filter(|&i| self.row_of(i as i64) == self.row_of(i as i64 + 1))
            .collect()
    }

    /// Returns `r` with `other = self + (r, r)`, if any.
    pub fn is_shift_equivalent(&self, other: &PeriodicDiagram) -> Option<i64> {
        if self.m != other.m || self.l != other.l {
            return None;
        }
        let kappa = self.kappa();
        let m = self.m as i64;
        'r0: for r0 in 0..m {
            let mut shift = None;
            for a in 1..=m {
                let (mu, lam) = self.row_bounds(a - r0);
                let (mu2, lam2) = other.row_bounds(a);
                let d = mu2 - mu - r0;
                if lam2 - lam - r0 != d || d.rem_euclid(kappa) != 0 {
                    continue 'r0;
                }
                match shift {
                    None => shift = Some(d),
                    Some(s) if s != d => continue 'r0,
                    _ => {}
                }
            }
            let k = shift.unwrap() / kappa;
            return Some(r0 + k * m);
        }
        None
    }

    /// Boxes of row `a`.
    pub fn row_boxes(&self, a: i64) -> impl Iterator<Item = Box> {
        let (lo, hi) = self.row_bounds(a);
        (lo..=hi).map(move |b| Box::new(a, b))
    }

    /// The bottom box of column `c`, if the column is nonempty and finite
    /// below. Requires `l > 0`.
    pub fn column_bottom(&self, c: i64) -> Option<Box> {
        assert!(self.l > 0, "column_bottom needs l > 0");
        let m = self.m as i64;
        let mut best: Option<i64> = None;
        for r in 0..self.m {
            // rows r+1+km hold column c iff mu - kl <= c <= lam - kl
            let k_max = (self.lam[r] - c).div_euclid(self.l);
            if self.mu[r] - k_max * self.l <= c {
                let a = r as i64 + 1 + k_max * m;
                best = Some(best.map_or(a, |x: i64| x.max(a)));
            }
        }
        best.map(|a| Box::new(a, c))
    }

    /// ASCII picture of rows `1-m ..= 2m` labelled by `T = wT_0`.
    pub fn render(&self, w: Option<&AffinePermutation>) -> String {
        let m = self.m as i64;
        let rows: Vec<i64> = (1 - m..=2 * m).collect();
        let label = |bx: Box| {
            let t0 = self.t0_label(bx).expect("box in diagram");
            w.map_or(t0, |w| w.act_int(t0))
        };
        let lo = rows.iter().map(|&a| self.row_bounds(a).0).min().unwrap();
        let hi = rows.iter().map(|&a| self.row_bounds(a).1).max().unwrap();
        let width = rows
            .iter()
            .flat_map(|&a| self.row_boxes(a))
            .map(|bx| label(bx).to_string().len())
            .max()
            .unwrap_or(1)
            + 1;
        let mut out = String::new();
        for &a in &rows {
            let mut line = String::new();
            for b in lo..=hi {
                let bx = Box::new(a, b);
                if self.contains(bx) {
                    let _ = write!(line, "{:>width$}", label(bx));
                } else {
                    let _ = write!(line, "{:>width$}", "");
                }
            }
            let _ = writeln!(out, "{:>4} |{}", a, line.trim_end());
        }
        out
    }
}

/// A tableau `T = wT_0` on a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    pub diagram: PeriodicDiagram,
    pub w: AffinePermutation,
}

impl Tableau {
    pub fn new(diagram: PeriodicDiagram, w: AffinePermutation) -> Result<Self> {
        if w.n() != diagram.n() {
            return Err(DahaError::DegreeMismatch(diagram.n(), w.n()));
        }
        Ok(Self { diagram, w })
    }

    pub fn row_reading(diagram: &PeriodicDiagram) -> Self {
        Self {
            diagram: diagram.clone(),
            w: AffinePermutation::identity(diagram.n()),
        }
    }

    pub fn label(&self, bx: Box) -> Result<i64> {
        Ok(self.w.act_int(self.diagram.t0_label(bx)?))
    }

    pub fn box_of(&self, i: i64) -> Box {
        self.diagram.t0_box(self.w.inverse().act_int(i))
    }

    /// `C_T(i)`.
    pub fn content(&self, i: i64) -> i64 {
        let bx = self.box_of(i);
        bx.b - bx.a
    }

    pub fn contents(&self) -> Vec<i64> {
        (1..=self.diagram.n() as i64).map(|i| self.content(i)).collect()
    }

    pub fn is_standard(&self) -> bool {
        is_standard(&self.diagram, &self.w)
    }
}

/// Whether `wT_0` increases along rows and down columns.
pub fn is_standard(d: &PeriodicDiagram, w: &AffinePermutation) -> bool {
    let m = d.m() as i64;
    let label = |bx: Box| w.act_int(d.t0_label(bx).expect("box in diagram"));
    for a in 0..=m + 1 {
        for bx in d.row_boxes(a) {
            let here = label(bx);
            let right = Box::new(a, bx.b + 1);
            if d.contains(right) && label(right) < here {
                return false;
            }
            let below = Box::new(a + 1, bx.b);
            if a <= m && d.contains(below) && label(below) < here {
                return false;
            }
        }
    }
    true
}

/// Grade-0 elements `w` with `wT_0` standard and `l(w) <= bound`, sorted by
/// length then window. Every standard tableau is `π^k` applied to exactly
/// one grade-0 standard tableau, so these represent all of them.
///
/// Built by closure from `T_0` under the simple reflections through
/// standard tableaux.
pub fn enumerate_standard(d: &PeriodicDiagram, bound: usize) -> Vec<AffinePermutation> {
    let n = d.n();
    let id = AffinePermutation::identity(n);
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for i in 0..n {
            let v = w.left_mul_s(i);
            if seen.contains(&v) || v.length() > bound || !is_standard(d, &v) {
                continue;
            }
            seen.insert(v.clone());
            queue.push_back(v);
        }
    }
    sort_by_length(seen.into_iter().collect())
}

/// Oracle for [`enumerate_standard`]: every grade-0 element of length at
/// most `bound`, filtered by standardness.
pub fn enumerate_standard_brute_force(d: &PeriodicDiagram, bound: usize) -> Vec<AffinePermutation> {
    all_elements_up_to(d.n(), bound)
        .into_iter()
        .filter(|w| is_standard(d, w))
        .collect()
}

/// Every grade-0 element of length at most `bound`, sorted.
pub fn all_elements_up_to(n: usize, bound: usize) -> Vec<AffinePermutation> {
    let id = AffinePermutation::identity(n);
    let mut seen = BTreeSet::from([id.clone()]);
    let mut layer = vec![id];
    for _ in 0..bound {
        let mut next = Vec::new();
        for w in &layer {
            for i in 0..n {
                let v = w.left_mul_s(i);
                if seen.insert(v.clone()) {
                    next.push(v);
                }
            }
        }
        layer = next;
    }
    sort_by_length(seen.into_iter().filter(|w| w.length() <= bound).collect())
}

fn sort_by_length(mut v: Vec<AffinePermutation>) -> Vec<AffinePermutation> {
    v.sort_by_cached_key(|w| (w.length(), w.clone()));
    v
}
