//! The extended affine Weyl group of type A in window notation.
//!
//! An element is a bijection `w` of the integers with `w(j + n) = w(j) + n`,
//! stored as its window `(w(1), ..., w(n))`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num::{BigRational, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{DahaError, Result};

/// Generators of the extended affine Weyl group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// Simple reflection `s_i`, `0 <= i < n`.
    S(usize),
    Pi,
    PiInverse,
    /// Translation `x_i`, `1 <= i <= n`.
    X(usize),
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffinePermutation {
    n: usize,
    window: Vec<i64>,
}

impl fmt::Debug for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.window)
    }
}

impl PartialOrd for AffinePermutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AffinePermutation {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, &self.window).cmp(&(other.n, &other.window))
    }
}

/// Splits `j` as `r + k n` with `r` in `1..=n`.
#[inline]
pub fn split_index(j: i64, n: usize) -> (usize, i64) {
    let n = n as i64;
    let k = (j - 1).div_euclid(n);
    ((j - k * n) as usize, k)
}

#[inline]
pub fn residue(j: i64, n: usize) -> usize {
    (j.rem_euclid(n as i64)) as usize
}

impl AffinePermutation {
    /// Builds an element from its window, checking that the entries are
    /// pairwise distinct mod `n`.
    pub fn from_window(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(DahaError::InvalidWindow("empty window".into()));
        }
        let mut seen = vec![false; n];
        for &v in &window {
            let r = residue(v, n);
            if seen[r] {
                return Err(DahaError::InvalidWindow(format!(
                    "{window:?} has two entries congruent to {r} mod {n}"
                )));
            }
            seen[r] = true;
        }
        Ok(Self { n, window })
    }

    pub(crate) fn from_window_unchecked(window: Vec<i64>) -> Self {
        Self {
            n: window.len(),
            window,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_window_unchecked((1..=n as i64).collect())
    }

    pub fn generator(kind: Generator, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(DahaError::IndexOutOfRange(format!("degree {n} < 2")));
        }
        let nn = n as i64;
        let mut w: Vec<i64> = (1..=nn).collect();
        match kind {
            Generator::S(0) => {
                w[0] = 0;
                w[n - 1] = nn + 1;
            }
            Generator::S(i) if i < n => w.swap(i - 1, i),
            Generator::S(i) => {
                return Err(DahaError::IndexOutOfRange(format!("s_{i} with n = {n}")))
            }
            Generator::Pi => w.iter_mut().for_each(|v| *v += 1),
            Generator::PiInverse => w.iter_mut().for_each(|v| *v -= 1),
            Generator::X(i) if (1..=n).contains(&i) => w[i - 1] += nn,
            Generator::X(i) => {
                return Err(DahaError::IndexOutOfRange(format!("x_{i} with n = {n}")))
            }
        }
        Ok(Self::from_window_unchecked(w))
    }

    pub fn s(i: usize, n: usize) -> Self {
        Self::generator(Generator::S(i % n), n).expect("valid simple reflection")
    }

    /// `π^r`.
    pub fn pi_power(r: i64, n: usize) -> Self {
        Self::from_window_unchecked((1..=n as i64).map(|j| j + r).collect())
    }

    pub fn x(i: usize, n: usize) -> Self {
        Self::generator(Generator::X(i), n).expect("valid translation")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().zip(1..).all(|(&v, j)| v == j)
    }

    pub fn act_int(&self, j: i64) -> i64 {
        let (r, k) = split_index(j, self.n);
        self.window[r - 1] + k * self.n as i64
    }

    pub fn inverse(&self) -> Self {
        let n = self.n;
        let mut inv = vec![0i64; n];
        for (idx, &v) in self.window.iter().enumerate() {
            let (r, k) = split_index(v, n);
            inv[r - 1] = idx as i64 + 1 - k * n as i64;
        }
        Self::from_window_unchecked(inv)
    }

    /// `(self ∘ w)(j) = self(w(j))`.
    pub fn compose(&self, w: &Self) -> Result<Self> {
        if self.n != w.n {
            return Err(DahaError::DegreeMismatch(self.n, w.n));
        }
        Ok(self.mul(w))
    }

    /// Composition without the degree check, for internal use.
    pub fn mul(&self, w: &Self) -> Self {
        debug_assert_eq!(self.n, w.n);
        Self::from_window_unchecked(w.window.iter().map(|&v| self.act_int(v)).collect())
    }

    /// `s_i ∘ self` computed in place of a full composition.
    pub fn left_mul_s(&self, i: usize) -> Self {
        let n = self.n;
        let i = i % n;
        Self::from_window_unchecked(
            self.window
                .iter()
                .map(|&v| {
                    let r = residue(v, n);
                    if r == i {
                        v + 1
                    } else if r == (i + 1) % n {
                        v - 1
                    } else {
                        v
                    }
                })
                .collect(),
        )
    }

    /// `self ∘ s_i`.
    pub fn right_mul_s(&self, i: usize) -> Self {
        let n = self.n;
        let i = i % n;
        let mut w = self.window.clone();
        if i == 0 {
            let first = w[0];
            let last = w[n - 1];
            w[0] = last - n as i64;
            w[n - 1] = first + n as i64;
        } else {
            w.swap(i - 1, i);
        }
        Self::from_window_unchecked(w)
    }

    /// The grade `r`, so that the element lies in `π^r` times the subgroup
    /// generated by the simple reflections.
    pub fn grade(&self) -> i64 {
        let n = self.n as i64;
        let s: i64 = self.window.iter().sum();
        (s - n * (n + 1) / 2) / n
    }

    /// `w^{-1}(i) > w^{-1}(i+1)`, i.e. `l(s_i w) < l(w)`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        let i = (i % self.n) as i64;
        inv.act_int(i) > inv.act_int(i + 1)
    }

    /// `w(i) > w(i+1)`, i.e. `l(w s_i) < l(w)`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        let i = (i % self.n) as i64;
        self.act_int(i) > self.act_int(i + 1)
    }

    /// The inversion set `I_w = R_+ ∩ w(-R_+)`: roots `α_{ij}` with `i < j`
    /// and `w^{-1}(i) > w^{-1}(j)`, normalized so that `1 <= j <= n`.
    pub fn inversion_set(&self) -> BTreeSet<Root> {
        let n = self.n as i64;
        let inv = self.inverse();
        let mut out = BTreeSet::new();
        for j in 1..=n {
            let vj = inv.act_int(j);
            for rho in 1..=n {
                if rho == j {
                    continue;
                }
                let vr = inv.act_int(rho);
                // rho + k n < j and vr + k n > vj
                let k_lo = (vj - vr).div_euclid(n) + 1;
                let k_hi = (j - rho - 1).div_euclid(n);
                for k in k_lo..=k_hi {
                    out.insert(Root::new_unchecked(rho + k * n, j, self.n));
                }
            }
        }
        out
    }

    pub fn length(&self) -> usize {
        let n = self.n as i64;
        let inv = self.inverse();
        let mut len = 0i64;
        for j in 1..=n {
            let vj = inv.act_int(j);
            for rho in 1..=n {
                if rho == j {
                    continue;
                }
                let vr = inv.act_int(rho);
                let k_lo = (vj - vr).div_euclid(n) + 1;
                let k_hi = (j - rho - 1).div_euclid(n);
                len += (k_hi - k_lo + 1).max(0);
            }
        }
        len as usize
    }

    /// A reduced word: `w = π^r s_{i_1} ⋯ s_{i_l}`, obtained by stripping the
    /// smallest left descent repeatedly.
    pub fn reduced_word(&self) -> (Vec<usize>, i64) {
        self.reduced_word_by(DescentChoice::Smallest)
    }

    pub fn reduced_word_by(&self, choice: DescentChoice) -> (Vec<usize>, i64) {
        let n = self.n;
        let mut cur = self.clone();
        let mut letters = Vec::new();
        loop {
            let mut descents = (0..n).filter(|&i| cur.is_left_descent(i));
            let next = match choice {
                DescentChoice::Smallest => descents.next(),
                DescentChoice::Largest => descents.next_back(),
            };
            match next {
                Some(i) => {
                    letters.push(i);
                    cur = cur.left_mul_s(i);
                }
                None => break,
            }
        }
        // now self = s_{i_1} ⋯ s_{i_l} π^r, and s_i π^r = π^r s_{i-r}
        let r = cur.grade();
        let nn = n as i64;
        let word = letters
            .into_iter()
            .map(|i| (i as i64 - r).rem_euclid(nn) as usize)
            .collect();
        (word, r)
    }

    /// Evaluates `π^r s_{i_1} ⋯ s_{i_l}`.
    pub fn from_word(word: &[usize], r: i64, n: usize) -> Self {
        let mut w = Self::pi_power(r, n);
        for &i in word {
            w = w.right_mul_s(i);
        }
        w
    }

    /// Applies the element to a root.
    pub fn act_root(&self, root: &Root) -> Root {
        Root::new_unchecked(self.act_int(root.i), self.act_int(root.j), self.n)
    }

    /// `(wξ)_i = ξ_{w^{-1}(i)}`.
    pub fn act_weight(&self, xi: &Character) -> Result<Character> {
        if xi.n() != self.n {
            return Err(DahaError::DegreeMismatch(self.n, xi.n()));
        }
        let inv = self.inverse();
        let values = (1..=self.n as i64).map(|i| xi.get(inv.act_int(i))).collect();
        Ok(Character::new(xi.kappa(), values))
    }
}

/// Which left descent `reduced_word_by` strips first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescentChoice {
    Smallest,
    Largest,
}

/// Evaluates `π^r s_{i_1} ⋯ s_{i_l}`.
pub fn word_to_perm(word: &[usize], r: i64, n: usize) -> Result<AffinePermutation> {
    if let Some(&bad) = word.iter().find(|&&i| i >= n) {
        return Err(DahaError::IndexOutOfRange(format!("s_{bad} with n = {n}")));
    }
    Ok(AffinePermutation::from_word(word, r, n))
}

/// The affine root `α_{ij} = ε_i - ε_j`, stored with `1 <= j <= n`.
/// Positive roots have `i < j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub i: i64,
    pub j: i64,
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "α({},{})", self.i, self.j)
    }
}

impl Root {
    pub fn new(i: i64, j: i64, n: usize) -> Result<Self> {
        if (i - j).rem_euclid(n as i64) == 0 {
            return Err(DahaError::ImaginaryRoot(i, j));
        }
        Ok(Self::new_unchecked(i, j, n))
    }

    pub(crate) fn new_unchecked(i: i64, j: i64, n: usize) -> Self {
        let (_, k) = split_index(j, n);
        let shift = k * n as i64;
        Root {
            i: i - shift,
            j: j - shift,
        }
    }

    /// The simple root `α_k`; `α_0 = α_{0,1}`.
    pub fn simple(k: usize, n: usize) -> Self {
        let k = (k % n) as i64;
        Self::new_unchecked(k, k + 1, n)
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn negate(&self, n: usize) -> Self {
        Self::new_unchecked(self.j, self.i, n)
    }

    /// Returns `k` if this is the simple root `α_k`.
    pub fn simple_index(&self, n: usize) -> Option<usize> {
        if self.j - self.i == 1 {
            Some(residue(self.i, n))
        } else {
            None
        }
    }

    /// Coordinates in the basis `ε_1, ..., ε_n, δ`, using `ε_{a + k n} = ε_a - k δ`.
    fn lattice(&self, n: usize) -> (Vec<i64>, i64) {
        let mut e = vec![0i64; n];
        let (a, ka) = split_index(self.i, n);
        let (b, kb) = split_index(self.j, n);
        e[a - 1] += 1;
        e[b - 1] -= 1;
        (e, -ka + kb)
    }

    /// The sum of two roots, if it is a real root.
    pub fn add(&self, other: &Root, n: usize) -> Option<Root> {
        let (mut e, mut d) = self.lattice(n);
        let (e2, d2) = other.lattice(n);
        for (x, y) in e.iter_mut().zip(e2) {
            *x += y;
        }
        d += d2;
        let plus: Vec<usize> = (0..n).filter(|&k| e[k] == 1).collect();
        let minus: Vec<usize> = (0..n).filter(|&k| e[k] == -1).collect();
        if plus.len() != 1 || minus.len() != 1 || e.iter().any(|&x| x.abs() > 1) {
            return None;
        }
        // ε_a - ε_b + dδ = ε_{a - d n} - ε_b
        let a = plus[0] as i64 + 1 - d * n as i64;
        Some(Root::new_unchecked(a, minus[0] as i64 + 1, n))
    }

    pub fn sub(&self, other: &Root, n: usize) -> Option<Root> {
        self.add(&other.negate(n), n)
    }
}

/// An `n`-tuple of rational weights with the periodic extension
/// `χ_{i + kn} = χ_i - kκ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Character {
    kappa: i64,
    values: Vec<BigRational>,
}

impl Character {
    pub fn new(kappa: i64, values: Vec<BigRational>) -> Self {
        Self { kappa, values }
    }

    pub fn from_ints(kappa: i64, values: &[i64]) -> Self {
        Self::new(kappa, values.iter().map(|&v| BigRational::from_integer(v.into())).collect())
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn kappa(&self) -> i64 {
        self.kappa
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// Extended lookup at any integer index.
    pub fn get(&self, i: i64) -> BigRational {
        let (r, k) = split_index(i, self.n());
        let shift = BigRational::from_integer((k * self.kappa).into());
        &self.values[r - 1] - shift
    }

    /// Values as integers, if they all are.
    pub fn as_ints(&self) -> Option<Vec<i64>> {
        self.values
            .iter()
            .map(|v| {
                if v.is_integer() {
                    i64::try_from(v.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn is_zero_at(&self, i: i64) -> bool {
        self.get(i).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> AffinePermutation {
        AffinePermutation::from_window(v.to_vec()).unwrap()
    }

    #[test]
    fn generators() {
        assert_eq!(AffinePermutation::s(1, 4).window(), &[2, 1, 3, 4]);
        assert_eq!(AffinePermutation::s(0, 4).window(), &[0, 2, 3, 5]);
        assert_eq!(AffinePermutation::pi_power(1, 4).window(), &[2, 3, 4, 5]);
        assert_eq!(AffinePermutation::x(1, 4).window(), &[5, 2, 3, 4]);
        assert!(AffinePermutation::generator(Generator::S(4), 4).is_err());
        assert!(AffinePermutation::generator(Generator::X(0), 4).is_err());
    }

    #[test]
    fn rejects_bad_windows() {
        assert!(AffinePermutation::from_window(vec![1, 5, 3, 4]).is_err());
    }

    #[test]
    fn compose_and_inverse() {
        let wt = w(&[-1, -3, 8, 6]);
        assert_eq!(wt.compose(&wt.inverse()).unwrap(), AffinePermutation::identity(4));
        assert_eq!(wt.inverse().compose(&wt).unwrap(), AffinePermutation::identity(4));
        let pi = AffinePermutation::pi_power(1, 4);
        assert_eq!(
            pi.mul(&AffinePermutation::s(1, 4)),
            AffinePermutation::s(2, 4).mul(&pi)
        );
        assert!(pi.compose(&AffinePermutation::identity(3)).is_err());
    }

    #[test]
    fn left_and_right_multiplication_shortcuts() {
        let wt = w(&[-1, -3, 8, 6]);
        for i in 0..4 {
            let s = AffinePermutation::s(i, 4);
            assert_eq!(wt.left_mul_s(i), s.mul(&wt));
            assert_eq!(wt.right_mul_s(i), wt.mul(&s));
        }
    }

    #[test]
    fn inversion_set_of_reading_permutation() {
        let wt = w(&[-1, -3, 8, 6]);
        let expected: BTreeSet<Root> = [(1, 2), (1, 3), (1, 4), (3, 4), (-3, 2), (-3, 4), (-1, 2), (-1, 4), (2, 4)]
            .into_iter()
            .map(|(i, j)| Root { i, j })
            .collect();
        assert_eq!(wt.inversion_set(), expected);
        assert_eq!(wt.length(), 9);
        assert_eq!(wt.grade(), 0);
    }

    #[test]
    fn reduced_words() {
        assert_eq!(AffinePermutation::identity(3).reduced_word(), (vec![], 0));
        assert_eq!(AffinePermutation::pi_power(-2, 3).reduced_word(), (vec![], -2));
        let wt = AffinePermutation::from_word(&[1, 2, 3, 2, 0, 1, 3, 0, 3], 0, 4);
        assert_eq!(wt.window(), &[-1, -3, 8, 6]);
        let (word, r) = wt.reduced_word();
        assert_eq!(AffinePermutation::from_word(&word, r, 4), wt);
        let x1 = AffinePermutation::x(1, 3);
        let (word, r) = x1.reduced_word();
        assert_eq!(r, 1);
        assert_eq!(AffinePermutation::from_word(&word, r, 3), x1);
    }

    #[test]
    fn presentation_identities() {
        let n = 4;
        // π = x_1 s_1 s_2 ⋯ s_{n-1}
        let mut rhs = AffinePermutation::x(1, n);
        for i in 1..n {
            rhs = rhs.right_mul_s(i);
        }
        assert_eq!(rhs, AffinePermutation::pi_power(1, n));
        // s_0 = x_1 x_n^{-1} s_{1n}
        let s1n = w(&[4, 2, 3, 1]);
        let rhs = AffinePermutation::x(1, n)
            .mul(&AffinePermutation::x(n, n).inverse())
            .mul(&s1n);
        assert_eq!(rhs, AffinePermutation::s(0, n));
    }

    #[test]
    fn root_arithmetic() {
        let n = 4;
        let a = Root { i: 1, j: 2 };
        let b = Root { i: 2, j: 4 };
        assert_eq!(a.add(&b, n), Some(Root { i: 1, j: 4 }));
        // α_{-3,2} = α_{1,6}; α_{1,6} - α_{1,2} = α_{2,6} = α_{-2,2}: imaginary
        let c = Root { i: -3, j: 2 };
        assert_eq!(c.sub(&a, n), None);
        assert_eq!(c.sub(&Root { i: -3, j: 4 }, n), Some(Root { i: 4, j: 2 }));
        assert_eq!(Root::simple(0, n), Root { i: 0, j: 1 });
        assert_eq!(Root::simple(0, n).simple_index(n), Some(0));
        assert!(Root::new(1, 5, n).is_err());
    }

    #[test]
    fn character_lookup_and_action() {
        let chi = Character::from_ints(3, &[0, 1, -1, 0]);
        assert_eq!(chi.get(5), chi.get(1) - BigRational::from_integer(3.into()));
        assert_eq!(chi.get(-3), BigRational::from_integer(3.into()));
        let wt = w(&[-1, -3, 8, 6]);
        let tau = wt.inverse().act_weight(&chi).unwrap();
        assert_eq!(tau.as_ints().unwrap(), vec![2, 3, -3, -2]);
        assert_eq!(AffinePermutation::identity(4).act_weight(&chi).unwrap(), chi);
    }
}
