//! The algebra relations as executable rewriting on Verma modules, and the
//! calculus of intertwiner factors `φ_k^{pq}(z) = s_k + 1/(z_p - z_q)`.

use std::collections::BTreeMap;

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{q, GroupAlgebraElement, Laurent, Q, QElement, RationalFunctionT, Scalar, TElement};
use crate::diagram::PeriodicDiagram;
use crate::error::{DahaError, Result};
use crate::weyl::{residue, AffinePermutation, Character, Root};

/// The vector `element · 1_χ` of the Verma module `M_χ`.
#[derive(Clone, Debug, PartialEq)]
pub struct VermaVector<F: Scalar> {
    pub element: GroupAlgebraElement<F>,
    pub chi: Character,
}

impl<F: Scalar> VermaVector<F> {
    pub fn new(element: GroupAlgebraElement<F>, chi: Character) -> Result<Self> {
        if element.n() != chi.n() {
            return Err(DahaError::DegreeMismatch(element.n(), chi.n()));
        }
        Ok(Self { element, chi })
    }

    /// `1_χ`.
    pub fn generator(chi: Character) -> Self {
        Self {
            element: GroupAlgebraElement::one(chi.n()),
            chi,
        }
    }

    pub fn n(&self) -> usize {
        self.chi.n()
    }

    pub fn kappa(&self) -> i64 {
        self.chi.kappa()
    }

    pub fn is_zero(&self) -> bool {
        self.element.is_zero()
    }

    fn with(&self, element: GroupAlgebraElement<F>) -> Self {
        Self {
            element,
            chi: self.chi.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.chi != o.chi {
            return Err(DahaError::CharacterMismatch);
        }
        Ok(self.with(self.element.add(&o.element)?))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        if self.chi != o.chi {
            return Err(DahaError::CharacterMismatch);
        }
        Ok(self.with(self.element.sub(&o.element)?))
    }

    pub fn scale(&self, c: &F) -> Self {
        self.with(self.element.scale(c))
    }

    /// Left multiplication by a group element.
    pub fn act(&self, w: &AffinePermutation) -> Self {
        self.with(self.element.left_mul_perm(w))
    }

    pub fn s_apply(&self, k: usize) -> Self {
        self.with(self.element.left_mul_s(k))
    }

    pub fn pi_apply(&self, power: i64) -> Self {
        self.act(&AffinePermutation::pi_power(power, self.n()))
    }

    pub fn x_apply(&self, i: usize) -> Self {
        self.act(&AffinePermutation::x(i, self.n()))
    }

    /// Left multiplication by a group algebra element.
    pub fn act_element(&self, x: &GroupAlgebraElement<F>) -> Result<Self> {
        Ok(self.with(x.multiply(&self.element)?))
    }
}

/// `u_i · (w 1_χ)` for a single basis element, as a list of terms.
///
/// Writing `w = π^r s_{a_1} ⋯ s_{a_l}`, the index is moved right through
/// each letter with `u_j π^r = π^r u_{j-r}` and
/// `u_j s_k = s_k u_{s_k(j)} + δ`, where `δ = 1` for `j ≡ k+1`, `δ = -1`
/// for `j ≡ k` and `δ = 0` otherwise. Each `δ` leaves the word with that
/// letter deleted.
fn u_on_basis(i: i64, w: &AffinePermutation, chi: &Character) -> Vec<(AffinePermutation, Q)> {
    let n = w.n();
    let (word, r) = w.reduced_word();
    let mut j = i - r;
    let mut out = Vec::new();
    // suffixes[p] = s_{a_{p+1}} ⋯ s_{a_l}
    let l = word.len();
    let mut suffixes = vec![AffinePermutation::identity(n); l + 1];
    for p in (0..l).rev() {
        suffixes[p] = suffixes[p + 1].left_mul_s(word[p]);
    }
    let mut prefix = AffinePermutation::pi_power(r, n);
    for (p, &k) in word.iter().enumerate() {
        let rj = residue(j, n);
        let delta = if rj == (k + 1) % n {
            1
        } else if rj == k {
            -1
        } else {
            0
        };
        if delta != 0 {
            out.push((prefix.mul(&suffixes[p + 1]), q(delta)));
        }
        j = AffinePermutation::s(k, n).act_int(j);
        prefix = prefix.right_mul_s(k);
    }
    out.push((w.clone(), chi.get(j)));
    out
}

/// Exact action of `u_i` (any integer `i`, via `u_{i+kn} = u_i - kκ`).
pub fn u_apply<F: Scalar>(i: i64, v: &VermaVector<F>) -> VermaVector<F> {
    let mut out = GroupAlgebraElement::zero(v.n());
    for (w, c) in v.element.terms() {
        for (w2, x) in u_on_basis(i, w, &v.chi) {
            out.add_term(w2, c.times(&F::from_q(&x)));
        }
    }
    v.with(out)
}

/// Coordinates `z_i` as rational functions of the limit variable `t`.
pub trait ZAssignment: Sync {
    fn z(&self, i: i64) -> RationalFunctionT;
}

/// `z_i = χ_i + c_{row(i)} t`, with `χ = χ_D` extended and one direction
/// coefficient per actual row of `T_0` (rows are not identified mod `m`).
#[derive(Clone, Debug)]
pub struct RowZ {
    diagram: PeriodicDiagram,
    chi: Character,
    directions: BTreeMap<i64, i64>,
}

impl RowZ {
    /// Assigns `directions[k]` to the `k`-th smallest of `rows`; the default
    /// is `1, 2, 3, ...`.
    pub fn new(diagram: &PeriodicDiagram, rows: &[i64], directions: Option<&[i64]>) -> Result<Self> {
        let mut rows = rows.to_vec();
        rows.sort_unstable();
        rows.dedup();
        let dirs: Vec<i64> = match directions {
            None => (1..=rows.len() as i64).collect(),
            Some(d) => {
                if d.len() < rows.len() {
                    return Err(DahaError::Precondition(format!(
                        "{} direction coefficients given, {} rows touched",
                        d.len(),
                        rows.len()
                    )));
                }
                d[..rows.len()].to_vec()
            }
        };
        let mut sorted = dirs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != dirs.len() {
            return Err(DahaError::Precondition("direction coefficients must be distinct".into()));
        }
        Ok(Self {
            diagram: diagram.clone(),
            chi: diagram.chi(),
            directions: rows.into_iter().zip(dirs).collect(),
        })
    }

    /// Directions for every row touched by the index pairs.
    pub fn for_pairs(diagram: &PeriodicDiagram, pairs: &[Factor], directions: Option<&[i64]>) -> Result<Self> {
        let rows: Vec<i64> = pairs
            .iter()
            .flat_map(|f| [f.p, f.q])
            .map(|i| diagram.row_of(i))
            .collect();
        Self::new(diagram, &rows, directions)
    }

    pub fn directions(&self) -> &BTreeMap<i64, i64> {
        &self.directions
    }
}

impl ZAssignment for RowZ {
    fn z(&self, i: i64) -> RationalFunctionT {
        let row = self.diagram.row_of(i);
        let c = *self
            .directions
            .get(&row)
            .unwrap_or_else(|| panic!("row {row} has no direction coefficient"));
        RationalFunctionT::linear(self.chi.get(i), q(c))
    }
}

/// Periodic coordinates `z_{i+kn} = z_i - kκ`.
#[derive(Clone, Debug)]
pub struct PeriodicZ {
    pub kappa: i64,
    pub base: Vec<RationalFunctionT>,
}

impl PeriodicZ {
    /// `z_i = χ_i + c_{row(i) mod m} t` for `i = 1..n`, extended
    /// periodically: one direction per row class, `dirs[a-1]` for row `a`.
    pub fn for_diagram(d: &PeriodicDiagram, dirs: &[i64]) -> Result<Self> {
        if dirs.len() < d.m() {
            return Err(DahaError::Precondition(format!("need {} directions", d.m())));
        }
        let chi = d.chi();
        let base = (1..=d.n() as i64)
            .map(|i| RationalFunctionT::linear(chi.get(i), q(dirs[(d.row_of(i) - 1) as usize])))
            .collect();
        Ok(Self { kappa: d.kappa(), base })
    }
}

impl ZAssignment for PeriodicZ {
    fn z(&self, i: i64) -> RationalFunctionT {
        let (r, k) = crate::weyl::split_index(i, self.base.len());
        self.base[r - 1].minus(&RationalFunctionT::constant(q(k * self.kappa)))
    }
}

/// `i ↦ z_{w(i)}`, i.e. the coordinates of `w^{-1} z`.
pub struct Pulled<'a> {
    pub w: &'a AffinePermutation,
    pub inner: &'a dyn ZAssignment,
}

impl ZAssignment for Pulled<'_> {
    fn z(&self, i: i64) -> RationalFunctionT {
        self.inner.z(self.w.act_int(i))
    }
}

/// The factor `φ_k^{pq} = s_k + 1/(z_p - z_q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub k: usize,
    pub p: i64,
    pub q: i64,
}


/// `φ_k^{pq}(z) = s_k + 1/(z_p - z_q)` in degree `n`.
pub fn phi_factor(n: usize, k: usize, p: i64, qi: i64, z: &dyn ZAssignment) -> Result<TElement> {
    if k >= n {
        return Err(DahaError::IndexOutOfRange(format!("s_{k} with n = {n}")));
    }
    let c = factor_scalar(p, qi, z)?;
    Ok(TElement::s_plus(k, c, n))
}

fn factor_scalar(p: i64, qi: i64, z: &dyn ZAssignment) -> Result<RationalFunctionT> {
    z.z(p)
        .minus(&z.z(qi))
        .recip()
        .ok_or(DahaError::IdenticallyZeroDenominator(p, qi))
}

/// Roots of the matched product for a word `s_{i_1} ⋯ s_{i_l}`: factor `k`
/// carries `u_k(α_{i_k})` with `u_k = (s_{i_{k+1}} ⋯ s_{i_l})^{-1}`,
/// represented by the pair `(u_k(i_k), u_k(i_k + 1))`.
pub fn matched_pairs(word: &[usize], n: usize) -> Vec<Factor> {
    let mut u = AffinePermutation::identity(n);
    let mut out = vec![Factor { k: 0, p: 0, q: 0 }; word.len()];
    for (pos, &k) in word.iter().enumerate().rev() {
        let a = (k % n) as i64;
        out[pos] = Factor {
            k: k % n,
            p: u.act_int(a),
            q: u.act_int(a + 1),
        };
        u = u.right_mul_s(k);
    }
    out
}

/// Ordered product of factors, after checking that their roots are the
/// matched roots of the underlying word. Words need not be reduced.
pub fn phi_word(n: usize, factors: &[Factor], z: &dyn ZAssignment) -> Result<TElement> {
    let word: Vec<usize> = factors.iter().map(|f| f.k).collect();
    for (pos, (f, m)) in factors.iter().zip(matched_pairs(&word, n)).enumerate() {
        let got = Root::new(f.p, f.q, n)?;
        let expected = Root::new(m.p, m.q, n)?;
        if got != expected {
            return Err(DahaError::Mismatch {
                position: pos,
                expected: format!("{expected:?}"),
                got: format!("{got:?}"),
            });
        }
    }
    product(n, factors, z)
}

/// Ordered product without the matching check.
pub fn product(n: usize, factors: &[Factor], z: &dyn ZAssignment) -> Result<TElement> {
    let mut x = TElement::one(n);
    for f in factors {
        x = x.right_mul_s_plus(f.k, &factor_scalar(f.p, f.q, z)?);
    }
    Ok(x)
}

/// `lim_{t→0}` of the ordered product of factors, computed with truncated
/// Laurent expansions. A coefficient only influences the `t^0` term of the
/// result through the pole factors still to come, each lowering exponents
/// by at most one, so after each step every exponent above the number of
/// remaining poles is dropped. Falls back to [`product`] when some `z_p - z_q`
/// is not of the form `a + b t`.
pub fn fused_limit(n: usize, factors: &[Factor], z: &dyn ZAssignment) -> Result<QElement> {
    let mut lin = Vec::with_capacity(factors.len());
    for f in factors {
        let d = z.z(f.p).minus(&z.z(f.q));
        if d.is_zero() {
            return Err(DahaError::IdenticallyZeroDenominator(f.p, f.q));
        }
        match d.as_linear() {
            Some(ab) => lin.push(ab),
            None => return crate::algebra::limit_t_to_zero(&product(n, factors, z)?),
        }
    }
    let poles: Vec<bool> = lin.iter().map(|(a, _)| a.is_zero()).collect();
    let total = poles.iter().filter(|&&p| p).count() as i64;
    let mut remaining = total;
    let mut x: BTreeMap<AffinePermutation, Laurent> = BTreeMap::new();
    x.insert(AffinePermutation::identity(n), Laurent::monomial(Q::one(), 0));
    for (f, ((a, b), pole)) in factors.iter().zip(lin.iter().zip(&poles)) {
        if *pole {
            remaining -= 1;
        }
        let c = if *pole {
            Laurent::monomial(b.recip(), -1)
        } else {
            Laurent::recip_linear(a, b, total)
        };
        let mut next: BTreeMap<AffinePermutation, Laurent> = BTreeMap::new();
        for (w, s) in &x {
            let moved = s.clone().truncate(remaining);
            if !moved.is_zero() {
                next.entry(w.right_mul_s(f.k)).or_insert_with(Laurent::zero).add_assign(&moved);
            }
            let scaled = s.mul_trunc(&c, remaining);
            if !scaled.is_zero() {
                next.entry(w.clone()).or_insert_with(Laurent::zero).add_assign(&scaled);
            }
        }
        next.retain(|_, s| !s.is_zero());
        x = next;
    }
    let mut out = QElement::zero(n);
    for (w, s) in x {
        if let Some(order) = s.order().filter(|&o| o < 0) {
            return Err(DahaError::PoleAtZero {
                window: w.window().to_vec(),
                order: -order,
            });
        }
        out.add_term(w, s.coeff(0));
    }
    Ok(out)
}

/// The matched product `φ_{s_{i_1} ⋯ s_{i_l}}(z)`.
pub fn matched_product(word: &[usize], n: usize, z: &dyn ZAssignment) -> Result<TElement> {
    product(n, &matched_pairs(word, n), z)
}

/// Factors of `φ_w(w^{-1} z)` over the given reduced word of `w`, with
/// indices in `z`-coordinates: factor `k` is
/// `s_{i_k} + 1/(z_{v(i_k+1)} - z_{v(i_k)})`, `v = s_{i_1} ⋯ s_{i_{k-1}}`.
pub fn pullback_factors(w: &AffinePermutation, word: &[usize]) -> Vec<Factor> {
    matched_pairs(word, w.n())
        .into_iter()
        .map(|f| Factor {
            k: f.k,
            p: w.act_int(f.p),
            q: w.act_int(f.q),
        })
        .collect()
}

/// `φ_w(w^{-1} z)` over the reduced word returned by `reduced_word`.
pub fn phi_pullback(w: &AffinePermutation, z: &dyn ZAssignment) -> Result<TElement> {
    let (word, r) = w.reduced_word();
    if r != 0 {
        return Err(DahaError::NonzeroGrade(r));
    }
    phi_pullback_word(w, &word, z)
}

/// `φ_w(w^{-1} z)` over a caller-supplied reduced word of `w`.
pub fn phi_pullback_word(w: &AffinePermutation, word: &[usize], z: &dyn ZAssignment) -> Result<TElement> {
    if w.grade() != 0 {
        return Err(DahaError::NonzeroGrade(w.grade()));
    }
    if AffinePermutation::from_word(word, 0, w.n()) != *w || word.len() != w.length() {
        return Err(DahaError::Precondition(format!("{word:?} is not a reduced word of {w:?}")));
    }
    product(w.n(), &pullback_factors(w, word), z)
}

/// `Φ_i v = (s_i + 1/(ξ_i - ξ_{i+1})) v` for a `u`-eigenvector `v` with
/// eigenvalue `ξ`.
pub fn intertwiner_phi(i: usize, v: &VermaVector<Q>, xi: &Character) -> Result<VermaVector<Q>> {
    let n = v.n();
    let i = i % n;
    let d = xi.get(i as i64) - xi.get(i as i64 + 1);
    let c = Scalar::inverse(&d).ok_or(DahaError::Pole(i as i64, i as i64 + 1))?;
    Ok(v.with(v.element.left_mul_s_plus(i, &c)))
}

/// Joint eigenvalue of `u_1, ..., u_n` on `v`, if `v` is a nonzero eigenvector.
pub fn eigenvalue(v: &VermaVector<Q>) -> Option<Character> {
    let (w, c) = v.element.terms().next()?;
    let mut vals = Vec::with_capacity(v.n());
    for i in 1..=v.n() as i64 {
        let uv = u_apply(i, v);
        let lambda = uv.element.coeff(w) / c;
        if uv.element != v.element.scale(&lambda) {
            return None;
        }
        vals.push(lambda);
    }
    Some(Character::new(v.kappa(), vals))
}

/// Outcome of one family of relation checks.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct RelationTally {
    pub relation: String,
    pub checked: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RelationReport {
    pub n: usize,
    pub kappa: i64,
    pub trials: usize,
    pub seed: u64,
    pub tallies: Vec<RelationTally>,
}

impl RelationReport {
    pub fn failures(&self) -> usize {
        self.tallies.iter().map(|t| t.failed).sum()
    }
    pub fn checks(&self) -> usize {
        self.tallies.iter().map(|t| t.checked).sum()
    }
}

/// A random element of `Q[Ẇ_n]` with a few terms of small length.
pub fn random_element(rng: &mut impl Rng, n: usize, terms: usize, max_len: usize) -> QElement {
    let mut x = QElement::zero(n);
    for _ in 0..terms {
        let len = rng.gen_range(0..=max_len);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n)).collect();
        let r = rng.gen_range(-1..=1);
        let c = crate::algebra::q_frac(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        x.add_term(AffinePermutation::from_word(&word, r, n), c);
    }
    x
}

/// A random character with small rational values.
pub fn random_character(rng: &mut impl Rng, n: usize, kappa: i64) -> Character {
    Character::new(
        kappa,
        (0..n)
            .map(|_| crate::algebra::q_frac(rng.gen_range(-6..=6), rng.gen_range(1..=2)))
            .collect(),
    )
}

type Check = (String, bool);

fn trial_checks(v: &VermaVector<Q>) -> Vec<Check> {
    let n = v.n();
    let nn = n as i64;
    let kappa = q(v.kappa());
    let mut out: Vec<Check> = Vec::new();
    let u = |i: i64, x: &VermaVector<Q>| u_apply(i, x);
    for i in 0..n {
        out.push(("s_i^2 = 1".into(), v.s_apply(i).s_apply(i) == *v));
        if n >= 3 {
            let j = (i + 1) % n;
            let lhs = v.s_apply(i).s_apply(j).s_apply(i);
            let rhs = v.s_apply(j).s_apply(i).s_apply(j);
            out.push(("s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}".into(), lhs == rhs));
        }
        for j in 0..n {
            let adjacent = (i + 1) % n == j || (j + 1) % n == i;
            if i != j && !adjacent {
                out.push((
                    "s_i s_j = s_j s_i".into(),
                    v.s_apply(j).s_apply(i) == v.s_apply(i).s_apply(j),
                ));
            }
        }
        let lhs = v.pi_apply(-1).s_apply(i).pi_apply(1);
        out.push(("π s_i π^-1 = s_{i+1}".into(), lhs == v.s_apply(i + 1)));
    }
    for i in 1..nn {
        // s_i u_i = u_{i+1} s_i - 1
        let lhs = u(i, v).s_apply(i as usize);
        let rhs = u(i + 1, &v.s_apply(i as usize)).sub(v).unwrap();
        out.push(("s_i u_i = u_{i+1} s_i - 1".into(), lhs == rhs));
    }
    {
        let lhs = u(nn, v).s_apply(0);
        let s0v = v.s_apply(0);
        let rhs = u(1, &s0v).sub(&s0v.scale(&kappa)).unwrap().sub(v).unwrap();
        out.push(("s_0 u_n = (u_1 - κ) s_0 - 1".into(), lhs == rhs));
    }
    for i in 0..n {
        for j in 1..=nn {
            let r = residue(j, n);
            if r == i || r == (i + 1) % n {
                continue;
            }
            out.push((
                "s_i u_j = u_j s_i".into(),
                u(j, v).s_apply(i) == u(j, &v.s_apply(i)),
            ));
        }
    }
    for i in 1..nn {
        let lhs = u(i, &v.pi_apply(-1)).pi_apply(1);
        out.push(("π u_i π^-1 = u_{i+1}".into(), lhs == u(i + 1, v)));
    }
    {
        let lhs = u(nn, &v.pi_apply(-1)).pi_apply(1);
        let rhs = u(1, v).sub(&v.scale(&kappa)).unwrap();
        out.push(("π u_n π^-1 = u_1 - κ".into(), lhs == rhs));
    }
    for i in 1..=nn {
        for j in i + 1..=nn {
            out.push(("u_i u_j = u_j u_i".into(), u(i, &u(j, v)) == u(j, &u(i, v))));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(("x_i x_j = x_j x_i".into(), v.x_apply(j).x_apply(i) == v.x_apply(i).x_apply(j)));
        }
    }
    for i in 1..n {
        let lhs = v.s_apply(i).x_apply(i).s_apply(i);
        out.push(("s_i x_i s_i = x_{i+1}".into(), lhs == v.x_apply(i + 1)));
    }
    {
        let mut rhs = v.clone();
        for i in (1..n).rev() {
            rhs = rhs.s_apply(i);
        }
        out.push(("π = x_1 s_1 ⋯ s_{n-1}".into(), rhs.x_apply(1) == v.pi_apply(1)));
    }
    out
}

/// Checks every defining relation as an operator identity on `trials`
/// random Verma vectors. Trial `k` is seeded from `(seed, k)`, so the
/// report depends only on the arguments.
pub fn check_relations(n: usize, kappa: i64, trials: usize, seed: u64) -> RelationReport {
    let per_trial: Vec<Vec<Check>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((t as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)));
            let chi = random_character(&mut rng, n, kappa);
            let x = random_element(&mut rng, n, 3, 4);
            trial_checks(&VermaVector::new(x, chi).expect("degrees agree"))
        })
        .collect();
    let mut tallies: Vec<RelationTally> = Vec::new();
    for checks in per_trial {
        for (name, ok) in checks {
            let pos = match tallies.iter().position(|t| t.relation == name) {
                Some(p) => p,
                None => {
                    tallies.push(RelationTally {
                        relation: name,
                        ..Default::default()
                    });
                    tallies.len() - 1
                }
            };
            tallies[pos].checked += 1;
            if !ok {
                tallies[pos].failed += 1;
            }
        }
    }
    RelationReport {
        n,
        kappa,
        trials,
        seed,
        tallies,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q_frac;

    fn chi(kappa: i64, v: &[i64]) -> Character {
        Character::from_ints(kappa, v)
    }

    #[test]
    fn u_on_generators() {
        let c = chi(2, &[3, 5, 7]);
        let one = VermaVector::<Q>::generator(c.clone());
        assert_eq!(u_apply(1, &one), one.scale(&q(3)));
        let s1 = one.s_apply(1);
        // u_1 s_1 1 = χ_2 s_1 1 - 1
        assert_eq!(u_apply(1, &s1), s1.scale(&q(5)).sub(&one).unwrap());
        let pi = one.pi_apply(1);
        assert_eq!(u_apply(2, &pi), pi.scale(&q(3)));
        // u_1 π 1 = χ_0 π 1 = (χ_3 + κ) π 1
        assert_eq!(u_apply(1, &pi), pi.scale(&q(9)));
    }

    #[test]
    fn relations_small() {
        for (n, kappa) in [(2, 2), (3, 1), (4, 3)] {
            let rep = check_relations(n, kappa, 10, 7);
            assert_eq!(rep.failures(), 0, "{rep:?}");
        }
    }

    #[test]
    fn matched_pairs_of_s1s2() {
        // φ_1^{13} φ_2^{23} is the matched product of s_1 s_2
        let f = matched_pairs(&[1, 2], 3);
        assert_eq!(f, vec![Factor { k: 1, p: 1, q: 3 }, Factor { k: 2, p: 2, q: 3 }]);
        let z = PeriodicZ {
            kappa: 1,
            base: (1..=3).map(|i| RationalFunctionT::linear(q(i * i), q(i))).collect(),
        };
        let bad = [Factor { k: 1, p: 1, q: 2 }, Factor { k: 2, p: 2, q: 3 }];
        assert!(matches!(phi_word(3, &bad, &z), Err(DahaError::Mismatch { position: 0, .. })));
        assert_eq!(phi_word(3, &f, &z).unwrap(), matched_product(&[1, 2], 3, &z).unwrap());
        assert_eq!(matched_product(&[], 3, &z).unwrap(), TElement::one(3));
    }

    #[test]
    fn phi_square_is_scalar() {
        let z = PeriodicZ {
            kappa: 2,
            base: (1..=3).map(|i| RationalFunctionT::linear(q(2 * i), q(i))).collect(),
        };
        let a = phi_factor(3, 1, 2, 1, &z).unwrap();
        let b = phi_factor(3, 1, 1, 2, &z).unwrap();
        let prod = a.multiply(&b).unwrap();
        let d = z.z(1).minus(&z.z(2));
        let expected = RationalFunctionT::one().minus(&d.times(&d).recip().unwrap());
        assert_eq!(prod, TElement::term(AffinePermutation::identity(3), expected));
        assert!(matches!(phi_factor(3, 1, 2, 2, &z), Err(DahaError::IdenticallyZeroDenominator(2, 2))));
    }

    #[test]
    fn intertwiner_on_eigenvectors() {
        let c = chi(1, &[0, 1]);
        let one = VermaVector::<Q>::generator(c.clone());
        let v = intertwiner_phi(1, &one, &c).unwrap();
        assert_eq!(v.element, QElement::s_plus(1, q(-1), 2));
        let xi = AffinePermutation::s(1, 2).act_weight(&c).unwrap();
        assert_eq!(eigenvalue(&v), Some(xi.clone()));
        let vv = intertwiner_phi(1, &v, &xi).unwrap();
        // 1 - 1/(ξ_1 - ξ_2)^2 = 0 here
        assert!(vv.is_zero());
        let c2 = chi(3, &[0, 2, 5]);
        let one = VermaVector::<Q>::generator(c2.clone());
        let xi = AffinePermutation::s(2, 3).act_weight(&c2).unwrap();
        let sq = intertwiner_phi(2, &intertwiner_phi(2, &one, &c2).unwrap(), &xi).unwrap();
        assert_eq!(sq, one.scale(&(q(1) - q_frac(1, 9))));
        let flat = chi(1, &[1, 1]);
        assert!(intertwiner_phi(1, &VermaVector::generator(flat.clone()), &flat).is_err());
    }
}
