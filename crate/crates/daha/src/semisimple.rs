//! The irreducible module `L_D` of a periodic skew diagram, with basis
//! `v_T` indexed by standard tableaux, the quotient map `Q: M_D → L_D`,
//! kernel generators, and the torsion found when `D` has infinite columns.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{q, QElement, Q};
use crate::daha::VermaVector;
use crate::diagram::{enumerate_standard, is_standard, PeriodicDiagram};
use crate::error::{DahaError, Result};
use crate::weyl::AffinePermutation;

/// A finite combination of basis vectors `v_T`, `T = wT_0` standard.
#[derive(Clone, PartialEq, Eq)]
pub struct LdVector {
    diagram: PeriodicDiagram,
    terms: BTreeMap<AffinePermutation, Q>,
}

impl fmt::Debug for LdVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{c}·v{:?}", w.window())).collect();
        write!(f, "LdVector[{}]", parts.join(" + "))
    }
}

impl LdVector {
    pub fn zero(d: &PeriodicDiagram) -> Self {
        Self {
            diagram: d.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `v_T` for `T = wT_0`; fails if `T` is not standard.
    pub fn basis(d: &PeriodicDiagram, w: AffinePermutation) -> Result<Self> {
        if w.n() != d.n() {
            return Err(DahaError::DegreeMismatch(d.n(), w.n()));
        }
        if !is_standard(d, &w) {
            return Err(DahaError::Precondition(format!("{w:?} T_0 is not standard")));
        }
        let mut v = Self::zero(d);
        v.terms.insert(w, Q::one());
        Ok(v)
    }

    /// `v_{T_0}`.
    pub fn t0(d: &PeriodicDiagram) -> Self {
        Self::basis(d, AffinePermutation::identity(d.n())).expect("T_0 is standard")
    }

    pub fn diagram(&self) -> &PeriodicDiagram {
        &self.diagram
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffinePermutation, &Q)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &AffinePermutation) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    fn add_term(&mut self, w: AffinePermutation, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero(&self.diagram);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Q::one()))
    }

    /// Terms sorted by window as a JSON list.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(w, c)| json!({"perm_window": w.window(), "coeff": c.to_string()}))
                .collect(),
        )
    }
}

/// `C_T(i)` for `T = wT_0`, any integer `i`.
fn content(d: &PeriodicDiagram, w: &AffinePermutation, i: i64) -> Q {
    q(d.content(w.inverse().act_int(i)))
}

/// `u_i v_T = C_T(i) v_T`.
pub fn ld_u(i: i64, v: &LdVector) -> LdVector {
    let mut out = LdVector::zero(&v.diagram);
    for (w, c) in &v.terms {
        out.add_term(w.clone(), c * content(&v.diagram, w, i));
    }
    out
}

/// `π^{±1} v_T = v_{π^{±1} T}`.
pub fn ld_pi(sign: i64, v: &LdVector) -> LdVector {
    let p = AffinePermutation::pi_power(sign, v.diagram.n());
    let mut out = LdVector::zero(&v.diagram);
    for (w, c) in &v.terms {
        out.add_term(p.mul(w), c.clone());
    }
    out
}

/// The two-case formula for `s_i v_T`, with `d = C_T(i) - C_T(i+1)`.
pub fn ld_s(i: usize, v: &LdVector) -> LdVector {
    let d = &v.diagram;
    let n = d.n();
    let i = i % n;
    let mut out = LdVector::zero(d);
    for (w, c) in &v.terms {
        let diff = content(d, w, i as i64) - content(d, w, i as i64 + 1);
        let inv = diff.recip();
        let sw = w.left_mul_s(i);
        if is_standard(d, &sw) {
            out.add_term(sw, c * (&diff + Q::one()) * &inv);
        }
        out.add_term(w.clone(), -(c * &inv));
    }
    out
}

/// `Ψ_i = d/(d+1) s_i + 1/(d+1)`; sends `v_T` to `v_{s_i T}`.
pub fn ld_psi(i: usize, v: &LdVector) -> Result<LdVector> {
    let d = &v.diagram;
    let n = d.n();
    let i = i % n;
    let mut out = LdVector::zero(d);
    for (w, c) in &v.terms {
        let sw = w.left_mul_s(i);
        if !is_standard(d, &sw) {
            return Err(DahaError::NonstandardTarget(i));
        }
        let diff = content(d, w, i as i64) - content(d, w, i as i64 + 1);
        let denom = (&diff + Q::one()).recip();
        let single = LdVector {
            diagram: d.clone(),
            terms: BTreeMap::from([(w.clone(), c.clone())]),
        };
        let image = ld_s(i, &single).scale(&(&diff * &denom)).add(&single.scale(&denom));
        out = out.add(&image);
    }
    Ok(out)
}

/// `Φ_i v_T = s_i v_T + 1/(C_T(i) - C_T(i+1)) v_T`.
pub fn ld_phi(i: usize, v: &LdVector) -> LdVector {
    let d = &v.diagram;
    let i = i % d.n();
    let mut out = ld_s(i, v);
    for (w, c) in &v.terms {
        let diff = content(d, w, i as i64) - content(d, w, i as i64 + 1);
        out.add_term(w.clone(), c / diff);
    }
    out
}

/// Acts by a group element through its reduced word, rightmost letter first.
pub fn ld_apply_perm(w: &AffinePermutation, v: &LdVector) -> LdVector {
    let (word, r) = w.reduced_word();
    let mut out = v.clone();
    for &k in word.iter().rev() {
        out = ld_s(k, &out);
    }
    if r != 0 {
        let p = AffinePermutation::pi_power(r, v.diagram.n());
        let mut shifted = LdVector::zero(&v.diagram);
        for (w, c) in &out.terms {
            shifted.add_term(p.mul(w), c.clone());
        }
        out = shifted;
    }
    out
}

pub fn ld_apply_element(x: &QElement, v: &LdVector) -> LdVector {
    let mut out = LdVector::zero(&v.diagram);
    for (w, c) in x.terms() {
        out = out.add(&ld_apply_perm(w, v).scale(c));
    }
    out
}

/// The quotient map: `Q(Σ c_w w 1_D) = Σ c_w w v_{T_0}`.
pub fn quotient_q(d: &PeriodicDiagram, v: &VermaVector<Q>) -> Result<LdVector> {
    if v.chi != d.chi() {
        return Err(DahaError::CharacterMismatch);
    }
    Ok(ld_apply_element(&v.element, &LdVector::t0(d)))
}

/// Pairs `(i, w)` with `l(w) <= bound`, `wT_0` standard and `s_i w T_0`
/// not standard. `w` ranges over grade-0 representatives.
pub fn kernel_generators(d: &PeriodicDiagram, bound: usize) -> Vec<(usize, AffinePermutation)> {
    let mut out = Vec::new();
    for w in enumerate_standard(d, bound) {
        for i in 0..d.n() {
            if !is_standard(d, &w.left_mul_s(i)) {
                out.push((i, w.clone()));
            }
        }
    }
    out
}

/// `x_i = π s_{i-2} ⋯ s_0 s_{n-1} ⋯ s_i`, as a word of simple reflections
/// read left to right after the leading `π`.
pub fn x_word(i: usize, n: usize) -> Vec<usize> {
    let n = n as i64;
    (0..n - 1).map(|t| (i as i64 - 2 - t).rem_euclid(n) as usize).collect()
}

/// `x_i v`, applying the letters of [`x_word`] right to left.
pub fn x_apply_ld(i: usize, v: &LdVector) -> LdVector {
    let mut out = v.clone();
    for &k in x_word(i, v.diagram.n()).iter().rev() {
        out = ld_s(k, &out);
    }
    ld_pi(1, &out)
}

#[derive(Clone, Debug, Serialize)]
pub struct TorsionReport {
    pub m: usize,
    pub k: usize,
    /// `(x_{bk+1} + ... + x_{bk+k}) v_{T_0}` for `b = 0..m`.
    #[serde(skip)]
    pub block_sums: Vec<LdVector>,
    pub block_sums_json: Vec<Value>,
    pub block_sums_equal: bool,
    /// `(-1)^{m-1} π X_0 ⋯ X_{m-1} v_{T_0}` equals the first block sum.
    pub closed_form_matches: bool,
    /// The same identity without the sign `(-1)^{m-1}`.
    pub unsigned_closed_form_matches: bool,
    /// `Σ_{i<=k} x_i - Σ_{i<=k} x_{k+i}` in the group algebra.
    #[serde(skip)]
    pub witness: QElement,
    pub witness_json: Value,
    pub witness_nonzero: bool,
    pub witness_annihilates: bool,
}

impl TorsionReport {
    pub fn passed(&self) -> bool {
        self.block_sums_equal && self.closed_form_matches && self.witness_nonzero && self.witness_annihilates
    }
}

/// `X_i = 1 + s_{ik} + s_{ik+1} s_{ik} + ... + s_{ik+k-2} ⋯ s_{ik}`.
pub fn torsion_x_block(i: usize, k: usize, n: usize) -> QElement {
    let mut out = QElement::one(n);
    let mut w = AffinePermutation::identity(n);
    for j in 0..k.saturating_sub(1) {
        w = w.left_mul_s((i * k + j) % n);
        out.add_term(w.clone(), Q::one());
    }
    out
}

/// Checks the block-sum identities for `D = Z × [μ, λ]` with `m >= 2` rows
/// per period.
pub fn torsion_check(d: &PeriodicDiagram) -> Result<TorsionReport> {
    if !d.has_infinite_column()? || d.m() < 2 {
        return Err(DahaError::Precondition("torsion_check needs l = 0 and m >= 2".into()));
    }
    let m = d.m();
    let n = d.n();
    let k = n / m;
    let t0 = LdVector::t0(d);
    let block_sums: Vec<LdVector> = (0..m)
        .map(|b| {
            (1..=k).fold(LdVector::zero(d), |acc, i| acc.add(&x_apply_ld(b * k + i, &t0)))
        })
        .collect();
    let block_sums_equal = block_sums.windows(2).all(|p| p[0] == p[1]);
    let mut star = t0.clone();
    for i in (0..m).rev() {
        star = ld_apply_element(&torsion_x_block(i, k, n), &star);
    }
    let star = ld_pi(1, &star);
    let sign = if m % 2 == 1 { Q::one() } else { -Q::one() };
    let closed_form_matches = star.scale(&sign) == block_sums[0];
    let unsigned_closed_form_matches = star == block_sums[0];
    let mut witness = QElement::zero(n);
    for i in 1..=k {
        witness.add_term(AffinePermutation::x(i, n), Q::one());
        witness.add_term(AffinePermutation::x(k + i, n), -Q::one());
    }
    let image = ld_apply_element(&witness, &t0);
    Ok(TorsionReport {
        m,
        k,
        block_sums_json: block_sums.iter().map(|v| v.to_json()).collect(),
        block_sums,
        block_sums_equal,
        closed_form_matches,
        unsigned_closed_form_matches,
        witness_json: witness.to_json(),
        witness_nonzero: !witness.is_zero(),
        witness_annihilates: image.is_zero(),
        witness,
    })
}

/// One failed relation on one basis vector.
#[derive(Clone, Debug, Serialize)]
pub struct LdFailure {
    pub relation: String,
    pub window: Vec<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LdRelationReport {
    pub basis_size: usize,
    pub checks: usize,
    pub failures: Vec<LdFailure>,
}

/// Checks every defining relation as an operator identity on each basis
/// vector `v_T`, `T` from [`enumerate_standard`] within `bound`.
pub fn check_ld_relations(d: &PeriodicDiagram, bound: usize) -> LdRelationReport {
    let n = d.n();
    let nn = n as i64;
    let kappa = q(d.kappa());
    let basis = enumerate_standard(d, bound);
    let mut checks = 0;
    let mut failures = Vec::new();
    for w in &basis {
        let v = LdVector::basis(d, w.clone()).expect("standard");
        let mut record = |name: &str, ok: bool| {
            checks += 1;
            if !ok {
                failures.push(LdFailure {
                    relation: name.to_string(),
                    window: w.window().to_vec(),
                });
            }
        };
        for i in 0..n {
            record("s_i^2 = 1", ld_s(i, &ld_s(i, &v)) == v);
            if n >= 3 {
                let j = (i + 1) % n;
                record(
                    "s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}",
                    ld_s(i, &ld_s(j, &ld_s(i, &v))) == ld_s(j, &ld_s(i, &ld_s(j, &v))),
                );
            }
            for j in 0..n {
                if i != j && (i + 1) % n != j && (j + 1) % n != i {
                    record("s_i s_j = s_j s_i", ld_s(i, &ld_s(j, &v)) == ld_s(j, &ld_s(i, &v)));
                }
            }
            record(
                "π s_i π^-1 = s_{i+1}",
                ld_pi(1, &ld_s(i, &ld_pi(-1, &v))) == ld_s(i + 1, &v),
            );
            let phi_zero = ld_phi(i, &v).is_zero();
            record("Φ_i v_T = 0 iff s_i T nonstandard", phi_zero == !is_standard(d, &w.left_mul_s(i)));
        }
        for i in 1..nn {
            let lhs = ld_s(i as usize, &ld_u(i, &v));
            let rhs = ld_u(i + 1, &ld_s(i as usize, &v)).sub(&v);
            record("s_i u_i = u_{i+1} s_i - 1", lhs == rhs);
        }
        {
            let lhs = ld_s(0, &ld_u(nn, &v));
            let s0v = ld_s(0, &v);
            let rhs = ld_u(1, &s0v).sub(&s0v.scale(&kappa)).sub(&v);
            record("s_0 u_n = (u_1 - κ) s_0 - 1", lhs == rhs);
        }
        for i in 0..n {
            for j in 1..=nn {
                let r = j.rem_euclid(nn) as usize;
                if r == i || r == (i + 1) % n {
                    continue;
                }
                record("s_i u_j = u_j s_i", ld_s(i, &ld_u(j, &v)) == ld_u(j, &ld_s(i, &v)));
            }
        }
        for i in 1..nn {
            record(
                "π u_i π^-1 = u_{i+1}",
                ld_pi(1, &ld_u(i, &ld_pi(-1, &v))) == ld_u(i + 1, &v),
            );
        }
        record(
            "π u_n π^-1 = u_1 - κ",
            ld_pi(1, &ld_u(nn, &ld_pi(-1, &v))) == ld_u(1, &v).sub(&v.scale(&kappa)),
        );
        for i in 1..=n {
            for j in i + 1..=n {
                record(
                    "x_i x_j = x_j x_i",
                    x_apply_ld(i, &x_apply_ld(j, &v)) == x_apply_ld(j, &x_apply_ld(i, &v)),
                );
            }
        }
    }
    LdRelationReport {
        basis_size: basis.len(),
        checks,
        failures,
    }
}
