//! Exact coefficients and the group algebra of the extended affine Weyl group.
//!
//! Coefficients are either exact rationals or univariate rational functions
//! in a limit variable `t`, kept in lowest terms with a monic denominator.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{DahaError, Result};
use crate::weyl::AffinePermutation;

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn q_frac(a: i64, b: i64) -> Q {
    Q::new(BigInt::from(a), BigInt::from(b))
}

/// Dense polynomial in `t` with rational coefficients, lowest degree first.
/// No trailing zeros; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly(Vec<Q>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: Q) -> Self {
        Poly(vec![c]).trimmed()
    }

    pub fn from_coeffs(c: Vec<Q>) -> Self {
        Poly(c).trimmed()
    }

    pub fn t() -> Self {
        Poly(vec![Q::zero(), Q::one()])
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree; the zero polynomial has degree `-1` here.
    pub fn degree(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn lead(&self) -> Option<&Q> {
        self.0.last()
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let len = self.0.len().max(o.0.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            let c = match (self.0.get(k), o.0.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(c);
        }
        Poly(out).trimmed()
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Q::zero(); self.0.len() + o.0.len() - 1];
        for (a, x) in self.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in o.0.iter().enumerate() {
                out[a + b] += x * y;
            }
        }
        Poly(out).trimmed()
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|x| x * c).collect())
    }

    /// Quotient and remainder; `d` must be nonzero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dl = d.lead().expect("division by zero polynomial").clone();
        let dd = d.0.len();
        let mut r = self.0.clone();
        if r.len() < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Q::zero(); r.len() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = &r[k + dd - 1] / &dl;
            if !c.is_zero() {
                for (s, dc) in d.0.iter().enumerate() {
                    r[k + s] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        r.truncate(dd - 1);
        (Poly(quot).trimmed(), Poly(r).trimmed())
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => Poly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let mut a = self.monic();
        let mut b = o.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Multiplicity of `t` as a factor (`None` for zero).
    pub fn order_at_zero(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_zero(&self) -> Q {
        self.0.first().cloned().unwrap_or_else(Q::zero)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, abs) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A rational function `p(t)/q(t)` over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunctionT {
    num: Poly,
    den: Poly,
}

impl RationalFunctionT {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(DahaError::Precondition("zero denominator".into()));
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.degree() == 0 {
            let inv = den.0[0].recip();
            return Self {
                num: num.scale(&inv),
                den: Poly::constant(Q::one()),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() > 0 {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        } else {
            (num, den)
        };
        let l = den.lead().unwrap().recip();
        Self {
            num: num.scale(&l),
            den: den.scale(&l),
        }
    }

    pub fn zero() -> Self {
        Self {
            num: Poly::zero(),
            den: Poly::constant(Q::one()),
        }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self {
            num: Poly::constant(c),
            den: Poly::constant(Q::one()),
        }
    }

    /// `a + b t`.
    pub fn linear(a: Q, b: Q) -> Self {
        Self {
            num: Poly::from_coeffs(vec![a, b]),
            den: Poly::constant(Q::one()),
        }
    }

    pub fn t() -> Self {
        Self::linear(Q::zero(), Q::one())
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Multiplicity of `t` in the numerator minus that in the denominator.
    /// Zero has no order; `None` is returned.
    pub fn order_at_zero(&self) -> Option<i64> {
        let a = self.num.order_at_zero()? as i64;
        let b = self.den.order_at_zero().unwrap_or(0) as i64;
        Some(a - b)
    }

    /// Value at `t = 0`, or the order of the pole.
    pub fn value_at_zero(&self) -> std::result::Result<Q, i64> {
        match self.order_at_zero() {
            None => Ok(Q::zero()),
            Some(o) if o < 0 => Err(-o),
            Some(_) => Ok(self.num.eval_zero() / self.den.eval_zero()),
        }
    }

    pub fn eval(&self, x: &Q) -> Option<Q> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::normalized(self.den.clone(), self.num.clone()))
        }
    }

    /// `(a, b)` if the function is the polynomial `a + b t`.
    pub fn as_linear(&self) -> Option<(Q, Q)> {
        if self.den.degree() != 0 || self.num.degree() > 1 {
            return None;
        }
        let d = self.den.eval_zero();
        let c = |k: usize| self.num.coeffs().get(k).cloned().unwrap_or_else(Q::zero) / &d;
        Some((c(0), c(1)))
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree() <= 0 && self.den.degree() == 0
    }

    fn add_rf(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Self::normalized(self.num.add(&o.num), self.den.clone());
        }
        Self::normalized(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    fn mul_rf(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.is_constant() {
            return Self {
                num: o.num.scale(&self.num.0[0]),
                den: o.den.clone(),
            };
        }
        if o.is_constant() {
            return Self {
                num: self.num.scale(&o.num.0[0]),
                den: self.den.clone(),
            };
        }
        Self::normalized(self.num.mul(&o.num), self.den.mul(&o.den))
    }
}

impl fmt::Display for RationalFunctionT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Coefficient field for [`GroupAlgebraElement`].
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static + Zero + One
{
    fn plus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_q(q: &Q) -> Self;
    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;
}

impl Scalar for Q {
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_q(q: &Q) -> Self {
        q.clone()
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Zero for RationalFunctionT {
    fn zero() -> Self {
        RationalFunctionT::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunctionT {
    fn one() -> Self {
        RationalFunctionT::one()
    }
}

impl std::ops::Add for RationalFunctionT {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.add_rf(&o)
    }
}

impl std::ops::Sub for RationalFunctionT {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.minus(&o)
    }
}

impl std::ops::Mul for RationalFunctionT {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_rf(&o)
    }
}

impl std::ops::Neg for RationalFunctionT {
    type Output = Self;
    fn neg(self) -> Self {
        self.negated()
    }
}

impl Scalar for RationalFunctionT {
    fn plus(&self, o: &Self) -> Self {
        self.add_rf(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul_rf(o)
    }
    fn negated(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn from_q(q: &Q) -> Self {
        RationalFunctionT::constant(q.clone())
    }
    fn inverse(&self) -> Option<Self> {
        self.recip()
    }
}

/// A finite linear combination of affine permutations of a fixed degree.
#[derive(Clone, PartialEq, Debug)]
pub struct GroupAlgebraElement<F: Scalar> {
    n: usize,
    terms: BTreeMap<AffinePermutation, F>,
}

pub type QElement = GroupAlgebraElement<Q>;
pub type TElement = GroupAlgebraElement<RationalFunctionT>;

impl<F: Scalar> GroupAlgebraElement<F> {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(AffinePermutation::identity(n))
    }

    pub fn basis(w: AffinePermutation) -> Self {
        Self::term(w, F::one())
    }

    pub fn term(w: AffinePermutation, c: F) -> Self {
        let mut out = Self::zero(w.n());
        out.add_term(w, c);
        out
    }

    /// `s_k + c`.
    pub fn s_plus(k: usize, c: F, n: usize) -> Self {
        let mut out = Self::basis(AffinePermutation::s(k, n));
        out.add_term(AffinePermutation::identity(n), c);
        out
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (AffinePermutation, F)>) -> Result<Self> {
        let mut out = Self::zero(n);
        for (w, c) in terms {
            if w.n() != n {
                return Err(DahaError::DegreeMismatch(n, w.n()));
            }
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffinePermutation, &F)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &AffinePermutation) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, w: AffinePermutation, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().plus(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.n != o.n {
            Err(DahaError::DegreeMismatch(self.n, o.n))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&F::one().negated()))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x.times(c))).collect(),
        }
    }

    /// Convolution product.
    pub fn multiply(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = Self::zero(self.n);
        for (u, a) in &self.terms {
            for (w, b) in &o.terms {
                out.add_term(u.mul(w), a.times(b));
            }
        }
        Ok(out)
    }

    pub fn left_mul_perm(&self, u: &AffinePermutation) -> Self {
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(w, c)| (u.mul(w), c.clone())).collect(),
        }
    }

    pub fn right_mul_perm(&self, u: &AffinePermutation) -> Self {
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(w, c)| (w.mul(u), c.clone())).collect(),
        }
    }

    pub fn left_mul_s(&self, k: usize) -> Self {
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(w, c)| (w.left_mul_s(k), c.clone())).collect(),
        }
    }

    /// `self · (s_k + c)`.
    pub fn right_mul_s_plus(&self, k: usize, c: &F) -> Self {
        let mut out = self.scale(c);
        for (w, x) in &self.terms {
            out.add_term(w.right_mul_s(k), x.clone());
        }
        out
    }

    /// `(s_k + c) · self`.
    pub fn left_mul_s_plus(&self, k: usize, c: &F) -> Self {
        let mut out = self.scale(c);
        for (w, x) in &self.terms {
            out.add_term(w.left_mul_s(k), x.clone());
        }
        out
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> GroupAlgebraElement<G> {
        let mut out = GroupAlgebraElement::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Maximal length of a permutation in the support.
    pub fn max_length(&self) -> usize {
        self.terms.keys().map(|w| w.length()).max().unwrap_or(0)
    }

    /// Terms sorted by window as a JSON list.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(w, c)| json!({"window": w.window(), "coeff": c.to_string()}))
                .collect(),
        )
    }
}

impl<F: Scalar> fmt::Display for GroupAlgebraElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c})·{:?}", w.window())).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Coefficient-wise evaluation at `t = 0`.
pub fn limit_t_to_zero(x: &TElement) -> Result<QElement> {
    let mut out = QElement::zero(x.n());
    for (w, c) in x.terms() {
        match c.value_at_zero() {
            Ok(v) => out.add_term(w.clone(), v),
            Err(order) => {
                return Err(DahaError::PoleAtZero {
                    window: w.window().to_vec(),
                    order,
                })
            }
        }
    }
    Ok(out)
}

/// A Laurent polynomial `Σ c_k t^{low + k}` standing for a series known up
/// to some exponent that the caller tracks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Laurent {
    low: i64,
    coeffs: Vec<Q>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self { low: 0, coeffs: Vec::new() }
    }

    pub fn monomial(c: Q, exp: i64) -> Self {
        Self { low: exp, coeffs: vec![c] }.normalized()
    }

    /// `1/(a + b t)` up to `t^max_exp`; `a` must be nonzero.
    pub fn recip_linear(a: &Q, b: &Q, max_exp: i64) -> Self {
        let r = -(b / a);
        let mut coeffs = Vec::new();
        let mut c = a.recip();
        for _ in 0..=max_exp.max(0) {
            coeffs.push(c.clone());
            c *= &r;
        }
        Self { low: 0, coeffs }.normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn order(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn coeff(&self, exp: i64) -> Q {
        let k = exp - self.low;
        if k < 0 {
            return Q::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_else(Q::zero)
    }

    /// Drops every exponent above `max_exp`.
    pub fn truncate(mut self, max_exp: i64) -> Self {
        let keep = (max_exp - self.low + 1).max(0) as usize;
        self.coeffs.truncate(keep);
        self.normalized()
    }

    pub fn add_assign(&mut self, o: &Laurent) {
        if o.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = o.clone();
            return;
        }
        let low = self.low.min(o.low);
        let high = (self.low + self.coeffs.len() as i64).max(o.low + o.coeffs.len() as i64);
        let coeffs = (low..high).map(|e| self.coeff(e) + o.coeff(e)).collect();
        *self = Self { low, coeffs }.normalized();
    }

    /// Product with every exponent above `max_exp` dropped.
    pub fn mul_trunc(&self, o: &Laurent, max_exp: i64) -> Laurent {
        if self.is_zero() || o.is_zero() {
            return Laurent::zero();
        }
        let low = self.low + o.low;
        let len = ((max_exp - low + 1).max(0) as usize).min(self.coeffs.len() + o.coeffs.len() - 1);
        let mut coeffs = vec![Q::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] += a * b;
            }
        }
        Self { low, coeffs }.normalized()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunctionT {
        RationalFunctionT::new(
            Poly::from_coeffs(num.iter().map(|&c| q(c)).collect()),
            Poly::from_coeffs(den.iter().map(|&c| q(c)).collect()),
        )
        .unwrap()
    }

    #[test]
    fn canonical_form() {
        // (t^2 - 1)/(2t - 2) = (t + 1)/2
        let a = rf(&[-1, 0, 1], &[-2, 2]);
        assert_eq!(a, rf(&[1, 1], &[2]));
        assert_eq!(a.denominator(), &Poly::constant(q(1)));
        assert_eq!(rf(&[0], &[3, 1]), RationalFunctionT::zero());
    }

    #[test]
    fn order_and_limit() {
        // (2+t)t/(1+t)^2
        let c = rf(&[0, 2, 1], &[1, 2, 1]);
        assert_eq!(c.order_at_zero(), Some(1));
        assert_eq!(c.value_at_zero(), Ok(q(0)));
        let pole = rf(&[1], &[0, 1]);
        assert_eq!(pole.value_at_zero(), Err(1));
        let w = AffinePermutation::s(1, 2);
        let x = TElement::term(w.clone(), c);
        assert!(limit_t_to_zero(&x).unwrap().is_zero());
        let y = TElement::term(w, pole);
        assert!(matches!(limit_t_to_zero(&y), Err(DahaError::PoleAtZero { order: 1, .. })));
        let k = TElement::s_plus(1, RationalFunctionT::constant(q_frac(1, 2)), 3);
        assert_eq!(limit_t_to_zero(&k).unwrap(), QElement::s_plus(1, q_frac(1, 2), 3));
    }

    #[test]
    fn group_algebra_products() {
        let n = 4;
        let a = QElement::s_plus(1, q(1), n);
        let b = QElement::s_plus(1, q(-1), n);
        assert!(a.multiply(&b).unwrap().is_zero());
        let pi = QElement::basis(AffinePermutation::pi_power(1, n));
        let lhs = pi.multiply(&QElement::basis(AffinePermutation::s(1, n))).unwrap();
        let rhs = QElement::basis(AffinePermutation::s(2, n)).multiply(&pi).unwrap();
        assert!(lhs.sub(&rhs).unwrap().is_zero());
        assert_eq!(a.right_mul_s_plus(2, &q(3)), a.multiply(&QElement::s_plus(2, q(3), n)).unwrap());
        assert_eq!(a.left_mul_s_plus(0, &q(3)), QElement::s_plus(0, q(3), n).multiply(&a).unwrap());
        assert!(a.add(&QElement::one(3)).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(rf(&[1, -2], &[3, 1]).to_string(), "(-2*t + 1)/(t + 3)");
    }

    #[test]
    fn laurent_arithmetic() {
        // 1/(1 + t) = 1 - t + t^2 - ...
        let s = Laurent::recip_linear(&q(1), &q(1), 3);
        assert_eq!((0..=3).map(|e| s.coeff(e)).collect::<Vec<_>>(), vec![q(1), q(-1), q(1), q(-1)]);
        let pole = Laurent::monomial(q(2), -1);
        let p = s.mul_trunc(&pole, 1);
        assert_eq!(p.order(), Some(-1));
        assert_eq!((-1..=1).map(|e| p.coeff(e)).collect::<Vec<_>>(), vec![q(2), q(-2), q(2)]);
        assert_eq!(p.coeff(2), q(0));
        let mut z = p.clone();
        z.add_assign(&Laurent::monomial(q(-2), -1));
        assert_eq!(z.order(), Some(0));
        assert!(Laurent::monomial(q(0), 3).is_zero());
        assert!(p.truncate(-2).is_zero());
    }
}
