//! Embeddings `L_D ↪ M_{w̃^{-1}χ_D}`: the column-reading permutation `w̃`,
//! its special convex order, the fused eigenvector `E_D`, the map `F`,
//! bounded kernel verification, the `κ = 1` case and the classifier.

use std::collections::BTreeMap;

use num::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{QElement, TElement, Q};
use crate::daha::{eigenvalue, fused_limit, intertwiner_phi, product, pullback_factors, u_apply, RowZ, VermaVector};
use crate::diagram::{enumerate_standard, is_standard, Box, DiagramSpec, PeriodicDiagram};
use crate::error::{DahaError, Result};
use crate::semisimple::{kernel_generators, torsion_check, TorsionReport};
use crate::weyl::{AffinePermutation, Character, DescentChoice, Root};

pub const DEFAULT_BOUND: usize = 4;

fn require_finite_columns(d: &PeriodicDiagram) -> Result<()> {
    if d.has_infinite_column()? {
        return Err(DahaError::Precondition("the diagram has an infinite column".into()));
    }
    Ok(())
}

/// Labels of `T_0` read up each column, starting from the bottom of the
/// column of box 1 and moving to the next column on the left. Position
/// `j` of the reading gets label `raw(j)`.
pub fn column_reading(d: &PeriodicDiagram) -> Result<AffinePermutation> {
    require_finite_columns(d)?;
    let n = d.n();
    let mut col = d.t0_box(1).b;
    let mut bx = d.column_bottom(col).expect("column of box 1 is nonempty");
    let mut raw = Vec::with_capacity(n);
    while raw.len() < n {
        raw.push(d.t0_label(bx)?);
        let up = Box::new(bx.a - 1, bx.b);
        if d.contains(up) {
            bx = up;
            continue;
        }
        loop {
            col -= 1;
            if let Some(b) = d.column_bottom(col) {
                bx = b;
                break;
            }
        }
    }
    AffinePermutation::from_window(raw)
}

/// The column-reading permutation shifted to grade 0: `w̃(j) = raw(j - r)`.
pub fn build_wtilde(d: &PeriodicDiagram) -> Result<AffinePermutation> {
    let raw = column_reading(d)?;
    let r = raw.grade();
    Ok(raw.mul(&AffinePermutation::pi_power(-r, d.n())))
}

/// The target character `w̃^{-1} χ_D`.
pub fn target_character(d: &PeriodicDiagram, wtilde: &AffinePermutation) -> Result<Character> {
    wtilde.inverse().act_weight(&d.chi())
}

#[derive(Clone, Debug, Serialize)]
pub struct SpecialOrderData {
    #[serde(skip)]
    pub diagram: PeriodicDiagram,
    pub wtilde: AffinePermutation,
    pub ordered_roots: Vec<Root>,
    pub word: Vec<usize>,
}

/// Sorts `I_{w̃}` by the reading position of the first index (later read
/// first), then by the second index, and recovers the reduced word from
/// `β_k = s_{i_1} ⋯ s_{i_{k-1}}(α_{i_k})`.
pub fn special_order(d: &PeriodicDiagram) -> Result<SpecialOrderData> {
    let wtilde = build_wtilde(d)?;
    let n = d.n();
    let inv = wtilde.inverse();
    let mut roots: Vec<Root> = wtilde.inversion_set().into_iter().collect();
    roots.sort_by_key(|r| (-inv.act_int(r.i), r.j));
    let word = word_from_order(&roots, n)?;
    if AffinePermutation::from_word(&word, 0, n) != wtilde {
        return Err(DahaError::Verification("recovered word does not multiply to w̃".into()));
    }
    Ok(SpecialOrderData {
        diagram: d.clone(),
        wtilde,
        ordered_roots: roots,
        word,
    })
}

/// Inverts `β_k = s_{i_1} ⋯ s_{i_{k-1}}(α_{i_k})`; fails if some step does
/// not land on a simple root.
pub fn word_from_order(roots: &[Root], n: usize) -> Result<Vec<usize>> {
    let mut v = AffinePermutation::identity(n);
    let mut word = Vec::with_capacity(roots.len());
    for (pos, beta) in roots.iter().enumerate() {
        let a = v.inverse().act_root(beta);
        let k = a.simple_index(n).ok_or_else(|| {
            DahaError::Verification(format!("root {pos} pulls back to {a:?}, not a simple root"))
        })?;
        word.push(k);
        v = v.right_mul_s(k);
    }
    Ok(word)
}

/// Violations of the convexity conditions and the same-diagonal adjacency
/// condition for the special order. Empty means all hold.
pub fn convexity_violations(data: &SpecialOrderData) -> Vec<String> {
    let n = data.diagram.n();
    let pos: BTreeMap<Root, usize> = data.ordered_roots.iter().enumerate().map(|(k, r)| (*r, k)).collect();
    let mut out = Vec::new();
    for (a, &pa) in &pos {
        for (b, &pb) in &pos {
            if pa >= pb {
                continue;
            }
            if let Some(s) = a.add(b, n) {
                if let Some(&ps) = pos.get(&s) {
                    if !(pa < ps && ps < pb) {
                        out.push(format!("{s:?} is not between {a:?} and {b:?}"));
                    }
                }
            }
        }
    }
    for (g, &pg) in &pos {
        for (b, &pb) in &pos {
            if let Some(a) = g.sub(b, n) {
                if a.is_positive() && !pos.contains_key(&a) && pb > pg {
                    out.push(format!("{b:?} comes after {g:?} although {a:?} is not an inversion"));
                }
            }
        }
    }
    let chi = data.diagram.chi();
    for r in &data.ordered_roots {
        if chi.get(r.i) != chi.get(r.j) {
            continue;
        }
        let (i, j) = (r.i, r.j);
        let (Ok(left), Ok(mid)) = (Root::new(i, j - 1, n), Root::new(j - 1, j, n)) else {
            out.push(format!("{r:?} has an imaginary neighbour"));
            continue;
        };
        match (pos.get(&left), pos.get(&mid)) {
            (Some(&pl), Some(_)) => {
                if pos[r].abs_diff(pl) != 1 {
                    out.push(format!("{left:?} and {r:?} are not adjacent"));
                }
            }
            _ => out.push(format!("{left:?} or {mid:?} is missing for {r:?}")),
        }
    }
    out
}

fn z_for(d: &PeriodicDiagram, wtilde: &AffinePermutation, word: &[usize], dirs: Option<&[i64]>) -> Result<RowZ> {
    RowZ::for_pairs(d, &pullback_factors(wtilde, word), dirs)
}

/// `φ_{w̃}(w̃^{-1} z)` over the special word, before the limit.
pub fn phi_wtilde(data: &SpecialOrderData, dirs: Option<&[i64]>) -> Result<TElement> {
    let z = z_for(&data.diagram, &data.wtilde, &data.word, dirs)?;
    product(data.diagram.n(), &pullback_factors(&data.wtilde, &data.word), &z)
}

#[derive(Clone, Debug)]
pub struct EmbeddingData {
    pub order: SpecialOrderData,
    pub target: Character,
    pub e: QElement,
    pub directions: BTreeMap<i64, i64>,
}

impl EmbeddingData {
    pub fn vector(&self) -> VermaVector<Q> {
        VermaVector::new(self.e.clone(), self.target.clone()).expect("degrees agree")
    }
}

/// Checks that `v` is a `u`-eigenvector with eigenvalue `chi`.
pub fn is_eigenvector(v: &VermaVector<Q>, chi: &Character) -> bool {
    (1..=v.n() as i64).all(|i| u_apply(i, v).element == v.element.scale(&chi.get(i)))
}

/// `E_D = lim_{t→0} φ_{w̃}(w̃^{-1} z) · 1_{w̃^{-1}χ_D}`, checked to be a
/// `χ_D`-eigenvector.
pub fn compute_e(d: &PeriodicDiagram, dirs: Option<&[i64]>) -> Result<EmbeddingData> {
    if d.kappa() < 2 {
        return Err(DahaError::Precondition("compute_e needs κ >= 2".into()));
    }
    let order = special_order(d)?;
    let z = z_for(d, &order.wtilde, &order.word, dirs)?;
    let e = fused_limit(d.n(), &pullback_factors(&order.wtilde, &order.word), &z)?;
    let target = target_character(d, &order.wtilde)?;
    let data = EmbeddingData {
        directions: z.directions().clone(),
        order,
        target,
        e,
    };
    if !is_eigenvector(&data.vector(), &d.chi()) {
        return Err(DahaError::Verification("E_D is not a χ_D-eigenvector".into()));
    }
    Ok(data)
}

/// `F(x · 1_D) = x E_D` for a group-algebra element `x`.
pub fn apply_f_element(data: &EmbeddingData, x: &QElement) -> Result<VermaVector<Q>> {
    VermaVector::new(x.multiply(&data.e)?, data.target.clone())
}

/// `F(Φ_{j_1} ⋯ Φ_{j_r} · 1_D)`: the matched product of `j_1 ⋯ j_r`
/// followed by the special word of `w̃`, on `w̃^{-1} z`, then `t → 0`.
pub fn apply_f_phi(data: &EmbeddingData, js: &[usize], dirs: Option<&[i64]>) -> Result<VermaVector<Q>> {
    let d = &data.order.diagram;
    let mut word: Vec<usize> = js.iter().map(|j| j % d.n()).collect();
    word.extend_from_slice(&data.order.word);
    let factors = pullback_factors(&data.order.wtilde, &word);
    let z = RowZ::for_pairs(d, &factors, dirs)?;
    let x = fused_limit(d.n(), &factors, &z)?;
    VermaVector::new(x, data.target.clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Adjacency {
    Row,
    Column,
}

/// Whether `i` and `i+1` sit in the same row or the same column of `wT_0`,
/// given that `s_i w T_0` is not standard.
pub fn adjacency(d: &PeriodicDiagram, w: &AffinePermutation, i: usize) -> Option<Adjacency> {
    let inv = w.inverse();
    let a = d.t0_box(inv.act_int(i as i64));
    let b = d.t0_box(inv.act_int(i as i64 + 1));
    if a.a == b.a {
        Some(Adjacency::Row)
    } else if a.b == b.b {
        Some(Adjacency::Column)
    } else {
        None
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorResult {
    pub i: usize,
    pub w: AffinePermutation,
    pub phi_word: Vec<usize>,
    pub adjacency: Option<Adjacency>,
    pub vanishes: bool,
    /// `l(s_i w w̃) < l(w w̃)`.
    pub shorter: bool,
    pub error: Option<String>,
}

impl GeneratorResult {
    pub fn passed(&self) -> bool {
        self.vanishes && self.shorter && self.adjacency.is_some() && self.error.is_none()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub bound: usize,
    pub generators: Vec<GeneratorResult>,
    pub failures: usize,
    /// Rank of `{w E_D}` over the standard representatives within the bound.
    pub image_rank: usize,
    pub image_size: usize,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.image_rank == self.image_size
    }
}

/// Checks `F(Φ_i Φ_w 1_D) = 0` for every kernel generator `(i, w)` with
/// `l(w) <= bound`, and that `F` is injective on the standard vectors
/// within the bound.
pub fn verify_factors(data: &EmbeddingData, bound: usize, dirs: Option<&[i64]>) -> VerifyReport {
    let d = &data.order.diagram;
    let wt = &data.order.wtilde;
    let gens = kernel_generators(d, bound);
    let generators: Vec<GeneratorResult> = gens
        .par_iter()
        .map(|(i, w)| {
            let (word, _) = w.reduced_word();
            let mut js = vec![*i];
            js.extend_from_slice(&word);
            let ww = w.mul(wt);
            let shorter = ww.left_mul_s(*i).length() < ww.length();
            let (vanishes, error) = match apply_f_phi(data, &js, dirs) {
                Ok(v) => (v.is_zero(), None),
                Err(e) => (false, Some(e.to_string())),
            };
            GeneratorResult {
                i: *i,
                w: w.clone(),
                phi_word: js,
                adjacency: adjacency(d, w, *i),
                vanishes,
                shorter,
                error,
            }
        })
        .collect();
    let failures = generators.iter().filter(|g| !g.passed()).count();
    let images: Vec<QElement> = enumerate_standard(d, bound)
        .iter()
        .map(|w| data.e.left_mul_perm(w))
        .collect();
    VerifyReport {
        bound,
        failures,
        generators,
        image_rank: rank(&images),
        image_size: images.len(),
    }
}

/// Rank over the rationals of a list of group-algebra elements.
pub fn rank(vectors: &[QElement]) -> usize {
    let mut rows: BTreeMap<AffinePermutation, BTreeMap<AffinePermutation, Q>> = BTreeMap::new();
    for x in vectors {
        let mut v: BTreeMap<AffinePermutation, Q> = x.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        while let Some((top, c)) = v.iter().next_back().map(|(w, c)| (w.clone(), c.clone())) {
            let Some(row) = rows.get(&top) else {
                rows.insert(top, v);
                break;
            };
            let f = c / &row[&top];
            for (w, r) in row {
                let e = v.entry(w.clone()).or_insert_with(Q::zero);
                *e -= &f * r;
                if e.is_zero() {
                    v.remove(w);
                }
            }
        }
    }
    rows.len()
}

/// The longest element `w_0` of the finite Weyl group.
pub fn longest_element(n: usize) -> AffinePermutation {
    AffinePermutation::from_window((1..=n as i64).rev().collect()).expect("valid window")
}

#[derive(Clone, Debug)]
pub struct Kappa1Data {
    pub chi: Character,
    pub target: Character,
    pub word: Vec<usize>,
    pub e: QElement,
    /// `Φ_i E = 0` for `i = 1..n-1`.
    pub annihilated: Vec<bool>,
}

/// `E = Φ_{w_0} 1_τ` with `τ = w_0 χ_D` for a single row with `κ = 1`,
/// over the lexicographically least reduced word of `w_0`.
pub fn embed_kappa1(d: &PeriodicDiagram) -> Result<Kappa1Data> {
    if d.m() != 1 || d.l() != 0 {
        return Err(DahaError::Precondition("embed_kappa1 needs m = 1 and l = 0".into()));
    }
    let n = d.n();
    let chi = d.chi();
    let w0 = longest_element(n);
    let target = w0.act_weight(&chi)?;
    let (word, _) = w0.reduced_word_by(DescentChoice::Smallest);
    let mut v = VermaVector::<Q>::generator(target.clone());
    let mut xi = target.clone();
    for &k in word.iter().rev() {
        v = intertwiner_phi(k, &v, &xi)?;
        xi = AffinePermutation::s(k, n).act_weight(&xi)?;
    }
    if xi != chi || eigenvalue(&v).as_ref() != Some(&chi) {
        return Err(DahaError::Verification("Φ_{w_0} 1_τ is not a χ-eigenvector".into()));
    }
    let annihilated = (1..n)
        .map(|i| intertwiner_phi(i, &v, &chi).map(|x| x.is_zero()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Kappa1Data {
        chi,
        target,
        word,
        e: v.element,
        annihilated,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct EmbeddingCertificate {
    pub diagram: DiagramSpec,
    pub target_character: Value,
    pub e: Value,
    pub checked_bound: Option<usize>,
    pub passed: bool,
    pub details: Value,
}

fn character_json(c: &Character) -> Value {
    match c.as_ints() {
        Some(v) => json!(v),
        None => json!(c.values().iter().map(|x| x.to_string()).collect::<Vec<_>>()),
    }
}

pub fn certificate(data: &EmbeddingData, report: Option<&VerifyReport>) -> EmbeddingCertificate {
    EmbeddingCertificate {
        diagram: data.order.diagram.to_spec(),
        target_character: character_json(&data.target),
        e: data.e.to_json(),
        checked_bound: report.map(|r| r.bound),
        passed: report.is_none_or(|r| r.passed()),
        details: json!({
            "wtilde": data.order.wtilde.window(),
            "word": data.order.word,
            "directions": data.directions.iter().map(|(r, c)| json!([r, c])).collect::<Vec<_>>(),
            "verification": report,
        }),
    }
}

pub fn kappa1_certificate(d: &PeriodicDiagram, k: &Kappa1Data) -> EmbeddingCertificate {
    EmbeddingCertificate {
        diagram: d.to_spec(),
        target_character: character_json(&k.target),
        e: k.e.to_json(),
        checked_bound: None,
        passed: k.annihilated.iter().all(|&b| b),
        details: json!({"w0_word": k.word, "annihilated": k.annihilated}),
    }
}

#[derive(Clone, Debug)]
pub enum Classification {
    Embeddable(EmbeddingCertificate),
    NotEmbeddable(TorsionReport),
}

impl Classification {
    pub fn to_json(&self) -> Value {
        match self {
            Classification::Embeddable(c) => json!({"verdict": "Embeddable", "certificate": c}),
            Classification::NotEmbeddable(t) => json!({"verdict": "NotEmbeddable", "torsion": t}),
        }
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            Classification::Embeddable(_) => "Embeddable",
            Classification::NotEmbeddable(_) => "NotEmbeddable",
        }
    }

    /// Whether every internal check behind the verdict passed.
    pub fn consistent(&self) -> bool {
        match self {
            Classification::Embeddable(c) => c.passed,
            Classification::NotEmbeddable(t) => t.passed(),
        }
    }
}

/// Decides embeddability of `L_D` into a Verma module.
pub fn classify(d: &PeriodicDiagram, bound: usize, dirs: Option<&[i64]>) -> Result<Classification> {
    if !d.is_skew() {
        return Err(DahaError::Precondition("classify needs a skew diagram".into()));
    }
    if d.kappa() == 1 {
        let k = embed_kappa1(d)?;
        return Ok(Classification::Embeddable(kappa1_certificate(d, &k)));
    }
    if d.has_infinite_column()? {
        return Ok(Classification::NotEmbeddable(torsion_check(d)?));
    }
    let data = compute_e(d, dirs)?;
    let report = verify_factors(&data, bound, dirs);
    Ok(Classification::Embeddable(certificate(&data, Some(&report))))
}

/// Sanity check used by tests and the CLI: the leading term of `E_D` is
/// `w̃` with coefficient 1, and no term is longer.
pub fn leading_term_ok(data: &EmbeddingData) -> bool {
    let l = data.order.wtilde.length();
    data.e.coeff(&data.order.wtilde) == Q::one() && data.e.terms().all(|(w, _)| w.length() <= l)
}

/// Whether `wT_0` is standard for each `w` in `ws`.
pub fn all_standard(d: &PeriodicDiagram, ws: &[AffinePermutation]) -> bool {
    ws.iter().all(|w| is_standard(d, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, q_frac};

    fn square() -> PeriodicDiagram {
        PeriodicDiagram::new(2, 1, vec![1, 1], vec![2, 2]).unwrap()
    }

    fn win(v: &[i64]) -> AffinePermutation {
        AffinePermutation::from_window(v.to_vec()).unwrap()
    }

    #[test]
    fn wtilde_of_square() {
        let d = square();
        assert_eq!(column_reading(&d).unwrap().window(), &[8, 6, 3, 1]);
        let w = build_wtilde(&d).unwrap();
        assert_eq!(w.window(), &[-1, -3, 8, 6]);
        assert_eq!(target_character(&d, &w).unwrap(), Character::from_ints(3, &[2, 3, -3, -2]));
    }

    #[test]
    fn special_order_of_square() {
        let data = special_order(&square()).unwrap();
        let expect: Vec<Root> = [(1, 2), (1, 3), (1, 4), (3, 4), (-3, 2), (-3, 4), (-1, 2), (-1, 4), (2, 4)]
            .iter()
            .map(|&(i, j)| Root::new(i, j, 4).unwrap())
            .collect();
        assert_eq!(data.ordered_roots, expect);
        assert_eq!(data.word, vec![1, 2, 3, 2, 0, 1, 3, 0, 3]);
        assert!(convexity_violations(&data).is_empty());
    }

    #[test]
    fn bad_order_is_caught() {
        let mut data = special_order(&square()).unwrap();
        data.ordered_roots.swap(0, 1);
        assert!(!convexity_violations(&data).is_empty());
    }

    fn square_oracle() -> QElement {
        let n = 4;
        let sp = |k: usize, c: Q| QElement::s_plus(k, c, n);
        let mid = QElement::from_terms(
            n,
            [
                (AffinePermutation::from_word(&[2, 3], 0, n), q(1)),
                (AffinePermutation::s(3, n), q(-1)),
                (AffinePermutation::identity(n), q(-1)),
            ],
        )
        .unwrap();
        let factors = [
            sp(1, q(1)),
            mid,
            sp(2, q(1)),
            sp(0, q_frac(-1, 2)),
            sp(1, q_frac(-1, 3)),
            sp(3, q(-1)),
            sp(0, q_frac(-1, 2)),
            sp(3, q(-1)),
        ];
        factors.iter().fold(QElement::one(n), |acc, f| acc.multiply(f).unwrap())
    }

    #[test]
    fn e_of_square_matches_product() {
        let data = compute_e(&square(), None).unwrap();
        assert_eq!(data.e, square_oracle());
        assert!(leading_term_ok(&data));
        let other = compute_e(&square(), Some(&[1, 3, 7, 15, 31, 63, 127, 255])).unwrap();
        assert_eq!(other.e, data.e);
    }

    #[test]
    fn phi_wtilde_is_regular() {
        let data = special_order(&square()).unwrap();
        let phi = phi_wtilde(&data, None).unwrap();
        assert!(phi.terms().all(|(_, c)| c.order_at_zero().is_none_or(|o| o >= 0)));
    }

    #[test]
    fn known_kernel_cases() {
        let data = compute_e(&square(), None).unwrap();
        for js in [vec![1], vec![3, 2], vec![1, 2]] {
            assert!(apply_f_phi(&data, &js, None).unwrap().is_zero(), "{js:?}");
        }
        assert!(!apply_f_phi(&data, &[2], None).unwrap().is_zero());
    }

    #[test]
    fn verify_small_bound() {
        let data = compute_e(&square(), None).unwrap();
        let rep = verify_factors(&data, 1, None);
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.generators[0].adjacency, Some(Adjacency::Row));
    }

    #[test]
    fn staircase_n2() {
        let d = PeriodicDiagram::new(1, 1, vec![1], vec![2]).unwrap();
        let data = compute_e(&d, None).unwrap();
        assert!(is_eigenvector(&data.vector(), &d.chi()));
        assert!(leading_term_ok(&data));
    }

    #[test]
    fn kappa1() {
        let d = PeriodicDiagram::new(1, 0, vec![1], vec![2]).unwrap();
        let k = embed_kappa1(&d).unwrap();
        assert_eq!(k.target, Character::from_ints(1, &[1, 0]));
        assert_eq!(k.e, QElement::s_plus(1, q(1), 2));
        assert_eq!(k.annihilated, vec![true]);
        let d = PeriodicDiagram::new(1, 0, vec![1], vec![3]).unwrap();
        let k = embed_kappa1(&d).unwrap();
        assert_eq!(k.word, vec![1, 2, 1]);
        assert_eq!(k.e.len(), 6);
        assert!(k.annihilated.iter().all(|&b| b));
    }

    #[test]
    fn rank_detects_dependence() {
        let a = QElement::s_plus(1, q(1), 3);
        let b = QElement::s_plus(2, q(2), 3);
        let c = a.add(&b).unwrap();
        assert_eq!(rank(&[a.clone(), b.clone()]), 2);
        assert_eq!(rank(&[a, b, c]), 2);
        assert_eq!(rank(&[win(&[2, 1, 3]).into_element()]), 1);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&square(), 1, None).unwrap().verdict(), "Embeddable");
        let col = PeriodicDiagram::new(2, 0, vec![1, 1], vec![1, 1]).unwrap();
        let c = classify(&col, 1, None).unwrap();
        assert_eq!(c.verdict(), "NotEmbeddable");
        assert!(c.consistent());
        let row = PeriodicDiagram::new(1, 0, vec![1], vec![3]).unwrap();
        assert_eq!(classify(&row, 1, None).unwrap().verdict(), "Embeddable");
    }

    trait IntoElement {
        fn into_element(self) -> QElement;
    }

    impl IntoElement for AffinePermutation {
        fn into_element(self) -> QElement {
            QElement::basis(self)
        }
    }
}
