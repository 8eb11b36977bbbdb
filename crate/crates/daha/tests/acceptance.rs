//! Runs the ten acceptance criteria, one PASS/FAIL line each.
//! Exits nonzero if any criterion fails or overruns its time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use daha::algebra::{q, q_frac, QElement, RationalFunctionT};
use daha::daha::{check_relations, phi_pullback_word, u_apply, PeriodicZ, VermaVector};
use daha::diagram::{enumerate_standard, enumerate_standard_brute_force, PeriodicDiagram};
use daha::embedding::{
    build_wtilde, classify, compute_e, embed_kappa1, is_eigenvector, special_order, target_character,
    verify_factors,
};
use daha::semisimple::{check_ld_relations, torsion_check};
use daha::weyl::{AffinePermutation, Character, DescentChoice, Root};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn diagram(m: usize, l: i64, mu: &[i64], lam: &[i64]) -> PeriodicDiagram {
    PeriodicDiagram::new(m, l, mu.to_vec(), lam.to_vec()).expect("valid diagram")
}

fn square() -> PeriodicDiagram {
    diagram(2, 1, &[1, 1], &[2, 2])
}

fn ints(chi: &Character) -> Vec<i64> {
    chi.as_ints().unwrap_or_default()
}

fn pipeline() -> Check {
    let d = square();
    ensure!(ints(&d.chi()) == [0, 1, -1, 0], "chi = {:?}", ints(&d.chi()));
    let w = build_wtilde(&d).map_err(|e| e.to_string())?;
    ensure!(w.window() == [-1, -3, 8, 6], "wtilde = {:?}", w.window());
    let o = special_order(&d).map_err(|e| e.to_string())?;
    let expected: Vec<Root> = [(1, 2), (1, 3), (1, 4), (3, 4), (-3, 2), (-3, 4), (-1, 2), (-1, 4), (2, 4)]
        .iter()
        .map(|&(i, j)| Root::new(i, j, 4).unwrap())
        .collect();
    ensure!(o.ordered_roots == expected, "order = {:?}", o.ordered_roots);
    ensure!(o.word == [1, 2, 3, 2, 0, 1, 3, 0, 3], "word = {:?}", o.word);
    let t = target_character(&d, &w).map_err(|e| e.to_string())?;
    ensure!(ints(&t) == [2, 3, -3, -2], "target = {:?}", ints(&t));
    Ok(())
}

fn displayed_product() -> Check {
    let n = 4;
    let sp = |k: usize, c| QElement::s_plus(k, c, n);
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
    let oracle = factors.iter().fold(QElement::one(n), |acc, f| acc.multiply(f).unwrap());
    let data = compute_e(&square(), None).map_err(|e| e.to_string())?;
    ensure!(ints(&data.target) == [2, 3, -3, -2], "target = {:?}", ints(&data.target));
    ensure!(data.e == oracle, "E differs from the product ({} vs {} terms)", data.e.len(), oracle.len());
    Ok(())
}

fn eigenvectors() -> Check {
    let ds = [
        square(),
        diagram(1, 1, &[1], &[2]),
        diagram(2, 1, &[1, 1], &[3, 2]),
        diagram(3, 1, &[1, 1, 1], &[2, 2, 2]),
    ];
    for d in &ds {
        ensure!(d.kappa() >= 2 && d.n() <= 6 && d.is_skew(), "{d:?} out of scope");
        let v = compute_e(d, None).map_err(|e| format!("{d:?}: {e}"))?.vector();
        ensure!(!v.is_zero(), "{d:?}: E = 0");
        for i in 1..=d.n() as i64 {
            let lhs = u_apply(i, &v).element;
            ensure!(lhs == v.element.scale(&d.chi().get(i)), "{d:?}: u_{i}");
        }
    }
    Ok(())
}

fn kernel() -> Check {
    let data = compute_e(&square(), None).map_err(|e| e.to_string())?;
    let rep = verify_factors(&data, 4, None);
    ensure!(rep.failures == 0, "{} failures", rep.failures);
    let n = 4;
    let s2 = AffinePermutation::s(2, n);
    for (i, w) in [(1, AffinePermutation::identity(n)), (3, s2.clone()), (1, s2)] {
        let g = rep.generators.iter().find(|g| g.i == i && g.w == w);
        ensure!(g.is_some_and(|g| g.vanishes), "Φ_{i} at {:?} not covered", w.window());
    }
    Ok(())
}

fn torsion() -> Check {
    for (m, k) in [(2usize, 1i64), (2, 2), (3, 1), (3, 2)] {
        let d = diagram(m, 0, &vec![1; m], &vec![k; m]);
        let rep = torsion_check(&d).map_err(|e| e.to_string())?;
        ensure!(rep.block_sums_equal, "(m, k) = ({m}, {k}): block sums differ");
        ensure!(rep.closed_form_matches, "(m, k) = ({m}, {k}): closed form");
        ensure!(rep.passed(), "(m, k) = ({m}, {k}): witness");
        let c = classify(&d, 1, None).map_err(|e| e.to_string())?;
        ensure!(c.verdict() == "NotEmbeddable", "(m, k) = ({m}, {k}): {}", c.verdict());
    }
    Ok(())
}

fn kappa_one() -> Check {
    for n in [2, 3] {
        let d = diagram(1, 0, &[1], &[n]);
        let k = embed_kappa1(&d).map_err(|e| e.to_string())?;
        let v = VermaVector::new(k.e.clone(), k.target.clone()).map_err(|e| e.to_string())?;
        ensure!(!v.is_zero() && is_eigenvector(&v, &k.chi), "n = {n}: not an eigenvector");
        ensure!(k.annihilated.len() == n as usize - 1, "n = {n}: checked {:?}", k.annihilated);
        ensure!(k.annihilated.iter().all(|&b| b), "n = {n}: Φ_i E = {:?}", k.annihilated);
    }
    Ok(())
}

fn relations() -> Check {
    for n in 2..=4 {
        for kappa in 1..=3 {
            let rep = check_relations(n, kappa, 200, 2024);
            ensure!(rep.checks() > 0 && rep.failures() == 0, "n = {n}, κ = {kappa}: {} failures", rep.failures());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let (mut lengths, mut words) = (0, 0);
    while lengths < 100 || words < 100 {
        let n = rng.gen_range(2..=4);
        let len = rng.gen_range(0..=6);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n)).collect();
        let g = AffinePermutation::from_word(&word, rng.gen_range(-2..=2), n);
        ensure!(g.inversion_set().len() == g.length(), "|I_w| != l(w) for {:?}", g.window());
        lengths += 1;
        let w = AffinePermutation::from_word(&word, 0, n);
        let (a, _) = w.reduced_word_by(DescentChoice::Smallest);
        let (b, _) = w.reduced_word_by(DescentChoice::Largest);
        if a != b && words < 100 {
            let z = PeriodicZ {
                kappa: rng.gen_range(1..=3),
                base: (0..n)
                    .map(|i| RationalFunctionT::linear(q(rng.gen_range(-3..=3)), q(2 * i as i64 + 1)))
                    .collect(),
            };
            let pa = phi_pullback_word(&w, &a, &z).map_err(|e| e.to_string())?;
            let pb = phi_pullback_word(&w, &b, &z).map_err(|e| e.to_string())?;
            ensure!(pa == pb, "words {a:?} and {b:?} disagree");
            words += 1;
        }
    }
    Ok(())
}

fn ld_relations() -> Check {
    let ds = [square(), diagram(2, 0, &[1, 1], &[1, 1]), diagram(2, 1, &[1, 1], &[3, 2])];
    for d in &ds {
        let rep = check_ld_relations(d, 3);
        ensure!(rep.checks > 0 && rep.failures.is_empty(), "{d:?}: {:?}", rep.failures.first());
    }
    Ok(())
}

fn enumeration() -> Check {
    let ds = [
        square(),
        diagram(1, 1, &[1], &[2]),
        diagram(1, 2, &[1], &[3]),
        diagram(1, 0, &[1], &[3]),
        diagram(2, 0, &[1, 1], &[1, 1]),
        diagram(2, 1, &[1, 1], &[2, 1]),
        diagram(2, 1, &[2, 1], &[3, 2]),
        diagram(3, 1, &[1, 1, 1], &[1, 2, 1]),
    ];
    for d in &ds {
        ensure!(d.n() <= 4, "{d:?} too large");
        for bound in 0..=3 {
            ensure!(
                enumerate_standard(d, bound) == enumerate_standard_brute_force(d, bound),
                "{d:?} at bound {bound}"
            );
        }
    }
    Ok(())
}

fn directions() -> Check {
    let ds = [
        square(),
        diagram(1, 1, &[1], &[2]),
        diagram(2, 1, &[1, 1], &[3, 2]),
        diagram(3, 1, &[1, 1, 1], &[2, 2, 2]),
        diagram(1, 2, &[1], &[3]),
        diagram(3, 2, &[2, 2, 1], &[3, 3, 3]),
    ];
    let alternatives: [&[i64]; 2] = [&[3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25], &[12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1]];
    for d in &ds {
        let base = compute_e(d, None).map_err(|e| format!("{d:?}: {e}"))?.e;
        for dirs in alternatives {
            let other = compute_e(d, Some(dirs)).map_err(|e| format!("{d:?} {dirs:?}: {e}"))?.e;
            ensure!(other == base, "{d:?}: {dirs:?} gives a different E");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 square diagram pipeline", Duration::from_secs(1), pipeline),
        ("2 E_D equals the displayed product", Duration::from_secs(5), displayed_product),
        ("3 eigenvector certificates", Duration::from_secs(30), eigenvectors),
        ("4 kernel vanishing to length 4", Duration::from_secs(120), kernel),
        ("5 torsion obstruction", Duration::from_secs(60), torsion),
        ("6 kappa = 1 embedding", Duration::from_secs(5), kappa_one),
        ("7 relation property suite", Duration::from_secs(120), relations),
        ("8 L_D well-definedness", Duration::from_secs(120), ld_relations),
        ("9 enumeration oracle", Duration::from_secs(120), enumeration),
        ("10 direction independence", Duration::from_secs(120), directions),
    ];
    let mut failed = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let verdict = match result {
            Ok(()) if took <= budget => "PASS".to_string(),
            Ok(()) => format!("FAIL (over budget of {budget:?})"),
            Err(e) => format!("FAIL ({e})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("{verdict} {name} [{:.2?}]", took);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} of 10 criteria failed");
        ExitCode::FAILURE
    }
}
