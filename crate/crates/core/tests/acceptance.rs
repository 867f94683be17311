//! Acceptance run: one line per criterion, exact equality throughout, and a
//! wall-clock limit per criterion. Runs without the libtest harness so the
//! lines are always printed; the process fails if any criterion fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use schurlie::bracketing::bracketing_function;
use schurlie::closure::{schur_closure_rank, GeneratorSet};
use schurlie::derivation::Derivation;
use schurlie::free_group::{verify_mccool, AutGenerator, AutWord, EndoOnFree, ProductConvention};
use schurlie::lie::{specht_wever, specht_wever_linear, BracketShape};
use schurlie::magnus::{classify_pair, johnson_image, PairClass};
use schurlie::schur::{EndoMatrix, SchurElement};
use schurlie::tensor::TensorElement;
use schurlie::verify::{run_suite, Report, Suite, VerifyOptions};
use schurlie::word::{all_words, Word};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite(s: Suite, n: usize, max_degree: usize, samples: Option<usize>) -> Result<Report, String> {
    let options = VerifyOptions { n: Some(n), max_degree: Some(max_degree), seed: 2024, samples, generators: None };
    let report = run_suite(s, &options).map_err(|e| e.to_string())?;
    if let Some(bad) = report.failures().next() {
        return Err(format!("{}: {} failed: {}", report.suite, bad.key, bad.detail));
    }
    ensure(report.passed, || format!("{} did not pass", report.suite))?;
    Ok(report)
}

/// Aperiodic necklaces of length `p` over `n` letters, by Möbius inversion.
fn necklaces(n: usize, p: usize) -> usize {
    fn mobius(mut d: usize) -> i64 {
        let (mut r, mut f) = (1, 2);
        while f * f <= d {
            if d % f == 0 {
                d /= f;
                if d % f == 0 {
                    return 0;
                }
                r = -r;
            }
            f += 1;
        }
        if d > 1 {
            -r
        } else {
            r
        }
    }
    let s: i64 = (1..=p).filter(|d| p % d == 0).map(|d| mobius(d) * (n as i64).pow((p / d) as u32)).sum();
    (s / p as i64) as usize
}

fn binomial(a: usize, b: usize) -> usize {
    (0..b).fold(1usize, |acc, i| acc * (a - i) / (i + 1))
}

fn criterion_1() -> Outcome {
    let br = |s: &str| bracketing_function(&s.parse::<BracketShape>().unwrap()).to_string();
    let left = br("[[,],]");
    let right = br("[,[,]]");
    ensure(left == "1 - (1 2) - (1 2 3) + (1 3)", || format!("[[,],] gave {left}"))?;
    ensure(right == "1 - (2 3) - (1 3 2) + (1 3)", || format!("[,[,]] gave {right}"))?;
    Ok(format!("{left} | {right}"))
}

/// Orbits of Σ_q on pairs of words: the dimension of the commutant, found by
/// union-find over matrix positions.
fn commutant_orbits(n: usize, q: usize) -> Vec<Vec<(usize, usize)>> {
    let words: Vec<Vec<u8>> = all_words(n, q).map(|w| w.letters().to_vec()).collect();
    let index: BTreeMap<Vec<u8>, usize> = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let size = words.len();
    let mut parent: Vec<usize> = (0..size * size).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for k in 0..q.saturating_sub(1) {
        let swap = |w: &[u8]| {
            let mut v = w.to_vec();
            v.swap(k, k + 1);
            index[&v]
        };
        let moved: Vec<usize> = words.iter().map(|w| swap(w)).collect();
        for r in 0..size {
            for c in 0..size {
                let (a, b) = (find(&mut parent, r * size + c), find(&mut parent, moved[r] * size + moved[c]));
                parent[a] = b;
            }
        }
    }
    let mut orbits: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for r in 0..size {
        for c in 0..size {
            let root = find(&mut parent, r * size + c);
            orbits.entry(root).or_default().push((r, c));
        }
    }
    orbits.into_values().collect()
}

/// All of Σ_q, acting on words by moving the letter at `s` to `σ(s)`.
fn all_place_actions(q: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, q: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == q {
            out.push(prefix.clone());
            return;
        }
        for v in 0..q {
            if !prefix.contains(&v) {
                prefix.push(v);
                rec(prefix, q, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), q, &mut out);
    out
}

fn place(w: &Word, sigma: &[usize]) -> Word {
    let mut v = vec![0u8; w.len()];
    for (s, &l) in w.letters().iter().enumerate() {
        v[sigma[s]] = l;
    }
    Word::new(v).unwrap()
}

fn criterion_2() -> Outcome {
    let mut dims = Vec::new();
    for n in 1..=3 {
        for q in 0..=4 {
            let basis = SchurElement::basis(n, q);
            let orbits = commutant_orbits(n, q);
            let expected = binomial(n * n + q - 1, q);
            ensure(basis.len() == orbits.len() && orbits.len() == expected, || {
                format!("n={n} q={q}: basis {} orbits {} binomial {expected}", basis.len(), orbits.len())
            })?;
            // every element from orbit data commutes with all of Σ_q
            let words: Vec<Word> = all_words(n, q).collect();
            let perms = all_place_actions(q);
            for f in &basis {
                let images: Vec<TensorElement> = words.iter().map(|w| f.apply_to_word(w).unwrap()).collect();
                for (w, img) in words.iter().zip(&images) {
                    for sigma in &perms {
                        let moved = f.apply_to_word(&place(w, sigma)).unwrap();
                        let mut expect = TensorElement::zero(q);
                        for (v, c) in img.iter() {
                            expect.add_term(place(v, sigma), c.clone());
                        }
                        ensure(moved == expect, || format!("n={n} q={q}: {} not equivariant", f.to_json()))?;
                    }
                }
            }
            // every brute-force equivariant matrix decomposes, and uniquely: the
            // orbit indicators are a basis of the commutant and each is one basis element
            let mut hits = vec![0usize; basis.len()];
            for orbit in &orbits {
                let mut m = EndoMatrix::zero(n, q);
                for &(r, c) in orbit {
                    m.set(r, c, BigInt::from(1));
                }
                let g = m.read_orbit_data().map_err(|e| e.to_string())?;
                ensure(g.to_matrix() == m, || format!("n={n} q={q}: orbit matrix not reconstructed"))?;
                let k = basis.iter().position(|b| *b == g);
                let k = k.ok_or_else(|| format!("n={n} q={q}: orbit indicator is not a basis element"))?;
                hits[k] += 1;
            }
            ensure(hits.iter().all(|&h| h == 1), || format!("n={n} q={q}: orbit indicators do not match the basis bijectively"))?;
            dims.push(orbits.len());
        }
    }
    Ok(format!("dimensions {dims:?}"))
}

/// `ad(x_{w_1})⋯ad(x_{w_{p-1}})(x_{w_p})` expanded by hand.
fn ad_expansion(w: &[u8]) -> BTreeMap<Vec<u8>, i64> {
    let mut acc: BTreeMap<Vec<u8>, i64> = BTreeMap::from([(vec![*w.last().unwrap()], 1)]);
    for &l in w[..w.len() - 1].iter().rev() {
        let mut next: BTreeMap<Vec<u8>, i64> = BTreeMap::new();
        for (v, c) in &acc {
            let mut left = vec![l];
            left.extend(v);
            let mut right = v.clone();
            right.push(l);
            *next.entry(left).or_default() += c;
            *next.entry(right).or_default() -= c;
        }
        next.retain(|_, c| *c != 0);
        acc = next;
    }
    acc
}

fn criterion_3() -> Outcome {
    let mut words = 0;
    for n in 1..=3 {
        for p in 1..=5 {
            for w in all_words(n, p) {
                let b = specht_wever(n, &w).map_err(|e| e.to_string())?;
                let oracle: BTreeMap<Vec<u8>, i64> = ad_expansion(w.letters());
                let embedded: BTreeMap<Vec<u8>, i64> =
                    b.embed().iter().map(|(v, c)| (v.letters().to_vec(), i64::try_from(c.clone()).unwrap())).collect();
                ensure(embedded == oracle, || format!("b({w}) disagrees with its ad expansion"))?;
                let bb = specht_wever_linear(n, &b.embed()).map_err(|e| e.to_string())?;
                ensure(bb == b.scale(&BigInt::from(p)), || format!("b(b({w})) != {p} b({w})"))?;
                words += 1;
            }
        }
    }
    Ok(format!("{words} words"))
}

fn criterion_4() -> Outcome {
    let r = suite(Suite::SchurLie, 3, 4, Some(200))?;
    ensure(r.instances.len() == 12, || format!("expected 12 (n,q) cases, got {}", r.instances.len()))?;
    Ok("200 random f per (n,q), n<=3, q<=4".into())
}

fn criterion_5() -> Outcome {
    let r = suite(Suite::StarLaws, 3, 5, Some(100))?;
    Ok(format!("{} law/rank cases x 100 instances", r.instances.len()))
}

fn criterion_6() -> Outcome {
    let r = suite(Suite::Operad, 3, 4, Some(50))?;
    let evaluated: u64 = r.instances.iter().filter_map(|i| i.detail["evaluated"].as_u64()).sum();
    let units: u64 = r.instances.iter().filter_map(|i| i.detail["elements"].as_u64()).sum();
    Ok(format!("identity axiom on {units} basis elements, {evaluated} coherence instances"))
}

fn criterion_7() -> Outcome {
    let r = suite(Suite::Prop422, 3, 4, None)?;
    let expected = 6 * (1..=4).map(|p| necklaces(3, p)).sum::<usize>();
    ensure(r.instances.len() == expected, || format!("{} instances, expected {expected}", r.instances.len()))?;
    Ok(format!("{expected} (i,j,u) instances"))
}

fn criterion_8() -> Outcome {
    let r = suite(Suite::Lemma425, 3, 3, None)?;
    let expected = 6 * (necklaces(3, 2) + necklaces(3, 3));
    ensure(r.instances.len() == expected, || format!("{} instances, expected {expected}", r.instances.len()))?;
    Ok(format!("{expected} (i,j,u) instances"))
}

fn criterion_9() -> Outcome {
    let mut ranks = Vec::new();
    for (n, max) in [(2, 5), (3, 4)] {
        for set in [GeneratorSet::MTilde, GeneratorSet::Gamma] {
            let report = schur_closure_rank(n, &set.generators(n), max).map_err(|e| e.to_string())?;
            for d in &report.degrees {
                let full = n * necklaces(n, d.degree);
                ensure(d.full_rank == full && d.reached_rank == full, || {
                    format!("{set:?} n={n} p={}: reached {} of {full}", d.degree, d.reached_rank)
                })?;
                ensure(d.elementary_divisors.len() == full && d.elementary_divisors.iter().all(|e| e == "1"), || {
                    format!("{set:?} n={n} p={}: divisors {:?}", d.degree, d.elementary_divisors)
                })?;
                if set == GeneratorSet::Gamma {
                    ranks.push(d.reached_rank);
                }
            }
        }
    }
    Ok(format!("full rank, unit divisors, ranks {ranks:?}"))
}

fn criterion_10() -> Outcome {
    let mut counts = Vec::new();
    for n in [3, 4] {
        let report = verify_mccool(n).map_err(|e| e.to_string())?;
        let m = n * (n - 1) * (n - 2);
        let expected = 3 * m + m * (n - 3);
        ensure(report.instances.len() == expected, || format!("n={n}: {} instances, expected {expected}", report.instances.len()))?;
        ensure(report.all_hold(ProductConvention::Composition), || format!("n={n}: a relation fails"))?;
        counts.push(expected);
    }
    Ok(format!("instances {counts:?}"))
}

fn criterion_11() -> Outcome {
    let n = 3;
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                let image = johnson_image(&EndoOnFree::chi(n, i, j).unwrap(), 1).map_err(|e| e.to_string())?;
                ensure(image == Derivation::chi_tilde(n, i, j).unwrap(), || format!("chi({i},{j}) maps to {image}"))?;
                pairs.push((i, j));
            }
        }
    }
    let mut thetas = 0;
    for i in 1..=n {
        for s in 1..=n {
            for t in s + 1..=n {
                if i != s && i != t {
                    let image = johnson_image(&EndoOnFree::theta(n, i, s, t).unwrap(), 1).map_err(|e| e.to_string())?;
                    ensure(image == Derivation::theta_tilde(n, i, s, t).unwrap(), || format!("theta({i},{s},{t}) maps to {image}"))?;
                    thetas += 1;
                }
            }
        }
    }
    for &a in &pairs {
        for &b in &pairs {
            let word = AutWord::commutator(&AutWord::gen(AutGenerator::Chi(a.0, a.1)), &AutWord::gen(AutGenerator::Chi(b.0, b.1)));
            let image = johnson_image(&word.evaluate(n, ProductConvention::Composition).unwrap(), 2).map_err(|e| e.to_string())?;
            let bracket = Derivation::chi_tilde(n, a.0, a.1).unwrap().bracket(&Derivation::chi_tilde(n, b.0, b.1).unwrap()).unwrap();
            ensure(image == bracket, || format!("[chi{a:?}, chi{b:?}] maps to {image}, bracket is {bracket}"))?;
        }
    }
    Ok(format!("{} chi, {thetas} theta, {} depth-2 pairs", pairs.len(), pairs.len() * pairs.len()))
}

fn criterion_12() -> Outcome {
    let n = 3;
    let gens: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let mut abelian = 0;
    for (k, &a) in gens.iter().enumerate() {
        for &b in &gens[k + 1..] {
            // {i,j} ∩ {i',j'} = ∅ cannot happen in rank 3, so only j = j' remains
            if a.1 == b.1 {
                let r = classify_pair(n, a, b, 3).map_err(|e| e.to_string())?;
                ensure(r.commutator_trivial && r.classification == PairClass::FreeAbelian, || format!("{a:?} {b:?}: {}", r.classification))?;
                abelian += 1;
            }
        }
    }
    for (a, b) in [((1, 2), (2, 1)), ((1, 2), (1, 3)), ((1, 2), (2, 3))] {
        let r = classify_pair(n, a, b, 3).map_err(|e| e.to_string())?;
        ensure(r.classification == PairClass::FreeEvidence, || format!("{a:?} {b:?}: {}", r.classification))?;
        let depths: Vec<usize> = r.certificate.iter().map(|c| c.depth).collect();
        ensure(depths == [2, 3, 3], || format!("{a:?} {b:?}: certificate depths {depths:?}"))?;
        ensure(r.certificate.iter().all(|c| c.nonzero && c.matches_bracket), || format!("{a:?} {b:?}: zero or mismatched image"))?;
    }
    Ok(format!("{abelian} abelian pairs trivial, 3 free pairs certified to depth 3"))
}

fn criterion_13() -> Outcome {
    let r = suite(Suite::Lemma32, 3, 4, None)?;
    let checked: u64 = r.instances.iter().filter_map(|i| i.detail["checked"].as_u64()).sum();
    Ok(format!("{checked} monomials checked"))
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Outcome); 13] = [
        ("bracketing functions", Duration::from_secs(1), criterion_1),
        ("Schur characterization", Duration::from_secs(120), criterion_2),
        ("Specht-Wever relation", Duration::from_secs(60), criterion_3),
        ("Schur maps commute with bracketing", Duration::from_secs(120), criterion_4),
        ("star product laws", Duration::from_secs(180), criterion_5),
        ("operad axioms", Duration::from_secs(60), criterion_6),
        ("chi bracket identity", Duration::from_secs(60), criterion_7),
        ("annihilating Schur element", Duration::from_secs(120), criterion_8),
        ("generation by M~ and Gamma", Duration::from_secs(600), criterion_9),
        ("McCool relations", Duration::from_secs(10), criterion_10),
        ("Johnson correspondence", Duration::from_secs(30), criterion_11),
        ("pair classification", Duration::from_secs(60), criterion_12),
        ("chi substitution and generator values", Duration::from_secs(60), criterion_13),
    ];
    let mut failed = 0;
    for (k, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let verdict = match (&outcome, elapsed <= *limit) {
            (Ok(detail), true) => format!("PASS  {detail}"),
            (Ok(_), false) => format!("FAIL  over time limit {:.0?}", limit),
            (Err(e), _) => format!("FAIL  {e}"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {:>2} [{name}] {:.2}s  {verdict}", k + 1, elapsed.as_secs_f64());
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
