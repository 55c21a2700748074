mod common;

use common::*;
use knotcert::braid::{closure_diagram, seifert_matrix, BraidWord};
use knotcert::diagram::{parse_pd, LinkDiagram};
use knotcert::quadform::seifert_signature;
use knotcert::theoremlab::mis::{is_independent, maximum};
use knotcert::theoremlab::{certify_bound, reduce, twist_family_experiment, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn brute_force_mis(n: usize, edges: &[(usize, usize)]) -> usize {
    (0u32..1 << n)
        .filter(|m| edges.iter().all(|&(a, b)| a == b || m & (1 << a) == 0 || m & (1 << b) == 0))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

#[test]
fn maximum_independent_set_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..300 {
        let n = rng.gen_range(0..=12);
        let density = rng.gen_range(0.05..0.7);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(density) {
                    edges.push(if rng.gen_bool(0.5) { (a, b) } else { (b, a) });
                }
            }
        }
        let set = maximum(n, &edges);
        assert!(is_independent(&set, &edges));
        assert_eq!(set.len(), brute_force_mis(n, &edges), "n={n} {edges:?}");
    }
}

fn closure_sigma(beta: &BraidWord) -> i64 {
    seifert_signature(&seifert_matrix(beta).unwrap().matrix).unwrap().signature()
}

#[test]
fn reduction_keeps_betti_number_and_signature() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut cases: Vec<(String, LinkDiagram, i64)> = full_corpus()
        .into_iter()
        .filter_map(|l| Some((l.name.clone(), l.diagram, l.expected.signature?)))
        .collect();
    for _ in 0..120 {
        let (n, letters) = random_positive_braid(&mut rng, 4, 12);
        let beta = BraidWord::new(n, letters).unwrap();
        let d = closure_diagram(&beta);
        if !d.is_reduced() {
            assert!(reduce(&d).is_err(), "{beta}");
            continue;
        }
        cases.push((beta.to_string(), d, closure_sigma(&beta)));
    }
    let mut shrunk = 0;
    for (name, d, sigma) in &cases {
        let r = reduce(d).unwrap();
        let before = PdOracle::new(&d.to_pd());
        assert!(r.diagram.is_reduced(), "{name}");
        assert!(r.diagram.crossing_count() <= d.crossing_count());
        if r.diagram.crossing_count() > 0 {
            let after = PdOracle::new(&r.diagram.to_pd());
            assert_eq!(after.b1(), before.b1(), "{name}");
            assert_eq!(after.gl_signature(0), *sigma, "{name}");
            assert_eq!(after.gl_signature(1), *sigma, "{name}");
        } else {
            assert_eq!(before.b1(), 0, "{name}");
        }
        for p in &r.passes {
            assert_eq!(p.b1_before, p.b1_after);
            assert!(p.c_after < p.c_before);
        }
        if !r.passes.is_empty() {
            shrunk += 1;
        }
    }
    assert!(shrunk > 5, "{shrunk}");
}

#[test]
fn every_curated_record_holds() {
    for link in load_corpus("curated.jsonl") {
        let report = certify_bound(&link.name, &link.diagram).unwrap();
        assert_eq!(report.verdict, Verdict::Holds, "{}", link.name);
        assert!(48 * report.sigma >= report.b1 as i64, "{}", link.name);
    }
}

#[test]
fn certificate_refuses_bad_diagrams() {
    let negative = parse_pd("X[4,2,5,1] X[6,4,1,3] X[2,6,3,5]").unwrap();
    assert!(certify_bound("mirror", &negative).is_err());
    let split = closure_diagram(&"4: 1 1 1 3 3 3".parse().unwrap());
    assert!(certify_bound("split", &split).is_err());
}

#[test]
fn twist_family_guards() {
    let trefoil: BraidWord = "2: 1 1 1".parse().unwrap();
    assert!(twist_family_experiment(&trefoil, 3, 4).is_err());
    assert!(twist_family_experiment(&"3: 1 -2 1 -2".parse().unwrap(), 0, 4).is_err());
    assert!(twist_family_experiment(&"2: 1 1".parse().unwrap(), 0, 4).is_err());
    let r = twist_family_experiment(&trefoil, 0, 5).unwrap();
    assert_eq!(r.points.len(), 6);
}

#[test]
fn letter_powers_are_torus_knots() {
    for n in 0..5usize {
        let letters: Vec<i32> = std::iter::repeat(1).take(2 * n + 1).chain([2, 1, 2]).collect();
        let beta = BraidWord::new(3, letters).unwrap();
        let q = 2 * n as i64 + 3;
        let expect = torus_signature(2, q, num_rational::BigRational::from_integer(1.into()));
        assert_eq!(closure_sigma(&beta), expect, "N={n}");
    }
}
