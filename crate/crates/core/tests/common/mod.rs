//! Oracles shared by the integration tests. Nothing here calls into the
//! invariant code of the library: PD strings are re-read from text, faces are
//! traced from the tuples, and signatures come from characteristic
//! polynomials or floating-point eigenvalues.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;

use knotcert::catalogue::{parse_catalogue, LoadedLink};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn corpus_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

/// Every record of a bundled catalogue, which must all load.
pub fn load_corpus(name: &str) -> Vec<LoadedLink> {
    let text = std::fs::read_to_string(corpus_path(name)).expect("corpus file");
    parse_catalogue(&text)
        .into_iter()
        .map(|(line, r)| r.and_then(|r| r.load()).unwrap_or_else(|e| panic!("{name}:{line}: {e}")))
        .collect()
}

pub fn full_corpus() -> Vec<LoadedLink> {
    let mut v = load_corpus("knotinfo_positive_le10.jsonl");
    v.extend(load_corpus("curated.jsonl"));
    v
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

// ---------------------------------------------------------------- signatures

/// `det(xI − M)` by Faddeev–LeVerrier, coefficients from `x^0` upwards.
pub fn char_poly(m: &[Vec<i64>]) -> Vec<BigRational> {
    let n = m.len();
    let a: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut mk: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigRational::zero();
                for l in 0..n {
                    if !mk[l][j].is_zero() {
                        s += &a[i][l] * &mk[l][j];
                    }
                }
                if i == j {
                    s += &coeffs[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        mk = next;
        let mut tr = BigRational::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &a[i][l] * &mk[l][i];
            }
        }
        coeffs[n - k] = -tr / rat(k as i64);
    }
    coeffs
}

fn sign_changes(c: &[BigRational]) -> usize {
    let signs: Vec<bool> = c.iter().filter(|v| !v.is_zero()).map(|v| v.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `(positive, negative, nullity)` of a symmetric integer matrix. The
/// characteristic polynomial is real-rooted, so Descartes' rule is exact.
pub fn descartes_inertia(m: &[Vec<i64>]) -> (usize, usize, usize) {
    let p = char_poly(m);
    let zeros = p.iter().take_while(|c| c.is_zero()).count();
    let q: Vec<BigRational> = p[zeros..].to_vec();
    let pos = sign_changes(&q);
    let flipped: Vec<BigRational> =
        q.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() }).collect();
    let neg = sign_changes(&flipped);
    (pos, neg, zeros)
}

pub fn descartes_signature(m: &[Vec<i64>]) -> i64 {
    let (p, n, _) = descartes_inertia(m);
    p as i64 - n as i64
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
pub fn jacobi_eigenvalues(m: &[Vec<f64>]) -> Vec<f64> {
    let n = m.len();
    let mut a = m.to_vec();
    for _sweep in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off < 1e-22 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).collect()
}

/// Signature from floating-point eigenvalues, or `None` when some eigenvalue
/// is too close to zero to call.
pub fn float_signature(m: &[Vec<f64>]) -> Option<i64> {
    let ev = jacobi_eigenvalues(m);
    if ev.iter().any(|v| v.abs() < 1e-7) {
        return None;
    }
    Some(ev.iter().filter(|v| **v > 0.0).count() as i64 - ev.iter().filter(|v| **v < 0.0).count() as i64)
}

/// Levine–Tristram signature of a Seifert matrix at `exp(iπ·p/q)`, positive
/// links counted positive, via the real `2n × 2n` form of the Hermitian matrix.
pub fn float_levine_tristram(a: &[Vec<i64>], p: u32, q: u32) -> Option<i64> {
    let n = a.len();
    let th = std::f64::consts::PI * p as f64 / q as f64;
    let (cr, ci) = (1.0 - th.cos(), -th.sin());
    // H = (1 − ω)A + (1 − ω̄)Aᵀ
    let mut re = vec![vec![0.0; n]; n];
    let mut im = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (a[i][j] as f64, a[j][i] as f64);
            re[i][j] = cr * (x + y);
            im[i][j] = ci * (x - y);
        }
    }
    let mut big = vec![vec![0.0; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            big[i][j] = re[i][j];
            big[i + n][j + n] = re[i][j];
            big[i][j + n] = -im[i][j];
            big[i + n][j] = im[i][j];
        }
    }
    float_signature(&big).map(|s| -s / 2)
}

/// Signature of the torus link `T(p, q)` at angle `θ` (units of π) from the
/// lattice-point count over `i/p + j/q`.
pub fn torus_signature(p: i64, q: i64, theta: BigRational) -> i64 {
    let x = theta / rat(2);
    let mut s = 0;
    for i in 1..p {
        for j in 1..q {
            let v = BigRational::new(BigInt::from(i), BigInt::from(p)) + BigRational::new(BigInt::from(j), BigInt::from(q));
            if x < v && v < &x + rat(1) {
                s += 1;
            } else if v < x || v > &x + rat(1) {
                s -= 1;
            }
        }
    }
    s
}

pub fn torus_word(p: usize, q: usize) -> String {
    let one: Vec<String> = (1..p).map(|i| i.to_string()).collect();
    format!("{p}: {}", vec![one.join(" "); q].join(" "))
}

// -------------------------------------------------------------------- Burau

type RatMatrix = Vec<Vec<BigRational>>;

fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(BigRational::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

fn mat_det(mut m: RatMatrix) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let v = &f * &m[c][k];
                m[r][k] -= v;
            }
        }
    }
    det
}

fn mat_inv(m: &RatMatrix) -> RatMatrix {
    let n = m.len();
    let mut a: RatMatrix = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("invertible");
        a.swap(p, c);
        let piv = a[c][c].clone();
        for v in a[c].iter_mut() {
            *v /= &piv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..2 * n {
                    let v = &f * &a[c][k];
                    a[r][k] -= v;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Reduced Burau matrix of `σ_i` at `t`.
fn burau_generator(strands: usize, i: usize, t: &BigRational) -> RatMatrix {
    let n = strands - 1;
    let mut m: RatMatrix =
        (0..n).map(|r| (0..n).map(|c| if r == c { BigRational::one() } else { BigRational::zero() }).collect()).collect();
    let k = i - 1;
    m[k][k] = -t.clone();
    if k > 0 {
        m[k - 1][k] = t.clone();
    }
    if k + 1 < n {
        m[k + 1][k] = BigRational::one();
    }
    m
}

fn burau_det_at(strands: usize, letters: &[i32], t: &BigRational) -> BigRational {
    let n = strands - 1;
    let id: RatMatrix =
        (0..n).map(|r| (0..n).map(|c| if r == c { BigRational::one() } else { BigRational::zero() }).collect()).collect();
    let mut m = id.clone();
    for &l in letters {
        let g = burau_generator(strands, l.unsigned_abs() as usize, t);
        let g = if l > 0 { g } else { mat_inv(&g) };
        m = mat_mul(&m, &g);
    }
    mat_det((0..n).map(|r| (0..n).map(|c| &id[r][c] - &m[r][c]).collect()).collect())
}

/// Alexander polynomial up to a unit, as coefficients of `t⁰, t¹, …`:
/// `tᴷ·det(I − ψ(β))` is interpolated exactly and divided by `1 + t + … + tⁿ⁻¹`.
pub fn burau_alexander_poly(strands: usize, letters: &[i32]) -> Vec<BigRational> {
    if strands == 1 {
        return vec![BigRational::one()];
    }
    let negs = letters.iter().filter(|&&l| l < 0).count();
    let shift = (strands - 1) * negs;
    let deg = (strands - 1) * letters.len() + shift;
    let xs: Vec<BigRational> = (0..=deg as i64).map(|k| rat(k + 2)).collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|t| {
            let mut tk = BigRational::one();
            for _ in 0..shift {
                tk *= t;
            }
            burau_det_at(strands, letters, t) * tk
        })
        .collect();
    // Lagrange interpolation in the monomial basis
    let mut coeffs = vec![BigRational::zero(); deg + 1];
    for i in 0..=deg {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for j in 0..=deg {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * &xs[j];
            }
            basis = next;
            denom *= &xs[i] - &xs[j];
        }
        let scale = &ys[i] / denom;
        for (k, b) in basis.iter().enumerate() {
            coeffs[k] += b * &scale;
        }
    }
    // exact division by 1 + t + … + t^(n−1)
    let d = strands - 1;
    while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
        coeffs.pop();
    }
    if coeffs.iter().all(Zero::is_zero) {
        return vec![BigRational::zero()];
    }
    let mut rem = coeffs;
    let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(d).max(1)];
    for k in (d..rem.len()).rev() {
        let q = rem[k].clone();
        if q.is_zero() {
            continue;
        }
        quot[k - d] = q.clone();
        for j in 0..=d {
            rem[k - d + j] -= &q;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "Burau determinant divisible by the normalizer");
    while quot.len() > 1 && quot[0].is_zero() {
        quot.remove(0);
    }
    quot
}

pub fn eval_poly(c: &[BigRational], t: &BigRational) -> BigRational {
    c.iter().rev().fold(BigRational::zero(), |acc, v| acc * t + v)
}

// ----------------------------------------------------------- PD from scratch

/// PD tuples read straight from text.
pub fn pd_tuples(text: &str) -> Vec<[i64; 4]> {
    text.split("X[")
        .skip(1)
        .map(|chunk| {
            let body = chunk.split(']').next().unwrap();
            let v: Vec<i64> = body.split(',').map(|s| s.trim().parse().unwrap()).collect();
            [v[0], v[1], v[2], v[3]]
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct FaceData {
    /// `(crossing, corner)` pairs, corner `k` lying between slots `k` and `k+1`.
    pub corners: Vec<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct ColoringData {
    pub black: Vec<bool>,
    /// Number of type-II crossings: black at the corner between the two
    /// incoming strands.
    pub mu: usize,
    pub type_two: Vec<bool>,
    pub white: Vec<usize>,
    pub f_w: usize,
    pub f_b: usize,
}

/// Faces, colorings and Seifert circles of a connected positive diagram in
/// which every tuple is `[in_under, in_over, out_under, out_over]`.
#[derive(Clone, Debug)]
pub struct PdOracle {
    pub tuples: Vec<[i64; 4]>,
    pub faces: Vec<FaceData>,
    pub colorings: [ColoringData; 2],
    pub seifert_circles: usize,
}

impl PdOracle {
    pub fn new(text: &str) -> Self {
        let tuples = pd_tuples(text);
        let c = tuples.len();
        let mut ends: HashMap<i64, Vec<(usize, usize)>> = HashMap::new();
        for (x, t) in tuples.iter().enumerate() {
            for (k, &l) in t.iter().enumerate() {
                ends.entry(l).or_default().push((x, k));
            }
        }
        let other = |x: usize, k: usize| -> (usize, usize) {
            let e = &ends[&tuples[x][k]];
            assert_eq!(e.len(), 2, "label {} appears twice", tuples[x][k]);
            if e[0] == (x, k) {
                e[1]
            } else {
                e[0]
            }
        };
        // orientation check: the two ends of an arc are one incoming, one outgoing
        for x in 0..c {
            for k in 0..4 {
                let (y, l) = other(x, k);
                assert_ne!(k < 2, l < 2, "arc {} has ends of the same direction", tuples[x][k]);
                let _ = y;
            }
        }
        let mut face_of = vec![[usize::MAX; 4]; c];
        let mut faces = Vec::new();
        for x in 0..c {
            for k in 0..4 {
                if face_of[x][k] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut corners = Vec::new();
                let (mut cx, mut ck) = (x, k);
                while face_of[cx][ck] == usize::MAX {
                    face_of[cx][ck] = id;
                    corners.push((cx, ck));
                    let (y, l) = other(cx, (ck + 1) % 4);
                    (cx, ck) = (y, l);
                }
                assert_eq!((cx, ck), (x, k), "face walk closes");
                faces.push(FaceData { corners });
            }
        }
        assert_eq!(faces.len(), c + 2, "Euler characteristic of the sphere");
        let mut black = vec![None::<bool>; faces.len()];
        black[face_of[0][0]] = Some(true);
        let mut stack = vec![face_of[0][0]];
        while let Some(f) = stack.pop() {
            let b = black[f].unwrap();
            for &(x, k) in &faces[f].corners {
                for step in 1..4 {
                    let g = face_of[x][(k + step) % 4];
                    let want = if step == 2 { b } else { !b };
                    match black[g] {
                        None => {
                            black[g] = Some(want);
                            stack.push(g);
                        }
                        Some(h) => assert_eq!(h, want, "faces are 2-colourable"),
                    }
                }
            }
        }
        let black: Vec<bool> = black.into_iter().map(Option::unwrap).collect();
        let make = |flip: bool| {
            let bl: Vec<bool> = black.iter().map(|&b| b != flip).collect();
            let type_two: Vec<bool> = (0..c).map(|x| bl[face_of[x][0]]).collect();
            let white: Vec<usize> = (0..faces.len()).filter(|&f| !bl[f]).collect();
            ColoringData {
                mu: type_two.iter().filter(|&&t| t).count(),
                f_w: white.len(),
                f_b: faces.len() - white.len(),
                black: bl,
                type_two,
                white,
            }
        };
        let colorings = [make(false), make(true)];
        // oriented smoothing: incoming slot 0 leaves by slot 3, slot 1 by slot 2
        let mut seen = vec![[false; 4]; c];
        let mut seifert_circles = 0;
        for x in 0..c {
            for k in 0..2 {
                if seen[x][k] {
                    continue;
                }
                seifert_circles += 1;
                let (mut cx, mut ck) = (x, k);
                while !seen[cx][ck] {
                    seen[cx][ck] = true;
                    let out = if ck == 0 { 3 } else { 2 };
                    (cx, ck) = other(cx, out);
                }
            }
        }
        PdOracle { tuples, faces, colorings, seifert_circles }
    }

    pub fn c(&self) -> usize {
        self.tuples.len()
    }

    pub fn b1(&self) -> usize {
        self.c() + 1 - self.seifert_circles
    }

    fn weight(&self, col: usize, x: usize) -> i64 {
        if self.colorings[col].type_two[x] {
            -1
        } else {
            1
        }
    }

    pub fn face_crossings(&self, f: usize) -> Vec<usize> {
        self.faces[f].corners.iter().map(|&(x, _)| x).collect()
    }

    /// `(m, n)` of a white face: type-I and type-II crossings on it.
    pub fn face_type(&self, col: usize, f: usize) -> (usize, usize) {
        let xs = self.face_crossings(f);
        let n = xs.iter().filter(|&&x| self.colorings[col].type_two[x]).count();
        (xs.len() - n, n)
    }

    /// Goeritz matrix on the white faces other than `omit`.
    pub fn goeritz_matrix(&self, col: usize, omit: usize) -> Vec<Vec<i64>> {
        let faces: Vec<usize> = self.colorings[col].white.iter().copied().filter(|&f| f != omit).collect();
        self.goeritz_on(col, &faces.iter().map(|&f| self.face_crossings(f)).collect::<Vec<_>>())
    }

    /// Goeritz matrix on curves given by their crossing lists.
    pub fn goeritz_on(&self, col: usize, curves: &[Vec<usize>]) -> Vec<Vec<i64>> {
        let k = curves.len();
        let mut g = vec![vec![0i64; k]; k];
        for i in 0..k {
            g[i][i] = curves[i].iter().map(|&x| self.weight(col, x)).sum();
            for j in 0..k {
                if i != j {
                    g[i][j] = -curves[i].iter().filter(|x| curves[j].contains(x)).map(|&x| self.weight(col, x)).sum::<i64>();
                }
            }
        }
        g
    }

    pub fn largest_white_face(&self, col: usize) -> usize {
        *self.colorings[col].white.iter().max_by_key(|&&f| (self.faces[f].corners.len(), usize::MAX - f)).unwrap()
    }

    /// `sign(G) + μ` for one coloring.
    pub fn gl_signature(&self, col: usize) -> i64 {
        let g = self.goeritz_matrix(col, self.largest_white_face(col));
        descartes_signature(&g) + self.colorings[col].mu as i64
    }

    pub fn goeritz_det_abs(&self, col: usize) -> BigInt {
        let g = self.goeritz_matrix(col, self.largest_white_face(col));
        let m: RatMatrix = g.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect();
        mat_det(m).to_integer().abs()
    }
}

// --------------------------------------------------------------- randomness

/// Random positive word on at most `max_strands` strands using every generator.
pub fn random_positive_braid(rng: &mut ChaCha8Rng, max_strands: usize, max_letters: usize) -> (usize, Vec<i32>) {
    loop {
        let strands = rng.gen_range(2..=max_strands);
        let len = rng.gen_range(strands - 1..=max_letters);
        let letters: Vec<i32> = (0..len).map(|_| rng.gen_range(1..strands as i32)).collect();
        if (1..strands as i32).all(|g| letters.contains(&g)) {
            return (strands, letters);
        }
    }
}

pub fn word_text(strands: usize, letters: &[i32]) -> String {
    let body: Vec<String> = letters.iter().map(i32::to_string).collect();
    format!("{strands}: {}", body.join(" ")).trim_end().to_string()
}

// ----------------------------------------------------- certificate re-check

fn parse_rational(v: &serde_json::Value) -> BigRational {
    v.as_str().expect("rational string").parse().expect("p/q")
}

fn check(out: &mut Vec<String>, what: &str, ok: bool) {
    if !ok {
        out.push(what.to_string());
    }
}

fn holds(rel: &str, l: &BigRational, r: &BigRational) -> bool {
    match rel {
        "<=" => l <= r,
        ">=" => l >= r,
        "==" => l == r,
        ">" => l > r,
        other => panic!("unknown relation {other}"),
    }
}

/// Re-derives every line of an emitted bound report from the original and
/// reduced PD strings alone. Returns the discrepancies found.
pub fn recheck_report(report: &serde_json::Value, original_pd: &str) -> Vec<String> {
    let mut bad = Vec::new();
    let orig = PdOracle::new(original_pd);
    let reduced_pd = report["reduction"]["diagram"].as_str().expect("reduced PD");
    let red = PdOracle::new(reduced_pd);

    let sigma = orig.gl_signature(0);
    check(&mut bad, "original colorings agree", sigma == orig.gl_signature(1));
    let sigma_r = red.gl_signature(0);
    check(&mut bad, "reduced colorings agree", sigma_r == red.gl_signature(1));
    let b1 = orig.b1() as i64;
    let b1_r = red.b1() as i64;
    let c_r = red.c() as i64;
    check(&mut bad, "sigma", report["sigma"] == sigma);
    check(&mut bad, "sigma_reduced", report["sigma_reduced"] == sigma_r);
    check(&mut bad, "b1", report["b1"] == b1);

    let mut expect: Vec<(String, BigRational, &str, BigRational)> = Vec::new();
    let mut quarter = [true, true];
    let certs = report["certificates"].as_array().expect("certificates");
    check(&mut bad, "two certificates", certs.len() == 2);
    for cert in certs {
        let col = cert["coloring"].as_u64().unwrap() as usize;
        let data = &red.colorings[col];
        let census = &cert["census"];
        check(&mut bad, "mu", census["mu"] == data.mu);
        check(&mut bad, "white faces", census["white_faces"] == data.f_w);
        // generators are the white faces but one of largest size
        let gens = census["generators"].as_array().unwrap();
        let gen_crossings: Vec<Vec<usize>> = gens
            .iter()
            .map(|g| g["crossings"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as usize).collect())
            .collect();
        let mut mine: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for &f in &data.white {
            let mut xs = red.face_crossings(f);
            xs.sort_unstable();
            *mine.entry(xs).or_default() += 1;
        }
        for (g, xs) in gens.iter().zip(&gen_crossings) {
            let mut key = xs.clone();
            key.sort_unstable();
            match mine.get_mut(&key) {
                Some(k) if *k > 0 => *k -= 1,
                _ => bad.push(format!("coloring {col}: generator {xs:?} is not a white face")),
            }
            let n = xs.iter().filter(|&&x| data.type_two[x]).count();
            check(&mut bad, "generator m", g["m"] == xs.len() - n);
            check(&mut bad, "generator n", g["n"] == n);
        }
        let left: Vec<&Vec<usize>> = mine.iter().filter(|(_, &k)| k > 0).map(|(xs, _)| xs).collect();
        let max_len = data.white.iter().map(|&f| red.faces[f].corners.len()).max().unwrap_or(0);
        check(&mut bad, "exactly one white face omitted, of largest size", left.len() == 1 && left[0].len() == max_len);

        let mn: Vec<(usize, usize)> = gen_crossings
            .iter()
            .map(|xs| {
                let n = xs.iter().filter(|&&x| data.type_two[x]).count();
                (xs.len() - n, n)
            })
            .collect();
        let gamma = |m: usize, n: usize| mn.iter().filter(|&&t| t == (m, n)).count() as i64;
        let gamma_one = mn.iter().filter(|t| t.0 == 1).count() as i64;
        let heavy = mn.iter().filter(|t| t.1 > t.0 && t.1 > 2).count() as i64;
        let heavy_w: i64 = mn.iter().filter(|t| t.1 > t.0 && t.1 > 2).map(|t| t.1 as i64).sum();
        let neg = mn.iter().filter(|t| t.0 < t.1).count() as i64;
        let nonneg_idx: Vec<usize> = (0..mn.len()).filter(|&i| mn[i].0 >= mn[i].1).collect();

        let g = red.goeritz_on(col, &gen_crossings);
        let emitted: Vec<Vec<i64>> = cert["goeritz"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r.as_array().unwrap().iter().map(|v| v.as_i64().unwrap()).collect())
            .collect();
        check(&mut bad, "goeritz matrix", emitted == g);
        let sign_g = descartes_signature(&g);
        check(&mut bad, "goeritz signature", cert["goeritz_signature"] == sign_g);
        let other_omit = descartes_signature(&red.goeritz_matrix(col, red.largest_white_face(col)));
        check(&mut bad, "signature independent of the omitted face", other_omit == sign_g);

        let chosen: Vec<usize> =
            cert["independent_set"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap() as usize).collect();
        for (a, &i) in chosen.iter().enumerate() {
            check(&mut bad, "chosen generator has framing >= 0", nonneg_idx.contains(&i));
            for &j in &chosen[a + 1..] {
                check(&mut bad, "chosen generators are disjoint", !gen_crossings[i].iter().any(|x| gen_crossings[j].contains(x)));
            }
        }
        if cert["independent_set_exact"] == true && nonneg_idx.len() <= 20 {
            // brute force over subsets
            let k = nonneg_idx.len();
            let best = (0u32..1 << k)
                .filter(|mask| {
                    let pick: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| nonneg_idx[b]).collect();
                    pick.iter().enumerate().all(|(a, &i)| {
                        pick[a + 1..].iter().all(|&j| !gen_crossings[i].iter().any(|x| gen_crossings[j].contains(x)))
                    })
                })
                .map(|m| m.count_ones())
                .max()
                .unwrap_or(0);
            check(&mut bad, "independent set is maximum", best as usize == chosen.len());
        }
        let mu = data.mu as i64;
        let rank = data.f_w as i64 - 1;
        let size = chosen.len() as i64;
        let offdiag: i64 =
            chosen.iter().flat_map(|&i| chosen.iter().filter(move |&&j| j != i).map(move |&j| (i, j))).map(|(i, j)| g[i][j].abs()).sum();
        let min_diag = chosen.iter().map(|&i| g[i][i]).min().unwrap_or(0);
        let nonneg = nonneg_idx.len() as i64;
        quarter[col] = 4 * size >= nonneg;
        let f = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        let lines: Vec<(&str, BigRational, &str, BigRational)> = vec![
            ("gamma_0_1_zero", rat(gamma(0, 1)), "==", rat(0)),
            ("gamma_1_n_zero", rat(gamma_one), "==", rat(0)),
            ("gamma_0_2_half_mu", rat(gamma(0, 2)), "<=", f(mu, 2)),
            ("gamma_neg_decomposition", rat(neg), "==", rat(gamma(0, 2) + heavy)),
            ("type_two_incidence", rat(2 * gamma(0, 2) + heavy_w), "<=", rat(2 * mu)),
            ("gamma_neg_five_sixths", rat(neg), "<=", f(5 * mu, 6)),
            ("basis_rank", rat(neg + nonneg), "==", rat(rank)),
            ("independent_offdiagonal", rat(offdiag), "==", rat(0)),
            ("independent_diagonal_nonneg", rat(min_diag), ">=", rat(0)),
            ("goeritz_lower", rat(sign_g), ">=", rat(size - rank)),
            ("sigma_gordon_litherland", rat(sigma_r), "==", rat(sign_g + mu)),
            ("sigma_subspace", rat(sigma_r), ">=", rat(mu - rank + size)),
            ("quarter_fraction", rat(size), ">=", f(nonneg, 4)),
            ("chain_19_24", rat(sigma_r), ">=", f(19 * mu, 24) - f(3 * rank, 4)),
        ];
        compare_lines(&mut bad, &format!("coloring {col}"), &cert["inequalities"], &lines);
        expect.extend(lines.into_iter().map(|(n, l, r, h)| (format!("{col}:{n}"), l, r, h)));
    }
    let f = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    let mu_sum = (red.colorings[0].mu + red.colorings[1].mu) as i64;
    let face_sum = (red.colorings[0].f_w + red.colorings[1].f_w) as i64;
    let mut lines: Vec<(&str, BigRational, &str, BigRational)> = vec![
        ("mu_sum", rat(mu_sum), "==", rat(c_r)),
        ("face_sum", rat(face_sum - 2), "==", rat(c_r)),
        ("sum_chain_1_24", rat(2 * sigma_r), ">=", f(c_r, 24)),
        ("crossings_dominate_b1", rat(c_r), ">=", rat(b1_r)),
        ("b1_preserved", rat(b1_r), "==", rat(b1)),
        ("sigma_monotone", rat(sigma), ">=", rat(sigma_r)),
        ("bound_lower", rat(sigma), ">=", f(b1, 48)),
        ("bound_upper", rat(sigma), "<=", rat(b1)),
    ];
    if b1 > 0 {
        lines.push(("sigma_positive", rat(sigma), ">", rat(0)));
    }
    compare_lines(&mut bad, "report", &report["inequalities"], &lines);

    // verdict from the recomputed lines
    let chain = ["quarter_fraction", "chain_19_24", "sum_chain_1_24"];
    let quarters = quarter[0] && quarter[1];
    let mut failed = false;
    let mut degraded = !quarters;
    for (name, l, r, h) in &expect {
        let (col, line) = name.split_once(':').unwrap();
        if !holds(r, l, h) {
            if chain.contains(&line) && !quarter[col.parse::<usize>().unwrap()] {
                degraded = true;
            } else {
                failed = true;
            }
        }
    }
    for (name, l, r, h) in &lines {
        if !holds(r, l, h) {
            if chain.contains(name) && !quarters {
                degraded = true;
            } else {
                failed = true;
            }
        }
    }
    let verdict = if failed {
        "FAILED"
    } else if degraded {
        "DEGRADED"
    } else {
        "HOLDS"
    };
    check(&mut bad, "verdict", report["verdict"] == verdict);
    bad
}

fn compare_lines(
    bad: &mut Vec<String>,
    scope: &str,
    emitted: &serde_json::Value,
    mine: &[(&str, BigRational, &str, BigRational)],
) {
    let emitted = emitted.as_array().expect("inequalities");
    if emitted.len() != mine.len() {
        bad.push(format!("{scope}: {} lines emitted, {} expected", emitted.len(), mine.len()));
        return;
    }
    for (e, (name, l, rel, r)) in emitted.iter().zip(mine) {
        let ok = e["name"] == *name
            && &parse_rational(&e["lhs"]) == l
            && e["rel"] == *rel
            && &parse_rational(&e["rhs"]) == r
            && e["holds"] == holds(rel, l, r);
        if !ok {
            bad.push(format!("{scope}: line {name} differs: emitted {e}, recomputed {l} {rel} {r}"));
        }
    }
}
