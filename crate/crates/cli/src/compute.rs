use knotcert::braid::{alexander_of, split_blocks, split_seifert_matrix, BraidWord};
use knotcert::catalogue::{Expected, LoadedLink};
use knotcert::checkerboard::{colorings, goeritz, positive_signature, CheckerboardData};
use knotcert::diagram::LinkDiagram;
use knotcert::matrix::IntMatrix;
use knotcert::poly::IntPolynomial;
use knotcert::quadform::{
    conway_from_seifert, jump_points, levine_tristram_many, seifert_signature, signature_symmetric, JumpPoint,
    UnitCirclePoint,
};
use serde::Serialize;

#[derive(Serialize)]
pub struct ColoringReport {
    pub index: u8,
    pub f_w: usize,
    pub f_b: usize,
    pub mu: usize,
    pub omitted_face: Option<usize>,
    pub goeritz: Option<IntMatrix>,
    pub goeritz_signature: Option<i64>,
    pub determinant: Option<String>,
}

#[derive(Serialize)]
pub struct LtValue {
    pub omega: UnitCirclePoint,
    pub signature: i64,
    pub nullity: usize,
}

#[derive(Serialize)]
pub struct BraidReport {
    pub word: BraidWord,
    pub split_blocks: usize,
    pub seifert_matrix: IntMatrix,
    pub seifert_signature: i64,
    pub alexander: IntPolynomial,
    pub alexander_text: String,
    pub conway: Option<IntPolynomial>,
    pub determinant: String,
    pub levine_tristram: Vec<LtValue>,
    pub jump_points: Option<Vec<JumpPoint>>,
}

#[derive(Serialize)]
pub struct ComputeReport {
    pub name: String,
    pub pd: String,
    pub components: usize,
    pub positive: bool,
    pub split: bool,
    pub reduced: bool,
    pub c: usize,
    pub s: usize,
    pub b1: usize,
    pub colorings: Vec<ColoringReport>,
    pub sigma: Option<i64>,
    pub notes: Vec<String>,
    pub braid: Option<BraidReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_expected: Option<bool>,
}

fn coloring_report(d: &LinkDiagram, cb: &CheckerboardData, notes: &mut Vec<String>) -> ColoringReport {
    let mut r = ColoringReport {
        index: cb.index,
        f_w: cb.white_count,
        f_b: cb.black_count,
        mu: cb.mu,
        omitted_face: None,
        goeritz: None,
        goeritz_signature: None,
        determinant: None,
    };
    match goeritz(d, cb) {
        Ok(g) => {
            r.omitted_face = g.omitted_face;
            r.determinant = Some(g.matrix.det().magnitude().to_string());
            match signature_symmetric(&g.matrix) {
                Ok(t) => r.goeritz_signature = Some(t.signature()),
                Err(e) => notes.push(format!("coloring {}: {e}", cb.index)),
            }
            r.goeritz = Some(g.matrix);
        }
        Err(e) => {
            let msg = format!("coloring {}: {e}", cb.index);
            if !notes.contains(&msg) {
                notes.push(msg);
            }
        }
    }
    r
}

fn braid_report(beta: &BraidWord, omegas: &[UnitCirclePoint], notes: &mut Vec<String>) -> Option<BraidReport> {
    let a = match split_seifert_matrix(beta) {
        Ok(a) => a,
        Err(e) => {
            notes.push(format!("braid: {e}"));
            return None;
        }
    };
    let blocks = split_blocks(beta).len();
    // a split link has vanishing Alexander polynomial
    let alexander = if blocks > 1 { IntPolynomial::zero() } else { alexander_of(&a) };
    let conway = if blocks > 1 {
        Some(IntPolynomial::zero())
    } else {
        conway_from_seifert(&a).map_err(|e| notes.push(format!("conway: {e}"))).ok()
    };
    let determinant = if blocks > 1 { "0".to_string() } else { a.symmetrize().det().magnitude().to_string() };
    let seifert_sig = match seifert_signature(&a) {
        Ok(t) => t.signature(),
        Err(e) => {
            notes.push(format!("seifert signature: {e}"));
            return None;
        }
    };
    let levine_tristram = match levine_tristram_many(&a, omegas) {
        Ok(ts) => omegas
            .iter()
            .zip(ts)
            .map(|(w, t)| LtValue { omega: *w, signature: t.signature(), nullity: t.nullity })
            .collect(),
        Err(e) => {
            notes.push(format!("levine-tristram: {e}"));
            Vec::new()
        }
    };
    let jumps = if blocks > 1 || a.dim() == 0 { None } else { jump_points(&a).ok() };
    Some(BraidReport {
        word: beta.clone(),
        split_blocks: blocks,
        alexander_text: alexander.render("t"),
        seifert_signature: seifert_sig,
        seifert_matrix: a,
        alexander,
        conway,
        determinant,
        levine_tristram,
        jump_points: jumps,
    })
}

pub fn compute(link: &LoadedLink, omegas: &[UnitCirclePoint]) -> ComputeReport {
    let d = &link.diagram;
    let stats = d.stats();
    let mut notes = Vec::new();
    let mut reports = Vec::new();
    if d.is_split() {
        notes.push("diagram is split: faces and colorings are per piece and not reported".into());
    } else {
        match colorings(d) {
            Ok((a, b)) => {
                reports.push(coloring_report(d, &a, &mut notes));
                reports.push(coloring_report(d, &b, &mut notes));
            }
            Err(e) => notes.push(format!("colorings: {e}")),
        }
    }
    let sigma = if d.is_positive() {
        positive_signature(d).map_err(|e| notes.push(format!("signature: {e}"))).ok()
    } else {
        notes.push("diagram has a negative crossing: no Gordon-Litherland signature".into());
        None
    };
    let braid = link.braid.as_ref().and_then(|b| braid_report(b, omegas, &mut notes));
    let sigma = sigma.or_else(|| braid.as_ref().map(|b| b.seifert_signature));
    let has_expected = link.expected.signature.is_some() || link.expected.b1.is_some();
    let matches_expected = has_expected.then(|| {
        link.expected.signature.map_or(true, |e| sigma == Some(e)) && link.expected.b1.map_or(true, |e| e == stats.b1)
    });
    ComputeReport {
        name: link.name.clone(),
        pd: d.to_pd(),
        components: d.component_count(),
        positive: d.is_positive(),
        split: d.is_split(),
        reduced: stats.reduced,
        c: stats.c,
        s: stats.s,
        b1: stats.b1,
        colorings: reports,
        sigma,
        notes,
        braid,
        expected: has_expected.then(|| link.expected.clone()),
        matches_expected,
    }
}

pub fn render_text(r: &ComputeReport) -> String {
    let mut out = format!(
        "{}: c={} s={} b1={} components={} positive={} reduced={} sigma={}",
        r.name,
        r.c,
        r.s,
        r.b1,
        r.components,
        r.positive,
        r.reduced,
        r.sigma.map_or("-".to_string(), |s| s.to_string())
    );
    for c in &r.colorings {
        out.push_str(&format!(
            "\n  coloring {}: f_w={} f_b={} mu={} goeritz={} sign={}",
            c.index,
            c.f_w,
            c.f_b,
            c.mu,
            c.goeritz.as_ref().map_or("-".to_string(), |g| format!("{g:?}")),
            c.goeritz_signature.map_or("-".to_string(), |s| s.to_string())
        ));
    }
    if let Some(b) = &r.braid {
        out.push_str(&format!(
            "\n  braid {}: seifert={:?} alexander={} det={}",
            b.word, b.seifert_matrix, b.alexander_text, b.determinant
        ));
        for v in &b.levine_tristram {
            out.push_str(&format!("\n  sigma at {} = {} (nullity {})", v.omega, v.signature, v.nullity));
        }
    }
    for n in &r.notes {
        out.push_str(&format!("\n  note: {n}"));
    }
    if r.matches_expected == Some(false) {
        out.push_str("\n  MISMATCH with expected values");
    }
    out
}
