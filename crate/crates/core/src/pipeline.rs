//! Code specification documents and the end-to-end analysis that turns one
//! into a report.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{FieldElem, FieldSpec};
use crate::mat::{hull_dim, Mat};
use crate::poly::{parse_compact, render_compact, Poly, RingPoly};
use crate::qcc::{ExtendedCode, ExtensionKind, ExtensionRule, QcCode, DEFAULT_SCAN_BUDGET};
use crate::quantum::{self, EaSource, EaqeccParams, GvVerdict, QeccParams, QeccSource};
use crate::wdist::{self, EnumOptions, WeightEnumerator};

pub const SCHEMA: u32 = 1;

/// Enumeration work (messages × length) above which a run counts as long.
pub const LONG_RUN_COST: u128 = 1 << 35;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    #[default]
    Base,
    ExtendOne,
    ExtendTwo,
}

/// A polynomial or vector written either in compact notation or as a list
/// of digits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeffs {
    Text(String),
    Digits(Vec<u32>),
}

impl Coeffs {
    fn parse(&self, field: &FieldSpec, max_len: usize) -> Result<Vec<FieldElem>> {
        match self {
            Coeffs::Text(s) => parse_compact(s, field, max_len),
            Coeffs::Digits(ds) => {
                if ds.len() > max_len {
                    return Err(Error::TooLong { len: ds.len(), max: max_len });
                }
                ds.iter().map(|&d| field.elem(d)).collect()
            }
        }
    }
}

impl From<&str> for Coeffs {
    fn from(s: &str) -> Self {
        Coeffs::Text(s.to_string())
    }
}

fn default_schema() -> u32 {
    SCHEMA
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpec {
    #[serde(default = "default_schema")]
    pub schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Base field size; codes live over GF(q²).
    pub q: u32,
    pub n: usize,
    pub f: Coeffs,
    pub g: Coeffs,
    #[serde(default)]
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<ExtensionKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x1: Option<Coeffs>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x2: Option<Coeffs>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha1: Option<Coeffs>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha2: Option<Coeffs>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub enum_budget: Option<u64>,
}

impl CodeSpec {
    pub fn base(q: u32, n: usize, f: &str, g: &str) -> CodeSpec {
        CodeSpec {
            schema: SCHEMA,
            name: None,
            q,
            n,
            f: f.into(),
            g: g.into(),
            mode: Mode::Base,
            kind: None,
            x1: None,
            x2: None,
            alpha1: None,
            alpha2: None,
            enum_budget: None,
        }
    }

    pub fn from_json(text: &str) -> Result<CodeSpec> {
        let spec: CodeSpec = serde_json::from_str(text).map_err(|e| Error::Spec(e.to_string()))?;
        if spec.schema != SCHEMA {
            return Err(Error::Spec(format!("unsupported schema {}, expected {SCHEMA}", spec.schema)));
        }
        Ok(spec)
    }

    /// Parses the field and polynomials and builds the base code.
    pub fn build(&self) -> Result<QcCode> {
        let field = FieldSpec::new(self.q)?;
        if self.n == 0 {
            return Err(Error::Spec("n must be positive".into()));
        }
        let f = RingPoly::from_coeffs(&field, self.n, self.f.parse(&field, self.n)?)?;
        let g = Poly::from_coeffs(&field, self.g.parse(&field, self.n + 1)?);
        QcCode::build(&field, self.n, &f, &g)
    }

    fn extension_kind(&self) -> ExtensionKind {
        self.kind.unwrap_or(ExtensionKind::SelfOrthogonal)
    }

    fn columns(&self) -> usize {
        match self.mode {
            Mode::Base => 0,
            Mode::ExtendOne => 1,
            Mode::ExtendTwo => 2,
        }
    }
}

/// Controls for [`analyze`].
#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    /// Cap on enumerated messages per code, unless the `CodeSpec` sets its own.
    pub budget: u128,
    /// Permit runs whose cost exceeds [`LONG_RUN_COST`] and lift the
    /// message budget.
    pub allow_long: bool,
    /// When false, codes beyond budget are reported without distances
    /// instead of failing.
    pub require_distances: bool,
    pub parallel: bool,
    /// Messages scanned when searching for an extension vector.
    pub scan_budget: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            budget: wdist::DEFAULT_BUDGET,
            allow_long: false,
            require_distances: true,
            parallel: true,
            scan_budget: DEFAULT_SCAN_BUDGET,
        }
    }
}

/// Enumeration cost of a `[len, k]` code over `field`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cost {
    #[serde(serialize_with = "decimal")]
    pub messages: BigUint,
    pub length: usize,
    pub long_run: bool,
}

fn decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn cost(field: &FieldSpec, length: usize, k: usize) -> Cost {
    let messages = wdist::message_count(field, k);
    let long_run = &messages * BigUint::from(length) > BigUint::from(LONG_RUN_COST);
    Cost { messages, length, long_run }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classical {
    pub length: usize,
    pub dimension: usize,
    /// `[n,k,d]_Q`, with `d` shown as `?` when not computed.
    pub params: String,
    pub dual_params: String,
    pub d: Option<usize>,
    pub d_dual: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub enumerator: Option<WeightEnumerator>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_enumerator: Option<WeightEnumerator>,
    pub cost: Cost,
}

fn classical_params(len: usize, k: usize, d: Option<usize>, order: u32) -> String {
    match d {
        Some(d) => format!("[{len},{k},{d}]_{order}"),
        None => format!("[{len},{k},?]_{order}"),
    }
}

fn classical(g: &Mat, opts: &RunOptions, budget: u128) -> Result<Classical> {
    let field = g.field();
    let (len, k) = (g.cols(), g.rows());
    let order = field.order();
    let cost = cost(field, len, k);
    let gated = cost.long_run && !opts.allow_long;
    let budget = if opts.allow_long { u128::MAX } else { budget };
    let outcome = if gated {
        Err(Error::BudgetExceeded { required: cost.messages.clone(), budget: budget.min(LONG_RUN_COST / len as u128) })
    } else {
        wdist::enumerate(g, EnumOptions { budget, parallel: opts.parallel })
    };
    let (enumerator, dual_enumerator) = match outcome {
        Ok(w) => {
            let dual = wdist::macwilliams(&w, k, order as u64)?;
            (Some(w), Some(dual))
        }
        Err(e @ Error::BudgetExceeded { .. }) if opts.require_distances => return Err(e),
        Err(Error::BudgetExceeded { .. }) => (None, None),
        Err(e) => return Err(e),
    };
    let d = enumerator.as_ref().and_then(|w| w.min_distance().ok());
    let d_dual = dual_enumerator.as_ref().and_then(|w| w.min_distance().ok());
    Ok(Classical {
        length: len,
        dimension: k,
        params: classical_params(len, k, d, order),
        dual_params: classical_params(len, len - k, d_dual, order),
        d,
        d_dual,
        enumerator,
        dual_enumerator,
        cost,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeInfo {
    pub field: String,
    pub n: usize,
    pub deg_g: usize,
    pub f_coprime: bool,
    pub g: String,
    pub dual_generator: String,
    /// `f̄^q` in compact form; `H2` is the circulant of its negation.
    pub f_bar_q: String,
    pub self_orthogonal_gram: bool,
    pub self_orthogonal_divisibility: bool,
    pub hull_dim: usize,
    pub psi_closed: bool,
    pub hh_rank: usize,
    pub gg_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entanglement {
    pub h1h1_nonsingular: bool,
    pub one_not_eigenvalue: bool,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub char_poly: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppendedRow {
    pub side: u8,
    pub x: String,
    pub alpha: String,
    pub self_product: String,
    /// The vector was found by search rather than supplied.
    pub searched: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extension {
    pub kind: ExtensionKind,
    pub rows: Vec<AppendedRow>,
    pub gram_rank: usize,
    pub classical: Classical,
}

/// Parameters promised by the construction formulas, checked against the
/// computed ones and available without enumeration.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Bookkeeping {
    /// `(length, dimension)` of QECCs.
    pub qecc: Vec<(usize, usize)>,
    /// `(length, dimension, c)` of EAQECCs.
    pub eaqecc: Vec<(usize, usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuantumEntry<P> {
    pub display: String,
    #[serde(flatten)]
    pub params: P,
}

impl<P: std::fmt::Display> QuantumEntry<P> {
    fn new(params: P) -> Self {
        QuantumEntry { display: params.to_string(), params }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GvEntry {
    pub code: String,
    pub verdict: String,
    #[serde(flatten)]
    pub gv: GvVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub spec: CodeSpec,
    pub code: CodeInfo,
    pub base: Classical,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entanglement: Option<Entanglement>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extension: Option<Extension>,
    pub qecc: Vec<QuantumEntry<QeccParams>>,
    pub eaqecc: Vec<QuantumEntry<EaqeccParams>>,
    pub gv: Vec<GvEntry>,
    pub bookkeeping: Bookkeeping,
    pub timing_ms: u128,
}

impl Report {
    /// Every parameter string the report displays, classical and quantum.
    pub fn displayed(&self) -> Vec<String> {
        let mut out = vec![self.base.params.clone(), self.base.dual_params.clone()];
        if let Some(ext) = &self.extension {
            out.push(ext.classical.params.clone());
            out.push(ext.classical.dual_params.clone());
        }
        out.extend(self.qecc.iter().map(|e| e.display.clone()));
        out.extend(self.eaqecc.iter().map(|e| e.display.clone()));
        out
    }

    /// Report with the timing field zeroed, for reproducibility checks.
    pub fn without_timing(&self) -> Report {
        Report { timing_ms: 0, ..self.clone() }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.code;
        let title = self.spec.name.as_deref().unwrap_or("code");
        out.push_str(&format!("{title}: QC code over {} with n = {}, deg g = {}\n", c.field, c.n, c.deg_g));
        out.push_str(&format!("  g^perp_q = {}\n", c.dual_generator));
        out.push_str(&format!(
            "  self-orthogonal: {} (g^perp_q | g: {}), hull dim {}, psi-closed: {}\n",
            c.self_orthogonal_gram, c.self_orthogonal_divisibility, c.hull_dim, c.psi_closed
        ));
        out.push_str(&format!("  rank(HH†) = {}, rank(GG†) = {}\n", c.hh_rank, c.gg_rank));
        push_classical(&mut out, "base", &self.base);
        if let Some(e) = &self.entanglement {
            out.push_str(&format!(
                "  H1H1† nonsingular: {}, 1 not an eigenvalue of P: {}\n",
                e.h1h1_nonsingular, e.one_not_eigenvalue
            ));
            if let Some(cp) = &e.char_poly {
                out.push_str(&format!("  char poly of P: {cp}\n"));
            }
        }
        if let Some(ext) = &self.extension {
            for r in &ext.rows {
                out.push_str(&format!(
                    "  x{} = {} (alpha {}, <x,x> = {}{})\n",
                    r.side,
                    r.x,
                    r.alpha,
                    r.self_product,
                    if r.searched { ", found by search" } else { "" }
                ));
            }
            out.push_str(&format!("  extension gram rank {}\n", ext.gram_rank));
            push_classical(&mut out, "extended", &ext.classical);
        }
        for q in &self.qecc {
            out.push_str(&format!("  QECC {}\n", q.display));
        }
        for q in &self.eaqecc {
            out.push_str(&format!("  EAQECC {}{}\n", q.display, if q.params.maximal { " (maximal)" } else { "" }));
        }
        for g in &self.gv {
            out.push_str(&format!("  {}: {}\n", g.code, g.verdict));
        }
        let promised: Vec<String> = (self.bookkeeping.qecc.iter().map(|(n, k)| format!("[[{n},{k}]]")))
            .chain(self.bookkeeping.eaqecc.iter().map(|(n, k, c)| format!("[[{n},{k};{c}]]")))
            .collect();
        if !promised.is_empty() {
            out.push_str(&format!("  dimensions by construction: {}\n", promised.join(", ")));
        }
        out.push_str(&format!("  time {} ms\n", self.timing_ms));
        out
    }
}

fn push_classical(out: &mut String, label: &str, c: &Classical) {
    out.push_str(&format!("  {label} code {}, dual {}\n", c.params, c.dual_params));
    match &c.enumerator {
        Some(w) => out.push_str(&format!("    weights: {w}\n")),
        None => out.push_str(&format!(
            "    not enumerated: {} messages x length {}{}\n",
            c.cost.messages,
            c.cost.length,
            if c.cost.long_run { " (long run, needs --allow-long)" } else { "" }
        )),
    }
    if let Some(w) = &c.dual_enumerator {
        out.push_str(&format!("    dual weights: {w}\n"));
    }
}

fn element(field: &FieldSpec, c: Option<&Coeffs>) -> Result<FieldElem> {
    match c {
        None => Ok(FieldElem::ONE),
        Some(c) => {
            let v = c.parse(field, 1)?;
            v.first().copied().ok_or_else(|| Error::Spec("empty field element".into()))
        }
    }
}

fn vector(field: &FieldSpec, c: &Coeffs, n: usize) -> Result<Vec<FieldElem>> {
    let mut v = c.parse(field, n)?;
    v.resize(n, FieldElem::ZERO);
    Ok(v)
}

fn extension_rows(code: &QcCode, spec: &CodeSpec, opts: &RunOptions) -> Result<(Vec<(Vec<FieldElem>, FieldElem)>, Vec<bool>)> {
    let field = code.field();
    let kind = spec.extension_kind();
    let supplied = [&spec.x1, &spec.x2];
    let alphas = [&spec.alpha1, &spec.alpha2];
    let mut rows = Vec::new();
    let mut searched = Vec::new();
    for i in 0..spec.columns() {
        let alpha = element(field, alphas[i].as_ref())?;
        let rule = match kind {
            ExtensionKind::SelfOrthogonal => ExtensionRule::SelfOrthogonal,
            ExtensionKind::Entangled => ExtensionRule::Entangled { alpha },
        };
        let x = match supplied[i] {
            Some(c) => vector(field, c, code.n())?,
            None => code.find_extension_vector(i as u8 + 1, rule, opts.scan_budget)?,
        };
        searched.push(supplied[i].is_none());
        rows.push((x, alpha));
    }
    Ok((rows, searched))
}

fn gv_entry(p: &QeccParams) -> GvEntry {
    let gv = quantum::gv_bound(p.n, p.k, p.d, p.q);
    GvEntry { code: p.to_string(), verdict: gv.to_string(), gv }
}

fn push_qecc(report: &mut Report, p: QeccParams) {
    report.gv.push(gv_entry(&p));
    let lengthened = quantum::lengthen(&p);
    report.qecc.push(QuantumEntry::new(p));
    report.qecc.push(QuantumEntry::new(lengthened));
}

fn consistent<T: PartialEq + std::fmt::Debug>(what: &str, promised: T, got: T) -> Result<()> {
    if promised != got {
        return Err(Error::Inconsistent(format!("{what}: formula gives {promised:?}, computed {got:?}")));
    }
    Ok(())
}

/// Milliseconds since the call; always zero on wasm32, which has no clock.
pub(crate) fn stopwatch() -> impl Fn() -> u128 {
    #[cfg(not(target_arch = "wasm32"))]
    {
        let start = std::time::Instant::now();
        move || start.elapsed().as_millis()
    }
    #[cfg(target_arch = "wasm32")]
    {
        || 0
    }
}

/// Runs every construction applicable to a `CodeSpec`.
pub fn analyze(spec: &CodeSpec, opts: &RunOptions) -> Result<Report> {
    let elapsed = stopwatch();
    let code = spec.build()?;
    let field = code.field().clone();
    let q = field.q();
    let order = field.order();
    let n = code.n();
    let deg_g = code.deg_g();
    let budget = spec.enum_budget.map_or(opts.budget, u128::from);

    let g = code.generator();
    let h = code.parity_check();
    let gg_rank = g.gram().rank();
    let hh_rank = h.gram().rank();
    let (l, k) = (code.length(), code.dimension());
    quantum::check_gram_identity(l, k, hh_rank, gg_rank)?;
    let so = code.self_orthogonality();
    let info = CodeInfo {
        field: format!("GF({order})"),
        n,
        deg_g,
        f_coprime: code.f_coprime(),
        g: code.g().render(),
        dual_generator: code.dual_generator().render(),
        f_bar_q: code.f().bar().frob().render_compact(),
        self_orthogonal_gram: so.by_gram,
        self_orthogonal_divisibility: so.by_divisibility,
        hull_dim: hull_dim(&g)?,
        psi_closed: code.psi_closed(),
        hh_rank,
        gg_rank,
    };
    let conditions = if code.f_coprime() { Some(code.entanglement_conditions()?) } else { None };
    let entanglement = conditions.as_ref().map(|c| Entanglement {
        h1h1_nonsingular: c.h1h1_nonsingular,
        one_not_eigenvalue: c.one_not_eigenvalue,
        holds: c.holds(),
        char_poly: c.char_poly.as_ref().map(Poly::render),
    });
    let holds = conditions.as_ref().is_some_and(|c| c.holds());

    let extension = match spec.mode {
        Mode::Base => None,
        _ => {
            let (rows, searched) = extension_rows(&code, spec, opts)?;
            Some((code.extend(spec.extension_kind(), &rows)?, searched))
        }
    };

    let mut report = Report {
        schema: SCHEMA,
        spec: spec.clone(),
        code: info,
        base: classical(&g, opts, budget)?,
        entanglement,
        extension: None,
        qecc: Vec::new(),
        eaqecc: Vec::new(),
        gv: Vec::new(),
        bookkeeping: Bookkeeping::default(),
        timing_ms: 0,
    };

    // base code
    if so.by_gram && 2 * k < l {
        report.bookkeeping.qecc.push((l, l - 2 * k));
        if let (Some(w), Some(dual)) = (&report.base.enumerator, &report.base.dual_enumerator) {
            let d = wdist::impure_distance(w, dual)?;
            let p = quantum::qecc_from_self_orthogonal(l, k, d, dual.min_distance()?, q, QeccSource::SelfOrthogonal)?;
            push_qecc(&mut report, p);
        }
    }
    let pair = if holds {
        let promised = quantum::qc_pair_dims(n, deg_g);
        consistent("primal EAQECC", promised[0], (l, 2 * k + hh_rank - l, hh_rank))?;
        consistent("dual EAQECC", promised[1], (l, l - 2 * k + gg_rank, gg_rank))?;
        [EaSource::QcPrimal, EaSource::QcDual]
    } else {
        [EaSource::ParityGram, EaSource::ParityGram]
    };
    let sides = [(k, hh_rank, report.base.d, pair[0]), (l - k, gg_rank, report.base.d_dual, pair[1])];
    for (dim, c, d, source) in sides {
        // k = 0 carries nothing and c = 0 is the stabilizer code above
        if 2 * dim + c <= l || c == 0 {
            continue;
        }
        report.bookkeeping.eaqecc.push((l, 2 * dim + c - l, c));
        if let Some(d) = d {
            let p = quantum::eaqecc_from_parity(l, dim, d, c, q, source)?;
            report.eaqecc.push(QuantumEntry::new(p));
        }
    }

    if let Some((ext, searched)) = extension {
        report.extension = Some(analyze_extension(&ext, &searched, opts, budget, &mut report)?);
    }
    report.timing_ms = elapsed();
    Ok(report)
}

fn analyze_extension(
    ext: &ExtendedCode,
    searched: &[bool],
    opts: &RunOptions,
    budget: u128,
    report: &mut Report,
) -> Result<Extension> {
    let base = ext.base();
    let field = base.field();
    let q = field.q();
    let (n, deg_g) = (base.n(), base.deg_g());
    let r = ext.columns_added();
    let (l, k) = (ext.length(), ext.dimension());
    let classical = classical(ext.generator(), opts, budget)?;
    let rows = ext
        .appended()
        .iter()
        .zip(searched)
        .enumerate()
        .map(|(i, ((x, alpha), &searched))| AppendedRow {
            side: i as u8 + 1,
            x: render_compact(x),
            alpha: render_compact(&[*alpha]),
            self_product: render_compact(&[field.hermitian_dot(x, x)]),
            searched,
        })
        .collect();
    match ext.kind() {
        ExtensionKind::SelfOrthogonal => {
            let source = if r == 1 { QeccSource::ExtendedOneColumn } else { QeccSource::ExtendedTwoColumn };
            let promised = quantum::extended_qecc_dims(n, deg_g)[r - 1];
            consistent("extended QECC", promised, (l, l - 2 * k))?;
            report.bookkeeping.qecc.push(promised);
            if let (Some(w), Some(dual)) = (&classical.enumerator, &classical.dual_enumerator) {
                let d = wdist::impure_distance(w, dual)?;
                let p = quantum::qecc_from_self_orthogonal(l, k, d, dual.min_distance()?, q, source)?;
                push_qecc(report, p);
            }
        }
        ExtensionKind::Entangled => {
            let source = if r == 1 { EaSource::ExtendedOneColumn } else { EaSource::ExtendedTwoColumn };
            let c = ext.gram_rank();
            let promised = quantum::extended_ea_dims(n, deg_g, r);
            // the dual of C' has dimension l - k and parity check G'
            consistent("extended EAQECC", promised, (l, 2 * (l - k) + c - l, c))?;
            report.bookkeeping.eaqecc.push(promised);
            if let Some(d) = classical.d_dual {
                let p = quantum::eaqecc_from_parity(l, l - k, d, c, q, source)?;
                report.eaqecc.push(QuantumEntry::new(p));
            }
        }
    }
    Ok(Extension { kind: ext.kind(), rows, gram_rank: ext.gram_rank(), classical })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_round_trip() {
        let text = r#"{"q":2,"n":7,"f":"032321","g":[1,1],"mode":"base"}"#;
        let spec = CodeSpec::from_json(text).unwrap();
        assert_eq!(spec.schema, 1);
        assert_eq!(spec.g, Coeffs::Digits(vec![1, 1]));
        let again = CodeSpec::from_json(&serde_json::to_string(&spec).unwrap()).unwrap();
        assert_eq!(spec, again);
        assert!(CodeSpec::from_json(r#"{"q":2,"n":7,"f":"1","g":"1","bogus":1}"#).is_err());
        assert!(CodeSpec::from_json(r#"{"schema":2,"q":2,"n":7,"f":"1","g":"1"}"#).is_err());
    }

    #[test]
    fn base_report_is_reproducible() {
        let spec = CodeSpec::base(2, 7, "032321", "11");
        let a = analyze(&spec, &RunOptions::default()).unwrap();
        let b = analyze(&spec, &RunOptions::default()).unwrap();
        assert_eq!(
            serde_json::to_string(&a.without_timing()).unwrap(),
            serde_json::to_string(&b.without_timing()).unwrap()
        );
        assert!(a.displayed().contains(&"[[14,6,7;8]]_2".to_string()));
        assert_eq!(a.entanglement.unwrap().char_poly.as_deref(), Some("x^7+x^4+x"));
    }

    #[test]
    fn budget_handling() {
        let mut spec = CodeSpec::base(2, 7, "032321", "11");
        spec.enum_budget = Some(100);
        let strict = analyze(&spec, &RunOptions::default());
        assert!(matches!(strict, Err(Error::BudgetExceeded { .. })));
        let lenient = analyze(&spec, &RunOptions { require_distances: false, ..Default::default() }).unwrap();
        assert!(lenient.base.enumerator.is_none());
        assert!(lenient.eaqecc.is_empty());
        assert_eq!(lenient.bookkeeping.eaqecc[0], (14, 6, 8));
        assert_eq!(lenient.base.params, "[14,6,?]_4");
    }

    #[test]
    fn long_run_gate() {
        let f4 = FieldSpec::new(2).unwrap();
        let f9 = FieldSpec::new(3).unwrap();
        assert!(!cost(&f4, 127, 13).long_run);
        assert!(cost(&f4, 59, 15).long_run);
        assert!(!cost(&f9, 71, 9).long_run);
        assert!(cost(&f9, 21, 10).long_run);
        let f81 = FieldSpec::new(9).unwrap();
        assert!(cost(&f81, 22, 5).long_run);
    }

    #[test]
    fn element_tokens() {
        let f = FieldSpec::new(9).unwrap();
        assert_eq!(element(&f, Some(&"z^40".into())).unwrap(), f.from_int(-1));
        assert_eq!(element(&f, None).unwrap(), FieldElem::ONE);
        let f4 = FieldSpec::new(2).unwrap();
        assert_eq!(vector(&f4, &"(13)^2".into(), 7).unwrap().len(), 7);
        assert!(vector(&f4, &"1^8".into(), 7).is_err());
    }
}
