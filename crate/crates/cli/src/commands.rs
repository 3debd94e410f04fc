use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use weylzeta::coxeter::{build_system, element_limit, format_word, CartanType, CoxeterSystem, ElementTable};
use weylzeta::hecke::{characters, ingest_representation, IngestedRepresentation, Representation};
use weylzeta::ring::{QPoly, Ring};
use weylzeta::rootsys::{
    alt_cyclotomic, alt_subset_product, exponent_csv, exponent_table, macdonald_cyclotomic, macdonald_series,
    ExponentRow, RootSystem,
};
use weylzeta::series::{
    alt_product_rational, finite_poincare, layer_series, poincare_affine, CyclotomicProduct, RationalFunction,
};
use weylzeta::strips::{factorization_census, verify_corollary1, FactorizationScheme};
use weylzeta::zeta::{
    geodesic_oracle, ihara_formula_check, ihara_zeta, torus_quotient_rep, verify_maintheorem2, Graph,
};
use weylzeta::Error;

use crate::args::{Command, Format, QMode, SystemArgs};
use crate::output::{read_file, CliError, Outcome};

/// Longest walk length checked by brute force in `ihara`.
const GEODESIC_ORACLE_MAX: usize = 10;
/// Length of the longest element of any rank-two finite Weyl group; tables
/// for the strip identities must contain every finite parabolic subgroup.
const PARABOLIC_BOUND: usize = 6;
/// Cap on the truncated-series cross-check in `torus`; the permutation
/// representations have dimension up to `12·k²`.
const TORUS_CHECK_ORDER: usize = 6;

pub fn dispatch(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Poincare { system, trunc } => poincare(&build(system)?, *trunc),
        Command::Alt { system } => alt(&build(system)?),
        Command::Factorize { system, trunc } => factorize(&build(system)?, *trunc),
        Command::Corollary1 { system, trunc, q, rep } => {
            let rep = rep.as_deref().map(read_file).transpose()?;
            corollary1(&build(system)?, *trunc, q, rep.as_deref())
        }
        Command::MacdonaldTable { type_tag, rank } => macdonald_table(type_tag.as_deref(), *rank),
        Command::Ihara { graph, q, trunc } => ihara(&Graph::parse(&read_file(graph)?)?, *q, *trunc),
        Command::Torus { system, scale, trunc } => torus(&build(system)?, *scale, *trunc),
    }
}

fn build(args: &SystemArgs) -> Result<CoxeterSystem, CliError> {
    Ok(build_system(&args.type_tag, args.rank)?)
}

fn cartan_type(system: &CoxeterSystem) -> Result<CartanType, CliError> {
    system.kind().cartan_type().ok_or_else(|| CliError::Usage(format!("{} is not a Cartan type", system.type_tag())))
}

/// `|W₀|`, read off the Poincaré polynomial `Π (1−u^{d})/(1−u)`.
fn finite_order(t: CartanType) -> BigInt {
    let (finite, _) = macdonald_cyclotomic(&RootSystem::new(t));
    let (mut num, mut den) = (BigInt::from(1), BigInt::from(1));
    for (&d, &e) in finite.exponents() {
        let f = BigInt::from(d).pow(e.unsigned_abs() as u32);
        if e > 0 {
            num *= f;
        } else {
            den *= f;
        }
    }
    num / den
}

/// Enumeration-based cross-checks run only when the finite Weyl group fits
/// under the element cap.
fn enumeration_feasible(t: CartanType) -> bool {
    finite_order(t) <= BigInt::from(element_limit())
}

/// Turns an element-limit failure into a skipped check.
fn optional_check(r: weylzeta::Result<bool>) -> Result<Option<bool>, CliError> {
    match r {
        Ok(b) => Ok(Some(b)),
        Err(Error::ElementLimit { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn checks_pass(checks: &Map<String, Value>) -> bool {
    checks.values().all(|v| v.as_bool() != Some(false))
}

fn checks_text(checks: &Map<String, Value>) -> String {
    let parts: Vec<String> = checks
        .iter()
        .map(|(name, v)| {
            let status = match v.as_bool() {
                Some(true) => "ok",
                Some(false) => "FAILED",
                None => "skipped",
            };
            format!("{} {status}", name.replace('_', " "))
        })
        .collect();
    format!("checks: {}", parts.join(", "))
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn rational_json(f: &RationalFunction<BigInt>) -> Value {
    json!({ "num": f.num().to_json(), "den": f.den().to_json() })
}

fn cyclotomic_json(c: &CyclotomicProduct) -> Value {
    let factors: Vec<Value> = c.exponents().iter().map(|(&d, &e)| json!({ "degree": d, "exponent": e })).collect();
    json!({ "factors": factors, "display": c.to_string() })
}

fn poincare(system: &CoxeterSystem, trunc: usize) -> Result<Outcome, CliError> {
    let t = cartan_type(system)?;
    let (finite, affine) = macdonald_series(&RootSystem::new(t));
    let mut checks = Map::new();
    let w = if system.is_affine() {
        let subset = if enumeration_feasible(t) {
            optional_check(poincare_affine(system, 0).map(|(direct, _)| direct.equals(&affine)))?
        } else {
            None
        };
        checks.insert("subset_formula".into(), json!(subset));
        let layers = optional_check(
            ElementTable::enumerate(system, trunc).map(|table| layer_series(&table) == affine.expand(trunc)),
        )?;
        checks.insert("enumeration".into(), json!(layers));
        affine
    } else {
        let direct = if enumeration_feasible(t) {
            optional_check(finite_poincare(system).map(|p| finite.as_polynomial() == Some(p)))?
        } else {
            None
        };
        checks.insert("enumeration".into(), json!(direct));
        finite
    };
    let series = w.expand(trunc);
    let shown = CyclotomicProduct::recognize(&w).map_or_else(|| w.to_string(), |c| c.to_string());
    let pass = checks_pass(&checks);
    let json = json!({
        "type": system.type_tag(),
        "affine": system.is_affine(),
        "L": trunc,
        "rational": rational_json(&w),
        "series": series.coeffs().iter().map(Ring::to_json).collect::<Vec<_>>(),
        "checks": checks,
        "pass": pass,
    });
    let text = format!(
        "{}: W(u) = {shown}\nseries through u^{trunc}: {}\n{}\n",
        system.type_tag(),
        series.to_poly(),
        checks_text(&checks)
    );
    Ok(Outcome { pass, json, text, csv: None, default_format: Format::Text })
}

fn alt(system: &CoxeterSystem) -> Result<Outcome, CliError> {
    let t = cartan_type(system)?;
    let rs = RootSystem::new(t);
    let pick = |pair: (CyclotomicProduct, CyclotomicProduct)| if system.is_affine() { pair.1 } else { pair.0 };
    let value = pick(alt_cyclotomic(&rs));
    let subset = pick(alt_subset_product(&rs)?);

    let mut checks = Map::new();
    checks.insert("subset_product".into(), json!(subset == value));
    let enumeration = if enumeration_feasible(t) {
        optional_check(
            alt_product_rational(system).map(|direct| direct.equals(&value.to_rational_function::<BigInt>())),
        )?
    } else {
        None
    };
    checks.insert("enumeration".into(), json!(enumeration));

    let inverse = value.inv();
    let pass = checks_pass(&checks);
    let json = json!({
        "type": system.type_tag(),
        "alt": cyclotomic_json(&value),
        "alt_inverse": cyclotomic_json(&inverse),
        "degrees": inverse.degrees(),
        "rational": rational_json(&value.to_rational_function()),
        "checks": checks,
        "pass": pass,
    });
    let text = format!("{}: Alt(W)(u)^-1 = {inverse}\n{}\n", system.type_tag(), checks_text(&checks));
    Ok(Outcome { pass, json, text, csv: None, default_format: Format::Text })
}

fn factorize(system: &CoxeterSystem, trunc: usize) -> Result<Outcome, CliError> {
    let table = ElementTable::enumerate(system, trunc.max(PARABOLIC_BOUND))?;
    let scheme = FactorizationScheme::for_table(&table)?;
    let report = factorization_census(&table, &scheme, trunc)?;
    let mut text = format!(
        "{}: {} through length {trunc}\n\
         length-additive: {}\ndistinct: {}\ncounts match W(u): {}\nslice counts: {:?}\n",
        report.type_tag,
        report.scheme.join(" · "),
        report.length_additive,
        report.distinct,
        report.counts_match,
        report.slice_counts,
    );
    if let Some(w) = &report.witness {
        text.push_str(&format!("witness: {} ({})\n", w.tuple.join(" · "), w.reason));
    }
    text.push_str(&format!("{}\n", verdict(report.pass)));
    let json = serde_json::to_value(&report).expect("census reports serialize");
    Ok(Outcome { pass: report.pass, json, text, csv: None, default_format: Format::Text })
}

struct Run {
    label: String,
    json: Value,
    pass: bool,
}

fn corollary_run<R: Ring>(
    table: &ElementTable,
    scheme: &FactorizationScheme,
    rep: &Representation<R>,
    label: String,
    trunc: usize,
) -> Result<Run, CliError> {
    let c = verify_corollary1(table, scheme, rep, trunc)?;
    let r = &c.report;
    let json = json!({
        "representation": label,
        "dim": r.dim,
        "strip_lengths": r.strip_lengths,
        "cross_check_order": r.cross_check_order,
        "cross_check_pass": r.cross_check_pass,
        "lhs": c.lhs.to_string(),
        "rhs": c.rhs.to_string(),
        "pass": r.pass,
    });
    Ok(Run { label, json, pass: r.pass })
}

fn corollary1(system: &CoxeterSystem, trunc: usize, q: &QMode, rep: Option<&str>) -> Result<Outcome, CliError> {
    let table = ElementTable::enumerate(system, trunc.max(PARABOLIC_BOUND))?;
    let scheme = FactorizationScheme::for_table(&table)?;
    let formal = |label: String, rho: Representation<QPoly>| -> Result<Run, CliError> {
        match q {
            QMode::Formal => corollary_run(&table, &scheme, &rho, label, trunc),
            QMode::Value(v) => corollary_run(&table, &scheme, &rho.at_q(&table, v)?, label, trunc),
        }
    };

    let mut runs = Vec::new();
    match rep {
        Some(text) => {
            let v: Value =
                serde_json::from_str(text).map_err(|e| CliError::Core(Error::Parse(format!("representation: {e}"))))?;
            match ingest_representation(&table, &v)? {
                IngestedRepresentation::QPoly(rho) => runs.push(formal("ingested".into(), rho)?),
                IngestedRepresentation::Rational(rho) => {
                    if let QMode::Value(v) = q {
                        if v != rho.q() {
                            return Err(CliError::Usage(format!(
                                "--q {v} disagrees with the representation's q = {}",
                                rho.q()
                            )));
                        }
                    }
                    runs.push(corollary_run(&table, &scheme, &rho, "ingested".into(), trunc)?);
                }
            }
        }
        None => {
            for c in characters(system) {
                let rho = Representation::validate(&table, c.matrices(), QPoly::q())?;
                runs.push(formal(c.to_string(), rho)?);
            }
        }
    }

    let pass = runs.iter().all(|r| r.pass);
    let q_json = match q {
        QMode::Formal => json!("formal"),
        QMode::Value(v) => json!(v.to_string()),
    };
    let json = json!({
        "type": system.type_tag(),
        "q": q_json,
        "L": trunc,
        "scheme": scheme.labels(),
        "runs": runs.iter().map(|r| r.json.clone()).collect::<Vec<_>>(),
        "pass": pass,
    });
    let mut text = format!("{}: det H1(rho,u) det H2(rho,u) = det Alt(W)(rho,u)\n", system.type_tag());
    for r in &runs {
        text.push_str(&format!("{} {}: {}\n", verdict(r.pass), r.label, r.json["lhs"].as_str().unwrap_or_default()));
    }
    Ok(Outcome { pass, json, text, csv: None, default_format: Format::Text })
}

fn macdonald_table(type_tag: Option<&str>, rank: Option<usize>) -> Result<Outcome, CliError> {
    let types = match (type_tag, rank) {
        (None, None) => CartanType::catalogue(8),
        (None, Some(_)) => return Err(CliError::Usage("--rank needs --type".into())),
        (Some(tag), _) => {
            let system = build_system(tag, rank)?;
            match system.kind().cartan_type() {
                Some(t) => vec![t],
                None => return Err(CliError::Usage(format!("{tag} is not a Cartan type"))),
            }
        }
    };
    let rows =
        types.into_iter().map(|t| exponent_table(&RootSystem::new(t))).collect::<Result<Vec<ExponentRow>, _>>()?;
    let csv = exponent_csv(&rows);
    let mut text = String::new();
    for r in &rows {
        let degrees: Vec<String> = r.degrees.iter().map(ToString::to_string).collect();
        text.push_str(&format!("{:<4} rank {} h {:<3} degrees {}\n", r.type_tag, r.rank, r.h, degrees.join(" ")));
    }
    let json = json!({ "rows": rows, "pass": true });
    Ok(Outcome { pass: true, json, text, csv: Some(csv), default_format: Format::Csv })
}

fn ihara(graph: &Graph, q: Option<i64>, trunc: usize) -> Result<Outcome, CliError> {
    let zeta = ihara_zeta(graph, trunc)?;
    let degrees = graph.degrees();
    let q = q.or_else(|| {
        let d = *degrees.first()?;
        (d >= 2 && degrees.iter().all(|&e| e == d)).then(|| d as i64 - 1)
    });
    let formula = q.map(|q| ihara_formula_check(graph, q)).transpose()?;

    let n_max = trunc.min(GEODESIC_ORACLE_MAX);
    let oracle = geodesic_oracle(graph, n_max);
    let traces: Vec<u64> = zeta.traces()[..n_max].iter().map(|t| u64::try_from(t).unwrap_or(u64::MAX)).collect();
    let oracle_pass = traces == oracle;
    let log_pass = zeta.log_identity_holds()?;
    let formula_pass = formula.as_ref().is_none_or(|f| f.pass);
    let pass = oracle_pass && log_pass && formula_pass;

    let json = json!({
        "vertices": graph.vertices(),
        "edges": graph.edges().len(),
        "chi": graph.euler_characteristic(),
        "zeta": zeta.to_json(),
        "formula": formula,
        "geodesic_oracle": { "n_max": n_max, "counts": oracle, "pass": oracle_pass },
        "log_identity": log_pass,
        "pass": pass,
    });
    let mut text = format!(
        "graph: {} vertices, {} edges, chi = {}\nZ(u)^-1 = {}\nN_n = {}\n",
        graph.vertices(),
        graph.edges().len(),
        graph.euler_characteristic(),
        zeta.inverse_poly(),
        zeta.traces().iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
    );
    match &formula {
        Some(f) => text.push_str(&format!(
            "formula (q = {}): det(I - Bu) = (1-u^2)^(-chi) det(I - Au + qu^2): {}\n",
            f.q,
            verdict(f.pass)
        )),
        None => text.push_str("formula: skipped (graph is not regular)\n"),
    }
    text.push_str(&format!(
        "tr(B^n) = closed geodesics for n <= {n_max}: {}\n{}\n",
        verdict(oracle_pass),
        verdict(pass)
    ));
    Ok(Outcome { pass, json, text, csv: None, default_format: Format::Text })
}

fn torus(system: &CoxeterSystem, scale: usize, trunc: usize) -> Result<Outcome, CliError> {
    let check = trunc.min(TORUS_CHECK_ORDER);
    let table = ElementTable::enumerate(system, PARABOLIC_BOUND)?;
    let (tq, rho) = torus_quotient_rep(&table, scale)?;
    let report = verify_maintheorem2(&table, &tq, &rho, check, trunc)?;
    let mut text = format!(
        "{}: torus quotient k = {}, {} chambers\n\
         det Alt(W)(pi,u) = Z_w1(u^{}) Z_w2(u^{}): {}\n",
        report.type_tag,
        report.scale,
        report.chambers,
        report.strip_lengths[0],
        report.strip_lengths[1],
        verdict(report.zeta_pass && report.corollary_pass),
    );
    for s in &report.strips {
        text.push_str(&format!("strip {}: tr(A^n) = {:?} {}\n", format_word(&s.word), s.traces, verdict(s.pass)));
    }
    text.push_str(&format!("{}\n", verdict(report.pass)));
    let json = serde_json::to_value(&report).expect("torus reports serialize");
    Ok(Outcome { pass: report.pass, json, text, csv: None, default_format: Format::Text })
}
