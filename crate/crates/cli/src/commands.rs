use std::path::Path;

use serde_json::{json, Value};

use rigidph::io::{read_filtration_file, write_filtration};
use rigidph::rational::parse_rational;
use rigidph::rigidity::{bar_representative, domain_upper};
use rigidph::{
    bar_rigidity_check, barcode, breaking_analysis, class_lifespan, find_bar, matched_bar,
    permute_block, reduce, rigidity_radius, sigma_epsilon, switch_pair, Chain, Error,
    ErrorCategory, Extended, FieldSpec, Filtration, Rational, SigmaOptions, Simplex,
};

use crate::args::{Cli, Command, Common};
use crate::report::*;

pub struct Failure {
    pub category: ErrorCategory,
    pub message: String,
    /// A report still worth printing, e.g. a failed hypothesis check.
    pub report: Option<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            category: e.category(),
            message: e.to_string(),
            report: None,
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        category: ErrorCategory::Parse,
        message: message.into(),
        report: None,
    }
}

type Outcome = Result<String, Failure>;

pub fn run(cli: &Cli) -> Outcome {
    let c = &cli.common;
    if c.cap == 0 {
        return Err(usage("--cap must be positive"));
    }
    if c.threads == 0 {
        return Err(usage("--threads must be positive"));
    }
    let field = FieldSpec::new(c.field).map_err(|e| usage(e.to_string()))?;
    let opts = SigmaOptions {
        field,
        cap: c.cap,
        threads: c.threads,
        exhaustive: false,
    };
    match &cli.command {
        Command::Check { file } => check(c, file),
        Command::Barcode { file, dim } => barcode_cmd(c, field, file, *dim),
        Command::Lifespan { file, cycle } => {
            let alpha = parse_cycle(cycle, field)?;
            lifespan(c, field, &load(file)?, &alpha)
        }
        Command::Rigidity { file, cycle } => {
            let alpha = parse_cycle(cycle, field)?;
            rigidity(c, field, &load(file)?, &alpha)
        }
        Command::Sigma {
            file,
            cycle,
            epsilon,
            all_witnesses,
        } => {
            let alpha = parse_cycle(cycle, field)?;
            let eps = parse_number("--epsilon", epsilon)?;
            let opts = SigmaOptions {
                exhaustive: *all_witnesses,
                ..opts
            };
            sigma(c, &load(file)?, &alpha, &eps, &opts)
        }
        Command::Breaking { file, cycle } => {
            let alpha = parse_cycle(cycle, field)?;
            breaking(c, &load(file)?, &alpha, &opts)
        }
        Command::BarRigidity {
            file,
            dim,
            bar,
            epsilon,
            against,
        } => {
            let (a, b) = parse_bar(bar)?;
            let eps = parse_number("--epsilon", epsilon)?;
            let f = load(file)?;
            let g = against.as_deref().map(load).transpose()?;
            bar_rigidity(c, field, &f, g.as_ref(), *dim, &a, &b, &eps)
        }
        Command::Perturb {
            file,
            swap,
            block,
            perm,
            epsilon,
            out,
            bar,
            dim,
        } => {
            let eps = parse_number("--epsilon", epsilon)?;
            let request = match (swap, block, perm) {
                (Some(s), None, None) => {
                    let pair = parse_simplices(s)?;
                    if pair.len() != 2 {
                        return Err(usage("--swap takes exactly two simplices"));
                    }
                    Request::Swap(pair[0].clone(), pair[1].clone())
                }
                (None, Some(b), Some(p)) => Request::Block(parse_simplices(b)?, parse_perm(p)?),
                _ => return Err(usage("perturb needs either --swap or --block with --perm")),
            };
            let bar = bar.as_deref().map(parse_bar).transpose()?;
            let f = load(file)?;
            perturb(c, field, &f, &request, &eps, out, bar.as_ref().zip(*dim))
        }
    }
}

// ---------------------------------------------------------------------------
// Argument parsing.

fn load(path: &Path) -> Result<Filtration, Failure> {
    read_filtration_file(path).map_err(|e| {
        let mut f = Failure::from(e.clone());
        if !matches!(e, Error::Io(_)) {
            f.message = format!("{}: {}", path.display(), f.message);
        }
        f
    })
}

fn parse_number(flag: &str, s: &str) -> Result<Rational, Failure> {
    parse_rational(s.trim()).map_err(|e| usage(format!("{flag}: {e}")))
}

fn parse_cycle(s: &str, field: FieldSpec) -> Result<Chain, Failure> {
    Chain::parse(s, field).map_err(|e| usage(format!("--cycle: {e}")))
}

fn parse_bar(s: &str) -> Result<(Rational, Extended), Failure> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| usage("--bar expects `a,b`"))?;
    let a = parse_number("--bar", a)?;
    let b = match b.trim() {
        "inf" => Extended::Infinite,
        other => Extended::Finite(parse_number("--bar", other)?),
    };
    Ok((a, b))
}

/// Comma-separated simplices, either bracketed (`[0,1],[1,2]`) or with
/// space-separated vertices (`0 1,1 2`).
fn parse_simplices(s: &str) -> Result<Vec<Simplex>, Failure> {
    let bad = |msg: String| usage(format!("bad simplex list {s:?}: {msg}"));
    let groups: Vec<String> = if s.contains('[') {
        let mut out = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let r = rest
                .strip_prefix('[')
                .ok_or_else(|| bad("expected '['".into()))?;
            let close = r.find(']').ok_or_else(|| bad("missing ']'".into()))?;
            out.push(r[..close].replace(',', " "));
            rest = r[close + 1..].trim_start();
            rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
        }
        out
    } else {
        s.split(',').map(str::to_string).collect()
    };
    groups
        .iter()
        .map(|g| {
            let vertices = g
                .split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| bad(format!("bad vertex {t:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Simplex::new(vertices).map_err(|e| bad(e.to_string()))
        })
        .collect()
}

fn parse_perm(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("--perm: bad index {t:?}")))
        })
        .collect()
}

fn emit(c: &Common, report: Report) -> Outcome {
    Ok(report.render(c.json))
}

// ---------------------------------------------------------------------------
// Commands.

fn check(c: &Common, file: &Path) -> Outcome {
    let f = load(file)?;
    let rho = f.injectivity_radius().ok();
    let generic = f.is_generic();
    let rho_text = rho.as_ref().map_or_else(|| "undefined".into(), q);
    let text = Lines::default()
        .kv("simplices", f.len())
        .kv("dimension", f.complex().max_dim())
        .kv("closed", "yes")
        .kv("injective", "yes")
        .kv("monotone", "yes")
        .kv("rho", rho_text)
        .kv("generic", generic)
        .finish();
    let json = json!({
        "simplices": f.len(),
        "dimension": f.complex().max_dim(),
        "closed": true,
        "injective": true,
        "monotone": true,
        "rho": rho.as_ref().map_or(Value::Null, jq),
        "generic": generic,
    });
    emit(c, Report { text, json })
}

fn barcode_cmd(c: &Common, field: FieldSpec, file: &Path, dim: Option<usize>) -> Outcome {
    let f = load(file)?;
    let r = reduce(f.complex_arc(), &f.order(), field)?;
    let dims: Vec<usize> = match dim {
        Some(n) => vec![n],
        None => (0..=f.complex().max_dim()).collect(),
    };
    let mut lines = Lines::default();
    let mut out = Vec::new();
    for n in dims {
        let code = barcode(&r, &f, n)?;
        lines.line(format!("dim {n}"));
        for bar in &code.bars {
            lines.line(format!("  {}", bar_text(bar)));
        }
        out.push(json!({ "dim": n, "bars": code.bars.iter().map(jbar).collect::<Vec<_>>() }));
    }
    emit(
        c,
        Report {
            text: lines.finish(),
            json: json!({ "field": field.modulus(), "barcodes": out }),
        },
    )
}

fn lifespan(c: &Common, field: FieldSpec, f: &Filtration, alpha: &Chain) -> Outcome {
    let r = reduce(f.complex_arc(), &f.order(), field)?;
    let life = class_lifespan(&r, f, alpha)?;
    let text = Lines::default()
        .kv("cycle", chain(alpha))
        .kv("a", q(&life.a))
        .kv("b", &life.b)
        .kv("terminal", opt_simplex(&life.terminal_simplex))
        .finish();
    let json = json!({
        "cycle": chain(alpha),
        "a": jq(&life.a),
        "b": jext(&life.b),
        "terminal_simplex": jopt_simplex(&life.terminal_simplex),
    });
    emit(c, Report { text, json })
}

fn rigidity(c: &Common, field: FieldSpec, f: &Filtration, alpha: &Chain) -> Outcome {
    let cert = rigidity_radius(f, alpha, field)?;
    let limiting: Vec<String> = cert.limiting.iter().map(ToString::to_string).collect();
    let text = Lines::default()
        .kv("cycle", chain(alpha))
        .kv("a", q(&cert.a))
        .kv("b", q(&cert.b))
        .kv("terminal", &cert.terminal_simplex)
        .kv("R_u", &cert.r_u)
        .kv("R_l", &cert.r_l)
        .kv("epsilon*", q(&cert.epsilon_star))
        .kv("limiting", limiting.join(", "))
        .finish();
    let json = json!({
        "cycle": chain(alpha),
        "a": jq(&cert.a),
        "b": jq(&cert.b),
        "terminal_simplex": jsimplex(&cert.terminal_simplex),
        "R_u": jext(&cert.r_u),
        "R_l": jext(&cert.r_l),
        "epsilon_star": jq(&cert.epsilon_star),
        "limiting": limiting,
    });
    emit(c, Report { text, json })
}

fn sigma(
    c: &Common,
    f: &Filtration,
    alpha: &Chain,
    eps: &Rational,
    opts: &SigmaOptions,
) -> Outcome {
    let res = sigma_epsilon(f, alpha, eps, opts)?;
    let k = f.complex();
    let upper = domain_upper(&res.lifespan);
    let mut lines = Lines::default();
    lines
        .kv("cycle", chain(alpha))
        .kv("epsilon", q(eps))
        .kv("domain", format!("(0, {}]", q(&upper)))
        .kv("in_domain", yes_no(res.in_domain))
        .kv(
            "sigma",
            format!("{{{}}}", simplices(&res.terminal_simplices)),
        )
        .kv("size", res.len())
        .kv("rigid", yes_no(res.is_rigid()))
        .kv("orders_examined", res.orders_examined);
    for (s, w) in &res.witnesses {
        lines.kv(&format!("witness {s}"), order(w, k));
    }
    for (o, s) in &res.all_orders {
        lines.kv(&format!("order -> {s}"), order(o, k));
    }
    let json = json!({
        "cycle": chain(alpha),
        "epsilon": jq(eps),
        "domain_upper": jq(&upper),
        "in_domain": res.in_domain,
        "terminal_simplices": jsimplices(&res.terminal_simplices),
        "witnesses": res.witnesses.iter().map(|(s, w)| json!({
            "terminal_simplex": jsimplex(s),
            "order": jorder(w, k),
        })).collect::<Vec<_>>(),
        "orders_examined": res.orders_examined,
        "all_orders": res.all_orders.iter().map(|(o, s)| json!({
            "terminal_simplex": jsimplex(s),
            "order": jorder(o, k),
        })).collect::<Vec<_>>(),
    });
    emit(
        c,
        Report {
            text: lines.finish(),
            json,
        },
    )
}

fn breaking(c: &Common, f: &Filtration, alpha: &Chain, opts: &SigmaOptions) -> Outcome {
    let r = breaking_analysis(f, alpha, opts)?;
    let upper = domain_upper(&r.lifespan);
    let t0 = r.t0.as_ref().map_or_else(|| "none".into(), q);
    let class = r
        .classification
        .map_or_else(|| "none".into(), |x| x.to_string());
    let agreement = match r.prediction_observed() {
        Some(true) => "agree",
        Some(false) => "disagree",
        None => "no prediction",
    };
    let mut lines = Lines::default();
    lines
        .kv("cycle", chain(alpha))
        .kv("domain", format!("(0, {}]", q(&upper)))
        .kv("t0", &t0)
        .kv("delta1", &r.delta1);
    if r.t0.is_some() {
        lines
            .kv(
                "sampled_above",
                q(r.epsilon_above.as_ref().expect("set with t0")),
            )
            .kv(
                "new_terminals",
                format!("{{{}}}", simplices(&r.new_terminals)),
            )
            .kv(
                "partner_candidates",
                format!("{{{}}}", simplices(&r.partner_candidates)),
            )
            .kv("partner_prediction", opt_simplex(&r.partner_prediction))
            .kv("classification", &class)
            .kv("prediction_vs_oracle", agreement);
    } else {
        lines.line("rigid on the whole domain");
    }
    let json = json!({
        "cycle": chain(alpha),
        "domain_upper": jq(&upper),
        "t0": r.t0.as_ref().map_or(Value::Null, jq),
        "delta1": jsimplex(&r.delta1),
        "sampled_above": r.epsilon_above.as_ref().map_or(Value::Null, jq),
        "new_terminals": jsimplices(&r.new_terminals),
        "partner_candidates": jsimplices(&r.partner_candidates),
        "partner_prediction": jopt_simplex(&r.partner_prediction),
        "classification": r.classification.map(|x| x.to_string()),
        "prediction_observed": r.prediction_observed(),
    });
    emit(
        c,
        Report {
            text: lines.finish(),
            json,
        },
    )
}

#[allow(clippy::too_many_arguments)]
fn bar_rigidity(
    c: &Common,
    field: FieldSpec,
    f: &Filtration,
    g: Option<&Filtration>,
    dim: usize,
    a: &Rational,
    b: &Extended,
    eps: &Rational,
) -> Outcome {
    let bar = find_bar(f, dim, a, b, field)?;
    let v = bar_rigidity_check(f, &bar, eps, field)?;
    let representative = bar_representative(f, &bar, field)?;
    let mut lines = Lines::default();
    lines
        .kv("bar", bar_text(&bar))
        .kv("dim", dim)
        .kv("epsilon", q(eps))
        .kv("representative", chain(&representative))
        .kv("epsilon < (b-a)/4", yes_no(v.short_enough))
        .kv("separated", yes_no(v.separation_violations.is_empty()));
    for other in &v.separation_violations {
        lines.line(format!("  not separated: {other}"));
    }
    lines
        .kv("R_u", &v.r_u)
        .kv("R_l", &v.r_l)
        .kv("epsilon <= min(R_u, R_l)/2", yes_no(v.within_bounds))
        .kv("hypotheses_ok", yes_no(v.hypotheses_ok))
        .kv("rigid", yes_no(v.rigid));
    let mut json = json!({
        "bar": jbar(&bar),
        "epsilon": jq(eps),
        "representative": chain(&representative),
        "short_enough": v.short_enough,
        "separation_violations": v.separation_violations.iter().map(jbar).collect::<Vec<_>>(),
        "R_u": jext(&v.r_u),
        "R_l": jext(&v.r_l),
        "within_bounds": v.within_bounds,
        "hypotheses_ok": v.hypotheses_ok,
        "rigid": v.rigid,
    });
    if let Some(g) = g {
        if v.hypotheses_ok {
            let m = matched_bar(f, g, &bar, eps, field)?;
            let kept = m.terminal_simplex == bar.terminal_simplex;
            lines
                .kv("matched_bar", bar_text(&m))
                .kv("terminal_unchanged", yes_no(kept));
            json["matched_bar"] = jbar(&m);
            json["terminal_unchanged"] = json!(kept);
        }
    }
    let report = Report {
        text: lines.finish(),
        json,
    };
    if v.rigid {
        emit(c, report)
    } else {
        Err(Failure {
            category: ErrorCategory::Domain,
            message: format!("bar is not certified rigid: {}", v.failures().join("; ")),
            report: Some(report.render(c.json)),
        })
    }
}

pub enum Request {
    Swap(Simplex, Simplex),
    Block(Vec<Simplex>, Vec<usize>),
}

fn perturb(
    c: &Common,
    field: FieldSpec,
    f: &Filtration,
    request: &Request,
    eps: &Rational,
    out: &Path,
    bar: Option<(&(Rational, Extended), usize)>,
) -> Outcome {
    let g = match request {
        Request::Swap(s1, s2) => switch_pair(f, s1, s2, eps)?,
        Request::Block(block, perm) => permute_block(f, block, perm, eps)?,
    };
    let matched = match bar {
        Some(((a, b), dim)) => {
            let bar = find_bar(f, dim, a, b, field)?;
            Some((bar.clone(), matched_bar(f, &g, &bar, eps, field)?))
        }
        None => None,
    };
    std::fs::write(out, write_filtration(&g))
        .map_err(|e| usage(format!("cannot write {}: {e}", out.display())))?;
    let distance = f.sup_distance(&g)?;
    let k = g.complex();
    let mut lines = Lines::default();
    lines
        .kv("written", out.display())
        .kv("epsilon", q(eps))
        .kv("distance", q(&distance))
        .kv("order", order(&g.order(), k));
    let mut json = json!({
        "written": out.display().to_string(),
        "epsilon": jq(eps),
        "distance": jq(&distance),
        "order": jorder(&g.order(), k),
        "values": k.simplices().iter().zip(g.values()).map(|(s, v)| json!({
            "simplex": jsimplex(s),
            "value": jq(v),
        })).collect::<Vec<_>>(),
    });
    if let Some((bar, m)) = matched {
        lines
            .kv("bar", bar_text(&bar))
            .kv("matched_bar", bar_text(&m));
        json["bar"] = jbar(&bar);
        json["matched_bar"] = jbar(&m);
    }
    emit(
        c,
        Report {
            text: lines.finish(),
            json,
        },
    )
}
