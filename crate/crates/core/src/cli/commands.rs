use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::formats::{
    coeffs_json, config_json, direction_json, exponent_json, parse_config, parse_matrix, parse_shape, shape_json,
};
use super::report::{critical_json, critical_text, factor_json, factor_text, verdict_json, verdict_text};
use super::{parse_poly, Cli, Command, ShapeArgs};
use crate::geometry::{edge_pair_directions, is_convex, outer_edge_directions};
use crate::linefactor::{critical_t, fiber_set, line_factor_directions};
use crate::perfect::{
    abelian_complexity, convolution_identity, extract_matrix, minimal_periods, neighborhood, offset_collisions,
    pattern_complexity, search, verdict_coloring, verdict_covering, verdict_covering_convex, verify_covering,
    ColoringMatrix, Constraint, SearchParams, TorusConfig, Verdict,
};
use crate::poly2::{LaurentPoly, Shape};
use crate::{Error, Result};

type Output = (String, i32);

pub fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Factors { poly } => factors(poly, cli.json),
        Command::Analyze { shape, delta, matrix, parametric } => {
            analyze(&resolve_shape(shape)?, *delta, matrix.as_deref(), *parametric, cli.json)
        }
        Command::Verify { config, shape, covering, matrix, colors, window } => {
            let shape = resolve_shape(shape)?;
            let constraint = constraint_of(covering.as_deref(), matrix.as_deref(), false)?;
            let colors = colors.or(matches!(constraint, Some(Constraint::Covering { .. })).then_some(2));
            let config = parse_config(&read(config)?, colors)?;
            let window = window.as_deref().map(parse_dims).transpose()?;
            verify(&config, &shape, constraint, window, cli.json)
        }
        Command::Search { shape, colors, torus, covering, matrix, any_perfect, limit } => {
            let (width, height) = parse_dims(torus)?;
            let constraint = constraint_of(covering.as_deref(), matrix.as_deref(), *any_perfect)?
                .expect("clap requires a constraint");
            let params = SearchParams {
                shape: resolve_shape(shape)?,
                colors: *colors,
                width,
                height,
                constraint,
                limit: *limit,
                threads: cli.threads,
            };
            run_search(&params, cli.json)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Format(format!("cannot read {}: {e}", path.display())))
}

fn resolve_shape(args: &ShapeArgs) -> Result<Shape> {
    match (&args.shape, args.grid, args.radius) {
        (Some(path), _, _) => parse_shape(&read(path)?),
        (None, Some(grid), Some(r)) => Ok(neighborhood(grid, r)),
        _ => Err(Error::Format("give either --shape FILE or --grid KIND --radius R".into())),
    }
}

fn parse_dims(text: &str) -> Result<(usize, usize)> {
    let bad = || Error::Format(format!("expected WxH, got '{text}'"));
    let (w, h) = text.split_once(['x', 'X']).ok_or_else(bad)?;
    let w: usize = w.trim().parse().map_err(|_| bad())?;
    let h: usize = h.trim().parse().map_err(|_| bad())?;
    if w == 0 || h == 0 {
        return Err(bad());
    }
    Ok((w, h))
}

fn constraint_of(covering: Option<&[u64]>, matrix: Option<&Path>, any: bool) -> Result<Option<Constraint>> {
    Ok(match (covering, matrix) {
        (Some(&[b, a]), _) => Some(Constraint::Covering { b, a }),
        (Some(_), _) => return Err(Error::Format("--covering takes two values B A".into())),
        (None, Some(path)) => Some(Constraint::Matrix(parse_matrix(&read(path)?)?)),
        (None, None) if any => Some(Constraint::AnyPerfect),
        (None, None) => None,
    })
}

fn join<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if parts.is_empty() {
        "none".into()
    } else {
        parts.join(" ")
    }
}

fn json_out(value: Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("serializable");
    s.push('\n');
    s
}

fn factors(text: &str, as_json: bool) -> Result<Output> {
    let f = parse_poly(text)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let candidates = edge_pair_directions(&f.support())?;
    let reports = line_factor_directions(&f)?;
    let mut fibers = Vec::new();
    for &v in &candidates {
        fibers.push((v, fiber_set(&f, v)?.fibers));
    }
    if as_json {
        let value = json!({
            "polynomial": f.to_string(),
            "candidates": candidates.iter().map(|&v| direction_json(v)).collect::<Vec<_>>(),
            "fibers": fibers.iter().map(|(v, fs)| json!({
                "direction": direction_json(*v),
                "normal_forms": fs.iter().map(coeffs_json).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "factors": reports.iter().map(factor_json).collect::<Vec<_>>(),
        });
        return Ok((json_out(value), 0));
    }
    let mut out = String::new();
    writeln!(out, "polynomial: {f}").unwrap();
    writeln!(out, "candidate directions: {}", join(&candidates)).unwrap();
    for (v, fs) in &fibers {
        let forms: Vec<String> = fs.iter().map(|p| p.to_string()).collect();
        writeln!(out, "  fibers along {v}: {}", forms.join(", ")).unwrap();
    }
    if reports.is_empty() {
        writeln!(out, "no line polynomial factors").unwrap();
    }
    for r in &reports {
        writeln!(out, "factor: {}", factor_text(r)).unwrap();
    }
    Ok((out, 0))
}

fn analyze(
    shape: &Shape,
    delta: Option<i64>,
    matrix: Option<&Path>,
    parametric: bool,
    as_json: bool,
) -> Result<Output> {
    let f = LaurentPoly::<BigInt>::characteristic(shape)?;
    let support = f.support();
    let outer = outer_edge_directions(&support)?;
    let pairs = edge_pair_directions(&support)?;
    let convex = is_convex(shape);
    let matrix = matrix.map(|p| read(p).and_then(|t| parse_matrix(&t))).transpose()?;

    let critical = parametric.then(|| critical_t(shape)).transpose()?;
    let mut verdicts: Vec<(&str, Verdict)> = Vec::new();
    if let Some(d) = delta {
        let d = BigInt::from(d);
        verdicts.push(("covering", verdict_covering(shape, &d, &BigInt::from(0))?));
        if convex {
            verdicts.push(("covering_convex", verdict_covering_convex(shape, &d)?));
        }
    }
    if let Some(m) = &matrix {
        verdicts.push(("coloring", verdict_coloring(shape, m)?));
    }
    let worst = verdicts.iter().map(|(_, v)| v.class()).max();
    let code = worst.map_or(0, |c| c.exit_code());

    if as_json {
        let mut value = json!({
            "shape": shape_json(shape),
            "size": shape.len(),
            "polynomial": f.to_string(),
            "support": support.iter().map(|&e| exponent_json(e)).collect::<Vec<_>>(),
            "outer_edges": outer.iter().map(|&v| direction_json(v)).collect::<Vec<_>>(),
            "edge_pairs": pairs.iter().map(|&v| direction_json(v)).collect::<Vec<_>>(),
            "convex": convex,
        });
        let obj = value.as_object_mut().expect("object");
        if let Some(report) = &critical {
            obj.insert("parametric".into(), critical_json(report));
        }
        for (name, v) in &verdicts {
            let mut entry = json!({ "verdict": verdict_json(v) });
            if let Some(d) = delta.filter(|_| name.starts_with("covering")) {
                entry["delta"] = json!(d);
            }
            if let (Some(m), "coloring") = (&matrix, *name) {
                entry["matrix"] = json!(m.entries());
            }
            obj.insert((*name).into(), entry);
        }
        if let Some(w) = worst {
            obj.insert("verdict".into(), json!(w.label()));
        }
        return Ok((json_out(value), code));
    }

    let mut out = String::new();
    writeln!(out, "shape: {} offsets", shape.len()).unwrap();
    writeln!(out, "polynomial: {f}").unwrap();
    writeln!(out, "support: {}", join(&support)).unwrap();
    writeln!(out, "outer edges: {}", join(&outer)).unwrap();
    writeln!(out, "edge pairs: {}", join(&pairs)).unwrap();
    writeln!(out, "convex: {}", if convex { "yes" } else { "no" }).unwrap();
    if let Some(report) = &critical {
        out.push_str(&critical_text(report));
    }
    for (name, v) in &verdicts {
        let label = match *name {
            "covering" => format!("covering (b - a = {})", delta.unwrap_or(0)),
            "covering_convex" => format!("covering, convex criterion (b - a = {})", delta.unwrap_or(0)),
            _ => "coloring".to_string(),
        };
        writeln!(out, "{label}: {}", verdict_text(v)).unwrap();
    }
    if let Some(w) = worst {
        writeln!(out, "verdict: {w}").unwrap();
    }
    Ok((out, code))
}

fn matrix_rows(m: &ColoringMatrix) -> Vec<String> {
    m.entries().iter().map(join).collect()
}

fn verify(
    c: &TorusConfig,
    shape: &Shape,
    constraint: Option<Constraint>,
    window: Option<(usize, usize)>,
    as_json: bool,
) -> Result<Output> {
    let collisions = offset_collisions(shape, c.width(), c.height());
    let extracted = extract_matrix(c, shape);
    let mut checks: Vec<(String, bool)> = Vec::new();
    let holds = match &constraint {
        None => extracted.is_some(),
        Some(Constraint::Covering { b, a }) => {
            let direct = verify_covering(c, shape, *b, *a)?;
            let identity = convolution_identity(c, shape, *b, *a)?;
            checks.push((format!("covering (b = {b}, a = {a})"), direct));
            checks.push(("convolution identity".into(), identity));
            direct && identity
        }
        Some(Constraint::Matrix(m)) => {
            m.check_shape_size(shape.len())?;
            if m.size() != c.alphabet() {
                return Err(Error::InvalidConfig(format!(
                    "matrix is {0}x{0} but the configuration has {1} colors",
                    m.size(),
                    c.alphabet()
                )));
            }
            let ok = extracted.as_ref().is_some_and(|e| {
                e.columns.iter().enumerate().all(|(j, col)| col.as_ref().is_none_or(|col| *col == m.column(j)))
            });
            checks.push(("matrix".into(), ok));
            ok
        }
        Some(Constraint::AnyPerfect) => extracted.is_some(),
    };
    let abelian = abelian_complexity(c, shape);
    let patterns = pattern_complexity(c, shape);
    let windowed = window.map(|(w, h)| {
        let block = Shape::block(w as i64, h as i64);
        (w, h, abelian_complexity(c, &block), pattern_complexity(c, &block))
    });
    let periods = minimal_periods(c);
    let code = if holds { 0 } else { 1 };

    if as_json {
        let value = json!({
            "config": config_json(c),
            "shape_size": shape.len(),
            "collisions": collisions.iter().map(|(u, v)| json!([exponent_json(*u), exponent_json(*v)])).collect::<Vec<_>>(),
            "perfect": extracted.is_some(),
            "matrix": extracted.as_ref().map(|e| e.columns.iter().map(|c| json!(c)).collect::<Vec<_>>()),
            "checks": checks.iter().map(|(name, ok)| json!({ "name": name, "pass": ok })).collect::<Vec<_>>(),
            "abelian_complexity": abelian,
            "pattern_complexity": patterns,
            "window": windowed.map(|(w, h, a, p)| json!({ "width": w, "height": h, "abelian_complexity": a, "pattern_complexity": p })),
            "periods": periods.iter().map(|&e| exponent_json(e)).collect::<Vec<_>>(),
            "result": if holds { "pass" } else { "fail" },
        });
        return Ok((json_out(value), code));
    }

    let mut out = String::new();
    writeln!(out, "torus: {}x{}, {} colors", c.width(), c.height(), c.alphabet()).unwrap();
    for (u, v) in &collisions {
        writeln!(out, "note: offsets {u} and {v} coincide on this torus; both are counted").unwrap();
    }
    match &extracted {
        None => writeln!(out, "perfect: no").unwrap(),
        Some(e) => {
            writeln!(out, "perfect: yes").unwrap();
            match e.matrix() {
                Some(m) => {
                    writeln!(out, "matrix B:").unwrap();
                    for row in matrix_rows(&m) {
                        writeln!(out, "  {row}").unwrap();
                    }
                }
                None => {
                    for (j, col) in e.columns.iter().enumerate() {
                        match col {
                            Some(col) => writeln!(out, "column {j}: {}", join(col)).unwrap(),
                            None => writeln!(out, "column {j}: absent").unwrap(),
                        }
                    }
                }
            }
        }
    }
    for (name, ok) in &checks {
        writeln!(out, "{name}: {}", if *ok { "PASS" } else { "FAIL" }).unwrap();
    }
    writeln!(out, "abelian complexity: {abelian}").unwrap();
    writeln!(out, "pattern complexity: {patterns}").unwrap();
    if let Some((w, h, a, p)) = windowed {
        writeln!(out, "abelian complexity ({w}x{h} block): {a}").unwrap();
        writeln!(out, "pattern complexity ({w}x{h} block): {p}").unwrap();
    }
    writeln!(out, "periods: {}", join(&periods)).unwrap();
    writeln!(out, "result: {}", if holds { "PASS" } else { "FAIL" }).unwrap();
    Ok((out, code))
}

fn run_search(params: &SearchParams, as_json: bool) -> Result<Output> {
    if params.colors > 36 {
        return Err(Error::InvalidConfig(format!("alphabet size {} not in 1..=36", params.colors)));
    }
    let found = search(params)?;
    let code = if found.is_empty() { 2 } else { 0 };
    let bound = format!("{}x{}", params.width, params.height);
    if as_json {
        let value = json!({
            "torus": [params.width, params.height],
            "colors": params.colors,
            "limit": params.limit,
            "configs": found.iter().map(config_json).collect::<Vec<_>>(),
            "count": found.len(),
            "status": if found.is_empty() { "none up to bound" } else { "found" },
        });
        return Ok((json_out(value), code));
    }
    let mut out = String::new();
    for c in &found {
        out.push_str(&c.to_text());
        out.push('\n');
    }
    writeln!(out, "count: {}", found.len()).unwrap();
    if found.is_empty() {
        writeln!(out, "none up to bound ({bound} torus)").unwrap();
    }
    Ok((out, code))
}
