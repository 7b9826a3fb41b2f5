//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use common::{
    all_configs, factor_free_poly, grid_shapes, int, laplace_det, line_normal_form, line_poly, oracle_covering, poly,
    random_direction, random_line, random_poly,
};
use num_bigint::BigInt;
use perfcol::linefactor::{critical_t, fiber_set, line_factor_directions, CriticalSet};
use perfcol::perfect::{
    abelian_complexity, convolution_identity, extract_matrix, neighborhood, pattern_complexity, search,
    verdict_coloring, verdict_covering, verdict_covering_convex, verify_covering, ColoringMatrix, Constraint, Evidence,
    GridKind, SearchParams, TorusConfig, Verdict,
};
use perfcol::unipoly::{cyclotomic, gcd_primitive, phi, UniPoly};
use perfcol::{Direction, Exponent, LaurentPoly2, Rational, Shape};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn check(ok: bool, detail: impl Into<String>) -> Outcome {
    if ok {
        Ok(detail.into())
    } else {
        Err(detail.into())
    }
}

fn failures(wrong: &[String]) -> String {
    if wrong.is_empty() {
        String::new()
    } else {
        format!(", failing: {}", wrong.join(", "))
    }
}

fn block(w: i64, h: i64) -> Shape {
    (0..w).flat_map(|i| (0..h).map(move |j| Exponent::new(i, j))).collect()
}

fn checkerboard() -> TorusConfig {
    TorusConfig::from_fn(2, 2, 2, |x, y| ((x + y) % 2) as u8).unwrap()
}

fn rat(v: i64) -> Rational {
    Rational::from_integer(int(v))
}

/// The two search instances compared against exhaustive enumeration.
fn search_instances() -> Vec<(&'static str, Shape, usize, usize, u64, u64)> {
    vec![
        ("square r=1 covering(1,2) on 3x3", neighborhood(GridKind::Square, 1), 3, 3, 1, 2),
        ("2x2 block covering(1,1) on 4x4", block(2, 2), 4, 4, 1, 1),
    ]
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut wrong = Vec::new();
    for (grid, r, shape) in grid_shapes() {
        let want = match (grid, r) {
            (GridKind::Square, 1) => CriticalSet::OnlyAt(rat(1)),
            (GridKind::Triangular, 1) => CriticalSet::OnlyAt(rat(-1)),
            (GridKind::King, _) => CriticalSet::OnlyAt(rat(0)),
            _ => CriticalSet::NoneForAnyT,
        };
        let got = critical_t::<BigInt>(&shape).unwrap().global;
        if got != want {
            wrong.push(format!("{grid} r={r}: {got:?}"));
        }
    }
    let elapsed = start.elapsed();
    check(
        wrong.is_empty() && elapsed.as_secs_f64() < 5.0,
        format!("9 grid critical sets in {elapsed:.2?}{}", failures(&wrong)),
    )
}

fn criterion_2() -> Outcome {
    let mut wrong = Vec::new();
    for (grid, r, shape) in grid_shapes() {
        let report = critical_t::<BigInt>(&shape).unwrap();
        let f = LaurentPoly2::characteristic(&shape).unwrap();
        for t in -6i64..=6 {
            let has = !line_factor_directions(&f.minus_constant(&int(t))).unwrap().is_empty();
            if has != report.contains(&rat(t)) {
                wrong.push(format!("{grid} r={r} t={t}"));
            }
        }
    }
    check(wrong.is_empty(), format!("117 (shape, t) pairs{}", failures(&wrong)))
}

fn criterion_3() -> Outcome {
    let f = poly(&[((1, 0), 3), ((0, 1), 1), ((1, 2), 1), ((1, 1), 1), ((3, 3), 1), ((4, 4), 1)]);
    let want: BTreeSet<UniPoly<BigInt>> =
        [UniPoly::from_ints(&[3]), UniPoly::from_ints(&[1, 1]), UniPoly::from_ints(&[1, 0, 1, 1])]
            .into_iter()
            .collect();
    let got = fiber_set(&f, Direction::new(1, 1).unwrap()).unwrap().fibers;
    let shown: Vec<String> = got.iter().map(|p| p.to_string()).collect();
    check(got == want, format!("fibers {{{}}}", shown.join(", ")))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let mut planted_ok = 0;
    while planted_ok < 200 {
        let g = random_poly(&mut rng, 0, 5, 8);
        if g.is_zero() {
            continue;
        }
        let v = random_direction(&mut rng, 3);
        let c = random_line(&mut rng);
        let f = &line_poly(v, &c) * &g;
        let w = v.normalized();
        let reports = line_factor_directions(&f).unwrap();
        let found = reports
            .iter()
            .find(|r| r.direction == w)
            .is_some_and(|r| r.gcd_normal_form.div_exact(&line_normal_form(v, w, &c)).is_some());
        if !found {
            return Err(format!("planted factor along {v} missed in {f}"));
        }
        planted_ok += 1;
    }
    for _ in 0..100 {
        let f = factor_free_poly(&mut rng);
        if !line_factor_directions(&f).unwrap().is_empty() {
            return Err(format!("factor reported for {f}"));
        }
    }
    Ok("200 planted products, 100 factor-free polynomials".into())
}

fn criterion_5() -> Outcome {
    for m in 1..=12usize {
        for n in 1..=12usize {
            let g = gcd_primitive(&phi::<BigInt>(m).unwrap(), &phi::<BigInt>(n).unwrap()).unwrap();
            if g.is_constant() == (num_integer::gcd(m, n) > 1) {
                return Err(format!("gcd(phi_{m}, phi_{n})"));
            }
        }
    }
    for d in 1..=30usize {
        let product = (1..=d)
            .filter(|e| d % e == 0)
            .fold(UniPoly::<BigInt>::one(), |acc, e| &acc * &cyclotomic::<BigInt>(e).unwrap());
        let mut want = vec![0i64; d + 1];
        want[0] = -1;
        want[d] = 1;
        if product != UniPoly::from_ints(&want) {
            return Err(format!("cyclotomic product for d={d}"));
        }
    }
    Ok("144 phi gcds, 30 cyclotomic products".into())
}

fn criterion_6() -> Outcome {
    let mut wrong = Vec::new();
    for (grid, r, shape) in grid_shapes() {
        for delta in -5i64..=5 {
            let general = verdict_covering(&shape, &int(delta), &int(0)).unwrap();
            let convex = verdict_covering_convex(&shape, &int(delta)).unwrap();
            if general.class() != convex.class() || general.direction() != convex.direction() {
                wrong.push(format!("{grid} r={r} delta={delta}"));
            }
        }
    }
    check(wrong.is_empty(), format!("99 (shape, delta) pairs{}", failures(&wrong)))
}

fn criterion_7() -> Outcome {
    let shape = neighborhood(GridKind::Square, 1);
    let c = checkerboard();
    // count each window directly on the periodic extension
    let mut counted = vec![vec![0u64; 2]; 2];
    for y in 0..2i64 {
        for x in 0..2i64 {
            let own = ((x + y) % 2) as usize;
            let mut seen = [0u64; 2];
            for u in shape.iter() {
                seen[((x + u.i + y + u.j).rem_euclid(2)) as usize] += 1;
            }
            counted[0][own] = seen[0];
            counted[1][own] = seen[1];
        }
    }
    let b = vec![vec![1, 4], vec![4, 1]];
    if counted != b {
        return Err(format!("counting oracle gives {counted:?}"));
    }
    let extracted = extract_matrix(&c, &shape).and_then(|m| m.matrix());
    if extracted.as_ref().map(|m| m.entries().to_vec()) != Some(b.clone()) {
        return Err(format!("extract_matrix gives {extracted:?}"));
    }
    let shifted: Vec<Vec<BigInt>> =
        (0..2).map(|i| (0..2).map(|j| int(b[i][j] as i64 - i64::from(i == j))).collect()).collect();
    let det = laplace_det(&shifted);
    let verdict = verdict_coloring(&shape, &ColoringMatrix::new(b).unwrap()).unwrap();
    let ok = det == int(-16)
        && matches!(&verdict, Verdict::ForcedTwoPeriodic(Evidence::CriticalT { determinant: Some(d), .. })
            if *d == rat(-16));
    check(ok, format!("B = [[1,4],[4,1]], det(B - I) = {det}, verdict {}", verdict.class().label()))
}

fn criterion_8() -> Outcome {
    let mut parts = Vec::new();
    for (name, shape, w, h, b, a) in search_instances() {
        let oracle: Vec<TorusConfig> =
            all_configs(w, h, 2).into_iter().filter(|c| oracle_covering(c, &shape, b, a)).collect();
        let params = SearchParams {
            shape,
            colors: 2,
            width: w,
            height: h,
            constraint: Constraint::Covering { b, a },
            limit: None,
            threads: 1,
        };
        let found = search(&params).unwrap();
        let as_set = |v: &[TorusConfig]| v.iter().map(|c| c.colors().to_vec()).collect::<BTreeSet<_>>();
        if as_set(&found) != as_set(&oracle) || found.len() != oracle.len() {
            return Err(format!("{name}: search {} vs oracle {}", found.len(), oracle.len()));
        }
        parts.push(format!("{name}: {}", found.len()));
    }
    Ok(parts.join("; "))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(909);
    let shapes: Vec<Shape> = grid_shapes().into_iter().map(|(_, _, s)| s).chain([block(2, 2)]).collect();
    for k in 0..500 {
        let (w, h) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let c = TorusConfig::new(w, h, 2, (0..w * h).map(|_| rng.gen_range(0..2u8)).collect()).unwrap();
        let shape = &shapes[k % shapes.len()];
        let (b, a) = (rng.gen_range(0..=shape.len() as u64), rng.gen_range(0..=shape.len() as u64));
        if verify_covering(&c, shape, b, a).unwrap() != convolution_identity(&c, shape, b, a).unwrap() {
            return Err(format!("random config {k} disagrees"));
        }
    }
    let mut outputs = 0;
    for (name, shape, w, h, b, a) in search_instances() {
        let params = SearchParams {
            shape: shape.clone(),
            colors: 2,
            width: w,
            height: h,
            constraint: Constraint::Covering { b, a },
            limit: None,
            threads: 1,
        };
        for c in search(&params).unwrap() {
            if !(verify_covering(&c, &shape, b, a).unwrap() && convolution_identity(&c, &shape, b, a).unwrap()) {
                return Err(format!("search output of {name} fails a check"));
            }
            outputs += 1;
        }
    }
    Ok(format!("500 random configs, {outputs} search outputs"))
}

fn criterion_10() -> Outcome {
    let c = checkerboard();
    let (two, three) = (abelian_complexity(&c, &block(2, 2)), abelian_complexity(&c, &block(3, 3)));
    if (two, three) != (1, 2) {
        return Err(format!("checkerboard: 2x2 block {two}, 3x3 block {three}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1010);
    let shapes = [neighborhood(GridKind::Square, 1), neighborhood(GridKind::King, 1), block(2, 2), block(3, 3)];
    for k in 0..100 {
        let n = rng.gen_range(2..=3);
        let (w, h) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let c = TorusConfig::new(w, h, n, (0..w * h).map(|_| rng.gen_range(0..n) as u8).collect()).unwrap();
        let shape = &shapes[k % shapes.len()];
        if abelian_complexity(&c, shape) > pattern_complexity(&c, shape) {
            return Err(format!("random config {k}: abelian exceeds pattern complexity"));
        }
    }
    Ok("checkerboard 1 and 2, 100 random configs".into())
}

fn criterion_11() -> Outcome {
    let domino = Path::new(env!("CARGO_TARGET_TMPDIR")).join("acceptance-block.json");
    std::fs::write(&domino, "[[0,0],[1,0],[0,1],[1,1]]").unwrap();
    let domino = domino.to_str().unwrap().to_string();
    let instances: Vec<Vec<String>> = vec![
        ["--grid", "square", "--radius", "1", "--covering", "1", "2", "--torus", "3x3"].map(String::from).to_vec(),
        ["--shape", &domino, "--covering", "1", "1", "--torus", "4x4"].map(String::from).to_vec(),
    ];
    for args in &instances {
        for json in [false, true] {
            let run = |threads: &str| {
                let mut all = vec!["perfcol".to_string(), "--threads".into(), threads.into()];
                if json {
                    all.push("--json".into());
                }
                all.push("search".into());
                all.extend(args.iter().cloned());
                perfcol::cli::run(all)
            };
            let (serial, parallel) = (run("1"), run("4"));
            if serial.code != 0 || serial.stdout != parallel.stdout || serial.code != parallel.code {
                return Err(format!("search {} differs between 1 and 4 threads", args.join(" ")));
            }
        }
    }
    Ok("text and JSON output byte-identical for both instances".into())
}

fn main() -> ExitCode {
    let criteria: [fn() -> Outcome; 11] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
        criterion_11,
    ];
    let mut failed = 0;
    for (k, criterion) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(criterion)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {detail}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
