mod common;

use std::collections::BTreeSet;

use common::{
    factor_free_poly, grid_shapes, int, line_normal_form, line_poly, random_direction, random_line, random_poly,
};
use num_bigint::BigInt;
use perfcol::linefactor::{critical_t, fiber_set, has_line_factor, line_cofactor, line_factor_directions};
use perfcol::poly2::LaurentPoly;
use perfcol::unipoly::UniPoly;
use perfcol::{Direction, LaurentPoly2, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn fibers_reassemble_to_the_polynomial() {
    let mut r = rng(1);
    for _ in 0..200 {
        let f = random_poly(&mut r, -3, 7, 10);
        if f.is_zero() {
            continue;
        }
        let v = random_direction(&mut r, 3);
        let fs = fiber_set(&f, v).unwrap();
        let mut rebuilt = LaurentPoly::zero();
        for class in &fs.classes {
            let coeffs: Vec<i64> = class.normal_form.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect();
            rebuilt = &rebuilt + &line_poly(v, &coeffs).shift(class.base);
            assert!(!class.normal_form.coeff(0).eq(&int(0)));
        }
        assert_eq!(rebuilt, f);
        assert_eq!(fs.origin_fiber.is_some(), fs.classes.iter().any(|c| c.line == 0));
    }
}

#[test]
fn planted_factors_are_found_and_split_exactly() {
    let mut r = rng(2);
    let mut done = 0;
    while done < 200 {
        let g = random_poly(&mut r, 0, 5, 8);
        if g.is_zero() {
            continue;
        }
        let v = random_direction(&mut r, 3);
        let c = random_line(&mut r);
        let f = &line_poly(v, &c) * &g;
        let w = v.normalized();
        let reports = line_factor_directions(&f).unwrap();
        let report = reports.iter().find(|rep| rep.direction == w).expect("planted direction reported");
        assert!(report.gcd_normal_form.div_exact(&line_normal_form(v, w, &c)).is_some());
        for rep in &reports {
            let coeffs: Vec<i64> = rep.gcd_normal_form.coeffs().iter().map(|x| i64::try_from(x).unwrap()).collect();
            let q = line_cofactor(&f, rep.direction, &rep.gcd_normal_form).unwrap().expect("exact split");
            assert_eq!(&line_poly(rep.direction, &coeffs) * &q, f);
        }
        for k in 2..=3 {
            assert!(has_line_factor(&f.dilation(k).unwrap(), w).unwrap().is_some());
        }
        done += 1;
    }
}

#[test]
fn polynomials_with_monomial_fibers_have_no_factors() {
    let mut r = rng(3);
    for _ in 0..100 {
        let f = factor_free_poly(&mut r);
        assert!(line_factor_directions(&f).unwrap().is_empty(), "{f}");
        for p in -3i64..=3 {
            for q in -3i64..=3 {
                if let Ok(v) = Direction::new(p, q) {
                    assert!(has_line_factor(&f, v).unwrap().is_none());
                    assert!(has_line_factor(&f.dilation(2).unwrap(), v).unwrap().is_none());
                }
            }
        }
    }
}

#[test]
fn critical_sets_predict_integer_factors() {
    for (grid, radius, shape) in grid_shapes() {
        let report = critical_t::<BigInt>(&shape).unwrap();
        let f = LaurentPoly2::characteristic(&shape).unwrap();
        for t in -6i64..=6 {
            let has = !line_factor_directions(&f.minus_constant(&int(t))).unwrap().is_empty();
            assert_eq!(has, report.contains(&Rational::from_integer(int(t))), "{grid} r={radius} t={t}");
        }
    }
}

#[test]
fn worked_examples() {
    // 3x + y + xy^2 + xy + x^3y^3 + x^4y^4 along the diagonal
    let f = common::poly(&[((1, 0), 3), ((0, 1), 1), ((1, 2), 1), ((1, 1), 1), ((3, 3), 1), ((4, 4), 1)]);
    let want: BTreeSet<UniPoly<BigInt>> =
        [UniPoly::from_ints(&[3]), UniPoly::from_ints(&[1, 1]), UniPoly::from_ints(&[1, 0, 1, 1])]
            .into_iter()
            .collect();
    assert_eq!(fiber_set(&f, Direction::new(1, 1).unwrap()).unwrap().fibers, want);
    let f = common::poly(&[((2, 1), 1), ((0, 0), -1)]);
    let reports = line_factor_directions(&f).unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0].direction, Direction::new(2, 1).unwrap());
    assert_eq!(reports[0].gcd_normal_form, UniPoly::from_ints(&[-1, 1]));
}
