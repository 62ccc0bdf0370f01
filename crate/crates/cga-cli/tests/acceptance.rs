//! Acceptance suite: one test per shipping criterion, each printing a
//! pass line with its pinned tolerance. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use std::path::Path;
use std::process::Command;
use std::time::Instant;

use cga::oracle::{
    self, cayley_check, circumcircle, circumsphere, pair_solve_bruteforce, plane_support,
    SampledSphere,
};
use cga::{
    extract_point, incident, same_object, Circle, ConformalPoint, Line, Multivector, Plane,
    PointPair, Sphere, Tolerance, Vec3,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn embed(p: Vec3) -> ConformalPoint {
    ConformalPoint::embed(p)
}

fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x9e3779b97f4a7c15 ^ salt)
}

fn pass(criterion: &str) {
    println!("acceptance {criterion}: PASS");
}

#[test]
fn acceptance_01_cayley_table_exactness() {
    let start = Instant::now();
    let mismatches = cayley_check();
    let elapsed = start.elapsed();
    assert!(mismatches.is_empty(), "{} mismatches", mismatches.len());
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "table check took {elapsed:?}, budget is 1 s"
    );
    pass("01 cayley-table exactness (1024 products, 0 mismatches, < 1 s)");
}

#[test]
fn acceptance_02_metric_constants() {
    let n = Multivector::n();
    let nb = Multivector::nb();
    let plane = Multivector::minkowski_plane();
    let i = Multivector::euclid_pseudoscalar();
    assert_eq!(n * n, Multivector::ZERO);
    assert_eq!(nb * nb, Multivector::ZERO);
    assert_eq!(n.scalar_product(&nb), -1.0);
    assert_eq!(plane * plane, Multivector::scalar(1.0));
    assert_eq!(i * i, Multivector::scalar(-1.0));
    pass("02 metric constants (n^2 = nb^2 = 0, n*nb = -1, N^2 = 1, i^2 = -1, exact)");
}

#[test]
fn acceptance_03_embed_extract_round_trip() {
    let tol = Tolerance::default();
    let mut rng = rng(3);
    let mut max_err = 0.0f64;
    for _ in 0..1000 {
        let p = oracle::random_point(&mut rng);
        let back = extract_point(embed(p).multivector(), tol).unwrap();
        max_err = max_err.max((back - p).norm());
    }
    assert!(max_err <= 1e-12, "max round-trip error {max_err:.3e}");
    pass("03 embed/extract round trip (1000 points, max error <= 1e-12)");
}

#[test]
fn acceptance_04_pair_split() {
    let tol = Tolerance::default();
    let mut rng = rng(4);
    let mut count = 0;
    while count < 1000 {
        let p = oracle::random_point(&mut rng);
        let q = if count % 4 == 0 {
            oracle::random_unit(&mut rng) * p.norm()
        } else {
            oracle::random_point(&mut rng)
        };
        if (p - q).norm() < 1e-6 || p.norm() < 1e-3 {
            continue;
        }
        count += 1;
        let pair = PointPair::through(&embed(p), &embed(q), tol).unwrap();
        let (data, _) = pair.split(tol).unwrap();
        let err = ((data.p1 - p).norm() + (data.p2 - q).norm())
            .min((data.p1 - q).norm() + (data.p2 - p).norm());
        assert!(
            err <= 1e-9 * (1.0 + p.norm() + q.norm()),
            "split error {err:.3e} for {p} / {q}"
        );
    }

    // Worked instance: p1 = 2 e1, p2 = e2.
    let pair = PointPair::through(&embed(Vec3::EX * 2.0), &embed(Vec3::EY), tol).unwrap();
    let (data, inter) = pair.split(tol).unwrap();
    assert!((inter.sigma - 12.5).abs() <= 1e-12);
    assert!((inter.rho - 7.5).abs() <= 1e-12);
    assert!((data.p1.norm() - 2.0).abs() <= 1e-12);
    assert!((data.p2.norm() - 1.0).abs() <= 1e-12);
    pass("04 pair split (1000 pairs incl. equal norms <= 1e-9; sigma = 12.5, rho = 7.5, norms (2, 1))");
}

#[test]
fn acceptance_05_pair_split_vs_bruteforce() {
    let tol = Tolerance::default();
    let mut rng = rng(5);
    let mut count = 0;
    while count < 1000 {
        let p = oracle::random_point(&mut rng);
        let q = if count % 4 == 0 {
            oracle::random_unit(&mut rng) * p.norm()
        } else {
            oracle::random_point(&mut rng)
        };
        if (p - q).norm() < 1e-6 || p.norm() < 1e-3 {
            continue;
        }
        count += 1;
        let pair = PointPair::through(&embed(p), &embed(q), tol).unwrap();
        let (data, _) = pair.split(tol).unwrap();
        let (b1, b2) = pair_solve_bruteforce(pair.multivector(), tol).unwrap();
        let err = ((data.p1 - b1).norm() + (data.p2 - b2).norm())
            .min((data.p1 - b2).norm() + (data.p2 - b1).norm());
        assert!(err <= 1e-9 * (1.0 + p.norm() + q.norm()), "sets differ by {err:.3e}");
    }

    for _ in 0..100 {
        let mv = oracle::virtual_pair(
            oracle::random_point(&mut rng),
            oracle::random_unit(&mut rng),
            -rng.random_range(0.05..25.0),
            rng.random_range(0.2..3.0),
        );
        let pair = PointPair::try_new(mv, tol).unwrap();
        assert!(pair.split(tol).is_err(), "split accepted a virtual pair");
        assert!(
            pair_solve_bruteforce(&mv, tol).is_err(),
            "quadratic solver accepted a virtual pair"
        );
    }
    pass("05 pair split vs quadratic solver (1000 real sets <= 1e-9, 100 virtual both imaginary)");
}

#[test]
fn acceptance_06_line_parametric_solution() {
    let tol = Tolerance::default();
    let mut rng = rng(6);
    let mut lines = 0;
    while lines < 100 {
        let p = oracle::random_point(&mut rng);
        let q = oracle::random_point(&mut rng);
        if (p - q).norm() < 1e-6 {
            continue;
        }
        lines += 1;
        let line = Line::through(&embed(p), &embed(q), tol).unwrap();
        let data = line.data(tol).unwrap();
        for _ in 0..100 {
            let alpha = rng.random_range(-100.0..100.0);
            let x = data.point_at(alpha, tol).unwrap();
            assert!(
                incident(line.multivector(), &embed(x), tol),
                "parametric point off the line at alpha {alpha}"
            );
        }
    }
    pass("06 line parametric solution (100 lines x 100 alphas all incident)");
}

#[test]
fn acceptance_07_circle_extraction() {
    let tol = Tolerance::default();
    let mut rng = rng(7);
    let mut count = 0;
    while count < 1000 {
        let (a, b, c) = (
            oracle::random_point(&mut rng),
            oracle::random_point(&mut rng),
            oracle::random_point(&mut rng),
        );
        let Ok(fit) = circumcircle(a, b, c) else {
            continue;
        };
        if fit.radius > 1e3 {
            continue;
        }
        count += 1;
        let circle = Circle::through(&embed(a), &embed(b), &embed(c), tol).unwrap();
        let data = circle.data(tol).unwrap();
        let scale = 1.0 + fit.center.norm() + fit.radius;
        assert!((data.c - fit.center).norm() <= 1e-9 * scale);
        assert!((data.r - fit.radius).abs() <= 1e-9 * scale);
        assert!((data.ic - fit.plane.canonical_unit().unwrap()).norm() <= 1e-9);

        // V3^2 = -r^2 Ic^2 with the raw-scale plane bivector.
        let i = Multivector::euclid_pseudoscalar();
        let v3 = circle.multivector();
        let retained = *v3 + i * v3.scalar_product(&i);
        let ic_raw = -(retained
            .wedge(&Multivector::n())
            .geometric(&Multivector::minkowski_plane()));
        let got = v3.scalar_square();
        let want = -data.r * data.r * ic_raw.scalar_square();
        assert!((got - want).abs() <= 1e-9 * (1.0 + got.abs() + want.abs()));
    }
    pass("07 circle extraction (1000 triples vs circumcircle <= 1e-9; V3^2 = -r^2 Ic^2 <= 1e-9)");
}

#[test]
fn acceptance_08_sphere_extraction() {
    let tol = Tolerance::default();
    let mut rng = rng(8);
    let mut count = 0;
    while count < 1000 {
        let (a, b, c, d) = (
            oracle::random_point(&mut rng),
            oracle::random_point(&mut rng),
            oracle::random_point(&mut rng),
            oracle::random_point(&mut rng),
        );
        let Ok(fit) = circumsphere(a, b, c, d) else {
            continue;
        };
        if fit.radius > 1e3 {
            continue;
        }
        count += 1;
        let sphere = Sphere::through(&embed(a), &embed(b), &embed(c), &embed(d), tol).unwrap();
        let data = sphere.data(tol).unwrap();
        let scale = 1.0 + fit.center.norm() + fit.radius;
        assert!((data.c - fit.center).norm() <= 1e-9 * scale);
        assert!((data.r - fit.radius).abs() <= 1e-9 * scale);
    }

    // Pseudoscalar factor of sampled spheres: r^3 (r1-r2)^(r2-r3)^(r3-r4).
    let mut sampled = 0;
    while sampled < 100 {
        let sample = SampledSphere::new(
            oracle::random_point(&mut rng),
            rng.random_range(0.5..5.0),
            (0..4).map(|_| oracle::random_unit(&mut rng)).collect(),
        )
        .unwrap();
        let dirs = &sample.directions;
        let triple = (dirs[0] - dirs[1]).dot((dirs[1] - dirs[2]).cross(dirs[2] - dirs[3]));
        if triple.abs() < 0.05 {
            continue;
        }
        let pts = sample.conformal_points();
        let Ok(sphere) = Sphere::through(&pts[0], &pts[1], &pts[2], &pts[3], tol) else {
            continue;
        };
        sampled += 1;
        let got = sphere.pseudoscalar_factor();
        let want = Multivector::euclid_pseudoscalar() * (sample.radius.powi(3) * triple);
        assert!((got - want).norm() <= 1e-9 * (1.0 + want.norm()));
    }
    pass("08 sphere extraction (1000 tuples vs circumsphere <= 1e-9; pseudoscalar relation <= 1e-9)");
}

#[test]
fn acceptance_09_plane_extraction() {
    let tol = Tolerance::default();
    let mut rng = rng(9);
    let mut count = 0;
    while count < 1000 {
        let (a, b, c) = (
            oracle::random_point(&mut rng),
            oracle::random_point(&mut rng),
            oracle::random_point(&mut rng),
        );
        let Ok((support, _)) = plane_support(a, b, c) else {
            continue;
        };
        count += 1;
        let plane = Plane::through(&embed(a), &embed(b), &embed(c), tol).unwrap();
        let data = plane.data(tol).unwrap();
        let scale = 1.0 + support.norm();
        assert!((data.d - support).norm() <= 1e-9 * scale);
        let contraction = Multivector::from_euclid_vector(data.d)
            .left_contract(&Multivector::from_euclid_bivector(data.ip));
        assert!(contraction.norm() <= 1e-9 * scale);
    }

    // Origin-in-plane configurations return d = 0.
    let mut origin_cases = 0;
    while origin_cases < 100 {
        let a = oracle::random_point(&mut rng);
        let b = oracle::random_point(&mut rng);
        let c = a * rng.random_range(-2.0..2.0) + b * rng.random_range(-2.0..2.0);
        let Ok(plane) = Plane::through(&embed(a), &embed(b), &embed(c), tol) else {
            continue;
        };
        origin_cases += 1;
        let data = plane.data(tol).unwrap();
        assert!(data.d.norm() <= 1e-9 * (1.0 + a.norm() + b.norm()));
    }
    pass("09 plane extraction (1000 supports <= 1e-9; d _| Ip; origin-in-plane d = 0)");
}

#[test]
fn acceptance_10_extraction_homogeneity() {
    let tol = Tolerance::default();
    let mut rng = rng(10);
    let mut count = 0;
    while count < 250 {
        let lambda = {
            let mag = rng.random_range(0.1..10.0);
            if rng.random_bool(0.5) {
                -mag
            } else {
                mag
            }
        };
        let (a, b, c, d) = (
            oracle::random_point(&mut rng),
            oracle::random_point(&mut rng),
            oracle::random_point(&mut rng),
            oracle::random_point(&mut rng),
        );
        let (Ok(pair), Ok(circle), Ok(plane), Ok(sphere)) = (
            PointPair::through(&embed(a), &embed(b), tol),
            Circle::through(&embed(a), &embed(b), &embed(c), tol),
            Plane::through(&embed(a), &embed(b), &embed(c), tol),
            Sphere::through(&embed(a), &embed(b), &embed(c), &embed(d), tol),
        ) else {
            continue;
        };
        count += 1;

        let (base, _) = pair.split(tol).unwrap();
        let scaled = PointPair::try_new(*pair.multivector() * lambda, tol).unwrap();
        let (got, _) = scaled.split(tol).unwrap();
        assert!((got.p1 - base.p1).norm() <= 1e-9 * (1.0 + base.p1.norm()));
        assert!((got.p2 - base.p2).norm() <= 1e-9 * (1.0 + base.p2.norm()));
        assert!((got.phat - base.phat).norm() <= 1e-9);

        let base = circle.data(tol).unwrap();
        let got = Circle::try_new(*circle.multivector() * lambda, tol)
            .unwrap()
            .data(tol)
            .unwrap();
        assert!((got.c - base.c).norm() <= 1e-9 * (1.0 + base.c.norm()));
        assert!((got.r - base.r).abs() <= 1e-9 * (1.0 + base.r));
        assert!((got.ic - base.ic).norm() <= 1e-9);

        let base = plane.data(tol).unwrap();
        let got = Plane::try_new(*plane.multivector() * lambda, tol)
            .unwrap()
            .data(tol)
            .unwrap();
        assert!((got.d - base.d).norm() <= 1e-9 * (1.0 + base.d.norm()));
        assert!((got.ip - base.ip).norm() <= 1e-9);

        let base = sphere.data(tol).unwrap();
        let got = Sphere::try_new(*sphere.multivector() * lambda, tol)
            .unwrap()
            .data(tol)
            .unwrap();
        assert!((got.c - base.c).norm() <= 1e-9 * (1.0 + base.c.norm()));
        assert!((got.r - base.r).abs() <= 1e-9 * (1.0 + base.r));
    }
    pass("10 homogeneity (250 objects x random lambda != 0, all extracted data identical <= 1e-9)");
}

#[test]
fn acceptance_11_alternative_parametrizations() {
    let tol = Tolerance::default();
    let mut rng = rng(11);

    // Center-radius pair form reproduces the join.
    let mut count = 0;
    while count < 200 {
        let p = oracle::random_point(&mut rng);
        let q = oracle::random_point(&mut rng);
        if (p - q).norm() < 1e-3 {
            continue;
        }
        count += 1;
        let pair = PointPair::through(&embed(p), &embed(q), tol).unwrap();
        let (data, _) = pair.split(tol).unwrap();
        let rebuilt = PointPair::from_data(&data, tol).unwrap();
        assert!(same_object(rebuilt.multivector(), pair.multivector(), tol));
    }

    // Point-direction line form, anchored anywhere on the line.
    let mut count = 0;
    while count < 200 {
        let p = oracle::random_point(&mut rng);
        let q = oracle::random_point(&mut rng);
        if (p - q).norm() < 1e-3 {
            continue;
        }
        count += 1;
        let line = Line::through(&embed(p), &embed(q), tol).unwrap();
        let anchor = p + (q - p) * rng.random_range(-3.0..3.0);
        let phat = (q - p).normalized().unwrap();
        let weight = rng.random_range(0.2..4.0);
        let alt = Line::from_point_direction(&embed(anchor), phat, weight, tol).unwrap();
        assert!(same_object(alt.multivector(), line.multivector(), tol));
    }

    // Point-bivector plane form, anchored anywhere on the plane.
    let mut count = 0;
    while count < 200 {
        let (a, b, c) = (
            oracle::random_point(&mut rng),
            oracle::random_point(&mut rng),
            oracle::random_point(&mut rng),
        );
        let Ok(plane) = Plane::through(&embed(a), &embed(b), &embed(c), tol) else {
            continue;
        };
        count += 1;
        let anchor = a
            + (b - a) * rng.random_range(-2.0..2.0)
            + (c - a) * rng.random_range(-2.0..2.0);
        let bivector = (b - a).wedge(c - a);
        let alt = Plane::from_point_bivector(&embed(anchor), bivector, tol).unwrap();
        assert!(same_object(alt.multivector(), plane.multivector(), tol));
    }
    pass("11 alternative parametrizations (3 forms x 200 instances, same_object)");
}

#[test]
fn acceptance_12_cli_end_to_end() {
    let start = Instant::now();
    let testdata = Path::new(env!("CARGO_MANIFEST_DIR")).join("testdata");
    let bin = env!("CARGO_BIN_EXE_cga");

    let out = Command::new(bin)
        .args(["inspect", "circle", "--points"])
        .arg(testdata.join("circle.txt"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("center = (0, 0, 0)"));
    assert!(text.contains("radius = 1"));
    assert!(text.contains("plane = e1^e2"));

    let out = Command::new(bin)
        .args(["inspect", "sphere", "--points"])
        .arg(testdata.join("sphere.txt"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("center = (1, 0, 0)"));
    assert!(text.contains("radius = 1"));

    let out = Command::new(bin)
        .args(["inspect", "line", "--points"])
        .arg(testdata.join("line_degenerate.txt"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = Command::new(bin)
        .args(["selfcheck", "--seed", "271828", "--iters", "1000"])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "selfcheck failed:\n{}",
        String::from_utf8_lossy(&out.stdout)
    );

    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "CLI end-to-end took {elapsed:?}, budget is 30 s"
    );
    pass("12 CLI end-to-end (corpus inspections verified, selfcheck exit 0, < 30 s)");
}
