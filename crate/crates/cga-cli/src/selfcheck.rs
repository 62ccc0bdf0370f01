//! Oracle agreement suites behind `cga selfcheck`: reruns the brute-force
//! cross-checks with a caller-chosen seed and iteration count.

use cga::oracle::{
    self, cayley_check, circumcircle, circumsphere, expanded_circle_trivector,
    pair_solve_bruteforce, plane_support, SampledCircle, SampledSphere,
};
use cga::{incident, Circle, ConformalPoint, Plane, PointPair, Sphere, Tolerance, Vec3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Suite = fn(u64, usize) -> Result<String, String>;

pub fn run(seed: u64, iters: usize) -> bool {
    let mut all_ok = true;
    let suites: [(&str, Suite); 7] = [
        ("cayley-table", check_cayley),
        ("pair-split-vs-quadratic", check_pair_agreement),
        ("circumcircle", check_circles),
        ("circumsphere", check_spheres),
        ("plane-support", check_planes),
        ("circle-expansion", check_expansion),
        ("sampler-incidence", check_samplers),
    ];
    for (name, suite) in suites {
        match suite(seed, iters) {
            Ok(detail) => println!("ok {name}: {detail}"),
            Err(detail) => {
                all_ok = false;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    all_ok
}

fn embed(p: Vec3) -> ConformalPoint {
    ConformalPoint::embed(p)
}

fn check_cayley(_seed: u64, _iters: usize) -> Result<String, String> {
    let mismatches = cayley_check();
    if mismatches.is_empty() {
        Ok("1024 blade products, 0 mismatches".to_string())
    } else {
        Err(format!("{} mismatched blade products", mismatches.len()))
    }
}

fn check_pair_agreement(seed: u64, iters: usize) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tol = Tolerance::default();
    let mut real = 0;
    while real < iters {
        let p = oracle::random_point(&mut rng);
        let q = if real % 4 == 0 {
            oracle::random_unit(&mut rng) * p.norm()
        } else {
            oracle::random_point(&mut rng)
        };
        if (p - q).norm() < 1e-6 || p.norm() < 1e-3 {
            continue;
        }
        real += 1;
        let pair = PointPair::through(&embed(p), &embed(q), tol)
            .map_err(|e| format!("join failed: {e}"))?;
        let (data, _) = pair
            .split(tol)
            .map_err(|e| format!("split failed on a real pair: {e}"))?;
        let (b1, b2) = pair_solve_bruteforce(pair.multivector(), tol)
            .map_err(|e| format!("quadratic solver failed on a real pair: {e}"))?;
        let err = ((data.p1 - b1).norm() + (data.p2 - b2).norm())
            .min((data.p1 - b2).norm() + (data.p2 - b1).norm());
        if err > 1e-9 * (1.0 + p.norm() + q.norm()) {
            return Err(format!("point sets differ by {err:.3e}"));
        }
    }

    let virtuals = (iters / 10).max(10);
    for _ in 0..virtuals {
        let mv = oracle::virtual_pair(
            oracle::random_point(&mut rng),
            oracle::random_unit(&mut rng),
            -rng.random_range(0.05..25.0),
            rng.random_range(0.2..3.0),
        );
        let split_imaginary = PointPair::try_new(mv, tol)
            .map(|pair| pair.split(tol).is_err())
            .unwrap_or(false);
        let brute_imaginary = pair_solve_bruteforce(&mv, tol).is_err();
        if !(split_imaginary && brute_imaginary) {
            return Err("virtual pair not classified imaginary by both solvers".to_string());
        }
    }
    Ok(format!("{real} real + {virtuals} virtual pairs agree"))
}

fn check_circles(seed: u64, iters: usize) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1);
    let tol = Tolerance::default();
    let mut checked = 0;
    while checked < iters {
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
        checked += 1;
        let data = Circle::through(&embed(a), &embed(b), &embed(c), tol)
            .and_then(|circle| circle.data(tol))
            .map_err(|e| format!("extraction failed: {e}"))?;
        let scale = 1.0 + fit.center.norm() + fit.radius;
        if (data.c - fit.center).norm() > 1e-9 * scale
            || (data.r - fit.radius).abs() > 1e-9 * scale
        {
            return Err(format!(
                "center/radius disagree: got ({}, {}), fit ({}, {})",
                data.c, data.r, fit.center, fit.radius
            ));
        }
    }
    Ok(format!("{checked} random circles agree"))
}

fn check_spheres(seed: u64, iters: usize) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x2);
    let tol = Tolerance::default();
    let mut checked = 0;
    while checked < iters {
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
        checked += 1;
        let data = Sphere::through(&embed(a), &embed(b), &embed(c), &embed(d), tol)
            .and_then(|sphere| sphere.data(tol))
            .map_err(|e| format!("extraction failed: {e}"))?;
        let scale = 1.0 + fit.center.norm() + fit.radius;
        if (data.c - fit.center).norm() > 1e-9 * scale
            || (data.r - fit.radius).abs() > 1e-9 * scale
        {
            return Err("center/radius disagree".to_string());
        }
    }
    Ok(format!("{checked} random spheres agree"))
}

fn check_planes(seed: u64, iters: usize) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x3);
    let tol = Tolerance::default();
    let mut checked = 0;
    while checked < iters {
        let (a, b, c) = (
            oracle::random_point(&mut rng),
            oracle::random_point(&mut rng),
            oracle::random_point(&mut rng),
        );
        let Ok((support, _)) = plane_support(a, b, c) else {
            continue;
        };
        checked += 1;
        let data = Plane::through(&embed(a), &embed(b), &embed(c), tol)
            .and_then(|plane| plane.data(tol))
            .map_err(|e| format!("extraction failed: {e}"))?;
        if (data.d - support).norm() > 1e-9 * (1.0 + support.norm()) {
            return Err("support vectors disagree".to_string());
        }
    }
    Ok(format!("{checked} random planes agree"))
}

fn check_expansion(seed: u64, iters: usize) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x4);
    for _ in 0..iters {
        let (a, b, c) = (
            oracle::random_point(&mut rng),
            oracle::random_point(&mut rng),
            oracle::random_point(&mut rng),
        );
        let wedge = embed(a)
            .multivector()
            .wedge(embed(b).multivector())
            .wedge(embed(c).multivector());
        let diff = (expanded_circle_trivector(a, b, c) - wedge).norm();
        if diff > 1e-12 * wedge.norm().max(1.0) {
            return Err(format!("expansion differs from the wedge by {diff:.3e}"));
        }
    }
    Ok(format!("{iters} trivector expansions match the wedge"))
}

fn check_samplers(seed: u64, _iters: usize) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5);
    let tol = Tolerance::default();
    for _ in 0..20 {
        let sample = SampledCircle::uniform(
            oracle::random_point(&mut rng) * 0.3,
            rng.random_range(0.5..5.0),
            oracle::random_unit_bivector(&mut rng),
            16,
        )
        .map_err(|e| e.to_string())?;
        let pts = sample.conformal_points();
        let circle = Circle::through(&pts[0], &pts[5], &pts[11], tol)
            .map_err(|e| format!("sampled circle join failed: {e}"))?;
        if !pts.iter().all(|p| incident(circle.multivector(), p, tol)) {
            return Err("sampled circle point not incident".to_string());
        }
        let data = circle.data(tol).map_err(|e| e.to_string())?;
        let scale = 1.0 + sample.center.norm() + sample.radius;
        if (data.c - sample.center).norm() > 1e-9 * scale
            || (data.r - sample.radius).abs() > 1e-9 * scale
        {
            return Err("sampled circle data mismatch".to_string());
        }

        let sphere_sample = SampledSphere::new(
            oracle::random_point(&mut rng) * 0.3,
            rng.random_range(0.5..5.0),
            (0..4).map(|_| oracle::random_unit(&mut rng)).collect(),
        )
        .map_err(|e| e.to_string())?;
        let dirs = &sphere_sample.directions;
        let triple = (dirs[0] - dirs[1]).dot((dirs[1] - dirs[2]).cross(dirs[2] - dirs[3]));
        if triple.abs() < 0.05 {
            continue;
        }
        let pts = sphere_sample.conformal_points();
        let sphere = Sphere::through(&pts[0], &pts[1], &pts[2], &pts[3], tol)
            .map_err(|e| format!("sampled sphere join failed: {e}"))?;
        let data = sphere.data(tol).map_err(|e| e.to_string())?;
        let scale = 1.0 + sphere_sample.center.norm() + sphere_sample.radius;
        if (data.c - sphere_sample.center).norm() > 1e-9 * scale
            || (data.r - sphere_sample.radius).abs() > 1e-9 * scale
        {
            return Err("sampled sphere data mismatch".to_string());
        }
    }
    Ok("sampled circles and spheres reproduce their data".to_string())
}
