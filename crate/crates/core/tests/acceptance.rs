//! Acceptance gate: the nine headline criteria, each printed as a single
//! pass/fail line. All criteria run at the default configuration
//! (1000 trials per suite, seed 42, tolerances 1e-8).

use std::process::Command;

use isotet::geom3::Vec3;
use isotet::harness::{gen, run_suite, TrialConfig};
use isotet::quadric::{hpar_residual_canonical, pedal_distance_identity};
use isotet::tetra::{canonical_embedding, quantities, BimedianAxis, IsoscelesParams, VertexId};

fn rel(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs()
}

fn suites_pass(ids: &[&str]) -> Result<(), String> {
    let cfg = TrialConfig::default();
    for id in ids {
        let r = run_suite(id, &cfg).map_err(|e| format!("{id}: {e}"))?;
        if !r.passed || r.failures != 0 {
            return Err(format!(
                "{id}: failures={} max_residual={:.3e} {}",
                r.failures, r.max_residual, r.residual_unit
            ));
        }
    }
    Ok(())
}

fn outward_normal(t: &isotet::tetra::Tetrahedron, opposite: VertexId) -> Vec3 {
    let plane = t.face_plane(opposite);
    if plane.signed_distance(t.vertex(opposite)) > 0.0 {
        -plane.normal()
    } else {
        plane.normal()
    }
}

/// Golden quantities for (1, 2, 3), each cross-checked by an independent
/// geometric oracle built from the embedding.
fn criterion_1() -> Result<(), String> {
    let p = IsoscelesParams::new(1.0, 2.0, 3.0).map_err(|e| e.to_string())?;
    let q = quantities(&p);
    let golden = [
        ("S", q.face_area, 14.0),
        ("d", q.center_face_distance, 6.0 / 7.0),
        ("sin", q.sin_half_dihedral, 2.0 / 7.0),
    ];
    for (name, got, want) in golden {
        if rel(got, want) > 1e-12 {
            return Err(format!("{name}: got {got}, want {want}"));
        }
    }
    let t = canonical_embedding(&p);
    let [fa, fb, fc] = t.face_vertices(VertexId::A);
    let (x, y, z) = (fa.dist(fb), fb.dist(fc), fc.dist(fa));
    let s = (x + y + z) / 2.0;
    let heron = (s * (s - x) * (s - y) * (s - z)).sqrt();
    if rel(q.face_area, heron) > 1e-12 {
        return Err(format!("Heron oracle: {heron}"));
    }
    let dist = t.face_plane(VertexId::A).distance_to_point(Vec3::new(0.0, 0.0, 0.0));
    if rel(q.center_face_distance, dist) > 1e-12 {
        return Err(format!("plane-distance oracle: {dist}"));
    }
    let cos = outward_normal(&t, VertexId::A)
        .dot(outward_normal(&t, VertexId::B))
        .clamp(-1.0, 1.0);
    let half = (std::f64::consts::PI - cos.acos()) / 2.0;
    if rel(q.sin_half_dihedral, half.sin()) > 1e-12 {
        return Err(format!("dihedral oracle: {}", half.sin()));
    }
    Ok(())
}

/// Congruent acute faces and coincident circumcenter/incenter over 1000
/// posed isosceles tetrahedra.
fn criterion_2() -> Result<(), String> {
    suites_pass(&["P2.1i", "P2.1ii", "P2.1iii"])
}

/// Involution, eight-feet pedal sphere, diametral feet, and the
/// six-dihedral test, over general (including non-isosceles) tetrahedra.
fn criterion_3() -> Result<(), String> {
    suites_pass(&["T3.1", "C3.3", "C3.4"])
}

/// Inversive toolkit: angle preservation, bisector spheres, planar
/// homothety-center identification, equal-angle sphere.
fn criterion_4() -> Result<(), String> {
    suites_pass(&["P4.1", "P4.2", "P4.3i", "P4.3ii", "P4.4"])
}

/// Saddle surfaces forward and converse, the pedal-distance identity, and
/// which lines/points lie on which surface.
fn criterion_5() -> Result<(), String> {
    suites_pass(&["T5.4fwd", "T5.4conv"])?;

    // The quarter-difference of squared foot distances for the axis-C
    // surface equals x0*y0/(ab) + z0/c.
    let p123 = IsoscelesParams::new(1.0, 2.0, 3.0).map_err(|e| e.to_string())?;
    if (pedal_distance_identity(&p123, Vec3::new(1.0, 1.0, 0.0)) - 0.5).abs() > 1e-12 {
        return Err("identity at (1,1,0) is not 1/2".into());
    }
    let on_surface = Vec3::new(0.4, 0.7, -1.5 * 0.4 * 0.7);
    if pedal_distance_identity(&p123, on_surface).abs() > 1e-12 {
        return Err("identity nonzero on the surface".into());
    }
    let cfg = TrialConfig::default();
    let mut checked = 0;
    for trial in 0..400 {
        let mut rng = gen::trial_rng(7, trial);
        let params = gen::gen_params(&mut rng, &cfg);
        let r = params.circumradius();
        let q = gen::gen_vec_in_box(&mut rng, 1.5 * r);
        let closed = q.x * q.y / (params.a * params.b) + q.z / params.c;
        if closed.abs() < 1e-3 {
            continue;
        }
        checked += 1;
        let err = rel(pedal_distance_identity(&params, q), closed);
        if err > 1e-10 {
            return Err(format!("identity off by {err:.3e} (trial {trial})"));
        }
    }
    if checked < 200 {
        return Err("identity sampler starved".into());
    }

    // Every vertex lies on all three surfaces; each bimedian lies exactly on
    // the two surfaces of the other axes and off its own.
    for trial in 0..50u64 {
        let mut rng = gen::trial_rng(11, trial);
        let params = gen::gen_params(&mut rng, &cfg);
        let r = params.circumradius();
        let t = canonical_embedding(&params);
        for axis in BimedianAxis::ALL {
            for v in t.vertices() {
                if hpar_residual_canonical(&params, axis, v).abs() > 1e-12 * r {
                    return Err(format!("vertex off surface {axis:?}"));
                }
            }
        }
        let dir = |axis: BimedianAxis| match axis {
            BimedianAxis::A => Vec3::new(1.0, 0.0, 0.0),
            BimedianAxis::B => Vec3::new(0.0, 1.0, 0.0),
            BimedianAxis::C => Vec3::new(0.0, 0.0, 1.0),
        };
        for surface in BimedianAxis::ALL {
            for line in BimedianAxis::ALL {
                for step in -10..=10 {
                    let q = dir(line) * (0.2 * r * step as f64);
                    let res = hpar_residual_canonical(&params, surface, q).abs();
                    if line == surface {
                        if step != 0 && res < 0.1 * (0.2 * r * step as f64).abs() {
                            return Err(format!("axis {line:?} lies on its own surface"));
                        }
                    } else if res > 1e-12 * r {
                        return Err(format!("bimedian {line:?} off surface {surface:?}"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Tangency determinant factorization and the touch predicate on and off
/// the surface.
fn criterion_6() -> Result<(), String> {
    suites_pass(&["P5.6"])
}

/// Conjugates of on-sphere points stay on the sphere; planar contrast
/// escapes to infinity.
fn criterion_7() -> Result<(), String> {
    suites_pass(&["T6.1"])
}

/// Three-axis two-circle constructions agree with the direct conjugate,
/// tangent fallback included.
fn criterion_8() -> Result<(), String> {
    suites_pass(&["P6.2"])
}

/// Repeated `isotet verify --suite all --seed 42` is byte-identical.
fn criterion_9() -> Result<(), String> {
    let dir = std::env::temp_dir();
    let stem = format!("isotet-acceptance-{}", std::process::id());
    let paths = [dir.join(format!("{stem}-1.json")), dir.join(format!("{stem}-2.json"))];
    let mut stdouts = Vec::new();
    for path in &paths {
        let output = Command::new(env!("CARGO_BIN_EXE_isotet"))
            .args(["verify", "--suite", "all", "--seed", "42", "--json"])
            .arg(path)
            .output()
            .map_err(|e| format!("spawn: {e}"))?;
        if !output.status.success() {
            return Err(format!("verify exited with {:?}", output.status.code()));
        }
        stdouts.push(output.stdout);
    }
    let bodies: Vec<Vec<u8>> = paths
        .iter()
        .map(|p| std::fs::read(p).map_err(|e| format!("read {}: {e}", p.display())))
        .collect::<Result<_, _>>()?;
    for p in &paths {
        let _ = std::fs::remove_file(p);
    }
    if bodies[0] != bodies[1] {
        return Err("JSON reports differ between runs".into());
    }
    if stdouts[0] != stdouts[1] {
        return Err("stdout differs between runs".into());
    }
    if !bodies[0].starts_with(b"[{\"suite\":\"P2.1i\"") {
        return Err("report array does not open with the first suite".into());
    }
    Ok(())
}

type Criterion = fn() -> Result<(), String>;

#[test]
fn acceptance() {
    let criteria: [(&str, Criterion); 9] = [
        ("golden quantities (1,2,3) with independent oracles", criterion_1),
        ("congruent acute faces, circumcenter = incenter", criterion_2),
        ("involution, pedal sphere, diametral feet, six dihedra", criterion_3),
        ("inversion angles, bisector spheres, homothety centers", criterion_4),
        ("saddle surfaces fwd/conv, pedal identity, rulings", criterion_5),
        ("tangency determinant factorization and predicate", criterion_6),
        ("on-sphere conjugates stay on-sphere; planar contrast", criterion_7),
        ("three-axis constructions match direct conjugate", criterion_8),
        ("byte-identical repeated verify --suite all --seed 42", criterion_9),
    ];
    let mut all_ok = true;
    for (i, (label, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(()) => println!("criterion {}: PASS — {label}", i + 1),
            Err(why) => {
                all_ok = false;
                println!("criterion {}: FAIL — {label}: {why}", i + 1);
            }
        }
    }
    assert!(all_ok, "one or more acceptance criteria failed");
}
