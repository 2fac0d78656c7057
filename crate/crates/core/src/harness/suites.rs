//! One verification suite per checked statement. Each trial draws its own
//! configuration from its RNG stream, checks the statement's bounds, and
//! reports a residual; the suite aggregates failures and the worst residual.
//!
//! Samplers reject inputs inside small guard bands around the degenerate
//! sets (vertices, edge lines, faceplanes, circumcircles, symmetry axes):
//! the statements under test quantify over generic configurations, and the
//! guard bands keep every trial numerically well-posed without weakening
//! the checked bounds.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::circlesphere::{
    arc_midpoint_circles, bisector_spheres, circle_angle, homothety_bisector_sphere,
    homothety_centers, planar_isogonal_conjugate, sphere_angle, Inversion, PlanarConjugate,
    SphereOrPlane,
};
use crate::geom3::{plane_basis, Circle3, Sphere, Tolerance, Vec3, ORIGIN};
use crate::isogonal::{
    dihedral_isogonality_residual, face_projections, is_isogonal_pair, isogonal_conjugate,
    pedal_sphere, ConjugateResult,
};
use crate::quadric::{
    circles_touch, conjugate_pair_on_hpar, equidistant_projection_residual, hpar, hpar_residual,
    hpar_residual_canonical, point_on_sphere_and_hpar, tangency_det,
};
use crate::tetra::{
    canonical_embedding, circumsphere, faces_acute, max_face_angle, quantities, tetra_tolerance,
    BimedianAxis, CanonicalFrame, EdgeId, IsoscelesParams, Tetrahedron, VertexId,
};

use super::gen::{
    gen_general_tetra, gen_intersecting_spheres, gen_isosceles, gen_params, gen_point_on_sphere,
    gen_triangle, gen_unit_vec, gen_vec_in_box,
};
use super::{report, run_trials, TrialConfig, TrialOutcome, VerificationReport};

pub(super) const SUITE_IDS: &[&str] = &[
    "P2.1i", "P2.1ii", "P2.1iii", "T3.1", "C3.3", "C3.4", "P4.1", "P4.2", "P4.3i", "P4.3ii",
    "P4.4", "P5.1", "L5.3", "T5.4fwd", "T5.4conv", "P5.6", "T6.1", "P6.2",
];

type SuiteFn = fn(&TrialConfig, bool) -> VerificationReport;

pub(super) fn dispatch(id: &str) -> Option<SuiteFn> {
    Some(match id {
        "P2.1i" => p2_1i,
        "P2.1ii" => p2_1ii,
        "P2.1iii" => p2_1iii,
        "T3.1" => t3_1,
        "C3.3" => c3_3,
        "C3.4" => c3_4,
        "P4.1" => p4_1,
        "P4.2" => p4_2,
        "P4.3i" => p4_3i,
        "P4.3ii" => p4_3ii,
        "P4.4" => p4_4,
        "P5.1" => p5_1,
        "L5.3" => l5_3,
        "T5.4fwd" => t5_4fwd,
        "T5.4conv" => t5_4conv,
        "P5.6" => p5_6,
        "T6.1" => t6_1,
        "P6.2" => p6_2,
        _ => return None,
    })
}

const SAMPLER_ATTEMPTS: usize = 100_000;

/// Fold an angle difference to account for the two tangent-plane branches.
fn angle_gap(x: f64, y: f64) -> f64 {
    (x - y).abs().min((x + y - PI).abs())
}

fn min_vertex_distance(t: &Tetrahedron, p: Vec3) -> f64 {
    t.vertices().iter().map(|v| v.dist(p)).fold(f64::INFINITY, f64::min)
}

/// A point with clearance from every vertex, faceplane, and edge line, so
/// its conjugate is an ordinary point and all six dihedral residuals are
/// well-conditioned; the conjugate is required to be equally healthy.
fn conjugate_pair_sample(
    rng: &mut ChaCha8Rng,
    t: &Tetrahedron,
    tol: &Tolerance,
) -> (Vec3, Vec3) {
    let l = t.max_edge_length();
    let centroid = t.centroid();
    let clear = |p: Vec3, band: f64| {
        min_vertex_distance(t, p) >= 10.0 * band
            && VertexId::ALL
                .iter()
                .all(|&v| t.face_plane(v).distance_to_point(p) >= band)
            && EdgeId::ALL
                .iter()
                .all(|&e| t.edge_line(e).distance_to_point(p) >= band)
    };
    for _ in 0..SAMPLER_ATTEMPTS {
        let p = centroid + gen_vec_in_box(rng, 0.7 * l);
        if !clear(p, 1e-3 * l) {
            continue;
        }
        let q = match isogonal_conjugate(t, p, tol) {
            ConjugateResult::Point(q) => q,
            _ => continue,
        };
        if q.dist(centroid) > 10.0 * l || !clear(q, 1e-3 * l) {
            continue;
        }
        return (p, q);
    }
    unreachable!("conjugate pair sampler exhausted")
}

/// Alternate unconstrained and isosceles tetrahedra across trials.
fn mixed_tetra(rng: &mut ChaCha8Rng, cfg: &TrialConfig, trial: u64) -> Tetrahedron {
    if trial.is_multiple_of(2) {
        gen_general_tetra(rng)
    } else {
        gen_isosceles(rng, cfg).0
    }
}

fn max_dihedral_residual(t: &Tetrahedron, p: Vec3, q: Vec3) -> f64 {
    EdgeId::ALL
        .iter()
        .map(|&e| dihedral_isogonality_residual(t, e, p, q).unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max)
}

// --- Congruent faces / coincident centers / acute faces ---------------------

fn congruence_residual(t: &Tetrahedron) -> f64 {
    let triples: Vec<[f64; 3]> = VertexId::ALL
        .iter()
        .map(|&v| {
            let [p, q, s] = t.face_vertices(v);
            let mut tr = [p.dist(q), q.dist(s), s.dist(p)];
            tr.sort_by(f64::total_cmp);
            tr
        })
        .collect();
    let mut worst: f64 = 0.0;
    for i in 0..triples.len() {
        for j in i + 1..triples.len() {
            for (x, y) in triples[i].iter().zip(&triples[j]) {
                worst = worst.max((x - y).abs());
            }
        }
    }
    worst
}

fn p2_1i(cfg: &TrialConfig, parallel: bool) -> VerificationReport {
    let (failures, max_r) = run_trials(cfg, parallel, |_, rng| {
        let (t, frame) = gen_isosceles(rng, cfg);
        let res = congruence_residual(&t) / frame.params.circumradius();
        let ok = crate::tetra::faces_congruent(&t, &tetra_tolerance(&t));
        TrialOutcome::new(res, ok && res <= cfg.tol_pos)
    });
    report("P2.1i", cfg, failures, max_r, "length/R")
}

fn p2_1ii(cfg: &TrialConfig, parallel: bool) -> VerificationReport {
    let (failures, max_r) = run_trials(cfg, parallel, |_, rng| {
        let (t, frame) = gen_isosceles(rng, cfg);
        let o = crate::tetra::circumcenter(&t).expect("isosceles tetrahedron");
        let res = o.dist(crate::tetra::incenter(&t)) / frame.params.circumradius();
        TrialOutcome::bounded(res, cfg.tol_pos)
    });
    report("P2.1ii", cfg, failures, max_r, "length/R")
}

fn p2_1iii(cfg: &TrialConfig, parallel: bool) -> VerificationReport {
    let (failures, max_r) = run_trials(cfg, parallel, |_, rng| {
        let (t, _) = gen_isosceles(rng, cfg);
        let res = (max_face_angle(&t) - FRAC_PI_2).max(0.0);
        TrialOutcome::new(res, faces_acute(&t, &tetra_tolerance(&t)) && res <= cfg.tol_ang)
    });
    report("P2.1iii", cfg, failures, max_r, "radians")
}

// --- Conjugate construction: involution and the six-dihedral test -----------

fn t3_1(cfg: &TrialConfig, parallel: bool) -> VerificationReport {
    let (failures, max_r) = run_trials(cfg, parallel, |i, rng| {
        let t = mixed_tetra(rng, cfg, i);
        let r = circumsphere(&t).expect("well-conditioned tetrahedron").radius;
        let tol = tetra_tolerance(&t);
        let (p, q) = conjugate_pair_sample(rng, &t, &tol);
        let back = match isogonal_conjugate(&t, q, &tol) {
            ConjugateResult::Point(b) => b,
            _ => return TrialOutcome::new(f64::INFINITY, false),
        };
        let inv_res = back.dist(p) / r;
        let dihed = max_dihedral_residual(&t, p, q);
        let pair_tol = Tolerance::new(cfg.tol_ang, r).expect("valid tolerance");
        let ok = inv_res <= cfg.tol_pos
            && dihed <= cfg.tol_ang
            && is_isogonal_pair(&t, p, q, &pair_tol);
        TrialOutcome::new(inv_res.max(dihed), ok)
    });
    report("T3.1", cfg, failures, max_r, "length/R")
}

fn c3_3(cfg: &TrialConfig, parallel: bool) -> VerificationReport {
    let (failures, max_r) = run_trials(cfg, parallel, |i, rng| {
        let t = mixed_tetra(rng, cfg, i);
        let r = circumsphere(&t).expect("well-conditioned tetrahedron").radius;
        let tol = tetra_tolerance(&t);
        let (p, q) = conjugate_pair_sample(rng, &t, &tol);
        let ps = match pedal_sphere(&t, p) {
            Ok(ps) => ps,
            Err(_) => return TrialOutcome::new(f64::INFINITY, false),
        };
        let res = ps
            .foot_points
            .iter()
            .chain(face_projections(&t, q).iter())
            .map(|f| (f.dist(ps.sphere.center) - ps.sphere.radius).abs())
            .fold(0.0, f64::max)
            / r;
        TrialOutcome::bounded(res, cfg.tol_pos)
    });
    report("C3.3", cfg, failures, max_r, "length/R")
}

fn c3_4(cfg: &TrialConfig, parallel: bool) -> VerificationReport {
    let (failures, max_r) = run_trials(cfg, parallel, |i, rng| {
        let t = mixed_tetra(rng, cfg, i);
        let r = circumsphere(&t).expect("well-conditioned tetrahedron").radius;
        let l = t.max_edge_length();
        let tol = tetra_tolerance(&t);
        let (p, q) = conjugate_pair_sample(rng, &t, &tol);
        let (sp, sq) = match (pedal_sphere(&t, p), pedal_sphere(&t, q)) {
            (Ok(sp), Ok(sq)) => (sp, sq),
            _ => return TrialOutcome::new(f64::INFINITY, false),
        };
        let mut res = sp.sphere.center.dist(sq.sphere.center).max(
            (sp.sphere.radius - sq.sphere.radius).abs(),
        );
        res = res.max(sp.sphere.center.dist(p.midpoint(q)));
        // Same-face feet are diametrically opposite in the section circle.
        for v in VertexId::ALL {
            let mid = sp.foot_points[v.index()].midpoint(sq.foot_points[v.index()]);
            res = res.max(mid.dist(t.face_plane(v).project_point(sp.sphere.center)));
        }
        let res = res / r;
        // Perturbed partners must *not* share the pedal sphere.
        let q2 = q + gen_unit_vec(rng) * (1e-3 * l);
        let perturbed_differs = match pedal_sphere(&t, q2) {
            Ok(s2) => {
                s2.sphere.center.dist(sp.sphere.center) > 1e-5 * r
                    || (s2.sphere.radius - sp.sphere.radius).abs() > 1e-5 * r
            }
            Err(_) => true,
        };
        TrialOutcome::new(res, res <= cfg.tol_pos && perturbed_differs)
    });
    report("C3.4", cfg, failures, max_r, "length/R")
}

// --- Inversion and equal-angle sphere constructions --------------------------

fn p4_1(cfg: &TrialConfig, parallel: bool) -> VerificationReport {
    let (failures, max_r) = run_trials(cfg, parallel, |_, rng| {
        let (u, v) = gen_intersecting_spheres(rng, false);
        let su = SphereOrPlane::Sphere(u);
        let sv = SphereOrPlane::Sphere(v);
        let before = sphere_angle(&su, &sv).expect("spheres intersect");
        let inv = loop {
            let c = gen_vec_in_box(rng, 4.0);
            let off = |s: &Sphere| {
                let d2 = (c - s.center).norm_sq();
                let r2 = s.radius * s.radius;
                (d2 - r2).abs() > 0.05 * (d2 + r2)
            };
            if off(&u) && off(&v) {
                let power = rng.random_range(0.5..3.0)
                    * if rng.random::<bool>() { 1.0 } else { -1.0 };
                break Inversion::new(c, power).expect("nonzero power");
            }
        };
        let iu = inv.invert_surface(&su).expect("center off the sphere");
        let iv = inv.invert_surface(&sv).expect("center off the sphere");
        let after = sphere_angle(&iu, &iv).expect("images intersect");
        TrialOutcome::bounded(angle_gap(before, after), cfg.tol_ang)
    });
    report("P4.1", cfg, failures, max_r, "radians")
}

fn p4_2(cfg: &TrialConfig, parallel: bool) -> VerificationReport {
    let (failures, max_r) = run_trials(cfg, parallel, |_, rng| {
        let radius = rng.random_range(0.5..2.5);
        let omega = Sphere::new(gen_vec_in_box(rng, 3.0), radius).expect("positive radius");
        let n = gen_unit_vec(rng);
        let offset = loop {
            let f: f64 = rng.random_range(-0.9..0.9);
            if f.abs() >= 0.05 {
                break f * radius;
            }
        };
        let sigma = Circle3::new(
            omega.center + n * offset,
            (radius * radius - offset * offset).sqrt(),
            n,
        )
        .expect("real circle");
        let spheres = bisector_spheres(&omega, &sigma).expect("circle on sphere, not great");
        let plane = SphereOrPlane::Plane(sigma.plane());
        let mut center_res: f64 = 0.0;
        let mut angle_res: f64 = 0.0;
        for g in spheres {
            center_res = center_res.max(omega.surface_residual(g.center) / radius);
            let sg = SphereOrPlane::Sphere(g);
            let a1 = sphere_angle(&sg, &SphereOrPlane::Sphere(omega)).expect("meets carrier");
            let a2 = sphere_angle(&sg, &plane).expect("meets section plane");
            angle_res = angle_res.max(angle_gap(a1, a2));
        }
        TrialOutcome::new(
            center_res.max(angle_res),
            center_res <= cfg.tol_pos && angle_res <= cfg.tol_ang,
        )
    });
    report("P4.2", cfg, failures, max_r, "radians")
}

/// Triangle, conjugate pair, and the two circles through one side and each
/// point of the pair — everything the planar statements quantify over.
struct PlanarSample {
    a: Vec3,
    b: Vec3,
    c: Vec3,
    circle_x: Circle3,
    circle_y: Circle3,
    circumcircle: Circle3,
}

fn planar_sample(rng: &mut ChaCha8Rng) -> PlanarSample {
    for _ in 0..SAMPLER_ATTEMPTS {
        let (a, b, c) = gen_triangle(rng);
        let l = a.dist(b).max(b.dist(c)).max(c.dist(a));
        let tol = Tolerance::with_scale(l).expect("positive scale");
        let circ = Circle3::through(a, b, c).expect("well-conditioned triangle");
        let centroid = (a + b + c) / 3.0;
        let verts = [a, b, c];
        let sideline_clear = |p: Vec3, band: f64| {
            [(a, b), (b, c), (c, a)].iter().all(|&(u, v)| {
                let dir = (v - u).normalized().expect("distinct vertices");
                let w = p - u;
                (w - dir * w.dot(dir)).norm() >= band
            })
        };
        'point: for _ in 0..200 {
            // Interior points only: the side-of-arc classification below is
            // the one the statement makes for points inside the triangle,
            // where the conjugate also stays inside.
            let (wa, wb) = (rng.random_range(0.0..1.0), rng.random_range(0.0..1.0));
            let wc: f64 = 1.0 - wa - wb;
            if wc < 0.05 || wa < 0.05 || wb < 0.05 {
                continue 'point;
            }
            let x = a * wa + b * wb + c * wc;
            if verts.iter().any(|v| v.dist(x) < 1e-2 * l)
                || !sideline_clear(x, 1e-2 * l)
                || (x.dist(circ.center) - circ.radius).abs() < 0.05 * l
            {
                continue 'point;
            }
            let y = match planar_isogonal_conjugate(a, b, c, x, &tol) {
                Ok(PlanarConjugate::Point(y)) => y,
                _ => continue 'point,
            };
            if y.dist(centroid) > 10.0 * l
                || verts.iter().any(|v| v.dist(y) < 1e-2 * l)
                || !sideline_clear(y, 1e-2 * l)
                || x.dist(y) < 1e-2 * l
            {
                continue 'point;
            }
            let circle_x = Circle3::through(a, b, x).expect("x off line ab");
            let circle_y = Circle3::through(a, b, y).expect("y off line ab");
            if (circle_x.radius - circle_y.radius).abs() < 1e-3 * l {
                continue 'point;
            }
            return PlanarSample { a, b, c, circle_x, circle_y, circumcircle: circ };
        }
    }
    unreachable!("planar sampler exhausted")
}

fn p4_3i(cfg: &TrialConfig, parallel: bool) -> VerificationReport {
    let (failures, max_r) = run_trials(cfg, parallel, |_, rng| {
        let s = planar_sample(rng);
        let l = s.a.dist(s.b).max(s.b.dist(s.c)).max(s.c.dist(s.a));
        let tol = Tolerance::with_scale(l).expect("positive scale");
        let arcs = arc_midpoint_circles(s.a, s.b, s.c).expect("well-conditioned triangle");
        let mut res: f64 = 0.0;
        for g in [&arcs.circle_m, &arcs.circle_n] {
            let ax = circle_angle(g, &s.circle_x, &tol).expect("circles share a and b");
            let ay = circle_angle(g, &s.circle_y, &tol).expect("circles share a and b");
            res = res.max(angle_gap(ax, ay));
        }
        TrialOutcome::bounded(res, cfg.tol_ang)
    });
    report("P4.3i", cfg, failures, max_r, "radians")
}

fn p4_3ii(cfg: &TrialConfig, parallel: bool) -> VerificationReport {
    let (failures, max_r) = run_trials(cfg, parallel, |_, rng| {
        let s = planar_sample(rng);
        let arcs = arc_midpoint_circles(s.a, s.b, s.c).expect("well-conditioned triangle");
        let sx = Sphere::new(s.circle_x.center, s.circle_x.radius).expect("real circle");
        let sy = Sphere::new(s.circle_y.center, s.circle_y.radius).expect("real circle");
        let h = homothety_centers(&sx, &sy).expect("distinct circles");
        let ext = h.external.expect("radii separated by the sampler");
        let res = ext.dist(arcs.n).max(h.internal.dist(arcs.m)) / s.circumcircle.radius;
        // Center-of-similitude identification tolerates a 10x margin: it
        // stacks two circumcenter constructions on top of the conjugate.
        TrialOutcome::bounded(res, 10.0 * cfg.tol_pos)
    });
    report("P4.3ii", cfg, failures, max_r, "length/R")
}

fn p4_4(cfg: &TrialConfig, parallel: bool) -> VerificationReport {
    let (failures, max_r) = run_trials(cfg, parallel, |_, rng| {
        let (u, v) = gen_intersecting_spheres(rng, true);
        let g = homothety_bisector_sphere(&u, &v).expect("intersecting, distinct radii");
        let sg = SphereOrPlane::Sphere(g);
        let au = sphere_angle(&sg, &SphereOrPlane::Sphere(u)).expect("meets first sphere");
        let av = sphere_angle(&sg, &SphereOrPlane::Sphere(v)).expect("meets second sphere");
        TrialOutcome::bounded(angle_gap(au, av), cfg.tol_ang)
    });
    report("P4.4", cfg, failures, max_r, "radians")
}

// --- Canonical quantities and the equidistant-projection property ------------

fn outward_normal(t: &Tetrahedron, opposite: VertexId) -> Vec3 {
    let plane = t.face_plane(opposite);
    if plane.signed_distance(t.vertex(opposite)) > 0.0 {
        -plane.normal()
    } else {
        plane.normal()
    }
}

fn quantity_residual(p: &IsoscelesParams) -> f64 {
    let q = quantities(p);
    let t = canonical_embedding(p);
    let [fa, fb, fc] = t.face_vertices(VertexId::A);
    let (x, y, z) = (fa.dist(fb), fb.dist(fc), fc.dist(fa));
    let s = (x + y + z) / 2.0;
    let heron = (s * (s - x) * (s - y) * (s - z)).sqrt();
    let area_res = (q.face_area - heron).abs() / heron;

    let dist = t.face_plane(VertexId::A).distance_to_point(ORIGIN);
    let dist_res = (q.center_face_distance - dist).abs() / dist;

    // Interior dihedral along CD from outward normals of the faces meeting
    // there; the tabulated value is the sine of its half.
    let cos = outward_normal(&t, VertexId::A)
        .dot(outward_normal(&t, VertexId::B))
        .clamp(-1.0, 1.0);
    let dihedral = PI - cos.acos();
    let sin_res = ((dihedral / 2.0).sin() - q.sin_half_dihedral).abs() / q.sin_half_dihedral;

    area_res.max(dist_res).max(sin_res)
}

fn p5_1(cfg: &TrialConfig, parallel: bool) -> VerificationReport {
    let (failures, max_r) = run_trials(cfg, parallel, |i, rng| {
        if i == 0 {
            // Closed-form values for the (1, 2, 3) parameters.
            let p = IsoscelesParams::new(1.0, 2.0, 3.0).expect("nonzero");
            let q = quantities(&p);
            let golden = [
                (q.face_area, 14.0),
                (q.center_face_distance, 6.0 / 7.0),
                (q.sin_half_dihedral, 2.0 / 7.0),
            ];
            let res = golden
                .iter()
                .map(|(got, want)| (got - want).abs() / want)
                .fold(0.0, f64::max)
                .max(quantity_residual(&p));
            return TrialOutcome::bounded(res, 1e-12);
        }
        let p = gen_params(rng, cfg);
        TrialOutcome::bounded(quantity_residual(&p), cfg.tol_pos)
    });
    report("P5.1", cfg, failures, max_r, "length/R")
}

fn l5_3(cfg: &TrialConfig, parallel: bool) -> VerificationReport {
    let (failures, max_r) = run_trials(cfg, parallel, |_, rng| {
        let (t, frame) = gen_isosceles(rng, cfg);
        let r = frame.params.circumradius();
        let x = frame.translation + gen_vec_in_box(rng, 1.5 * r);
        let res = BimedianAxis::ALL
            .iter()
            .map(|&axis| {
                equidistant_projection_residual(&t, axis, x).expect("isosceles tetrahedron")
            })
            .fold(0.0, f64::max)
            / r;
        TrialOutcome::bounded(res, cfg.tol_pos)
    });
    report("L5.3", cfg, failures, max_r, "length/R")
}

// --- The saddle surfaces of symmetric conjugate pairs ------------------------

/// Canonical point of the axis surface with clearance from the axis, the
/// four edge lines contained in the surface, and the vertices.
fn sample_surface_point(
    rng: &mut ChaCha8Rng,
    frame: &CanonicalFrame,
    axis: BimedianAxis,
) -> Vec3 {
    let p = frame.params;
    let r = p.circumradius();
    // The surface contains four edge lines; in the sampled coordinate pair
    // they sit at these constant values.
    let (h1, h2) = match axis {
        BimedianAxis::A => (p.b.abs(), p.c.abs()),
        BimedianAxis::B => (p.c.abs(), p.a.abs()),
        BimedianAxis::C => (p.a.abs(), p.b.abs()),
    };
    let k = match axis {
        BimedianAxis::A => p.a / (p.b * p.c),
        BimedianAxis::B => p.b / (p.c * p.a),
        BimedianAxis::C => p.c / (p.a * p.b),
    };
    let vertices = canonical_embedding(&p).vertices();
    let band = 1e-3 * r;
    for _ in 0..SAMPLER_ATTEMPTS {
        let u = rng.random_range(-1.2 * r..1.2 * r);
        let v = rng.random_range(-1.2 * r..1.2 * r);
        if (u.abs() - h1).abs() < band || (v.abs() - h2).abs() < band {
            continue;
        }
        if u * u + v * v < band * band {
            continue;
        }
        let w = -k * u * v;
        let q = match axis {
            BimedianAxis::C => Vec3::new(u, v, w),
            BimedianAxis::A => Vec3::new(w, u, v),
            BimedianAxis::B => Vec3::new(v, w, u),
        };
        if vertices.iter().any(|vv| vv.dist(q) < 1e-2 * r) {
            continue;
        }
        return q;
    }
    unreachable!("surface sampler exhausted")
}

fn axis_of_trial(i: u64) -> BimedianAxis {
    BimedianAxis::ALL[(i % 3) as usize]
}

fn t5_4fwd(cfg: &TrialConfig, parallel: bool) -> VerificationReport {
    let (failures, max_r) = run_trials(cfg, parallel, |i, rng| {
        let (t, frame) = gen_isosceles(rng, cfg);
        let axis = axis_of_trial(i);
        let p_world = frame.to_world(sample_surface_point(rng, &frame, axis));
        let tol = tetra_tolerance(&t);
        let (p, q) = conjugate_pair_on_hpar(&frame, axis, p_world, &tol)
            .expect("sampled on the surface, off the axis");
        let dihed = max_dihedral_residual(&t, p, q);
        let pair_tol =
            Tolerance::new(cfg.tol_ang, frame.params.circumradius()).expect("valid tolerance");
        TrialOutcome::new(dihed, dihed <= cfg.tol_ang && is_isogonal_pair(&t, p, q, &pair_tol))
    });
    report("T5.4fwd", cfg, failures, max_r, "radians")
}

fn t5_4conv(cfg: &TrialConfig, parallel: bool) -> VerificationReport {
    let (failures, max_r) = run_trials(cfg, parallel, |i, rng| {
        let (t, frame) = gen_isosceles(rng, cfg);
        let axis = axis_of_trial(i);
        let r = frame.params.circumradius();
        let p = frame.to_world(sample_surface_point(rng, &frame, axis));
        let tol = tetra_tolerance(&t);
        let q = match isogonal_conjugate(&t, p, &tol) {
            ConjugateResult::Point(q) => q,
            _ => return TrialOutcome::new(f64::INFINITY, false),
        };
        // Consistency filter: the pair must be symmetric in the bimedian
        // (the conjugate is computed independently of the surface).
        let sym_res = q.dist(t.bimedian(axis).reflect_point(p)) / t.max_edge_length();
        // The converse content: that independently computed conjugate lies
        // on the surface.
        let surf_res = hpar_residual(&hpar(&frame, axis), q).abs() / r;
        TrialOutcome::new(surf_res, sym_res <= 1e-6 && surf_res <= cfg.tol_pos)
    });
    report("T5.4conv", cfg, failures, max_r, "length/R")
}

fn p5_6(cfg: &TrialConfig, parallel: bool) -> VerificationReport {
    let (failures, max_r) = run_trials(cfg, parallel, |i, rng| {
        let p = gen_params(rng, cfg);
        let r = p.circumradius();
        let t = canonical_embedding(&p);
        let omega = Sphere::new(ORIGIN, r).expect("positive radius");
        let key_scale = r * r * r;
        let on_surface = i % 2 == 0;
        let q = 'sample: {
            for _ in 0..SAMPLER_ATTEMPTS {
                let q = if on_surface {
                    let s = rng.random_range(-0.95 * r..0.95 * r);
                    let branch = rng.random::<bool>();
                    match point_on_sphere_and_hpar(&p, BimedianAxis::C, s, branch) {
                        Some(q) => q,
                        None => continue,
                    }
                } else {
                    let q = gen_point_on_sphere(rng, &omega);
                    let key = (p.a * p.b * q.z + q.x * q.y * p.c).abs();
                    if key < 1e-4 * key_scale {
                        continue;
                    }
                    q
                };
                if min_vertex_distance(&t, q) >= 1e-2 * r {
                    break 'sample q;
                }
            }
            unreachable!("sphere sampler exhausted")
        };
        let det = tangency_det(&p, q).expect("sampled on the circumsphere");
        let ab2 = p.a * p.a + p.b * p.b;
        let factored = -ab2 * (p.a * p.b * q.z + q.x * q.y * p.c);
        let fact_res = (det - factored).abs() / (ab2 * key_scale);
        let touch = circles_touch(&t, q, BimedianAxis::C).expect("on-sphere, off-vertex");
        let expect_touch = (p.a * p.b * q.z + q.x * q.y * p.c).abs() < 1e-8 * key_scale;
        let ok = fact_res <= 1e-9 && touch == expect_touch && touch == on_surface;
        TrialOutcome::new(fact_res, ok)
    });
    report("P5.6", cfg, failures, max_r, "length/R")
}

// --- Circumsphere invariance and the two-circle construction -----------------

fn t6_1(cfg: &TrialConfig, parallel: bool) -> VerificationReport {
    let (failures, max_r) = run_trials(cfg, parallel, |i, rng| {
        let (t, _) = gen_isosceles(rng, cfg);
        let omega = circumsphere(&t).expect("isosceles tetrahedron");
        let r = omega.radius;
        let x = loop {
            let x = gen_point_on_sphere(rng, &omega);
            if min_vertex_distance(&t, x) >= 1e-3 * r {
                break x;
            }
        };
        let tol = tetra_tolerance(&t);
        let y = match isogonal_conjugate(&t, x, &tol) {
            ConjugateResult::Point(y) => y,
            _ => return TrialOutcome::new(f64::INFINITY, false),
        };
        let res = ((y - omega.center).norm() - r).abs() / r;
        let mut ok = res <= cfg.tol_pos;
        if i % 4 == 0 {
            // Planar contrast: on the circumcircle of a triangle the
            // conjugate escapes to infinity — the solid invariance is not a
            // shadow of a planar one.
            let (a, b, c) = gen_triangle(rng);
            let l = a.dist(b).max(b.dist(c)).max(c.dist(a));
            let circ = Circle3::through(a, b, c).expect("well-conditioned triangle");
            let (e1, e2) = plane_basis(circ.normal);
            let x2 = loop {
                let phi = rng.random_range(0.0..TAU);
                let x2 = circ.center + (e1 * phi.cos() + e2 * phi.sin()) * circ.radius;
                if [a, b, c].iter().all(|v| v.dist(x2) >= 1e-2 * l) {
                    break x2;
                }
            };
            let tri_tol = Tolerance::with_scale(l).expect("positive scale");
            ok &= matches!(
                planar_isogonal_conjugate(a, b, c, x2, &tri_tol),
                Ok(PlanarConjugate::AtInfinity(_))
            );
        }
        TrialOutcome::new(res, ok)
    });
    report("T6.1", cfg, failures, max_r, "length/R")
}

fn p6_2(cfg: &TrialConfig, parallel: bool) -> VerificationReport {
    let (failures, max_r) = run_trials(cfg, parallel, |i, rng| {
        let (t, frame) = gen_isosceles(rng, cfg);
        let omega = circumsphere(&t).expect("isosceles tetrahedron");
        let r = omega.radius;
        let tangent_trial = i % 5 == 0;
        let tangent_axis = axis_of_trial(i);
        let surface_clearance = |x: Vec3, skip: Option<BimedianAxis>| {
            let q = frame.to_canonical(x);
            BimedianAxis::ALL.iter().all(|&axis| {
                Some(axis) == skip
                    || hpar_residual_canonical(&frame.params, axis, q).abs() >= 1e-4 * r
            })
        };
        let x = 'sample: {
            for _ in 0..SAMPLER_ATTEMPTS {
                if tangent_trial {
                    let s = rng.random_range(-0.9 * r..0.9 * r);
                    let branch = rng.random::<bool>();
                    let q = match point_on_sphere_and_hpar(&frame.params, tangent_axis, s, branch)
                    {
                        Some(q) => q,
                        None => continue,
                    };
                    let x = frame.to_world(q);
                    if min_vertex_distance(&t, x) >= 1e-2 * r
                        && surface_clearance(x, Some(tangent_axis))
                    {
                        break 'sample x;
                    }
                } else {
                    let x = gen_point_on_sphere(rng, &omega);
                    if min_vertex_distance(&t, x) >= 1e-3 * r && surface_clearance(x, None) {
                        break 'sample x;
                    }
                }
            }
            unreachable!("on-sphere sampler exhausted")
        };
        let tol = tetra_tolerance(&t);
        let direct = match isogonal_conjugate(&t, x, &tol) {
            ConjugateResult::Point(y) => y,
            _ => return TrialOutcome::new(f64::INFINITY, false),
        };
        let mut points = vec![direct];
        for axis in BimedianAxis::ALL {
            match crate::quadric::bogdanov_conjugate(&t, x, axis) {
                Ok(y) => points.push(y),
                Err(_) => return TrialOutcome::new(f64::INFINITY, false),
            }
        }
        let mut res: f64 = 0.0;
        for a in 0..points.len() {
            for b in a + 1..points.len() {
                res = res.max(points[a].dist(points[b]));
            }
        }
        let res = res / r;
        // The two-circle route stacks circle fits, a plane-line cut, and a
        // reflection; allow a 10x margin over the base tolerance.
        TrialOutcome::bounded(res, 10.0 * cfg.tol_pos)
    });
    report("P6.2", cfg, failures, max_r, "length/R")
}
