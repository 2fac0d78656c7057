//! Seeded random generators for the verification suites. Every trial owns
//! an independent RNG stream derived from `(seed, trial index)`, so trials
//! can run in any order — or in parallel — without changing what any one of
//! them sees.

use crate::geom3::{plane_basis, Mat3, Rigid, Sphere, Vec3};
use crate::tetra::{
    canonical_embedding, fit_canonical_frame, tetra_tolerance, CanonicalFrame, IsoscelesParams,
    Tetrahedron,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, UnitSphere};

use super::TrialConfig;

/// RNG for one trial: the suite seed selects the key, the trial index the
/// stream.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn gen_vec_in_box(rng: &mut ChaCha8Rng, half: f64) -> Vec3 {
    Vec3::new(
        rng.random_range(-half..half),
        rng.random_range(-half..half),
        rng.random_range(-half..half),
    )
}

/// Positive canonical half-axis parameters within the configured range.
pub fn gen_params(rng: &mut ChaCha8Rng, cfg: &TrialConfig) -> IsoscelesParams {
    let [lo, hi] = cfg.param_range;
    IsoscelesParams::new(
        rng.random_range(lo..hi),
        rng.random_range(lo..hi),
        rng.random_range(lo..hi),
    )
    .expect("range bounds are positive")
}

/// Uniform random rotation (rejection-sampled quaternion) plus a translation
/// in `[-5, 5]³`.
pub fn gen_rigid(rng: &mut ChaCha8Rng) -> Rigid {
    let rotation = loop {
        let q: [f64; 4] = std::array::from_fn(|_| rng.random_range(-1.0..1.0));
        let norm_sq: f64 = q.iter().map(|v| v * v).sum();
        if (1e-3..=1.0).contains(&norm_sq) {
            break Mat3::from_quaternion(q[0], q[1], q[2], q[3]);
        }
    };
    Rigid { rotation, translation: gen_vec_in_box(rng, 5.0) }
}

/// A posed isosceles tetrahedron and its fitted frame. Half the draws use a
/// mirror embedding (negated third parameter) so both chirality branches of
/// the frame fit stay exercised.
pub fn gen_isosceles(rng: &mut ChaCha8Rng, cfg: &TrialConfig) -> (Tetrahedron, CanonicalFrame) {
    let p = gen_params(rng, cfg);
    let c = if rng.random::<bool>() { -p.c } else { p.c };
    let params = IsoscelesParams::new(p.a, p.b, c).expect("nonzero parameters");
    let t = canonical_embedding(&params).transformed(&gen_rigid(rng));
    let frame = fit_canonical_frame(&t, &tetra_tolerance(&t))
        .expect("embedding is isosceles by construction");
    (t, frame)
}

/// Uniform point of the sphere's surface, renormalized to the exact radius.
pub fn gen_point_on_sphere(rng: &mut ChaCha8Rng, s: &Sphere) -> Vec3 {
    s.center + gen_unit_vec(rng) * s.radius
}

/// Uniform random direction.
pub fn gen_unit_vec(rng: &mut ChaCha8Rng) -> Vec3 {
    let dir: [f64; 3] = UnitSphere.sample(rng);
    Vec3::from_array(dir).normalized().expect("unit sample")
}

/// A well-conditioned tetrahedron with no symmetry assumptions: vertices in
/// `[-2, 2]³` with volume at least 2% of the cubed longest edge.
pub fn gen_general_tetra(rng: &mut ChaCha8Rng) -> Tetrahedron {
    loop {
        let v: [Vec3; 4] = std::array::from_fn(|_| gen_vec_in_box(rng, 2.0));
        if let Ok(t) = Tetrahedron::from_vertices(v) {
            let l = t.max_edge_length();
            if t.signed_volume().abs() >= 0.02 * l * l * l {
                return t;
            }
        }
    }
}

/// A well-conditioned triangle in a random plane in space: area at least 20%
/// of the squared longest side.
pub fn gen_triangle(rng: &mut ChaCha8Rng) -> (Vec3, Vec3, Vec3) {
    loop {
        let normal = Vec3::from_array(UnitSphere.sample(rng))
            .normalized()
            .expect("unit sample");
        let (e1, e2) = plane_basis(normal);
        let origin = normal * rng.random_range(-2.0..2.0);
        let mut pt =
            || origin + e1 * rng.random_range(-2.0..2.0) + e2 * rng.random_range(-2.0..2.0);
        let (a, b, c) = (pt(), pt(), pt());
        let l = a.dist(b).max(b.dist(c)).max(c.dist(a));
        let area = (b - a).cross(c - a).norm() / 2.0;
        if l > 0.0 && area >= 0.2 * l * l {
            return (a, b, c);
        }
    }
}

/// Two spheres that intersect in a real circle, kept away from tangency by a
/// 5% margin. `distinct_radii` additionally separates the radii by 0.1.
pub fn gen_intersecting_spheres(rng: &mut ChaCha8Rng, distinct_radii: bool) -> (Sphere, Sphere) {
    loop {
        let r1: f64 = rng.random_range(0.5..2.0);
        let r2: f64 = rng.random_range(0.5..2.0);
        if distinct_radii && (r1 - r2).abs() < 0.1 {
            continue;
        }
        let margin = 0.05 * (r1 + r2);
        let lo = (r1 - r2).abs() + margin;
        let hi = r1 + r2 - margin;
        if lo >= hi {
            continue;
        }
        let c1 = gen_vec_in_box(rng, 2.0);
        let dir = Vec3::from_array(UnitSphere.sample(rng))
            .normalized()
            .expect("unit sample");
        let c2 = c1 + dir * rng.random_range(lo..hi);
        return (
            Sphere::new(c1, r1).expect("positive radius"),
            Sphere::new(c2, r2).expect("positive radius"),
        );
    }
}
