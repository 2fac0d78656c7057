//! Primitive 3D types and exact constructions.
//!
//! Everything is plain `f64`; degeneracy decisions go through scale-relative
//! thresholds (see [`Tolerance`]) so nothing here depends on the absolute
//! size of the input.

mod construct;
mod shapes;
mod vec;

pub use construct::{circumsphere4, circumsphere4_eps};
pub use shapes::{plane_basis, rotation_from_axes, Circle3, Line3, Plane, Sphere, Tolerance, DEFAULT_EPS_REL};
pub use vec::{Mat3, Rigid, Vec3, ORIGIN};

use thiserror::Error;

/// Degeneracies and invalid inputs in the primitive layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("points are collinear")]
    CollinearPoints,
    #[error("points are coplanar")]
    CoplanarPoints,
    #[error("planes are parallel")]
    ParallelPlanes,
    #[error("direction vector is zero")]
    ZeroDirection,
    #[error("radius must be positive and finite")]
    InvalidRadius,
    #[error("tolerance parameters out of range")]
    InvalidTolerance,
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn coord() -> impl Strategy<Value = f64> {
        -100.0f64..100.0
    }

    fn vec3() -> impl Strategy<Value = Vec3> {
        (coord(), coord(), coord()).prop_map(|(x, y, z)| Vec3::new(x, y, z))
    }

    fn rigid() -> impl Strategy<Value = Rigid> {
        (
            -1.0f64..1.0,
            -1.0f64..1.0,
            -1.0f64..1.0,
            -1.0f64..1.0,
            vec3(),
        )
            .prop_filter("nonzero quaternion", |(w, x, y, z, _)| {
                w * w + x * x + y * y + z * z > 1e-3
            })
            .prop_map(|(w, x, y, z, t)| Rigid {
                rotation: Mat3::from_quaternion(w, x, y, z),
                translation: t,
            })
    }

    proptest! {
        #[test]
        fn plane_reflection_is_involutive(p in vec3(), q in vec3(), n in vec3()) {
            prop_assume!(n.norm() > 1e-3);
            let pl = Plane::new(n, n.normalized().unwrap().dot(q)).unwrap();
            let r = pl.reflect_point(p);
            let scale = p.norm().max(q.norm()).max(1.0);
            prop_assert!(pl.reflect_point(r).dist(p) <= 1e-12 * scale);
            // Midpoint sits on the plane, displacement is parallel to the normal.
            prop_assert!(pl.distance_to_point(p.midpoint(r)) <= 1e-10 * scale);
            prop_assert!((p - r).cross(pl.normal()).norm() <= 1e-10 * scale);
        }

        #[test]
        fn plane_projection_is_idempotent(p in vec3(), q in vec3(), n in vec3()) {
            prop_assume!(n.norm() > 1e-3);
            let pl = Plane::new(n, n.normalized().unwrap().dot(q)).unwrap();
            let f = pl.project_point(p);
            let scale = p.norm().max(q.norm()).max(1.0);
            prop_assert!(pl.project_point(f).dist(f) <= 1e-12 * scale);
            prop_assert!(pl.distance_to_point(f) <= 1e-10 * scale);
        }

        #[test]
        fn line_reflection_is_involutive(p in vec3(), a in vec3(), d in vec3()) {
            prop_assume!(d.norm() > 1e-3);
            let l = Line3::new(a, d).unwrap();
            let scale = p.norm().max(a.norm()).max(1.0);
            prop_assert!(l.reflect_point(l.reflect_point(p)).dist(p) <= 1e-12 * scale);
        }

        #[test]
        fn circle_through_is_equidistant(a in vec3(), b in vec3(), c in vec3()) {
            let scale = a.dist(b).max(a.dist(c)).max(b.dist(c));
            prop_assume!(scale > 1e-2);
            prop_assume!((b - a).cross(c - a).norm() > 1e-3 * scale * scale);
            let circ = Circle3::through(a, b, c).unwrap();
            for p in [a, b, c] {
                prop_assert!(circ.residual(p) <= 1e-9 * scale.max(circ.radius));
            }
        }

        #[test]
        fn circumsphere_is_equidistant_and_equivariant(
            a in vec3(), b in vec3(), c in vec3(), d in vec3(), m in rigid()
        ) {
            let pts = [a, b, c, d];
            let mut scale = 0.0f64;
            for i in 0..4 {
                for j in (i + 1)..4 {
                    scale = scale.max(pts[i].dist(pts[j]));
                }
            }
            prop_assume!(scale > 1e-2);
            let det = (b - a).dot((c - a).cross(d - a));
            prop_assume!(det.abs() > 1e-3 * scale * scale * scale);
            let s = circumsphere4(a, b, c, d).unwrap();
            for p in pts {
                prop_assert!(s.surface_residual(p) <= 1e-9 * scale.max(s.radius));
            }
            let sm = circumsphere4(m.apply(a), m.apply(b), m.apply(c), m.apply(d)).unwrap();
            let tol = 1e-8 * (scale + s.radius + m.translation.norm());
            prop_assert!(sm.center.dist(m.apply(s.center)) <= tol);
            prop_assert!((sm.radius - s.radius).abs() <= tol);
        }

        #[test]
        fn plane_intersection_lies_on_both(n1 in vec3(), n2 in vec3(), o1 in coord(), o2 in coord()) {
            prop_assume!(n1.norm() > 1e-3 && n2.norm() > 1e-3);
            let u1 = n1.normalized().unwrap();
            let u2 = n2.normalized().unwrap();
            prop_assume!(u1.cross(u2).norm() > 1e-3);
            let p1 = Plane::new(u1, o1).unwrap();
            let p2 = Plane::new(u2, o2).unwrap();
            let l = p1.intersect_plane(&p2).unwrap();
            let scale = o1.abs().max(o2.abs()).max(1.0);
            for t in [-7.0, 0.0, 13.0] {
                let p = l.point_at(t);
                prop_assert!(p1.distance_to_point(p) <= 1e-8 * scale);
                prop_assert!(p2.distance_to_point(p) <= 1e-8 * scale);
            }
        }
    }
}
