//! Inversive geometry: point/sphere inversion, angles between spheres and
//! planes, homothety centers, bisector spheres, and the planar
//! isogonal-conjugate constructions used as the two-dimensional counterpart
//! of the solid theory.
//!
//! Angles between intersecting spheres follow the law-of-cosines convention
//! `cos θ = (r1² + r2² - d²) / (2 r1 r2)`, which puts internal tangency at 0
//! and external tangency at π. For a sphere and a plane the analogue is
//! `cos θ = h / r` with `h` the signed center distance; that sign depends on
//! the plane's (arbitrary) normal orientation, so angle comparisons that may
//! involve planes should go through [`angles_match_mod_supplement`].

use crate::geom3::{Circle3, Line3, Plane, Sphere, Tolerance, Vec3, DEFAULT_EPS_REL};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CircleSphereError {
    #[error("point coincides with the inversion center")]
    CenterInput,
    #[error("surfaces do not intersect")]
    Disjoint,
    #[error("circle does not lie on the sphere")]
    NotOnSphere,
    #[error("circle is a great circle; bisector spheres degenerate to a plane")]
    GreatCircle,
    #[error("spheres are identical")]
    IdenticalSpheres,
    #[error("spheres have equal radii; external homothety center is at infinity")]
    EqualRadii,
    #[error("points are not coplanar")]
    NotCoplanar,
    #[error("triangle is degenerate")]
    DegenerateTriangle,
    #[error("inversion power must be nonzero and finite")]
    InvalidPower,
}

/// Inversion with the given center and (possibly negative) power `k`:
/// `p ↦ center + (p - center) · k / |p - center|²`.
#[derive(Debug, Clone, Copy)]
pub struct Inversion {
    pub center: Vec3,
    pub power: f64,
}

impl Inversion {
    pub fn new(center: Vec3, power: f64) -> Result<Inversion, CircleSphereError> {
        if power == 0.0 || !power.is_finite() {
            return Err(CircleSphereError::InvalidPower);
        }
        Ok(Inversion { center, power })
    }

    /// Inversion in a sphere (power = radius²).
    pub fn in_sphere(s: &Sphere) -> Inversion {
        Inversion { center: s.center, power: s.radius * s.radius }
    }

    fn guard(&self) -> f64 {
        DEFAULT_EPS_REL * self.power.abs().sqrt()
    }

    pub fn invert_point(&self, p: Vec3) -> Result<Vec3, CircleSphereError> {
        let v = p - self.center;
        let d = v.norm();
        if d <= self.guard() {
            return Err(CircleSphereError::CenterInput);
        }
        Ok(self.center + v * (self.power / (d * d)))
    }

    /// Image of a sphere or plane. Spheres through the center map to planes,
    /// planes off the center to spheres through it, planes through the
    /// center to themselves.
    pub fn invert_surface(&self, s: &SphereOrPlane) -> Result<SphereOrPlane, CircleSphereError> {
        let k = self.power;
        match s {
            SphereOrPlane::Sphere(s) => {
                let v = s.center - self.center;
                let d2 = v.norm_sq();
                let r2 = s.radius * s.radius;
                if (d2 - r2).abs() <= DEFAULT_EPS_REL * (d2 + r2) {
                    // Through the center: image is the plane through the
                    // image of the antipode of the center, normal along v.
                    let n = v.normalized().ok_or(CircleSphereError::CenterInput)?;
                    let far = self.invert_point(s.center + v)?;
                    return Ok(SphereOrPlane::Plane(
                        Plane::new(n, n.dot(far)).expect("unit normal"),
                    ));
                }
                let t = k / (d2 - r2);
                let center = self.center + v * t;
                let radius = (k.abs() * s.radius) / (d2 - r2).abs();
                Ok(SphereOrPlane::Sphere(
                    Sphere::new(center, radius).expect("positive radius"),
                ))
            }
            SphereOrPlane::Plane(pl) => {
                let h = pl.signed_distance(self.center);
                if h.abs() <= self.guard() {
                    return Ok(SphereOrPlane::Plane(*pl));
                }
                // The foot of the center maps to the antipode of the center
                // on the image sphere.
                let center = self.center - pl.normal() * (k / (2.0 * h));
                let radius = (k / (2.0 * h)).abs();
                Ok(SphereOrPlane::Sphere(
                    Sphere::new(center, radius).expect("positive radius"),
                ))
            }
        }
    }
}

/// A sphere, or its infinite-radius limit.
#[derive(Debug, Clone, Copy)]
pub enum SphereOrPlane {
    Sphere(Sphere),
    Plane(Plane),
}

impl SphereOrPlane {
    pub fn as_sphere(&self) -> Option<&Sphere> {
        match self {
            SphereOrPlane::Sphere(s) => Some(s),
            SphereOrPlane::Plane(_) => None,
        }
    }

    pub fn as_plane(&self) -> Option<&Plane> {
        match self {
            SphereOrPlane::Plane(p) => Some(p),
            SphereOrPlane::Sphere(_) => None,
        }
    }

    /// Distance from `p` to the surface.
    pub fn surface_residual(&self, p: Vec3) -> f64 {
        match self {
            SphereOrPlane::Sphere(s) => s.surface_residual(p),
            SphereOrPlane::Plane(pl) => pl.distance_to_point(p),
        }
    }
}

/// Angle in `[0, π]` at which two surfaces intersect; see the module docs
/// for the orientation convention. Fails with `Disjoint` when they do not
/// meet (small relative slack on tangency).
pub fn sphere_angle(u: &SphereOrPlane, v: &SphereOrPlane) -> Result<f64, CircleSphereError> {
    use SphereOrPlane::*;
    let angle = match (u, v) {
        (Sphere(s1), Sphere(s2)) => {
            let d = s1.center.dist(s2.center);
            let slack = DEFAULT_EPS_REL * (s1.radius + s2.radius);
            if d > s1.radius + s2.radius + slack || d < (s1.radius - s2.radius).abs() - slack {
                return Err(CircleSphereError::Disjoint);
            }
            let cos = (s1.radius * s1.radius + s2.radius * s2.radius - d * d)
                / (2.0 * s1.radius * s2.radius);
            cos.clamp(-1.0, 1.0).acos()
        }
        (Sphere(s), Plane(pl)) | (Plane(pl), Sphere(s)) => {
            let h = pl.signed_distance(s.center);
            if h.abs() > s.radius * (1.0 + DEFAULT_EPS_REL) {
                return Err(CircleSphereError::Disjoint);
            }
            (h / s.radius).clamp(-1.0, 1.0).acos()
        }
        (Plane(p1), Plane(p2)) => {
            let cos = p1.normal().dot(p2.normal());
            if cos.abs() >= 1.0 - DEFAULT_EPS_REL {
                // Parallel: coincident planes meet at angle 0, else disjoint.
                let same = (p1.offset() - cos.signum() * p2.offset()).abs()
                    <= DEFAULT_EPS_REL * (1.0 + p1.offset().abs());
                return if same { Ok(0.0) } else { Err(CircleSphereError::Disjoint) };
            }
            cos.clamp(-1.0, 1.0).acos()
        }
    };
    Ok(angle)
}

/// Angle between two coplanar circles through a common point, same
/// convention as [`sphere_angle`]. Fails when the circle planes differ or
/// the circles do not meet.
pub fn circle_angle(c1: &Circle3, c2: &Circle3, tol: &Tolerance) -> Result<f64, CircleSphereError> {
    if c1.normal.cross(c2.normal).norm() > 1e-9
        || c1.plane().distance_to_point(c2.center) > tol.length_tol().max(1e-12)
    {
        return Err(CircleSphereError::NotCoplanar);
    }
    sphere_angle(
        &SphereOrPlane::Sphere(Sphere::new(c1.center, c1.radius).expect("valid circle")),
        &SphereOrPlane::Sphere(Sphere::new(c2.center, c2.radius).expect("valid circle")),
    )
}

/// True when `x` equals `y` or its supplement within `tol` radians. Inversion
/// preserves intersection angles only up to the supplement (the inside of a
/// sphere may map to the outside), and plane angles carry an arbitrary
/// orientation sign, so preserved-angle checks accept both branches.
pub fn angles_match_mod_supplement(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol || (x + y - std::f64::consts::PI).abs() <= tol
}

/// The two spheres through an on-sphere circle `sigma` that are centered on
/// the carrier sphere `omega` itself. Each meets `omega` and the plane of
/// `sigma` at equal angles. Fails when `sigma` does not lie on `omega`, or
/// degenerates (`GreatCircle`) when `sigma` is a great circle.
pub fn bisector_spheres(
    omega: &Sphere,
    sigma: &Circle3,
) -> Result<[Sphere; 2], CircleSphereError> {
    let r = omega.radius;
    let v = sigma.center - omega.center;
    // Center must sit on the circle's axis through the sphere center...
    let t = v.dot(sigma.normal);
    let off_axis = (v - sigma.normal * t).norm();
    if off_axis > 1e-9 * r {
        return Err(CircleSphereError::NotOnSphere);
    }
    // ...at the right depth for the circle radius.
    if (t * t + sigma.radius * sigma.radius - r * r).abs() > 1e-9 * r * r {
        return Err(CircleSphereError::NotOnSphere);
    }
    if t.abs() <= 1e-9 * r {
        return Err(CircleSphereError::GreatCircle);
    }
    let make = |s: f64| -> Sphere {
        let center = omega.center + sigma.normal * (s * r);
        let axial = s * r - t;
        let radius = (axial * axial + sigma.radius * sigma.radius).sqrt();
        Sphere::new(center, radius).expect("positive radius")
    };
    Ok([make(1.0), make(-1.0)])
}

/// Homothety centers of two spheres (or coplanar circles, via their
/// center/radius data).
#[derive(Debug, Clone, Copy)]
pub struct HomothetyCenters {
    /// Center of the positive-ratio homothety; `None` when the radii are
    /// equal (pure translation, center at infinity).
    pub external: Option<Vec3>,
    /// Center of the negative-ratio homothety.
    pub internal: Vec3,
}

/// External and internal homothety centers
/// `(r2 c1 - r1 c2) / (r2 - r1)` and `(r2 c1 + r1 c2) / (r1 + r2)`.
pub fn homothety_centers(u: &Sphere, v: &Sphere) -> Result<HomothetyCenters, CircleSphereError> {
    let scale = u.radius.max(v.radius);
    let equal_radii = (u.radius - v.radius).abs() <= DEFAULT_EPS_REL * scale;
    if equal_radii && u.center.dist(v.center) <= DEFAULT_EPS_REL * scale {
        return Err(CircleSphereError::IdenticalSpheres);
    }
    let internal = (u.center * v.radius + v.center * u.radius) / (u.radius + v.radius);
    let external = if equal_radii {
        None
    } else {
        Some((u.center * v.radius - v.center * u.radius) / (v.radius - u.radius))
    };
    Ok(HomothetyCenters { external, internal })
}

/// The sphere centered at the external homothety center of two intersecting
/// spheres of different radii, passing through their intersection circle; it
/// meets both at equal angles. Fails with `EqualRadii` or `Disjoint`.
pub fn homothety_bisector_sphere(
    u: &Sphere,
    v: &Sphere,
) -> Result<Sphere, CircleSphereError> {
    let scale = u.radius.max(v.radius);
    if (u.radius - v.radius).abs() <= DEFAULT_EPS_REL * scale {
        return Err(CircleSphereError::EqualRadii);
    }
    let d = u.center.dist(v.center);
    let slack = DEFAULT_EPS_REL * scale;
    if d >= u.radius + v.radius - slack || d <= (u.radius - v.radius).abs() + slack {
        return Err(CircleSphereError::Disjoint);
    }
    let centers = homothety_centers(u, v)?;
    let s = centers.external.expect("distinct radii checked");
    // Intersection circle: center along the center line, radius from the
    // radical-plane offset.
    let axis = (v.center - u.center) / d;
    let t = (d * d + u.radius * u.radius - v.radius * v.radius) / (2.0 * d);
    let circle_center = u.center + axis * t;
    let rho2 = u.radius * u.radius - t * t;
    let radius = (s.dist(circle_center).powi(2) + rho2).sqrt();
    Sphere::new(s, radius).map_err(|_| CircleSphereError::Disjoint)
}

/// Result of planar isogonal conjugation in a triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PlanarConjugate {
    Point(Vec3),
    /// `x` lies on the circumcircle: the reflected cevians are parallel and
    /// meet at infinity along this unit direction.
    AtInfinity(Vec3),
    /// `x` is (within snap of) vertex `0`, `1`, or `2` of the triangle.
    VertexDegenerate(usize),
}

/// Pairwise-parallel threshold (radians) for declaring the reflected cevians
/// concurrent at infinity.
pub const CEVIAN_PARALLEL_EPS: f64 = 1e-7;

fn triangle_scale(a: Vec3, b: Vec3, c: Vec3) -> f64 {
    a.dist(b).max(b.dist(c)).max(c.dist(a))
}

fn check_triangle(a: Vec3, b: Vec3, c: Vec3) -> Result<Plane, CircleSphereError> {
    Plane::through(a, b, c).map_err(|_| CircleSphereError::DegenerateTriangle)
}

/// Isogonal conjugate of `x` in triangle `abc` (all points coplanar): each
/// cevian through a vertex is reflected in the interior angle bisector at
/// that vertex, and the reflected cevians concur at the conjugate.
///
/// On the circumcircle the reflected cevians become parallel
/// ([`PlanarConjugate::AtInfinity`]); on a sideline the conjugate collapses
/// to the opposite vertex (still reported as a `Point`).
pub fn planar_isogonal_conjugate(
    a: Vec3,
    b: Vec3,
    c: Vec3,
    x: Vec3,
    tol: &Tolerance,
) -> Result<PlanarConjugate, CircleSphereError> {
    let plane = check_triangle(a, b, c)?;
    let scale = triangle_scale(a, b, c);
    if plane.distance_to_point(x) > tol.length_tol().max(1e-9 * scale) {
        return Err(CircleSphereError::NotCoplanar);
    }
    let verts = [a, b, c];
    let snap = 1e-7 * scale;
    if let Some(i) = (0..3).find(|&i| verts[i].dist(x) < snap) {
        return Ok(PlanarConjugate::VertexDegenerate(i));
    }

    // Reflected cevian direction at each vertex.
    let mut dirs = [Vec3::default(); 3];
    for i in 0..3 {
        let v = verts[i];
        let u = (verts[(i + 1) % 3] - v).normalized().expect("non-degenerate side");
        let w = (verts[(i + 2) % 3] - v).normalized().expect("non-degenerate side");
        let bis = (u + w).normalized().expect("interior angle < pi");
        let d = (x - v).normalized().expect("x off the vertex by snap");
        dirs[i] = bis * (2.0 * d.dot(bis)) - d;
    }

    // Pairwise angles between cevian *lines* (sign-insensitive).
    let line_angle = |p: Vec3, q: Vec3| p.cross(q).norm().atan2(p.dot(q).abs());
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let max_angle = pairs
        .iter()
        .map(|&(i, j)| line_angle(dirs[i], dirs[j]))
        .fold(0.0, f64::max);
    if max_angle < CEVIAN_PARALLEL_EPS {
        return Ok(PlanarConjugate::AtInfinity(dirs[0]));
    }
    // Intersect the best-conditioned pair of cevians.
    let (i, j) = pairs
        .into_iter()
        .max_by(|&(i, j), &(k, l)| {
            line_angle(dirs[i], dirs[j]).total_cmp(&line_angle(dirs[k], dirs[l]))
        })
        .unwrap();
    let li = Line3::new(verts[i], dirs[i]).expect("unit direction");
    let lj = Line3::new(verts[j], dirs[j]).expect("unit direction");
    Ok(PlanarConjugate::Point(closest_point_of_lines(&li, &lj)))
}

/// Midpoint of the shortest segment between two lines (their intersection
/// when they meet).
fn closest_point_of_lines(l1: &Line3, l2: &Line3) -> Vec3 {
    let (d1, d2) = (l1.direction(), l2.direction());
    let r = l1.point() - l2.point();
    let c = d1.dot(d2);
    let denom = 1.0 - c * c;
    let t1 = (c * d2.dot(r) - d1.dot(r)) / denom;
    let t2 = (d2.dot(r) - c * d1.dot(r)) / denom;
    l1.point_at(t1).midpoint(l2.point_at(t2))
}

/// Arc-midpoint circles of side `ab` in triangle `abc`:
/// `m` is the midpoint of the arc `ab` away from `c` and `n` the midpoint of
/// the arc through `c`; the circles are centered there through `a` and `b`.
/// The incenter of the triangle lies on the `m`-circle.
#[derive(Debug, Clone, Copy)]
pub struct ArcMidpointCircles {
    pub m: Vec3,
    pub n: Vec3,
    pub circle_m: Circle3,
    pub circle_n: Circle3,
}

pub fn arc_midpoint_circles(
    a: Vec3,
    b: Vec3,
    c: Vec3,
) -> Result<ArcMidpointCircles, CircleSphereError> {
    check_triangle(a, b, c)?;
    let circ = Circle3::through(a, b, c).map_err(|_| CircleSphereError::DegenerateTriangle)?;
    // The perpendicular bisector of ab meets the circumcircle at the two arc
    // midpoints; classify them by the side of line ab, in-plane.
    let side_dir = circ.normal.cross((b - a).normalized().expect("a != b"));
    let mid_ab = a.midpoint(b);
    let side = |p: Vec3| side_dir.dot(p - mid_ab);
    let bisector = Line3::new(circ.center, side_dir).expect("unit direction");
    let p1 = bisector.point_at(circ.radius);
    let p2 = bisector.point_at(-circ.radius);
    let (n, m) = if side(p1) * side(c) > 0.0 { (p1, p2) } else { (p2, p1) };
    let circle_m = Circle3::new(m, m.dist(a), circ.normal)
        .map_err(|_| CircleSphereError::DegenerateTriangle)?;
    let circle_n = Circle3::new(n, n.dist(a), circ.normal)
        .map_err(|_| CircleSphereError::DegenerateTriangle)?;
    Ok(ArcMidpointCircles { m, n, circle_m, circle_n })
}

/// Planar incenter (side-length weighted vertex average).
pub fn planar_incenter(a: Vec3, b: Vec3, c: Vec3) -> Vec3 {
    let (la, lb, lc) = (b.dist(c), c.dist(a), a.dist(b));
    (a * la + b * lb + c * lc) / (la + lb + lc)
}
