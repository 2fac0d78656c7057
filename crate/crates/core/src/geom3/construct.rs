use super::shapes::{Circle3, Sphere, DEFAULT_EPS_REL};
use super::vec::Vec3;
use super::GeomError;

impl Circle3 {
    /// Circle through three non-collinear points. The center solves the two
    /// in-plane perpendicular-bisector equations; the normal is the
    /// (normalized) triangle normal.
    pub fn through(p0: Vec3, p1: Vec3, p2: Vec3) -> Result<Circle3, GeomError> {
        let u = p1 - p0;
        let v = p2 - p0;
        let w = u.cross(v);
        let scale = p0.dist(p1).max(p0.dist(p2)).max(p1.dist(p2));
        if w.norm() <= DEFAULT_EPS_REL * scale * scale {
            return Err(GeomError::CollinearPoints);
        }
        // center = p0 + alpha u + beta v with (c-p0)·u = |u|²/2, (c-p0)·v = |v|²/2.
        let (uu, vv, uv) = (u.norm_sq(), v.norm_sq(), u.dot(v));
        let det = uu * vv - uv * uv; // == |w|²
        let alpha = (vv * (uu - uv)) / (2.0 * det);
        let beta = (uu * (vv - uv)) / (2.0 * det);
        let center = p0 + u * alpha + v * beta;
        let radius = (center.dist(p0) + center.dist(p1) + center.dist(p2)) / 3.0;
        let normal = w.normalized().expect("cross norm checked above");
        Ok(Circle3 { center, radius, normal })
    }
}

/// Circumscribed sphere of four points. Solves the 3x3 linear system from the
/// chord perpendicular-bisector relations `2(p_i - p0)·x = |p_i|² - |p0|²`
/// (shifted to `p0` for conditioning) by Cramer's rule. Fails with
/// `CoplanarPoints` when the edge-matrix determinant falls below
/// `eps_rel * L³`, `L` = max pairwise distance.
pub fn circumsphere4(p0: Vec3, p1: Vec3, p2: Vec3, p3: Vec3) -> Result<Sphere, GeomError> {
    circumsphere4_eps(p0, p1, p2, p3, DEFAULT_EPS_REL)
}

/// [`circumsphere4`] with an explicit relative determinant threshold.
pub fn circumsphere4_eps(
    p0: Vec3,
    p1: Vec3,
    p2: Vec3,
    p3: Vec3,
    eps_rel: f64,
) -> Result<Sphere, GeomError> {
    let q1 = p1 - p0;
    let q2 = p2 - p0;
    let q3 = p3 - p0;
    let pts = [p0, p1, p2, p3];
    let mut scale = 0.0f64;
    for i in 0..4 {
        for j in (i + 1)..4 {
            scale = scale.max(pts[i].dist(pts[j]));
        }
    }
    let det = q1.dot(q2.cross(q3));
    if det.abs() <= eps_rel * scale * scale * scale {
        return Err(GeomError::CoplanarPoints);
    }
    let x = (q2.cross(q3) * q1.norm_sq()
        + q3.cross(q1) * q2.norm_sq()
        + q1.cross(q2) * q3.norm_sq())
        / (2.0 * det);
    let center = p0 + x;
    let radius =
        (center.dist(p0) + center.dist(p1) + center.dist(p2) + center.dist(p3)) / 4.0;
    Sphere::new(center, radius)
}
