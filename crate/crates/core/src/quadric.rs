//! The three hyperbolic paraboloids carrying the axis-symmetric isogonal
//! conjugate pairs of an isosceles tetrahedron, together with the
//! equidistant-projection property, the circle-tangency criterion on the
//! circumsphere, and the two-circle construction of the conjugate.
//!
//! Everything here works in the canonical frame of [`crate::tetra`]: the
//! surface attached to axis `C` is `z = -(c/(ab))·x·y`, and the `A` and `B`
//! surfaces are its coordinate-cycled analogues. Operations that accept a
//! world-space tetrahedron fit a [`CanonicalFrame`] first and map back.

use crate::geom3::{Circle3, Line3, Mat3, Plane, Sphere, Tolerance, Vec3};
use crate::tetra::{
    canonical_embedding, circumsphere, fit_canonical_frame, tetra_tolerance, BimedianAxis,
    CanonicalFrame, IsoscelesParams, TetraError, Tetrahedron, VertexId,
};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum QuadricError {
    #[error(transparent)]
    Tetra(#[from] TetraError),
    #[error("point does not lie on the surface")]
    NotOnSurface,
    #[error("point lies on the symmetry axis")]
    AxisPoint,
    #[error("section plane does not meet the sphere in a real circle")]
    DegenerateSection,
    #[error("point or circle does not lie on the sphere")]
    NotOnSphere,
    #[error("point coincides with a tetrahedron vertex")]
    VertexInput,
    #[error("circle does not pass through the given point")]
    NotThroughX,
    #[error("the two circles coincide")]
    CoincidentCircles,
}

/// Snap radius (relative to the circumradius) for rejecting inputs at a
/// vertex or on a symmetry axis.
const INPUT_SNAP_REL: f64 = 1e-7;

/// Two circle tangent lines closer than this (radians) count as a common
/// tangent.
pub const CIRCLE_TANGENT_EPS: f64 = 1e-7;

/// Two line–sphere roots closer than this (relative to the sphere radius)
/// collapse to a tangency in [`second_circle_intersection`].
pub const ROOT_SEPARATION_REL: f64 = 1e-6;

fn axis_direction(axis: BimedianAxis) -> Vec3 {
    match axis {
        BimedianAxis::A => Vec3::new(1.0, 0.0, 0.0),
        BimedianAxis::B => Vec3::new(0.0, 1.0, 0.0),
        BimedianAxis::C => Vec3::new(0.0, 0.0, 1.0),
    }
}

fn axis_coefficient(p: &IsoscelesParams, axis: BimedianAxis) -> f64 {
    match axis {
        BimedianAxis::A => p.a / (p.b * p.c),
        BimedianAxis::B => p.b / (p.c * p.a),
        BimedianAxis::C => p.c / (p.a * p.b),
    }
}

/// Saddle surface of conjugate pairs symmetric about one bimedian, carried
/// by a posed tetrahedron through its canonical frame.
#[derive(Debug, Clone)]
pub struct HyperbolicParaboloid {
    pub frame: CanonicalFrame,
    pub axis: BimedianAxis,
    /// `c/(ab)` for axis C and the cycled analogues for A and B.
    pub coefficient: f64,
}

pub fn hpar(frame: &CanonicalFrame, axis: BimedianAxis) -> HyperbolicParaboloid {
    HyperbolicParaboloid {
        frame: *frame,
        axis,
        coefficient: axis_coefficient(&frame.params, axis),
    }
}

/// Signed residual of the canonical surface equation at a canonical-frame
/// point: `z + k·x·y` for axis C (cycled for A, B), `k` the coefficient.
pub fn hpar_residual_canonical(params: &IsoscelesParams, axis: BimedianAxis, q: Vec3) -> f64 {
    let k = axis_coefficient(params, axis);
    match axis {
        BimedianAxis::A => q.x + k * q.y * q.z,
        BimedianAxis::B => q.y + k * q.z * q.x,
        BimedianAxis::C => q.z + k * q.x * q.y,
    }
}

/// Signed surface residual at a world-space point.
pub fn hpar_residual(h: &HyperbolicParaboloid, p: Vec3) -> f64 {
    hpar_residual_canonical(&h.frame.params, h.axis, h.frame.to_canonical(p))
}

/// World-space symmetry-axis line of the surface (the bimedian).
pub fn hpar_axis_line(h: &HyperbolicParaboloid) -> Line3 {
    let dir = h.frame.rotation.mul_vec(axis_direction(h.axis));
    Line3::new(h.frame.translation, dir).expect("unit axis direction")
}

/// For a world point `p` on the surface (within `tol`) and off the axis,
/// the pair `(p, mirror of p in the axis bimedian)`; the two are isogonal
/// conjugates in the tetrahedron.
pub fn conjugate_pair_on_hpar(
    frame: &CanonicalFrame,
    axis: BimedianAxis,
    p: Vec3,
    tol: &Tolerance,
) -> Result<(Vec3, Vec3), QuadricError> {
    let h = hpar(frame, axis);
    if hpar_residual(&h, p).abs() > tol.length_tol() {
        return Err(QuadricError::NotOnSurface);
    }
    let axis_line = hpar_axis_line(&h);
    let r = frame.params.circumradius();
    if axis_line.distance_to_point(p) < INPUT_SNAP_REL * r {
        return Err(QuadricError::AxisPoint);
    }
    Ok((p, axis_line.reflect_point(p)))
}

/// Parameters of the two ellipses in which the cylinders over the pedal
/// circles meet a horizontal plane: section height, pedal circle radii,
/// center-to-face distances, the half-dihedral tilt `θ`, and the in-plane
/// rotation `φ` with `tan φ = a/b`.
#[derive(Debug, Clone, Copy)]
pub struct EllipseSection {
    pub z0: f64,
    pub r1: f64,
    pub r2: f64,
    pub d1: f64,
    pub d2: f64,
    pub theta: f64,
    pub phi: f64,
}

/// Section data at height `z0` on the C axis for a pedal sphere of radius
/// `pedal_radius` centered there: `d1, d2` are the distances from
/// `(0,0,z0)` to the faceplanes through `CD` resp. `AB`-side, scaled from
/// the center-to-face distance `d` by `|z0 ± c|/|c|`, and `r_i² = R_Γ² − d_i²`.
pub fn section_ellipses(
    params: &IsoscelesParams,
    z0: f64,
    pedal_radius: f64,
) -> Result<EllipseSection, QuadricError> {
    if pedal_radius <= 0.0 || !pedal_radius.is_finite() {
        return Err(QuadricError::DegenerateSection);
    }
    let q = crate::tetra::quantities(params);
    let d = q.center_face_distance;
    let c = params.c.abs();
    let d1 = ((z0 + params.c) / params.c).abs() * d;
    let d2 = ((z0 - params.c) / params.c).abs() * d;
    let r1_sq = pedal_radius * pedal_radius - d1 * d1;
    let r2_sq = pedal_radius * pedal_radius - d2 * d2;
    if r1_sq <= 0.0 || r2_sq <= 0.0 {
        return Err(QuadricError::DegenerateSection);
    }
    Ok(EllipseSection {
        z0,
        r1: r1_sq.sqrt(),
        r2: r2_sq.sqrt(),
        d1,
        d2,
        theta: (d / c).asin(),
        phi: (params.a.abs()).atan2(params.b.abs()),
    })
}

fn canonical_face_plane(params: &IsoscelesParams, opposite: VertexId) -> Plane {
    canonical_embedding(params).face_plane(opposite)
}

/// The quarter-difference of squared distances from the axis projection
/// `M′ = (0,0,z₀)` to the feet of `p` on the faceplanes through `ACD` and
/// `ABD`, computed geometrically and normalized by
/// `1/a² + 1/b² + 1/c²` (the squared-distance gap carries that constant
/// factor relative to the bilinear form). The result equals
/// `x₀y₀/(ab) + z₀/c` and vanishes exactly on the C-axis surface.
pub fn pedal_distance_identity(params: &IsoscelesParams, p: Vec3) -> f64 {
    let face_acd = canonical_face_plane(params, VertexId::B);
    let face_abd = canonical_face_plane(params, VertexId::C);
    let m = Vec3::new(0.0, 0.0, p.z);
    let pb = face_acd.project_point(p);
    let pc = face_abd.project_point(p);
    let raw = ((pb - m).norm_sq() - (pc - m).norm_sq()) / 4.0;
    let r = 1.0 / (params.a * params.a) + 1.0 / (params.b * params.b)
        + 1.0 / (params.c * params.c);
    raw * r
}

/// `||XP| − |XQ||`-style residual of the equidistant-projection property:
/// project `x` onto the two faces through the axis' D-edge and onto the
/// bimedian itself; the two feet are equidistant from the axis projection.
pub fn equidistant_projection_residual(
    t: &Tetrahedron,
    axis: BimedianAxis,
    x: Vec3,
) -> Result<f64, QuadricError> {
    let frame = fit_canonical_frame(t, &tetra_tolerance(t))?;
    let q = frame.to_canonical(x);
    let params = &frame.params;
    let (_, edge_nd) = axis.edge_pair();
    let (v1, v2) = edge_nd.endpoints();
    let p = canonical_face_plane(params, v1).project_point(q);
    let s = canonical_face_plane(params, v2).project_point(q);
    let dir = axis_direction(axis);
    let r = dir * q.dot(dir);
    Ok((p.dist(r) - s.dist(r)).abs())
}

/// Determinant of the tangency matrix at a canonical point of the
/// circumsphere; it factors as `−(a²+b²)(abz + cxy)`, so it vanishes
/// exactly on the C-axis surface.
pub fn tangency_det(params: &IsoscelesParams, p: Vec3) -> Result<f64, QuadricError> {
    let r = params.circumradius();
    if (p.norm() - r).abs() > 1e-9 * r {
        return Err(QuadricError::NotOnSphere);
    }
    let (a, b, c) = (params.a, params.b, params.c);
    let (x, y, z) = (p.x, p.y, p.z);
    let m = Mat3::from_rows(
        Vec3::new(b * z, b * c, x),
        Vec3::new(-a * c, -a * z, y),
        Vec3::new(-b * x, a * y, z),
    );
    Ok(m.det())
}

/// Whether the two circles through `x` and the opposite edges of the axis
/// pair touch at `x`, decided by comparing tangent lines (no determinant).
pub fn circles_touch(
    t: &Tetrahedron,
    x: Vec3,
    axis: BimedianAxis,
) -> Result<bool, QuadricError> {
    let omega = circumsphere(t)?;
    if omega.surface_residual(x) > 1e-9 * omega.radius {
        return Err(QuadricError::NotOnSphere);
    }
    let snap = INPUT_SNAP_REL * omega.radius;
    if VertexId::ALL.iter().any(|&v| t.vertex(v).dist(x) < snap) {
        return Err(QuadricError::VertexInput);
    }
    let (edge_d, edge_nd) = axis.edge_pair();
    let (p1, p2) = t.edge_endpoints(edge_nd);
    let (q1, q2) = t.edge_endpoints(edge_d);
    let c1 = Circle3::through(p1, p2, x).map_err(|_| QuadricError::VertexInput)?;
    let c2 = Circle3::through(q1, q2, x).map_err(|_| QuadricError::VertexInput)?;
    let t1 = c1.normal.cross(x - c1.center);
    let t2 = c2.normal.cross(x - c2.center);
    let angle = t1.cross(t2).norm().atan2(t1.dot(t2).abs());
    Ok(angle < CIRCLE_TANGENT_EPS)
}

/// Second common point of two circles on a sphere that already share `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SecondIntersection {
    Point(Vec3),
    /// The circles touch at `x`; there is no second point.
    Tangent,
}

fn circle_on_sphere(omega: &Sphere, c: &Circle3) -> bool {
    let v = c.center - omega.center;
    let axial = v - c.normal * v.dot(c.normal);
    axial.norm() <= 1e-9 * omega.radius
        && (v.norm_sq() + c.radius * c.radius - omega.radius * omega.radius).abs()
            <= 1e-9 * omega.radius * omega.radius
}

/// The point of `c1 ∩ c2` other than `x`, found by cutting the sphere with
/// the line shared by the two circle planes; `Tangent` when the circles
/// touch at `x`.
pub fn second_circle_intersection(
    omega: &Sphere,
    c1: &Circle3,
    c2: &Circle3,
    x: Vec3,
) -> Result<SecondIntersection, QuadricError> {
    if !circle_on_sphere(omega, c1) || !circle_on_sphere(omega, c2) {
        return Err(QuadricError::NotOnSphere);
    }
    let r = omega.radius;
    if c1.residual(x) > 1e-9 * r || c2.residual(x) > 1e-9 * r {
        return Err(QuadricError::NotThroughX);
    }
    if c1.normal.cross(c2.normal).norm() <= 1e-9 {
        return Err(QuadricError::CoincidentCircles);
    }
    let line = c1
        .plane()
        .intersect_plane(&c2.plane())
        .map_err(|_| QuadricError::CoincidentCircles)?;
    let hits = omega.intersect_line(&line);
    match hits.len() {
        1 => Ok(SecondIntersection::Tangent),
        2 => {
            if hits[0].dist(hits[1]) <= ROOT_SEPARATION_REL * r {
                Ok(SecondIntersection::Tangent)
            } else {
                let far = if hits[0].dist(x) >= hits[1].dist(x) { hits[0] } else { hits[1] };
                Ok(SecondIntersection::Point(far))
            }
        }
        _ => Err(QuadricError::NotThroughX),
    }
}

/// Isogonal conjugate of an on-sphere point via the two-circle route:
/// intersect the circles through `x` and each edge of the axis pair a
/// second time, then mirror that point in the bimedian. When the circles
/// touch at `x` (so `x` lies on the axis surface) the mirror of `x` itself
/// is the conjugate.
pub fn bogdanov_conjugate(
    t: &Tetrahedron,
    x: Vec3,
    axis: BimedianAxis,
) -> Result<Vec3, QuadricError> {
    let frame = fit_canonical_frame(t, &tetra_tolerance(t))?;
    let omega = circumsphere(t)?;
    if omega.surface_residual(x) > 1e-9 * omega.radius {
        return Err(QuadricError::NotOnSphere);
    }
    let snap = INPUT_SNAP_REL * omega.radius;
    if VertexId::ALL.iter().any(|&v| t.vertex(v).dist(x) < snap) {
        return Err(QuadricError::VertexInput);
    }
    let (edge_d, edge_nd) = axis.edge_pair();
    let (p1, p2) = t.edge_endpoints(edge_d);
    let (q1, q2) = t.edge_endpoints(edge_nd);
    let c1 = Circle3::through(x, p1, p2).map_err(|_| QuadricError::VertexInput)?;
    let c2 = Circle3::through(x, q1, q2).map_err(|_| QuadricError::VertexInput)?;
    let axis_line = hpar_axis_line(&hpar(&frame, axis));
    match second_circle_intersection(&omega, &c1, &c2, x)? {
        SecondIntersection::Point(x_axis) => Ok(axis_line.reflect_point(x_axis)),
        SecondIntersection::Tangent => Ok(axis_line.reflect_point(x)),
    }
}

/// A canonical point of the circumsphere–surface curve for the given axis,
/// parameterized by the coordinate `s` paired first in the surface's
/// product term (`x` for axis C, `y` for A, `z` for B); `positive` picks
/// the branch of the remaining square root. `None` when `|s| ≥ R`.
pub fn point_on_sphere_and_hpar(
    params: &IsoscelesParams,
    axis: BimedianAxis,
    s: f64,
    positive: bool,
) -> Option<Vec3> {
    let r = params.circumradius();
    if s.abs() >= r {
        return None;
    }
    let k = axis_coefficient(params, axis);
    let u_sq = (r * r - s * s) / (1.0 + k * k * s * s);
    let u = if positive { u_sq.sqrt() } else { -u_sq.sqrt() };
    let w = -k * s * u;
    Some(match axis {
        BimedianAxis::C => Vec3::new(s, u, w),
        BimedianAxis::A => Vec3::new(w, s, u),
        BimedianAxis::B => Vec3::new(u, w, s),
    })
}
