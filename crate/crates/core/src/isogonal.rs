//! Isogonal conjugation in a tetrahedron.
//!
//! Two points `P`, `Q` are isogonal conjugates when, at every edge, the
//! planes spanned by the edge with `P` and with `Q` are mirror images in the
//! interior bisector plane of that edge's dihedral angle. The conjugate of a
//! generic point is the circumcenter of its four reflections in the face
//! planes; its pedal sphere (through the four face projections) is centered
//! at the midpoint of `P` and its conjugate, and the two conjugates share
//! one pedal sphere through all eight projections.
//!
//! Degenerate regimes are reported rather than computed: a vertex is
//! conjugate to every point of the opposite face plane, any point of an
//! edgeline is conjugate to every point of the opposite edgeline, and a
//! point whose face reflections are coplanar has its "conjugate" at
//! infinity (a direction, not a point).

use crate::geom3::{circumsphere4_eps, GeomError, Sphere, Tolerance, Vec3};
use crate::tetra::{EdgeId, Tetrahedron, VertexId};
use thiserror::Error;

/// Relative snap distance for classifying a point as being *at* a vertex or
/// *on* an edgeline; scaled by the tolerance's length scale.
pub const DEGENERACY_SNAP_REL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum IsogonalError {
    #[error("the four face projections are degenerate (coplanar or coincident)")]
    DegenerateProjections,
    #[error("point lies on the edgeline")]
    PointOnEdgeLine,
}

/// Outcome of conjugating a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConjugateResult {
    /// Finite conjugate point.
    Point(Vec3),
    /// The face reflections are coplanar; the conjugate recedes along this
    /// unit direction.
    AtInfinity(Vec3),
    /// Input is (within snap distance of) this vertex; its conjugate is the
    /// whole opposite face plane.
    VertexDegenerate(VertexId),
    /// Input lies on this edgeline; its conjugate is the whole opposite
    /// edgeline.
    OnEdgeLine(EdgeId),
}

impl ConjugateResult {
    pub fn point(&self) -> Option<Vec3> {
        match self {
            ConjugateResult::Point(p) => Some(*p),
            _ => None,
        }
    }
}

/// Pedal sphere of a point: the sphere through its four face-plane
/// projections.
#[derive(Debug, Clone, Copy)]
pub struct PedalSphere {
    pub sphere: Sphere,
    /// Projections onto the faces opposite `A, B, C, D`, in that order.
    pub foot_points: [Vec3; 4],
}

/// Reflections of `p` in the four face planes, ordered by opposite vertex
/// `A, B, C, D`.
pub fn face_reflections(t: &Tetrahedron, p: Vec3) -> [Vec3; 4] {
    VertexId::ALL.map(|v| t.face_plane(v).reflect_point(p))
}

/// Projections of `p` onto the four face planes, same order as
/// [`face_reflections`].
pub fn face_projections(t: &Tetrahedron, p: Vec3) -> [Vec3; 4] {
    VertexId::ALL.map(|v| t.face_plane(v).project_point(p))
}

fn snap_distance(tol: &Tolerance) -> f64 {
    DEGENERACY_SNAP_REL * tol.length_scale()
}

fn near_vertex(t: &Tetrahedron, p: Vec3, snap: f64) -> Option<VertexId> {
    VertexId::ALL.into_iter().find(|&v| t.vertex(v).dist(p) < snap)
}

fn near_edgeline(t: &Tetrahedron, p: Vec3, snap: f64) -> Option<EdgeId> {
    EdgeId::ALL
        .into_iter()
        .find(|&e| t.edge_line(e).distance_to_point(p) < snap)
}

/// Consistently oriented unit normal of a near-coplanar point set: averages
/// the four triple normals after aligning their signs.
fn common_normal(pts: &[Vec3; 4]) -> Option<Vec3> {
    let mut acc = Vec3::default();
    let mut reference = None;
    for skip in 0..4 {
        let tri: Vec<Vec3> = (0..4).filter(|&i| i != skip).map(|i| pts[i]).collect();
        let n = (tri[1] - tri[0]).cross(tri[2] - tri[0]);
        let Some(u) = n.normalized() else { continue };
        match reference {
            None => {
                reference = Some(u);
                acc = acc + u;
            }
            Some(r) => {
                acc = acc + if u.dot(r) < 0.0 { -u } else { u };
            }
        }
    }
    acc.normalized()
}

/// Isogonal conjugate of `p` with respect to `t`.
///
/// Points within `1e-7 * scale` of a vertex or an edgeline are reported as
/// the corresponding degenerate regime. Otherwise the conjugate is the
/// circumcenter of the four face reflections; when those reflections are
/// coplanar the result is [`ConjugateResult::AtInfinity`].
pub fn isogonal_conjugate(t: &Tetrahedron, p: Vec3, tol: &Tolerance) -> ConjugateResult {
    let snap = snap_distance(tol);
    if let Some(v) = near_vertex(t, p, snap) {
        return ConjugateResult::VertexDegenerate(v);
    }
    if let Some(e) = near_edgeline(t, p, snap) {
        return ConjugateResult::OnEdgeLine(e);
    }
    let refl = face_reflections(t, p);
    match circumsphere4_eps(refl[0], refl[1], refl[2], refl[3], tol.eps_rel()) {
        Ok(s) => ConjugateResult::Point(s.center),
        Err(GeomError::CoplanarPoints) => match common_normal(&refl) {
            Some(n) => ConjugateResult::AtInfinity(n),
            None => ConjugateResult::AtInfinity(Vec3::new(0.0, 0.0, 1.0)),
        },
        Err(_) => unreachable!("circumsphere4 only fails with CoplanarPoints"),
    }
}

/// Pedal sphere of `p`: circumsphere of the four face projections. Fails
/// when the projections are coplanar (e.g. `p` at a vertex).
pub fn pedal_sphere(t: &Tetrahedron, p: Vec3) -> Result<PedalSphere, IsogonalError> {
    let feet = face_projections(t, p);
    let sphere = circumsphere4_eps(feet[0], feet[1], feet[2], feet[3], crate::geom3::DEFAULT_EPS_REL)
        .map_err(|_| IsogonalError::DegenerateProjections)?;
    Ok(PedalSphere { sphere, foot_points: feet })
}

/// Isogonality defect at one edge, in radians.
///
/// Azimuths about the edge are measured from the interior bisector plane of
/// the dihedral angle; the planes `edge∨P` and `edge∨Q` are mirror images in
/// that bisector exactly when the azimuth sum vanishes modulo π. Returns that
/// folded defect in `[0, π/2]`. Fails when either point is on the edgeline
/// (where the spanned plane is undefined).
pub fn dihedral_isogonality_residual(
    t: &Tetrahedron,
    edge: EdgeId,
    p: Vec3,
    q: Vec3,
) -> Result<f64, IsogonalError> {
    let (e0, e1) = t.edge_endpoints(edge);
    let u = (e1 - e0).normalized().expect("edge endpoints distinct");
    let guard = 1e-12 * t.max_edge_length();

    let perp = |x: Vec3| -> Result<Vec3, IsogonalError> {
        let w = x - e0;
        let wp = w - u * w.dot(u);
        if wp.norm() <= guard {
            return Err(IsogonalError::PointOnEdgeLine);
        }
        Ok(wp.normalized().unwrap())
    };

    // Unit in-plane directions toward the two far vertices define the wedge;
    // their sum bisects it.
    let (oc, od) = edge.complement();
    let f1 = perp(t.vertex(oc)).expect("far vertex off the edgeline");
    let f2 = perp(t.vertex(od)).expect("far vertex off the edgeline");
    let bis = (f1 + f2)
        .normalized()
        .expect("non-flat dihedral wedge");
    let e2 = u.cross(bis);

    let azimuth = |x: Vec3| -> Result<f64, IsogonalError> {
        let d = perp(x)?;
        Ok(d.dot(e2).atan2(d.dot(bis)))
    };

    let sum = azimuth(p)? + azimuth(q)?;
    let folded = sum.rem_euclid(std::f64::consts::PI);
    Ok(folded.min(std::f64::consts::PI - folded))
}

/// Whether `(p, q)` is an isogonal-conjugate pair.
///
/// True when all six edge residuals are at most `tol.angle_tol()`, or when
/// the pair matches a degenerate clause: a vertex with any point of the
/// opposite face plane, or points of two opposite edgelines.
pub fn is_isogonal_pair(t: &Tetrahedron, p: Vec3, q: Vec3, tol: &Tolerance) -> bool {
    let snap = snap_distance(tol);

    for (x, y) in [(p, q), (q, p)] {
        if let Some(v) = near_vertex(t, x, snap) {
            return t.face_plane(v).distance_to_point(y) < snap;
        }
    }
    let p_edge = near_edgeline(t, p, snap);
    let q_edge = near_edgeline(t, q, snap);
    match (p_edge, q_edge) {
        (Some(e), Some(f)) => return e.opposite() == f,
        (Some(_), None) | (None, Some(_)) => return false,
        (None, None) => {}
    }
    EdgeId::ALL.iter().all(|&e| {
        dihedral_isogonality_residual(t, e, p, q)
            .map(|r| r <= tol.angle_tol())
            .unwrap_or(false)
    })
}
