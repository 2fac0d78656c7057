//! Tetrahedron bookkeeping and the canonical embedding of isosceles
//! (equifacial) tetrahedra.
//!
//! A tetrahedron `ABCD` is *isosceles* when its opposite edges are pairwise
//! equal: `AB = CD`, `BC = AD`, `AC = BD`. Every such tetrahedron is a rigid
//! motion of the canonical embedding
//!
//! ```text
//! A = (-a,  b,  c)    B = ( a, -b,  c)
//! C = ( a,  b, -c)    D = (-a, -b, -c)
//! ```
//!
//! whose circumcenter is the origin and whose bimedians (segments joining
//! midpoints of opposite edges) are the coordinate axes. [`fit_canonical_frame`]
//! recovers `(a, b, c)` and the rigid motion from world-space vertices;
//! [`IsoscelesQuantities`] holds the closed-form face area, center-to-face
//! distance, and half-dihedral sine.

use crate::geom3::{
    circumsphere4, rotation_from_axes, Line3, Mat3, Plane, Rigid, Sphere, Tolerance, Vec3,
    DEFAULT_EPS_REL,
};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TetraError {
    #[error("vertices are coplanar or nearly so")]
    DegenerateTetrahedron,
    #[error("canonical parameters must be nonzero")]
    ZeroParameter,
    #[error("tetrahedron is not isosceles within tolerance")]
    NotIsosceles,
    #[error("derived canonical parameters are degenerate")]
    DegenerateParams,
    #[error("rotation matrix is not orthonormal")]
    InvalidRotation,
    #[error("tetrahedron file is invalid: {0}")]
    BadFile(&'static str),
}

/// Vertex labels in the fixed order `A, B, C, D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexId {
    A,
    B,
    C,
    D,
}

impl VertexId {
    pub const ALL: [VertexId; 4] = [VertexId::A, VertexId::B, VertexId::C, VertexId::D];

    pub fn index(self) -> usize {
        match self {
            VertexId::A => 0,
            VertexId::B => 1,
            VertexId::C => 2,
            VertexId::D => 3,
        }
    }

    pub fn name(self) -> &'static str {
        ["A", "B", "C", "D"][self.index()]
    }
}

/// Edge labels; `opposite` pairs edges that share no vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeId {
    AB,
    AC,
    AD,
    BC,
    BD,
    CD,
}

impl EdgeId {
    pub const ALL: [EdgeId; 6] = [
        EdgeId::AB,
        EdgeId::AC,
        EdgeId::AD,
        EdgeId::BC,
        EdgeId::BD,
        EdgeId::CD,
    ];

    pub fn endpoints(self) -> (VertexId, VertexId) {
        use VertexId::*;
        match self {
            EdgeId::AB => (A, B),
            EdgeId::AC => (A, C),
            EdgeId::AD => (A, D),
            EdgeId::BC => (B, C),
            EdgeId::BD => (B, D),
            EdgeId::CD => (C, D),
        }
    }

    /// The two vertices not on this edge, in `ABCD` order.
    pub fn complement(self) -> (VertexId, VertexId) {
        self.opposite().endpoints()
    }

    pub fn opposite(self) -> EdgeId {
        match self {
            EdgeId::AB => EdgeId::CD,
            EdgeId::AC => EdgeId::BD,
            EdgeId::AD => EdgeId::BC,
            EdgeId::BC => EdgeId::AD,
            EdgeId::BD => EdgeId::AC,
            EdgeId::CD => EdgeId::AB,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EdgeId::AB => "AB",
            EdgeId::AC => "AC",
            EdgeId::AD => "AD",
            EdgeId::BC => "BC",
            EdgeId::BD => "BD",
            EdgeId::CD => "CD",
        }
    }
}

/// One of the three bimedians, named by the canonical coordinate axis it
/// occupies: `A` joins the midpoints of `DA` and `BC` (the x-axis), `B` joins
/// `DB`/`AC` (y), `C` joins `DC`/`AB` (z).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BimedianAxis {
    A,
    B,
    C,
}

impl BimedianAxis {
    pub const ALL: [BimedianAxis; 3] = [BimedianAxis::A, BimedianAxis::B, BimedianAxis::C];

    /// Edge pair `(through D, not through D)` whose midpoints the bimedian joins.
    pub fn edge_pair(self) -> (EdgeId, EdgeId) {
        match self {
            BimedianAxis::A => (EdgeId::AD, EdgeId::BC),
            BimedianAxis::B => (EdgeId::BD, EdgeId::AC),
            BimedianAxis::C => (EdgeId::CD, EdgeId::AB),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BimedianAxis::A => "A",
            BimedianAxis::B => "B",
            BimedianAxis::C => "C",
        }
    }
}

/// Non-degenerate tetrahedron. Construction enforces a volume bound
/// (`|det| > eps_rel * L³` on the edge matrix), so face planes always exist.
#[derive(Debug, Clone, Copy)]
pub struct Tetrahedron {
    vertices: [Vec3; 4],
}

impl Tetrahedron {
    pub fn new(a: Vec3, b: Vec3, c: Vec3, d: Vec3) -> Result<Tetrahedron, TetraError> {
        let t = Tetrahedron { vertices: [a, b, c, d] };
        let l = t.max_edge_length();
        let det = (b - a).dot((c - a).cross(d - a));
        if !det.is_finite() || det.abs() <= DEFAULT_EPS_REL * l * l * l {
            return Err(TetraError::DegenerateTetrahedron);
        }
        Ok(t)
    }

    pub fn from_vertices(v: [Vec3; 4]) -> Result<Tetrahedron, TetraError> {
        Tetrahedron::new(v[0], v[1], v[2], v[3])
    }

    pub fn vertices(&self) -> [Vec3; 4] {
        self.vertices
    }

    pub fn vertex(&self, id: VertexId) -> Vec3 {
        self.vertices[id.index()]
    }

    /// Vertices of the face opposite `id`, in `ABCD` order.
    pub fn face_vertices(&self, id: VertexId) -> [Vec3; 3] {
        let mut out = [Vec3::default(); 3];
        let mut k = 0;
        for v in VertexId::ALL {
            if v != id {
                out[k] = self.vertex(v);
                k += 1;
            }
        }
        out
    }

    /// Plane of the face opposite `id`.
    pub fn face_plane(&self, id: VertexId) -> Plane {
        let [p, q, r] = self.face_vertices(id);
        Plane::through(p, q, r).expect("non-degenerate tetrahedron has proper faces")
    }

    pub fn edge_endpoints(&self, e: EdgeId) -> (Vec3, Vec3) {
        let (p, q) = e.endpoints();
        (self.vertex(p), self.vertex(q))
    }

    pub fn edge_length(&self, e: EdgeId) -> f64 {
        let (p, q) = self.edge_endpoints(e);
        p.dist(q)
    }

    pub fn edge_line(&self, e: EdgeId) -> Line3 {
        let (p, q) = self.edge_endpoints(e);
        Line3::through(p, q).expect("edge endpoints are distinct")
    }

    pub fn edge_midpoint(&self, e: EdgeId) -> Vec3 {
        let (p, q) = self.edge_endpoints(e);
        p.midpoint(q)
    }

    pub fn max_edge_length(&self) -> f64 {
        EdgeId::ALL
            .iter()
            .map(|&e| self.edge_length(e))
            .fold(0.0, f64::max)
    }

    pub fn centroid(&self) -> Vec3 {
        let [a, b, c, d] = self.vertices;
        (a + b + c + d) / 4.0
    }

    pub fn signed_volume(&self) -> f64 {
        let [a, b, c, d] = self.vertices;
        (b - a).dot((c - a).cross(d - a)) / 6.0
    }

    /// Bimedian line, oriented from the midpoint of the `D`-edge toward the
    /// midpoint of the opposite edge; its base point is the centroid.
    pub fn bimedian(&self, axis: BimedianAxis) -> Line3 {
        let (ed, eo) = axis.edge_pair();
        let from = self.edge_midpoint(ed);
        let to = self.edge_midpoint(eo);
        Line3::new(self.centroid(), to - from).expect("bimedian endpoints are distinct")
    }

    pub fn transformed(&self, m: &Rigid) -> Tetrahedron {
        Tetrahedron {
            vertices: self.vertices.map(|v| m.apply(v)),
        }
    }
}

/// Canonical embedding parameters; any nonzero signs are allowed (flipping
/// the sign of one parameter mirrors the tetrahedron).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsoscelesParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl IsoscelesParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<IsoscelesParams, TetraError> {
        if a == 0.0 || b == 0.0 || c == 0.0 || !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(TetraError::ZeroParameter);
        }
        Ok(IsoscelesParams { a, b, c })
    }

    pub fn circumradius(&self) -> f64 {
        (self.a * self.a + self.b * self.b + self.c * self.c).sqrt()
    }
}

/// Closed-form metric data of the canonical isosceles tetrahedron.
#[derive(Debug, Clone, Copy)]
pub struct IsoscelesQuantities {
    /// Area of each (congruent) face: `2 sqrt(a²b² + b²c² + c²a²)`.
    pub face_area: f64,
    /// Distance from the circumcenter (= incenter) to each face plane:
    /// `2|abc| / face_area`.
    pub center_face_distance: f64,
    /// Sine of half the dihedral angle along `CD` (equivalently `AB`):
    /// `center_face_distance / |c|`.
    pub sin_half_dihedral: f64,
    /// Circumradius `sqrt(a² + b² + c²)`.
    pub circumradius: f64,
}

/// Exact canonical vertices for the given parameters.
pub fn canonical_embedding(p: &IsoscelesParams) -> Tetrahedron {
    let (a, b, c) = (p.a, p.b, p.c);
    Tetrahedron {
        vertices: [
            Vec3::new(-a, b, c),
            Vec3::new(a, -b, c),
            Vec3::new(a, b, -c),
            Vec3::new(-a, -b, -c),
        ],
    }
}

/// Closed-form quantities; see field docs.
pub fn quantities(p: &IsoscelesParams) -> IsoscelesQuantities {
    let (a2, b2, c2) = (p.a * p.a, p.b * p.b, p.c * p.c);
    let face_area = 2.0 * (a2 * b2 + b2 * c2 + c2 * a2).sqrt();
    let center_face_distance = 2.0 * (p.a * p.b * p.c).abs() / face_area;
    IsoscelesQuantities {
        face_area,
        center_face_distance,
        sin_half_dihedral: center_face_distance / p.c.abs(),
        circumradius: (a2 + b2 + c2).sqrt(),
    }
}

/// Recovered pose of an isosceles tetrahedron: world = `rotation * canonical
/// + translation`, with `rotation` a proper rotation.
#[derive(Debug, Clone, Copy)]
pub struct CanonicalFrame {
    pub params: IsoscelesParams,
    pub rotation: Mat3,
    pub translation: Vec3,
}

impl CanonicalFrame {
    pub fn new(
        params: IsoscelesParams,
        rotation: Mat3,
        translation: Vec3,
    ) -> Result<CanonicalFrame, TetraError> {
        if !rotation.is_orthonormal(1e-9) || rotation.det() < 0.0 {
            return Err(TetraError::InvalidRotation);
        }
        Ok(CanonicalFrame { params, rotation, translation })
    }

    pub fn rigid(&self) -> Rigid {
        Rigid { rotation: self.rotation, translation: self.translation }
    }

    pub fn to_world(&self, canonical: Vec3) -> Vec3 {
        self.rigid().apply(canonical)
    }

    pub fn to_canonical(&self, world: Vec3) -> Vec3 {
        self.rigid().inverse().apply(world)
    }

    /// The posed tetrahedron this frame describes.
    pub fn tetrahedron(&self) -> Tetrahedron {
        canonical_embedding(&self.params).transformed(&self.rigid())
    }
}

/// True when the three pairs of opposite edges are equal within
/// `tol.length_tol()`.
pub fn is_isosceles(t: &Tetrahedron, tol: &Tolerance) -> bool {
    EdgeId::ALL.iter().all(|&e| {
        (t.edge_length(e) - t.edge_length(e.opposite())).abs() <= tol.length_tol()
    })
}

/// Default tolerance for a tetrahedron: `eps_rel` 1e-9 at the scale of the
/// circumradius (max edge length if the circumsphere solve fails).
pub fn tetra_tolerance(t: &Tetrahedron) -> Tolerance {
    let scale = circumsphere(t)
        .map(|s| s.radius)
        .unwrap_or_else(|_| t.max_edge_length());
    Tolerance::with_scale(scale).expect("positive scale")
}

/// Circumscribed sphere of the tetrahedron.
pub fn circumsphere(t: &Tetrahedron) -> Result<Sphere, TetraError> {
    let [a, b, c, d] = t.vertices();
    circumsphere4(a, b, c, d).map_err(|_| TetraError::DegenerateTetrahedron)
}

pub fn circumcenter(t: &Tetrahedron) -> Result<Vec3, TetraError> {
    Ok(circumsphere(t)?.center)
}

fn face_area(v: [Vec3; 3]) -> f64 {
    (v[1] - v[0]).cross(v[2] - v[0]).norm() / 2.0
}

/// Incenter as the face-area-weighted average of the vertices.
pub fn incenter(t: &Tetrahedron) -> Vec3 {
    let mut weighted = Vec3::default();
    let mut total = 0.0;
    for v in VertexId::ALL {
        let w = face_area(t.face_vertices(v));
        weighted = weighted + t.vertex(v) * w;
        total += w;
    }
    weighted / total
}

/// Sorted side lengths of the four faces all agree within `tol.length_tol()`.
pub fn faces_congruent(t: &Tetrahedron, tol: &Tolerance) -> bool {
    let mut triples = [[0.0f64; 3]; 4];
    for (k, v) in VertexId::ALL.into_iter().enumerate() {
        let [p, q, r] = t.face_vertices(v);
        let mut sides = [p.dist(q), q.dist(r), r.dist(p)];
        sides.sort_by(f64::total_cmp);
        triples[k] = sides;
    }
    triples[1..].iter().all(|tr| {
        tr.iter()
            .zip(triples[0].iter())
            .all(|(x, y)| (x - y).abs() <= tol.length_tol())
    })
}

/// Largest interior angle over all four faces, in radians.
pub fn max_face_angle(t: &Tetrahedron) -> f64 {
    let mut max = 0.0f64;
    for v in VertexId::ALL {
        let f = t.face_vertices(v);
        for i in 0..3 {
            let u = f[(i + 1) % 3] - f[i];
            let w = f[(i + 2) % 3] - f[i];
            let cos = u.dot(w) / (u.norm() * w.norm());
            max = max.max(cos.clamp(-1.0, 1.0).acos());
        }
    }
    max
}

/// Every face angle is strictly acute: each cosine exceeds `tol.eps_rel()`.
pub fn faces_acute(t: &Tetrahedron, tol: &Tolerance) -> bool {
    for v in VertexId::ALL {
        let f = t.face_vertices(v);
        for i in 0..3 {
            let u = f[(i + 1) % 3] - f[i];
            let w = f[(i + 2) % 3] - f[i];
            if u.dot(w) / (u.norm() * w.norm()) <= tol.eps_rel() {
                return false;
            }
        }
    }
    true
}

/// Recovers the canonical parameters and pose of an isosceles tetrahedron.
///
/// Parameter magnitudes come from the edge lengths
/// (`a² = (AB² + AC² - BC²)/8` and cyclic), axes from the bimedian
/// directions. The rotation is made proper (det +1) by construction; when
/// the measured third axis opposes the cross product of the first two, the
/// sign is absorbed into `c`, so `params` may have a negative entry for
/// mirror-image tetrahedra. Round trip:
/// `frame.tetrahedron()` reproduces `t` vertexwise.
pub fn fit_canonical_frame(
    t: &Tetrahedron,
    tol: &Tolerance,
) -> Result<CanonicalFrame, TetraError> {
    if !is_isosceles(t, tol) {
        return Err(TetraError::NotIsosceles);
    }
    let ab2 = t.edge_length(EdgeId::AB).powi(2);
    let ac2 = t.edge_length(EdgeId::AC).powi(2);
    let bc2 = t.edge_length(EdgeId::BC).powi(2);
    let l2 = t.max_edge_length().powi(2);
    let sq = [
        (ab2 + ac2 - bc2) / 8.0,
        (ab2 + bc2 - ac2) / 8.0,
        (ac2 + bc2 - ab2) / 8.0,
    ];
    if sq.iter().any(|&s| s <= tol.eps_rel() * l2) {
        return Err(TetraError::DegenerateParams);
    }
    let (a, b, mut c) = (sq[0].sqrt(), sq[1].sqrt(), sq[2].sqrt());

    let axis_dir = |axis: BimedianAxis| {
        let (ed, eo) = axis.edge_pair();
        t.edge_midpoint(eo) - t.edge_midpoint(ed)
    };
    let u_a = axis_dir(BimedianAxis::A);
    let u_b = axis_dir(BimedianAxis::B);
    let u_c = axis_dir(BimedianAxis::C);
    let rotation =
        rotation_from_axes(u_a, u_b).map_err(|_| TetraError::DegenerateParams)?;
    // Proper rotation fixed; a mirror pose shows up as the measured C axis
    // opposing column 2, and is carried by the sign of c.
    if rotation.col(2).dot(u_c) < 0.0 {
        c = -c;
    }
    let params = IsoscelesParams::new(a, b, c).map_err(|_| TetraError::DegenerateParams)?;
    let frame = CanonicalFrame::new(params, rotation, t.centroid())?;

    // Consistency: the frame must reproduce the input vertexwise.
    let rebuilt = frame.tetrahedron();
    for (p, q) in rebuilt.vertices().iter().zip(t.vertices().iter()) {
        if p.dist(*q) > 1e3 * tol.length_tol() {
            return Err(TetraError::NotIsosceles);
        }
    }
    Ok(frame)
}

/// On-disk tetrahedron description: either canonical parameters or four
/// explicit vertices.
///
/// ```json
/// {"params": [1.0, 2.0, 3.0]}
/// {"vertices": [[x,y,z], [x,y,z], [x,y,z], [x,y,z]]}
/// ```
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TetraFile {
    params: Option<[f64; 3]>,
    vertices: Option<[[f64; 3]; 4]>,
}

/// Parses the JSON tetrahedron format. Exactly one of `params` / `vertices`
/// must be present.
pub fn tetrahedron_from_json(text: &str) -> Result<Tetrahedron, TetraError> {
    let file: TetraFile =
        serde_json::from_str(text).map_err(|_| TetraError::BadFile("malformed JSON"))?;
    match (file.params, file.vertices) {
        (Some([a, b, c]), None) => {
            let p = IsoscelesParams::new(a, b, c)?;
            Ok(canonical_embedding(&p))
        }
        (None, Some(vs)) => Tetrahedron::from_vertices(vs.map(Vec3::from_array)),
        _ => Err(TetraError::BadFile(
            "expected exactly one of \"params\" or \"vertices\"",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom3::ORIGIN;

    fn params(a: f64, b: f64, c: f64) -> IsoscelesParams {
        IsoscelesParams::new(a, b, c).unwrap()
    }

    fn sample_rigid() -> Rigid {
        Rigid {
            rotation: Mat3::from_quaternion(0.4, -0.7, 1.3, 0.2),
            translation: Vec3::new(3.0, -11.0, 4.5),
        }
    }

    #[test]
    fn canonical_edges_and_regular_case() {
        let t = canonical_embedding(&params(1.0, 1.0, 1.0));
        for e in EdgeId::ALL {
            assert!((t.edge_length(e) - 8.0f64.sqrt()).abs() < 1e-15);
        }
        let t = canonical_embedding(&params(1.0, 2.0, 3.0));
        assert!((t.edge_length(EdgeId::AB) - 20.0f64.sqrt()).abs() < 1e-15);
        assert!((t.edge_length(EdgeId::CD) - 20.0f64.sqrt()).abs() < 1e-15);
        assert!((t.edge_length(EdgeId::BC) - 52.0f64.sqrt()).abs() < 1e-15);
        assert!((t.edge_length(EdgeId::AD) - 52.0f64.sqrt()).abs() < 1e-15);
        assert!((t.edge_length(EdgeId::AC) - 40.0f64.sqrt()).abs() < 1e-15);
        assert!((t.edge_length(EdgeId::BD) - 40.0f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn zero_parameter_rejected() {
        assert!(matches!(
            IsoscelesParams::new(1.0, 0.0, 2.0),
            Err(TetraError::ZeroParameter)
        ));
    }

    #[test]
    fn degenerate_tetrahedron_rejected() {
        let e = Tetrahedron::new(
            ORIGIN,
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
            Vec3::new(0.5, 0.5, 0.0),
        );
        assert!(matches!(e, Err(TetraError::DegenerateTetrahedron)));
    }

    #[test]
    fn isosceles_predicate() {
        let t = canonical_embedding(&params(1.0, 2.0, 3.0));
        assert!(is_isosceles(&t, &tetra_tolerance(&t)));
        let posed = t.transformed(&sample_rigid());
        assert!(is_isosceles(&posed, &tetra_tolerance(&posed)));

        let [a, b, c, d] = t.vertices();
        let skew = Tetrahedron::new(a, b, c, d + Vec3::new(0.1, 0.0, 0.0)).unwrap();
        assert!(!is_isosceles(&skew, &tetra_tolerance(&skew)));
    }

    #[test]
    fn quantities_golden_values() {
        // (1,2,3): area 14, center-face distance 6/7, half-dihedral sine 2/7.
        let q = quantities(&params(1.0, 2.0, 3.0));
        assert!((q.face_area - 14.0).abs() < 1e-12 * 14.0);
        assert!((q.center_face_distance - 6.0 / 7.0).abs() < 1e-12);
        assert!((q.sin_half_dihedral - 2.0 / 7.0).abs() < 1e-12);
        assert!((q.circumradius - 14.0f64.sqrt()).abs() < 1e-12);

        // (1,1,1): regular tetrahedron, half-dihedral = asin(1/sqrt(3)).
        let q = quantities(&params(1.0, 1.0, 1.0));
        assert!((q.face_area - 2.0 * 3.0f64.sqrt()).abs() < 1e-12);
        assert!((q.center_face_distance - 1.0 / 3.0f64.sqrt()).abs() < 1e-12);
        assert!((q.sin_half_dihedral - 1.0 / 3.0f64.sqrt()).abs() < 1e-12);
        let half_dihedral_deg = q.sin_half_dihedral.asin().to_degrees();
        assert!((half_dihedral_deg - 35.264_389_682_754_65).abs() < 1e-9);
    }

    /// Independent routes: Heron for the area, point-plane distance for d,
    /// face-normal angle for the dihedral.
    #[test]
    fn quantities_against_geometric_oracles() {
        for p in [params(1.0, 2.0, 3.0), params(0.7, 1.1, 0.4), params(2.5, 0.3, 1.9)] {
            let q = quantities(&p);
            let t = canonical_embedding(&p);

            let [fa, fb, fc] = t.face_vertices(VertexId::A);
            let (x, y, z) = (fa.dist(fb), fb.dist(fc), fc.dist(fa));
            let s = (x + y + z) / 2.0;
            let heron = (s * (s - x) * (s - y) * (s - z)).sqrt();
            assert!((q.face_area - heron).abs() < 1e-12 * heron);

            let dist = t.face_plane(VertexId::A).distance_to_point(ORIGIN);
            assert!((q.center_face_distance - dist).abs() < 1e-12 * q.circumradius);

            // Dihedral along CD from the face planes meeting there.
            let n1 = t.face_plane(VertexId::A).normal(); // BCD
            let n2 = t.face_plane(VertexId::B).normal(); // ACD
            let dihedral = {
                let cos = n1.dot(n2).clamp(-1.0, 1.0);
                let raw = cos.acos();
                // Normal orientation is arbitrary; the interior dihedral is
                // the variant consistent with the distance formula.
                let cands = [raw, std::f64::consts::PI - raw];
                let want = q.sin_half_dihedral;
                *cands
                    .iter()
                    .min_by(|&&u, &&v| {
                        ((u / 2.0).sin() - want)
                            .abs()
                            .total_cmp(&((v / 2.0).sin() - want).abs())
                    })
                    .unwrap()
            };
            assert!(((dihedral / 2.0).sin() - q.sin_half_dihedral).abs() < 1e-11);
        }
    }

    #[test]
    fn quantities_scale_homogeneously() {
        let p = params(0.8, 1.7, 2.2);
        let k = 3.75;
        let q1 = quantities(&p);
        let q2 = quantities(&params(k * p.a, k * p.b, k * p.c));
        assert!((q2.face_area - k * k * q1.face_area).abs() < 1e-10);
        assert!((q2.center_face_distance - k * q1.center_face_distance).abs() < 1e-12);
        assert!((q2.sin_half_dihedral - q1.sin_half_dihedral).abs() < 1e-14);
        assert!((q2.circumradius - k * q1.circumradius).abs() < 1e-12);
    }

    #[test]
    fn centers_coincide_exactly_for_isosceles() {
        let t = canonical_embedding(&params(1.0, 2.0, 3.0));
        assert!(circumcenter(&t).unwrap().dist(ORIGIN) < 1e-13);
        assert!(incenter(&t).dist(ORIGIN) < 1e-13);

        let posed = t.transformed(&sample_rigid());
        let cc = circumcenter(&posed).unwrap();
        let ic = incenter(&posed);
        assert!(cc.dist(ic) < 1e-12);
    }

    #[test]
    fn centers_differ_for_scalene() {
        let t = Tetrahedron::new(
            ORIGIN,
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
            Vec3::new(0.0, 0.0, 1.0),
        )
        .unwrap();
        let cc = circumcenter(&t).unwrap();
        assert!(cc.dist(Vec3::new(0.5, 0.5, 0.5)) < 1e-13);
        let ic = incenter(&t);
        assert!(cc.dist(ic) > 0.05);
        // The incenter is equidistant from the four face planes.
        let d0 = t.face_plane(VertexId::A).distance_to_point(ic);
        for v in VertexId::ALL {
            assert!((t.face_plane(v).distance_to_point(ic) - d0).abs() < 1e-12);
        }
    }

    #[test]
    fn congruence_and_acuteness() {
        let t = canonical_embedding(&params(1.0, 2.0, 3.0));
        let tol = tetra_tolerance(&t);
        assert!(faces_congruent(&t, &tol));
        assert!(faces_acute(&t, &tol));

        let t = Tetrahedron::new(
            ORIGIN,
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
            Vec3::new(0.0, 0.0, 1.0),
        )
        .unwrap();
        let tol = tetra_tolerance(&t);
        assert!(!faces_congruent(&t, &tol));
        // Right angles on three faces: not strictly acute.
        assert!(!faces_acute(&t, &tol));
    }

    #[test]
    fn bimedians_are_canonical_axes() {
        let t = canonical_embedding(&params(1.0, 2.0, 3.0));
        let axes = [
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
            Vec3::new(0.0, 0.0, 1.0),
        ];
        for (axis, want) in BimedianAxis::ALL.into_iter().zip(axes) {
            let l = t.bimedian(axis);
            assert!(l.distance_to_point(ORIGIN) < 1e-14);
            assert!(l.direction().dist(want) < 1e-14);
        }
    }

    #[test]
    fn fit_recovers_identity_pose() {
        let p = params(1.0, 2.0, 3.0);
        let t = canonical_embedding(&p);
        let f = fit_canonical_frame(&t, &tetra_tolerance(&t)).unwrap();
        assert!((f.params.a - 1.0).abs() < 1e-12);
        assert!((f.params.b - 2.0).abs() < 1e-12);
        assert!((f.params.c - 3.0).abs() < 1e-12);
        assert!(f.rotation.is_orthonormal(1e-12));
        assert!(f.translation.dist(ORIGIN) < 1e-13);
        for (i, col) in [0, 1, 2].into_iter().enumerate() {
            let mut want = [0.0; 3];
            want[i] = 1.0;
            assert!(f.rotation.col(col).dist(Vec3::from_array(want)) < 1e-12);
        }
    }

    #[test]
    fn fit_round_trips_posed_and_mirrored() {
        for (a, b, c) in [(1.0, 2.0, 3.0), (1.0, 2.0, -3.0), (0.6, 0.6, 1.4)] {
            let t = canonical_embedding(&params(a, b, c)).transformed(&sample_rigid());
            let tol = tetra_tolerance(&t);
            let f = fit_canonical_frame(&t, &tol).unwrap();
            assert!((f.params.a.abs() - a.abs()).abs() < 1e-10);
            assert!((f.params.b.abs() - b.abs()).abs() < 1e-10);
            assert!((f.params.c.abs() - c.abs()).abs() < 1e-10);
            assert!((f.rotation.det() - 1.0).abs() < 1e-10);
            let rebuilt = f.tetrahedron();
            for (p, q) in rebuilt.vertices().iter().zip(t.vertices().iter()) {
                assert!(p.dist(*q) < 1e-9 * tol.length_scale());
            }
        }
    }

    #[test]
    fn fit_rejects_non_isosceles() {
        let t = Tetrahedron::new(
            ORIGIN,
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
            Vec3::new(0.0, 0.0, 1.0),
        )
        .unwrap();
        assert!(matches!(
            fit_canonical_frame(&t, &tetra_tolerance(&t)),
            Err(TetraError::NotIsosceles)
        ));
    }

    #[test]
    fn file_format_round_trips() {
        let t = tetrahedron_from_json(r#"{"params": [1.0, 2.0, 3.0]}"#).unwrap();
        assert!(t.vertex(VertexId::A).dist(Vec3::new(-1.0, 2.0, 3.0)) < 1e-15);

        let t = tetrahedron_from_json(
            r#"{"vertices": [[0,0,0], [1,0,0], [0,1,0], [0,0,1]]}"#,
        )
        .unwrap();
        assert!(t.vertex(VertexId::D).dist(Vec3::new(0.0, 0.0, 1.0)) < 1e-15);

        assert!(tetrahedron_from_json("{}").is_err());
        assert!(tetrahedron_from_json(r#"{"params": [1,2]}"#).is_err());
        assert!(tetrahedron_from_json(r#"{"params": [1,2,3], "vertices": []}"#).is_err());
        assert!(tetrahedron_from_json("not json").is_err());
        assert!(matches!(
            tetrahedron_from_json(r#"{"params": [1.0, 0.0, 3.0]}"#),
            Err(TetraError::ZeroParameter)
        ));
    }

    #[test]
    fn edge_opposites_pair_disjoint_vertices() {
        for e in EdgeId::ALL {
            let (a, b) = e.endpoints();
            let (c, d) = e.opposite().endpoints();
            let mut ids = [a, b, c, d].map(|v| v.index());
            ids.sort_unstable();
            assert_eq!(ids, [0, 1, 2, 3]);
            assert_eq!(e.opposite().opposite(), e);
        }
    }
}
