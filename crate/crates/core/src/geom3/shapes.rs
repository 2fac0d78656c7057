use super::vec::{Mat3, Rigid, Vec3};
use super::GeomError;

/// Relative epsilon used when no caller-supplied [`Tolerance`] is in play
/// (constructor validation, default degeneracy thresholds).
pub const DEFAULT_EPS_REL: f64 = 1e-9;

/// Scale-aware comparison context: thresholds are `eps_rel` times the
/// appropriate power of `length_scale`, so tests behave identically for a
/// tetrahedron of circumradius 1e-3 and one of circumradius 1e3.
#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    eps_rel: f64,
    length_scale: f64,
}

impl Tolerance {
    /// `eps_rel` must be in (0, 1e-3], `length_scale` positive and finite.
    pub fn new(eps_rel: f64, length_scale: f64) -> Result<Tolerance, GeomError> {
        if !(eps_rel > 0.0 && eps_rel <= 1e-3) {
            return Err(GeomError::InvalidTolerance);
        }
        if !(length_scale > 0.0 && length_scale.is_finite()) {
            return Err(GeomError::InvalidTolerance);
        }
        Ok(Tolerance { eps_rel, length_scale })
    }

    /// Default `eps_rel` (1e-9) at the given scale.
    pub fn with_scale(length_scale: f64) -> Result<Tolerance, GeomError> {
        Tolerance::new(DEFAULT_EPS_REL, length_scale)
    }

    pub fn eps_rel(&self) -> f64 {
        self.eps_rel
    }

    pub fn length_scale(&self) -> f64 {
        self.length_scale
    }

    /// Absolute length threshold `eps_rel * length_scale`.
    pub fn length_tol(&self) -> f64 {
        self.eps_rel * self.length_scale
    }

    /// Angle threshold in radians; angles are dimensionless so this is just
    /// `eps_rel`.
    pub fn angle_tol(&self) -> f64 {
        self.eps_rel
    }

    pub fn points_eq(&self, p: Vec3, q: Vec3) -> bool {
        p.dist(q) <= self.length_tol()
    }
}

impl Default for Tolerance {
    /// Unit length scale with the default relative epsilon.
    fn default() -> Self {
        Tolerance { eps_rel: DEFAULT_EPS_REL, length_scale: 1.0 }
    }
}

/// Line through `point` with unit `direction`.
#[derive(Debug, Clone, Copy)]
pub struct Line3 {
    point: Vec3,
    direction: Vec3,
}

impl Line3 {
    /// Normalizes `direction`; rejects the zero vector.
    pub fn new(point: Vec3, direction: Vec3) -> Result<Line3, GeomError> {
        let direction = direction.normalized().ok_or(GeomError::ZeroDirection)?;
        Ok(Line3 { point, direction })
    }

    /// Line through two distinct points.
    pub fn through(p: Vec3, q: Vec3) -> Result<Line3, GeomError> {
        Line3::new(p, q - p)
    }

    pub fn point(&self) -> Vec3 {
        self.point
    }

    pub fn direction(&self) -> Vec3 {
        self.direction
    }

    pub fn point_at(&self, t: f64) -> Vec3 {
        self.point + self.direction * t
    }

    /// Orthogonal projection of `p` onto the line.
    pub fn project_point(&self, p: Vec3) -> Vec3 {
        self.point + self.direction * (p - self.point).dot(self.direction)
    }

    /// Reflection of `p` across the line (half-turn about it).
    pub fn reflect_point(&self, p: Vec3) -> Vec3 {
        self.project_point(p) * 2.0 - p
    }

    pub fn distance_to_point(&self, p: Vec3) -> f64 {
        (p - self.project_point(p)).norm()
    }

    pub fn transformed(&self, m: &Rigid) -> Line3 {
        Line3 {
            point: m.apply(self.point),
            direction: m.apply_dir(self.direction),
        }
    }
}

/// Plane `{ p : normal · p = offset }` with unit `normal`; `offset` is the
/// signed distance of the plane from the origin along `normal`. Predicates
/// built on it never depend on the sign choice of `normal`.
#[derive(Debug, Clone, Copy)]
pub struct Plane {
    normal: Vec3,
    offset: f64,
}

impl Plane {
    /// Normalizes `normal` (and scales `offset` accordingly).
    pub fn new(normal: Vec3, offset: f64) -> Result<Plane, GeomError> {
        let n = normal.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(GeomError::ZeroDirection);
        }
        Ok(Plane { normal: normal / n, offset: offset / n })
    }

    /// Plane through three points; the normal follows the right-hand rule on
    /// `(p1-p0) x (p2-p0)`. Fails when the points are collinear at scale
    /// (cross-product norm below `eps_rel * L^2`, `L` = max pairwise distance).
    pub fn through(p0: Vec3, p1: Vec3, p2: Vec3) -> Result<Plane, GeomError> {
        let n = (p1 - p0).cross(p2 - p0);
        let scale = p0.dist(p1).max(p0.dist(p2)).max(p1.dist(p2));
        if n.norm() <= DEFAULT_EPS_REL * scale * scale {
            return Err(GeomError::CollinearPoints);
        }
        let normal = n.normalized().ok_or(GeomError::CollinearPoints)?;
        let offset = (normal.dot(p0) + normal.dot(p1) + normal.dot(p2)) / 3.0;
        Ok(Plane { normal, offset })
    }

    pub fn normal(&self) -> Vec3 {
        self.normal
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    /// Signed distance from `p` to the plane (positive on the `normal` side).
    pub fn signed_distance(&self, p: Vec3) -> f64 {
        self.normal.dot(p) - self.offset
    }

    pub fn distance_to_point(&self, p: Vec3) -> f64 {
        self.signed_distance(p).abs()
    }

    /// Foot of the perpendicular from `p`.
    pub fn project_point(&self, p: Vec3) -> Vec3 {
        p - self.normal * self.signed_distance(p)
    }

    /// Mirror image of `p` in the plane.
    pub fn reflect_point(&self, p: Vec3) -> Vec3 {
        p - self.normal * (2.0 * self.signed_distance(p))
    }

    /// Line of intersection with another plane; the line direction is
    /// `n1 x n2` normalized. Fails for (anti)parallel planes.
    pub fn intersect_plane(&self, other: &Plane) -> Result<Line3, GeomError> {
        let d = self.normal.cross(other.normal);
        if d.norm() <= DEFAULT_EPS_REL {
            return Err(GeomError::ParallelPlanes);
        }
        // Minimal-norm point satisfying both plane equations.
        let (n1, n2) = (self.normal, other.normal);
        let (o1, o2) = (self.offset, other.offset);
        let c = n1.dot(n2);
        let denom = 1.0 - c * c;
        let point = n1 * ((o1 - o2 * c) / denom) + n2 * ((o2 - o1 * c) / denom);
        Line3::new(point, d)
    }

    pub fn transformed(&self, m: &Rigid) -> Plane {
        let normal = m.apply_dir(self.normal);
        Plane { normal, offset: self.offset + normal.dot(m.translation) }
    }
}

/// Sphere with strictly positive radius.
#[derive(Debug, Clone, Copy)]
pub struct Sphere {
    pub center: Vec3,
    pub radius: f64,
}

impl Sphere {
    pub fn new(center: Vec3, radius: f64) -> Result<Sphere, GeomError> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(GeomError::InvalidRadius);
        }
        Ok(Sphere { center, radius })
    }

    /// `| |p - center| - radius |`, the distance from `p` to the surface.
    pub fn surface_residual(&self, p: Vec3) -> f64 {
        (p.dist(self.center) - self.radius).abs()
    }

    /// Intersection with a line: zero, one (tangency within
    /// `eps_rel * radius^2` on the discriminant), or two points.
    pub fn intersect_line(&self, line: &Line3) -> Vec<Vec3> {
        let oc = line.point() - self.center;
        // Unit direction, so t^2 + 2 b t + c = 0.
        let b = line.direction().dot(oc);
        let c = oc.norm_sq() - self.radius * self.radius;
        let disc = b * b - c;
        let tang = DEFAULT_EPS_REL * self.radius * self.radius;
        if disc.abs() <= tang {
            return vec![line.point_at(-b)];
        }
        if disc < 0.0 {
            return vec![];
        }
        let sq = disc.sqrt();
        // Stable root pairing: avoid cancellation on the larger root.
        let q = -b - b.signum() * sq;
        let (t1, t2) = if b == 0.0 { (-sq, sq) } else { (q, c / q) };
        vec![line.point_at(t1.min(t2)), line.point_at(t1.max(t2))]
    }

    pub fn transformed(&self, m: &Rigid) -> Sphere {
        Sphere { center: m.apply(self.center), radius: self.radius }
    }
}

/// Circle in 3-space: center, positive radius, and a unit normal to its
/// plane. The sign of `normal` carries no meaning.
#[derive(Debug, Clone, Copy)]
pub struct Circle3 {
    pub center: Vec3,
    pub radius: f64,
    pub normal: Vec3,
}

impl Circle3 {
    pub fn new(center: Vec3, radius: f64, normal: Vec3) -> Result<Circle3, GeomError> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(GeomError::InvalidRadius);
        }
        let normal = normal.normalized().ok_or(GeomError::ZeroDirection)?;
        Ok(Circle3 { center, radius, normal })
    }

    pub fn plane(&self) -> Plane {
        Plane { normal: self.normal, offset: self.normal.dot(self.center) }
    }

    /// Max of plane distance and in-plane radial deviation of `p`.
    pub fn residual(&self, p: Vec3) -> f64 {
        let planar = self.plane().distance_to_point(p);
        let radial = (self.plane().project_point(p).dist(self.center) - self.radius).abs();
        planar.max(radial)
    }

    pub fn transformed(&self, m: &Rigid) -> Circle3 {
        Circle3 {
            center: m.apply(self.center),
            radius: self.radius,
            normal: m.apply_dir(self.normal),
        }
    }
}

/// Orthonormal basis of the plane orthogonal to `n` (unit). The pair
/// `(e1, e2)` satisfies `e1 x e2 = n`.
pub fn plane_basis(n: Vec3) -> (Vec3, Vec3) {
    let helper = if n.x.abs() < 0.9 {
        Vec3::new(1.0, 0.0, 0.0)
    } else {
        Vec3::new(0.0, 1.0, 0.0)
    };
    let e1 = n.cross(helper).normalized().expect("helper not parallel to n");
    let e2 = n.cross(e1);
    (e1, e2)
}

/// Quietly orthonormalizes three roughly-orthogonal directions into a proper
/// rotation: column 0 follows `u`, column 1 follows `v` projected off `u`,
/// column 2 is their cross product (so the result always has det +1).
pub fn rotation_from_axes(u: Vec3, v: Vec3) -> Result<Mat3, GeomError> {
    let c0 = u.normalized().ok_or(GeomError::ZeroDirection)?;
    let c1 = (v - c0 * v.dot(c0)).normalized().ok_or(GeomError::ZeroDirection)?;
    let c2 = c0.cross(c1);
    Ok(Mat3::from_cols(c0, c1, c2))
}
