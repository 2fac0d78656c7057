//! Solid geometry of isosceles (equifacial) tetrahedra.
//!
//! An isosceles tetrahedron has its three pairs of opposite edges equal, so
//! all four faces are congruent acute triangles and the circumcenter and
//! incenter coincide. This crate builds the machinery around that shape:
//!
//! - [`geom3`]: points, lines, planes, spheres, circles, and the handful of
//!   exact constructions everything else is made of.
//! - [`tetra`]: tetrahedron bookkeeping, the canonical axis-aligned embedding
//!   of an isosceles tetrahedron, and its closed-form metric quantities.
//! - [`isogonal`]: isogonal conjugation (reflect a point in the four face
//!   planes; the conjugate is the circumcenter of the reflections) and pedal
//!   spheres.
//! - [`circlesphere`]: inversion, angles between spheres/planes, homothety
//!   centers, bisector spheres, and the planar isogonal-conjugate toolkit.
//! - [`quadric`]: the hyperbolic paraboloids that carry the conjugate pairs
//!   symmetric in a bimedian, plus the circle-tangency characterization on
//!   the circumsphere.
//! - [`harness`]: seeded Monte Carlo verification suites, generators, and a
//!   mesh exporter; the `isotet` CLI is a thin wrapper over this module.
//!
//! ```
//! use isotet::geom3::Vec3;
//! use isotet::isogonal::{isogonal_conjugate, pedal_sphere, ConjugateResult};
//! use isotet::tetra::{canonical_embedding, tetra_tolerance, IsoscelesParams};
//!
//! let params = IsoscelesParams::new(1.0, 2.0, 3.0).unwrap();
//! let tet = canonical_embedding(&params);
//! let p = Vec3::new(0.3, -0.2, 0.4);
//! if let ConjugateResult::Point(q) = isogonal_conjugate(&tet, p, &tetra_tolerance(&tet)) {
//!     let pedal = pedal_sphere(&tet, p).unwrap();
//!     assert!(pedal.sphere.center.dist(p.midpoint(q)) < 1e-12);
//! } else {
//!     panic!("interior point has a finite conjugate");
//! }
//! ```

pub mod circlesphere;
pub mod geom3;
pub mod harness;
pub mod isogonal;
pub mod quadric;
pub mod tetra;
