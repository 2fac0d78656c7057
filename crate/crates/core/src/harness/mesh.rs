//! Wavefront OBJ export of the saddle surfaces and the circumsphere, for
//! eyeballing configurations in any standard mesh viewer.

use std::fmt::Write as _;

use crate::geom3::Vec3;
use crate::tetra::IsoscelesParams;

use super::HarnessError;

/// Tessellate the named surface of the tetrahedron with the given
/// parameters into an OBJ string.
///
/// `hpa`/`hpb`/`hpc` graph the saddle surface of the corresponding bimedian
/// axis over a centered square of side `extent` in its two free
/// coordinates, as a `resolution` x `resolution` vertex grid. `circumsphere`
/// covers the circumsphere with a latitude-longitude grid of the same size.
/// Each grid cell contributes two triangles.
pub fn export_mesh(
    surface: &str,
    params: &IsoscelesParams,
    extent: f64,
    resolution: usize,
) -> Result<String, HarnessError> {
    if extent <= 0.0 || !extent.is_finite() || resolution < 2 {
        return Err(HarnessError::InvalidMeshParams);
    }
    let (a, b, c) = (params.a, params.b, params.c);
    let n = resolution;
    let vertex_at: Box<dyn Fn(usize, usize) -> Vec3> = match surface {
        "hpc" | "hpa" | "hpb" => {
            let k = match surface {
                "hpa" => a / (b * c),
                "hpb" => b / (c * a),
                _ => c / (a * b),
            };
            let coord = move |i: usize| extent * (i as f64 / (n - 1) as f64 - 0.5);
            match surface {
                "hpa" => Box::new(move |i, j| {
                    let (y, z) = (coord(i), coord(j));
                    Vec3::new(-k * y * z, y, z)
                }),
                "hpb" => Box::new(move |i, j| {
                    let (z, x) = (coord(i), coord(j));
                    Vec3::new(x, -k * z * x, z)
                }),
                _ => Box::new(move |i, j| {
                    let (x, y) = (coord(i), coord(j));
                    Vec3::new(x, y, -k * x * y)
                }),
            }
        }
        "circumsphere" => {
            let r = params.circumradius();
            Box::new(move |i, j| {
                let theta = std::f64::consts::PI * i as f64 / (n - 1) as f64;
                let phi = std::f64::consts::TAU * j as f64 / (n - 1) as f64;
                Vec3::new(
                    r * theta.sin() * phi.cos(),
                    r * theta.sin() * phi.sin(),
                    r * theta.cos(),
                )
            })
        }
        other => return Err(HarnessError::BadSurfaceId(other.to_string())),
    };

    let mut out = String::new();
    for i in 0..n {
        for j in 0..n {
            let v = vertex_at(i, j);
            writeln!(out, "v {:.16e} {:.16e} {:.16e}", v.x, v.y, v.z).expect("string write");
        }
    }
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            let v00 = i * n + j + 1;
            let v01 = v00 + 1;
            let v10 = v00 + n;
            let v11 = v10 + 1;
            writeln!(out, "f {} {} {}", v00, v10, v11).expect("string write");
            writeln!(out, "f {} {} {}", v00, v11, v01).expect("string write");
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadric::{hpar, hpar_residual};
    use crate::tetra::{canonical_embedding, fit_canonical_frame, tetra_tolerance, BimedianAxis};

    fn params() -> IsoscelesParams {
        IsoscelesParams::new(1.0, 2.0, 3.0).unwrap()
    }

    fn parse(obj: &str) -> (Vec<Vec3>, Vec<[usize; 3]>) {
        let mut vs = Vec::new();
        let mut fs = Vec::new();
        for line in obj.lines() {
            let mut tok = line.split_whitespace();
            match tok.next() {
                Some("v") => {
                    let mut next = || tok.next().unwrap().parse::<f64>().unwrap();
                    vs.push(Vec3::new(next(), next(), next()));
                }
                Some("f") => {
                    let mut next = || tok.next().unwrap().parse::<usize>().unwrap();
                    fs.push([next(), next(), next()]);
                }
                other => panic!("unexpected OBJ record: {other:?}"),
            }
        }
        (vs, fs)
    }

    #[test]
    fn grid_counts_and_sample_vertex() {
        let obj = export_mesh("hpc", &params(), 2.0, 3).unwrap();
        let (vs, fs) = parse(&obj);
        assert_eq!(vs.len(), 9);
        assert_eq!(fs.len(), 8);
        // Corner of the domain: (x, y) = (1, 1) hangs at z = -c/(ab).
        assert!(vs.iter().any(|v| v.dist(Vec3::new(1.0, 1.0, -1.5)) < 1e-12));

        let (vs, fs) = parse(&export_mesh("hpc", &params(), 2.0, 2).unwrap());
        assert_eq!(vs.len(), 4);
        assert_eq!(fs.len(), 2);
    }

    #[test]
    fn face_indices_stay_in_range() {
        for surface in ["hpa", "hpb", "hpc", "circumsphere"] {
            let (vs, fs) = parse(&export_mesh(surface, &params(), 3.0, 5).unwrap());
            assert_eq!(vs.len(), 25);
            assert_eq!(fs.len(), 32);
            for f in &fs {
                for &ix in f {
                    assert!(ix >= 1 && ix <= vs.len(), "{surface}: index {ix}");
                }
                assert!(f[0] != f[1] && f[1] != f[2] && f[0] != f[2]);
            }
        }
    }

    #[test]
    fn saddle_vertices_satisfy_their_equation() {
        let p = params();
        let t = canonical_embedding(&p);
        let frame = fit_canonical_frame(&t, &tetra_tolerance(&t)).unwrap();
        for (surface, axis) in [
            ("hpa", BimedianAxis::A),
            ("hpb", BimedianAxis::B),
            ("hpc", BimedianAxis::C),
        ] {
            let h = hpar(&frame, axis);
            let (vs, _) = parse(&export_mesh(surface, &p, 4.0, 7).unwrap());
            for v in vs {
                assert!(hpar_residual(&h, v).abs() < 1e-12, "{surface}");
            }
        }
    }

    #[test]
    fn sphere_vertices_sit_at_radius() {
        let p = params();
        let r = p.circumradius();
        let (vs, _) = parse(&export_mesh("circumsphere", &p, 1.0, 9).unwrap());
        for v in vs {
            assert!((v.norm() - r).abs() < 1e-12 * r);
        }
    }

    #[test]
    fn rejects_bad_requests() {
        let p = params();
        assert!(matches!(
            export_mesh("torus", &p, 1.0, 4),
            Err(HarnessError::BadSurfaceId(_))
        ));
        for (extent, res) in [(0.0, 4), (-1.0, 4), (f64::NAN, 4), (1.0, 0), (1.0, 1)] {
            assert!(matches!(
                export_mesh("hpc", &p, extent, res),
                Err(HarnessError::InvalidMeshParams)
            ));
        }
    }
}
