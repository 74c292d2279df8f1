use std::io::{self, Write};

use super::boundary::boundary_ring;
use super::field::GaugeField2D;
use crate::error::Gauge2dError;

/// Watertight doubled surface: the lens graph, its mirror through the plane,
/// the shared junction ring, and a flat annulus of exterior plane beyond the
/// ring. Face indices are 0-based; the OBJ writer shifts to 1-based.
#[derive(Debug, Clone)]
pub struct ReflectionMesh {
    pub vertices: Vec<[f64; 3]>,
    pub faces: Vec<[usize; 3]>,
    /// Interior nodes per sheet (pole + levels 1..P-1).
    pub n_interior: usize,
    /// Ring nodes shared by both sheets.
    pub n_boundary: usize,
    /// Flat exterior samples beyond the ring.
    pub n_annulus: usize,
}

/// Build the doubled mesh. The height must be strictly positive on the
/// interior: the reflection is only a surface when u does not change sign.
pub fn reflection_mesh(
    field: &GaugeField2D,
    annulus_width: f64,
) -> Result<ReflectionMesh, Gauge2dError> {
    let m = field.mesh;
    for i in 0..m.p {
        for j in 0..m.q {
            let u = field.f[2][m.idx(i, j)];
            if u <= 0.0 {
                return Err(Gauge2dError::ReflectionInvalid { u, i, j });
            }
        }
    }
    let ring = boundary_ring(field)?;

    let n_interior = 1 + (m.p - 1) * m.q;
    let n_boundary = m.q;
    let n_annulus = m.q;
    let mut vertices = Vec::with_capacity(2 * n_interior + n_boundary + n_annulus);

    // Top sheet: pole, then interior levels.
    vertices.push([field.f[0][0], field.f[1][0], field.f[2][0]]);
    for i in 1..m.p {
        for j in 0..m.q {
            let at = m.idx(i, j);
            vertices.push([field.f[0][at], field.f[1][at], field.f[2][at]]);
        }
    }
    // Shared ring.
    let off_ring = vertices.len();
    for j in 0..m.q {
        let at = m.idx(m.p, j);
        vertices.push([field.f[0][at], field.f[1][at], field.f[2][at]]);
    }
    // Bottom sheet: mirrored heights.
    let off_bot = vertices.len();
    vertices.push([field.f[0][0], field.f[1][0], -field.f[2][0]]);
    for i in 1..m.p {
        for j in 0..m.q {
            let at = m.idx(i, j);
            vertices.push([field.f[0][at], field.f[1][at], -field.f[2][at]]);
        }
    }
    // Flat annulus pushed out along the outer normal of the ring image.
    let off_ann = vertices.len();
    for j in 0..m.q {
        let p = ring.phi[j];
        let n_out = [-ring.n_inner[j][0], -ring.n_inner[j][1]];
        vertices.push([
            p[0] + annulus_width * n_out[0],
            p[1] + annulus_width * n_out[1],
            0.0,
        ]);
    }

    let top = |i: usize, j: usize| -> usize {
        if i == 0 {
            0
        } else if i == m.p {
            off_ring + (j % m.q)
        } else {
            1 + (i - 1) * m.q + (j % m.q)
        }
    };
    let bot = |i: usize, j: usize| -> usize {
        if i == 0 {
            off_bot
        } else if i == m.p {
            off_ring + (j % m.q)
        } else {
            off_bot + 1 + (i - 1) * m.q + (j % m.q)
        }
    };

    let mut faces = Vec::new();
    for j in 0..m.q {
        // Pole fans; bottom orientation reversed so normals point away from
        // the enclosed volume on both sheets.
        faces.push([top(0, 0), top(1, j), top(1, j + 1)]);
        faces.push([bot(0, 0), bot(1, j + 1), bot(1, j)]);
    }
    for i in 1..m.p {
        for j in 0..m.q {
            faces.push([top(i, j), top(i + 1, j), top(i + 1, j + 1)]);
            faces.push([top(i, j), top(i + 1, j + 1), top(i, j + 1)]);
            faces.push([bot(i, j), bot(i + 1, j + 1), bot(i + 1, j)]);
            faces.push([bot(i, j), bot(i, j + 1), bot(i + 1, j + 1)]);
        }
    }
    for j in 0..m.q {
        let (r0, r1) = (off_ring + j, off_ring + (j + 1) % m.q);
        let (a0, a1) = (off_ann + j, off_ann + (j + 1) % m.q);
        faces.push([r0, a0, a1]);
        faces.push([r0, a1, r1]);
    }

    Ok(ReflectionMesh {
        vertices,
        faces,
        n_interior,
        n_boundary,
        n_annulus,
    })
}

/// Plain ASCII export: `v x y z` then `f i j k` with 1-based indices.
pub fn write_obj(mesh: &ReflectionMesh, out: &mut impl Write) -> io::Result<()> {
    writeln!(
        out,
        "# doubled contact surface: {} vertices, {} faces",
        mesh.vertices.len(),
        mesh.faces.len()
    )?;
    for v in &mesh.vertices {
        writeln!(out, "v {:.16e} {:.16e} {:.16e}", v[0], v[1], v[2])?;
    }
    for f in &mesh.faces {
        writeln!(out, "f {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1)?;
    }
    Ok(())
}
