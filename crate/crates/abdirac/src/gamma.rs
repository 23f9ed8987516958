//! Dirac gamma matrices in the standard representation (diagonal gamma^0),
//! stored as explicit 4x4 complex tables, plus the curvilinear combinations
//! used on rings and cylinders.

use crate::C64;

pub type Matrix4 = [[C64; 4]; 4];

const O: C64 = C64::new(0.0, 0.0);
const I: C64 = C64::new(1.0, 0.0);
const J: C64 = C64::new(0.0, 1.0);

/// The four gamma matrices (and helpers derived from them). Kept as a value
/// type so verification code can run the operator checks against a
/// deliberately perturbed set.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaSet {
    pub g0: Matrix4,
    pub g1: Matrix4,
    pub g2: Matrix4,
    pub g3: Matrix4,
}

impl GammaSet {
    /// Standard (Dirac) representation.
    #[rustfmt::skip]
    pub fn standard() -> Self {
        let neg = |c: C64| -c;
        let g0: Matrix4 = [
            [I, O, O, O],
            [O, I, O, O],
            [O, O, neg(I), O],
            [O, O, O, neg(I)],
        ];
        let g1: Matrix4 = [
            [O, O, O, I],
            [O, O, I, O],
            [O, neg(I), O, O],
            [neg(I), O, O, O],
        ];
        let g2: Matrix4 = [
            [O, O, O, neg(J)],
            [O, O, J, O],
            [O, J, O, O],
            [neg(J), O, O, O],
        ];
        let g3: Matrix4 = [
            [O, O, I, O],
            [O, O, O, neg(I)],
            [neg(I), O, O, O],
            [O, I, O, O],
        ];
        GammaSet { g0, g1, g2, g3 }
    }

    /// gamma^phi(phi) = (-gamma^1 sin phi + gamma^2 cos phi) / R with R = 1.
    pub fn gamma_phi(&self, phi: f64) -> Matrix4 {
        let (s, c) = phi.sin_cos();
        mat_add(
            &mat_scale(&self.g1, C64::new(-s, 0.0)),
            &mat_scale(&self.g2, C64::new(c, 0.0)),
        )
    }

    /// Radial combination gamma^r(phi) = gamma^1 cos phi + gamma^2 sin phi,
    /// which is the phi-derivative of R*gamma^phi.
    pub fn gamma_r(&self, phi: f64) -> Matrix4 {
        let (s, c) = phi.sin_cos();
        mat_add(
            &mat_scale(&self.g1, C64::new(c, 0.0)),
            &mat_scale(&self.g2, C64::new(s, 0.0)),
        )
    }

    /// The ring polarization operator K = 2 gamma^0 S_3 as a matrix
    /// (S_3 = diag(sigma_3, sigma_3) / 2).
    pub fn k_ring(&self) -> Matrix4 {
        mat_mul(&self.g0, &sigma3_block())
    }
}

/// diag(1, -1, 1, -1), i.e. 2 S_3.
#[rustfmt::skip]
pub fn sigma3_block() -> Matrix4 {
    [
        [I, O, O, O],
        [O, -I, O, O],
        [O, O, I, O],
        [O, O, O, -I],
    ]
}

pub fn mat_vec(m: &Matrix4, v: &[C64; 4]) -> [C64; 4] {
    let mut out = [O; 4];
    for (row, out_i) in m.iter().zip(out.iter_mut()) {
        *out_i = row[0] * v[0] + row[1] * v[1] + row[2] * v[2] + row[3] * v[3];
    }
    out
}

pub fn mat_mul(a: &Matrix4, b: &Matrix4) -> Matrix4 {
    let mut out = [[O; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = O;
            for (k, bk) in b.iter().enumerate() {
                acc += a[i][k] * bk[j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn mat_add(a: &Matrix4, b: &Matrix4) -> Matrix4 {
    let mut out = [[O; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[i][j] + b[i][j];
        }
    }
    out
}

pub fn mat_scale(a: &Matrix4, s: C64) -> Matrix4 {
    let mut out = [[O; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = s * a[i][j];
        }
    }
    out
}
