//! Pinhole camera model and homogeneous-coordinate normalization.
//!
//! Conventions: pixel coordinates `x = (x, y)` have integer values at pixel
//! centers; the extended point is `x_bar = (x, y, 1)` and the homogeneous
//! point `x_tilde = z * x_bar`, with `z` the orthogonal depth (distance along
//! the camera axis). Camera-frame points map to world via
//! `X = R^T K^-1 x_tilde + C` with optical center `C = -R^T t`.

use nalgebra::{Matrix2x3, Matrix3, Matrix3x2, Vector2, Vector3};

use crate::{Error, Result};

/// Homogeneous depths below this magnitude are treated as points at infinity.
pub const POINT_AT_INFINITY_EPS: f64 = 1e-12;

const ORTHONORMALITY_TOL: f64 = 1e-9;

/// Calibrated pinhole camera. Immutable after construction; `K^-1` and the
/// optical center are precomputed.
#[derive(Clone, Debug)]
pub struct PinholeCamera {
    k: Matrix3<f64>,
    r: Matrix3<f64>,
    t: Vector3<f64>,
    k_inv: Matrix3<f64>,
    center: Vector3<f64>,
}

impl PinholeCamera {
    /// Builds a camera from intrinsics `K`, rotation `R` and translation `t`.
    ///
    /// `R` must be orthonormal within 1e-9 and `K` upper-triangular with
    /// strictly positive focal entries and `K[2][2] = 1`.
    pub fn new(k: Matrix3<f64>, r: Matrix3<f64>, t: Vector3<f64>) -> Result<Self> {
        let dev = (r.transpose() * r - Matrix3::identity())
            .iter()
            .fold(0.0f64, |m, v| m.max(v.abs()));
        if dev >= ORTHONORMALITY_TOL {
            return Err(Error::NonOrthonormalRotation(dev));
        }
        let upper_triangular = k[(1, 0)] == 0.0 && k[(2, 0)] == 0.0 && k[(2, 1)] == 0.0;
        if !upper_triangular || k[(2, 2)] != 1.0 || k[(0, 0)] <= 0.0 || k[(1, 1)] <= 0.0 {
            return Err(Error::InvalidIntrinsics);
        }
        let k_inv = k.try_inverse().ok_or(Error::InvalidIntrinsics)?;
        let center = -r.transpose() * t;
        Ok(Self {
            k,
            r,
            t,
            k_inv,
            center,
        })
    }

    pub fn intrinsics(&self) -> &Matrix3<f64> {
        &self.k
    }

    pub fn rotation(&self) -> &Matrix3<f64> {
        &self.r
    }

    pub fn translation(&self) -> &Vector3<f64> {
        &self.t
    }

    pub fn intrinsics_inv(&self) -> &Matrix3<f64> {
        &self.k_inv
    }

    /// Optical center `C = -R^T t`.
    pub fn center(&self) -> &Vector3<f64> {
        &self.center
    }

    /// World point of pixel `x` at orthogonal depth `z`.
    pub fn back_project(&self, x: Vector2<f64>, z: f64) -> Vector3<f64> {
        self.r.transpose() * (self.k_inv * (extend_homogeneous(x) * z)) + self.center
    }

    /// Homogeneous image point of a world point; the third component is the
    /// orthogonal depth in this camera's frame.
    pub fn project(&self, x_world: &Vector3<f64>) -> Vector3<f64> {
        self.k * (self.r * x_world + self.t)
    }
}

/// `N_e`: divides a homogeneous point by its depth component.
pub fn normalize_euclidean(x_tilde: &Vector3<f64>) -> Result<Vector2<f64>> {
    let z = x_tilde[2];
    if z.abs() <= POINT_AT_INFINITY_EPS {
        return Err(Error::PointAtInfinity);
    }
    Ok(Vector2::new(x_tilde[0] / z, x_tilde[1] / z))
}

/// `N_h`: appends a unit third coordinate.
pub fn extend_homogeneous(x: Vector2<f64>) -> Vector3<f64> {
    Vector3::new(x[0], x[1], 1.0)
}

/// Jacobian of `N_e` at a homogeneous point: `(1/z) [[1,0,-x/z],[0,1,-y/z]]`.
pub fn jacobian_normalize(x_tilde: &Vector3<f64>) -> Result<Matrix2x3<f64>> {
    let z = x_tilde[2];
    if z.abs() <= POINT_AT_INFINITY_EPS {
        return Err(Error::PointAtInfinity);
    }
    let inv_z = 1.0 / z;
    Ok(Matrix2x3::new(
        inv_z,
        0.0,
        -x_tilde[0] * inv_z * inv_z,
        0.0,
        inv_z,
        -x_tilde[1] * inv_z * inv_z,
    ))
}

/// Jacobian of `N_h`, a constant 3x2 matrix.
pub fn jacobian_extend() -> Matrix3x2<f64> {
    Matrix3x2::new(1.0, 0.0, 0.0, 1.0, 0.0, 0.0)
}
