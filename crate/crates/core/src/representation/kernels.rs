use crate::algebra::{AlgebraError, Scalar};

fn nonzero<F: Scalar>(window: &[F]) -> Result<(), AlgebraError> {
    if window.iter().any(Scalar::is_zero) {
        return Err(AlgebraError::SingularPoint);
    }
    Ok(())
}

fn checked_div<F: Scalar>(a: &F, b: &F) -> Result<F, AlgebraError> {
    a.div(b).map_err(|_| AlgebraError::SingularPoint)
}

/// The local birational kernels the representations are assembled from.
///
/// [`Standard`] is the only implementation used in production; the trait
/// exists so that a deliberately broken kernel can be swapped in to check
/// that the regression suite notices.
pub trait LocalOperators: Sync {
    /// `S(z₁, z₂, z₃, z₄)`.
    fn s<F: Scalar>(&self, z: &[F]) -> Result<Vec<F>, AlgebraError>;
    /// `S⁻¹(z₁, z₂, z₃, z₄)`.
    fn s_inv<F: Scalar>(&self, z: &[F]) -> Result<Vec<F>, AlgebraError>;
    /// `T(z₁, z₂, z₃, z₄) = (z₃, z₄, z₁, z₂)`.
    fn t<F: Scalar>(&self, z: &[F]) -> Result<Vec<F>, AlgebraError> {
        Ok(vec![z[2].clone(), z[3].clone(), z[0].clone(), z[1].clone()])
    }
    /// `R(t₁, t₂)`.
    fn r<F: Scalar>(&self, t: &[F]) -> Result<Vec<F>, AlgebraError>;
    /// `V(t₁, t₂) = (t₂, t₁)`.
    fn v<F: Scalar>(&self, t: &[F]) -> Result<Vec<F>, AlgebraError> {
        Ok(vec![t[1].clone(), t[0].clone()])
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Standard;

impl LocalOperators for Standard {
    /// `(−z₁z₃z₄/D, −D/z₁, −D/z₄, −z₁z₂z₄/D)` with `D = 1 + z₁ + z₄`.
    fn s<F: Scalar>(&self, z: &[F]) -> Result<Vec<F>, AlgebraError> {
        nonzero(z)?;
        let d = F::one().add(&z[0]).add(&z[3]);
        if d.is_zero() {
            return Err(AlgebraError::SingularPoint);
        }
        let z14 = z[0].mul(&z[3]);
        Ok(vec![
            checked_div(&z14.mul(&z[2]).neg(), &d)?,
            checked_div(&d.neg(), &z[0])?,
            checked_div(&d.neg(), &z[3])?,
            checked_div(&z14.mul(&z[1]).neg(), &d)?,
        ])
    }

    /// `(−z₃/E, −E z₄, −z₁E, −z₂/E)` with `E = z₂ + z₃ + z₂z₃`.
    fn s_inv<F: Scalar>(&self, z: &[F]) -> Result<Vec<F>, AlgebraError> {
        nonzero(z)?;
        let e = z[1].add(&z[2]).add(&z[1].mul(&z[2]));
        if e.is_zero() {
            return Err(AlgebraError::SingularPoint);
        }
        Ok(vec![
            checked_div(&z[2].neg(), &e)?,
            e.mul(&z[3]).neg(),
            z[0].mul(&e).neg(),
            checked_div(&z[1].neg(), &e)?,
        ])
    }

    /// `(−t₁t₂/D, −D)` with `D = 1 + t₂ + t₁t₂`.
    fn r<F: Scalar>(&self, t: &[F]) -> Result<Vec<F>, AlgebraError> {
        nonzero(t)?;
        let t12 = t[0].mul(&t[1]);
        let d = F::one().add(&t[1]).add(&t12);
        if d.is_zero() {
            return Err(AlgebraError::SingularPoint);
        }
        Ok(vec![checked_div(&t12.neg(), &d)?, d.neg()])
    }
}
