use super::{ClusterError, ExchangeMatrix};

/// The quiver Γ on `3n + 1` vertices as an exchange matrix.
///
/// Diamond `i` has left vertex `3i-2`, bottom `3i-1`, top `3i` and right
/// `3i+1`; consecutive diamonds share their left/right vertex. Every diamond
/// carries the same oriented 4-cycle left → bottom → right → top → left,
/// which is the orientation that reproduces the printed `n = 2` matrix. An
/// edge `i → j` gives `b_ij = 1`, `b_ji = -1`.
pub fn build_quiver(n: usize) -> Result<ExchangeMatrix, ClusterError> {
    if n < 2 {
        return Err(ClusterError::InvalidStrandCount(n));
    }
    let mut b = ExchangeMatrix::zero(3 * n + 1);
    for i in 1..=n {
        let (left, bottom, top, right) = (3 * i - 2, 3 * i - 1, 3 * i, 3 * i + 1);
        b.set_pair(left, bottom, 1);
        b.set_pair(bottom, right, 1);
        b.set_pair(right, top, 1);
        b.set_pair(top, left, 1);
    }
    Ok(b)
}
