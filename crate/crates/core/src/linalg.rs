//! Small dense solvers: complex 4x4 (surface-response systems) and a real
//! n x n Gaussian elimination used by the beam-design least squares.

use num_complex::Complex;

use crate::error::{CoreError, Result};
use crate::real::{lit, Real};

/// LU-factorizes a 4x4 complex matrix in place (partial pivoting) and returns
/// the pivot rows and the determinant.
fn lu4<T: Real>(a: &mut [[Complex<T>; 4]; 4]) -> Result<([usize; 4], Complex<T>)> {
    let mut piv = [0usize, 1, 2, 3];
    let mut det = Complex::new(T::one(), T::zero());
    let scale: T = a
        .iter()
        .flatten()
        .map(|c| c.norm())
        .fold(T::zero(), T::max);
    for col in 0..4 {
        let (mut best, mut best_mag) = (col, a[col][col].norm());
        for row in col + 1..4 {
            let mag = a[row][col].norm();
            if mag > best_mag {
                best = row;
                best_mag = mag;
            }
        }
        if best_mag <= scale * lit::<T>(1e-300) {
            return Err(CoreError::NearMode { det_mag: 0.0 });
        }
        if best != col {
            a.swap(best, col);
            piv.swap(best, col);
            det = -det;
        }
        det *= a[col][col];
        let inv = a[col][col].inv();
        for row in col + 1..4 {
            let factor = a[row][col] * inv;
            a[row][col] = factor;
            for k in col + 1..4 {
                let sub = factor * a[col][k];
                a[row][k] -= sub;
            }
        }
    }
    Ok((piv, det))
}

fn lu4_solve<T: Real>(
    lu: &[[Complex<T>; 4]; 4],
    piv: &[usize; 4],
    b: &[Complex<T>; 4],
) -> [Complex<T>; 4] {
    let mut x = [Complex::new(T::zero(), T::zero()); 4];
    for i in 0..4 {
        x[i] = b[piv[i]];
        for k in 0..i {
            let sub = lu[i][k] * x[k];
            x[i] -= sub;
        }
    }
    for i in (0..4).rev() {
        for k in i + 1..4 {
            let sub = lu[i][k] * x[k];
            x[i] -= sub;
        }
        x[i] /= lu[i][i];
    }
    x
}

/// Solves A x = b for several right-hand sides; returns (solutions, det A).
pub fn solve4_multi<T: Real, const N: usize>(
    a: [[Complex<T>; 4]; 4],
    rhs: [[Complex<T>; 4]; N],
) -> Result<([[Complex<T>; 4]; N], Complex<T>)> {
    let mut lu = a;
    let (piv, det) = lu4(&mut lu)?;
    let mut out = [[Complex::new(T::zero(), T::zero()); 4]; N];
    for (dst, b) in out.iter_mut().zip(rhs.iter()) {
        *dst = lu4_solve(&lu, &piv, b);
    }
    Ok((out, det))
}

/// Determinant of a 4x4 complex matrix.
pub fn det4<T: Real>(a: [[Complex<T>; 4]; 4]) -> Complex<T> {
    let mut lu = a;
    match lu4(&mut lu) {
        Ok((_, det)) => det,
        Err(_) => Complex::new(T::zero(), T::zero()),
    }
}

/// Residual norm |A x - b| for verification.
pub fn residual4<T: Real>(
    a: &[[Complex<T>; 4]; 4],
    x: &[Complex<T>; 4],
    b: &[Complex<T>; 4],
) -> T {
    let mut acc = T::zero();
    for i in 0..4 {
        let mut r = -b[i];
        for k in 0..4 {
            r += a[i][k] * x[k];
        }
        acc = acc + r.norm_sqr();
    }
    acc.sqrt()
}

/// Real n x n solve by Gaussian elimination with partial pivoting.
/// Consumes the matrix; `b` is replaced by the solution.
pub fn solve_real<T: Real>(a: &mut [Vec<T>], b: &mut [T]) -> Result<()> {
    let n = b.len();
    for col in 0..n {
        let (mut best, mut best_mag) = (col, a[col][col].abs());
        for row in col + 1..n {
            if a[row][col].abs() > best_mag {
                best = row;
                best_mag = a[row][col].abs();
            }
        }
        if best_mag < lit::<T>(1e-280) {
            return Err(CoreError::Degenerate("singular normal equations".into()));
        }
        if best != col {
            a.swap(best, col);
            b.swap(best, col);
        }
        let inv = a[col][col].recip();
        for row in col + 1..n {
            let f = a[row][col] * inv;
            if f == T::zero() {
                continue;
            }
            for k in col..n {
                let sub = f * a[col][k];
                a[row][k] -= sub;
            }
            let sub = f * b[col];
            b[row] -= sub;
        }
    }
    for i in (0..n).rev() {
        let mut acc = b[i];
        for k in i + 1..n {
            acc = acc - a[i][k] * b[k];
        }
        b[i] = acc / a[i][i];
    }
    Ok(())
}
