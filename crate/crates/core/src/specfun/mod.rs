//! Cylindrical special functions: Bessel J, Hankel H(1) and their derivatives
//! for the argument classes that arise from transverse wavenumbers
//! Q = sqrt(eps w^2 - (qa)^2 + i0+): real (propagating) or purely imaginary
//! with positive imaginary part (evanescent). Purely imaginary arguments are
//! routed through I_m / K_m, where the evaluation is stable; H(1) of
//! imaginary argument uses H(1)_m(iy) = (2/pi)(-i)^{m+1} K_m(y).

mod cheb_tables;
mod modified;
mod real_axis;

#[allow(unused_imports)]
pub(crate) use modified::{in_seq, k01, kn_ratio, kn_seq};
#[allow(unused_imports)]
pub(crate) use real_axis::{jn_seq, triplet_from_seq, yn_seq};

use num_complex::Complex;

use crate::error::{CoreError, Result};
use crate::real::{lit, Real};

/// Default cap on the azimuthal order.
pub const DEFAULT_M_MAX: i32 = 64;

/// Argument of a cylindrical special function. Restricted to the closed upper
/// half-plane; only the real axis, the positive imaginary axis, and (for J)
/// small off-axis arguments are supported.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct CylArgument<T: Real> {
    z: Complex<T>,
    axis: Axis<T>,
}

#[derive(Copy, Clone, Debug, PartialEq)]
enum Axis<T> {
    Zero,
    /// Real argument (signed).
    Real(T),
    /// Positive imaginary axis, stored as y where z = i y.
    Imag(T),
    General,
}

impl<T: Real> CylArgument<T> {
    pub fn new(z: Complex<T>) -> Result<Self> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(CoreError::Domain("non-finite argument".into()));
        }
        if z.im < T::zero() {
            return Err(CoreError::Domain(
                "argument in the lower half-plane (violates the +i0+ branch)".into(),
            ));
        }
        let axis = if z.im == T::zero() {
            if z.re == T::zero() {
                Axis::Zero
            } else {
                Axis::Real(z.re)
            }
        } else if z.re == T::zero() {
            Axis::Imag(z.im)
        } else {
            Axis::General
        };
        Ok(CylArgument { z, axis })
    }

    pub fn real(x: T) -> Self {
        CylArgument::new(Complex::new(x, T::zero())).expect("finite real argument")
    }

    pub fn imag(y: T) -> Self {
        CylArgument::new(Complex::new(T::zero(), y)).expect("finite imaginary argument")
    }

    pub fn value(&self) -> Complex<T> {
        self.z
    }
}

fn check_order(order: i32, m_max: i32) -> Result<u32> {
    if order.abs() > m_max {
        return Err(CoreError::OrderOverflow { order, max: m_max });
    }
    Ok(order.unsigned_abs())
}

/// (-1)^m as a scalar.
fn parity<T: Real>(m: i32) -> T {
    if m.rem_euclid(2) == 0 {
        T::one()
    } else {
        -T::one()
    }
}

/// i^k as a complex unit.
fn ipow<T: Real>(k: i32) -> Complex<T> {
    match k.rem_euclid(4) {
        0 => Complex::new(T::one(), T::zero()),
        1 => Complex::new(T::zero(), T::one()),
        2 => Complex::new(-T::one(), T::zero()),
        _ => Complex::new(T::zero(), -T::one()),
    }
}

/// Ascending series for J_m of a general complex argument, |z| <= 12.
fn jn_series_complex<T: Real>(m: u32, z: Complex<T>) -> Complex<T> {
    let half = z * lit::<T>(0.5);
    let mut term = Complex::new(T::one(), T::zero());
    for j in 1..=m {
        term = term * half / T::from_u32(j).unwrap();
    }
    let q = -z * z * lit::<T>(0.25);
    let mut sum = term;
    for k in 1..200u32 {
        term = term * q / (T::from_u32(k).unwrap() * T::from_u32(m + k).unwrap());
        sum += term;
        if term.norm() < sum.norm() * lit::<T>(1e-18) + lit::<T>(1e-300) {
            break;
        }
    }
    sum
}

/// J at a signed order for any supported argument.
fn j_value<T: Real>(order: i32, arg: &CylArgument<T>) -> Result<Complex<T>> {
    let m = order.unsigned_abs();
    let refl = if order < 0 { parity::<T>(order) } else { T::one() };
    match arg.axis {
        Axis::Zero => Ok(Complex::new(
            if m == 0 { T::one() } else { T::zero() },
            T::zero(),
        )),
        Axis::Real(x) => {
            let xa = x.abs();
            let v = if xa < lit::<T>(real_axis::SERIES_CUTOFF) {
                real_axis::jn_series(m, xa)
            } else {
                jn_seq(m as usize, xa)[m as usize]
            };
            // J_m(-x) = (-1)^m J_m(x)
            let sgn = if x < T::zero() { parity::<T>(m as i32) } else { T::one() };
            Ok(Complex::new(refl * sgn * v, T::zero()))
        }
        Axis::Imag(y) => {
            // J_m(iy) = i^m I_m(y)
            let v = modified::in_series(m, y);
            Ok(ipow::<T>(m as i32).scale(refl * v))
        }
        Axis::General => {
            if arg.z.norm() <= lit::<T>(real_axis::SERIES_CUTOFF) {
                Ok(jn_series_complex(m, arg.z).scale(refl))
            } else {
                Err(CoreError::Unsupported(
                    "large off-axis arguments are out of scope".into(),
                ))
            }
        }
    }
}

/// H(1) at a signed order for real-positive or positive-imaginary arguments.
fn h1_value<T: Real>(order: i32, arg: &CylArgument<T>) -> Result<Complex<T>> {
    let m = order.unsigned_abs();
    let refl = if order < 0 { parity::<T>(order) } else { T::one() };
    match arg.axis {
        Axis::Zero => Err(CoreError::Singularity(
            "H(1)_m diverges at the origin".into(),
        )),
        Axis::Real(x) => {
            if x < T::zero() {
                return Err(CoreError::Domain(
                    "H(1) on the negative real axis is out of scope".into(),
                ));
            }
            let j = jn_seq(m as usize, x)[m as usize];
            let y = yn_seq(m as usize, x)[m as usize];
            Ok(Complex::new(j, y).scale(refl))
        }
        Axis::Imag(yv) => {
            // H(1)_m(iy) = (2/pi) (-i)^{m+1} K_m(y)
            let k = kn_seq(m as usize, yv)[m as usize];
            let c = ipow::<T>(-(m as i32 + 1)).scale(lit::<T>(2.0) / T::PI());
            Ok(c.scale(refl * k))
        }
        Axis::General => Err(CoreError::Unsupported(
            "H(1) off the coordinate axes is out of scope".into(),
        )),
    }
}

/// J_m(z) and its derivative J'_m(z).
pub fn bessel_j<T: Real>(order: i32, z: CylArgument<T>) -> Result<(Complex<T>, Complex<T>)> {
    bessel_j_capped(order, z, DEFAULT_M_MAX)
}

/// As [`bessel_j`] with an explicit order cap.
pub fn bessel_j_capped<T: Real>(
    order: i32,
    z: CylArgument<T>,
    m_max: i32,
) -> Result<(Complex<T>, Complex<T>)> {
    check_order(order, m_max)?;
    let prev = j_value(order - 1, &z)?;
    let here = j_value(order, &z)?;
    let next = j_value(order + 1, &z)?;
    Ok((here, (prev - next).scale(lit::<T>(0.5))))
}

/// H(1)_m(z) and its derivative.
pub fn hankel1<T: Real>(order: i32, z: CylArgument<T>) -> Result<(Complex<T>, Complex<T>)> {
    hankel1_capped(order, z, DEFAULT_M_MAX)
}

/// As [`hankel1`] with an explicit order cap.
pub fn hankel1_capped<T: Real>(
    order: i32,
    z: CylArgument<T>,
    m_max: i32,
) -> Result<(Complex<T>, Complex<T>)> {
    check_order(order, m_max)?;
    let prev = h1_value(order - 1, &z)?;
    let here = h1_value(order, &z)?;
    let next = h1_value(order + 1, &z)?;
    Ok((here, (prev - next).scale(lit::<T>(0.5))))
}

/// Which cylindrical kernel a triplet refers to.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CylKind {
    J,
    H1,
}

/// Consecutive orders (C_{m-1}, C_m, C_{m+1}) of the selected kernel.
pub fn recurrence_triplet<T: Real>(
    order: i32,
    z: CylArgument<T>,
    kind: CylKind,
) -> Result<(Complex<T>, Complex<T>, Complex<T>)> {
    check_order(order, DEFAULT_M_MAX)?;
    let eval = |o: i32| match kind {
        CylKind::J => j_value(o, &z),
        CylKind::H1 => h1_value(o, &z),
    };
    Ok((eval(order - 1)?, eval(order)?, eval(order + 1)?))
}
