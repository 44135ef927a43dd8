//! Gauss-Legendre quadrature with node-doubling refinement, and the periodic
//! trapezoid rule for smooth integrands on [0, 2pi).

use std::cell::RefCell;
use std::collections::HashMap;

use num_complex::Complex;

use crate::error::{CoreError, Result};
use crate::real::{lit, Real};

/// Values that can be accumulated by the quadrature drivers.
pub trait Accumulate<T: Real>: Copy {
    fn zero() -> Self;
    fn axpy(self, w: T, v: Self) -> Self;
    fn distance(self, other: Self) -> T;
    fn magnitude(self) -> T;
}

impl<T: Real> Accumulate<T> for T {
    fn zero() -> Self {
        T::zero()
    }
    fn axpy(self, w: T, v: Self) -> Self {
        self + w * v
    }
    fn distance(self, other: Self) -> T {
        (self - other).abs()
    }
    fn magnitude(self) -> T {
        self.abs()
    }
}

impl<T: Real> Accumulate<T> for Complex<T> {
    fn zero() -> Self {
        Complex::new(T::zero(), T::zero())
    }
    fn axpy(self, w: T, v: Self) -> Self {
        self + v.scale(w)
    }
    fn distance(self, other: Self) -> T {
        (self - other).norm()
    }
    fn magnitude(self) -> T {
        self.norm()
    }
}

impl<T: Real> Accumulate<T> for [Complex<T>; 3] {
    fn zero() -> Self {
        [Complex::new(T::zero(), T::zero()); 3]
    }
    fn axpy(self, w: T, v: Self) -> Self {
        [
            self[0] + v[0].scale(w),
            self[1] + v[1].scale(w),
            self[2] + v[2].scale(w),
        ]
    }
    fn distance(self, other: Self) -> T {
        let mut acc = T::zero();
        for k in 0..3 {
            acc = acc + (self[k] - other[k]).norm_sqr();
        }
        acc.sqrt()
    }
    fn magnitude(self) -> T {
        let mut acc = T::zero();
        for v in self {
            acc = acc + v.norm_sqr();
        }
        acc.sqrt()
    }
}

thread_local! {
    static NODE_CACHE: RefCell<HashMap<usize, Vec<(f64, f64)>>> = RefCell::new(HashMap::new());
}

/// Gauss-Legendre nodes and weights on [-1, 1], computed once per order by
/// Newton iteration on the Legendre recurrence and cached in f64.
fn gauss_legendre_raw(n: usize) -> Vec<(f64, f64)> {
    NODE_CACHE.with(|cache| {
        if let Some(v) = cache.borrow().get(&n) {
            return v.clone();
        }
        let mut out = vec![(0.0f64, 0.0f64); n];
        let half = n.div_ceil(2);
        for i in 0..half {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let mut p0 = 1.0;
                let mut p1 = x;
                for k in 2..=n {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            out[i] = (-x.abs(), w);
            out[n - 1 - i] = (x.abs(), w);
        }
        if n % 2 == 1 {
            // central node of odd rules sits at exactly zero
            let mid = n / 2;
            let (_, w) = out[mid];
            out[mid] = (0.0, w);
        }
        cache.borrow_mut().insert(n, out.clone());
        out
    })
}

/// Fixed-order Gauss-Legendre integral of `f` over [a, b].
pub fn gauss_legendre<T: Real, V: Accumulate<T>>(
    f: &mut impl FnMut(T) -> V,
    a: T,
    b: T,
    n: usize,
) -> V {
    let mid = (a + b) * lit::<T>(0.5);
    let hw = (b - a) * lit::<T>(0.5);
    let mut acc = V::zero();
    for &(x, w) in gauss_legendre_raw(n).iter() {
        let t = mid + hw * lit::<T>(x);
        acc = acc.axpy(hw * lit::<T>(w), f(t));
    }
    acc
}

/// Node-doubling Gauss-Legendre: doubles from 16 nodes until the relative
/// change drops below `tol`, capped at 512 nodes.
pub fn adaptive_gauss_legendre<T: Real, V: Accumulate<T>>(
    f: &mut impl FnMut(T) -> V,
    a: T,
    b: T,
    tol: T,
) -> Result<V> {
    let mut n = 16;
    let mut prev = gauss_legendre(f, a, b, n);
    loop {
        n *= 2;
        let next = gauss_legendre(f, a, b, n);
        let delta = next.distance(prev);
        let scale = next.magnitude().max(lit::<T>(1e-300));
        if delta <= tol * scale || delta <= lit::<T>(1e-306) {
            return Ok(next);
        }
        if n >= 512 {
            return Err(CoreError::Convergence(format!(
                "Gauss-Legendre did not settle at {n} nodes (rel change {:e})",
                (delta / scale).to_f64().unwrap_or(f64::NAN)
            )));
        }
        prev = next;
    }
}

/// Periodic trapezoid rule over [0, 2pi): spectrally accurate for smooth
/// periodic integrands.
pub fn periodic_trapezoid<T: Real, V: Accumulate<T>>(f: &mut impl FnMut(T) -> V, n: usize) -> V {
    let step = lit::<T>(2.0) * T::PI() / T::from_usize(n).unwrap();
    let mut acc = V::zero();
    for k in 0..n {
        let phi = step * T::from_usize(k).unwrap();
        acc = acc.axpy(step, f(phi));
    }
    acc
}
