//! Modified Bessel functions I_m and K_m for real positive arguments.
//!
//! I: ascending series (all terms positive, no cancellation at any argument
//! in range). K: logarithmic series below y = 2, Chebyshev fits of the
//! exponentially scaled function above, upward recurrence in the order.
//! Ratios K_{m-1}/K_m are also exposed directly; they stay representable at
//! arguments far below the underflow point of K_m itself, which matters for
//! modes hugging the host light line.

use super::cheb_tables::{K0_LARGE_CHEB, K1_LARGE_CHEB};
use crate::real::{lit, Real};

const EULER_GAMMA: f64 = 0.5772156649015328606;
const K_SERIES_CUTOFF: f64 = 2.0;

fn half_pow_over_fact<T: Real>(m: u32, y: T) -> T {
    let half = y * lit::<T>(0.5);
    let mut acc = T::one();
    for j in 1..=m {
        acc = acc * half / T::from_u32(j).unwrap();
    }
    acc
}

/// Ascending series for I_m(y), y >= 0.
pub(crate) fn in_series<T: Real>(m: u32, y: T) -> T {
    if y == T::zero() {
        return if m == 0 { T::one() } else { T::zero() };
    }
    let q = y * y * lit::<T>(0.25);
    let mut term = half_pow_over_fact(m, y);
    let mut sum = term;
    for k in 1..400u32 {
        term = term * q / (T::from_u32(k).unwrap() * T::from_u32(m + k).unwrap());
        sum += term;
        if term < sum * lit::<T>(1e-18) + lit::<T>(1e-300) {
            break;
        }
    }
    sum
}

/// I_0(y)..I_{n_max}(y).
pub(crate) fn in_seq<T: Real>(n_max: usize, y: T) -> Vec<T> {
    (0..=n_max as u32).map(|m| in_series(m, y)).collect()
}

fn cheb_eval<T: Real>(coeffs: &[f64], s: T) -> T {
    let mut b0 = T::zero();
    let mut b1 = T::zero();
    let two_s = s + s;
    for &c in coeffs.iter().rev() {
        let next = lit::<T>(c) + two_s * b0 - b1;
        b1 = b0;
        b0 = next;
    }
    b0 - s * b1
}

/// K_0(y) and K_1(y) by logarithmic series, y <= K_SERIES_CUTOFF.
fn k01_series<T: Real>(y: T) -> (T, T) {
    let lg = (y * lit::<T>(0.5)).ln() + lit::<T>(EULER_GAMMA);
    let q = y * y * lit::<T>(0.25);

    let i0 = in_series(0, y);
    let mut term = T::one();
    let mut h = T::zero();
    let mut sum = T::zero();
    for k in 1..80u32 {
        let kf = T::from_u32(k).unwrap();
        term = term * q / (kf * kf);
        h += kf.recip();
        sum += term * h;
        if term * h < sum.abs() * lit::<T>(1e-18) + lit::<T>(1e-300) {
            break;
        }
    }
    let k0 = -lg * i0 + sum;

    let i1 = in_series(1, y);
    let mut term = T::one(); // (y^2/4)^k / (k! (k+1)!)
    let mut hk = T::zero();
    let mut hk1 = T::one();
    let mut sum = hk + hk1; // k = 0
    for k in 1..80u32 {
        let kf = T::from_u32(k).unwrap();
        term = term * q / (kf * (kf + T::one()));
        hk += kf.recip();
        hk1 += (kf + T::one()).recip();
        sum += term * (hk + hk1);
        if term * (hk + hk1) < sum.abs() * lit::<T>(1e-18) + lit::<T>(1e-300) {
            break;
        }
    }
    let k1 = y.recip() + lg * i1 - y * lit::<T>(0.25) * sum;
    (k0, k1)
}

/// K_0(y) and K_1(y) for any y > 0.
pub(crate) fn k01<T: Real>(y: T) -> (T, T) {
    if y <= lit::<T>(K_SERIES_CUTOFF) {
        k01_series(y)
    } else {
        let s = lit::<T>(4.0) / y - T::one();
        let scale = (-y).exp() / y.sqrt();
        (
            cheb_eval(K0_LARGE_CHEB, s) * scale,
            cheb_eval(K1_LARGE_CHEB, s) * scale,
        )
    }
}

/// K_0(y)..K_{n_max}(y). Entries overflow to +inf once the upward recurrence
/// leaves the representable range (large order at small argument).
pub(crate) fn kn_seq<T: Real>(n_max: usize, y: T) -> Vec<T> {
    assert!(y > T::zero());
    let (k0, k1) = k01(y);
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(k0);
    if n_max >= 1 {
        out.push(k1);
    }
    for k in 1..n_max {
        let next = T::from_usize(2 * k).unwrap() / y * out[k] + out[k - 1];
        out.push(next);
    }
    out
}

/// K_{m-1}(y) / K_m(y) for m >= 1, overflow-safe down to y near the f64 floor.
pub(crate) fn kn_ratio<T: Real>(m: u32, y: T) -> T {
    assert!(m >= 1);
    let (k0, k1) = k01(y);
    let mut r = k0 / k1; // K_0 / K_1
    for j in 1..m {
        // K_{j+1} = (2j/y) K_j + K_{j-1}  =>  K_j/K_{j+1} = 1 / (2j/y + K_{j-1}/K_j)
        r = (T::from_u32(2 * j).unwrap() / y + r).recip();
    }
    r
}
