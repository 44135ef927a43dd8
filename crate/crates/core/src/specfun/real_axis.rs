//! J_m and Y_m for real nonnegative arguments.
//!
//! J: ascending series below x = 12, Hankel asymptotic expansion plus upward
//! recurrence above; Miller downward recurrence when the order exceeds the
//! argument. Y: series with logarithmic terms (orders 0, 1) below x = 12,
//! asymptotic above, upward recurrence in the order (the stable direction).

use crate::real::{lit, Real};

/// Series/asymptotic crossover for J and Y.
pub(crate) const SERIES_CUTOFF: f64 = 12.0;

const EULER_GAMMA: f64 = 0.5772156649015328606;

/// Kahan-compensated accumulator.
#[derive(Clone, Copy)]
struct Comp<T: Real> {
    sum: T,
    c: T,
}

impl<T: Real> Comp<T> {
    fn new() -> Self {
        Comp { sum: T::zero(), c: T::zero() }
    }
    fn add(&mut self, x: T) {
        let y = x - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }
}

/// (x/2)^m / m! by alternating the factors to avoid under/overflow sweeps.
fn half_pow_over_fact<T: Real>(m: u32, x: T) -> T {
    let half = x * lit::<T>(0.5);
    let mut acc = T::one();
    for j in 1..=m {
        acc = acc * half / T::from_u32(j).unwrap();
    }
    acc
}

/// Ascending series for J_m(x), |x| < SERIES_CUTOFF.
pub(crate) fn jn_series<T: Real>(m: u32, x: T) -> T {
    if x == T::zero() {
        return if m == 0 { T::one() } else { T::zero() };
    }
    let q = -x * x * lit::<T>(0.25);
    let mut term = half_pow_over_fact(m, x);
    let mut acc = Comp::new();
    acc.add(term);
    for k in 1..200u32 {
        term = term * q / (T::from_u32(k).unwrap() * T::from_u32(m + k).unwrap());
        acc.add(term);
        if term.abs() < acc.sum.abs() * lit::<T>(1e-18) + lit::<T>(1e-300) {
            break;
        }
    }
    acc.sum
}

/// Hankel asymptotic expansion: returns (J_m(x), Y_m(x)) for x >= SERIES_CUTOFF,
/// valid while the order is small against the argument (used for m = 0, 1).
fn jy_asymptotic<T: Real>(m: u32, x: T) -> (T, T) {
    let four_m2 = lit::<T>(4.0) * T::from_u32(m * m).unwrap();
    // S = sum_k i^k a_k / x^k, split into real and imaginary parts
    let mut re = T::one();
    let mut im = T::zero();
    let mut a = T::one();
    let mut last = T::infinity();
    for k in 0..60u32 {
        let odd = T::from_u32(2 * k + 1).unwrap();
        a = a * (four_m2 - odd * odd) / (lit::<T>(8.0) * T::from_u32(k + 1).unwrap()) / x;
        if a.abs() >= last {
            break; // divergent tail reached
        }
        last = a.abs();
        match (k + 1) % 4 {
            0 => re += a,
            1 => im += a,
            2 => re -= a,
            _ => im -= a,
        }
        if a.abs() < lit::<T>(1e-18) {
            break;
        }
    }
    let omega = x - (T::from_u32(m).unwrap() * lit::<T>(0.5) + lit::<T>(0.25)) * T::PI();
    let amp = (lit::<T>(2.0) / (T::PI() * x)).sqrt();
    let (s, c) = omega.sin_cos();
    // e^{i omega} (re + i im) -> J = Re, Y = Im
    (amp * (c * re - s * im), amp * (s * re + c * im))
}

/// Miller downward recurrence: J_0..J_{n_max} for x > 0, any order.
fn jn_seq_miller<T: Real>(n_max: usize, x: T) -> Vec<T> {
    let pad = (40.0 * (n_max as f64 + 1.0)).sqrt().ceil() as usize + 16;
    let start = n_max + pad;
    let mut out = vec![T::zero(); n_max + 1];
    let mut jp = T::zero(); // J_{k+1}
    let mut j = lit::<T>(1e-30); // J_k, starting at k = start
    let mut norm = Comp::new();
    if start % 2 == 0 {
        norm.add(j + j);
    }
    let big = lit::<T>(1e250);
    let inv_big = lit::<T>(1e-250);
    for k in (1..=start).rev() {
        // J_{k-1} = (2k/x) J_k - J_{k+1}
        let jm = T::from_usize(2 * k).unwrap() / x * j - jp;
        jp = j;
        j = jm;
        let ord = k - 1;
        if ord <= n_max {
            out[ord] = j;
        }
        if ord % 2 == 0 {
            norm.add(if ord == 0 { j } else { j + j });
        }
        if j.abs() > big {
            jp *= inv_big;
            j *= inv_big;
            norm.sum *= inv_big;
            norm.c *= inv_big;
            for v in out.iter_mut() {
                *v *= inv_big;
            }
        }
    }
    let scale = norm.sum.recip();
    for v in out.iter_mut() {
        *v *= scale;
    }
    out
}

/// J_0(x)..J_{n_max}(x) for x >= 0.
pub(crate) fn jn_seq<T: Real>(n_max: usize, x: T) -> Vec<T> {
    assert!(x >= T::zero());
    if x == T::zero() {
        let mut out = vec![T::zero(); n_max + 1];
        out[0] = T::one();
        return out;
    }
    if x < lit::<T>(SERIES_CUTOFF) {
        return (0..=n_max as u32).map(|m| jn_series(m, x)).collect();
    }
    let stable_top = x.to_f64().unwrap().floor() as usize;
    if n_max > stable_top {
        return jn_seq_miller(n_max, x);
    }
    // upward recurrence from the asymptotic J0, J1 (stable while m <= x)
    let (j0, _) = jy_asymptotic(0, x);
    let (j1, _) = jy_asymptotic(1, x);
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(j0);
    if n_max >= 1 {
        out.push(j1);
    }
    for k in 1..n_max {
        let next = T::from_usize(2 * k).unwrap() / x * out[k] - out[k - 1];
        out.push(next);
    }
    out
}

/// Y_0(x) and Y_1(x) by the logarithmic series, x < SERIES_CUTOFF.
fn y01_series<T: Real>(x: T) -> (T, T) {
    let two_over_pi = lit::<T>(2.0) / T::PI();
    let lg = (x * lit::<T>(0.5)).ln() + lit::<T>(EULER_GAMMA);
    let q = x * x * lit::<T>(0.25);

    // Y0
    let j0 = jn_series(0, x);
    let mut term = T::one();
    let mut h = T::zero();
    let mut acc = Comp::new();
    for k in 1..200u32 {
        let kf = T::from_u32(k).unwrap();
        term = term * q / (kf * kf);
        h += kf.recip();
        let contrib = if k % 2 == 1 { term * h } else { -(term * h) };
        acc.add(contrib);
        if term * h < acc.sum.abs() * lit::<T>(1e-18) + lit::<T>(1e-300) {
            break;
        }
    }
    let y0 = two_over_pi * (lg * j0 + acc.sum);

    // Y1
    let j1 = jn_series(1, x);
    let mut term = T::one(); // (-x^2/4)^k / (k! (k+1)!)
    let mut hk = T::zero();
    let mut hk1 = T::one();
    let mut acc = Comp::new();
    acc.add(hk + hk1); // k = 0 term: H_0 + H_1 = 1
    for k in 1..200u32 {
        let kf = T::from_u32(k).unwrap();
        term = term * (-q) / (kf * (kf + T::one()));
        hk += kf.recip();
        hk1 += (kf + T::one()).recip();
        acc.add(term * (hk + hk1));
        if term.abs() * (hk + hk1) < acc.sum.abs() * lit::<T>(1e-18) + lit::<T>(1e-300) {
            break;
        }
    }
    let y1 = -lit::<T>(2.0) / (T::PI() * x) + two_over_pi * lg * j1
        - x * lit::<T>(0.25) * two_over_pi * acc.sum;
    (y0, y1)
}

/// Y_0(x)..Y_{n_max}(x) for x > 0. Overflows to -inf for extreme order/argument
/// combinations outside the supported range.
pub(crate) fn yn_seq<T: Real>(n_max: usize, x: T) -> Vec<T> {
    assert!(x > T::zero());
    let (y0, y1) = if x < lit::<T>(SERIES_CUTOFF) {
        y01_series(x)
    } else {
        (jy_asymptotic(0, x).1, jy_asymptotic(1, x).1)
    };
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(y0);
    if n_max >= 1 {
        out.push(y1);
    }
    for k in 1..n_max {
        let next = T::from_usize(2 * k).unwrap() / x * out[k] - out[k - 1];
        out.push(next);
    }
    out
}

/// (C_{m-1}, C_m, C_{m+1}) from a nonnegative-order sequence, extending to
/// m = 0 through the reflection C_{-1} = -C_1.
pub(crate) fn triplet_from_seq<T: Real>(seq: &[T], m: usize) -> (T, T, T) {
    let prev = if m == 0 { -seq[1] } else { seq[m - 1] };
    (prev, seq[m], seq[m + 1])
}
