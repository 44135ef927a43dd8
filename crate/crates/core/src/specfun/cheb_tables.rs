//! Chebyshev coefficients for exp(y)*sqrt(y)*K_m(y) on y in [2, inf),
//! mapped through s = 4/y - 1. Generated offline from 50-digit evaluations;
//! both tables reproduce K_0, K_1 to < 4e-15 relative across the interval.

pub(crate) const K0_LARGE_CHEB: &[f64] = &[
    1.2201515410329777,
    -0.031448101311964245,
    0.0015698838857298972,
    -0.00012849549581607346,
    1.394981371880297e-05,
    -1.8317555223869143e-06,
    2.7668136386931826e-07,
    -4.660489886602429e-08,
    8.57403447006454e-09,
    -1.6975346437162229e-09,
    3.57739529357717e-10,
    -7.957477886498686e-11,
    1.8558525087068272e-11,
    -4.514573899901582e-12,
    1.1397796287029552e-12,
    -2.9914342607955606e-13,
    8.06947101731718e-14,
    -2.188989730219267e-14,
    5.489436066202163e-15,
    -1.6221591970912009e-15,
    2.6521994477156517e-16,
];

pub(crate) const K1_LARGE_CHEB: &[f64] = &[
    1.360313095242221,
    0.10392373657681758,
    -0.0028578168596230277,
    0.00019521551847152048,
    -1.9361979741678364e-05,
    2.406484948153715e-06,
    -3.501960603724541e-07,
    5.7410841352517e-08,
    -1.0345762037190632e-08,
    2.0150496333255004e-09,
    -4.190356333527095e-10,
    9.218324868874737e-11,
    -2.130067727140133e-11,
    5.139654134388315e-12,
    -1.2897090802728901e-12,
    3.3369603376816787e-13,
    -8.937912138801746e-14,
    2.518355894191397e-14,
    -7.97510206022404e-15,
    2.238949766327399e-15,
];
