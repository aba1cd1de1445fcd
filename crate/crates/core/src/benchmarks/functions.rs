//! Closed-form test functions. Each takes the position and returns the raw
//! objective; F7's noise is added by the caller.

use crate::Scalar;

fn c<S: Scalar>(v: f64) -> S {
    S::lit(v)
}

pub fn sphere<S: Scalar>(x: &[S]) -> S {
    x.iter().fold(S::zero(), |acc, &v| acc + v * v)
}

/// Schwefel 2.22: sum |x| + prod |x|.
pub fn schwefel_2_22<S: Scalar>(x: &[S]) -> S {
    let sum = x.iter().fold(S::zero(), |acc, &v| acc + v.abs());
    let prod = x.iter().fold(S::one(), |acc, &v| acc * v.abs());
    sum + prod
}

/// Schwefel 1.2: sum of squared prefix sums.
pub fn schwefel_1_2<S: Scalar>(x: &[S]) -> S {
    let mut prefix = S::zero();
    let mut total = S::zero();
    for &v in x {
        prefix = prefix + v;
        total = total + prefix * prefix;
    }
    total
}

/// Schwefel 2.21: max |x|.
pub fn schwefel_2_21<S: Scalar>(x: &[S]) -> S {
    x.iter().fold(S::zero(), |acc, &v| acc.max(v.abs()))
}

pub fn rosenbrock<S: Scalar>(x: &[S]) -> S {
    x.windows(2).fold(S::zero(), |acc, w| {
        let a = w[1] - w[0] * w[0];
        let b = w[0] - S::one();
        acc + c::<S>(100.0) * a * a + b * b
    })
}

pub fn step<S: Scalar>(x: &[S]) -> S {
    x.iter().fold(S::zero(), |acc, &v| {
        let r = (v + c(0.5)).floor();
        acc + r * r
    })
}

/// Quartic without its noise term: sum i * x_i^4.
pub fn quartic<S: Scalar>(x: &[S]) -> S {
    x.iter().enumerate().fold(S::zero(), |acc, (i, &v)| {
        acc + c::<S>((i + 1) as f64) * v.powi(4)
    })
}

/// Schwefel 2.26: -sum x sin(sqrt|x|).
pub fn schwefel_2_26<S: Scalar>(x: &[S]) -> S {
    -x.iter().fold(S::zero(), |acc, &v| acc + v * v.abs().sqrt().sin())
}

pub fn rastrigin<S: Scalar>(x: &[S]) -> S {
    let two_pi = c::<S>(std::f64::consts::TAU);
    x.iter().fold(S::zero(), |acc, &v| {
        acc + v * v - c::<S>(10.0) * (two_pi * v).cos() + c(10.0)
    })
}

pub fn ackley<S: Scalar>(x: &[S]) -> S {
    let n = c::<S>(x.len() as f64);
    let two_pi = c::<S>(std::f64::consts::TAU);
    let sq = x.iter().fold(S::zero(), |acc, &v| acc + v * v);
    let cs = x.iter().fold(S::zero(), |acc, &v| acc + (two_pi * v).cos());
    -c::<S>(20.0) * (-c::<S>(0.2) * (sq / n).sqrt()).exp() - (cs / n).exp()
        + c(20.0)
        + c(std::f64::consts::E)
}

pub fn griewank<S: Scalar>(x: &[S]) -> S {
    let sum = x.iter().fold(S::zero(), |acc, &v| acc + v * v) / c(4000.0);
    let prod = x
        .iter()
        .enumerate()
        .fold(S::one(), |acc, (i, &v)| acc * (v / c::<S>((i + 1) as f64).sqrt()).cos());
    sum - prod + S::one()
}

/// Boundary penalty u(x, a, k, m) shared by both penalized functions.
pub fn boundary_penalty<S: Scalar>(v: S, a: S, k: S, m: i32) -> S {
    if v > a {
        k * (v - a).powi(m)
    } else if v < -a {
        k * (-v - a).powi(m)
    } else {
        S::zero()
    }
}

fn penalty_sum<S: Scalar>(x: &[S], a: f64) -> S {
    x.iter().fold(S::zero(), |acc, &v| {
        acc + boundary_penalty(v, c(a), c(100.0), 4)
    })
}

pub fn penalized<S: Scalar>(x: &[S]) -> S {
    let pi = c::<S>(std::f64::consts::PI);
    let n = x.len();
    let y: Vec<S> = x
        .iter()
        .map(|&v| S::one() + (v + S::one()) / c(4.0))
        .collect();
    let mut body = c::<S>(10.0) * (pi * y[0]).sin().powi(2);
    for i in 0..n - 1 {
        let d = y[i] - S::one();
        body = body + d * d * (S::one() + c::<S>(10.0) * (pi * y[i + 1]).sin().powi(2));
    }
    let last = y[n - 1] - S::one();
    body = body + last * last;
    pi / c(n as f64) * body + penalty_sum(x, 10.0)
}

pub fn penalized2<S: Scalar>(x: &[S]) -> S {
    let pi = c::<S>(std::f64::consts::PI);
    let n = x.len();
    let mut body = (c::<S>(3.0) * pi * x[0]).sin().powi(2);
    for i in 0..n - 1 {
        let d = x[i] - S::one();
        body = body + d * d * (S::one() + (c::<S>(3.0) * pi * x[i + 1]).sin().powi(2));
    }
    let last = x[n - 1] - S::one();
    body = body + last * last * (S::one() + (c::<S>(2.0) * pi * x[n - 1]).sin().powi(2));
    c::<S>(0.1) * body + penalty_sum(x, 5.0)
}

const FOXHOLES: [[f64; 25]; 2] = [
    [
        -32.0, -16.0, 0.0, 16.0, 32.0, -32.0, -16.0, 0.0, 16.0, 32.0, -32.0, -16.0, 0.0, 16.0,
        32.0, -32.0, -16.0, 0.0, 16.0, 32.0, -32.0, -16.0, 0.0, 16.0, 32.0,
    ],
    [
        -32.0, -32.0, -32.0, -32.0, -32.0, -16.0, -16.0, -16.0, -16.0, -16.0, 0.0, 0.0, 0.0, 0.0,
        0.0, 16.0, 16.0, 16.0, 16.0, 16.0, 32.0, 32.0, 32.0, 32.0, 32.0,
    ],
];

/// Shekel's foxholes.
pub fn foxholes<S: Scalar>(x: &[S]) -> S {
    let mut acc = S::one() / c(500.0);
    for j in 0..25 {
        let mut inner = c::<S>((j + 1) as f64);
        for (i, &v) in x.iter().enumerate().take(2) {
            inner = inner + (v - c(FOXHOLES[i][j])).powi(6);
        }
        acc = acc + S::one() / inner;
    }
    S::one() / acc
}

const KOWALIK_A: [f64; 11] = [
    0.1957, 0.1947, 0.1735, 0.16, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246,
];
const KOWALIK_B_INV: [f64; 11] = [0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0];

pub fn kowalik<S: Scalar>(x: &[S]) -> S {
    KOWALIK_A
        .iter()
        .zip(KOWALIK_B_INV)
        .fold(S::zero(), |acc, (&a, b_inv)| {
            let b = c::<S>(1.0 / b_inv);
            let model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
            let r = c::<S>(a) - model;
            acc + r * r
        })
}

pub fn six_hump_camel<S: Scalar>(x: &[S]) -> S {
    let (a, b) = (x[0], x[1]);
    c::<S>(4.0) * a * a - c::<S>(2.1) * a.powi(4) + a.powi(6) / c(3.0) + a * b
        - c::<S>(4.0) * b * b
        + c::<S>(4.0) * b.powi(4)
}

pub fn branin<S: Scalar>(x: &[S]) -> S {
    let pi = std::f64::consts::PI;
    let (a, b) = (x[0], x[1]);
    let t = b - c::<S>(5.1 / (4.0 * pi * pi)) * a * a + c::<S>(5.0 / pi) * a - c(6.0);
    t * t + c::<S>(10.0 * (1.0 - 1.0 / (8.0 * pi))) * a.cos() + c(10.0)
}

pub fn goldstein_price<S: Scalar>(x: &[S]) -> S {
    let (a, b) = (x[0], x[1]);
    let s = a + b + S::one();
    let first = S::one()
        + s * s
            * (c::<S>(19.0) - c::<S>(14.0) * a + c::<S>(3.0) * a * a - c::<S>(14.0) * b
                + c::<S>(6.0) * a * b
                + c::<S>(3.0) * b * b);
    let d = c::<S>(2.0) * a - c::<S>(3.0) * b;
    let second = c::<S>(30.0)
        + d * d
            * (c::<S>(18.0) - c::<S>(32.0) * a + c::<S>(12.0) * a * a + c::<S>(48.0) * b
                - c::<S>(36.0) * a * b
                + c::<S>(27.0) * b * b);
    first * second
}

const HARTMAN_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];
const HARTMAN3_A: [[f64; 3]; 4] = [
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
];
const HARTMAN3_P: [[f64; 3]; 4] = [
    [0.3689, 0.117, 0.2673],
    [0.4699, 0.4387, 0.747],
    [0.1091, 0.8732, 0.5547],
    [0.03815, 0.5743, 0.8828],
];
const HARTMAN6_A: [[f64; 6]; 4] = [
    [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
    [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
    [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
];
const HARTMAN6_P: [[f64; 6]; 4] = [
    [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
    [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
    [0.2348, 0.1415, 0.3522, 0.2883, 0.3047, 0.6650],
    [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
];

fn hartman<S: Scalar, const D: usize>(x: &[S], a: &[[f64; D]; 4], p: &[[f64; D]; 4]) -> S {
    let mut total = S::zero();
    for i in 0..4 {
        let mut inner = S::zero();
        for j in 0..D {
            let d = x[j] - c(p[i][j]);
            inner = inner + c::<S>(a[i][j]) * d * d;
        }
        total = total + c::<S>(HARTMAN_C[i]) * (-inner).exp();
    }
    -total
}

pub fn hartman3<S: Scalar>(x: &[S]) -> S {
    hartman(x, &HARTMAN3_A, &HARTMAN3_P)
}

pub fn hartman6<S: Scalar>(x: &[S]) -> S {
    hartman(x, &HARTMAN6_A, &HARTMAN6_P)
}

const SHEKEL_A: [[f64; 4]; 10] = [
    [4.0, 4.0, 4.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0],
    [3.0, 7.0, 3.0, 7.0],
    [2.0, 9.0, 2.0, 9.0],
    [5.0, 5.0, 3.0, 3.0],
    [8.0, 1.0, 8.0, 1.0],
    [6.0, 2.0, 6.0, 2.0],
    [7.0, 3.6, 7.0, 3.6],
];
const SHEKEL_C: [f64; 10] = [0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];

/// Shekel with the first `m` of the ten standard foxholes.
pub fn shekel<S: Scalar>(x: &[S], m: usize) -> S {
    let mut total = S::zero();
    for i in 0..m {
        let mut dist = S::zero();
        for (j, &v) in x.iter().enumerate().take(4) {
            let d = v - c(SHEKEL_A[i][j]);
            dist = dist + d * d;
        }
        total = total + S::one() / (dist + c(SHEKEL_C[i]));
    }
    -total
}
