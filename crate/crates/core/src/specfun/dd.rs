//! Minimal double-double arithmetic (~32 significant digits), enough to
//! build series terms whose sum cancels heavily.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

pub const PI: Dd = Dd { hi: std::f64::consts::PI, lo: 1.224_646_799_147_353_2e-16 };
pub const LN2: Dd = Dd { hi: std::f64::consts::LN_2, lo: 2.319_046_813_846_299_6e-17 };

impl Dd {
    pub const fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact a·b + c as a double-double (up to one rounding in the low part).
    pub fn mul_add_f64(a: f64, b: f64, c: f64) -> Self {
        let (p, e) = two_prod(a, b);
        let (s, f) = two_sum(p, c);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn recip(self) -> Self {
        Dd::new(1.0) / self
    }

    /// Round to the nearest integer (ties away from zero on the high part).
    pub fn round(self) -> Self {
        let r = self.hi.round();
        if r == self.hi {
            let (hi, lo) = quick_two_sum(r, self.lo.round());
            Dd { hi, lo }
        } else {
            Dd::new(r)
        }
    }

    pub fn exp(self) -> Self {
        if self.hi > 709.8 {
            return Dd::new(f64::INFINITY);
        }
        if self.hi < -745.2 {
            return Dd::new(0.0);
        }
        let k = (self.hi / LN2.hi).round();
        let r = self - LN2 * Dd::new(k);
        // exp(r) = (exp(r / 2^10))^(2^10)
        let s = r * Dd::new(1.0 / 1024.0);
        let mut term = Dd::new(1.0);
        let mut sum = Dd::new(0.0);
        for n in 1..=14 {
            term = term * s / Dd::new(n as f64);
            sum = sum + term;
        }
        // sum = exp(s) - 1; square with the expm1 recurrence to keep bits.
        for _ in 0..10 {
            sum = sum * (sum + Dd::new(2.0));
        }
        let e = sum + Dd::new(1.0);
        let scale = 2f64.powi(k as i32);
        Dd { hi: e.hi * scale, lo: e.lo * scale }
    }

    pub fn ln(self) -> Self {
        let y = Dd::new(self.hi.ln());
        // One Newton step on exp(y) = x doubles the number of correct bits.
        y + self * (-y).exp() - Dd::new(1.0)
    }

    /// sin(π·x) with exact reduction to [-1/2, 1/2].
    pub fn sin_pi(self) -> Self {
        let n = self.round();
        let r = self - n;
        let x = PI * r;
        let x2 = x * x;
        let mut term = x;
        let mut sum = x;
        for n in 1..=16 {
            let k = (2 * n) as f64;
            term = -(term * x2) / Dd::new(k * (k + 1.0));
            sum = sum + term;
        }
        let odd = (n.hi * 0.5).fract() != 0.0 || (n.hi.abs() > 2f64.powi(52) && n.lo != 0.0);
        if odd {
            -sum
        } else {
            sum
        }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b * Dd::new(q1);
        let q2 = r.hi / b.hi;
        let r = r - b * Dd::new(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::new(q3)
    }
}

// Bernoulli numbers B_2 .. B_30 as (numerator, denominator).
const BERNOULLI: [(f64, f64); 15] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174_611.0, 330.0),
    (854_513.0, 138.0),
    (-236_364_091.0, 2730.0),
    (8_553_103.0, 6.0),
    (-23_749_461_029.0, 870.0),
    (8_615_841_276_005.0, 14322.0),
];

/// ln Γ(x) for x > 0 in double-double.
pub fn ln_gamma(x: Dd) -> Dd {
    const SHIFT_TO: f64 = 25.0;
    let mut y = x;
    let mut prod = Dd::new(1.0);
    let mut shifted = false;
    while y.hi < SHIFT_TO {
        prod = prod * y;
        y = y + Dd::new(1.0);
        shifted = true;
    }
    let ln_y = y.ln();
    let half_ln_2pi = (PI * Dd::new(2.0)).ln() * Dd::new(0.5);
    let mut s = (y - Dd::new(0.5)) * ln_y - y + half_ln_2pi;
    let inv = y.recip();
    let inv2 = inv * inv;
    let mut pow = inv;
    for (n, &(num, den)) in BERNOULLI.iter().enumerate() {
        let m = 2.0 * (n + 1) as f64;
        let c = Dd::new(num) / Dd::new(den * m * (m - 1.0));
        s = s + c * pow;
        pow = pow * inv2;
    }
    if shifted {
        s = s - prod.ln();
    }
    s
}

/// (ln|1/Γ(a)|, sign) in double-double; sign 0 at the poles.
pub fn ln_recip_gamma_signed(a: Dd) -> (Dd, f64) {
    if a.hi > 0.0 {
        return (-ln_gamma(a), 1.0);
    }
    let s = a.sin_pi();
    if s.hi == 0.0 {
        return (Dd::new(f64::NEG_INFINITY), 0.0);
    }
    // 1/Γ(a) = sin(πa) Γ(1 - a) / π
    let l = s.abs().ln() + ln_gamma(Dd::new(1.0) - a) - PI.ln();
    (l, s.hi.signum())
}
