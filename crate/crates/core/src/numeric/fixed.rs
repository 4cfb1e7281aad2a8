use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// A complex number `(re + i*im) / 2^bits` for the owning [`Fixed`] context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cx {
    pub re: BigInt,
    pub im: BigInt,
}

/// Fixed-point context: every [`Cx`] it produces is scaled by `2^bits`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fixed {
    bits: u32,
}

fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    // nearest integer to n/d for d > 0
    (n * 2u32 + d).div_floor(&(d * 2u32))
}

impl Fixed {
    pub fn new(bits: u32) -> Self {
        Fixed { bits }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn zero(&self) -> Cx {
        Cx {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    pub fn one(&self) -> Cx {
        self.real(&BigRational::from_integer(1.into()))
    }

    pub fn real(&self, r: &BigRational) -> Cx {
        let n = r.numer() << self.bits;
        Cx {
            re: round_div(&n, r.denom()),
            im: BigInt::zero(),
        }
    }

    pub fn from_c64(&self, z: Complex64) -> Cx {
        let s = 2f64.powi(60);
        let conv = |v: f64| -> BigInt {
            let m = BigInt::from((v * s).round() as i128);
            if self.bits >= 60 {
                m << (self.bits - 60)
            } else {
                m >> (60 - self.bits)
            }
        };
        Cx {
            re: conv(z.re),
            im: conv(z.im),
        }
    }

    pub fn to_c64(&self, z: &Cx) -> Complex64 {
        let f = |v: &BigInt| -> f64 {
            let shift = v.bits().saturating_sub(60);
            let top = (v >> shift).to_f64().unwrap_or(0.0);
            top * 2f64.powi(shift as i32 - self.bits as i32)
        };
        Complex64::new(f(&z.re), f(&z.im))
    }

    /// Re-expresses `z` from another context's scale into this one.
    pub fn rescale(&self, z: &Cx, from: &Fixed) -> Cx {
        let conv = |v: &BigInt| {
            if self.bits >= from.bits {
                v << (self.bits - from.bits)
            } else {
                v >> (from.bits - self.bits)
            }
        };
        Cx {
            re: conv(&z.re),
            im: conv(&z.im),
        }
    }

    pub fn add(&self, a: &Cx, b: &Cx) -> Cx {
        Cx {
            re: &a.re + &b.re,
            im: &a.im + &b.im,
        }
    }

    pub fn sub(&self, a: &Cx, b: &Cx) -> Cx {
        Cx {
            re: &a.re - &b.re,
            im: &a.im - &b.im,
        }
    }

    pub fn neg(&self, a: &Cx) -> Cx {
        Cx {
            re: -&a.re,
            im: -&a.im,
        }
    }

    pub fn mul(&self, a: &Cx, b: &Cx) -> Cx {
        let re = &a.re * &b.re - &a.im * &b.im;
        let im = &a.re * &b.im + &a.im * &b.re;
        Cx {
            re: re >> self.bits,
            im: im >> self.bits,
        }
    }

    pub fn scale_rational(&self, a: &Cx, r: &BigRational) -> Cx {
        Cx {
            re: round_div(&(&a.re * r.numer()), r.denom()),
            im: round_div(&(&a.im * r.numer()), r.denom()),
        }
    }

    pub fn div(&self, a: &Cx, b: &Cx) -> Option<Cx> {
        let den = &b.re * &b.re + &b.im * &b.im;
        if den.is_zero() {
            return None;
        }
        let re = (&a.re * &b.re + &a.im * &b.im) << self.bits;
        let im = (&a.im * &b.re - &a.re * &b.im) << self.bits;
        Some(Cx {
            re: round_div(&re, &den),
            im: round_div(&im, &den),
        })
    }

    /// `|z|^2`, scaled by `2^(2*bits)`.
    pub fn norm_sqr_raw(&self, z: &Cx) -> BigInt {
        &z.re * &z.re + &z.im * &z.im
    }

    /// Whether `|z| < 2^k`.
    pub fn below_pow2(&self, z: &Cx, k: i64) -> bool {
        let e = 2 * (k + self.bits as i64);
        if e < 0 {
            return self.norm_sqr_raw(z).is_zero();
        }
        self.norm_sqr_raw(z) < (BigInt::from(1) << (e as u64))
    }

    /// Approximate `log2 |z|`, `-inf` for zero.
    pub fn log2_abs(&self, z: &Cx) -> f64 {
        let n = self.norm_sqr_raw(z);
        if n.is_zero() {
            return f64::NEG_INFINITY;
        }
        let b = n.bits();
        let shift = b.saturating_sub(60);
        let top = (n >> shift).to_f64().unwrap();
        (top.log2() + shift as f64) / 2.0 - self.bits as f64
    }

    /// Rounds the real part to an integer.
    pub fn round_re(&self, z: &Cx) -> BigInt {
        round_div(&z.re, &(BigInt::from(1) << self.bits))
    }

    pub fn eval_poly(&self, coeffs: &[Cx], z: &Cx) -> Cx {
        coeffs
            .iter()
            .rev()
            .fold(self.zero(), |acc, c| self.add(&self.mul(&acc, z), c))
    }
}
