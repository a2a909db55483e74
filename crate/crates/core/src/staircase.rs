//! The triadic Cantor set and its integral staircase function.
//!
//! The staircase `S(x)` is evaluated from the exact base-3 expansion of the
//! floating-point input: ternary digits `0` and `2` become binary digits `0`
//! and `1`, and the first ternary `1` contributes a final binary `1` and stops
//! the expansion. Digits are extracted with integer arithmetic on the exact
//! dyadic value of `x`, so the only rounding is the final conversion of the
//! 64-bit binary fraction to `f64`.
//!
//! Self-similarity `S(x/3) = S(x)/2` therefore holds bit-for-bit whenever the
//! rounded quotient `x/3` keeps the position of the first ternary `1`, which
//! is the generic case. The scale law `S(λx) = λ^α S(x)` only holds for
//! `λ = 3^-n`; for other `λ` the staircase is not homogeneous.

use num_bigint::BigUint;

use crate::{Error, Result};

/// γ-dimension of the middle-third Cantor set, `ln 2 / ln 3`.
pub const TRIADIC_DIMENSION: f64 = 0.630_929_753_571_457_4;

/// Number of ternary digits extracted by [`CantorSpec::eval`].
pub const TERNARY_DIGITS: u32 = 64;

const DEFAULT_DEPTH: u32 = 20;

/// Which staircase a `CantorSpec` carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    /// Middle-third Cantor set; `S` is the devil's staircase.
    Triadic,
    /// The whole interval; `S(x) = x`. Used for the classical `α = 1` limit.
    Identity,
}

/// The fractal support: construction, depth for membership tests, dimension
/// `α` and the domain `[0, L]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CantorSpec {
    construction: Construction,
    depth: u32,
    alpha: f64,
    length: f64,
}

/// A staircase evaluation together with the membership test at the same point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StaircaseValue {
    pub x: f64,
    pub s: f64,
    pub in_set: bool,
}

impl Default for CantorSpec {
    fn default() -> Self {
        Self::triadic()
    }
}

impl CantorSpec {
    /// Middle-third Cantor set on `[0, 1]` with `α = ln 2 / ln 3`.
    pub fn triadic() -> Self {
        CantorSpec {
            construction: Construction::Triadic,
            depth: DEFAULT_DEPTH,
            alpha: TRIADIC_DIMENSION,
            length: 1.0,
        }
    }

    /// Identity staircase on `[0, 1]` with `α = 1`.
    pub fn identity() -> Self {
        CantorSpec {
            construction: Construction::Identity,
            depth: DEFAULT_DEPTH,
            alpha: 1.0,
            length: 1.0,
        }
    }

    pub fn new(construction: Construction, depth: u32, alpha: f64, length: f64) -> Result<Self> {
        CantorSpec {
            construction,
            depth: DEFAULT_DEPTH,
            alpha: 1.0,
            length: 1.0,
        }
        .with_depth(depth)?
        .with_alpha(alpha)?
        .with_length(length)
    }

    /// Overrides the dimension. Values other than `ln 2 / ln 3` change the
    /// scale exponents and order units but not the shape of the staircase.
    pub fn with_alpha(mut self, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::range("alpha", alpha, "(0, 1]"));
        }
        self.alpha = alpha;
        Ok(self)
    }

    pub fn with_depth(mut self, depth: u32) -> Result<Self> {
        if depth == 0 {
            return Err(Error::InvalidParameter("depth must be at least 1".into()));
        }
        self.depth = depth;
        Ok(self)
    }

    pub fn with_length(mut self, length: f64) -> Result<Self> {
        if !(length > 0.0 && length.is_finite()) {
            return Err(Error::range("domain length", length, "(0, inf)"));
        }
        self.length = length;
        Ok(self)
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    /// Largest staircase value, `L^α`.
    pub fn s_max(&self) -> f64 {
        if self.length == 1.0 {
            1.0
        } else {
            self.length.powf(self.alpha)
        }
    }

    fn normalize(&self, x: f64) -> Result<f64> {
        if !(x >= 0.0 && x <= self.length) {
            return Err(Error::range("x", x, format!("[0, {}]", self.length)));
        }
        Ok(if self.length == 1.0 {
            x
        } else {
            (x / self.length).min(1.0)
        })
    }

    /// The integral staircase function `S(x)`, anchored at `S(0) = 0`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        let t = self.normalize(x)?;
        let unit = match self.construction {
            Construction::Triadic => cantor_function(t),
            Construction::Identity => t,
        };
        Ok(unit * self.s_max())
    }

    /// Left endpoint of the level set `{x : S(x) = s}`.
    ///
    /// The result is the smallest `f64` whose staircase value is at least `s`,
    /// so `eval(inverse(s)) == s` exactly whenever the plateau at `s` is wider
    /// than the float spacing (dyadic `s` with up to about 30 significant bits).
    pub fn inverse(&self, s: f64) -> Result<f64> {
        let s_max = self.s_max();
        if !(s >= 0.0 && s <= s_max) {
            return Err(Error::range("s", s, format!("[0, {s_max}]")));
        }
        let t = if s_max == 1.0 { s } else { (s / s_max).min(1.0) };
        let unit = match self.construction {
            Construction::Triadic => cantor_inverse(t),
            Construction::Identity => t,
        };
        Ok(if self.length == 1.0 {
            unit
        } else {
            (unit * self.length).min(self.length)
        })
    }

    /// Whether `x` survives `depth` middle-third removals.
    ///
    /// Endpoints of removed gaps are members. A float within one ulp of the
    /// level-`depth` set also counts as a member, so rounded images of
    /// endpoints such as `1/3` or `8/9` test as members.
    pub fn contains(&self, x: f64) -> Result<bool> {
        let t = self.normalize(x)?;
        Ok(match self.construction {
            Construction::Triadic => in_cantor_set(t, self.depth),
            Construction::Identity => true,
        })
    }

    pub fn value(&self, x: f64) -> Result<StaircaseValue> {
        Ok(StaircaseValue {
            x,
            s: self.eval(x)?,
            in_set: self.contains(x)?,
        })
    }
}

/// Exact base-3 digits of a float in `[0, 1)`.
///
/// The value is held as `num / 2^shift`. Most inputs fit in `u128`; very
/// small ones fall back to a big integer.
enum TernaryDigits {
    Small { num: u128, shift: u32 },
    Big { num: BigUint, shift: u64 },
}

impl TernaryDigits {
    fn new(x: f64) -> Self {
        debug_assert!((0.0..1.0).contains(&x));
        if x == 0.0 {
            return TernaryDigits::Small { num: 0, shift: 0 };
        }
        let bits = x.to_bits();
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mut mant, exp) = if biased == 0 {
            (frac, -1074i64)
        } else {
            (frac | (1u64 << 52), biased - 1075)
        };
        let tz = mant.trailing_zeros();
        mant >>= tz;
        let shift = (-(exp + tz as i64)) as u64;
        if shift <= 125 {
            TernaryDigits::Small {
                num: mant as u128,
                shift: shift as u32,
            }
        } else {
            TernaryDigits::Big {
                num: BigUint::from(mant),
                shift,
            }
        }
    }

    fn next_digit(&mut self) -> u8 {
        match self {
            TernaryDigits::Small { num, shift } => {
                let t = *num * 3;
                let d = t >> *shift;
                *num = t - (d << *shift);
                d as u8
            }
            TernaryDigits::Big { num, shift } => {
                *num *= 3u32;
                let d = &*num >> *shift;
                let digit = d.iter_u32_digits().next().unwrap_or(0) as u8;
                if digit != 0 {
                    *num -= d << *shift;
                }
                digit
            }
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            TernaryDigits::Small { num, .. } => *num == 0,
            TernaryDigits::Big { num, .. } => num.bits() == 0,
        }
    }

    /// The tail `num / 2^shift` in `[0, 1)`.
    fn remainder(&self) -> f64 {
        match self {
            TernaryDigits::Small { num, shift } => ldexp(*num as f64, -(*shift as i64)),
            TernaryDigits::Big { num, shift } => {
                let bits = num.bits();
                if bits <= 64 {
                    let top = num.iter_u64_digits().next().unwrap_or(0);
                    ldexp(top as f64, -(*shift as i64))
                } else {
                    let drop = bits - 64;
                    let top: BigUint = num >> drop;
                    let top = top.iter_u64_digits().next().unwrap_or(0);
                    ldexp(top as f64, drop as i64 - *shift as i64)
                }
            }
        }
    }
}

/// `m · 2^e` without intermediate overflow or premature underflow.
fn ldexp(mut m: f64, mut e: i64) -> f64 {
    while e > 1000 {
        m *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        m *= 2f64.powi(-1000);
        e += 1000;
    }
    m * 2f64.powi(e as i32)
}

/// The Cantor function on `[0, 1]`.
pub(crate) fn cantor_function(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let mut digits = TernaryDigits::new(x);
    let mut acc: u64 = 0;
    for i in 1..=TERNARY_DIGITS {
        let bit = 1u64 << (64 - i);
        match digits.next_digit() {
            0 => {}
            2 => acc |= bit,
            _ => {
                acc |= bit;
                break;
            }
        }
        if digits.is_zero() {
            break;
        }
    }
    ldexp(acc as f64, -64)
}

fn in_cantor_set(x: f64, depth: u32) -> bool {
    if x <= 0.0 || x >= 1.0 {
        return true;
    }
    let mut digits = TernaryDigits::new(x);
    let mut scale = 1.0;
    for _ in 0..depth {
        scale /= 3.0;
        if digits.next_digit() == 1 {
            // x = left + (1 + rho) 3^-i; both gap endpoints belong to the set
            let rho = digits.remainder();
            if rho == 0.0 {
                return true;
            }
            let distance = rho.min(1.0 - rho) * scale;
            return distance <= x.next_up() - x;
        }
        if digits.is_zero() {
            return true;
        }
    }
    true
}

/// Left endpoint of the Cantor-function level set at `s` in `[0, 1]`.
fn cantor_inverse(s: f64) -> f64 {
    if s <= 0.0 {
        return 0.0;
    }
    if s >= 1.0 {
        return 1.0;
    }
    // s = m / 2^k with m odd; binary digit i is bit (k - i) of m
    let bits = s.to_bits();
    let biased = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    let (mut mant, exp) = if biased == 0 {
        (frac, -1074i64)
    } else {
        (frac | (1u64 << 52), biased - 1075)
    };
    let tz = mant.trailing_zeros();
    mant >>= tz;
    let k = -(exp + tz as i64);
    let bit = |i: i64| -> f64 {
        let pos = k - i;
        if pos < 64 && (mant >> pos) & 1 == 1 {
            2.0
        } else {
            0.0
        }
    };
    // x = sum_{i<k} 2 b_i 3^-i + 3^-k, evaluated by Horner from the last digit
    let mut x = 1.0 / 3.0;
    for i in (1..k).rev() {
        x = (bit(i) + x) / 3.0;
    }
    // snap to the smallest float whose staircase value reaches s
    for _ in 0..256 {
        if cantor_function(x) < s {
            x = x.next_up();
            continue;
        }
        let below = x.next_down();
        if below >= 0.0 && cantor_function(below) >= s {
            x = below;
            continue;
        }
        break;
    }
    x
}
