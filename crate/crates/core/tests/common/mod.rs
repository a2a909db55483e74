//! Oracles shared by the integration tests. None of them call into the
//! library's own staircase or gamma code.

#![allow(dead_code)]

use num_bigint::BigUint;
use rand::Rng;

pub const DEPTH: u32 = 40;

/// Exact `floor(x * 3^depth)` for `x ∈ [0, 1]`.
fn scaled_floor(x: f64, depth: u32) -> BigUint {
    let bits = x.to_bits();
    let biased = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    let (mant, exp) = if biased == 0 {
        (frac, -1074)
    } else {
        (frac | (1 << 52), biased - 1075)
    };
    let n = BigUint::from(mant) * BigUint::from(3u32).pow(depth);
    if exp >= 0 {
        n << exp as usize
    } else {
        n >> (-exp) as usize
    }
}

/// Number of level-`depth` Cantor intervals whose left endpoint is `<= x`.
///
/// Left endpoints times `3^depth` are exactly the integers whose base-3
/// digits are all 0 or 2; this counts those up to `floor(x 3^depth)`.
pub fn intervals_left_of(x: f64, depth: u32) -> u64 {
    let n = scaled_floor(x, depth);
    let three_pow = BigUint::from(3u32).pow(depth);
    if n >= three_pow {
        return 1u64 << depth;
    }
    let mut digits = n.to_radix_be(3);
    while digits.len() < depth as usize {
        digits.insert(0, 0);
    }
    let mut count = 0u64;
    for (i, &d) in digits.iter().enumerate() {
        let free = depth as usize - i - 1;
        match d {
            0 => {}
            1 => return count + (1u64 << free),
            _ => count += 1u64 << free,
        }
    }
    count + 1
}

/// Cantor function from interval counting; within `2^-(depth+1)` of exact.
pub fn cantor_by_counting(x: f64) -> f64 {
    let c = intervals_left_of(x, DEPTH);
    let right = c as f64 / (1u64 << DEPTH) as f64;
    // S sweeps [right - 2^-depth, right] across the last counted interval
    let half = 0.5 / (1u64 << DEPTH) as f64;
    if x >= 1.0 {
        1.0
    } else {
        right - half
    }
}

/// A point of the Cantor set with `digits` random ternary digits in {0, 2}.
pub fn random_cantor_point<R: Rng>(rng: &mut R, digits: u32) -> f64 {
    let mut x = 0.0;
    let mut w = 1.0 / 3.0;
    for _ in 0..digits {
        if rng.gen::<bool>() {
            x += 2.0 * w;
        }
        w /= 3.0;
    }
    x
}

/// Lanczos approximation (g = 7, 9 terms), relative error near 1e-15.
pub fn gamma(z: f64) -> f64 {
    const G: f64 = 7.0;
    const C: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if z < 0.5 {
        return std::f64::consts::PI / ((std::f64::consts::PI * z).sin() * gamma(1.0 - z));
    }
    let z = z - 1.0;
    let mut a = C[0];
    let t = z + G + 0.5;
    for (i, c) in C.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    (2.0 * std::f64::consts::PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * a
}

/// `1/Γ(z)`, zero at the poles.
pub fn rgamma(z: f64) -> f64 {
    if z <= 0.0 && z == z.round() {
        0.0
    } else {
        1.0 / gamma(z)
    }
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}
