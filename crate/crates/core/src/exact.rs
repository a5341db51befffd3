//! Big-integer / big-rational helpers: factorials, binomials, and the exact
//! decimal renderers used by the table emitters.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Multinomial coefficient `n! / (parts[0]! parts[1]! ...)`.
///
/// The parts must sum to at most `n`; the slack is treated as one more part.
pub fn multinomial(n: u64, parts: &[u64]) -> Int {
    let s: u64 = parts.iter().sum();
    assert!(s <= n, "multinomial parts exceed n");
    let mut acc = factorial(n);
    for &p in parts {
        acc /= factorial(p);
    }
    if s < n {
        acc /= factorial(n - s);
    }
    acc
}

pub fn rat_is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Exact rational -> f64 (precise enough for reporting; not used in exact paths).
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Extremely large or small values: fall back on a digit-based estimate.
        let num_digits = r.numer().abs().to_string().len() as i32;
        let den_digits = r.denom().to_string().len() as i32;
        let sign = if r.is_negative() { -1.0 } else { 1.0 };
        sign * 10f64.powi(num_digits - den_digits)
    })
}

fn pow10(e: u32) -> Int {
    let mut acc = Int::one();
    for _ in 0..e {
        acc *= 10;
    }
    acc
}

/// Decimal expansion of a positive rational, rounded half-up to `sig`
/// significant digits. Plain decimal notation (no exponent).
pub fn decimal_round_sig(r: &Rat, sig: usize) -> String {
    assert!(sig > 0);
    assert!(r.is_positive(), "decimal_round_sig expects a positive value");
    let num = r.numer().clone();
    let den = r.denom().clone();

    // Exponent e with 10^e <= r < 10^{e+1}.
    let mut e: i64 = 0;
    if num >= den {
        let mut scaled = den.clone();
        while &scaled * 10 <= num {
            scaled *= 10;
            e += 1;
        }
    } else {
        let mut scaled = num.clone();
        loop {
            scaled *= 10;
            e -= 1;
            if scaled >= den {
                break;
            }
        }
    }

    let shift = sig as i64 - 1 - e;
    let (mut q, rem, den_for_round) = if shift >= 0 {
        let scaled_num = &num * pow10(shift as u32);
        let q = &scaled_num / &den;
        let rem = &scaled_num - &q * &den;
        (q, rem, den.clone())
    } else {
        let scaled_den = &den * pow10((-shift) as u32);
        let q = &num / &scaled_den;
        let rem = &num - &q * &scaled_den;
        (q, rem, scaled_den)
    };
    // Round half-up.
    if &rem * 2 >= den_for_round {
        q += 1;
    }
    let mut digits = q.to_string();
    let mut e = e;
    if digits.len() > sig {
        // Rounding carried (e.g. 9.99 -> 10.0): drop the trailing zero.
        digits.truncate(sig);
        e += 1;
    }
    place_decimal_point(&digits, e)
}

/// Decimal expansion of a positive rational truncated to `decimals` digits
/// after the point.
pub fn decimal_trunc(r: &Rat, decimals: u32) -> String {
    assert!(!r.is_negative());
    let scaled = r.numer() * pow10(decimals) / r.denom();
    let s = scaled.to_string();
    if decimals == 0 {
        return s;
    }
    let d = decimals as usize;
    if s.len() <= d {
        format!("0.{}{}", "0".repeat(d - s.len()), s)
    } else {
        format!("{}.{}", &s[..s.len() - d], &s[s.len() - d..])
    }
}

fn place_decimal_point(digits: &str, e: i64) -> String {
    if e >= 0 {
        let int_len = (e + 1) as usize;
        if digits.len() <= int_len {
            let mut s = digits.to_string();
            s.push_str(&"0".repeat(int_len - digits.len()));
            s
        } else {
            format!("{}.{}", &digits[..int_len], &digits[int_len..])
        }
    } else {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), digits)
    }
}

/// f64 formatted with `sig` significant digits, plain decimal when the
/// exponent is moderate, scientific otherwise.
pub fn f64_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let e = x.abs().log10().floor() as i32;
    if (-5..15).contains(&e) {
        let decimals = (sig as i32 - 1 - e).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{:.*e}", sig - 1, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
        assert_eq!(binomial(9, 2), int(36));
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(multinomial(9, &[5, 4]), int(126));
        assert_eq!(multinomial(5, &[2]), int(10) * int(6) / int(6)); // 5!/2!/3!
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_round_sig(&rat(5, 4), 15), "1.25000000000000");
        // 2135/1458 = 1.46433470507544581... rounds up in the 15th place.
        assert_eq!(decimal_round_sig(&rat(2135, 1458), 15), "1.46433470507545");
        assert_eq!(decimal_round_sig(&rat(8849, 5040), 15), "1.75575396825397");
        assert_eq!(decimal_round_sig(&rat(999_999, 1_000_000), 3), "1.00");
        assert_eq!(decimal_round_sig(&rat(1, 8), 3), "0.125");
        assert_eq!(decimal_trunc(&rat(198461658, 100000000), 3), "1.984");
        assert_eq!(decimal_trunc(&rat(5, 4), 3), "1.250");
        assert_eq!(decimal_trunc(&rat(1, 80), 3), "0.012");
    }

    #[test]
    fn f64_formatting() {
        assert_eq!(f64_sig(1.25, 12), "1.25000000000");
        assert_eq!(f64_sig(0.0, 12), "0");
    }
}
