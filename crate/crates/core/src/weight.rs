//! Exact rational weights and the ratio checks built on them.
//!
//! Every weight comparison in the crate goes through [`Weight`]; nothing is
//! ever rounded through floating point.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

/// Exact non-negative rational weight.
pub type Weight = Ratio<i64>;

/// Integer weight helper.
pub fn w(n: i64) -> Weight {
    Weight::from_integer(n)
}

/// `H_n = 1 + 1/2 + ... + 1/n`; `H_0 = 0`.
pub fn harmonic(n: usize) -> Weight {
    (1..=n as i64).fold(Weight::zero(), |acc, i| acc + Weight::new(1, i))
}

/// Renders a weight as `num/den`, always with an explicit denominator.
pub fn format_weight(x: &Weight) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_weight(s: &str) -> Option<Weight> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = i64::from_str(n.trim()).ok()?;
            let d = i64::from_str(d.trim()).ok()?;
            if d == 0 {
                return None;
            }
            Some(Weight::new(n, d))
        }
        None => i64::from_str(s).ok().map(Weight::from_integer),
    }
}

type Wide = Ratio<i128>;

fn widen(x: &Weight) -> Wide {
    Wide::new(*x.numer() as i128, *x.denom() as i128)
}

/// Checks `value <= reference * (3 - 2/sqrt(c))` without leaving the
/// rationals.
///
/// With `s = 3*reference - value` the inequality reads `s >= 2*reference/sqrt(c)`,
/// which holds iff `s >= 0` and `s^2 * c >= 4 * reference^2`.
pub fn within_three_minus_two_over_sqrt(value: &Weight, reference: &Weight, c: u64) -> bool {
    assert!(c > 0, "radicand must be positive");
    let v = widen(value);
    let r = widen(reference);
    let slack = r * Wide::from_integer(3) - v;
    if slack.is_negative() {
        return false;
    }
    slack * slack * Wide::from_integer(c as i128) >= r * r * Wide::from_integer(4)
}

/// `a / b` for a non-zero `b`; `1` when both are zero.
pub fn ratio(a: &Weight, b: &Weight) -> Weight {
    if b.is_zero() {
        assert!(a.is_zero(), "ratio of a positive weight to zero");
        Weight::one()
    } else {
        a / b
    }
}

/// `ceil(a / b)` for non-negative integers.
pub fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Least common multiple of the denominators, used when rendering rationals
/// on a common scale.
pub fn common_denominator<'a>(ws: impl IntoIterator<Item = &'a Weight>) -> i64 {
    ws.into_iter().fold(1i64, |acc, x| acc.lcm(x.denom()))
}
