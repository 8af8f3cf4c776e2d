//! Deterministic plain-decimal formatting with a significant-digit cap.

/// Formats `v` with up to `sig` significant digits (round half to even,
/// which is what Rust's exact float formatting performs at a fixed
/// precision), as a plain decimal with trailing zeros trimmed.
pub fn fmt_sig(v: f64, sig: usize) -> String {
    assert!(sig >= 1);
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{:.*e}", sig - 1, v);
    let (mantissa, exponent) = sci.split_once('e').expect("exponent in {:e} output");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();

    // Digits carry the value d.ddd... x 10^exponent.
    let mut body = if exponent >= 0 {
        let point = exponent as usize + 1;
        if point >= digits.len() {
            let mut s = digits.clone();
            s.push_str(&"0".repeat(point - digits.len()));
            s
        } else {
            format!("{}.{}", &digits[..point], &digits[point..])
        }
    } else {
        let zeros = (-exponent - 1) as usize;
        format!("0.{}{}", "0".repeat(zeros), digits)
    };
    if body.contains('.') {
        body = body.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    format!("{sign}{body}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_drop_the_point() {
        assert_eq!(fmt_sig(4.0, 9), "4");
        assert_eq!(fmt_sig(-11.0, 9), "-11");
        assert_eq!(fmt_sig(99.0, 9), "99");
        assert_eq!(fmt_sig(0.0, 9), "0");
        assert_eq!(fmt_sig(-0.0, 9), "0");
    }

    #[test]
    fn nine_significant_digits() {
        assert_eq!(fmt_sig(32.566077995, 9), "32.566078");
        assert_eq!(fmt_sig(610.9655, 9), "610.9655");
        assert_eq!(fmt_sig(10.0 / 11.0, 9), "0.909090909");
        assert_eq!(fmt_sig(-27.889517744, 9), "-27.8895177");
    }

    #[test]
    fn small_and_large_magnitudes_stay_plain() {
        assert_eq!(fmt_sig(1e-7, 9), "0.0000001");
        assert_eq!(fmt_sig(1.25e-5, 3), "0.0000125");
        assert_eq!(fmt_sig(1e12, 9), "1000000000000");
    }

    #[test]
    fn ties_round_to_even() {
        assert_eq!(fmt_sig(0.125, 2), "0.12");
        assert_eq!(fmt_sig(0.375, 2), "0.38");
        assert_eq!(fmt_sig(2.5, 1), "2");
        assert_eq!(fmt_sig(3.5, 1), "4");
    }

    #[test]
    fn round_trip_within_representation_error() {
        // Nine significant digits keep the relative error at half an ulp
        // of the ninth digit.
        for &v in &[4.0, -27.889517744, 264.077226518, 1.0 / 3.0, 1e-3] {
            let parsed: f64 = fmt_sig(v, 9).parse().unwrap();
            assert!((parsed - v).abs() <= 5e-9 * v.abs());
        }
    }
}
