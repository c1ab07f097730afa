//! Fixed 17-significant-digit float formatting (C's `%.17g`).
//!
//! Every float written to JSON, CSV or SVG goes through [`g17`] so output is
//! byte-stable and round-trips exactly.

use serde::Serializer;

/// Formats `x` like C's `%.17g`: 17 significant digits, trailing zeros
/// removed, scientific notation when the decimal exponent is below -4 or at
/// least 17. Signed zero prints as `0`.
pub fn g17(x: f64) -> String {
    if x.is_nan() {
        return "NaN".to_owned();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".to_owned() } else { "-inf".to_owned() };
    }
    if x == 0.0 {
        return "0".to_owned();
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent in {:e} output");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();

    let mut out = String::with_capacity(24);
    if negative {
        out.push('-');
    }
    if !(-4..17).contains(&exp) {
        let (lead, rest) = digits.split_at(1);
        out.push_str(lead);
        let rest = rest.trim_end_matches('0');
        if !rest.is_empty() {
            out.push('.');
            out.push_str(rest);
        }
        out.push('e');
        out.push(if exp < 0 { '-' } else { '+' });
        out.push_str(&format!("{:02}", exp.abs()));
        return out;
    }
    if exp < 0 {
        out.push_str("0.");
        for _ in 0..(-exp - 1) {
            out.push('0');
        }
        out.push_str(digits.trim_end_matches('0'));
    } else {
        let (int_part, frac) = digits.split_at(exp as usize + 1);
        out.push_str(int_part);
        let frac = frac.trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
    }
    out
}

/// `serialize_with` helper emitting a JSON number in [`g17`] form.
///
/// Only meaningful for `serde_json`; other serializers see a raw-value
/// struct.
pub fn serialize_g17<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::Error as _;
    use serde::Serialize;
    if !x.is_finite() {
        return Err(S::Error::custom(format!("non-finite float {x} cannot be serialized")));
    }
    let raw = serde_json::value::RawValue::from_string(g17(*x)).map_err(S::Error::custom)?;
    raw.serialize(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn matches_printf_on_known_values() {
        assert_eq!(g17(0.5), "0.5");
        assert_eq!(g17(-2.5), "-2.5");
        assert_eq!(g17(0.1), "0.10000000000000001");
        assert_eq!(g17(3f64.sqrt() / 2.0), "0.8660254037844386");
        assert_eq!(g17(1.0), "1");
        assert_eq!(g17(100.0), "100");
        assert_eq!(g17(1e-5), "1.0000000000000001e-05");
        assert_eq!(g17(1.5e20), "1.5e+20");
        assert_eq!(g17(0.000123), "0.00012300000000000001");
        assert_eq!(g17(0.25), "0.25");
        assert_eq!(g17(-0.0), "0");
        assert_eq!(g17(12345678901234567.0), "12345678901234568");
    }

    proptest! {
        #[test]
        fn round_trips_exactly(x in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL) {
            let s = g17(x);
            let back: f64 = s.parse().unwrap();
            prop_assert_eq!(back.to_bits(), x.to_bits());
        }
    }
}
