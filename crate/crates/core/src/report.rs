//! Number formatting shared by the CSV and JSON exports.

use crate::error::{Error, Result};

/// Significant digits in machine-readable output.
pub const SIG_DIGITS: usize = 12;

/// Formats like C's `%.12g`: 12 significant digits, trailing zeros dropped,
/// scientific notation below `1e-4` or from `1e12` up.
pub fn sig(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..SIG_DIGITS as i32).contains(&exp) {
        let decimals = (SIG_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_owned()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_owned()
    } else {
        s
    }
}

/// `x` rounded to [`SIG_DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    sig(x).parse().expect("formatted float parses")
}

pub fn check_finite(what: &str, x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::InvariantViolation(format!("{what} is not finite ({x})")))
    }
}

/// Rounds every number in a JSON tree to [`SIG_DIGITS`] digits, failing on
/// non-finite values.
pub fn round_json(v: &mut serde_json::Value) -> Result<()> {
    match v {
        serde_json::Value::Number(num) => {
            if num.is_f64() {
                let x = num.as_f64().expect("f64 number");
                check_finite("value", x)?;
                *v = serde_json::json!(round_sig(x));
            }
        }
        serde_json::Value::Array(items) => items.iter_mut().try_for_each(round_json)?,
        serde_json::Value::Object(map) => map.values_mut().try_for_each(round_json)?,
        _ => {}
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printf_g() {
        assert_eq!(sig(0.0), "0");
        assert_eq!(sig(2.0), "2");
        assert_eq!(sig(-1.5), "-1.5");
        assert_eq!(sig(std::f64::consts::PI), "3.14159265359");
        assert_eq!(sig(1.0 / 3.0), "0.333333333333");
        assert_eq!(sig(123456.789), "123456.789");
        assert_eq!(sig(1e-5), "1e-5");
        assert_eq!(sig(1.25e-7), "1.25e-7");
        assert_eq!(sig(4.4e-16), "4.4e-16");
        assert_eq!(sig(1e12), "1e12");
        assert_eq!(sig(999999999999.0), "999999999999");
        assert_eq!(sig(0.000123), "0.000123");
    }

    #[test]
    fn rounding() {
        assert_eq!(round_sig(1.0 / 3.0), 0.333333333333);
        let mut v = serde_json::json!({"a": [1.0 / 3.0, 2], "b": "x"});
        round_json(&mut v).unwrap();
        assert_eq!(v["a"][0], 0.333333333333);
        assert_eq!(v["a"][1], 2);
        assert!(check_finite("x", f64::NAN).is_err());
    }
}
