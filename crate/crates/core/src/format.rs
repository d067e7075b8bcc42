//! Decimal text at a fixed number of significant digits, `%g` style.

/// Formats `v` with `digits` significant digits, trailing zeros removed.
///
/// Fixed notation is used for decimal exponents in `[-5, digits)`,
/// scientific notation otherwise. Negative zero prints as `0`.
pub fn format_sig(v: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        return format!("{}e{}", trim_zeros(mantissa), exp);
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    let fixed = format!("{:.*}", decimals, v);
    let fixed = trim_zeros(&fixed);
    if fixed == "-0" {
        "0".to_string()
    } else {
        fixed.to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
