//! Number formatting for CSV output, and dB conversions.

/// `10^(db/10)`.
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// `10 * log10(x)`.
pub fn linear_to_db(x: f64) -> f64 {
    10.0 * x.log10()
}

/// Formats with six significant digits, printf `%.6g` style: plain decimal
/// notation for exponents in `[-4, 5]`, scientific otherwise, trailing
/// zeros stripped.
pub fn format_sig6(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x < 0.0 { "-inf" } else { "inf" }.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let rendered = format!("{:.5e}", x);
    let (mantissa, exponent) = rendered.split_once('e').expect("exponential format");
    let exponent: i32 = exponent.parse().expect("exponent digits");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    debug_assert_eq!(digits.len(), 6);

    let body = if (-4..6).contains(&exponent) {
        place_point(&digits, exponent)
    } else {
        let trimmed = mantissa
            .trim_start_matches('-')
            .trim_end_matches('0')
            .trim_end_matches('.');
        format!("{trimmed}e{exponent}")
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Lays out six significant digits around the decimal point for a value
/// `d.ddddd * 10^exponent`.
fn place_point(digits: &str, exponent: i32) -> String {
    if exponent >= 0 {
        let point = exponent as usize + 1;
        if point >= digits.len() {
            format!("{digits}{}", "0".repeat(point - digits.len()))
        } else {
            let fraction = digits[point..].trim_end_matches('0');
            if fraction.is_empty() {
                digits[..point].to_string()
            } else {
                format!("{}.{fraction}", &digits[..point])
            }
        }
    } else {
        let leading = "0".repeat((-exponent - 1) as usize);
        let fraction = format!("{leading}{digits}");
        format!("0.{}", fraction.trim_end_matches('0'))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        assert_eq!(format_sig6(12.345678), "12.3457");
        assert_eq!(format_sig6(-12.345678), "-12.3457");
        assert_eq!(format_sig6(48.0), "48");
        assert_eq!(format_sig6(0.12), "0.12");
        assert_eq!(format_sig6(0.3), "0.3");
        assert_eq!(format_sig6(1.0), "1");
        assert_eq!(format_sig6(123456.7), "123457");
        assert_eq!(format_sig6(0.000123456), "0.000123456");
        assert_eq!(format_sig6(-2.0), "-2");
    }

    #[test]
    fn scientific_for_extreme_exponents() {
        assert_eq!(format_sig6(1.0e-5), "1e-5");
        assert_eq!(format_sig6(1234567.0), "1.23457e6");
        assert_eq!(format_sig6(6.31e-11), "6.31e-11");
        assert_eq!(format_sig6(-9.876543e9), "-9.87654e9");
    }

    #[test]
    fn zero_and_specials() {
        assert_eq!(format_sig6(0.0), "0");
        assert_eq!(format_sig6(-0.0), "0");
        assert_eq!(format_sig6(f64::NAN), "nan");
        assert_eq!(format_sig6(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn db_round_trip() {
        assert!((db_to_linear(-46.0) - 10f64.powf(-4.6)).abs() < 1e-18);
        assert!((linear_to_db(db_to_linear(7.3)) - 7.3).abs() < 1e-12);
    }
}
