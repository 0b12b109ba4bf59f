//! Number formatting and the CSV layout.

use std::io::{self, Write};

use weakdiscord_core::{Series, TrajectoryPoint};

/// Rounds to 9 significant digits.
pub fn round_sig(v: f64) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return v;
    }
    format!("{v:.8e}").parse().expect("formatted float parses")
}

/// 9 significant digits, shortest form, `.` separator. Negative zero prints
/// as `0`.
pub fn format_sig(v: f64) -> String {
    let r = round_sig(v);
    if r == 0.0 {
        "0".to_string()
    } else if r.abs() < 1e-6 {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}

pub fn csv_header(x_values: &[f64]) -> String {
    let mut cols = vec![
        "gamma_t".to_string(),
        Series::MutualInfo.name(x_values),
        Series::Classical.name(x_values),
        Series::Discord.name(x_values),
    ];
    cols.extend((0..x_values.len()).map(|k| Series::Sqd(k).name(x_values)));
    cols.join(",")
}

pub fn write_csv<W: Write>(
    out: &mut W,
    x_values: &[f64],
    points: &[TrajectoryPoint],
) -> io::Result<()> {
    writeln!(out, "{}", csv_header(x_values))?;
    for p in points {
        let mut row = vec![
            format_sig(p.gamma_t),
            format_sig(p.mutual_info),
            format_sig(p.classical),
            format_sig(p.discord),
        ];
        row.extend(p.sqd.iter().map(|&(_, v)| format_sig(v)));
        writeln!(out, "{}", row.join(","))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_significant_digits() {
        assert_eq!(format_sig(1.2780719051126377), "1.27807191");
        assert_eq!(format_sig(0.27807190511263774), "0.278071905");
        assert_eq!(format_sig(1.0), "1");
        assert_eq!(format_sig(-0.0), "0");
        assert_eq!(format_sig(2.0 / 3.0), "0.666666667");
        assert_eq!(format_sig(123456789.4), "123456789");
        assert_eq!(format_sig(-3.14159265358979e-9), "-3.14159265e-9");
    }

    #[test]
    fn printed_values_parse_back_to_rounded() {
        for v in [0.1, 1.0 / 7.0, 1.118013443095807, 5e-17, -0.333333333333] {
            let back: f64 = format_sig(v).parse().unwrap();
            assert_eq!(back, round_sig(v));
        }
    }

    #[test]
    fn header_layout() {
        assert_eq!(
            csv_header(&[0.5, 1.0, 2.0]),
            "gamma_t,mutual_info,classical,discord,sqd_x=0.5,sqd_x=1,sqd_x=2"
        );
    }
}
