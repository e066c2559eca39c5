//! Deterministic JSON and CSV emission: every float is printed with 17
//! significant digits so identical runs produce byte-identical output.

use std::io;

use serde::Serialize;
use serde_json::ser::Formatter;

/// JSON formatter printing every f64 as `d.dddddddddddddddde±xx`
/// (17 significant digits, deterministic).
pub struct SigDigitFormatter;

impl Formatter for SigDigitFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.7e}")
    }
}

/// Serializes any value to the crate's canonical JSON form.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SigDigitFormatter);
    value
        .serialize(&mut ser)
        .expect("serialization of report types cannot fail");
    String::from_utf8(out).expect("serde_json emits utf-8")
}

/// 17-significant-digit float for CSV cells and SVG comments.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// CSV rows `theta,re,im` for a sampled boundary curve, preceded by a
/// config-echo comment.
pub fn curve_csv(config: &str, thetas: &[f64], points: &[num_complex::Complex64]) -> String {
    let mut out = String::new();
    out.push_str(&format!("# config: {config}\n"));
    out.push_str("theta,re,im\n");
    for (theta, p) in thetas.iter().zip(points) {
        out.push_str(&format!(
            "{},{},{}\n",
            fmt_f64(*theta),
            fmt_f64(p.re),
            fmt_f64(p.im)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_print_17_significant_digits() {
        let v = serde_json::json!({ "x": 0.7587531797572998_f64 });
        let s = to_json(&v);
        assert_eq!(s, "{\"x\":7.5875317975729983e-1}");
    }

    #[test]
    fn csv_shape() {
        let pts = vec![num_complex::Complex64::new(1.0, -2.0)];
        let s = curve_csv("region=exp,n=1", &[0.5], &pts);
        let mut lines = s.lines();
        assert_eq!(lines.next().unwrap(), "# config: region=exp,n=1");
        assert_eq!(lines.next().unwrap(), "theta,re,im");
        assert_eq!(
            lines.next().unwrap(),
            "5.0000000000000000e-1,1.0000000000000000e0,-2.0000000000000000e0"
        );
    }
}
