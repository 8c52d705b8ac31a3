//! Complex amplitudes written as `re±imi` or in polar form `r@θ`.
//!
//! Accepted: `0.6`, `-0.8i`, `i`, `0.6+0.8i`, `1e-3-2.5i`, `1@1.5707963`.

use num_complex::Complex64;
use serde::Deserialize;

pub fn parse_amplitude(text: &str) -> Result<Complex64, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot read `{text}` as an amplitude (expected re+imi or r@theta)");
    let real = |t: &str| t.parse::<f64>().map_err(|_| bad());
    let z = if let Some((r, theta)) = s.split_once('@') {
        Complex64::from_polar(real(r)?, real(theta)?)
    } else if let Some(body) = s.strip_suffix('i') {
        // split before the last sign that is not an exponent sign
        let split = body
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-') && !matches!(body.as_bytes()[k - 1], b'e' | b'E'))
            .map(|(k, _)| k)
            .next_back();
        let (re, im) = match split {
            Some(k) => (real(&body[..k])?, &body[k..]),
            None => (0.0, body),
        };
        let im = match im {
            "" | "+" => 1.0,
            "-" => -1.0,
            t => real(t)?,
        };
        Complex64::new(re, im)
    } else {
        Complex64::new(real(&s)?, 0.0)
    };
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(bad());
    }
    Ok(z)
}

/// An amplitude in a JSON script: `[re, im]` or a string.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(untagged)]
pub enum Amplitude {
    Pair([f64; 2]),
    Text(#[serde(deserialize_with = "text")] Complex64),
}

fn text<'de, D: serde::Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
    let s = String::deserialize(d)?;
    parse_amplitude(&s).map_err(serde::de::Error::custom)
}

impl Amplitude {
    pub fn value(self) -> Complex64 {
        match self {
            Amplitude::Pair([re, im]) => Complex64::new(re, im),
            Amplitude::Text(z) => z,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn cartesian_forms() {
        assert_eq!(parse_amplitude("0.6").unwrap(), c(0.6, 0.0));
        assert_eq!(parse_amplitude("0.6+0.8i").unwrap(), c(0.6, 0.8));
        assert_eq!(parse_amplitude("-0.6-0.8i").unwrap(), c(-0.6, -0.8));
        assert_eq!(parse_amplitude("i").unwrap(), c(0.0, 1.0));
        assert_eq!(parse_amplitude("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_amplitude("1-i").unwrap(), c(1.0, -1.0));
        assert_eq!(parse_amplitude("0.5i").unwrap(), c(0.0, 0.5));
        assert_eq!(parse_amplitude("1e-3+2E-1i").unwrap(), c(1e-3, 0.2));
        assert_eq!(parse_amplitude("1e+2-1e-2i").unwrap(), c(100.0, -0.01));
        assert_eq!(parse_amplitude(" 0.6 + 0.8i ").unwrap(), c(0.6, 0.8));
    }

    #[test]
    fn polar_form() {
        let z = parse_amplitude("1@1.5707963267948966").unwrap();
        assert!((z - c(0.0, 1.0)).norm() < 1e-15);
        let z = parse_amplitude(&format!("2@{}", -FRAC_PI_2)).unwrap();
        assert!((z - c(0.0, -2.0)).norm() < 1e-15);
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "x", "1+", "1@", "@1", "0.6+0.8j", "nan", "inf+1i", "1..2"] {
            assert!(parse_amplitude(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn json_forms() {
        let v: Vec<Amplitude> = serde_json::from_str(r#"[[0.6, 0.0], "0.8i", "1@0"]"#).unwrap();
        let v: Vec<_> = v.into_iter().map(Amplitude::value).collect();
        assert_eq!(v, vec![c(0.6, 0.0), c(0.0, 0.8), c(1.0, 0.0)]);
    }
}
