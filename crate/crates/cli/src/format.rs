//! Human-readable rendering. `tol` only affects what is printed as zero.

use num_complex::Complex64;
use qmirror_core::{MatN, QubitState};

#[derive(Debug, Clone, Copy)]
pub struct Display {
    pub tol: f64,
}

impl Display {
    pub fn real(&self, x: f64) -> String {
        if x.abs() < self.tol {
            "0".to_string()
        } else {
            format!("{x:.6}")
        }
    }

    pub fn complex(&self, z: Complex64) -> String {
        let (re, im) = (z.re.abs() >= self.tol, z.im.abs() >= self.tol);
        match (re, im) {
            (false, false) => "0".to_string(),
            (true, false) => self.real(z.re),
            (false, true) => format!("{}i", self.real(z.im)),
            (true, true) => {
                let sign = if z.im < 0.0 { '-' } else { '+' };
                format!("{}{sign}{}i", self.real(z.re), self.real(z.im.abs()))
            }
        }
    }

    pub fn state(&self, s: &QubitState) -> String {
        format!("({}) |0> + ({}) |1>", self.complex(s.a()), self.complex(s.b()))
    }

    pub fn probabilities(&self, p: [f64; 2]) -> String {
        format!("P(0) = {}, P(1) = {}", self.real(p[0]), self.real(p[1]))
    }

    pub fn matrix(&self, m: &MatN, indent: usize) -> String {
        let cells: Vec<Vec<String>> = m.rows().map(|r| r.iter().map(|z| self.complex(*z)).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for row in cells {
            out.push_str(&" ".repeat(indent));
            out.push('[');
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            out.push_str(&padded.join("  "));
            out.push_str("]\n");
        }
        out
    }
}
