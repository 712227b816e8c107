use std::fmt;

use num_traits::{One, Signed};

use super::SymFunc;

/// Canonical text: `2*s[2] - s[1,1] + 1/2*p[]`. Coefficients are printed only
/// when they differ from one; the zero function prints as `0`.
impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        let letter = self.basis.letter();
        for (i, (p, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{letter}{p}")?;
        }
        Ok(())
    }
}
