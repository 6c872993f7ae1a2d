//! The abstract sequence `R_1, R_2, ...` that index sets point into.
//!
//! The default is the odd sequence `R_n = 2n + 1`. Custom sequences come
//! from text with one rational per line, line `n` giving `R_n`.

use crate::error::{Error, Result};
use crate::numeric::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum SequenceSpec {
    /// `R_n = 2n + 1`
    #[default]
    Odd,
    /// `R_n = c` for every `n`.
    Constant(Rational),
    /// `R_1, ..., R_len`; indices past the end are undefined.
    Values(Vec<Rational>),
}

impl SequenceSpec {
    pub fn constant(c: Rational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::Sequence("constant sequence must be nonzero".into()));
        }
        Ok(SequenceSpec::Constant(c))
    }

    pub fn from_values(values: Vec<Rational>) -> Result<Self> {
        if let Some(pos) = values.iter().position(Rational::is_zero) {
            return Err(Error::Sequence(format!("R_{} is zero", pos + 1)));
        }
        Ok(SequenceSpec::Values(values))
    }

    /// Parses the sequence file format. Blank lines are only allowed at the
    /// end; a bad line is reported by its 1-based number.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.lines().collect();
        let last = lines.iter().rposition(|l| !l.trim().is_empty());
        let lines = match last {
            Some(i) => &lines[..=i],
            None => return Err(Error::Sequence("sequence file is empty".into())),
        };
        let mut values = Vec::with_capacity(lines.len());
        for (i, line) in lines.iter().enumerate() {
            let lineno = i + 1;
            let v: Rational = line.parse().map_err(|_| {
                Error::Sequence(format!("line {lineno}: not a rational: {:?}", line.trim()))
            })?;
            if v.is_zero() {
                return Err(Error::Sequence(format!("line {lineno}: R_{lineno} must be nonzero")));
            }
            values.push(v);
        }
        Ok(SequenceSpec::Values(values))
    }

    /// `R_n` for `n >= 1`.
    pub fn value(&self, n: usize) -> Result<Rational> {
        if n == 0 {
            return Err(Error::Sequence("sequence indices start at 1".into()));
        }
        match self {
            SequenceSpec::Odd => Ok(Rational::from(2 * n as i64 + 1)),
            SequenceSpec::Constant(c) => Ok(c.clone()),
            SequenceSpec::Values(v) => v.get(n - 1).cloned().ok_or_else(|| {
                Error::Sequence(format!("R_{n} requested but only {} values supplied", v.len()))
            }),
        }
    }

    /// Number of defined terms, `None` when unbounded.
    pub fn len(&self) -> Option<usize> {
        match self {
            SequenceSpec::Values(v) => Some(v.len()),
            _ => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }

    /// Errors unless `R_1..=R_n` are all defined.
    pub fn require(&self, n: usize) -> Result<()> {
        match self.len() {
            Some(len) if len < n => Err(Error::Sequence(format!(
                "need R_1..R_{n}, but only {len} values supplied"
            ))),
            _ => Ok(()),
        }
    }

    pub fn is_odd_default(&self) -> bool {
        matches!(self, SequenceSpec::Odd)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_default() {
        let r = SequenceSpec::default();
        assert_eq!(r.value(1).unwrap(), Rational::from(3));
        assert_eq!(r.value(4).unwrap(), Rational::from(9));
        assert!(r.value(0).is_err());
    }

    #[test]
    fn parse_file() {
        let r = SequenceSpec::parse("3\n5/2\n-7\n\n").unwrap();
        assert_eq!(r.len(), Some(3));
        assert_eq!(r.value(2).unwrap(), "5/2".parse::<Rational>().unwrap());
        assert!(r.value(4).is_err());
        assert!(r.require(3).is_ok());
        assert!(r.require(4).is_err());
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = SequenceSpec::parse("1\n2\nfoo\n").unwrap_err().to_string();
        assert!(err.contains("line 3"), "{err}");
        let err = SequenceSpec::parse("1\n0\n").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        let err = SequenceSpec::parse("1\n\n2\n").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        assert!(SequenceSpec::parse("\n\n").is_err());
        assert!(SequenceSpec::constant(Rational::zero()).is_err());
    }
}
