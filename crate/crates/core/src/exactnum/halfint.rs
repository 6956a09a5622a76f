use std::fmt;
use std::ops::Add;

/// A valuation in ½ℤ ∪ {+∞}, stored as twice its value.
///
/// The derived order puts every finite value below `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HalfInt {
    Finite(i64),
    Infinite,
}

impl HalfInt {
    pub fn from_int(n: i64) -> Self {
        HalfInt::Finite(2 * n)
    }

    pub fn from_twice(t: i64) -> Self {
        HalfInt::Finite(t)
    }

    pub fn twice(self) -> Option<i64> {
        match self {
            HalfInt::Finite(t) => Some(t),
            HalfInt::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, HalfInt::Infinite)
    }

    pub fn is_integer(self) -> bool {
        matches!(self, HalfInt::Finite(t) if t % 2 == 0)
    }

    /// Numerator and denominator (denominator 1 or 2) of a finite value.
    pub fn as_fraction(self) -> Option<(i64, i64)> {
        self.twice()
            .map(|t| if t % 2 == 0 { (t / 2, 1) } else { (t, 2) })
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        match (self, rhs) {
            (HalfInt::Finite(a), HalfInt::Finite(b)) => HalfInt::Finite(a + b),
            _ => HalfInt::Infinite,
        }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_fraction() {
            None => write!(f, "inf"),
            Some((n, 1)) => write!(f, "{n}"),
            Some((n, d)) => write!(f, "{n}/{d}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_display() {
        assert!(HalfInt::from_twice(-1) < HalfInt::from_int(0));
        assert!(HalfInt::from_int(100) < HalfInt::Infinite);
        assert_eq!(HalfInt::from_twice(3).to_string(), "3/2");
        assert_eq!(HalfInt::from_twice(-4).to_string(), "-2");
        assert_eq!(HalfInt::Infinite.to_string(), "inf");
        assert_eq!(HalfInt::from_twice(1) + HalfInt::Infinite, HalfInt::Infinite);
    }
}
