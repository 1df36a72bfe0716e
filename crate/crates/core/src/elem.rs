use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

/// An element of `S_k`.
///
/// The derived order is the total order `0 < 1 < … < k < m`. `Many` is a
/// distinct variant, never an integer sentinel, so no arithmetic can treat
/// it as `k + 1` by accident.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Elem {
    Zero,
    /// A finite value `1 ..= k`.
    Fin(u32),
    /// The saturating symbol `m`.
    Many,
}

impl Elem {
    pub const ONE: Elem = Elem::Fin(1);

    pub fn is_zero(self) -> bool {
        self == Elem::Zero
    }

    /// The integer value for finite elements, `0` for zero, `None` for `m`.
    pub fn as_natural(self) -> Option<u32> {
        match self {
            Elem::Zero => Some(0),
            Elem::Fin(n) => Some(n),
            Elem::Many => None,
        }
    }

    /// Position in the carrier listing `0, 1, …, k, m`.
    pub fn index(self, k: u32) -> usize {
        match self {
            Elem::Zero => 0,
            Elem::Fin(n) => n as usize,
            Elem::Many => k as usize + 1,
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Zero => f.write_str("0"),
            Elem::Fin(n) => write!(f, "{n}"),
            Elem::Many => f.write_str("m"),
        }
    }
}

impl FromStr for Elem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = |reason| Error::Parse { input: s.to_string(), reason };
        match t {
            "m" | "M" => Ok(Elem::Many),
            "" => Err(bad("empty element")),
            _ => {
                if !t.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad("expected a decimal integer or `m`"));
                }
                match t.parse::<u32>() {
                    Ok(0) => Ok(Elem::Zero),
                    Ok(n) => Ok(Elem::Fin(n)),
                    Err(_) => Err(bad("integer out of range")),
                }
            }
        }
    }
}

#[cfg(feature = "serde")]
mod serde_impl {
    use super::Elem;
    use core::fmt;
    use serde::de::{self, Visitor};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    /// Finite values and zero serialize as integers, `m` as the string `"m"`.
    impl Serialize for Elem {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            match self {
                Elem::Zero => s.serialize_u32(0),
                Elem::Fin(n) => s.serialize_u32(*n),
                Elem::Many => s.serialize_str("m"),
            }
        }
    }

    struct ElemVisitor;

    impl Visitor<'_> for ElemVisitor {
        type Value = Elem;

        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("a non-negative integer or the string \"m\"")
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<Elem, E> {
            match u32::try_from(v) {
                Ok(0) => Ok(Elem::Zero),
                Ok(n) => Ok(Elem::Fin(n)),
                Err(_) => Err(E::custom("element out of range")),
            }
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<Elem, E> {
            u64::try_from(v).map_err(|_| E::custom("negative element")).and_then(|v| self.visit_u64(v))
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<Elem, E> {
            v.parse().map_err(E::custom)
        }
    }

    impl<'de> Deserialize<'de> for Elem {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Elem, D::Error> {
            d.deserialize_any(ElemVisitor)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    #[test]
    fn order_is_zero_then_finite_then_many() {
        assert!(Elem::Zero < Elem::Fin(1));
        assert!(Elem::Fin(1) < Elem::Fin(7));
        assert!(Elem::Fin(u32::MAX) < Elem::Many);
    }

    #[test]
    fn text_tokens() {
        for (s, e) in [("0", Elem::Zero), ("3", Elem::Fin(3)), ("m", Elem::Many), (" 12 ", Elem::Fin(12))] {
            assert_eq!(s.parse::<Elem>().unwrap(), e);
        }
        assert_eq!(format!("{}", Elem::Many), "m");
        assert!("-1".parse::<Elem>().is_err());
        assert!("x".parse::<Elem>().is_err());
        assert!("".parse::<Elem>().is_err());
        assert!("99999999999".parse::<Elem>().is_err());
    }
}
