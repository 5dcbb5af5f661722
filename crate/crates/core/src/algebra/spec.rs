//! Textual algebra constructors:
//!
//! ```text
//! spec := cyclic:<n> | dihedral:<n> | quaternion | klein | sym:<n>
//!       | elemab:<p>:<k> | multmod:<n> | fulltrans:<n>
//!       | product:(<spec>),(<spec>)
//! ```

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{named, Algebra, Result};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("unknown algebra constructor `{0}`")]
    UnknownConstructor(String),
    #[error("invalid parameter `{token}`: {reason}")]
    BadParameter { token: String, reason: String },
    #[error("unexpected token `{0}`")]
    UnexpectedToken(String),
    #[error("unexpected end of input, expected {0}")]
    UnexpectedEnd(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AlgebraSpec {
    Cyclic(usize),
    Dihedral(usize),
    Quaternion,
    Klein,
    Sym(usize),
    ElemAb(usize, u32),
    MultMod(usize),
    FullTrans(usize),
    Product(Box<AlgebraSpec>, Box<AlgebraSpec>),
}

impl AlgebraSpec {
    pub fn build(&self) -> Result<Algebra> {
        match self {
            AlgebraSpec::Cyclic(n) => named::cyclic(*n),
            AlgebraSpec::Dihedral(n) => named::dihedral(*n),
            AlgebraSpec::Quaternion => named::quaternion(),
            AlgebraSpec::Klein => named::klein(),
            AlgebraSpec::Sym(n) => named::symmetric(*n),
            AlgebraSpec::ElemAb(p, k) => named::elementary_abelian(*p, *k),
            AlgebraSpec::MultMod(n) => named::multiplicative_mod(*n),
            AlgebraSpec::FullTrans(n) => named::full_transformation(*n),
            AlgebraSpec::Product(a, b) => Algebra::direct_product(&a.build()?, &b.build()?),
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            AlgebraSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            AlgebraSpec::Quaternion => f.write_str("quaternion"),
            AlgebraSpec::Klein => f.write_str("klein"),
            AlgebraSpec::Sym(n) => write!(f, "sym:{n}"),
            AlgebraSpec::ElemAb(p, k) => write!(f, "elemab:{p}:{k}"),
            AlgebraSpec::MultMod(n) => write!(f, "multmod:{n}"),
            AlgebraSpec::FullTrans(n) => write!(f, "fulltrans:{n}"),
            AlgebraSpec::Product(a, b) => write!(f, "product:({a}),({b})"),
        }
    }
}

impl FromStr for AlgebraSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, SpecError> {
        let mut parser = Parser { input: s.trim(), pos: 0 };
        let spec = parser.spec()?;
        match parser.rest() {
            "" => Ok(spec),
            rest => Err(SpecError::UnexpectedToken(rest.to_string())),
        }
    }
}

struct Parser<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let rest = self.rest();
        let len = rest.find(|c| !pred(c)).unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn expect(&mut self, c: char, what: &'static str) -> Result<(), SpecError> {
        match self.rest().chars().next() {
            Some(found) if found == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(_) => Err(SpecError::UnexpectedToken(self.next_token())),
            None => Err(SpecError::UnexpectedEnd(what)),
        }
    }

    fn next_token(&self) -> String {
        let rest = self.rest();
        let word: String = rest.chars().take_while(|c| c.is_ascii_alphanumeric()).collect();
        if word.is_empty() {
            rest.chars().next().map(String::from).unwrap_or_default()
        } else {
            word
        }
    }

    fn number(&mut self) -> Result<usize, SpecError> {
        self.expect(':', "`:` before a parameter")?;
        let token = self.take_while(|c| c.is_ascii_alphanumeric());
        if token.is_empty() {
            return match self.rest().chars().next() {
                Some(c) => Err(SpecError::UnexpectedToken(c.to_string())),
                None => Err(SpecError::UnexpectedEnd("a number")),
            };
        }
        token.parse().map_err(|_| SpecError::BadParameter {
            token: token.to_string(),
            reason: "expected a non-negative integer".into(),
        })
    }

    fn positive(&mut self) -> Result<usize, SpecError> {
        let n = self.number()?;
        if n == 0 {
            return Err(SpecError::BadParameter { token: "0".into(), reason: "must be at least 1".into() });
        }
        Ok(n)
    }

    fn bracketed(&mut self) -> Result<AlgebraSpec, SpecError> {
        self.expect('(', "`(`")?;
        let inner = self.spec()?;
        self.expect(')', "`)`")?;
        Ok(inner)
    }

    fn spec(&mut self) -> Result<AlgebraSpec, SpecError> {
        let name = self.take_while(|c| c.is_ascii_alphabetic());
        match name {
            "" => match self.rest().chars().next() {
                Some(c) => Err(SpecError::UnexpectedToken(c.to_string())),
                None => Err(SpecError::UnexpectedEnd("an algebra name")),
            },
            "cyclic" => Ok(AlgebraSpec::Cyclic(self.positive()?)),
            "dihedral" => Ok(AlgebraSpec::Dihedral(self.positive()?)),
            "quaternion" => Ok(AlgebraSpec::Quaternion),
            "klein" => Ok(AlgebraSpec::Klein),
            "sym" => Ok(AlgebraSpec::Sym(self.positive()?)),
            "multmod" => Ok(AlgebraSpec::MultMod(self.positive()?)),
            "fulltrans" => Ok(AlgebraSpec::FullTrans(self.positive()?)),
            "elemab" => {
                let p = self.positive()?;
                let k = self.number()?;
                let k = u32::try_from(k).map_err(|_| SpecError::BadParameter {
                    token: k.to_string(),
                    reason: "exponent too large".into(),
                })?;
                Ok(AlgebraSpec::ElemAb(p, k))
            }
            "product" => {
                self.expect(':', "`:` after product")?;
                let a = self.bracketed()?;
                self.expect(',', "`,` between product factors")?;
                let b = self.bracketed()?;
                Ok(AlgebraSpec::Product(Box::new(a), Box::new(b)))
            }
            other => Err(SpecError::UnknownConstructor(other.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_constructor() {
        for s in [
            "cyclic:8",
            "dihedral:5",
            "quaternion",
            "klein",
            "sym:3",
            "elemab:2:3",
            "multmod:10",
            "fulltrans:2",
            "product:(cyclic:2),(cyclic:3)",
            "product:(product:(cyclic:2),(klein)),(quaternion)",
        ] {
            let spec: AlgebraSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(spec.build().unwrap().name(), s);
        }
    }

    #[test]
    fn errors_name_the_offending_token() {
        assert_eq!(
            "cyclc:4".parse::<AlgebraSpec>(),
            Err(SpecError::UnknownConstructor("cyclc".into()))
        );
        assert!(matches!(
            "cyclic:x".parse::<AlgebraSpec>(),
            Err(SpecError::BadParameter { token, .. }) if token == "x"
        ));
        assert_eq!(
            "klein)".parse::<AlgebraSpec>(),
            Err(SpecError::UnexpectedToken(")".into()))
        );
        assert!(matches!("product:(klein)".parse::<AlgebraSpec>(), Err(SpecError::UnexpectedEnd(_))));
        assert!(matches!("cyclic:0".parse::<AlgebraSpec>(), Err(SpecError::BadParameter { .. })));
        assert!(matches!("".parse::<AlgebraSpec>(), Err(SpecError::UnexpectedEnd(_))));
    }

    #[test]
    fn size_limits_are_enforced_on_build() {
        assert!("sym:7".parse::<AlgebraSpec>().unwrap().build().is_err());
        assert!("fulltrans:5".parse::<AlgebraSpec>().unwrap().build().is_err());
        assert!("elemab:2:11".parse::<AlgebraSpec>().unwrap().build().is_err());
        assert!("product:(cyclic:64),(cyclic:64)".parse::<AlgebraSpec>().unwrap().build().is_err());
    }
}
