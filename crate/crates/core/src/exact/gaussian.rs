use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// Gaussian rational `re + im*i` with exact rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: Rational) -> Self {
        Self {
            re,
            im: Rational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_real(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_real(Rational::one())
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// Squared modulus `re^2 + im^2`.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Parse a Gaussian rational literal: `a/b`, `a/b+c/d*i`, `c/d*i`,
    /// with `i` and `-i` accepted for `1*i` and `-1*i`.
    pub fn parse(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty gaussian rational literal".into()));
        }
        // Split into at most two signed parts at a '+'/'-' that is not leading.
        let mut parts: Vec<String> = Vec::new();
        let mut current = String::new();
        for (idx, ch) in s.char_indices() {
            if (ch == '+' || ch == '-') && idx > 0 {
                parts.push(std::mem::take(&mut current));
                if ch == '-' {
                    current.push('-');
                }
            } else {
                current.push(ch);
            }
        }
        parts.push(current);
        if parts.len() > 2 {
            return Err(Error::Parse(format!("too many terms in `{s}`")));
        }
        let mut re = Rational::zero();
        let mut im = Rational::zero();
        let mut seen_im = false;
        for part in &parts {
            if let Some(coeff) = parse_imaginary_part(part)? {
                if seen_im {
                    return Err(Error::Parse(format!("two imaginary parts in `{s}`")));
                }
                im = coeff;
                seen_im = true;
            } else {
                re = parse_rational(part)?;
            }
        }
        if parts.len() == 2 && !seen_im {
            return Err(Error::Parse(format!("two real parts in `{s}`")));
        }
        Ok(Self::new(re, im))
    }
}

fn parse_imaginary_part(part: &str) -> Result<Option<Rational>> {
    if !part.ends_with('i') {
        return Ok(None);
    }
    let body = &part[..part.len() - 1];
    let body = body.strip_suffix('*').unwrap_or(body);
    let coeff = match body {
        "" => Rational::one(),
        "-" => -Rational::one(),
        other => parse_rational(other)?,
    };
    Ok(Some(coeff))
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_body = |q: &Rational| -> String {
            if q.is_one() {
                "i".to_string()
            } else {
                format!("{}*i", format_rational(q))
            }
        };
        if self.im.is_zero() {
            return write!(f, "{}", format_rational(&self.re));
        }
        if self.re.is_zero() {
            if self.im.is_negative() {
                return write!(f, "-{}", im_body(&-self.im.clone()));
            }
            return write!(f, "{}", im_body(&self.im));
        }
        if self.im.is_negative() {
            write!(
                f,
                "{}-{}",
                format_rational(&self.re),
                im_body(&-self.im.clone())
            )
        } else {
            write!(f, "{}+{}", format_rational(&self.re), im_body(&self.im))
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    #[test]
    fn conjugation_is_involutive() {
        let z = GaussianRational::new(ratio(3, 2), ratio(-5, 7));
        assert_eq!(z.conjugate().conjugate(), z);
        assert!(!z.norm_sq().is_negative());
    }

    #[test]
    fn multiplication() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_real(int(-1)));
        let z = GaussianRational::new(int(1), int(1));
        let w = GaussianRational::new(int(1), int(-1));
        assert_eq!(&z * &w, GaussianRational::from_real(int(2)));
    }

    #[test]
    fn literal_grammar() {
        for s in ["1", "-2/3", "i", "-i", "2*i", "1/2+3/4*i", "1-i", "-1/2-i"] {
            let z = GaussianRational::parse(s).unwrap();
            let out = z.to_string();
            assert_eq!(GaussianRational::parse(&out).unwrap(), z, "via `{out}`");
        }
        assert_eq!(
            GaussianRational::parse("1+1*i").unwrap(),
            GaussianRational::new(int(1), int(1))
        );
        assert_eq!(GaussianRational::parse("1+i").unwrap().to_string(), "1+i");
        assert!(GaussianRational::parse("1+2").is_err());
        assert!(GaussianRational::parse("i+i").is_err());
    }
}
