//! Polynomials with integer coefficients in the six parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parameter {
    Delta,
    DeltaL,
    DeltaR,
    KappaL,
    KappaR,
    Kappa,
}

impl Parameter {
    pub const ALL: [Parameter; 6] = [
        Parameter::Delta,
        Parameter::DeltaL,
        Parameter::DeltaR,
        Parameter::KappaL,
        Parameter::KappaR,
        Parameter::Kappa,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Parameter::Delta => "d",
            Parameter::DeltaL => "dL",
            Parameter::DeltaR => "dR",
            Parameter::KappaL => "kL",
            Parameter::KappaR => "kR",
            Parameter::Kappa => "k",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Parameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parameter::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown parameter {s:?}")))
    }
}

pub type Exponents = [u32; 6];

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: BTreeMap<Exponents, BigInt>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::monomial([0; 6])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Scalar::term([0; 6], c.into())
    }

    pub fn param(p: Parameter) -> Self {
        let mut e = [0; 6];
        e[p.index()] = 1;
        Scalar::monomial(e)
    }

    pub fn monomial(exponents: Exponents) -> Self {
        Scalar::term(exponents, BigInt::one())
    }

    fn term(exponents: Exponents, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        Scalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one()
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, BigInt> {
        &self.terms
    }

    pub fn pow(&self, k: u32) -> Scalar {
        (0..k).fold(Scalar::one(), |acc, _| &acc * self)
    }

    /// Replaces every occurrence of `from` by `to`.
    pub fn substitute(&self, from: Parameter, to: Parameter) -> Scalar {
        let mut out = Scalar::zero();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            e2[to.index()] += e2[from.index()];
            e2[from.index()] = 0;
            out.add_term(e2, c.clone());
        }
        out
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }
}

impl From<Parameter> for Scalar {
    fn from(p: Parameter) -> Self {
        Scalar::param(p)
    }
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let mut e = *a;
                for (k, v) in e.iter_mut().enumerate() {
                    *v += b[k];
                }
                out.add_term(e, x * y);
            }
        }
        out
    }
}

macro_rules! by_value {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;

            fn $f(self, rhs: Scalar) -> Scalar {
                (&self).$f(&rhs)
            }
        }
    )*};
}

by_value!(Add add, Sub sub, Mul mul);

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &Exponents) -> fmt::Result {
    let mut first = true;
    for p in Parameter::ALL {
        let k = e[p.index()];
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(p.name())?;
        if k > 1 {
            write!(f, "^{k}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let constant = e.iter().all(|&x| x == 0);
            let neg = c < &BigInt::zero();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (_, true) => f.write_str(" - ")?,
                (0, false) => {}
                (_, false) => f.write_str(" + ")?,
            }
            let mag = if neg { -c } else { c.clone() };
            if constant {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        let kl = Scalar::param(Parameter::KappaL);
        let s = &(&kl * &kl) * &(&Scalar::param(Parameter::Delta) * &Scalar::param(Parameter::DeltaR));
        assert_eq!(s.to_string(), "d*dR*kL^2");
        assert_eq!(Scalar::one().to_string(), "1");
        assert_eq!(Scalar::zero().to_string(), "0");
        let mixed = &Scalar::constant(3) - &Scalar::param(Parameter::Kappa);
        assert_eq!(mixed.to_string(), "3 - k");
        assert_eq!((&kl - &kl), Scalar::zero());
    }

    #[test]
    fn substitution() {
        let s = &Scalar::param(Parameter::DeltaL) * &Scalar::param(Parameter::DeltaR);
        let t = s.substitute(Parameter::DeltaL, Parameter::DeltaR);
        assert_eq!(t, Scalar::param(Parameter::DeltaR).pow(2));
    }
}
