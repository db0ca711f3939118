//! Integer-coefficient multivariate polynomials, used as the Schur
//! polynomial oracle for Littlewood-Richardson coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A polynomial in a fixed number of variables, stored as exponent vector
/// -> coefficient with zero coefficients removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        let slot = self.terms.entry(exps).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    /// Sum of all coefficients, i.e. the value at `x_i = 1`.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Keeps only monomials whose exponent vector is weakly decreasing.
    /// A symmetric polynomial is determined by these.
    pub fn dominant_part(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// The monomial with lexicographically largest exponent vector.
    pub fn leading(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// The product restricted to weakly decreasing exponent vectors.
    pub fn mul_dominant(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if e.windows(2).all(|w| w[0] >= w[1]) {
                    *out.terms.entry(e).or_default() += ca * cb;
                }
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn monomial(exps: Vec<u32>) -> Polynomial {
        let nvars = exps.len();
        Polynomial {
            nvars,
            terms: BTreeMap::from([(exps, BigInt::one())]),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            *out.terms.entry(e.clone()).or_default() += c;
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            *out.terms.entry(e.clone()).or_default() -= c;
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable counts differ");
        let mut out = Polynomial::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *out.terms.entry(e).or_default() += ca * cb;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }
}
