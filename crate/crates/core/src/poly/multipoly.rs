//! Sparse multivariate polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::parse::{parse_poly, PolyParseError};
use super::rational::Rational;
use super::var::VarId;

/// A polynomial stored as a map from monomials to nonzero coefficients.
/// The zero polynomial is the empty map. The map key order (graded lex,
/// lowest variable index strongest) is also the canonical serialization
/// order, read leading-term first.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> MultiPoly {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: VarId) -> MultiPoly {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::var(v), Rational::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates over `(monomial, coefficient)` in increasing term order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// The exact coefficient of `m`, zero if absent.
    pub fn coeff_of(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Maximum total degree over all terms; zero for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    /// Adds `c * m` in place, removing the term if the sum cancels.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to `v`.
    pub fn diff(&self, v: VarId) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e > 0 {
                let dm = m.div_var(v).expect("exponent checked above");
                out.add_term(dm, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Simultaneous substitution. Variables absent from `assignment` pass
    /// through unchanged, so partial specializations compose naturally.
    pub fn subst(&self, assignment: &BTreeMap<VarId, MultiPoly>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(c.clone());
            let mut kept = Monomial::one();
            for (v, e) in m.iter() {
                match assignment.get(&v) {
                    Some(img) => {
                        let mut powed = MultiPoly::one();
                        for _ in 0..e {
                            powed = &powed * img;
                        }
                        term = &term * &powed;
                    }
                    None => kept = kept.mul(&Monomial::var_pow(v, e)),
                }
            }
            for (tm, tc) in term.terms {
                out.add_term(tm.mul(&kept), tc);
            }
        }
        out
    }

    /// Maximum total degree in the listed variables over all terms.
    pub fn degree_in(&self, vars: &[VarId]) -> u32 {
        self.terms
            .keys()
            .map(|m| m.degree_in(vars))
            .max()
            .unwrap_or(0)
    }

    /// The sum of all terms whose degree in `xs` is `dx` and in `ys` is `dy`.
    pub fn bihomogeneous_component(&self, xs: &[VarId], ys: &[VarId], dx: u32, dy: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_in(xs) == dx && m.degree_in(ys) == dy)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Returns `Some((dx, dy))` when every term has the same bidegree with
    /// respect to the two variable groups, `None` otherwise or when zero.
    pub fn bidegree(&self, xs: &[VarId], ys: &[VarId]) -> Option<(u32, u32)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let bd = (first.degree_in(xs), first.degree_in(ys));
        for m in it {
            if (m.degree_in(xs), m.degree_in(ys)) != bd {
                return None;
            }
        }
        Some(bd)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        // Iterate the smaller factor outermost; products accumulate in place.
        let (small, big) = if self.num_terms() <= rhs.num_terms() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = MultiPoly::zero();
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // Leading term first: reverse of the map's ascending order.
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for MultiPoly {
    type Err = PolyParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::{frac, int};
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn additive_identity_and_inverse() {
        let q = p("x1^2 + 3*x2");
        assert_eq!(&MultiPoly::zero() + &q, q);
        assert!((&q + &(-&q)).is_zero());
    }

    #[test]
    fn cancellation() {
        assert_eq!(&p("x1 + x2") + &p("x1 - x2"), p("2*x1"));
    }

    #[test]
    fn multiplicative_identity_and_binomial() {
        let q = p("x1 - 5/2*y11");
        assert_eq!(&MultiPoly::one() * &q, q);
        assert_eq!(&p("x1 + x2") * &p("x1 + x2"), p("x1^2 + 2*x1*x2 + x2^2"));
        assert_eq!(&p("x1 - x2") * &p("x1 + x2"), p("x1^2 - x2^2"));
    }

    #[test]
    fn differentiation() {
        let x1 = VarId::from_name("x1").unwrap();
        let y11 = VarId::from_name("y11").unwrap();
        assert_eq!(p("x1^3").diff(x1), p("3*x1^2"));
        assert_eq!(p("x1*y11").diff(y11), p("x1"));
        assert_eq!(p("7/3").diff(x1), MultiPoly::zero());
    }

    #[test]
    fn substitution() {
        let x1 = VarId::from_name("x1").unwrap();
        let x2 = VarId::from_name("x2").unwrap();
        let y11 = VarId::from_name("y11").unwrap();

        let mut a = BTreeMap::new();
        a.insert(x1, MultiPoly::zero());
        assert_eq!(p("x1^2 + x2").subst(&a), p("x2"));

        let mut b = BTreeMap::new();
        b.insert(y11, MultiPoly::var(x1));
        assert_eq!(p("y11").subst(&b), p("x1"));

        let mut c = BTreeMap::new();
        c.insert(x2, -&MultiPoly::var(x1));
        let sq = &p("x1 + x2") * &p("x1 + x2");
        assert!(sq.subst(&c).is_zero());

        // unassigned variables pass through
        let mut d = BTreeMap::new();
        d.insert(x1, MultiPoly::constant(int(2)));
        assert_eq!(p("x1*y11 + x2").subst(&d), p("2*y11 + x2"));
    }

    #[test]
    fn coefficient_extraction() {
        let m = Monomial::from_factors([
            (VarId::from_name("x1").unwrap(), 1),
            (VarId::from_name("x2").unwrap(), 1),
        ]);
        assert_eq!(p("2*x1*x2").coeff_of(&m), int(2));
        assert_eq!(MultiPoly::zero().coeff_of(&m), int(0));
        let cube = p("x1 + x2").pow(3);
        let m2 = Monomial::from_factors([
            (VarId::from_name("x1").unwrap(), 2),
            (VarId::from_name("x2").unwrap(), 1),
        ]);
        assert_eq!(cube.coeff_of(&m2), int(3));
    }

    #[test]
    fn display_canonical_order() {
        assert_eq!(p("x2 + x1").to_string(), "x1 + x2");
        assert_eq!(
            p("2*x2^2 + 2*x1^2 + 2*x1*x2").to_string(),
            "2*x1^2 + 2*x1*x2 + 2*x2^2"
        );
        assert_eq!(p("-x1 - 1/2").to_string(), "-x1 - 1/2");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(p("x1 - y11").to_string(), "x1 - y11");
    }

    #[test]
    fn bidegree_helpers() {
        let xs = [VarId::from_name("x1").unwrap(), VarId::from_name("x2").unwrap()];
        let ys = VarId::y_vars();
        let q = p("x1^2*y11 - x1*x2*y22");
        assert_eq!(q.bidegree(&xs, &ys), Some((2, 1)));
        let mixed = p("x1^2*y11 + x1");
        assert_eq!(mixed.bidegree(&xs, &ys), None);
        assert_eq!(
            mixed.bihomogeneous_component(&xs, &ys, 1, 0),
            p("x1")
        );
    }

    #[test]
    fn scale_by_zero() {
        assert!(p("x1 + 1").scale(&frac(0, 5)).is_zero());
    }
}
