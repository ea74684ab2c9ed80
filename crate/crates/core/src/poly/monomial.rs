//! Power products of registered variables.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::var::VarId;

/// A power product, stored as a sparse exponent list sorted by variable
/// index. Zero exponents are never stored; the empty product is the
/// constant monomial `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    /// `(variable index, exponent)` pairs, strictly increasing in the index.
    pairs: SmallVec<[(u8, u8); 6]>,
}

impl Monomial {
    /// The constant monomial `1`.
    pub fn one() -> Monomial {
        Monomial::default()
    }

    /// A single variable to the first power.
    pub fn var(v: VarId) -> Monomial {
        Monomial::var_pow(v, 1)
    }

    /// `v^e`; an exponent of zero yields the constant monomial.
    pub fn var_pow(v: VarId, e: u8) -> Monomial {
        let mut pairs = SmallVec::new();
        if e > 0 {
            pairs.push((v.0, e));
        }
        Monomial { pairs }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` factors,
    /// merging repeats and dropping zero exponents.
    pub fn from_factors<I: IntoIterator<Item = (VarId, u8)>>(factors: I) -> Monomial {
        let mut m = Monomial::one();
        for (v, e) in factors {
            m = m.mul(&Monomial::var_pow(v, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.pairs.iter().map(|&(_, e)| e as u32).sum()
    }

    /// The exponent of `v`, zero if absent.
    pub fn exponent(&self, v: VarId) -> u8 {
        self.pairs
            .iter()
            .find(|&&(i, _)| i == v.0)
            .map_or(0, |&(_, e)| e)
    }

    /// Sum of the exponents of the listed variables.
    pub fn degree_in(&self, vars: &[VarId]) -> u32 {
        self.pairs
            .iter()
            .filter(|&&(i, _)| vars.iter().any(|v| v.0 == i))
            .map(|&(_, e)| e as u32)
            .sum()
    }

    /// Iterates over `(variable, exponent)` in increasing variable order.
    pub fn iter(&self) -> impl Iterator<Item = (VarId, u8)> + '_ {
        self.pairs.iter().map(|&(i, e)| (VarId(i), e))
    }

    /// Product of two monomials: exponents add.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut pairs = SmallVec::with_capacity(self.pairs.len() + other.pairs.len());
        let (mut a, mut b) = (self.pairs.iter().peekable(), other.pairs.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(ia, ea)), Some(&&(ib, eb))) => match ia.cmp(&ib) {
                    Ordering::Less => {
                        pairs.push((ia, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        pairs.push((ib, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        let e = ea.checked_add(eb).expect("monomial exponent overflow");
                        pairs.push((ia, e));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    pairs.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    pairs.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { pairs }
    }

    /// Divides out one power of `v`, or returns `None` if `v` is absent.
    pub fn div_var(&self, v: VarId) -> Option<Monomial> {
        let pos = self.pairs.iter().position(|&(i, _)| i == v.0)?;
        let mut pairs = self.pairs.clone();
        if pairs[pos].1 == 1 {
            pairs.remove(pos);
        } else {
            pairs[pos].1 -= 1;
        }
        Some(Monomial { pairs })
    }
}

/// Graded lexicographic order: total degree first, ties broken by the
/// exponent vector read in variable-index order (index 0 strongest).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut a, mut b) = (self.pairs.iter(), other.pairs.iter());
        loop {
            match (a.next(), b.next()) {
                (Some(&(ia, ea)), Some(&(ib, eb))) => match ia.cmp(&ib) {
                    // The monomial owning the lower-index variable is larger.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(&eb) {
                        Ordering::Equal => {}
                        ord => return ord,
                    },
                },
                // Same total degree, so both run out together unless equal.
                (Some(_), None) => return Ordering::Less,
                (None, Some(_)) => return Ordering::Greater,
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
