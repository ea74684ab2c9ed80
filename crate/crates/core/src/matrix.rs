//! 3×3 matrices with polynomial entries, traces of words, and the
//! Cayley–Hamilton machinery for traceless matrices.

use std::ops::{Add, Mul, Sub};

use num_traits::One;
use thiserror::Error;

use crate::poly::{frac, int, MultiPoly, Rational, VarId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("trace word must not be empty")]
    EmptyWord,
    #[error("matrix has nonzero trace")]
    NonzeroTrace,
}

/// A 3×3 matrix whose entries are exact multivariate polynomials.
/// Numeric matrices are represented with constant entries; specialization
/// happens through polynomial substitution, never through a separate
/// numeric code path.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenericMatrix {
    entries: [[MultiPoly; 3]; 3],
}

impl GenericMatrix {
    pub fn from_fn<F: FnMut(usize, usize) -> MultiPoly>(mut f: F) -> GenericMatrix {
        GenericMatrix {
            entries: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    pub fn zero() -> GenericMatrix {
        GenericMatrix::from_fn(|_, _| MultiPoly::zero())
    }

    pub fn identity() -> GenericMatrix {
        GenericMatrix::from_fn(|i, j| {
            if i == j {
                MultiPoly::one()
            } else {
                MultiPoly::zero()
            }
        })
    }

    /// Constant integer matrix, given in row order.
    pub fn from_int_rows(rows: [[i64; 3]; 3]) -> GenericMatrix {
        GenericMatrix::from_fn(|i, j| MultiPoly::constant(int(rows[i][j])))
    }

    pub fn entry(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i][j]
    }

    pub fn trace(&self) -> MultiPoly {
        &(&self.entries[0][0] + &self.entries[1][1]) + &self.entries[2][2]
    }

    pub fn scale(&self, c: &Rational) -> GenericMatrix {
        GenericMatrix::from_fn(|i, j| self.entries[i][j].scale(c))
    }

    /// Multiplies every entry by the polynomial `p`.
    pub fn scale_poly(&self, p: &MultiPoly) -> GenericMatrix {
        GenericMatrix::from_fn(|i, j| &self.entries[i][j] * p)
    }
}

impl Add for &GenericMatrix {
    type Output = GenericMatrix;
    fn add(self, rhs: &GenericMatrix) -> GenericMatrix {
        GenericMatrix::from_fn(|i, j| &self.entries[i][j] + &rhs.entries[i][j])
    }
}

impl Sub for &GenericMatrix {
    type Output = GenericMatrix;
    fn sub(self, rhs: &GenericMatrix) -> GenericMatrix {
        GenericMatrix::from_fn(|i, j| &self.entries[i][j] - &rhs.entries[i][j])
    }
}

impl Mul for &GenericMatrix {
    type Output = GenericMatrix;
    fn mul(self, rhs: &GenericMatrix) -> GenericMatrix {
        GenericMatrix::from_fn(|i, j| {
            let mut acc = MultiPoly::zero();
            for k in 0..3 {
                acc = &acc + &(&self.entries[i][k] * &rhs.entries[k][j]);
            }
            acc
        })
    }
}

/// The diagonal traceless matrix `diag(x1, x2, -(x1 + x2))`.
pub fn diagonal_traceless_x() -> GenericMatrix {
    let x1 = MultiPoly::var(VarId::X1);
    let x2 = MultiPoly::var(VarId::X2);
    let corner = -&(&x1 + &x2);
    let mut m = GenericMatrix::zero();
    m.entries[0][0] = x1;
    m.entries[1][1] = x2;
    m.entries[2][2] = corner;
    m
}

fn traceless_from_vars(vars: [VarId; 8]) -> GenericMatrix {
    let mut it = vars.into_iter();
    let mut m = GenericMatrix::from_fn(|i, j| {
        if (i, j) == (2, 2) {
            MultiPoly::zero()
        } else {
            MultiPoly::var(it.next().expect("eight free entries"))
        }
    });
    m.entries[2][2] = -&(&m.entries[0][0] + &m.entries[1][1]);
    m
}

/// The generic traceless matrix in the `x`-entry variables, with the
/// bottom-right entry `-(x11 + x22)`.
pub fn generic_traceless_x() -> GenericMatrix {
    traceless_from_vars(VarId::generic_x_vars())
}

/// The generic traceless matrix in the `y`-entry variables, with the
/// bottom-right entry `-(y11 + y22)`.
pub fn generic_traceless_y() -> GenericMatrix {
    traceless_from_vars(VarId::y_vars())
}

/// The fully generic matrix on nine independent `z` variables.
pub fn fully_generic_z() -> GenericMatrix {
    let vars = VarId::z_vars();
    GenericMatrix::from_fn(|i, j| MultiPoly::var(vars[3 * i + j]))
}

/// Trace of the product of the given matrices, in order.
pub fn trace_word(word: &[&GenericMatrix]) -> Result<MultiPoly, MatrixError> {
    let (first, rest) = word.split_first().ok_or(MatrixError::EmptyWord)?;
    let mut prod = (*first).clone();
    for m in rest {
        prod = &prod * *m;
    }
    Ok(prod.trace())
}

/// Elementary symmetric functions of three (virtual) eigenvalues from
/// their power sums: `e1 = p1`, `e2 = (p1^2 - p2)/2`,
/// `e3 = (2 p3 - 3 p1 p2 + p1^3)/6`.
pub fn newton_elementary(
    p1: &MultiPoly,
    p2: &MultiPoly,
    p3: &MultiPoly,
) -> (MultiPoly, MultiPoly, MultiPoly) {
    let e1 = p1.clone();
    let e2 = (&p1.pow(2) - p2).scale(&frac(1, 2));
    let e3 = (&(&p3.scale(&int(2)) - &(&(p1 * p2)).scale(&int(3))) + &p1.pow(3)).scale(&frac(1, 6));
    (e1, e2, e3)
}

/// The Cayley–Hamilton residual `z^3 - e1 z^2 + e2 z - e3 e` with the
/// elementary symmetric functions taken from `tr(z)`, `tr(z^2)`, `tr(z^3)`.
/// Identically zero entry-wise for every 3×3 matrix.
pub fn cayley_hamilton_residual(z: &GenericMatrix) -> GenericMatrix {
    let p1 = z.trace();
    let z2 = z * z;
    let z3 = &z2 * z;
    let p2 = z2.trace();
    let p3 = z3.trace();
    let (e1, e2, e3) = newton_elementary(&p1, &p2, &p3);
    let mut r = &z3 - &z2.scale_poly(&e1);
    r = &r + &z.scale_poly(&e2);
    r = &r - &GenericMatrix::identity().scale_poly(&e3);
    r
}

/// For traceless `z`, the combination `tr(z^4) - tr(z^2)^2 / 2`, which the
/// Cayley–Hamilton theorem forces to vanish identically. Inputs with a
/// nonzero trace are rejected.
pub fn ch_traceless_identity(z: &GenericMatrix) -> Result<MultiPoly, MatrixError> {
    if !z.trace().is_zero() {
        return Err(MatrixError::NonzeroTrace);
    }
    let z2 = z * z;
    let z4 = &z2 * &z2;
    let half = Rational::one() / int(2);
    Ok(&z4.trace() - &z2.trace().pow(2).scale(&half))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn traceless_constructors() {
        let y = generic_traceless_y();
        assert!(y.trace().is_zero());
        assert_eq!(y.entry(2, 2), &p("-y11 - y22"));
        assert_eq!(y.entry(0, 1), &p("y12"));

        let x = diagonal_traceless_x();
        assert!(x.trace().is_zero());
        assert_eq!(x.entry(2, 2), &p("-x1 - x2"));
        assert!(x.entry(0, 1).is_zero());
    }

    #[test]
    fn trace_words() {
        let x = diagonal_traceless_x();
        let y = generic_traceless_y();
        assert!(trace_word(&[&x]).unwrap().is_zero());
        // direct 3x3 expansion: x1^2 + x2^2 + (x1+x2)^2
        assert_eq!(
            trace_word(&[&x, &x]).unwrap(),
            p("2*x1^2 + 2*x1*x2 + 2*x2^2")
        );
        assert_eq!(
            trace_word(&[&x, &y]).unwrap(),
            p("2*x1*y11 + x1*y22 + x2*y11 + 2*x2*y22")
        );
        let xy = trace_word(&[&x, &y]).unwrap();
        let yx = trace_word(&[&y, &x]).unwrap();
        assert_eq!(xy, yx);
        assert_eq!(trace_word(&[]), Err(MatrixError::EmptyWord));
    }

    #[test]
    fn cyclic_invariance_up_to_length_six() {
        let x = diagonal_traceless_x();
        let y = generic_traceless_y();
        for len in 1..=6usize {
            for bits in 0..(1u32 << len) {
                let word: Vec<&GenericMatrix> = (0..len)
                    .map(|i| if bits >> i & 1 == 0 { &x } else { &y })
                    .collect();
                let base = trace_word(&word).unwrap();
                for r in 1..len {
                    let mut rotated = word.clone();
                    rotated.rotate_left(r);
                    assert_eq!(trace_word(&rotated).unwrap(), base);
                }
            }
        }
    }

    #[test]
    fn newton_formulas() {
        let zero = MultiPoly::zero();
        let (e1, e2, e3) = newton_elementary(&zero, &p("x1"), &p("x2"));
        assert!(e1.is_zero());
        assert_eq!(e2, p("-1/2*x1"));
        assert_eq!(e3, p("1/3*x2"));

        // all eigenvalues 1: p = (3,3,3) -> e = (3,3,1)
        let three = MultiPoly::constant(int(3));
        let (e1, e2, e3) = newton_elementary(&three, &three, &three);
        assert_eq!(e1, MultiPoly::constant(int(3)));
        assert_eq!(e2, MultiPoly::constant(int(3)));
        assert_eq!(e3, MultiPoly::constant(int(1)));

        // eigenvalues 1, -1, 0: p = (0,2,0) -> e = (0,-1,0)
        let (e1, e2, e3) =
            newton_elementary(&zero, &MultiPoly::constant(int(2)), &zero);
        assert!(e1.is_zero());
        assert_eq!(e2, MultiPoly::constant(int(-1)));
        assert!(e3.is_zero());
    }

    #[test]
    fn cayley_hamilton_entrywise_for_generic_matrix() {
        let z = fully_generic_z();
        let r = cayley_hamilton_residual(&z);
        for i in 0..3 {
            for j in 0..3 {
                assert!(r.entry(i, j).is_zero(), "entry ({i},{j}) not zero");
            }
        }
    }

    #[test]
    fn traceless_trace_identity() {
        let x = diagonal_traceless_x();
        let y = generic_traceless_y();
        assert!(ch_traceless_identity(&x).unwrap().is_zero());
        assert!(ch_traceless_identity(&y).unwrap().is_zero());
        assert!(ch_traceless_identity(&(&x + &y)).unwrap().is_zero());
        assert_eq!(
            ch_traceless_identity(&fully_generic_z()),
            Err(MatrixError::NonzeroTrace)
        );
    }

    #[test]
    fn bidegree_22_component_of_fourth_power_trace() {
        // tr((x+y)^4) splits by bidegree; the (2,2) part must agree with
        // 4 tr(x^2 y^2) + 2 tr(xyxy) evaluated directly.
        let x = generic_traceless_x();
        let y = generic_traceless_y();
        let s = &x + &y;
        let t4 = trace_word(&[&s, &s, &s, &s]).unwrap();
        let comp = t4.bihomogeneous_component(&VarId::generic_x_vars(), &VarId::y_vars(), 2, 2);
        let want = &trace_word(&[&x, &x, &y, &y]).unwrap().scale(&int(4))
            + &trace_word(&[&x, &y, &x, &y]).unwrap().scale(&int(2));
        assert_eq!(comp, want);

        // and the full degree-(2,2) trace identity holds
        let ident = &(&want - &(&trace_word(&[&x, &x]).unwrap() * &trace_word(&[&y, &y]).unwrap()))
            - &trace_word(&[&x, &y]).unwrap().pow(2).scale(&int(2));
        assert!(ident.is_zero());
    }
}
