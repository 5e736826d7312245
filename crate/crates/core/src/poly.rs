//! Dense integer polynomials in one variable `t`, sized for characteristic
//! polynomials of arrangements on a handful of coordinates. Coefficients are
//! stored lowest degree first.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<i64>,
}

impl CharPoly {
    /// Builds a polynomial from coefficients, lowest degree first. Trailing
    /// zeros are trimmed; the zero polynomial is stored as an empty vector.
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        CharPoly { coeffs }
    }

    pub fn one() -> Self {
        CharPoly { coeffs: vec![1] }
    }

    pub fn zero() -> Self {
        CharPoly { coeffs: Vec::new() }
    }

    /// The monic product of `t - r` over the given roots.
    pub fn from_roots(roots: &[i64]) -> Self {
        let mut p = CharPoly::one();
        for &r in roots {
            p = p.mul(&CharPoly::new(vec![-r, 1]));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficients, lowest degree first.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn eval(&self, t: i64) -> i64 {
        let mut acc: i64 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc
                .checked_mul(t)
                .and_then(|x| x.checked_add(c))
                .expect("polynomial evaluation overflow");
        }
        acc
    }

    pub fn mul(&self, other: &CharPoly) -> CharPoly {
        if self.is_zero() || other.is_zero() {
            return CharPoly::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j]
                    .checked_add(a.checked_mul(b).expect("coefficient overflow"))
                    .expect("coefficient overflow");
            }
        }
        CharPoly::new(out)
    }

    /// Whether `divisor` divides `self` exactly over the integers: the long
    /// division over the rationals must leave no remainder and an integer
    /// quotient. Panics if `divisor` is zero.
    pub fn divides(&self, divisor: &CharPoly) -> bool {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return true;
        }
        if divisor.coeffs.len() > self.coeffs.len() {
            return false;
        }
        let mut rem: Vec<Ratio<i128>> = self
            .coeffs
            .iter()
            .map(|&c| Ratio::from_integer(c as i128))
            .collect();
        let d: Vec<Ratio<i128>> = divisor
            .coeffs
            .iter()
            .map(|&c| Ratio::from_integer(c as i128))
            .collect();
        let lead = d.last().unwrap().clone();
        let mut quot: Vec<Ratio<i128>> = vec![Ratio::zero(); rem.len() - d.len() + 1];
        for k in (0..quot.len()).rev() {
            let q = rem[k + d.len() - 1].clone() / lead.clone();
            quot[k] = q.clone();
            for (i, di) in d.iter().enumerate() {
                let idx = k + i;
                let sub = q.clone() * di.clone();
                rem[idx] -= sub;
            }
        }
        rem.iter().all(|r| r.is_zero()) && quot.iter().all(|q| q.is_integer())
    }

    /// If the polynomial factors completely into integer linear factors,
    /// returns the multiset of roots in ascending order.
    pub fn integer_roots(&self) -> Option<Vec<i64>> {
        if self.is_zero() {
            return None;
        }
        let mut rem = self.clone();
        let mut roots = Vec::new();
        while rem.degree() > 0 {
            let constant = rem.coeffs[0];
            let candidates: Vec<i64> = if constant == 0 {
                vec![0]
            } else {
                let mut ds = Vec::new();
                let a = constant.unsigned_abs() as i64;
                let mut d = 1;
                while d * d <= a {
                    if a % d == 0 {
                        ds.extend([d, -d, a / d, -(a / d)]);
                    }
                    d += 1;
                }
                ds.sort_unstable();
                ds.dedup();
                ds
            };
            let root = candidates.into_iter().find(|&r| rem.eval(r) == 0)?;
            roots.push(root);
            rem = divide_exact(&rem, &CharPoly::new(vec![-root, 1]))
                .expect("verified root must divide");
        }
        if rem.coeffs != [1] {
            // A non-unit leading constant means the factorization is not
            // monic-linear; these arrangements never produce that, but the
            // contract is explicit.
            return None;
        }
        roots.sort_unstable();
        Some(roots)
    }
}

fn divide_exact(num: &CharPoly, den: &CharPoly) -> Option<CharPoly> {
    if !num.divides(den) {
        return None;
    }
    if num.is_zero() {
        return Some(CharPoly::zero());
    }
    let mut rem: Vec<Ratio<i128>> = num
        .coeffs
        .iter()
        .map(|&c| Ratio::from_integer(c as i128))
        .collect();
    let d: Vec<Ratio<i128>> = den
        .coeffs
        .iter()
        .map(|&c| Ratio::from_integer(c as i128))
        .collect();
    let lead = d.last().unwrap().clone();
    let mut quot: Vec<Ratio<i128>> = vec![Ratio::zero(); rem.len() - d.len() + 1];
    for k in (0..quot.len()).rev() {
        let q = rem[k + d.len() - 1].clone() / lead.clone();
        quot[k] = q.clone();
        for (i, di) in d.iter().enumerate() {
            rem[k + i] -= q.clone() * di.clone();
        }
    }
    let coeffs: Vec<i64> = quot
        .iter()
        .map(|q| i64::try_from(q.to_integer()).expect("quotient coefficient overflow"))
        .collect();
    Some(CharPoly::new(coeffs))
}

/// Whether `divisor` divides `dividend` exactly over the integers.
pub fn poly_divides(dividend: &CharPoly, divisor: &CharPoly) -> bool {
    dividend.divides(divisor)
}

/// Newton interpolation through `(x_i, y_i)` with distinct `x_i`, returning
/// integer coefficients lowest degree first, or `None` when any coefficient
/// comes out non-integral.
pub(crate) fn interpolate_integer(points: &[(i64, i64)]) -> Option<Vec<i64>> {
    assert!(!points.is_empty(), "interpolation needs at least one point");
    let n = points.len();
    let xs: Vec<Ratio<i128>> = points
        .iter()
        .map(|&(x, _)| Ratio::from_integer(x as i128))
        .collect();
    // Divided differences.
    let mut table: Vec<Ratio<i128>> = points
        .iter()
        .map(|&(_, y)| Ratio::from_integer(y as i128))
        .collect();
    let mut dd: Vec<Ratio<i128>> = vec![table[0].clone()];
    for level in 1..n {
        for i in 0..n - level {
            let dx = xs[i + level].clone() - xs[i].clone();
            assert!(!dx.is_zero(), "interpolation nodes must be distinct");
            table[i] = (table[i + 1].clone() - table[i].clone()) / dx;
        }
        table.truncate(n - level);
        dd.push(table[0].clone());
    }
    // Expand the Newton form into monomial coefficients.
    let mut coeffs: Vec<Ratio<i128>> = vec![Ratio::zero(); n];
    let mut basis: Vec<Ratio<i128>> = vec![Ratio::one()]; // product of (t - x_i)
    for (level, c) in dd.iter().enumerate() {
        for (i, b) in basis.iter().enumerate() {
            coeffs[i] += c.clone() * b.clone();
        }
        if level + 1 < n {
            // basis *= (t - xs[level])
            let mut next = vec![Ratio::zero(); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                next[i + 1] += b.clone();
                next[i] -= b.clone() * xs[level].clone();
            }
            basis = next;
        }
    }
    let mut out = Vec::with_capacity(n);
    for c in coeffs {
        if !c.is_integer() {
            return None;
        }
        out.push(i64::try_from(c.to_integer()).ok()?);
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    if out.is_empty() {
        out.push(0);
    }
    Some(out)
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match deg {
                0 => write!(f, "{mag}")?,
                1 => {
                    if mag == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "{mag}*t")?;
                    }
                }
                _ => {
                    if mag == 1 {
                        write!(f, "t^{deg}")?;
                    } else {
                        write!(f, "{mag}*t^{deg}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
