use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{format_rational, parse_rational, rational_abs};
use super::{GaussianRational, Monomial, RatMatrix, Rational};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept in a map ordered graded-lexicographically and never store
/// a zero coefficient, so structural equality is equality of normal forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(Rational::one(), n)
    }

    pub fn constant(c: Rational, n: usize) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(n), c);
        }
        Self { n, terms }
    }

    /// The variable `X(index)` (0-based) in `n` variables.
    pub fn var(index: usize, n: usize) -> Self {
        assert!(index < n, "variable index out of range");
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(index, n), Rational::one());
        Self { n, terms }
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let n = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { n, terms }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.n))
    }

    fn insert_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (m.clone(), q * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divide by the absolute value of the leading coefficient, so the result
    /// is the canonical positive-scalar representative. Zero stays zero.
    pub fn normalize_positive(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, lc)) => {
                let scale = rational_abs(lc).recip();
                self.scale(&scale)
            }
        }
    }

    /// Partial derivative with respect to variable `var` (0-based).
    pub fn derivative(&self, var: usize) -> Self {
        assert!(var < self.n);
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] = e - 1;
            out.insert_term(Monomial::new(exps), c * Rational::from_integer(e.into()));
        }
        out
    }

    /// Exact evaluation at a Gaussian-rational point.
    pub fn eval(&self, x: &[GaussianRational]) -> Result<GaussianRational> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        // Memoize variable powers up to the largest exponent that occurs.
        let mut max_exp = vec![0u32; self.n];
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                max_exp[i] = max_exp[i].max(e);
            }
        }
        let powers: Vec<Vec<GaussianRational>> = x
            .iter()
            .enumerate()
            .map(|(i, xi)| {
                let mut p = Vec::with_capacity(max_exp[i] as usize + 1);
                p.push(GaussianRational::one());
                for e in 1..=max_exp[i] {
                    let next = &p[(e - 1) as usize] * xi;
                    p.push(next);
                }
                p
            })
            .collect();
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut term = GaussianRational::from_real(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = &term * &powers[i][e as usize];
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Exact evaluation at a real rational point.
    pub fn eval_real(&self, x: &[Rational]) -> Result<Rational> {
        let point: Vec<GaussianRational> = x
            .iter()
            .map(|q| GaussianRational::from_real(q.clone()))
            .collect();
        Ok(self.eval(&point)?.re)
    }

    /// Substitute `X_i <- sum_j M[i][j] X_j`, i.e. compute `p(M x)`.
    pub fn compose_linear(&self, m: &RatMatrix) -> Result<Self> {
        if m.rows() != self.n || m.cols() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: m.rows(),
            });
        }
        if let Some(map) = monomial_matrix_map(m) {
            // Each row has a single nonzero entry: monomials map to monomials.
            let mut out = Self::zero(self.n);
            for (mon, c) in &self.terms {
                let mut exps = vec![0u32; self.n];
                let mut coeff = c.clone();
                for (i, &e) in mon.exponents().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    let (j, ref entry) = map[i];
                    exps[j] += e;
                    if !entry.is_one() {
                        for _ in 0..e {
                            coeff = &coeff * entry;
                        }
                    }
                }
                out.insert_term(Monomial::new(exps), coeff);
            }
            return Ok(out);
        }
        // General case: expand powers of the substituted linear forms,
        // memoized per variable.
        let mut max_exp = vec![0u32; self.n];
        for mon in self.terms.keys() {
            for (i, &e) in mon.exponents().iter().enumerate() {
                max_exp[i] = max_exp[i].max(e);
            }
        }
        let mut powers: Vec<Vec<Polynomial>> = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let mut row_form = Self::zero(self.n);
            for j in 0..self.n {
                let entry = m.entry(i, j);
                if !entry.is_zero() {
                    row_form.insert_term(Monomial::var(j, self.n), entry.clone());
                }
            }
            let mut p = vec![Self::one(self.n)];
            for e in 1..=max_exp[i] {
                let next = &p[(e - 1) as usize] * &row_form;
                p.push(next);
            }
            powers.push(p);
        }
        let mut out = Self::zero(self.n);
        for (mon, c) in &self.terms {
            let mut term = Self::constant(c.clone(), self.n);
            for (i, &e) in mon.exponents().iter().enumerate() {
                if e > 0 {
                    term = &term * &powers[i][e as usize];
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Parse a polynomial in the text grammar over variables `x1..xn`.
    ///
    /// Terms are joined by `+`/`-`; a term is a rational constant, a product
    /// of variable powers, or `c*x<i>^<e>*...`. `^1` may be omitted.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Self::zero(n);
        let mut term = String::new();
        let mut terms: Vec<String> = Vec::new();
        for (idx, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && idx > 0 {
                terms.push(std::mem::take(&mut term));
                if ch == '-' {
                    term.push('-');
                }
            } else {
                term.push(ch);
            }
        }
        terms.push(term);
        for t in terms {
            let (mon, coeff) = parse_term(&t, n)?;
            out.insert_term(mon, coeff);
        }
        Ok(out)
    }
}

fn parse_term(t: &str, n: usize) -> Result<(Monomial, Rational)> {
    let (negative, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    if body.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let mut coeff = Rational::one();
    let mut exps = vec![0u32; n];
    for factor in body.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in `{t}`")));
        }
        if let Some(rest) = factor.strip_prefix('x') {
            let (idx_str, exp_str) = match rest.split_once('^') {
                Some((a, b)) => (a, Some(b)),
                None => (rest, None),
            };
            let idx: usize = idx_str
                .parse()
                .map_err(|_| Error::Parse(format!("invalid variable `{factor}`")))?;
            if idx == 0 || idx > n {
                return Err(Error::Parse(format!(
                    "variable `x{idx}` out of range 1..={n}"
                )));
            }
            let exp: u32 = match exp_str {
                Some(e) => e
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid exponent in `{factor}`")))?,
                None => 1,
            };
            exps[idx - 1] += exp;
        } else {
            coeff = &coeff * &parse_rational(factor)?;
        }
    }
    if negative {
        coeff = -coeff;
    }
    Ok((Monomial::new(exps), coeff))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if pos == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = rational_abs(c);
            if m.is_one() {
                write!(f, "{}", format_rational(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", format_rational(&mag))?;
                }
                let mut first = true;
                for (i, &e) in m.exponents().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    if e == 1 {
                        write!(f, "x{}", i + 1)?;
                    } else {
                        write!(f, "x{}^{}", i + 1, e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.n, rhs.n, "mixed variable counts");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.n, rhs.n, "mixed variable counts");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.n, rhs.n, "mixed variable counts");
        let mut out = Polynomial::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

/// If every row of `m` has exactly one nonzero entry, return for each row
/// the column index and entry. Signed permutation matrices take this path.
fn monomial_matrix_map(m: &RatMatrix) -> Option<Vec<(usize, Rational)>> {
    let mut map = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let mut hit = None;
        for j in 0..m.cols() {
            if !m.entry(i, j).is_zero() {
                if hit.is_some() {
                    return None;
                }
                hit = Some((j, m.entry(i, j).clone()));
            }
        }
        map.push(hit?);
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    fn gauss(s: &str) -> GaussianRational {
        GaussianRational::parse(s).unwrap()
    }

    #[test]
    fn parse_display_round_trip() {
        for s in [
            "0",
            "1/2",
            "x1 - x2",
            "x1^2 - 2*x1*x2 + x2^2",
            "-x1*x2^3 + 5/7",
            "3*x2^4 + x1*x3",
        ] {
            let poly = p(s, 3);
            let out = poly.to_string();
            assert_eq!(p(&out, 3), poly, "via `{out}`");
        }
        // canonical output is graded-lex descending
        assert_eq!(p("x2 + x1^2 + 1", 2).to_string(), "x1^2 + x2 + 1");
        assert!(Polynomial::parse("x4", 3).is_err());
        assert!(Polynomial::parse("x0", 3).is_err());
        assert!(Polynomial::parse("", 3).is_err());
    }

    #[test]
    fn eval_symmetric_difference_vanishes() {
        // X1 - X2 at (1, 1) -> 0
        let poly = p("x1 - x2", 2);
        let v = poly.eval(&[gauss("1"), gauss("1")]).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn eval_complex_point() {
        // X1*X2^2 at (i, -i) -> i * (-1) = -i
        let poly = p("x1*x2^2", 2);
        let v = poly.eval(&[gauss("i"), gauss("-i")]).unwrap();
        assert_eq!(v, gauss("-i"));
    }

    #[test]
    fn eval_invariant_square_negative() {
        // X1^2*X2^2 at (1, i) -> -1
        let poly = p("x1^2*x2^2", 2);
        let v = poly.eval(&[gauss("1"), gauss("i")]).unwrap();
        assert_eq!(v, gauss("-1"));
    }

    #[test]
    fn eval_dimension_mismatch() {
        let poly = p("x1", 2);
        assert!(poly.eval(&[gauss("1")]).is_err());
    }

    #[test]
    fn eval_is_ring_homomorphism() {
        let a = p("x1^2 - 1/3*x2", 2);
        let b = p("2*x1*x2 + x2^3", 2);
        let x = [gauss("1/2+i"), gauss("-2-3*i")];
        let sum = (&a + &b).eval(&x).unwrap();
        let prod = (&a * &b).eval(&x).unwrap();
        let (ea, eb) = (a.eval(&x).unwrap(), b.eval(&x).unwrap());
        assert_eq!(sum, &ea + &eb);
        assert_eq!(prod, &ea * &eb);
    }

    #[test]
    fn derivative_basic() {
        let poly = p("x1^3*x2 + x2^2", 2);
        assert_eq!(poly.derivative(0), p("3*x1^2*x2", 2));
        assert_eq!(poly.derivative(1), p("x1^3 + 2*x2", 2));
    }

    #[test]
    fn normalize_positive_scalar() {
        let poly = p("x1^2 - 2*x1*x2 + x2^2", 2).scale(&ratio(1, 2));
        assert_eq!(
            poly.normalize_positive(),
            p("x1^2 - 2*x1*x2 + x2^2", 2)
        );
        let negative_lead = p("-2*x1 + x2", 2);
        assert_eq!(negative_lead.normalize_positive(), p("-x1 + 1/2*x2", 2));
    }

    #[test]
    fn compose_linear_permutation() {
        // X1 -> X2 under the substitution matrix sending (x1,x2,x3) to (x2,x3,x1)
        let m = RatMatrix::from_i64(3, 3, &[0, 1, 0, 0, 0, 1, 1, 0, 0]);
        let poly = p("x1 - x2", 3);
        assert_eq!(poly.compose_linear(&m).unwrap(), p("x2 - x3", 3));
    }

    #[test]
    fn compose_linear_general_matches_eval() {
        let m = RatMatrix::from_i64(2, 2, &[1, 2, 3, -1]);
        let poly = p("x1^2*x2 - x2^2 + 4", 2);
        let composed = poly.compose_linear(&m).unwrap();
        let x = [gauss("1/3"), gauss("-2")];
        let mx = m.mul_gaussian_vec(&x).unwrap();
        assert_eq!(composed.eval(&x).unwrap(), poly.eval(&mx).unwrap());
    }
}
