//! Multivariate polynomials with integer coefficients over named variables.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A polynomial in an ordered list of named variables. Exponent vectors are
/// dense and indexed by variable position; terms are kept in lexicographic
/// order of their exponent vectors and zero coefficients are never stored.
///
/// Equality aligns variables by name, so two polynomials over the same
/// variable names in different orders compare equal when they agree.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "PolyWire", into = "PolyWire")]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, i64>,
}

#[derive(Serialize, Deserialize)]
struct PolyWire {
    vars: Vec<String>,
    terms: Vec<TermWire>,
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    exp: Vec<u32>,
    coef: i64,
}

impl TryFrom<PolyWire> for MultiPoly {
    type Error = Error;

    fn try_from(w: PolyWire) -> Result<Self> {
        let mut p = MultiPoly::zero(w.vars);
        for t in w.terms {
            p.add_term(t.exp, t.coef)?;
        }
        Ok(p)
    }
}

impl From<MultiPoly> for PolyWire {
    fn from(p: MultiPoly) -> Self {
        PolyWire {
            vars: p.vars,
            terms: p.terms.into_iter().map(|(exp, coef)| TermWire { exp, coef }).collect(),
        }
    }
}

/// `x, y, z` for up to three variables, `x1, x2, ...` beyond that.
pub fn default_var_names(n: usize) -> Vec<String> {
    match n {
        1..=3 => ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect(),
        _ => (1..=n).map(|i| format!("x{i}")).collect(),
    }
}

impl MultiPoly {
    pub fn zero<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Self {
        MultiPoly { vars: vars.into_iter().map(Into::into).collect(), terms: BTreeMap::new() }
    }

    pub fn constant<S: Into<String>>(vars: impl IntoIterator<Item = S>, c: i64) -> Self {
        let mut p = Self::zero(vars);
        let n = p.vars.len();
        p.add_term(vec![0; n], c).expect("arity matches");
        p
    }

    pub fn one<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Self {
        Self::constant(vars, 1)
    }

    /// The variable at position `i`.
    pub fn var<S: Into<String>>(vars: impl IntoIterator<Item = S>, i: usize) -> Self {
        let mut p = Self::zero(vars);
        let mut exp = vec![0; p.vars.len()];
        exp[i] = 1;
        p.add_term(exp, 1).expect("arity matches");
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: &[u32]) -> i64 {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    /// Sum of all coefficients, i.e. the value at the all-ones point.
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, exp: Vec<u32>, coef: i64) -> Result<()> {
        if exp.len() != self.vars.len() {
            return Err(Error::InvalidArgument(format!(
                "exponent of length {} for {} variables",
                exp.len(),
                self.vars.len()
            )));
        }
        if coef == 0 {
            return Ok(());
        }
        match self.terms.entry(exp) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coef);
            }
        }
        Ok(())
    }

    /// Same coefficients over new variable names, matched by position.
    pub fn renamed<S: Into<String>>(&self, vars: impl IntoIterator<Item = S>) -> Result<Self> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.len() != self.vars.len() {
            return Err(Error::InvalidArgument("variable count differs".into()));
        }
        Ok(MultiPoly { vars, terms: self.terms.clone() })
    }

    /// Substitutes variable `perm[i]` for variable `i`: the exponent at
    /// position `i` moves to position `perm[i]`. Variable names stay put.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.vars.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation of 0..{n}")));
        }
        let mut out = Self::zero(self.vars.clone());
        for (exp, &c) in &self.terms {
            let mut e = vec![0; n];
            for (i, &p) in perm.iter().enumerate() {
                e[p] = exp[i];
            }
            out.terms.insert(e, c);
        }
        Ok(out)
    }

    /// Whether the polynomial is unchanged by the variable permutation.
    pub fn is_symmetric_under(&self, perm: &[usize]) -> Result<bool> {
        Ok(self.permuted(perm)?.terms == self.terms)
    }

    /// Coefficients agree position by position, ignoring variable names.
    pub fn same_coefficients(&self, other: &Self) -> bool {
        self.vars.len() == other.vars.len() && self.terms == other.terms
    }

    /// Re-expresses this polynomial over `vars`, which must be a
    /// rearrangement of its own variable names.
    pub fn aligned_to(&self, vars: &[String]) -> Option<Self> {
        if vars.len() != self.vars.len() {
            return None;
        }
        let perm: Option<Vec<usize>> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v))
            .collect();
        let mut p = self.permuted(&perm?).ok()?;
        p.vars = vars.to_vec();
        Some(p)
    }

    fn binary(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        let rhs = other.aligned_to(&self.vars).unwrap_or_else(|| {
            panic!("variable mismatch: {:?} vs {:?}", self.vars, other.vars)
        });
        let mut out = self.clone();
        for (exp, c) in rhs.terms {
            let cur = out.terms.remove(&exp).unwrap_or(0);
            let v = f(cur, c);
            if v != 0 {
                out.terms.insert(exp, v);
            }
        }
        out
    }

    fn total_degree(exp: &[u32]) -> u32 {
        exp.iter().sum()
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        match other.aligned_to(&self.vars) {
            Some(o) => o.terms == self.terms,
            None => false,
        }
    }
}

impl Eq for MultiPoly {}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.binary(rhs, |a, b| a + b)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.binary(rhs, |a, b| a - b)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, &c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    #[allow(clippy::suspicious_arithmetic_impl)] // exponents add
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let rhs = rhs.aligned_to(&self.vars).unwrap_or_else(|| {
            panic!("variable mismatch: {:?} vs {:?}", self.vars, rhs.vars)
        });
        let mut out = MultiPoly::zero(self.vars.clone());
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb).expect("arity matches");
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    /// Terms by decreasing total degree, then decreasing exponent vector.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            (Self::total_degree(b.0), b.0).cmp(&(Self::total_degree(a.0), a.0))
        });
        for (i, (exp, &c)) in terms.into_iter().enumerate() {
            let monomial: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| match e {
                    1 => self.vars[v].clone(),
                    _ => format!("{}^{}", self.vars[v], e),
                })
                .collect();
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match (a, monomial.is_empty()) {
                (_, true) => write!(f, "{a}")?,
                (1, false) => write!(f, "{}", monomial.join("*"))?,
                (_, false) => write!(f, "{a}*{}", monomial.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Generating polynomial of a vector-valued statistic over a collection:
/// each object contributes the monomial whose exponents are its statistics.
pub fn distribution<T, S: Into<String>>(
    objects: impl IntoIterator<Item = T>,
    vars: impl IntoIterator<Item = S>,
    stat: impl Fn(&T) -> Vec<u32>,
) -> Result<MultiPoly> {
    let mut counts: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    let mut p = MultiPoly::zero(vars);
    for o in objects {
        let e = stat(&o);
        if e.len() != p.vars.len() {
            return Err(Error::InvalidArgument(format!(
                "statistic of length {} for {} variables",
                e.len(),
                p.vars.len()
            )));
        }
        *counts.entry(e).or_insert(0) += 1;
    }
    p.terms = counts;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Vec<String> {
        default_var_names(2)
    }

    #[test]
    fn arithmetic() {
        let x = MultiPoly::var(xy(), 0);
        let y = MultiPoly::var(xy(), 1);
        let s = &x + &y;
        let sq = &s * &s;
        assert_eq!(sq.coefficient(&[1, 1]), 2);
        assert_eq!(sq.num_terms(), 3);
        assert!((&sq - &sq).is_zero());
        assert_eq!(sq.to_string(), "x^2 + 2*x*y + y^2");
        assert_eq!((-&x).to_string(), "-x");
    }

    #[test]
    fn equality_aligns_names() {
        let mut a = MultiPoly::zero(["a", "b"]);
        a.add_term(vec![2, 0], 3).unwrap();
        let mut b = MultiPoly::zero(["b", "a"]);
        b.add_term(vec![0, 2], 3).unwrap();
        assert_eq!(a, b);
        assert!(!a.same_coefficients(&b));
    }

    #[test]
    fn symmetry() {
        let mut p = MultiPoly::zero(xy());
        p.add_term(vec![2, 1], 1).unwrap();
        p.add_term(vec![1, 2], 1).unwrap();
        assert!(p.is_symmetric_under(&[1, 0]).unwrap());
        p.add_term(vec![3, 0], 1).unwrap();
        assert!(!p.is_symmetric_under(&[1, 0]).unwrap());
        assert!(p.permuted(&[0, 0]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let mut p = MultiPoly::zero(xy());
        p.add_term(vec![1, 0], 2).unwrap();
        p.add_term(vec![0, 1], -1).unwrap();
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(j, r#"{"vars":["x","y"],"terms":[{"exp":[0,1],"coef":-1},{"exp":[1,0],"coef":2}]}"#);
        let q: MultiPoly = serde_json::from_str(&j).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn distribution_counts() {
        let p = distribution([1u32, 2, 2, 3], ["x"], |&v| vec![v]).unwrap();
        assert_eq!(p.coefficient(&[2]), 2);
        assert_eq!(p.coefficient_sum(), 4);
    }
}
