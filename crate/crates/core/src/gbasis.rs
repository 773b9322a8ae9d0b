//! Sparse polynomials over ℚ, weight orders and reduced Gröbner bases.
//!
//! Variables are named `y1, …, yn` after their 1-based position. A
//! [`MonomialOrder`] compares the weight first and breaks ties with a fixed
//! term order; rational weights are scaled to integers once so that
//! comparisons in the reduction loop stay in machine arithmetic.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Int, Rat, Result};

/// An exponent vector `y^p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

fn overflow() -> Error {
    Error::TooLarge(String::from("monomial exponent exceeds u32"))
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or_else(overflow))
            .collect::<Result<_>>()
            .map(Monomial)
    }

    pub fn pow(&self, k: u32) -> Result<Monomial> {
        self.0.iter().map(|a| a.checked_mul(k).ok_or_else(overflow)).collect::<Result<_>>().map(Monomial)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `Σ w_i p_i`.
    pub fn weighted_degree(&self, w: &[Rat]) -> Rat {
        self.0.iter().zip(w).fold(Rat::zero(), |acc, (&e, wi)| acc + wi * Int::from(e))
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "y{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Tiebreak used when two monomials have the same weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tiebreak {
    /// Total degree, then reverse lexicographic.
    Grevlex,
    /// Reverse lexicographic alone; only a term order when every weight is
    /// positive.
    Revlex,
}

/// A weight order refined by a tiebreak.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    weight: Vec<Rat>,
    scaled: Vec<i64>,
    tiebreak: Tiebreak,
}

impl MonomialOrder {
    pub fn new(weight: Vec<Rat>, tiebreak: Tiebreak) -> Result<Self> {
        match tiebreak {
            Tiebreak::Grevlex if weight.iter().any(Signed::is_negative) => {
                return Err(Error::InvalidWeight("grevlex-refined", "nonnegative"))
            }
            Tiebreak::Revlex if weight.iter().any(|w| !w.is_positive()) => {
                return Err(Error::InvalidWeight("revlex-refined", "positive"))
            }
            _ => {}
        }
        let denom = weight.iter().fold(Int::one(), |acc, w| acc.lcm(w.denom()));
        let scaled = weight
            .iter()
            .map(|w| (w.numer() * (&denom / w.denom())).to_i64().ok_or(Error::WeightOverflow))
            .collect::<Result<_>>()?;
        Ok(MonomialOrder { weight, scaled, tiebreak })
    }

    /// Plain graded reverse lexicographic order.
    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder { weight: vec![Rat::zero(); nvars], scaled: vec![0; nvars], tiebreak: Tiebreak::Grevlex }
    }

    /// The weight order refined by grevlex.
    pub fn weighted(weight: Vec<Rat>) -> Result<Self> {
        Self::new(weight, Tiebreak::Grevlex)
    }

    pub fn nvars(&self) -> usize {
        self.weight.len()
    }

    pub fn weight(&self) -> &[Rat] {
        &self.weight
    }

    pub fn tiebreak(&self) -> Tiebreak {
        self.tiebreak
    }

    fn key(&self, m: &Monomial) -> i128 {
        m.0.iter().zip(&self.scaled).map(|(&e, &w)| i128::from(e) * i128::from(w)).sum()
    }

    pub(crate) fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let by_weight = self.key(a).cmp(&self.key(b));
        if by_weight != Ordering::Equal {
            return by_weight;
        }
        if self.tiebreak == Tiebreak::Grevlex {
            let by_degree = a.total_degree().cmp(&b.total_degree());
            if by_degree != Ordering::Equal {
                return by_degree;
            }
        }
        for (x, y) in a.0.iter().zip(&b.0).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if m.nvars() != self.nvars() {
                return Err(Error::DimensionMismatch { expected: self.nvars(), found: m.nvars() });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// The same order with variables renamed by `perm` (variable `i` becomes
    /// variable `perm[i]`).
    pub(crate) fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let mut w = vec![Rat::zero(); perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            w[p] = self.weight[i].clone();
        }
        Self::new(w, self.tiebreak)
    }
}

/// Compares two monomials under `ord`.
pub fn compare(m1: &Monomial, m2: &Monomial, ord: &MonomialOrder) -> Result<Ordering> {
    ord.compare(m1, m2)
}

/// A polynomial in `nvars` variables with nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rat::one())
    }

    /// `y^p − y^q`.
    pub fn binomial(p: Monomial, q: Monomial) -> Self {
        Self::monomial(p).sub(&Self::monomial(q))
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Result<Self> {
        let mut out = Self::zero(nvars);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: m.nvars() });
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2)?, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        let terms = self.terms.iter().map(|(t, c)| Ok((t.mul(m)?, c.clone()))).collect::<Result<_>>()?;
        Ok(Polynomial { nvars: self.nvars, terms })
    }

    fn sorted(&self, ord: &MonomialOrder) -> Vec<(Monomial, Rat)> {
        let mut v: Vec<(Monomial, Rat)> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| ord.cmp(&a.0, &b.0));
        v
    }

    /// Terms from largest to smallest under `ord`.
    pub fn terms_descending(&self, ord: &MonomialOrder) -> Vec<(Monomial, Rat)> {
        let mut v = self.sorted(ord);
        v.reverse();
        v
    }

    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(Monomial, Rat)> {
        self.terms.iter().max_by(|a, b| ord.cmp(a.0, b.0)).map(|(m, c)| (m.clone(), c.clone()))
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Option<Monomial> {
        self.leading_term(ord).map(|(m, _)| m)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, ord: &MonomialOrder) -> Polynomial {
        match self.leading_term(ord) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Largest `w`-degree of a term.
    pub fn weighted_degree(&self, w: &[Rat]) -> Option<Rat> {
        self.terms.keys().map(|m| m.weighted_degree(w)).max()
    }

    /// The sum of the terms of maximal `w`-degree.
    pub fn initial_form(&self, w: &[Rat]) -> Polynomial {
        let Some(top) = self.weighted_degree(w) else { return self.clone() };
        let terms = self.terms.iter().filter(|(m, _)| m.weighted_degree(w) == top);
        Polynomial { nvars: self.nvars, terms: terms.map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_binomial(&self) -> bool {
        self.terms.len() == 2
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; perm.len()];
                for (i, &p) in perm.iter().enumerate() {
                    e[p] = m.0[i];
                }
                (Monomial(e), c.clone())
            })
            .collect();
        Polynomial { nvars: perm.len(), terms }
    }

    /// The same polynomial in a ring with `n ≥ nvars` variables.
    pub fn extend(&self, n: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e.resize(n, 0);
                (Monomial(e), c.clone())
            })
            .collect();
        Polynomial { nvars: n, terms }
    }

    /// Largest `k` with `y_var^k` dividing every term.
    pub fn variable_content(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).min().unwrap_or(0)
    }

    /// Divides every term by `y_var^k`, which must divide it.
    pub fn divide_variable(&self, var: usize, k: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e[var] -= k;
                (Monomial(e), c.clone())
            })
            .collect();
        Polynomial { nvars: self.nvars, terms }
    }

    /// Canonical text with terms in descending order under `ord`.
    pub fn render(&self, ord: &MonomialOrder) -> String {
        render_terms(&self.terms_descending(ord))
    }

    /// Parses text such as `y2*y3 - y1*y4`, `y_1^3 - 1/2 y2` or `3`.
    pub fn parse(s: &str, nvars: usize) -> Result<Polynomial> {
        Parser { s: s.as_bytes(), pos: 0, nvars, src: s }.polynomial()
    }
}

fn render_terms(terms: &[(Monomial, Rat)]) -> String {
    if terms.is_empty() {
        return String::from("0");
    }
    let mut out = String::new();
    for (k, (m, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if m.is_one() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&m.to_string());
        } else {
            out.push_str(&format!("{a}*{m}"));
        }
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&MonomialOrder::grevlex(self.nvars)))
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    nvars: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("polynomial {:?}: {what} at byte {}", self.src, self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<Int> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let digits = core::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        digits.parse::<Int>().map_err(|_| self.err("bad number"))
    }

    fn coefficient(&mut self) -> Result<Rat> {
        let n = self.number()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let d = self.number()?;
            if d.is_zero() {
                return Err(self.err("zero denominator"));
            }
            return Ok(Rat::new(n, d));
        }
        Ok(Rat::from_integer(n))
    }

    fn factor(&mut self, e: &mut [u32]) -> Result<()> {
        self.pos += 1; // 'y'
        if self.s.get(self.pos) == Some(&b'_') {
            self.pos += 1;
        }
        let idx = self.number()?.to_usize().ok_or_else(|| self.err("variable index too large"))?;
        if idx == 0 || idx > self.nvars {
            return Err(self.err("variable index out of range"));
        }
        let mut k = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            k = self.number()?.to_u32().ok_or_else(|| self.err("exponent too large"))?;
        }
        e[idx - 1] = e[idx - 1].checked_add(k).ok_or_else(overflow)?;
        Ok(())
    }

    fn term(&mut self) -> Result<(Monomial, Rat)> {
        let mut c = Rat::one();
        let mut e = vec![0u32; self.nvars];
        let mut seen = false;
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            c = self.coefficient()?;
            seen = true;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            }
        }
        loop {
            match self.peek() {
                Some(b'y') => {
                    self.factor(&mut e)?;
                    seen = true;
                }
                Some(b'*') if seen => {
                    self.pos += 1;
                    if self.peek() != Some(b'y') {
                        return Err(self.err("expected a variable after '*'"));
                    }
                }
                _ => break,
            }
        }
        if !seen {
            return Err(self.err("expected a term"));
        }
        Ok((Monomial(e), c))
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.nvars);
        let mut sign = Rat::one();
        match self.peek() {
            Some(b'-') => {
                sign = -sign;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            let (m, c) = self.term()?;
            out.add_term(m, c * &sign);
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => sign = Rat::one(),
                Some(b'-') => sign = -Rat::one(),
                Some(_) => return Err(self.err("unexpected character")),
            }
            self.pos += 1;
        }
    }
}

/// Terms sorted ascending under the active order; the leading term is last.
type Sparse = Vec<(Monomial, Rat)>;

/// `f − c · m · g` for ascending `f`, `g`.
fn sub_multiple(f: &Sparse, c: &Rat, m: &Monomial, g: &Sparse, ord: &MonomialOrder) -> Result<Sparse> {
    let mut shifted: Sparse = Vec::with_capacity(g.len());
    for (t, a) in g {
        shifted.push((t.mul(m)?, -(a * c)));
    }
    let mut out = Vec::with_capacity(f.len() + shifted.len());
    let (mut i, mut j) = (0, 0);
    while i < f.len() && j < shifted.len() {
        match ord.cmp(&f[i].0, &shifted[j].0) {
            Ordering::Less => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(shifted[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let s = &f[i].1 + &shifted[j].1;
                if !s.is_zero() {
                    out.push((f[i].0.clone(), s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    out.extend(shifted.drain(j..));
    Ok(out)
}

/// Full reduction of `f` by monic ascending `basis`. The remainder is
/// returned ascending.
fn reduce(mut f: Sparse, basis: &[Sparse], ord: &MonomialOrder) -> Result<Sparse> {
    let mut rem: Sparse = Vec::new();
    while let Some((lm, lc)) = f.last().cloned() {
        match basis.iter().find(|g| g.last().is_some_and(|(gm, _)| gm.divides(&lm))) {
            Some(g) => {
                let q = lm.div(&g.last().expect("nonempty").0);
                f = sub_multiple(&f, &lc, &q, g, ord)?;
            }
            None => {
                rem.push(f.pop().expect("nonempty"));
            }
        }
    }
    rem.reverse();
    Ok(rem)
}

fn make_monic(f: &mut Sparse) {
    if let Some((_, lc)) = f.last() {
        let inv = lc.recip();
        if !inv.is_one() {
            for (_, c) in f.iter_mut() {
                *c = &*c * &inv;
            }
        }
    }
}

fn to_poly(nvars: usize, f: &Sparse) -> Polynomial {
    Polynomial { nvars, terms: f.iter().cloned().collect() }
}

fn s_poly(f: &Sparse, g: &Sparse, ord: &MonomialOrder) -> Result<Sparse> {
    let lf = &f.last().expect("nonempty").0;
    let lg = &g.last().expect("nonempty").0;
    let l = lf.lcm(lg);
    let left: Sparse = f.iter().map(|(m, c)| Ok((m.mul(&l.div(lf))?, c.clone()))).collect::<Result<_>>()?;
    sub_multiple(&left, &Rat::one(), &l.div(lg), g, ord)
}

/// A Gröbner basis together with the order it was computed for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
    order: MonomialOrder,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().filter_map(|g| g.leading_monomial(&self.order)).collect()
    }

    fn sparse(&self) -> Vec<Sparse> {
        self.elements.iter().map(|g| g.sorted(&self.order)).collect()
    }

    /// The remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.nvars != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: f.nvars });
        }
        let r = reduce(f.sorted(&self.order), &self.sparse(), &self.order)?;
        Ok(to_poly(f.nvars, &r))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// True when both bases generate the same ideal.
    pub fn same_ideal(&self, other: &GroebnerBasis) -> Result<bool> {
        for g in &self.elements {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        for g in &other.elements {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Checks Buchberger's criterion on every pair.
    pub fn s_pairs_reduce_to_zero(&self) -> Result<bool> {
        let sp = self.sparse();
        for i in 0..sp.len() {
            for j in i + 1..sp.len() {
                if !reduce(s_poly(&sp[i], &sp[j], &self.order)?, &sp, &self.order)?.is_empty() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Canonical text of every element.
    pub fn render(&self) -> Vec<String> {
        self.elements.iter().map(|g| g.render(&self.order)).collect()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `ord`.
///
/// Pairs are treated by the normal strategy, skipping those excluded by the
/// coprime and chain criteria. The result is monic and sorted by leading
/// monomial, ascending.
pub fn buchberger(gens: &[Polynomial], ord: &MonomialOrder) -> Result<GroebnerBasis> {
    let n = ord.nvars();
    let mut basis: Vec<Sparse> = Vec::new();
    for g in gens {
        if g.nvars != n {
            return Err(Error::DimensionMismatch { expected: n, found: g.nvars });
        }
        let mut r = reduce(g.sorted(ord), &basis, ord)?;
        if !r.is_empty() {
            make_monic(&mut r);
            basis.push(r);
        }
    }
    let lm = |b: &Sparse| b.last().expect("nonempty").0.clone();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    while !pending.is_empty() {
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = lm(&basis[a.0]).lcm(&lm(&basis[a.1]));
                let lb = lm(&basis[b.0]).lcm(&lm(&basis[b.1]));
                ord.cmp(&la, &lb).then(a.cmp(b))
            })
            .expect("nonempty");
        pending.remove(&(i, j));
        let (li, lj) = (lm(&basis[i]), lm(&basis[j]));
        if li.coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis[k]).divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let mut r = reduce(s_poly(&basis[i], &basis[j], ord)?, &basis, ord)?;
        if r.is_empty() {
            continue;
        }
        make_monic(&mut r);
        let k = basis.len();
        basis.push(r);
        for i in 0..k {
            pending.insert((i, k));
        }
    }

    // Minimise, then interreduce.
    let mut keep: Vec<Sparse> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lg = lm(g);
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let lh = lm(h);
            j != i && lh.divides(&lg) && (lh != lg || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Sparse> = keep.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        let mut head = keep[i].clone();
        let top = head.pop().expect("nonempty");
        let mut tail = reduce(head, &others, ord)?;
        tail.push(top);
        make_monic(&mut tail);
        reduced.push(tail);
    }
    reduced.sort_by(|a, b| ord.cmp(&lm(a), &lm(b)));
    Ok(GroebnerBasis {
        elements: reduced.iter().map(|g| to_poly(n, g)).collect(),
        order: ord.clone(),
        reduced: true,
    })
}

/// Normal form of `f` modulo `g`.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    g.normal_form(f)
}

/// The `w`-initial forms of the elements of `g`, whose order must have weight
/// `w`.
pub fn initial_forms(g: &GroebnerBasis, w: &[Rat]) -> Result<Vec<Polynomial>> {
    if g.order.weight() != w {
        return Err(Error::WeightMismatch);
    }
    Ok(g.elements.iter().map(|f| f.initial_form(w)).collect())
}

/// True when variable `var` divides no leading monomial of `g`, which makes
/// it a nonzerodivisor modulo the ideal.
pub fn is_variable_nzd(g: &GroebnerBasis, var: usize) -> bool {
    g.leading_monomials().iter().all(|m| m.exponents().get(var).is_none_or(|&e| e == 0))
}
