use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::monomial::mul_into;
use super::{Coefficient, Monomial, MonomialOrder, Ring, RingError};

/// Geometric degree; the zero polynomial has degree minus infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }
}

/// Minimum exponent of a variable; the zero polynomial has valuation plus
/// infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u32),
    PosInfinity,
}

/// `add`, `sub` or `mul`, for [`ring_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn ring_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial, RingError> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
    }
}

/// Value bound to a variable by [`Polynomial::substitute`].
#[derive(Clone, Debug)]
pub enum Binding {
    Constant(Coefficient),
    Poly(Polynomial),
}

impl From<Coefficient> for Binding {
    fn from(c: Coefficient) -> Self {
        Binding::Constant(c)
    }
}

impl From<Polynomial> for Binding {
    fn from(p: Polynomial) -> Self {
        Binding::Poly(p)
    }
}

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted in strictly descending order under the ring's
/// monomial order and no stored coefficient is zero, so structural equality
/// is polynomial equality.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Coefficient)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

/// Products with more term pairs than this are split across threads.
const PARALLEL_MUL_THRESHOLD: usize = 1 << 16;

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Coefficient::one())
    }

    pub fn constant(ring: &Ring, c: Coefficient) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((Monomial::one(ring.variable_count()), c));
        }
        p
    }

    pub fn from_integer(ring: &Ring, n: i64) -> Self {
        Self::constant(ring, super::integer(n))
    }

    /// The variable at roster position `var`.
    pub fn variable(ring: &Ring, var: usize) -> Self {
        let mut exps = vec![0u16; ring.variable_count()];
        exps[var] = 1;
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::from_exponents(exps), Coefficient::one())] }
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Self, RingError> {
        Ok(Self::variable(ring, ring.require(name)?))
    }

    /// Builds from arbitrary terms: duplicates are merged, zeros dropped.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Result<Self, RingError>
    where
        I: IntoIterator<Item = (Monomial, Coefficient)>,
    {
        let mut acc: FxHashMap<Monomial, Coefficient> = FxHashMap::default();
        for (m, c) in terms {
            if m.len() != ring.variable_count() {
                return Err(RingError::MonomialLength { expected: ring.variable_count(), found: m.len() });
            }
            if let Some(var) = m.exponents().iter().position(|&e| e > ring.exponent_limit()) {
                return Err(overflow(ring, var));
            }
            *acc.entry(m).or_insert_with(Coefficient::zero) += c;
        }
        Ok(Self::from_map(ring, acc))
    }

    fn from_map(ring: &Ring, map: FxHashMap<Monomial, Coefficient>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        sort_terms(ring.order(), &mut terms);
        Polynomial { ring: ring.clone(), terms }
    }

    /// Trusts that `terms` is sorted, nonzero and duplicate-free.
    fn from_sorted(ring: &Ring, terms: Vec<(Monomial, Coefficient)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().compare(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coefficient)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value, when the polynomial is a rational constant (zero included).
    pub fn constant_value(&self) -> Option<Coefficient> {
        match self.terms.as_slice() {
            [] => Some(Coefficient::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Leading term under the ring's own order.
    pub fn leading_term(&self) -> Option<&(Monomial, Coefficient)> {
        self.terms.first()
    }

    /// The rational coefficient of `m` (zero if absent).
    pub fn coefficient_of(&self, m: &Monomial) -> Coefficient {
        let order = self.ring.order();
        self.terms
            .binary_search_by(|(t, _)| order.compare(m, t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Coefficient::zero())
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), RingError> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(RingError::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        let sign = |c: &Coefficient| if negate { -c } else { c.clone() };
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (m, c) = b.next().unwrap();
                    out.push((m.clone(), sign(c)));
                }
                (Some((ma, _)), Some((mb, _))) => match order.compare(ma, mb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => {
                        let (m, c) = b.next().unwrap();
                        out.push((m.clone(), sign(c)));
                    }
                    Ordering::Equal => {
                        let (m, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let c = if negate { ca - cb } else { ca + cb };
                        if !c.is_zero() {
                            out.push((m.clone(), c));
                        }
                    }
                },
            }
        }
        Polynomial::from_sorted(&self.ring, out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        if let Some(c) = other.constant_value() {
            return Ok(self.scale(&c));
        }
        if let Some(c) = self.constant_value() {
            return Ok(other.scale(&c));
        }
        let limit = self.ring.exponent_limit();
        let (a, da) = integer_form(&self.terms);
        let (b, db) = integer_form(&other.terms);
        let map = match small_product_bound(&a, &b) {
            true => {
                let a: Vec<_> = a.iter().map(|(m, c)| (*m, c.to_i64().unwrap() as i128)).collect();
                let b: Vec<_> = b.iter().map(|(m, c)| (*m, c.to_i64().unwrap() as i128)).collect();
                let acc = mul_accumulate(&a, &b, limit, |x: &i128, y: &i128| x * y, |acc, v| *acc += v)
                    .map_err(|var| overflow(&self.ring, var))?;
                acc.into_iter().filter(|(_, c)| *c != 0).map(|(m, c)| (m, BigInt::from(c))).collect()
            }
            false => mul_accumulate(&a, &b, limit, |x: &BigInt, y: &BigInt| x * y, |acc, v| *acc += v)
                .map_err(|var| overflow(&self.ring, var))?,
        };
        let denom = da * db;
        let map: FxHashMap<Monomial, Coefficient> =
            map.into_iter().map(|(m, c)| (m, BigRational::new(c, denom.clone()))).collect();
        Ok(Polynomial::from_map(&self.ring, map))
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        Polynomial::from_sorted(&self.ring, terms)
    }

    /// Multiplies by a single term.
    pub fn mul_term(&self, m: &Monomial, c: &Coefficient) -> Result<Polynomial, RingError> {
        if c.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let limit = self.ring.exponent_limit();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, k) in &self.terms {
            let prod = t.checked_mul(m, limit).map_err(|var| overflow(&self.ring, var))?;
            terms.push((prod, k * c));
        }
        // multiplying by a monomial preserves any monomial order
        Ok(Polynomial::from_sorted(&self.ring, terms))
    }

    pub fn pow(&self, k: u32) -> Result<Polynomial, RingError> {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Geometric degree (parameters have weight zero).
    pub fn total_degree(&self) -> Degree {
        let g = self.ring.geometric_count();
        self.terms.iter().map(|(m, _)| m.leading_degree(g)).max().map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Terms of geometric degree exactly `k`.
    pub fn homogeneous_part(&self, k: u32) -> Polynomial {
        let g = self.ring.geometric_count();
        self.filter_terms(|m| m.leading_degree(g) == k)
    }

    /// Terms of geometric degree strictly greater than `k`; zero exactly
    /// when the polynomial is congruent to zero modulo polynomials of
    /// degree at most `k`.
    pub fn high_part(&self, k: u32) -> Polynomial {
        let g = self.ring.geometric_count();
        self.filter_terms(|m| m.leading_degree(g) > k)
    }

    /// All nonzero homogeneous parts keyed by degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<u32, Polynomial> {
        let g = self.ring.geometric_count();
        let mut buckets: BTreeMap<u32, Vec<(Monomial, Coefficient)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            buckets.entry(m.leading_degree(g)).or_default().push((m.clone(), c.clone()));
        }
        buckets.into_iter().map(|(d, terms)| (d, Polynomial::from_sorted(&self.ring, terms))).collect()
    }

    pub fn is_homogeneous(&self, k: u32) -> bool {
        let g = self.ring.geometric_count();
        self.terms.iter().all(|(m, _)| m.leading_degree(g) == k)
    }

    fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| keep(m)).cloned().collect();
        Polynomial::from_sorted(&self.ring, terms)
    }

    pub fn valuation(&self, var: usize) -> Valuation {
        self.terms.iter().map(|(m, _)| m.exponent(var) as u32).min().map_or(Valuation::PosInfinity, Valuation::Finite)
    }

    pub fn variable_valuation(&self, name: &str) -> Result<Valuation, RingError> {
        Ok(self.valuation(self.ring.require(name)?))
    }

    /// Highest exponent of `var`, `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.exponent(var) as u32).max()
    }

    /// Coefficients `c_j` (free of `var`) with `self = Σ c_j var^j`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let Some(deg) = self.degree_in(var) else {
            return Vec::new();
        };
        let mut buckets: Vec<Vec<(Monomial, Coefficient)>> = vec![Vec::new(); deg as usize + 1];
        for (m, c) in &self.terms {
            buckets[m.exponent(var) as usize].push((m.with_exponent(var, 0), c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut terms| {
                // clearing one exponent can reorder terms under grevlex
                sort_terms(self.ring.order(), &mut terms);
                Polynomial::from_sorted(&self.ring, terms)
            })
            .collect()
    }

    /// Whether any term involves a geometric variable.
    pub fn is_parameter_only(&self) -> bool {
        let g = self.ring.geometric_count();
        self.terms.iter().all(|(m, _)| m.leading_degree(g) == 0)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(var) > 0)
    }

    /// Replaces the named variables by the given values. Polynomial values
    /// may live in a smaller ring whose variable names all exist here.
    pub fn substitute(&self, bindings: &[(&str, Binding)]) -> Result<Polynomial, RingError> {
        let n = self.ring.variable_count();
        let mut slots: Vec<Option<Binding>> = vec![None; n];
        for (name, value) in bindings {
            let var = self.ring.require(name)?;
            slots[var] = Some(match value {
                Binding::Constant(c) => Binding::Constant(c.clone()),
                Binding::Poly(p) => match p.constant_value() {
                    Some(c) => Binding::Constant(c),
                    None => Binding::Poly(p.embed(&self.ring)?),
                },
            });
        }
        // When no image mentions another bound variable the substitution can
        // run one variable at a time, by Horner's scheme, which avoids
        // expanding products of powers term by term.
        let independent = slots.iter().enumerate().all(|(var, b)| match b {
            Some(Binding::Poly(p)) => (0..n).all(|v| v == var || slots[v].is_none() || !p.involves(v)),
            _ => true,
        });
        if !independent {
            return self.substitute_slots(&slots);
        }
        let consts: Vec<Option<Binding>> =
            slots.iter().map(|s| s.as_ref().filter(|b| matches!(b, Binding::Constant(_))).cloned()).collect();
        let mut out = self.substitute_slots(&consts)?;
        for (var, slot) in slots.iter().enumerate() {
            if let Some(Binding::Poly(v)) = slot {
                out = out.horner(var, v)?;
            }
        }
        Ok(out)
    }

    fn horner(&self, var: usize, value: &Polynomial) -> Result<Polynomial, RingError> {
        let mut coeffs = self.coefficients_in(var);
        let Some(mut acc) = coeffs.pop() else {
            return Ok(Polynomial::zero(&self.ring));
        };
        while let Some(c) = coeffs.pop() {
            acc = acc.checked_mul(value)?.checked_add(&c)?;
        }
        Ok(acc)
    }

    fn substitute_slots(&self, slots: &[Option<Binding>]) -> Result<Polynomial, RingError> {
        let mut const_pows: FxHashMap<(usize, u16), Coefficient> = FxHashMap::default();
        let mut poly_pows: FxHashMap<(usize, u16), Polynomial> = FxHashMap::default();
        let mut acc: FxHashMap<Monomial, Coefficient> = FxHashMap::default();
        'terms: for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = m.exponents().to_vec();
            let mut factor: Option<Polynomial> = None;
            for (var, slot) in slots.iter().enumerate() {
                let e = m.exponent(var);
                if e == 0 {
                    continue;
                }
                match slot {
                    None => {}
                    Some(Binding::Constant(v)) => {
                        if v.is_zero() {
                            continue 'terms;
                        }
                        let p = const_pows.entry((var, e)).or_insert_with(|| num_traits::pow(v.clone(), e as usize));
                        coeff *= &*p;
                        rest[var] = 0;
                    }
                    Some(Binding::Poly(v)) => {
                        let p = match poly_pows.get(&(var, e)) {
                            Some(p) => p.clone(),
                            None => {
                                let p = v.pow(e as u32)?;
                                poly_pows.insert((var, e), p.clone());
                                p
                            }
                        };
                        factor = Some(match factor {
                            None => p,
                            Some(f) => f.checked_mul(&p)?,
                        });
                        rest[var] = 0;
                    }
                }
            }
            let rest = Monomial::from_exponents(rest);
            match factor {
                None => *acc.entry(rest).or_insert_with(Coefficient::zero) += coeff,
                Some(f) => {
                    for (fm, fc) in f.mul_term(&rest, &coeff)?.terms {
                        *acc.entry(fm).or_insert_with(Coefficient::zero) += fc;
                    }
                }
            }
        }
        Ok(Polynomial::from_map(&self.ring, acc))
    }

    /// Evaluates at a full assignment of every ring variable.
    pub fn evaluate(&self, point: &[Coefficient]) -> Result<Coefficient, RingError> {
        if point.len() != self.ring.variable_count() {
            return Err(RingError::MonomialLength { expected: self.ring.variable_count(), found: point.len() });
        }
        let mut total = Coefficient::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    pub fn embed(&self, target: &Ring) -> Result<Polynomial, RingError> {
        if self.ring.same_as(target) {
            return Ok(Polynomial { ring: target.clone(), terms: self.terms.clone() });
        }
        // only variables that actually occur need a counterpart in `target`
        let map: Vec<Option<usize>> = self
            .ring
            .names()
            .iter()
            .enumerate()
            .map(|(i, name)| if self.involves(i) { target.require(name).map(Some) } else { Ok(None) })
            .collect::<Result<_, _>>()?;
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u16; target.variable_count()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if let Some(j) = map[i] {
                    exps[j] = e;
                }
            }
            (Monomial::from_exponents(exps), c.clone())
        });
        Polynomial::from_terms(target, terms)
    }

    /// Sum of the absolute values of the coefficients.
    pub fn l1_norm(&self) -> Coefficient {
        self.terms.iter().map(|(_, c)| c.abs()).sum()
    }
}

fn overflow(ring: &Ring, var: usize) -> RingError {
    RingError::ExponentOverflow { variable: ring.name(var).to_string(), limit: ring.exponent_limit() }
}

fn sort_terms(order: MonomialOrder, terms: &mut [(Monomial, Coefficient)]) {
    terms.sort_unstable_by(|a, b| order.compare(&b.0, &a.0));
}

/// Integer coefficients `c · lcm(denominators)` and that common denominator.
fn integer_form(terms: &[(Monomial, Coefficient)]) -> (Vec<(&Monomial, BigInt)>, BigInt) {
    let denom = terms.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let ints = terms.iter().map(|(m, c)| (m, c.numer() * (&denom / c.denom()))).collect();
    (ints, denom)
}

/// True when every product and every partial sum fits in `i128`.
fn small_product_bound(a: &[(&Monomial, BigInt)], b: &[(&Monomial, BigInt)]) -> bool {
    let norm = |v: &[(&Monomial, BigInt)]| -> Option<i128> {
        v.iter().try_fold(0i128, |acc, (_, c)| acc.checked_add(c.abs().to_i64()? as i128))
    };
    match (norm(a), norm(b)) {
        (Some(x), Some(y)) => x.checked_mul(y).is_some_and(|p| p < (1i128 << 125)),
        _ => false,
    }
}

type Accumulator<C> = FxHashMap<Monomial, C>;

fn mul_accumulate<C, M, A>(
    a: &[(&Monomial, C)],
    b: &[(&Monomial, C)],
    limit: u16,
    mul: M,
    add: A,
) -> Result<Accumulator<C>, usize>
where
    C: Clone + Send + Sync,
    M: Fn(&C, &C) -> C + Sync,
    A: Fn(&mut C, C) + Sync,
{
    let nvars = a[0].0.len();
    let run = |chunk: &[(&Monomial, C)]| -> Result<Accumulator<C>, usize> {
        let mut acc: Accumulator<C> = FxHashMap::default();
        acc.reserve(chunk.len().max(b.len()));
        let mut scratch = vec![0u16; nvars];
        for (ma, ca) in chunk {
            for (mb, cb) in b {
                mul_into(ma.exponents(), mb.exponents(), limit, &mut scratch)?;
                let v = mul(ca, cb);
                match acc.get_mut(scratch.as_slice()) {
                    Some(slot) => add(slot, v),
                    None => {
                        acc.insert(Monomial::from_exponents(scratch.clone()), v);
                    }
                }
            }
        }
        Ok(acc)
    };
    if a.len() * b.len() < PARALLEL_MUL_THRESHOLD {
        return run(a);
    }
    let chunk = a.len().div_ceil(rayon::current_num_threads() * 4).max(1);
    a.par_chunks(chunk).map(run).try_reduce(FxHashMap::default, |mut x, y| {
        if x.len() < y.len() {
            return Ok(merge_maps(y, x, &add));
        }
        x = merge_maps(x, y, &add);
        Ok(x)
    })
}

fn merge_maps<C, A: Fn(&mut C, C)>(mut into: Accumulator<C>, from: Accumulator<C>, add: &A) -> Accumulator<C> {
    for (m, c) in from {
        match into.get_mut(&m) {
            Some(slot) => add(slot, c),
            None => {
                into.insert(m, c);
            }
        }
    }
    into
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// Panics if the operands live in different rings.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition across rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    /// Panics if the operands live in different rings.
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial subtraction across rings")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    /// Panics on ring mismatch or when the exponent guard trips.
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial multiplication failed")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial::from_sorted(&self.ring, terms)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}
