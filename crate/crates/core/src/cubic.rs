//! Degree-three tooling: the normalized generic cubic, the perfect-cube test
//! for cubic forms, and quadratic forms as symmetric matrices.

use num_traits::Zero;

use crate::calculus::HT;
use crate::ring::{cube_root, integer, Coefficient, Monomial, MonomialOrder, Polynomial, Ring, RingContext, RingError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CubicError {
    #[error("dimension must be at least 3, got {0}")]
    DimensionTooSmall(usize),
    #[error("expected a homogeneous cubic form in the geometric variables")]
    NotCubicForm,
    #[error("expected a quadratic form in the designated variables")]
    NotQuadraticForm,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Symbolic data of `f = x^3 + y'Ay + k0 x^2 + (r'y) x + k1 x + s'y`.
///
/// Geometric variables are `x1..xn` with `x = x1` and `y_i = x_{i+1}`.
/// Parameters are `Ht, k0, k1`, then the upper triangle of `A` row by row,
/// then `r_i` and `s_i`.
#[derive(Debug, Clone)]
pub struct GenericCubicSpec {
    pub n: usize,
    ring: Ring,
    /// `a_names[i][j]` for `i <= j`, zero-based.
    a_names: Vec<Vec<String>>,
    r_names: Vec<String>,
    s_names: Vec<String>,
}

fn index_suffix(i: usize, j: usize, m: usize) -> String {
    if m < 10 {
        format!("{i}{j}")
    } else {
        format!("{i}_{j}")
    }
}

impl GenericCubicSpec {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// `y` block size `m = n - 1`.
    pub fn m(&self) -> usize {
        self.n - 1
    }

    pub fn parameter_count(&self) -> usize {
        self.ring.parameter_count()
    }

    fn var(&self, name: &str) -> Polynomial {
        Polynomial::var(&self.ring, name).expect("declared when the ring was built")
    }

    pub fn x(&self) -> Polynomial {
        Polynomial::variable(&self.ring, 0)
    }

    /// Zero-based: `y(0)` is `x2`.
    pub fn y(&self, i: usize) -> Polynomial {
        Polynomial::variable(&self.ring, i + 1)
    }

    pub fn y_names(&self) -> Vec<String> {
        (0..self.m()).map(|i| self.ring.name(i + 1).to_string()).collect()
    }

    pub fn ht(&self) -> Polynomial {
        self.var(HT)
    }

    pub fn k0(&self) -> Polynomial {
        self.var("k0")
    }

    pub fn k1(&self) -> Polynomial {
        self.var("k1")
    }

    pub fn a(&self, i: usize, j: usize) -> Polynomial {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        self.var(&self.a_names[i][j - i])
    }

    pub fn a_name(&self, i: usize, j: usize) -> &str {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        &self.a_names[i][j - i]
    }

    pub fn r(&self, i: usize) -> Polynomial {
        self.var(&self.r_names[i])
    }

    pub fn s(&self, i: usize) -> Polynomial {
        self.var(&self.s_names[i])
    }

    pub fn parameter_names(&self) -> &[String] {
        &self.ring.names()[self.n..]
    }

    pub fn matrix_a(&self) -> SymMatrix {
        let m = self.m();
        let entries = (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).map(|(i, j)| self.a(i, j)).collect();
        SymMatrix { size: m, entries }
    }

    pub fn trace_a(&self) -> Polynomial {
        (0..self.m()).fold(Polynomial::zero(&self.ring), |acc, i| &acc + &self.a(i, i))
    }

    /// `Σ_j a_ij y_j`
    pub fn a_times_y(&self, i: usize) -> Polynomial {
        (0..self.m()).fold(Polynomial::zero(&self.ring), |acc, j| &acc + &(&self.a(i, j) * &self.y(j)))
    }

    /// `y'Ay`
    pub fn quad_form(&self) -> Polynomial {
        (0..self.m()).fold(Polynomial::zero(&self.ring), |acc, i| &acc + &(&self.y(i) * &self.a_times_y(i)))
    }

    pub fn r_dot_y(&self) -> Polynomial {
        (0..self.m()).fold(Polynomial::zero(&self.ring), |acc, i| &acc + &(&self.r(i) * &self.y(i)))
    }

    pub fn s_dot_y(&self) -> Polynomial {
        (0..self.m()).fold(Polynomial::zero(&self.ring), |acc, i| &acc + &(&self.s(i) * &self.y(i)))
    }

    pub fn f3(&self) -> Polynomial {
        self.x().pow(3).expect("small exponent")
    }

    pub fn f2(&self) -> Polynomial {
        let x = self.x();
        &(&self.quad_form() + &(&self.k0() * &(&x * &x))) + &(&self.r_dot_y() * &x)
    }

    pub fn f1(&self) -> Polynomial {
        &(&self.k1() * &self.x()) + &self.s_dot_y()
    }

    pub fn polynomial(&self) -> Polynomial {
        &(&self.f3() + &self.f2()) + &self.f1()
    }
}

/// The generic normalized cubic in dimension `n`.
pub fn generic_cubic(n: usize) -> Result<(Polynomial, GenericCubicSpec), CubicError> {
    if n < 3 {
        return Err(CubicError::DimensionTooSmall(n));
    }
    let m = n - 1;
    let a_names: Vec<Vec<String>> =
        (1..=m).map(|i| (i..=m).map(|j| format!("a{}", index_suffix(i, j, m))).collect()).collect();
    let r_names: Vec<String> = (1..=m).map(|i| format!("r{i}")).collect();
    let s_names: Vec<String> = (1..=m).map(|i| format!("s{i}")).collect();
    let params = [HT.to_string(), "k0".into(), "k1".into()]
        .into_iter()
        .chain(a_names.iter().flatten().cloned())
        .chain(r_names.iter().cloned())
        .chain(s_names.iter().cloned());
    let ring = RingContext::builder()
        .geometric((1..=n).map(|i| format!("x{i}")))
        .parameters(params)
        .order(MonomialOrder::Lex)
        .build()?;
    let spec = GenericCubicSpec { n, ring, a_names, r_names, s_names };
    Ok((spec.polynomial(), spec))
}

/// Returns `l` with `l^3 = c` when the homogeneous cubic `c` is a perfect
/// cube of a rational linear form.
pub fn cube_root_cubic_form(c: &Polynomial) -> Result<Option<Polynomial>, CubicError> {
    let ring = c.ring();
    if c.is_zero() {
        return Ok(Some(Polynomial::zero(ring)));
    }
    let g = ring.geometric_count();
    let is_form = c.terms().iter().all(|(m, _)| m.leading_degree(g) == 3 && m.total_degree() == 3);
    if !is_form {
        return Err(CubicError::NotCubicForm);
    }
    let pure = |k: usize, e: u16, j: Option<usize>| {
        let mut exps = vec![0u16; ring.variable_count()];
        exps[k] = e;
        if let Some(j) = j {
            exps[j] += 1;
        }
        Monomial::from_exponents(exps)
    };
    let Some((k, lead)) = (0..g).map(|k| (k, c.coefficient_of(&pure(k, 3, None)))).find(|(_, coeff)| !coeff.is_zero())
    else {
        return Ok(None);
    };
    let Some(a) = cube_root(&lead) else {
        return Ok(None);
    };
    let three_a_sq = integer(3) * &a * &a;
    let mut terms = vec![(pure(k, 1, None), a.clone())];
    for j in (0..g).filter(|&j| j != k) {
        let cross: Coefficient = c.coefficient_of(&pure(k, 2, Some(j)));
        terms.push((pure(j, 1, None), cross / &three_a_sq));
    }
    let l = Polynomial::from_terms(ring, terms)?;
    Ok((&l.pow(3)? == c).then_some(l))
}

/// Symmetric matrix with polynomial (usually parameter-only) entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    size: usize,
    entries: Vec<Polynomial>,
}

impl SymMatrix {
    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self, CubicError> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(CubicError::NotSymmetric);
        }
        let entries: Vec<Polynomial> = rows.into_iter().flatten().collect();
        let m = SymMatrix { size, entries };
        for i in 0..size {
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(CubicError::NotSymmetric);
                }
            }
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.size + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    /// `y'My` over the given variables.
    pub fn to_form(&self, ring: &Ring, vars: &[usize]) -> Result<Polynomial, CubicError> {
        if vars.len() != self.size {
            return Err(CubicError::NotQuadraticForm);
        }
        let mut acc = Polynomial::zero(ring);
        for i in 0..self.size {
            for j in 0..self.size {
                let yy = Polynomial::variable(ring, vars[i]).checked_mul(&Polynomial::variable(ring, vars[j]))?;
                acc = acc.checked_add(&self.get(i, j).embed(ring)?.checked_mul(&yy)?)?;
            }
        }
        Ok(acc)
    }
}

/// The unique symmetric `A` with `q = y'Ay`, where `y` are the variables at
/// `vars`. Entries may involve parameters; no other geometric variable may
/// appear in `q`.
pub fn quad_form_to_matrix(q: &Polynomial, vars: &[usize]) -> Result<SymMatrix, CubicError> {
    let ring = q.ring();
    let size = vars.len();
    let mut entries: Vec<Vec<(Monomial, Coefficient)>> = vec![Vec::new(); size * size];
    let half = Coefficient::new(1.into(), 2.into());
    for (m, c) in q.terms() {
        for var in 0..ring.geometric_count() {
            if m.exponent(var) > 0 && !vars.contains(&var) {
                return Err(CubicError::NotQuadraticForm);
            }
        }
        let hits: Vec<(usize, u16)> =
            vars.iter().enumerate().filter(|(_, &v)| m.exponent(v) > 0).map(|(i, &v)| (i, m.exponent(v))).collect();
        let mut rest = m.clone();
        for &v in vars {
            rest = rest.with_exponent(v, 0);
        }
        match hits.as_slice() {
            [(i, 2)] => entries[i * size + i].push((rest, c.clone())),
            [(i, 1), (j, 1)] => {
                entries[i * size + j].push((rest.clone(), c * &half));
                entries[j * size + i].push((rest, c * &half));
            }
            _ => return Err(CubicError::NotQuadraticForm),
        }
    }
    let entries = entries.into_iter().map(|terms| Polynomial::from_terms(ring, terms)).collect::<Result<_, _>>()?;
    Ok(SymMatrix { size, entries })
}
