//! Changes of basis and the monomial/Chebyshev expansion tables.
//!
//! All conversions go through the power form in a common variable:
//! `source → power → (optional affine substitution) → target`.
//!
//! Two flavours exist because the bases disagree on their natural domain:
//!
//! * [`Bivariate::change_basis`] keeps the variable: the result is the same
//!   function of the same `(u, v)`. The solver uses this one, so every basis
//!   searches the same region for the same zeros.
//! * [`Bivariate::convert`] maps canonical domain onto canonical domain,
//!   `t_target = (t_source - l_s)/(h_s - l_s)·(h_t - l_t) + l_t`, so the
//!   function *on its natural interval* is preserved. Comparing bounding
//!   intervals across bases needs this one.
//!
//! Power and Chebyshev share `[-1, 1]`, so the two flavours coincide for them.

use super::bivariate::Axis;
use super::{Basis, BasisError, Bivariate, Coeff, Univariate};

/// Conversions touching the Bernstein basis use floating binomial sums and are
/// refused above this degree.
pub const MAX_BERNSTEIN_CONVERSION_DEGREE: usize = 20;

/// Binomial coefficient `C(n, k)` as a float (exact for the degrees used here).
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc.round()
}

fn binomial_row(n: usize) -> Vec<f64> {
    (0..=n).map(|k| binomial(n, k)).collect()
}

/// `d_{k,0..=k}` with `t^k = Σ_i d_{ki} T_i(t)`, built by the three-term
/// recurrence obtained from `t·T_i = (T_{i+1} + T_{i-1})/2`:
///
/// ```text
/// d_{k+1,0} = d_{k,1}/2
/// d_{k+1,1} = d_{k,2}/2 + d_{k,0}
/// d_{k+1,i} = (d_{k,i-1} + d_{k,i+1})/2      i >= 2
/// ```
pub fn monomial_to_chebyshev(k: usize) -> Vec<f64> {
    (0..k).fold(vec![1.0], |d, _| monomial_step(&d))
}

/// Lower-triangular table of [`monomial_to_chebyshev`] rows `0..=n`.
/// Every entry is nonnegative and every row sums to one.
#[derive(Debug, Clone, PartialEq)]
pub struct ConversionMatrix {
    rows: Vec<Vec<f64>>,
}

impl ConversionMatrix {
    pub fn new(n: usize) -> Self {
        let mut rows = Vec::with_capacity(n + 1);
        let mut d = vec![1.0];
        rows.push(d.clone());
        for _ in 0..n {
            d = monomial_step(&d);
            rows.push(d.clone());
        }
        Self { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// `d_{k,0..=k}`.
    pub fn row(&self, k: usize) -> &[f64] {
        &self.rows[k]
    }

    /// Entry `d_{ki}` (zero above the diagonal).
    pub fn get(&self, k: usize, i: usize) -> f64 {
        self.rows[k].get(i).copied().unwrap_or(0.0)
    }
}

fn monomial_step(d: &[f64]) -> Vec<f64> {
    let k = d.len() - 1;
    let get = |i: usize| d.get(i).copied().unwrap_or(0.0);
    let mut next = vec![0.0; k + 2];
    next[0] = get(1) / 2.0;
    next[1] = get(2) / 2.0 + get(0);
    for (i, slot) in next.iter_mut().enumerate().skip(2) {
        *slot = (get(i - 1) + get(i + 1)) / 2.0;
    }
    next
}

/// Power-basis coefficients of `T_i`, from `T_{i+1} = 2t T_i - T_{i-1}`.
pub fn chebyshev_power_coeffs(i: usize) -> Vec<f64> {
    chebyshev_power_table(i).pop().unwrap()
}

fn chebyshev_power_table(n: usize) -> Vec<Vec<f64>> {
    let mut table: Vec<Vec<f64>> = vec![vec![1.0]];
    if n >= 1 {
        table.push(vec![0.0, 1.0]);
    }
    for k in 2..=n {
        let mut next = vec![0.0; k + 1];
        for (p, &c) in table[k - 1].iter().enumerate() {
            next[p + 1] += 2.0 * c;
        }
        for (p, &c) in table[k - 2].iter().enumerate() {
            next[p] -= c;
        }
        table.push(next);
    }
    table
}

pub(crate) fn to_power<T: Coeff>(basis: Basis, c: &[T]) -> Vec<T> {
    let n = c.len() - 1;
    match basis {
        Basis::Power => c.to_vec(),
        Basis::Chebyshev => {
            let table = chebyshev_power_table(n);
            let mut a = vec![T::ZERO; n + 1];
            for (i, &ci) in c.iter().enumerate() {
                for (p, &d) in table[i].iter().enumerate() {
                    a[p] += ci * d;
                }
            }
            a
        }
        Basis::Bernstein => {
            // Z_{k,n}(t) = Σ_{j>=k} C(n,k) C(n-k, j-k) (-1)^{j-k} t^j
            let mut a = vec![T::ZERO; n + 1];
            for (k, &ck) in c.iter().enumerate() {
                let bnk = binomial(n, k);
                for (j, aj) in a.iter_mut().enumerate().skip(k) {
                    let sign = if (j - k) % 2 == 0 { 1.0 } else { -1.0 };
                    *aj += ck * (sign * bnk * binomial(n - k, j - k));
                }
            }
            a
        }
    }
}

pub(crate) fn from_power<T: Coeff>(basis: Basis, a: &[T]) -> Vec<T> {
    let n = a.len() - 1;
    match basis {
        Basis::Power => a.to_vec(),
        Basis::Chebyshev => {
            let d = ConversionMatrix::new(n);
            let mut c = vec![T::ZERO; n + 1];
            for (k, &ak) in a.iter().enumerate() {
                for (i, &dki) in d.row(k).iter().enumerate() {
                    c[i] += ak * dki;
                }
            }
            c
        }
        Basis::Bernstein => {
            // t^j = Σ_{k>=j} C(k,j)/C(n,j) Z_{k,n}(t)
            let row = binomial_row(n);
            let mut b = vec![T::ZERO; n + 1];
            for (j, &aj) in a.iter().enumerate() {
                for (k, slot) in b.iter_mut().enumerate().skip(j) {
                    *slot += aj * (binomial(k, j) / row[j]);
                }
            }
            b
        }
    }
}

/// Power coefficients of `q(s) = p(α s + β)`, by Horner's rule on polynomials.
pub(crate) fn substitute_affine<T: Coeff>(a: &[T], alpha: f64, beta: f64) -> Vec<T> {
    let n = a.len() - 1;
    let mut out: Vec<T> = Vec::with_capacity(n + 1);
    out.push(a[n]);
    for &ak in a[..n].iter().rev() {
        // out <- out·(α s + β) + a_k
        out.push(T::ZERO);
        for j in (1..out.len()).rev() {
            out[j] = out[j] * beta + out[j - 1] * alpha;
        }
        out[0] = out[0] * beta + ak;
    }
    out
}

/// Affine map `t_source = α t_target + β` carrying the target's canonical
/// domain onto the source's.
fn canonical_map(source: Basis, target: Basis) -> (f64, f64) {
    let (ls, hs) = source.canonical_domain();
    let (lt, ht) = target.canonical_domain();
    let alpha = (hs - ls) / (ht - lt);
    (alpha, ls - alpha * lt)
}

fn convert_line<T: Coeff>(source: Basis, target: Basis, c: &[T], map: Option<(f64, f64)>) -> Vec<T> {
    let map = map.filter(|&(alpha, beta)| alpha != 1.0 || beta != 0.0);
    if source == target && map.is_none() {
        return c.to_vec();
    }
    let mut a = to_power(source, c);
    if let Some((alpha, beta)) = map {
        a = substitute_affine(&a, alpha, beta);
    }
    from_power(target, &a)
}

fn check_degree(source: Basis, target: Basis, degree: usize) -> Result<(), BasisError> {
    let touches_bernstein = source == Basis::Bernstein || target == Basis::Bernstein;
    if touches_bernstein && source != target && degree > MAX_BERNSTEIN_CONVERSION_DEGREE {
        return Err(BasisError::DegreeLimit {
            degree,
            max: MAX_BERNSTEIN_CONVERSION_DEGREE,
        });
    }
    Ok(())
}

impl<T: Coeff> Univariate<T> {
    /// Same function of the same variable, expressed in `target`.
    pub fn change_basis(&self, target: Basis) -> Result<Self, BasisError> {
        check_degree(self.basis(), target, self.degree())?;
        Univariate::new(target, convert_line(self.basis(), target, self.coeffs(), None))
    }

    /// Same function on the canonical domain: the result evaluated at `t'`
    /// equals `self` at the corresponding point of its own canonical domain.
    pub fn convert(&self, target: Basis) -> Result<Self, BasisError> {
        check_degree(self.basis(), target, self.degree())?;
        let map = canonical_map(self.basis(), target);
        Univariate::new(target, convert_line(self.basis(), target, self.coeffs(), Some(map)))
    }
}

impl<T: Coeff> Bivariate<T> {
    /// Same function of the same `(u, v)`, expressed in `target`.
    pub fn change_basis(&self, target: Basis) -> Result<Self, BasisError> {
        self.convert_with(target, None)
    }

    /// Canonical-domain to canonical-domain conversion, applied along `u`
    /// then along `v`.
    pub fn convert(&self, target: Basis) -> Result<Self, BasisError> {
        self.convert_with(target, Some(canonical_map(self.basis(), target)))
    }

    fn convert_with(&self, target: Basis, map: Option<(f64, f64)>) -> Result<Self, BasisError> {
        let source = self.basis();
        let (m, n) = self.degrees();
        check_degree(source, target, m.max(n))?;
        let mut line = |c: &[T]| convert_line(source, target, c, map);
        let along_u = self.map_axis_to(target, Axis::U, &mut line);
        Ok(along_u.map_axis_to(target, Axis::V, &mut line))
    }
}

/// Product of two scalar Bernstein polynomials as a Bernstein polynomial of
/// degree `n + n'`:
/// `b_i = Σ_k C(n,k) C(n',i-k) / C(n+n',i) · c_k c'_{i-k}`.
pub fn bernstein_product(p: &Univariate<f64>, q: &Univariate<f64>) -> Result<Univariate<f64>, BasisError> {
    for basis in [p.basis(), q.basis()] {
        if basis != Basis::Bernstein {
            return Err(BasisError::WrongBasis {
                expected: Basis::Bernstein,
                actual: basis,
            });
        }
    }
    let (n, n2) = (p.degree(), q.degree());
    let total = n + n2;
    let b = (0..=total)
        .map(|i| {
            let lo = i.saturating_sub(n2);
            let hi = n.min(i);
            let denom = binomial(total, i);
            (lo..=hi)
                .map(|k| binomial(n, k) * binomial(n2, i - k) / denom * p.coeffs()[k] * q.coeffs()[i - k])
                .sum()
        })
        .collect();
    Univariate::new(Basis::Bernstein, b)
}
