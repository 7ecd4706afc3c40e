//! Sylvester resultants by fraction-free (Bareiss) elimination.

use crate::error::{Error, Result};
use crate::polyring::field::Field;
use crate::polyring::monomial::Monomial;
use crate::polyring::polynomial::Polynomial;

/// `res(F, G, x) = A*F + B*G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultantCofactors<F: Field> {
    pub resultant: Polynomial<F>,
    pub cofactor_f: Polynomial<F>,
    pub cofactor_g: Polynomial<F>,
}

impl<F: Field> ResultantCofactors<F> {
    pub fn verify(&self, f: &Polynomial<F>, g: &Polynomial<F>) -> bool {
        (&(&self.cofactor_f * f) + &(&self.cofactor_g * g)) == self.resultant
    }
}

fn degrees<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, var: usize) -> Result<(i64, i64)> {
    let (m, n) = (f.degree(var), g.degree(var));
    if m <= 0 && n <= 0 {
        return Err(Error::DegenerateResultant { var: f.order().name(var).to_string() });
    }
    Ok((m, n))
}

/// Rows `x^{n-1}F, ..., F, x^{m-1}G, ..., G` in the basis `x^{m+n-1}, ..., 1`.
fn sylvester<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, var: usize) -> Vec<Vec<Polynomial<F>>> {
    let (m, n) = (f.degree(var) as usize, g.degree(var) as usize);
    let size = m + n;
    let zero = Polynomial::zero(f.ring());
    let fc = f.coefficients_in(var);
    let gc = g.coefficients_in(var);
    let mut rows = Vec::with_capacity(size);
    for r in 0..n {
        let mut row = vec![zero.clone(); size];
        for (i, c) in fc.iter().rev().enumerate() {
            row[r + i] = c.clone();
        }
        rows.push(row);
    }
    for s in 0..m {
        let mut row = vec![zero.clone(); size];
        for (i, c) in gc.iter().rev().enumerate() {
            row[s + i] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Fraction-free elimination over the first `size - 1` columns. The last
/// column holds vectors so several determinants sharing the leading columns
/// are computed at once (the determinant is linear in the last column).
fn bareiss<F: Field>(mut lead: Vec<Vec<Polynomial<F>>>, mut last: Vec<Vec<Polynomial<F>>>) -> Option<Vec<Polynomial<F>>> {
    let size = lead.len();
    let ring = last[0][0].ring().clone();
    let mut prev = Polynomial::one(&ring);
    let mut negate = false;
    for k in 0..size.saturating_sub(1) {
        if lead[k][k].is_zero() {
            let swap = (k + 1..size).find(|&i| !lead[i][k].is_zero())?;
            lead.swap(k, swap);
            last.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size - 1 {
                let num = &(&lead[i][j] * &lead[k][k]) - &(&lead[i][k] * &lead[k][j]);
                lead[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            let updated: Vec<_> = last[i]
                .iter()
                .zip(&last[k])
                .map(|(own, pivot_row)| {
                    let num = &(own * &lead[k][k]) - &(&lead[i][k] * pivot_row);
                    num.exact_div(&prev).expect("Bareiss division is exact")
                })
                .collect();
            last[i] = updated;
            lead[i][k] = Polynomial::zero(&ring);
        }
        prev = lead[k][k].clone();
    }
    let det = last.pop().expect("nonempty matrix");
    Some(if negate { det.iter().map(|p| -p).collect() } else { det })
}

/// Sylvester resultant of `f` and `g` with respect to `var`.
///
/// A zero argument against a positive-degree one gives 0. Two arguments of
/// degree 0 are rejected.
pub fn resultant<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, var: usize) -> Result<Polynomial<F>> {
    let (m, n) = degrees(f, g, var)?;
    if m < 0 || n < 0 {
        return Ok(Polynomial::zero(f.ring()));
    }
    let mut rows = sylvester(f, g, var);
    let last: Vec<Vec<Polynomial<F>>> = rows.iter_mut().map(|r| vec![r.pop().expect("row")]).collect();
    let lead = rows.into_iter().map(|mut r| {
        r.push(Polynomial::zero(f.ring()));
        r
    });
    Ok(bareiss(lead.collect(), last)
        .map(|mut v| v.remove(0))
        .unwrap_or_else(|| Polynomial::zero(f.ring())))
}

/// Resultant together with cofactors `A`, `B` such that `res = A F + B G`.
///
/// The last Sylvester column is replaced by the row polynomials themselves,
/// `x^{n-1-i}` on the `F` rows and `x^{m-1-j}` on the `G` rows, tracked as two
/// separate components; expanding along that column yields the cofactors.
pub fn resultant_with_cofactors<F: Field>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
    var: usize,
) -> Result<ResultantCofactors<F>> {
    let (m, n) = degrees(f, g, var)?;
    let ring = f.ring();
    let zero = Polynomial::zero(ring);
    if m < 0 || n < 0 {
        return Ok(ResultantCofactors { resultant: zero.clone(), cofactor_f: zero.clone(), cofactor_g: zero });
    }
    let (m, n) = (m as usize, n as usize);
    let one = ring.one_coeff();
    let xpow = |e: usize| Polynomial::monomial(ring, one.clone(), Monomial::var(ring.nvars(), var, e as u32));
    let mut rows = sylvester(f, g, var);
    let mut last = Vec::with_capacity(m + n);
    for (i, row) in rows.iter_mut().enumerate() {
        row.pop();
        if i < n {
            last.push(vec![xpow(n - 1 - i), zero.clone()]);
        } else {
            last.push(vec![zero.clone(), xpow(m - 1 - (i - n))]);
        }
        row.push(zero.clone());
    }
    let (cofactor_f, cofactor_g) = match bareiss(rows, last) {
        Some(v) => (v[0].clone(), v[1].clone()),
        None => (zero.clone(), zero.clone()),
    };
    let resultant = &(&cofactor_f * f) + &(&cofactor_g * g);
    Ok(ResultantCofactors { resultant, cofactor_f, cofactor_g })
}
