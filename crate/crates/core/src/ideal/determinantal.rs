use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{poly_det, subsets};
use crate::poly::Polynomial;
use crate::ring::Ring;

/// A matrix of polynomials, row-major.
pub type PolyMatrix<F> = Vec<Vec<Polynomial<F>>>;

fn shape<F: Field>(m: &PolyMatrix<F>) -> Result<(usize, usize)> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    if m.iter().any(|r| r.len() != cols) {
        return Err(Error::Precondition("ragged matrix".into()));
    }
    Ok((rows, cols))
}

/// All nonzero `k x k` minors, rows and columns in lex order of subsets.
pub fn minors<F: Field>(ring: &Ring<F>, m: &PolyMatrix<F>, k: usize) -> Result<Vec<Polynomial<F>>> {
    let (rows, cols) = shape(m)?;
    if k == 0 {
        return Ok(vec![Polynomial::one(ring)]);
    }
    if k > rows.min(cols) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            let sub: PolyMatrix<F> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect()).collect();
            let d = poly_det(ring, &sub);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    Ok(out)
}

fn check_alternating<F: Field>(m: &PolyMatrix<F>) -> Result<usize> {
    let (rows, cols) = shape(m)?;
    if rows != cols {
        return Err(Error::Precondition("alternating matrix must be square".into()));
    }
    for i in 0..rows {
        if !m[i][i].is_zero() {
            return Err(Error::Precondition(format!("diagonal entry ({i},{i}) is nonzero")));
        }
        for j in i + 1..rows {
            if !(&m[i][j] + &m[j][i]).is_zero() {
                return Err(Error::Precondition(format!("entries ({i},{j}) and ({j},{i}) are not opposite")));
            }
        }
    }
    Ok(rows)
}

/// Pfaffian of the principal submatrix on `idx`, by expansion along its first row.
fn pfaffian_of<F: Field>(ring: &Ring<F>, m: &PolyMatrix<F>, idx: &[usize]) -> Polynomial<F> {
    if idx.is_empty() {
        return Polynomial::one(ring);
    }
    if idx.len() % 2 == 1 {
        return Polynomial::zero(ring);
    }
    let first = idx[0];
    let mut acc = Polynomial::zero(ring);
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        let entry = &m[first][j];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx.iter().enumerate().filter(|&(p, _)| p != 0 && p != pos).map(|(_, &v)| v).collect();
        let t = entry * &pfaffian_of(ring, m, &rest);
        acc = if pos % 2 == 1 { &acc + &t } else { &acc - &t };
    }
    acc
}

/// Pfaffian of an alternating matrix.
pub fn pfaffian<F: Field>(ring: &Ring<F>, m: &PolyMatrix<F>) -> Result<Polynomial<F>> {
    let n = check_alternating(m)?;
    Ok(pfaffian_of(ring, m, &(0..n).collect::<Vec<_>>()))
}

/// The nonzero `k x k` Pfaffians (`k` even) of an alternating matrix, principal
/// index sets in lex order.
pub fn pfaffians<F: Field>(ring: &Ring<F>, m: &PolyMatrix<F>, k: usize) -> Result<Vec<Polynomial<F>>> {
    let n = check_alternating(m)?;
    if k % 2 == 1 {
        return Err(Error::Precondition(format!("Pfaffian size {k} is odd")));
    }
    Ok(subsets(n, k).iter().map(|s| pfaffian_of(ring, m, s)).filter(|p| !p.is_zero()).collect())
}

/// Matrix product `a * b`.
pub fn matrix_product<F: Field>(ring: &Ring<F>, a: &PolyMatrix<F>, b: &PolyMatrix<F>) -> Result<PolyMatrix<F>> {
    let (ar, ac) = shape(a)?;
    let (br, bc) = shape(b)?;
    if ac != br {
        return Err(Error::ArityMismatch { expected: ac, found: br });
    }
    Ok((0..ar)
        .map(|i| {
            (0..bc).map(|j| (0..ac).fold(Polynomial::zero(ring), |acc, k| &acc + &(&a[i][k] * &b[k][j]))).collect()
        })
        .collect())
}
