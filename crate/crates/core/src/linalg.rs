//! Dense matrices over a field and determinants of polynomial matrices.

use rand::Rng;

use crate::field::Field;
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(f: &F, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![f.zero(); rows * cols] }
    }

    pub fn random<R: Rng + ?Sized>(f: &F, rows: usize, cols: usize, rng: &mut R) -> Self {
        Matrix { rows, cols, data: (0..rows * cols).map(|_| f.random(rng)).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self, f: &F) -> usize {
        let mut m = self.data.clone();
        let (r, c) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..c {
            let Some(p) = (rank..r).find(|&i| !f.is_zero(&m[i * c + col])) else { continue };
            for k in 0..c {
                m.swap(p * c + k, rank * c + k);
            }
            let inv = f.inv(&m[rank * c + col]);
            for i in 0..r {
                if i == rank || f.is_zero(&m[i * c + col]) {
                    continue;
                }
                let factor = f.mul(&m[i * c + col], &inv);
                for k in col..c {
                    let v = f.sub(&m[i * c + k], &f.mul(&factor, &m[rank * c + k]));
                    m[i * c + k] = v;
                }
            }
            rank += 1;
            if rank == r {
                break;
            }
        }
        rank
    }
}

impl<F: Field> Matrix<F> {
    /// Basis of `{v : M v = 0}`, one vector per free column of the echelon form.
    pub fn null_space(&self, f: &F) -> Vec<Vec<F::Elem>> {
        let mut m = self.data.clone();
        let (r, c) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..c {
            if row == r {
                break;
            }
            let Some(p) = (row..r).find(|&i| !f.is_zero(&m[i * c + col])) else { continue };
            for k in 0..c {
                m.swap(p * c + k, row * c + k);
            }
            let inv = f.inv(&m[row * c + col]);
            for k in col..c {
                m[row * c + k] = f.mul(&m[row * c + k], &inv);
            }
            for i in 0..r {
                if i == row || f.is_zero(&m[i * c + col]) {
                    continue;
                }
                let factor = m[i * c + col].clone();
                for k in col..c {
                    let v = f.sub(&m[i * c + k], &f.mul(&factor, &m[row * c + k]));
                    m[i * c + k] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        let mut is_pivot = vec![false; c];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..c)
            .filter(|&j| !is_pivot[j])
            .map(|j| {
                let mut v = vec![f.zero(); c];
                v[j] = f.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = f.neg(&m[i * c + j]);
                }
                v
            })
            .collect()
    }
}

/// A uniformly random invertible square matrix.
pub fn random_invertible<F: Field, R: Rng + ?Sized>(f: &F, n: usize, rng: &mut R) -> Matrix<F> {
    loop {
        let a = Matrix::random(f, n, n, rng);
        if a.rank(f) == n {
            return a;
        }
    }
}

/// Determinant of a square polynomial matrix by expansion along rows, sharing
/// the minors of the trailing rows (`O(2^k k)` products).
pub fn poly_det<F: Field>(ring: &Ring<F>, m: &[Vec<Polynomial<F>>]) -> Polynomial<F> {
    let k = m.len();
    if k == 0 {
        return Polynomial::one(ring);
    }
    assert!(m.iter().all(|r| r.len() == k), "square matrix expected");
    assert!(k < usize::BITS as usize, "matrix too large");
    // minors[S] = det of rows (k - |S|).. restricted to the column set S.
    let mut minors: Vec<Option<Polynomial<F>>> = vec![None; 1 << k];
    minors[0] = Some(Polynomial::one(ring));
    let mut sets: Vec<usize> = (1..1usize << k).collect();
    sets.sort_by_key(|s| s.count_ones());
    for s in sets {
        let row = k - s.count_ones() as usize;
        let mut acc = Polynomial::zero(ring);
        let mut sign_pos = true;
        for c in 0..k {
            if s & (1 << c) == 0 {
                continue;
            }
            let entry = &m[row][c];
            if !entry.is_zero() {
                if let Some(sub) = &minors[s & !(1 << c)] {
                    let t = entry * sub;
                    acc = if sign_pos { &acc + &t } else { &acc - &t };
                }
            }
            sign_pos = !sign_pos;
        }
        minors[s] = Some(acc);
    }
    minors[(1 << k) - 1].take().unwrap()
}

/// One `k`-subset of `0..n` after another in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
