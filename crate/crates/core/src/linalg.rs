//! Exact dense linear algebra over a `Field`.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalars::{Field, Rational};

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

pub type RationalMatrix = Matrix<Rational>;

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Columns given as vectors of equal length.
    pub fn from_cols(cols: &[Vec<F>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: F) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out: Matrix<F> = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).clone() + a.clone() * b.clone();
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn add(&self, o: &Matrix<F>) -> Matrix<F> {
        self.zip(o, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, o: &Matrix<F>) -> Matrix<F> {
        self.zip(o, |a, b| a.clone() - b.clone())
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    fn zip(&self, o: &Matrix<F>, f: impl Fn(&F, &F) -> F) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "dimension mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Commutator `AB - BA`.
    pub fn commutator(&self, o: &Matrix<F>) -> Matrix<F> {
        self.mul(o).sub(&o.mul(self))
    }

    /// Reduced row echelon form in place; returns pivot columns. The pivot in
    /// each column is the first nonzero entry at or below the current row.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = F::one() / self.get(r, c).clone();
            for j in c..self.cols {
                let v = self.get(r, j).clone() * inv.clone();
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let rj = self.get(r, j);
                    if !rj.is_zero() {
                        let v = self.get(i, j).clone() - f.clone() * rj.clone();
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : Mx = 0}`, one vector per free column, with a 1 in that column.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.get(r, f).clone();
                }
                v
            })
            .collect()
    }

    /// One solution of `Mx = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows, "dimension mismatch");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        Ok(())
    }
}

/// Scales `v` so its first nonzero entry is 1.
pub fn normalize_first<F: Field>(v: &[F]) -> Vec<F> {
    match v.iter().find(|x| !x.is_zero()) {
        None => v.to_vec(),
        Some(p) => {
            let inv = F::one() / p.clone();
            v.iter().map(|x| x.clone() * inv.clone()).collect()
        }
    }
}

/// Scalar `c` with `a = c·b`, if one exists.
pub fn proportionality<F: Field>(a: &[F], b: &[F]) -> Option<F> {
    assert_eq!(a.len(), b.len());
    let k = b.iter().position(|x| !x.is_zero())?;
    let c = a[k].clone() / b[k].clone();
    a.iter().zip(b).all(|(x, y)| *x == c.clone() * y.clone()).then_some(c)
}

/// Characteristic polynomial `det(xI - M)` by Faddeev-LeVerrier, coefficients
/// from the constant term up; the leading coefficient is 1.
pub fn char_poly(m: &RationalMatrix) -> Vec<Rational> {
    let n = m.rows();
    assert_eq!(n, m.cols(), "square matrix required");
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = Matrix::<Rational>::zeros(n, n);
    for k in 1..=n {
        let mut next = m.mul(&mk);
        for i in 0..n {
            let v = next.get(i, i) + &coeffs[n + 1 - k];
            next.set(i, i, v);
        }
        mk = next;
        let am = m.mul(&mk);
        let tr: Rational = (0..n).map(|i| am.get(i, i).clone()).sum();
        coeffs[n - k] = -tr / Rational::from_integer(k.into());
    }
    coeffs
}

fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn divisors(n: &num_bigint::BigInt) -> Vec<num_bigint::BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = num_bigint::BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            out.push(d.clone());
            let q = &n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
    }
    out
}

/// Distinct rational roots of `p` (low-to-high coefficients) with multiplicity,
/// sorted ascending, plus whether they exhaust the degree.
pub fn rational_roots(p: &[Rational]) -> (Vec<(Rational, usize)>, bool) {
    let mut poly: Vec<Rational> = p.to_vec();
    while poly.len() > 1 && poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    let degree = poly.len() - 1;
    let mut roots: Vec<(Rational, usize)> = Vec::new();
    let mut zeros = 0;
    while poly.len() > 1 && poly[0].is_zero() {
        poly.remove(0);
        zeros += 1;
    }
    if zeros > 0 {
        roots.push((Rational::zero(), zeros));
    }
    let lcm = poly.iter().fold(num_bigint::BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<num_bigint::BigInt> =
        poly.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    if ints.len() > 1 {
        let lead = ints.last().cloned().expect("nonempty");
        let cons = ints[0].clone();
        let mut cands: Vec<Rational> = Vec::new();
        for a in divisors(&cons) {
            for b in divisors(&lead) {
                for s in [1, -1] {
                    let r = Rational::new(a.clone() * s, b.clone());
                    if !cands.contains(&r) {
                        cands.push(r);
                    }
                }
            }
        }
        for r in cands {
            let mut mult = 0;
            while poly.len() > 1 && eval(&poly, &r).is_zero() {
                poly = deflate(&poly, &r);
                mult += 1;
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    let found: usize = roots.iter().map(|r| r.1).sum();
    (roots, found == degree)
}

/// Divides by `(x - r)`, assuming `r` is a root.
fn deflate(p: &[Rational], r: &Rational) -> Vec<Rational> {
    let n = p.len() - 1;
    let mut q = vec![Rational::zero(); n];
    let mut carry = Rational::zero();
    for k in (0..n).rev() {
        carry = &p[k + 1] + &carry * r;
        q[k] = carry.clone();
    }
    q
}
