//! Square matrices over a [`RingSpec`] and small exact matrices over the
//! coefficient domains `Z[τ]` and `Z[i]`.
//!
//! Convention throughout the crate: matrices act on coordinate *columns*, so
//! the `j`-th column of `M` is the image of the `j`-th basis vector.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use crate::rings::{Elem, RingSpec};

/// Entry storage; 4×4 matrices stay inline.
type Entries = SmallVec<[Elem; 16]>;

/// An `n × n` matrix over a finite ring, stored row-major.
///
/// The ring is passed to every operation rather than stored, so matrices are
/// plain values that hash and compare by entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    data: Entries,
}

impl Matrix {
    /// The zero matrix.
    pub fn zero(n: usize) -> Self {
        Self { n, data: SmallVec::from_elem(Elem::ZERO, n * n) }
    }

    /// The identity matrix.
    pub fn identity(ring: &RingSpec, n: usize) -> Self {
        Self::scalar(ring.one(), n)
    }

    /// `λ·I`.
    pub fn scalar(lambda: Elem, n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = lambda;
        }
        m
    }

    /// Builds a matrix from `n²` row-major entries.
    ///
    /// # Panics
    /// If `entries.len() != n²`.
    pub fn from_entries(n: usize, entries: &[Elem]) -> Self {
        assert_eq!(entries.len(), n * n, "expected {} entries", n * n);
        Self { n, data: SmallVec::from_slice(entries) }
    }

    /// Builds a matrix from small integers, reduced into `ring`.
    pub fn from_ints(ring: &RingSpec, rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), n, "matrix must be square");
                r.iter().map(|&x| ring.from_int(x))
            })
            .collect();
        Self { n, data }
    }

    /// Dimension.
    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Row-major entries.
    #[inline]
    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    /// Entry `(i, j)`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.n + j]
    }

    /// Sets entry `(i, j)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.n + j] = v;
    }

    /// Row `i` as a vector.
    pub fn row(&self, i: usize) -> Vec<Elem> {
        self.data[i * self.n..(i + 1) * self.n].to_vec()
    }

    /// Column `j` as a vector.
    pub fn col(&self, j: usize) -> Vec<Elem> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    /// `self · other`.
    pub fn mul(&self, other: &Matrix, ring: &RingSpec) -> Matrix {
        let n = self.n;
        debug_assert_eq!(n, other.n);
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == Elem::ZERO {
                    continue;
                }
                for j in 0..n {
                    let b = other.data[k * n + j];
                    if b != Elem::ZERO {
                        let idx = i * n + j;
                        out.data[idx] = ring.add(out.data[idx], ring.mul(a, b));
                    }
                }
            }
        }
        out
    }

    /// `self^k`.
    pub fn pow(&self, mut k: u64, ring: &RingSpec) -> Matrix {
        let mut result = Matrix::identity(ring, self.n);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base, ring);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base, ring);
            }
        }
        result
    }

    /// Transpose.
    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j];
            }
        }
        out
    }

    /// `λ·self`.
    pub fn scale(&self, lambda: Elem, ring: &RingSpec) -> Matrix {
        Matrix { n: self.n, data: self.data.iter().map(|&x| ring.mul(lambda, x)).collect() }
    }

    /// Applies a ring map entrywise.
    pub fn map(&self, f: impl Fn(Elem) -> Elem) -> Matrix {
        Matrix { n: self.n, data: self.data.iter().map(|&x| f(x)).collect() }
    }

    /// `self · v` for a column vector `v`.
    pub fn apply(&self, v: &[Elem], ring: &RingSpec) -> Vec<Elem> {
        (0..self.n)
            .map(|i| dot(&self.data[i * self.n..(i + 1) * self.n], v, ring))
            .collect()
    }

    /// `v · self` for a row vector `v`.
    pub fn apply_right(&self, v: &[Elem], ring: &RingSpec) -> Vec<Elem> {
        (0..self.n)
            .map(|j| {
                (0..self.n).fold(ring.zero(), |acc, i| ring.add(acc, ring.mul(v[i], self.get(i, j))))
            })
            .collect()
    }

    /// Whether this is the identity.
    pub fn is_identity(&self, ring: &RingSpec) -> bool {
        self.is_scalar() == Some(ring.one())
    }

    /// `Some(λ)` when `self = λ·I`.
    pub fn is_scalar(&self) -> Option<Elem> {
        let n = self.n;
        let lambda = self.data[0];
        for i in 0..n {
            for j in 0..n {
                let want = if i == j { lambda } else { Elem::ZERO };
                if self.data[i * n + j] != want {
                    return None;
                }
            }
        }
        Some(lambda)
    }

    /// Determinant by cofactor expansion along the first row (works over any
    /// commutative ring; dimensions here are at most a handful).
    pub fn det(&self, ring: &RingSpec) -> Elem {
        let rows: Vec<Vec<Elem>> = (0..self.n).map(|i| self.row(i)).collect();
        det_rec(&rows, ring)
    }

    /// Inverse via the adjugate, when the determinant is a unit.
    pub fn inverse(&self, ring: &RingSpec) -> Option<Matrix> {
        let n = self.n;
        let d_inv = ring.inv(self.det(ring))?;
        if n == 1 {
            return Some(Matrix::scalar(d_inv, 1));
        }
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let minor: Vec<Vec<Elem>> = (0..n)
                    .filter(|&r| r != i)
                    .map(|r| (0..n).filter(|&c| c != j).map(|c| self.get(r, c)).collect())
                    .collect();
                let mut c = det_rec(&minor, ring);
                if (i + j) % 2 == 1 {
                    c = ring.neg(c);
                }
                // adj(M)[j][i] = cofactor(i, j)
                out.set(j, i, ring.mul(c, d_inv));
            }
        }
        Some(out)
    }

    /// Whether `selfᵀ · form · self = form`.
    pub fn preserves_form(&self, form: &Matrix, ring: &RingSpec) -> bool {
        self.transpose().mul(form, ring).mul(self, ring) == *form
    }

    /// Conjugates by `p`: returns `p⁻¹ · self · p` given `p_inv`.
    pub fn conjugate_by(&self, p: &Matrix, p_inv: &Matrix, ring: &RingSpec) -> Matrix {
        p_inv.mul(self, ring).mul(p, ring)
    }

    /// The `k × k` leading principal block.
    pub fn leading_block(&self, k: usize) -> Matrix {
        let mut out = Matrix::zero(k);
        for i in 0..k {
            for j in 0..k {
                out.set(i, j, self.get(i, j));
            }
        }
        out
    }

    /// Sub-matrix on the given rows/columns.
    pub fn principal_submatrix(&self, idx: &[usize]) -> Matrix {
        let k = idx.len();
        let mut out = Matrix::zero(k);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                out.set(a, b, self.get(i, j));
            }
        }
        out
    }
}

/// `Σ u_k v_k`.
pub fn dot(u: &[Elem], v: &[Elem], ring: &RingSpec) -> Elem {
    u.iter().zip(v).fold(ring.zero(), |acc, (&a, &b)| ring.add(acc, ring.mul(a, b)))
}

/// `uᵀ · form · v`.
pub fn bilinear(form: &Matrix, u: &[Elem], v: &[Elem], ring: &RingSpec) -> Elem {
    dot(u, &form.apply(v, ring), ring)
}

fn det_rec(rows: &[Vec<Elem>], ring: &RingSpec) -> Elem {
    let n = rows.len();
    match n {
        0 => ring.one(),
        1 => rows[0][0],
        2 => ring.sub(ring.mul(rows[0][0], rows[1][1]), ring.mul(rows[0][1], rows[1][0])),
        _ => {
            let mut acc = ring.zero();
            for j in 0..n {
                let a = rows[0][j];
                if a == Elem::ZERO {
                    continue;
                }
                let minor: Vec<Vec<Elem>> = rows[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let term = ring.mul(a, det_rec(&minor, ring));
                acc = if j % 2 == 0 { ring.add(acc, term) } else { ring.sub(acc, term) };
            }
            acc
        }
    }
}

/// Reduced row echelon form over a field. Returns the reduced rows and the
/// pivot columns. `rows` may be rectangular.
///
/// # Panics
/// If the ring is not a field and a pivot is not invertible.
pub fn rref(rows: &[Vec<Elem>], ring: &RingSpec) -> (Vec<Vec<Elem>>, Vec<usize>) {
    let mut m: Vec<Vec<Elem>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| m[i][c] != Elem::ZERO) else {
            continue;
        };
        m.swap(r, p);
        let inv = ring.inv(m[r][c]).expect("rref needs a field");
        for x in m[r].iter_mut() {
            *x = ring.mul(*x, inv);
        }
        for i in 0..nrows {
            if i != r && m[i][c] != Elem::ZERO {
                let f = m[i][c];
                for k in 0..ncols {
                    let v = ring.mul(f, m[r][k]);
                    m[i][k] = ring.sub(m[i][k], v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Rank over a field.
pub fn rank(m: &Matrix, ring: &RingSpec) -> usize {
    let rows: Vec<Vec<Elem>> = (0..m.dim()).map(|i| m.row(i)).collect();
    rref(&rows, ring).1.len()
}

/// A basis of the right null space `{v : M v = 0}` over a field, one vector
/// per free column with that free variable set to `1`.
pub fn null_space(m: &Matrix, ring: &RingSpec) -> Vec<Vec<Elem>> {
    let n = m.dim();
    let rows: Vec<Vec<Elem>> = (0..n).map(|i| m.row(i)).collect();
    let (r, pivots) = rref(&rows, ring);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![ring.zero(); n];
            v[f] = ring.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = ring.neg(r[row][f]);
            }
            v
        })
        .collect()
}

/// Extends linearly independent vectors to a basis of `ring^n` with standard
/// basis vectors; the given vectors come last.
pub fn complete_basis(vs: &[Vec<Elem>], n: usize, ring: &RingSpec) -> Vec<Vec<Elem>> {
    let mut chosen: Vec<Vec<Elem>> = Vec::new();
    for k in 0..n {
        let mut e = vec![ring.zero(); n];
        e[k] = ring.one();
        let mut trial: Vec<Vec<Elem>> = chosen.iter().chain(vs).cloned().collect();
        trial.push(e.clone());
        if rref(&trial, ring).1.len() == trial.len() {
            chosen.push(e);
        }
        if chosen.len() + vs.len() == n {
            break;
        }
    }
    chosen.extend(vs.iter().cloned());
    chosen
}

/// The matrix whose columns are the given vectors.
pub fn from_columns(cols: &[Vec<Elem>]) -> Matrix {
    let n = cols.len();
    let mut m = Matrix::zero(n);
    for (j, c) in cols.iter().enumerate() {
        for (i, &x) in c.iter().enumerate() {
            m.set(i, j, x);
        }
    }
    m
}

/// A small dense matrix over an exact coefficient domain (`Z[τ]` or `Z[i]`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DomainMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T> DomainMatrix<T>
where
    T: Copy + PartialEq + From<i64> + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>,
{
    /// Builds a matrix from rows.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self { n, data: rows.into_iter().flatten().collect() }
    }

    /// The identity.
    pub fn identity(n: usize) -> Self {
        let mut data = vec![T::from(0); n * n];
        for i in 0..n {
            data[i * n + i] = T::from(1);
        }
        Self { n, data }
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    /// Sets entry `(i, j)`.
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[T] {
        &self.data
    }

    /// Exact product.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut data = vec![T::from(0); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = T::from(0);
                for k in 0..n {
                    acc = acc + self.data[i * n + k] * other.data[k * n + j];
                }
                data[i * n + j] = acc;
            }
        }
        Self { n, data }
    }

    /// `self^k`.
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.n), |acc, _| acc.mul(self))
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j];
            }
        }
        out
    }

    /// Exact determinant (cofactor expansion).
    pub fn det(&self) -> T {
        fn rec<T>(rows: &[Vec<T>]) -> T
        where
            T: Copy + From<i64> + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
        {
            let n = rows.len();
            if n == 0 {
                return T::from(1);
            }
            if n == 1 {
                return rows[0][0];
            }
            let mut acc = T::from(0);
            for j in 0..n {
                let minor: Vec<Vec<T>> = rows[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let term = rows[0][j] * rec(&minor);
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
        let rows: Vec<Vec<T>> = self.data.chunks(self.n).map(<[T]>::to_vec).collect();
        rec(&rows)
    }

    /// Reduces entrywise into a finite ring.
    pub fn reduce(&self, f: impl Fn(T) -> Option<Elem>) -> Option<Matrix> {
        let data: Option<Entries> = self.data.iter().map(|&x| f(x)).collect();
        Some(Matrix { n: self.n, data: data? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::QuadInt;
    use proptest::prelude::*;

    fn gf(p: u32) -> RingSpec {
        RingSpec::prime_field(p).unwrap()
    }

    #[test]
    fn det_and_inverse_over_gf7() {
        let r = gf(7);
        let m = Matrix::from_ints(&r, &[&[1, 2, 0], &[3, 1, 4], &[0, 5, 6]]);
        // 1(6-20) - 2(18-0) = -14 - 36 = -50 ≡ 6 mod 7
        assert_eq!(m.det(&r), r.from_int(-50));
        let inv = m.inverse(&r).unwrap();
        assert!(m.mul(&inv, &r).is_identity(&r));
        assert!(inv.mul(&m, &r).is_identity(&r));
    }

    #[test]
    fn null_space_sets_free_variable_to_one() {
        let r = gf(11);
        let m = Matrix::from_ints(&r, &[&[1, 1], &[2, 2]]);
        assert_eq!(null_space(&m, &r), vec![vec![r.from_int(-1), r.one()]]);
        assert_eq!(rank(&m, &r), 1);
    }

    #[test]
    fn complete_basis_puts_given_vectors_last() {
        let r = gf(5);
        let v = vec![r.one(), r.one(), r.zero()];
        let b = complete_basis(core::slice::from_ref(&v), 3, &r);
        assert_eq!(b.len(), 3);
        assert_eq!(b[2], v);
        assert_eq!(rank(&from_columns(&b), &r), 3);
    }

    #[test]
    fn domain_det_over_z_tau() {
        let t = QuadInt::TAU;
        let m = DomainMatrix::from_rows(vec![vec![QuadInt::ONE, t], vec![t, QuadInt::ONE]]);
        assert_eq!(m.det(), QuadInt::ONE - t * t);
        assert_eq!(m.mul(&DomainMatrix::identity(2)), m);
    }

    proptest! {
        #[test]
        fn det_is_multiplicative(a in proptest::collection::vec(0i64..13, 9), b in proptest::collection::vec(0i64..13, 9)) {
            let r = gf(13);
            let ma = Matrix::from_entries(3, &a.iter().map(|&x| r.from_int(x)).collect::<Vec<_>>());
            let mb = Matrix::from_entries(3, &b.iter().map(|&x| r.from_int(x)).collect::<Vec<_>>());
            prop_assert_eq!(ma.mul(&mb, &r).det(&r), r.mul(ma.det(&r), mb.det(&r)));
        }

        #[test]
        fn rank_nullity(a in proptest::collection::vec(0i64..5, 16)) {
            let r = gf(5);
            let m = Matrix::from_entries(4, &a.iter().map(|&x| r.from_int(x)).collect::<Vec<_>>());
            let ns = null_space(&m, &r);
            prop_assert_eq!(rank(&m, &r) + ns.len(), 4);
            for v in &ns {
                prop_assert!(m.apply(v, &r).iter().all(|&x| x == Elem::ZERO));
            }
        }
    }
}
