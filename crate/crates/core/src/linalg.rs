//! Dense linear algebra over F_p with row vectors.

pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    // Fermat: a^{p-2}
    let (mut base, mut e, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Reduces `rows` in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<u32>>, p: u32) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let s = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = (*x as u64 * s as u64 % p as u64) as u32;
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = ((*x as u64 + (p - f) as u64 * y as u64) % p as u64) as u32;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// A subspace of `F_p^n` held as a reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    p: u32,
    ambient: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(p: u32, ambient: usize) -> Self {
        Self {
            p,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(p: u32, ambient: usize) -> Self {
        Self::span(p, ambient, (0..ambient).map(|i| unit(ambient, i)))
    }

    pub fn span(p: u32, ambient: usize, vectors: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut rows: Vec<Vec<u32>> = vectors
            .into_iter()
            .map(|v| {
                debug_assert_eq!(v.len(), ambient);
                v.into_iter().map(|x| x % p).collect()
            })
            .collect();
        let pivots = rref(&mut rows, p);
        Self {
            p,
            ambient,
            basis: rows,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let p = self.p as u64;
        let mut w: Vec<u64> = v.iter().map(|&x| x as u64 % p).collect();
        for (row, &c) in self.basis.iter().zip(&self.pivots) {
            let f = w[c];
            if f != 0 {
                for (x, &y) in w.iter_mut().zip(row) {
                    *x = (*x + (p - f) * y as u64) % p;
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Self::span(
            self.p,
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    /// `{x : <x, v> = 0 for all v in self}`.
    pub fn annihilator(&self) -> Subspace {
        let vectors = nullspace(&self.basis, self.ambient, self.p);
        Self::span(self.p, self.ambient, vectors)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }
}

pub fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Basis of `{x : rows . x = 0}` in `F_p^ncols`.
pub fn nullspace(rows: &[Vec<u32>], ncols: usize, p: u32) -> Vec<Vec<u32>> {
    let mut m: Vec<Vec<u32>> = rows.to_vec();
    let pivots = if m.is_empty() { Vec::new() } else { rref(&mut m, p) };
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![0u32; ncols];
            x[f] = 1;
            for (row, &c) in m.iter().zip(&pivots) {
                x[c] = (p - row[f] % p) % p;
            }
            x
        })
        .collect()
}

/// Square matrix over F_p acting on row vectors: `v -> v M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    p: u32,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zero(n: usize, p: u32) -> Self {
        Self {
            n,
            p,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let mut m = Self::zero(n, p);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u32>], p: u32) -> Self {
        let n = rows.len();
        let mut m = Self::zero(n, p);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), n);
            for (j, &x) in r.iter().enumerate() {
                m.data[i * n + j] = x % p;
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.n, self.p)
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let (n, p) = (self.n, self.p as u64);
        let mut out = Matrix::zero(n, self.p);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    out.data[idx] = ((out.data[idx] as u64 + a * other.get(k, j) as u64) % p) as u32;
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.n, self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `self + c I`.
    pub fn add_scalar(&self, c: u32) -> Matrix {
        let mut out = self.clone();
        for i in 0..self.n {
            let idx = i * self.n + i;
            out.data[idx] = (out.data[idx] + c % self.p) % self.p;
        }
        out
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        let mut out = vec![0u64; self.n];
        for (i, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = (*o + x as u64 * self.get(i, j) as u64) % p;
            }
        }
        out.into_iter().map(|x| x as u32).collect()
    }

    /// Left kernel `{v : v M = 0}`.
    pub fn left_kernel(&self) -> Subspace {
        let transposed: Vec<Vec<u32>> = (0..self.n)
            .map(|j| (0..self.n).map(|i| self.get(i, j)).collect())
            .collect();
        Subspace::span(self.p, self.n, nullspace(&transposed, self.n, self.p))
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows();
        rref(&mut rows, self.p).len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod_prime() {
        for p in [2u32, 3, 5, 7] {
            for a in 1..p {
                assert_eq!(a * inv_mod(a, p) % p, 1);
            }
        }
    }

    #[test]
    fn nullspace_is_annihilated() {
        let rows = vec![vec![1, 2, 0, 1], vec![0, 1, 1, 1]];
        let ns = nullspace(&rows, 4, 3);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            for r in &rows {
                let dot: u32 = r.iter().zip(x).map(|(a, b)| a * b).sum();
                assert_eq!(dot % 3, 0);
            }
        }
    }

    #[test]
    fn subspace_ops() {
        let u = Subspace::span(3, 3, [vec![1, 0, 0], vec![0, 1, 0]]);
        let w = Subspace::span(3, 3, [vec![0, 1, 0], vec![0, 0, 1]]);
        let i = u.intersect(&w);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[0, 2, 0]));
        assert_eq!(u.sum(&w).dim(), 3);
        assert!(!u.contains(&[0, 0, 1]));
    }

    #[test]
    fn matrix_kernel_and_power() {
        // nilpotent shift
        let m = Matrix::from_rows(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]], 5);
        assert!(!m.pow(2).is_zero());
        assert!(m.pow(3).is_zero());
        assert_eq!(m.left_kernel().dim(), 1);
        assert_eq!(m.apply(&[1, 0, 0]), vec![0, 1, 0]);
        assert_eq!(m.rank(), 2);
    }
}
