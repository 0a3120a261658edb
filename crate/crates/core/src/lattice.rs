use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{denominator_lcm, Q};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type IRow = Vec<BigInt>;

/// Row-style Hermite normal form over Z with unimodular transform:
/// returns (H, U, pivot columns) with U * A = H, pivots positive, entries
/// above each pivot reduced into [0, pivot).
pub fn hermite_normal_form(a: &[IRow]) -> (Vec<IRow>, Vec<IRow>, Vec<usize>) {
    let m = a.len();
    if m == 0 {
        return (Vec::new(), Vec::new(), Vec::new());
    }
    let n = a[0].len();
    let mut h: Vec<IRow> = a.to_vec();
    let mut u: Vec<IRow> = (0..m)
        .map(|i| (0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..n {
        if r == m {
            break;
        }
        // euclidean reduction among rows r..m in column c
        loop {
            let p = (r..m)
                .filter(|&i| !h[i][c].is_zero())
                .min_by_key(|&i| h[i][c].abs());
            let Some(p) = p else { break };
            if p != r {
                h.swap(p, r);
                u.swap(p, r);
            }
            let mut again = false;
            for i in r + 1..m {
                if !h[i][c].is_zero() {
                    let q = h[i][c].div_floor(&h[r][c]);
                    for j in 0..n {
                        let v = &h[i][j] - &q * &h[r][j];
                        h[i][j] = v;
                    }
                    for j in 0..m {
                        let v = &u[i][j] - &q * &u[r][j];
                        u[i][j] = v;
                    }
                    if !h[i][c].is_zero() {
                        again = true;
                    }
                }
            }
            if !again {
                break;
            }
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            for j in 0..n {
                h[r][j] = -h[r][j].clone();
            }
            for j in 0..m {
                u[r][j] = -u[r][j].clone();
            }
        }
        for i in 0..r {
            if !h[i][c].is_zero() {
                let q = h[i][c].div_floor(&h[r][c]);
                if !q.is_zero() {
                    for j in 0..n {
                        let v = &h[i][j] - &q * &h[r][j];
                        h[i][j] = v;
                    }
                    for j in 0..m {
                        let v = &u[i][j] - &q * &u[r][j];
                        u[i][j] = v;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (h, u, pivots)
}

/// Basis of the integer left kernel `{x : x A = 0}`.
pub fn integer_left_kernel(a: &[IRow]) -> Vec<IRow> {
    let (h, u, pivots) = hermite_normal_form(a);
    let rank = pivots.len();
    let _ = h;
    u.into_iter().skip(rank).collect()
}

/// Finitely generated subgroup of Q^n: `(1/scale) * rowspan_Z(rows)` with
/// rows kept in canonical Hermite form. Rank may be less than the ambient
/// dimension.
#[derive(Clone, PartialEq, Eq)]
pub struct SubLattice {
    ambient: usize,
    scale: BigInt,
    rows: Vec<IRow>,
}

impl SubLattice {
    /// Lattice generated by the given rational vectors.
    pub fn from_generators(ambient: usize, gens: &[Vec<Q>]) -> Self {
        for g in gens {
            assert_eq!(g.len(), ambient, "generator has wrong dimension");
        }
        let scale = denominator_lcm(gens.iter().flatten());
        let int_rows: Vec<IRow> = gens
            .iter()
            .map(|g| g.iter().map(|x| (x * BigRational::from_integer(scale.clone())).to_integer()).collect())
            .collect();
        let (h, _, pivots) = hermite_normal_form(&int_rows);
        let rows = h.into_iter().take(pivots.len()).collect();
        let mut out = SubLattice { ambient, scale, rows };
        out.normalize();
        out
    }

    pub fn zero(ambient: usize) -> Self {
        SubLattice { ambient, scale: BigInt::one(), rows: Vec::new() }
    }

    /// Standard integer lattice Z^n.
    pub fn standard(ambient: usize) -> Self {
        let gens: Vec<Vec<Q>> = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
            .collect();
        SubLattice::from_generators(ambient, &gens)
    }

    fn normalize(&mut self) {
        let mut g = self.scale.clone();
        for row in &self.rows {
            for e in row {
                g = g.gcd(e);
                if g.is_one() {
                    return;
                }
            }
        }
        if g.is_one() || g.is_zero() {
            return;
        }
        self.scale = &self.scale / &g;
        for row in &mut self.rows {
            for e in row.iter_mut() {
                *e = &*e / &g;
            }
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Canonical rational basis (Hermite rows divided by the scale).
    pub fn basis(&self) -> Vec<Vec<Q>> {
        let s = BigRational::from_integer(self.scale.clone());
        self.rows
            .iter()
            .map(|r| r.iter().map(|e| BigRational::from_integer(e.clone()) / s.clone()).collect())
            .collect()
    }

    /// Exact membership: v is an integer combination of the basis.
    pub fn contains(&self, v: &[Q]) -> bool {
        assert_eq!(v.len(), self.ambient);
        // w = scale * v must be integral and reducible to zero over the rows
        let mut w: Vec<BigRational> = v
            .iter()
            .map(|x| x * BigRational::from_integer(self.scale.clone()))
            .collect();
        if !w.iter().all(|x| x.is_integer()) {
            return false;
        }
        let mut wi: IRow = w.drain(..).map(|x| x.to_integer()).collect();
        let pivot_col = |row: &IRow| row.iter().position(|e| !e.is_zero());
        for row in &self.rows {
            let Some(pc) = pivot_col(row) else { continue };
            if wi[pc].is_zero() {
                continue;
            }
            let (q, r) = wi[pc].div_rem(&row[pc]);
            if !r.is_zero() {
                return false;
            }
            for j in 0..self.ambient {
                let v = &wi[j] - &q * &row[j];
                wi[j] = v;
            }
        }
        wi.iter().all(|e| e.is_zero())
    }

    /// Membership of v in the Q-span of the lattice.
    pub fn span_contains(&self, v: &[Q]) -> bool {
        if self.rows.is_empty() {
            return v.iter().all(|x| x.is_zero());
        }
        let m = Matrix::from_rows(&self.basis()).transpose();
        m.solve(v).is_some()
    }

    pub fn span_eq(&self, other: &SubLattice) -> bool {
        self.rank() == other.rank()
            && self.basis().iter().all(|v| other.span_contains(v))
    }

    /// Smallest positive integer k with `k * self ⊆ other`; `None` when the
    /// two lattices do not span the same subspace.
    pub fn index_scale(&self, other: &SubLattice) -> Option<BigInt> {
        if self.ambient != other.ambient || !self.span_eq(other) {
            return None;
        }
        if self.rank() == 0 {
            return Some(BigInt::one());
        }
        let m = Matrix::from_rows(&other.basis()).transpose();
        let mut k = BigInt::one();
        for v in self.basis() {
            let coords = m.solve(&v)?;
            k = k.lcm(&denominator_lcm(coords.iter()));
        }
        Some(k)
    }

    /// Intersection of two lattices in the same ambient space.
    pub fn intersect(&self, other: &SubLattice) -> SubLattice {
        assert_eq!(self.ambient, other.ambient);
        if self.rank() == 0 || other.rank() == 0 {
            return SubLattice::zero(self.ambient);
        }
        let s = self.scale.lcm(&other.scale);
        let fa = &s / &self.scale;
        let fb = &s / &other.scale;
        let mut stacked: Vec<IRow> = Vec::new();
        for r in &self.rows {
            stacked.push(r.iter().map(|e| e * &fa).collect());
        }
        for r in &other.rows {
            stacked.push(r.iter().map(|e| e * &fb).collect());
        }
        let kernel = integer_left_kernel(&stacked);
        let na = self.rows.len();
        let mut gens: Vec<Vec<Q>> = Vec::new();
        let sq = BigRational::from_integer(s);
        for krow in kernel {
            let mut v = vec![BigRational::zero(); self.ambient];
            for (i, c) in krow.iter().take(na).enumerate() {
                for j in 0..self.ambient {
                    let add = BigRational::from_integer(c * &self.rows[i][j] * &fa) / sq.clone();
                    v[j] += add;
                }
            }
            gens.push(v);
        }
        SubLattice::from_generators(self.ambient, &gens)
    }

    /// Sublattice of vectors lying in the span of the given subspace basis.
    pub fn restrict_to_subspace(&self, subspace: &[Vec<Q>]) -> SubLattice {
        if self.rank() == 0 {
            return SubLattice::zero(self.ambient);
        }
        if subspace.is_empty() {
            return SubLattice::zero(self.ambient);
        }
        // annihilator of the subspace: right kernel of its row matrix
        let w = Matrix::from_rows(subspace);
        let ann = w.kernel_basis();
        if ann.is_empty() {
            return self.clone();
        }
        // condition on lattice coordinates x: (x . rows) . a = 0 for all a
        let basis = self.basis();
        let cond: Vec<Vec<Q>> = basis
            .iter()
            .map(|b| {
                ann.iter()
                    .map(|a| {
                        b.iter()
                            .zip(a)
                            .fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
                    })
                    .collect()
            })
            .collect();
        let scale = denominator_lcm(cond.iter().flatten());
        let int_cond: Vec<IRow> = cond
            .iter()
            .map(|r| r.iter().map(|x| (x * BigRational::from_integer(scale.clone())).to_integer()).collect())
            .collect();
        let kernel = integer_left_kernel(&int_cond);
        let gens: Vec<Vec<Q>> = kernel
            .iter()
            .map(|k| {
                let mut v = vec![BigRational::zero(); self.ambient];
                for (c, b) in k.iter().zip(&basis) {
                    let cq = BigRational::from_integer(c.clone());
                    for j in 0..self.ambient {
                        v[j] += cq.clone() * b[j].clone();
                    }
                }
                v
            })
            .collect();
        SubLattice::from_generators(self.ambient, &gens)
    }

    /// Image under a linear map given as a matrix acting on columns.
    pub fn map(&self, t: &Matrix<Q>) -> SubLattice {
        assert_eq!(t.cols(), self.ambient);
        let gens: Vec<Vec<Q>> = self.basis().iter().map(|b| t.mul_vec(b)).collect();
        SubLattice::from_generators(t.rows(), &gens)
    }

    /// The lattice scaled by a positive rational.
    pub fn scaled(&self, k: &Q) -> SubLattice {
        assert!(k.is_positive());
        let gens: Vec<Vec<Q>> = self
            .basis()
            .iter()
            .map(|b| b.iter().map(|x| x * k).collect())
            .collect();
        SubLattice::from_generators(self.ambient, &gens)
    }

    pub fn is_sublattice_of(&self, other: &SubLattice) -> bool {
        self.basis().iter().all(|v| other.contains(v))
    }

    /// Sum (join) of two lattices.
    pub fn sum(&self, other: &SubLattice) -> SubLattice {
        assert_eq!(self.ambient, other.ambient);
        let mut gens = self.basis();
        gens.extend(other.basis());
        SubLattice::from_generators(self.ambient, &gens)
    }
}

impl std::fmt::Debug for SubLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SubLattice(1/{} * {:?})", self.scale, self.rows)
    }
}

/// Smallest positive integer k with `k*L ⊆ L'`, for lattices spanning the
/// same subspace of a shared ambient space.
pub fn lattice_index_scale(l: &SubLattice, lp: &SubLattice) -> Result<Option<BigInt>> {
    if l.ambient() != lp.ambient() {
        return Err(Error::DimMismatch { expected: l.ambient(), got: lp.ambient() });
    }
    Ok(l.index_scale(lp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi};

    fn vq(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| qi(x)).collect()
    }

    #[test]
    fn hnf_basic() {
        let a = vec![
            vec![BigInt::from(2), BigInt::from(4)],
            vec![BigInt::from(1), BigInt::from(3)],
        ];
        let (h, u, pivots) = hermite_normal_form(&a);
        assert_eq!(pivots, vec![0, 1]);
        // canonical form: positive pivots, entries above reduced mod pivot
        assert_eq!(h[0], vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(h[1], vec![BigInt::from(0), BigInt::from(2)]);
        // U * A = H
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = BigInt::zero();
                for k in 0..2 {
                    acc += &u[i][k] * &a[k][j];
                }
                assert_eq!(acc, h[i][j]);
            }
        }
    }

    #[test]
    fn standard_lattice_membership() {
        let z3 = SubLattice::standard(3);
        assert!(z3.contains(&vq(&[1, 2, 3])));
        assert!(!z3.contains(&[q(1, 2), qi(0), qi(0)]));
        for b in z3.basis() {
            assert!(z3.contains(&b));
        }
    }

    #[test]
    fn index_scale_examples() {
        let z2 = SubLattice::standard(2);
        let l = SubLattice::from_generators(2, &[vq(&[3, 0]), vq(&[0, 1])]);
        assert_eq!(lattice_index_scale(&z2, &l).unwrap(), Some(BigInt::from(3)));
        assert_eq!(lattice_index_scale(&l, &z2).unwrap(), Some(BigInt::one()));
        let half = SubLattice::from_generators(2, &[
            vec![q(1, 2), qi(0)],
            vec![qi(0), qi(1)],
        ]);
        assert_eq!(lattice_index_scale(&z2, &half).unwrap(), Some(BigInt::one()));
        assert_eq!(lattice_index_scale(&half, &z2).unwrap(), Some(BigInt::from(2)));
    }

    #[test]
    fn intersection() {
        let a = SubLattice::from_generators(2, &[vq(&[2, 0]), vq(&[0, 1])]);
        let b = SubLattice::from_generators(2, &[vq(&[3, 0]), vq(&[0, 1])]);
        let c = a.intersect(&b);
        assert!(c.contains(&vq(&[6, 0])));
        assert!(!c.contains(&vq(&[2, 0])));
        assert!(!c.contains(&vq(&[3, 0])));
        assert!(c.contains(&vq(&[0, 1])));
        // intersection with a line
        let line = SubLattice::from_generators(2, &[vec![qi(0), q(1, 2)]]);
        let d = a.intersect(&line);
        assert_eq!(d.rank(), 1);
        assert!(d.contains(&vq(&[0, 1])));
        assert!(!d.contains(&[qi(0), q(1, 2)]));
    }

    #[test]
    fn subspace_restriction() {
        let l = SubLattice::from_generators(3, &[
            vq(&[1, 0, 0]),
            vq(&[0, 1, 0]),
            vec![qi(0), qi(0), q(1, 2)],
        ]);
        // restrict to the z-axis
        let axis = vec![vq(&[0, 0, 1])];
        let r = l.restrict_to_subspace(&axis);
        assert_eq!(r.rank(), 1);
        assert!(r.contains(&[qi(0), qi(0), q(1, 2)]));
        assert!(!r.contains(&[qi(0), qi(0), q(1, 4)]));
        assert!(!r.contains(&vq(&[1, 0, 0])));
    }

    #[test]
    fn map_and_sum() {
        let l = SubLattice::standard(2);
        let t = Matrix::new(2, 2, vec![qi(2), qi(0), qi(0), qi(4)]);
        let img = l.map(&t);
        assert!(img.contains(&vq(&[2, 0])));
        assert!(!img.contains(&vq(&[1, 0])));
        let joined = img.sum(&SubLattice::from_generators(2, &[vq(&[1, 0])]));
        assert!(joined.contains(&vq(&[1, 0])));
        assert!(!joined.contains(&vq(&[0, 1])));
    }
}
