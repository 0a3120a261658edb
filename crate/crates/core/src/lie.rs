use crate::error::{Error, Result};
use crate::lattice::SubLattice;
use crate::matrix::Matrix;
use crate::scalar::Q;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::Arc;

/// Element of a finite-dimensional Q-Lie algebra, in the algebra's basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieVector {
    pub coords: Vec<Q>,
}

impl LieVector {
    pub fn new(coords: Vec<Q>) -> Self {
        LieVector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        LieVector { coords: vec![BigRational::zero(); dim] }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[i] = BigRational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        LieVector::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        LieVector::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        LieVector::new(self.coords.iter().map(|a| -a.clone()).collect())
    }

    pub fn scale(&self, c: &Q) -> Self {
        LieVector::new(self.coords.iter().map(|a| a * c).collect())
    }
}

#[derive(Debug, PartialEq, Eq)]
struct AlgebraData {
    dim: usize,
    // brackets[i][j] = coordinates of [e_i, e_j]
    brackets: Vec<Vec<Vec<Q>>>,
    class: usize,
}

/// Finite-dimensional nilpotent Q-Lie algebra given by structure constants.
///
/// Antisymmetry, the Jacobi identity, and the declared nilpotency class are
/// validated at construction; every downstream operation assumes them.
#[derive(Clone, Debug)]
pub struct NilLieAlgebra {
    inner: Arc<AlgebraData>,
}

impl PartialEq for NilLieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || *self.inner == *other.inner
    }
}
impl Eq for NilLieAlgebra {}

impl NilLieAlgebra {
    /// Builds the algebra from nonzero structure constants `(i, j, k, c)`
    /// meaning `[e_i, e_j] has coefficient c on e_k`; indices are 0-based
    /// and must satisfy `i < j` (the mirror entries are filled in).
    pub fn new(dim: usize, entries: &[(usize, usize, usize, Q)], class: usize) -> Result<Self> {
        if class == 0 {
            return Err(Error::InvalidAlgebra("nilpotency class must be positive".into()));
        }
        Self::build(dim, entries, Some(class))
    }

    /// Like [`NilLieAlgebra::new`], computing the nilpotency class from the
    /// structure constants.
    pub fn new_auto_class(dim: usize, entries: &[(usize, usize, usize, Q)]) -> Result<Self> {
        Self::build(dim, entries, None)
    }

    fn build(dim: usize, entries: &[(usize, usize, usize, Q)], class: Option<usize>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        let zero_vec = vec![BigRational::zero(); dim];
        let mut brackets = vec![vec![zero_vec.clone(); dim]; dim];
        for &(i, j, k, ref c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidAlgebra(format!(
                    "structure constant index out of range: ({i},{j},{k})"
                )));
            }
            if i >= j {
                return Err(Error::InvalidAlgebra(
                    "structure constants must be given with i < j".into(),
                ));
            }
            brackets[i][j][k] += c;
            brackets[j][i][k] -= c;
        }
        let probe = NilLieAlgebra {
            inner: Arc::new(AlgebraData { dim, brackets, class: 0 }),
        };
        let series = probe.lower_central_series();
        if !series.last().unwrap().is_empty() {
            return Err(Error::InvalidAlgebra(
                "structure constants do not define a nilpotent algebra".into(),
            ));
        }
        let measured = series.len() - 1;
        let class = class.unwrap_or(measured);
        let data = AlgebraData {
            dim,
            brackets: probe.inner.brackets.clone(),
            class,
        };
        let alg = NilLieAlgebra { inner: Arc::new(data) };
        alg.validate()?;
        Ok(alg)
    }

    /// Abelian algebra of the given dimension.
    pub fn abelian(dim: usize) -> Self {
        NilLieAlgebra::new(dim, &[], 1).expect("abelian algebra is always valid")
    }

    /// Heisenberg algebra of dimension 2n+1 with [e_i, e_{n+i}] = e_{2n}.
    pub fn heisenberg(n: usize) -> Self {
        let dim = 2 * n + 1;
        let entries: Vec<(usize, usize, usize, Q)> =
            (0..n).map(|i| (i, n + i, 2 * n, BigRational::one())).collect();
        NilLieAlgebra::new(dim, &entries, 2).expect("heisenberg algebra is valid")
    }

    /// Strictly upper triangular d x d matrices as an abstract algebra;
    /// basis order is E_{ij} for i < j, row-major. Class is d-1.
    pub fn strictly_upper_triangular(d: usize) -> Self {
        assert!(d >= 2);
        let dim = d * (d - 1) / 2;
        let idx = |i: usize, j: usize| upper_tri_basis_index(d, i, j);
        let mut entries = Vec::new();
        // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
        let mut pairs = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                pairs.push((i, j));
            }
        }
        for (p, &(a, b)) in pairs.iter().enumerate() {
            for (q, &(c, dd)) in pairs.iter().enumerate() {
                if p >= q {
                    continue;
                }
                let mut coords = vec![BigRational::zero(); dim];
                if b == c {
                    coords[idx(a, dd)] += BigRational::one();
                }
                if dd == a {
                    coords[idx(c, b)] -= BigRational::one();
                }
                for (k, v) in coords.into_iter().enumerate() {
                    if !v.is_zero() {
                        entries.push((p, q, k, v));
                    }
                }
            }
        }
        NilLieAlgebra::new(dim, &entries, d - 1).expect("upper triangular algebra is valid")
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn class(&self) -> usize {
        self.inner.class
    }

    pub fn is_abelian(&self) -> bool {
        self.inner.class == 1
    }

    /// Nonzero structure constants with i < j, for serialization.
    pub fn structure_entries(&self) -> Vec<(usize, usize, usize, Q)> {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                for (k, c) in self.inner.brackets[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim();
        // antisymmetry holds by construction; check Jacobi on basis triples
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let ei = LieVector::basis(d, i);
                    let ej = LieVector::basis(d, j);
                    let ek = LieVector::basis(d, k);
                    let s = self
                        .bracket(&self.bracket(&ei, &ej), &ek)
                        .add(&self.bracket(&self.bracket(&ej, &ek), &ei))
                        .add(&self.bracket(&self.bracket(&ek, &ei), &ej));
                    if !s.is_zero() {
                        return Err(Error::InvalidAlgebra(format!(
                            "Jacobi identity fails on basis triple ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        // declared class must match the lower central series exactly
        let series = self.lower_central_series();
        if !series.last().unwrap().is_empty() {
            return Err(Error::InvalidAlgebra(
                "structure constants do not define a nilpotent algebra".into(),
            ));
        }
        let steps = series.len() - 1; // number of nonzero terms
        if steps != self.inner.class {
            return Err(Error::InvalidAlgebra(format!(
                "declared class {} but lower central series vanishes after {} steps",
                self.inner.class, steps
            )));
        }
        Ok(())
    }

    /// Structure-constant bracket, bilinear and exact.
    pub fn bracket(&self, x: &LieVector, y: &LieVector) -> LieVector {
        assert_eq!(x.dim(), self.dim(), "dimension mismatch");
        assert_eq!(y.dim(), self.dim(), "dimension mismatch");
        let mut out = LieVector::zero(self.dim());
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, s) in self.inner.brackets[i][j].iter().enumerate() {
                    if !s.is_zero() {
                        out.coords[k] += &c * s;
                    }
                }
            }
        }
        out
    }

    /// Baker-Campbell-Hausdorff product log(exp X exp Y) by Dynkin's
    /// series, truncated (exactly) at the nilpotency class.
    pub fn bch(&self, x: &LieVector, y: &LieVector) -> LieVector {
        assert_eq!(x.dim(), self.dim(), "dimension mismatch");
        assert_eq!(y.dim(), self.dim(), "dimension mismatch");
        let mut acc = LieVector::zero(self.dim());
        let class = self.inner.class;
        for degree in 1..=class {
            for n in 1..=degree {
                let mut compositions: Vec<Vec<(usize, usize)>> = Vec::new();
                compose_pairs(degree, n, &mut Vec::new(), &mut compositions);
                for comp in compositions {
                    // word: r_1 X's, s_1 Y's, r_2 X's, ...
                    let mut word: Vec<&LieVector> = Vec::with_capacity(degree);
                    let mut denom = BigRational::one();
                    for &(r, s) in &comp {
                        for _ in 0..r {
                            word.push(x);
                        }
                        for _ in 0..s {
                            word.push(y);
                        }
                        denom *= factorial(r) * factorial(s);
                    }
                    // right-nested bracket of the word
                    let mut term = word[word.len() - 1].clone();
                    for w in word[..word.len() - 1].iter().rev() {
                        term = self.bracket(w, &term);
                        if term.is_zero() {
                            break;
                        }
                    }
                    if term.is_zero() {
                        continue;
                    }
                    let sign = if n % 2 == 1 { BigRational::one() } else { -BigRational::one() };
                    let coeff = sign
                        / (BigRational::from_integer(n.into())
                            * BigRational::from_integer(degree.into())
                            * denom);
                    acc = acc.add(&term.scale(&coeff));
                }
            }
        }
        acc
    }

    /// Descending chain of lower-central-series subspace bases, ending
    /// with the empty basis.
    pub fn lower_central_series(&self) -> Vec<Vec<LieVector>> {
        let d = self.dim();
        let full: Vec<LieVector> = (0..d).map(|i| LieVector::basis(d, i)).collect();
        let mut out = vec![full];
        loop {
            let prev = out.last().unwrap();
            if prev.is_empty() {
                break;
            }
            let mut gens: Vec<Vec<Q>> = Vec::new();
            for i in 0..d {
                let ei = LieVector::basis(d, i);
                for w in prev {
                    let b = self.bracket(&ei, w);
                    if !b.is_zero() {
                        gens.push(b.coords);
                    }
                }
            }
            let next = span_basis(d, &gens);
            let stop = next.is_empty() || next.len() == prev.len();
            out.push(next);
            if stop {
                // either reached zero or stabilized (non-nilpotent input,
                // rejected by validation)
                break;
            }
        }
        out
    }

    /// Basis of the center {x : [x, e_i] = 0 for all i}.
    pub fn center(&self) -> Vec<LieVector> {
        self.upper_central_series().get(1).cloned().unwrap_or_default()
    }

    /// Ascending chain 0 = Z_0 <= Z_1 <= ... of upper-central-series
    /// subspace bases, ending with the full space.
    pub fn upper_central_series(&self) -> Vec<Vec<LieVector>> {
        let d = self.dim();
        let mut out: Vec<Vec<LieVector>> = vec![Vec::new()];
        loop {
            let prev = out.last().unwrap();
            if prev.len() == d {
                break;
            }
            // x is in the next term iff [x, e_i] lies in span(prev) for all i
            // i.e. the projection of [x, e_i] to a complement of prev is zero
            let prev_mat: Option<Matrix<Q>> = if prev.is_empty() {
                None
            } else {
                Some(Matrix::from_rows(
                    &prev.iter().map(|v| v.coords.clone()).collect::<Vec<_>>(),
                ))
            };
            // rows of conditions on x
            let mut cond_rows: Vec<Vec<Q>> = Vec::new();
            // linear map x -> [x, e_i]: columns are [e_j, e_i]
            for i in 0..d {
                let cols: Vec<Vec<Q>> = (0..d)
                    .map(|j| {
                        self.bracket(&LieVector::basis(d, j), &LieVector::basis(d, i)).coords
                    })
                    .collect();
                let bmat = Matrix::from_cols(&cols);
                // condition: bmat * x in span(prev)
                let quot_conds = complement_conditions(d, prev_mat.as_ref());
                for qc in quot_conds {
                    // row qc . (bmat x) = (qc^T bmat) x
                    let row: Vec<Q> = (0..d)
                        .map(|j| {
                            (0..d).fold(BigRational::zero(), |acc, k| {
                                acc + qc[k].clone() * bmat.at(k, j).clone()
                            })
                        })
                        .collect();
                    cond_rows.push(row);
                }
            }
            let next: Vec<LieVector> = if cond_rows.is_empty() {
                (0..d).map(|i| LieVector::basis(d, i)).collect()
            } else {
                Matrix::from_rows(&cond_rows)
                    .kernel_basis()
                    .into_iter()
                    .map(LieVector::new)
                    .collect()
            };
            if next.len() == prev.len() {
                // stabilized early; nilpotency guarantees full space, but
                // stop defensively rather than loop
                break;
            }
            out.push(next);
        }
        out
    }
}

/// Linear conditions whose kernel is span(prev); identity conditions when
/// prev is empty.
fn complement_conditions(d: usize, prev: Option<&Matrix<Q>>) -> Vec<Vec<Q>> {
    match prev {
        None => (0..d)
            .map(|i| {
                let mut v = vec![BigRational::zero(); d];
                v[i] = BigRational::one();
                v
            })
            .collect(),
        Some(p) => p.kernel_basis(),
    }
}

/// Row-reduced basis of the span of the given vectors.
fn span_basis(dim: usize, gens: &[Vec<Q>]) -> Vec<LieVector> {
    if gens.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(gens);
    let (r, pivots) = m.rref();
    (0..pivots.len())
        .map(|i| LieVector::new((0..dim).map(|j| r.at(i, j).clone()).collect()))
        .collect()
}

fn factorial(n: usize) -> Q {
    let mut acc = BigRational::one();
    for k in 2..=n {
        acc *= BigRational::from_integer(k.into());
    }
    acc
}

/// All sequences of n pairs (r_i, s_i), each with r_i + s_i >= 1, whose
/// total degree is `degree`.
fn compose_pairs(
    degree: usize,
    n: usize,
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if n == 0 {
        if degree == 0 {
            out.push(current.clone());
        }
        return;
    }
    if degree < n {
        return;
    }
    let remaining_min = n - 1;
    for total in 1..=degree - remaining_min {
        for r in 0..=total {
            let s = total - r;
            current.push((r, s));
            compose_pairs(degree - total, n - 1, current, out);
            current.pop();
        }
    }
}

/// Basis index of E_{ij} (i < j) in [`NilLieAlgebra::strictly_upper_triangular`].
pub fn upper_tri_basis_index(d: usize, i: usize, j: usize) -> usize {
    assert!(i < j && j < d);
    // rows before i contribute (d-1) + (d-2) + ...
    let before: usize = (0..i).map(|r| d - 1 - r).sum();
    before + (j - i - 1)
}

/// Exact exponential of a nilpotent matrix.
pub fn exp_unipotent(n: &Matrix<Q>) -> Result<Matrix<Q>> {
    let d = n.require_square()?;
    if !n.pow(d as u64).is_zero() {
        return Err(Error::NotNilpotent);
    }
    let mut acc = Matrix::identity(d);
    let mut term = Matrix::identity(d);
    for k in 1..d {
        term = term.mul(n).scale(&(BigRational::one() / BigRational::from_integer(k.into())));
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Exact logarithm of a unipotent matrix.
pub fn log_unipotent(u: &Matrix<Q>) -> Result<Matrix<Q>> {
    let d = u.require_square()?;
    let n = u.sub(&Matrix::identity(d));
    if !n.pow(d as u64).is_zero() {
        return Err(Error::NotUnipotent);
    }
    let mut acc = Matrix::zero(d, d);
    let mut power = Matrix::identity(d);
    for k in 1..d {
        power = power.mul(&n);
        if power.is_zero() {
            break;
        }
        let sign = if k % 2 == 1 { BigRational::one() } else { -BigRational::one() };
        acc = acc.add(&power.scale(&(sign / BigRational::from_integer(k.into()))));
    }
    Ok(acc)
}

/// Full-rank lattice in a nilpotent Lie algebra, with an ordered basis.
#[derive(Clone, PartialEq, Debug)]
pub struct LogLattice {
    algebra: NilLieAlgebra,
    basis: Vec<LieVector>,
    canon: SubLattice,
}

impl LogLattice {
    pub fn new(algebra: NilLieAlgebra, basis: Vec<LieVector>) -> Result<Self> {
        let d = algebra.dim();
        if basis.len() != d {
            return Err(Error::DimMismatch { expected: d, got: basis.len() });
        }
        for b in &basis {
            if b.dim() != d {
                return Err(Error::DimMismatch { expected: d, got: b.dim() });
            }
        }
        let rows: Vec<Vec<Q>> = basis.iter().map(|b| b.coords.clone()).collect();
        if Matrix::from_rows(&rows).rank() != d {
            return Err(Error::InvalidSpec("lattice basis does not span the algebra".into()));
        }
        let canon = SubLattice::from_generators(d, &rows);
        Ok(LogLattice { algebra, basis, canon })
    }

    /// Standard lattice Z^dim on the algebra's basis.
    pub fn standard(algebra: NilLieAlgebra) -> Self {
        let d = algebra.dim();
        let basis = (0..d).map(|i| LieVector::basis(d, i)).collect();
        LogLattice::new(algebra, basis).expect("standard basis is valid")
    }

    pub fn algebra(&self) -> &NilLieAlgebra {
        &self.algebra
    }

    pub fn basis(&self) -> &[LieVector] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn sublattice(&self) -> &SubLattice {
        &self.canon
    }

    pub fn contains(&self, v: &LieVector) -> Result<bool> {
        if v.dim() != self.algebra.dim() {
            return Err(Error::DimMismatch { expected: self.algebra.dim(), got: v.dim() });
        }
        Ok(self.canon.contains(&v.coords))
    }

    /// Smallest positive integer k with `k * self ⊆ other`.
    pub fn index_scale(&self, other: &LogLattice) -> Result<Option<num_bigint::BigInt>> {
        if self.algebra != other.algebra {
            return Err(Error::DimMismatch {
                expected: self.algebra.dim(),
                got: other.algebra.dim(),
            });
        }
        Ok(self.canon.index_scale(&other.canon))
    }

    /// bch-closure of the scaled lattice on basis pairs: a necessary and,
    /// for the congruence-set representation, sufficient test that
    /// `{u in N*L}` is a subgroup of exp of the algebra.
    pub fn scaled_set_is_group(&self, n: &Q) -> bool {
        let scaled: Vec<LieVector> = self.basis.iter().map(|b| b.scale(n)).collect();
        let scaled_lat = SubLattice::from_generators(
            self.algebra.dim(),
            &scaled.iter().map(|b| b.coords.clone()).collect::<Vec<_>>(),
        );
        for x in &scaled {
            for y in &scaled {
                let z = self.algebra.bch(x, y);
                if !scaled_lat.contains(&z.coords) {
                    return false;
                }
            }
        }
        true
    }
}

/// The unique linear map sending each pair's first component to its second,
/// provided it is a Lie-algebra automorphism; `None` when the map exists
/// but fails bracket preservation or invertibility.
pub fn extend_partial_automorphism(
    a: &NilLieAlgebra,
    pairs: &[(LieVector, LieVector)],
) -> Result<Option<Matrix<Q>>> {
    let d = a.dim();
    for (x, y) in pairs {
        if x.dim() != d || y.dim() != d {
            return Err(Error::DimMismatch { expected: d, got: x.dim().max(y.dim()) });
        }
    }
    let sources: Vec<Vec<Q>> = pairs.iter().map(|(x, _)| x.coords.clone()).collect();
    if sources.is_empty() || Matrix::from_rows(&sources).rank() != d {
        return Err(Error::Underdetermined);
    }
    // pick d independent pairs, solve, then verify the rest
    let chosen: Vec<usize> = {
        let mut idx = Vec::new();
        let mut current: Vec<Vec<Q>> = Vec::new();
        for (i, row) in sources.iter().enumerate() {
            current.push(row.clone());
            if Matrix::from_rows(&current).rank() == current.len() {
                idx.push(i);
            } else {
                current.pop();
            }
            if idx.len() == d {
                break;
            }
        }
        idx
    };
    let vsel = Matrix::from_cols(&chosen.iter().map(|&i| sources[i].clone()).collect::<Vec<_>>());
    let wsel = Matrix::from_cols(
        &chosen.iter().map(|&i| pairs[i].1.coords.clone()).collect::<Vec<_>>(),
    );
    let t = wsel.mul(&vsel.inverse().map_err(|_| Error::Underdetermined)?);
    for (x, y) in pairs {
        if t.mul_vec(&x.coords) != y.coords {
            return Err(Error::InconsistentPairs);
        }
    }
    if !t.is_invertible() {
        return Ok(None);
    }
    if !is_lie_automorphism(a, &t) {
        return Ok(None);
    }
    Ok(Some(t))
}

/// Bracket preservation of an invertible matrix on all basis pairs.
pub fn is_lie_automorphism(a: &NilLieAlgebra, t: &Matrix<Q>) -> bool {
    let d = a.dim();
    if t.rows() != d || t.cols() != d || !t.is_invertible() {
        return false;
    }
    for i in 0..d {
        for j in i + 1..d {
            let ei = LieVector::basis(d, i);
            let ej = LieVector::basis(d, j);
            let lhs = t.mul_vec(&a.bracket(&ei, &ej).coords);
            let rhs = a
                .bracket(&LieVector::new(t.mul_vec(&ei.coords)), &LieVector::new(t.mul_vec(&ej.coords)));
            if lhs != rhs.coords {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi};

    fn heis3() -> NilLieAlgebra {
        NilLieAlgebra::heisenberg(1)
    }

    fn v(coords: &[i64]) -> LieVector {
        LieVector::new(coords.iter().map(|&c| qi(c)).collect())
    }

    #[test]
    fn bracket_examples() {
        let a = heis3();
        let x = LieVector::basis(3, 0);
        let y = LieVector::basis(3, 1);
        assert_eq!(a.bracket(&x, &y), LieVector::basis(3, 2));
        assert!(a.bracket(&x, &x).is_zero());
        let ab = NilLieAlgebra::abelian(3);
        assert!(ab.bracket(&x, &y).is_zero());
    }

    #[test]
    fn algebra_validation() {
        // wrong class is rejected
        assert!(NilLieAlgebra::new(3, &[(0, 1, 2, qi(1))], 1).is_err());
        assert!(NilLieAlgebra::new(3, &[], 2).is_err());
        // i >= j rejected
        assert!(NilLieAlgebra::new(3, &[(1, 0, 2, qi(1))], 2).is_err());
        // Jacobi violation: [e0,e1]=e2, [e1,e2]=e1
        assert!(NilLieAlgebra::new(3, &[(0, 1, 2, qi(1)), (1, 2, 1, qi(1))], 2).is_err());
        // solvable but not nilpotent: [e0,e1]=e1
        assert!(NilLieAlgebra::new(2, &[(0, 1, 1, qi(1))], 1).is_err());
    }

    #[test]
    fn bch_examples() {
        let a = heis3();
        let x = LieVector::basis(3, 0);
        let y = LieVector::basis(3, 1);
        // inverse case
        assert!(a.bch(&x, &x.neg()).is_zero());
        // commuting case
        assert_eq!(a.bch(&x, &LieVector::basis(3, 2)), v(&[1, 0, 1]));
        // golden value x + y + z/2, frozen from the matrix-log oracle
        let z = a.bch(&x, &y);
        assert_eq!(z, LieVector::new(vec![qi(1), qi(1), q(1, 2)]));
    }

    #[test]
    fn bch_matches_matrix_log_oracle() {
        // oracle: log(exp(E12) exp(E23)) inside 3x3 matrices
        let e12 = Matrix::from_fn(3, 3, |i, j| if (i, j) == (0, 1) { qi(1) } else { qi(0) });
        let e23 = Matrix::from_fn(3, 3, |i, j| if (i, j) == (1, 2) { qi(1) } else { qi(0) });
        let prod = exp_unipotent(&e12).unwrap().mul(&exp_unipotent(&e23).unwrap());
        let log = log_unipotent(&prod).unwrap();
        // expected: E12 + E23 + (1/2) E13
        assert_eq!(log.at(0, 1), &qi(1));
        assert_eq!(log.at(1, 2), &qi(1));
        assert_eq!(log.at(0, 2), &q(1, 2));
        // same computation through the abstract algebra
        let a = NilLieAlgebra::strictly_upper_triangular(3);
        let xi = upper_tri_basis_index(3, 0, 1);
        let yi = upper_tri_basis_index(3, 1, 2);
        let zi = upper_tri_basis_index(3, 0, 2);
        let z = a.bch(&LieVector::basis(3, xi), &LieVector::basis(3, yi));
        assert_eq!(z.coords[xi], qi(1));
        assert_eq!(z.coords[yi], qi(1));
        assert_eq!(z.coords[zi], q(1, 2));
    }

    #[test]
    fn exp_log_examples() {
        let zero = Matrix::<Q>::zero(3, 3);
        assert!(exp_unipotent(&zero).unwrap().is_identity());
        let e13 = Matrix::from_fn(3, 3, |i, j| if (i, j) == (0, 2) { qi(1) } else { qi(0) });
        let u = Matrix::identity(3).add(&e13);
        assert_eq!(log_unipotent(&u).unwrap(), e13);
        // mutually inverse on a nontrivial example
        let n = Matrix::from_fn(3, 3, |i, j| if j == i + 1 { qi(2) } else { qi(0) });
        let e = exp_unipotent(&n).unwrap();
        assert_eq!(log_unipotent(&e).unwrap(), n);
        // errors
        assert_eq!(exp_unipotent(&Matrix::identity(2)), Err(Error::NotNilpotent));
        assert_eq!(log_unipotent(&Matrix::zero(2, 2)), Err(Error::NotUnipotent));
    }

    #[test]
    fn lower_central_series_examples() {
        let ab = NilLieAlgebra::abelian(2);
        let s = ab.lower_central_series();
        assert_eq!(s.len(), 2);
        assert_eq!(s[0].len(), 2);
        assert!(s[1].is_empty());

        let h = heis3();
        let s = h.lower_central_series();
        assert_eq!(s.len(), 3);
        assert_eq!(s[0].len(), 3);
        assert_eq!(s[1], vec![LieVector::basis(3, 2)]);
        assert!(s[2].is_empty());
    }

    #[test]
    fn heis_central_series_with_extra_direction() {
        // n3 x Q: radical direction added as a central coordinate
        let a = NilLieAlgebra::new(4, &[(0, 1, 2, qi(1))], 2).unwrap();
        let s = a.lower_central_series();
        assert_eq!(s.len(), 3);
        assert_eq!(s[0].len(), 4);
        assert_eq!(s[1], vec![LieVector::basis(4, 2)]);
        let center = a.center();
        assert_eq!(center.len(), 2);
    }

    #[test]
    fn lattice_membership_examples() {
        let a = NilLieAlgebra::abelian(3);
        let z3 = LogLattice::standard(a.clone());
        assert!(z3.contains(&v(&[1, 2, 3])).unwrap());
        assert!(!z3.contains(&LieVector::new(vec![q(1, 2), qi(0), qi(0)])).unwrap());
        for b in z3.basis() {
            assert!(z3.contains(b).unwrap());
        }
        let a2 = NilLieAlgebra::abelian(2);
        let z2 = LogLattice::standard(a2.clone());
        let coarse = LogLattice::new(
            a2,
            vec![v(&[3, 0]), v(&[0, 1])],
        )
        .unwrap();
        assert_eq!(z2.index_scale(&coarse).unwrap().unwrap(), 3.into());
    }

    #[test]
    fn extend_partial_automorphism_examples() {
        let a = heis3();
        let d = 3;
        let idp: Vec<(LieVector, LieVector)> =
            (0..d).map(|i| (LieVector::basis(d, i), LieVector::basis(d, i))).collect();
        assert!(extend_partial_automorphism(&a, &idp).unwrap().unwrap().is_identity());

        // doubling: x -> 2x, y -> 2y, z -> 4z
        let pairs = vec![
            (LieVector::basis(3, 0), v(&[2, 0, 0])),
            (LieVector::basis(3, 1), v(&[0, 2, 0])),
            (LieVector::basis(3, 2), v(&[0, 0, 4])),
        ];
        let t = extend_partial_automorphism(&a, &pairs).unwrap().unwrap();
        assert_eq!(t, Matrix::diagonal(&[qi(2), qi(2), qi(4)]));

        // z -> z fails bracket preservation (needs 4z)
        let bad = vec![
            (LieVector::basis(3, 0), v(&[2, 0, 0])),
            (LieVector::basis(3, 1), v(&[0, 2, 0])),
            (LieVector::basis(3, 2), v(&[0, 0, 1])),
        ];
        assert!(extend_partial_automorphism(&a, &bad).unwrap().is_none());

        // non-spanning sources are an error, distinct from bracket failure
        let under = vec![(LieVector::basis(3, 0), LieVector::basis(3, 0))];
        assert_eq!(extend_partial_automorphism(&a, &under), Err(Error::Underdetermined));
    }

    #[test]
    fn half_lattice_group_closure() {
        let h = heis3();
        let half = LogLattice::new(
            h.clone(),
            vec![v(&[1, 0, 0]), v(&[0, 1, 0]), LieVector::new(vec![qi(0), qi(0), q(1, 2)])],
        )
        .unwrap();
        // closed at every level
        for n in 1..=4i64 {
            assert!(half.scaled_set_is_group(&qi(n)));
        }
        // the integer lattice is closed only at even levels
        let z3 = LogLattice::standard(h);
        assert!(!z3.scaled_set_is_group(&qi(1)));
        assert!(z3.scaled_set_is_group(&qi(2)));
        assert!(!z3.scaled_set_is_group(&qi(3)));
    }
}
