//! Programmatic versions of the bundled fixture groups, shared by tests,
//! the case-study verifiers, and the spec-file round-trip checks.

use crate::group::{LatticeSpec, TorusGen};
use crate::lie::{LieVector, LogLattice, NilLieAlgebra};
use crate::matrix::Matrix;
use crate::scalar::{q, qi, Q};

/// The hyperbolic automorphism of Z^2 with psi(1,0) = (2,1), psi(0,1) = (1,1).
pub fn psi_matrix() -> Matrix<Q> {
    Matrix::new(2, 2, vec![qi(2), qi(1), qi(1), qi(1)])
}

/// Sol lattice Z^2 ⋊ <psi>.
pub fn sol_spec() -> LatticeSpec {
    let a = NilLieAlgebra::abelian(2);
    let lat = LogLattice::standard(a.clone());
    LatticeSpec::new(a, lat, vec![TorusGen { action: psi_matrix(), label: "psi".into() }], "sol")
        .expect("sol fixture is valid")
}

/// Heisenberg lattice of dimension 2n+1 in half-corrected log coordinates:
/// x_i, y_i integral, central coordinate in (1/2)Z. The congruence set is a
/// group at every level.
pub fn heisenberg_half_spec_n(n: usize) -> LatticeSpec {
    let a = NilLieAlgebra::heisenberg(n);
    let d = 2 * n + 1;
    let mut basis: Vec<LieVector> = (0..2 * n).map(|i| LieVector::basis(d, i)).collect();
    basis.push(LieVector::basis(d, 2 * n).scale(&q(1, 2)));
    let lat = LogLattice::new(a.clone(), basis).expect("half lattice basis is valid");
    LatticeSpec::new(a, lat, vec![], format!("heisenberg{}_half", d))
        .expect("heisenberg fixture is valid")
}

/// Three-dimensional half-integer Heisenberg lattice.
pub fn heisenberg_half_spec() -> LatticeSpec {
    heisenberg_half_spec_n(1)
}

/// Integer Heisenberg lattice H_3(Z) on the standard log basis; its
/// congruence sets are groups exactly at even levels.
pub fn heisenberg3_spec() -> LatticeSpec {
    let a = NilLieAlgebra::heisenberg(1);
    let lat = LogLattice::standard(a.clone());
    LatticeSpec::new(a, lat, vec![], "heisenberg3").expect("heisenberg3 fixture is valid")
}

/// Z x (Z^2 ⋊ <psi>) with the torus generator acting by psi on the first
/// two coordinates and trivially on the third.
pub fn bg_example_spec() -> LatticeSpec {
    let a = NilLieAlgebra::abelian(3);
    let lat = LogLattice::standard(a.clone());
    let action = psi_matrix().block_diag(&Matrix::identity(1));
    LatticeSpec::new(a, lat, vec![TorusGen { action, label: "t".into() }], "bg_example")
        .expect("bg fixture is valid")
}

/// Z^2 extended by a single unipotent shear; abstractly the integer
/// Heisenberg group, used to exercise the shadow lifting.
pub fn heisenberg_as_shadow_spec() -> LatticeSpec {
    let a = NilLieAlgebra::abelian(2);
    let lat = LogLattice::standard(a.clone());
    let action = Matrix::new(2, 2, vec![qi(1), qi(1), qi(0), qi(1)]);
    LatticeSpec::new(a, lat, vec![TorusGen { action, label: "u".into() }], "z2_by_shear")
        .expect("shear fixture is valid")
}

/// Heisenberg algebra with a unipotent torus generator x -> x, y -> x+y,
/// z -> z acting on the standard lattice.
pub fn heisenberg_with_unipotent_gen_spec() -> LatticeSpec {
    let a = NilLieAlgebra::heisenberg(1);
    let lat = LogLattice::standard(a.clone());
    let action = Matrix::new(
        3,
        3,
        vec![qi(1), qi(1), qi(0), qi(0), qi(1), qi(0), qi(0), qi(0), qi(1)],
    );
    LatticeSpec::new(a, lat, vec![TorusGen { action, label: "s".into() }], "heis_shifted")
        .expect("shifted heisenberg fixture is valid")
}
