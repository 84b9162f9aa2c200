use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lattice::{kernel_basis, smith_normal_form, LatticeMatrix};

/// An integer linear map `Z^n -> Z^r`, usually an epimorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionMap {
    matrix: LatticeMatrix,
    kernel: LatticeMatrix,
}

impl ProjectionMap {
    pub fn new(matrix: LatticeMatrix) -> Result<ProjectionMap> {
        let kernel = kernel_basis(&matrix);
        Ok(ProjectionMap { matrix, kernel })
    }

    /// Rejects maps whose image is not all of `Z^r`.
    pub fn epimorphism(matrix: LatticeMatrix) -> Result<ProjectionMap> {
        let p = Self::new(matrix)?;
        if !p.is_surjective() {
            return Err(Error::NotSurjective);
        }
        Ok(p)
    }

    pub fn identity(n: usize) -> ProjectionMap {
        Self::new(LatticeMatrix::identity(n)).expect("identity")
    }

    /// Forgets the coordinate `drop` of `R^n`.
    pub fn forget_coordinate(n: usize, drop: usize) -> ProjectionMap {
        let rows = (0..n)
            .filter(|&i| i != drop)
            .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::from(0) }).collect())
            .collect();
        Self::new(LatticeMatrix::from_rows(n, rows)).expect("coordinate projection")
    }

    pub fn matrix(&self) -> &LatticeMatrix {
        &self.matrix
    }

    pub fn kernel(&self) -> &LatticeMatrix {
        &self.kernel
    }

    pub fn source_rank(&self) -> usize {
        self.matrix.col_count()
    }

    pub fn target_rank(&self) -> usize {
        self.matrix.row_count()
    }

    pub fn is_surjective(&self) -> bool {
        let r = self.matrix.row_count();
        if r == 0 {
            return true;
        }
        let s = smith_normal_form(&self.matrix);
        s.rank() == r && s.invariants.iter().all(One::is_one)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ProjectionMap) -> Result<ProjectionMap> {
        Self::new(other.matrix.mul(&self.matrix)?)
    }
}
