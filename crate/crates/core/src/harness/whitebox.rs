//! Exact projection from matrix-backend strings to matrices.

use std::sync::Arc;

use crate::bbcore::matrix::{Matrix, MatrixGroup};
use crate::bbcore::GroupString;
use crate::error::Result;
use crate::ffield::{ExplicitField, FieldElement};

/// The projection π for a matrix backend. Quotient backends project to
/// matrices defined up to the central scalars; [`WhiteBox::key`] picks a
/// canonical representative.
#[derive(Clone, Debug)]
pub struct WhiteBox {
    group: Arc<MatrixGroup>,
}

impl WhiteBox {
    pub fn new(group: Arc<MatrixGroup>) -> Self {
        Self { group }
    }

    pub fn group(&self) -> &Arc<MatrixGroup> {
        &self.group
    }

    pub fn field(&self) -> &ExplicitField {
        self.group.field()
    }

    pub fn is_quotient(&self) -> bool {
        self.group.is_quotient()
    }

    /// Scalars by which a projection is ambiguous.
    pub fn center(&self) -> &[FieldElement] {
        self.group.center()
    }

    pub fn project(&self, s: &GroupString) -> Result<Matrix> {
        self.group.try_decode(s)
    }

    /// Byte key equal for two matrices exactly when they are the same
    /// element of the encrypted group.
    pub fn key(&self, m: &Matrix) -> Vec<u8> {
        let f = self.field();
        self.center().iter().map(|l| self.group.encode(&m.scale(f, l)).0).min().expect("center contains 1")
    }

    pub fn project_key(&self, s: &GroupString) -> Result<Vec<u8>> {
        Ok(self.key(&self.project(s)?))
    }

    pub fn encode(&self, m: &Matrix) -> GroupString {
        self.group.encode(m)
    }

    /// Whether `a = λ·b` for some λ in the center.
    pub fn same_up_to_center(&self, a: &FieldElement, b: &FieldElement) -> bool {
        let f = self.field();
        self.center().iter().any(|l| &f.mul(l, b) == a)
    }
}
