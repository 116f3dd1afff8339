//! Normal forms in the Stanley-Reisner quotient of the polynomial ring.
//!
//! The Stanley-Reisner ideal of a complex is generated by the monomials over
//! its missing faces. Since the ideal is monomial, reduction to normal form
//! deletes every term whose support is a non-face and keeps the rest
//! untouched; equality in the quotient is equality of normal forms.

use crate::asc::SimplicialComplex;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::vset::VertexSet;

/// A complex packaged with its missing-face filter, defining normal forms
/// in `SR(K;Z)`. The filter is built eagerly at construction.
#[derive(Clone, Debug)]
pub struct SRContext {
    complex: SimplicialComplex,
    missing: Vec<VertexSet>,
}

impl SRContext {
    pub fn new(complex: &SimplicialComplex) -> Self {
        SRContext {
            missing: complex.missing_faces(),
            complex: complex.clone(),
        }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn missing_faces(&self) -> &[VertexSet] {
        &self.missing
    }

    /// A monomial survives reduction iff its support is a face, i.e. the
    /// support contains no missing face.
    pub fn support_is_face(&self, support: &VertexSet) -> bool {
        !self.missing.iter().any(|mf| mf.is_subset(support))
    }

    fn check_context(&self, p: &Polynomial) -> Result<()> {
        if p.vars().as_ref() == self.complex.vertices().as_ref() {
            Ok(())
        } else {
            Err(Error::ContextMismatch(
                "polynomial is not over this complex's vertex table".into(),
            ))
        }
    }

    /// The normal form of `p` in `SR(K;Z)`: the terms of `p` whose monomial
    /// support is a face of `K`. Idempotent and linear.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        self.check_context(p)?;
        let width = self.complex.m();
        let mut out = Polynomial::zero(p.vars().clone());
        for (m, c) in p.terms() {
            if self.support_is_face(&m.support(width)) {
                out = out.add(&Polynomial::monomial(p.vars().clone(), m.clone(), c))?;
            }
        }
        Ok(out)
    }

    /// Equality in the quotient ring, as equality of normal forms.
    pub fn equal_in_sr(&self, p: &Polynomial, q: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)? == self.normal_form(q)?)
    }
}
