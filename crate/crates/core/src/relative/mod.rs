//! Constructions relative to a subalgebra `𝔨 ⊂ 𝔤`: the embedding
//! `𝒲𝔨 → 𝒲𝔤` and the relative Dirac element, Harish-Chandra projections,
//! the quotient `U𝔤/U𝔤𝔨^f` with the Duflo–Rouvière map, and the quotient
//! complex attached to an isotropic subalgebra.

pub mod harish_chandra;
pub mod isotropic;
pub mod rouviere;
pub mod vogan;

pub use harish_chandra::TriangularPair;
pub use isotropic::IsotropicQuotient;
pub use rouviere::SymmetricPair;
pub use vogan::RelativePair;

use crate::algebra::SuperAlgebra;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::liealg::{CatalogEntry, QuadraticLieAlgebra, SubalgebraDecomposition};
use crate::rewrite::Word;

/// Evaluates words letter by letter in `alg`.
pub fn evaluate_words<A: SuperAlgebra + ?Sized>(
    alg: &A,
    x: &Element<Word>,
    image: &dyn Fn(u8) -> Element<A::Mono>,
) -> Element<A::Mono> {
    let mut out = Element::zero();
    for (w, c) in x {
        let mut acc = alg.one();
        for &l in w {
            acc = alg.mul(&acc, &image(l));
            if acc.is_zero() {
                break;
            }
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// The algebra of an entry after its optional base change, with the chosen
/// decomposition.
pub fn adapted(
    entry: &CatalogEntry,
    pick: impl Fn(&CatalogEntry) -> Option<&SubalgebraDecomposition>,
) -> Result<(QuadraticLieAlgebra, SubalgebraDecomposition)> {
    let dec = pick(entry).ok_or_else(|| Error::Invalid(format!("{} has no suitable subalgebra data", entry.name)))?;
    let g = match &dec.basis_change {
        Some(t) => entry.algebra.change_basis(t)?.with_name(entry.name.clone()),
        None => entry.algebra.clone(),
    };
    Ok((g, dec.clone()))
}

fn check_indices(dim: usize, idx: &[usize]) -> Result<()> {
    let mut seen = vec![false; dim];
    for &i in idx {
        if i >= dim || seen[i] {
            return Err(Error::Invalid(format!("bad subalgebra index list {idx:?} for dimension {dim}")));
        }
        seen[i] = true;
    }
    Ok(())
}

/// `B(e_i, e_j) = 0` for all `i ∈ xs`, `j ∈ ys`.
fn orthogonal(g: &QuadraticLieAlgebra, xs: &[usize], ys: &[usize]) -> bool {
    xs.iter().all(|&i| ys.iter().all(|&j| g.b(i, j).is_zero()))
}
