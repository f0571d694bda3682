//! Explicit inverse systems realizing admissible Hilbert functions. Every
//! recipe is re-verified through the Hilbert-function engine before it is
//! returned.

mod gorenstein;
mod level;
mod witness;

pub use gorenstein::gorenstein_construct;
pub use level::level_construct_h1_3;
pub use witness::{stanley_witness, witness_f, witness_g, STANLEY_NVARS};

use crate::apolar::{text::parse_poly_in, Monomial};
use crate::error::{Error, Result};
use crate::invsys::{local_hilbert_function, InverseSystem, OSequence};
use crate::{Poly, Rational};

/// Generators for a target Hilbert function, with the branch that produced
/// them.
#[derive(Clone, Debug)]
pub struct Recipe {
    pub target_h: OSequence,
    pub case_path: String,
    pub generators: Vec<Poly>,
}

/// Verifies the Hilbert function of `generators` and packages the recipe.
fn finish(target_h: &OSequence, case_path: String, generators: Vec<Poly>) -> Result<Recipe> {
    let computed = hilbert_function_of(&generators)?;
    if &computed != target_h {
        return Err(Error::ConstructionFault {
            case_path,
            expected: target_h.to_string(),
            computed: computed.to_string(),
        });
    }
    Ok(Recipe {
        target_h: target_h.clone(),
        case_path,
        generators,
    })
}

fn hilbert_function_of(gens: &[Poly]) -> Result<OSequence> {
    Ok(local_hilbert_function(&InverseSystem::new(gens.to_vec())?))
}

/// `x_{v1}^{e1} * ...` in `n` variables, with 1-based variable indices.
fn mono(n: usize, powers: &[(usize, u8)]) -> Poly {
    let zero_based: Vec<(usize, u8)> = powers.iter().map(|&(v, e)| (v - 1, e)).collect();
    Poly::from_monomial(Monomial::from_powers(n, &zero_based), Rational::from_integer(1.into()))
}

/// A fixed polynomial literal in `n` variables.
fn lit(n: usize, text: &str) -> Poly {
    parse_poly_in(text, n).expect("polynomial literal")
}

fn sum(n: usize, terms: impl IntoIterator<Item = Poly>) -> Poly {
    terms.into_iter().fold(Poly::zero(n), |acc, t| &acc + &t)
}
