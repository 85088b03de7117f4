use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::pn::{PnEquation, PnLeading};
use super::residues::{conventional_residue_choice, enumerate_residues, published_residue_choice, ResidueChoice};
use crate::deform1::Gen1Family;
use crate::error::Result;
use crate::ratcore::{serial::scalar_str, Scalar, YPoly};

/// Largest P degree tried when probing a selection.
pub const PROBE_MAX_DEGREE: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChoiceClass {
    Published,
    Conventional,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeSolution {
    pub degree: usize,
    pub poly: YPoly,
    #[serde(with = "scalar_str")]
    pub r2: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChoiceReport {
    pub choice: ResidueChoice,
    pub class: ChoiceClass,
    pub leading: PnLeading,
    /// Polynomial solutions found with deg P ≤ `PROBE_MAX_DEGREE`.
    pub solutions: Vec<ProbeSolution>,
    /// No polynomial P makes R₂ constant.
    pub r_dependent: bool,
}

/// Every selection of one residue per pole class (16 when the seed has a
/// single zero class), classified and probed for polynomial P.
///
/// Without moving poles (d′ = 0) P = 1 and the selection works only when G
/// is constant; otherwise P must have degree 1..=`PROBE_MAX_DEGREE`.
pub fn enumerate_other_choices(parent: &Gen1Family) -> Result<Vec<ChoiceReport>> {
    let p = parent.params();
    let w = p.omega();
    let wt = parent.deformed_superpotential();
    let seed = parent.seed_poly();
    let set = enumerate_residues(&wt, w)?;
    let published = published_residue_choice(parent.i(), p.ell(), w)?;
    let conventional = conventional_residue_choice(&wt, p.ell(), w);
    let d_values: Vec<Scalar> = match &set.d1 {
        Some(pair) => pair.roots().to_vec(),
        None => vec![Scalar::zero()],
    };
    let mut out = Vec::new();
    for b in set.b1.roots() {
        for d in &d_values {
            for dp in set.d1p.roots() {
                for c in set.c1.roots() {
                    let choice = ResidueChoice::new(b.clone(), d.clone(), dp.clone(), c);
                    let class = if choice == published {
                        ChoiceClass::Published
                    } else if choice == conventional {
                        ChoiceClass::Conventional
                    } else {
                        ChoiceClass::Other
                    };
                    let eq = PnEquation::from_choice(&wt, &choice, &seed, w);
                    let degrees = if dp.is_zero() { 0..=0 } else { 1..=PROBE_MAX_DEGREE };
                    let solutions: Vec<ProbeSolution> = degrees
                        .filter_map(|n| {
                            eq.solve(n).ok().map(|(poly, r2)| ProbeSolution { degree: n, poly, r2 })
                        })
                        .collect();
                    out.push(ChoiceReport {
                        r_dependent: solutions.is_empty(),
                        choice,
                        class,
                        leading: eq.leading(),
                        solutions,
                    });
                }
            }
        }
    }
    Ok(out)
}
