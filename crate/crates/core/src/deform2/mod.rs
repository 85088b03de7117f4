//! Second isospectral deformation, built on the m = 1 first-generation
//! families.

mod choices;
mod family;
mod pn;
mod residues;

pub use choices::{enumerate_other_choices, ChoiceClass, ChoiceReport, ProbeSolution, PROBE_MAX_DEGREE};
pub use family::{window_predicts_valid, Gen2Family, TwoIndexEop};
pub use pn::{closed_form_pn, fixed_part, gen2_ell, solve_pn, PnEquation, PnLeading, PnSolution};
pub use residues::{
    analytic_constant, conventional_residue_choice, enumerate_residues, published_residue_choice, ResiduePair,
    ResidueChoice, ResidueSet, ScalarValue,
};

pub(crate) mod opt_scalar {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::ratcore::{format_scalar, parse_scalar, Scalar};

    pub fn serialize<S: Serializer>(x: &Option<Scalar>, s: S) -> Result<S::Ok, S::Error> {
        x.as_ref().map(format_scalar).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Scalar>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| parse_scalar(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}
