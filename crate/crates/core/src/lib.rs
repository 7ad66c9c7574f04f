//! Finite residuated lattices of the HpsUL, UL and IUL families: validation
//! and classification, enumeration of canonical chains, congruences and
//! subdirect decomposition, the downset construction that embeds a finite
//! partial subalgebra of a chain into a finite algebra of the same class,
//! a formula language with a bounded semantic decider, and finite
//! monotone-subsequence extraction.

pub mod algebra;
pub mod classify;
pub mod combinatorics;
pub mod congruence;
pub mod enumeration;
pub mod error;
pub mod fep;
pub mod format;
pub mod logic;

pub use algebra::{derive_residuals, Elem, FiniteResiduatedLattice, Order};
pub use classify::{check_axioms, check_semilinearity, Class, ClassReport};
pub use combinatorics::{compose_indices, omega_extract, Extraction, Label, NatVecSeq, SubseqIndex};
pub use congruence::{principal_congruence, subdirect_decompose, Congruence, Decomposition};
pub use enumeration::{direct_product, enumerate_chains, ChainFamily};
pub use error::{AlgebraError, CombinatoricsError, DecompositionError, EvalError, FepError, ParseError};
pub use fep::{build_d, verify_embedding, verify_lemmas, DownsetAlgebra, Mode, PartialSubalgebra};
pub use format::{AlgebraFile, FormatError};
pub use logic::{decide_bounded, eval, fin_bridge, parse, validates, Formula, Verdict};
