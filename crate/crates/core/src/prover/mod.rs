//! Certificate-producing verification engine: rank-one vanishing lemmas,
//! wedge-power vanishing campaigns, scenario construction, and the
//! characteristic-level identities they feed into.

pub mod lemmas;
pub mod scenario;
pub mod shift;
pub mod wedge;

pub use lemmas::{check_demi1, check_demi2, Chain, Demi1Outcome, Demi2Outcome};
pub use scenario::{build_scenario, ProofScenario, Stage};
pub use shift::{
    stage_chain_audit, verify_main_ses, verify_shift_identity_a, verify_shift_identity_d,
    verify_step3_pivot, IdentityReport, SesReport, StageAuditReport,
};
pub use wedge::{
    step1_certificate, step2_certificate, step3_certificate, verify_wedge_vanishing, Rule,
    TypeDContext, UncoveredWeight, VanishingCertificate, WeightRecord,
};
