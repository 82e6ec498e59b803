//! Seifert forms, Jones polynomials and band twists of genus-one knots.
//!
//! The crate covers exact Laurent polynomial arithmetic, Seifert matrices
//! with their S-equivalence moves, a decision procedure for congruence of
//! genus-one forms under band twisting, PD diagrams with the Kauffman
//! bracket and Jones polynomial, and the λ(n,m,p) two-band knot family.

pub mod diagram;
pub mod error;
pub mod lambda;
pub mod laurent;
pub mod matrix;
pub mod report;
pub mod seifert;
pub mod sequiv;

pub use diagram::{
    connect_sum_diagram, jones, jones_twist, kauffman_bracket, validate_pd, BracketOptions, JonesPolynomial,
    PlanarDiagram,
};
pub use error::{Error, Result};
pub use lambda::{lambda_diagram, lambda_seifert, lambda_twist, LambdaSpec};
pub use laurent::LaurentPoly;
pub use matrix::IntMatrix;
pub use report::{paper_report, PaperReport, ReportLine, Verdict};
pub use seifert::{CongruenceCertificate, SeifertMatrix};
pub use sequiv::{
    brute_force_congruence, first_sequiv_certificate, first_sequiv_condition, twist_form, verify_certificate,
    Band, Decision, SEquivReport, TwistParams,
};
