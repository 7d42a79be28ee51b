//! Exact-arithmetic toolkit for toric varieties and toric Deligne–Mumford stacks
//! given by Cox data: a weight matrix together with an irrelevant ideal.
//!
//! The crate is organised bottom-up:
//!
//! * [`intlattice`]: integer matrices, minors, Hermite/Smith forms, standardization.
//! * [`coxpres`]: Cox presentations, well-formedness and the well-forming process.
//! * [`galefan`]: Gale duality, fans, Cox's irrelevant-ideal recipe, star subdivisions.
//! * [`singular`]: cyclic quotient singularities of weighted-bundle charts.
//! * [`vgit`]: rank-2 chamber sweeps, wall crossings and 2-ray games.
//! * [`blowup`]: weighted blow-ups and discrepancy bookkeeping.
//! * [`format`]: the plain-text file formats used by the command-line tool.

pub mod blowup;
pub mod coxpres;
pub mod error;
pub mod format;
pub mod galefan;
pub mod intlattice;
pub mod singular;
pub mod vgit;

pub use coxpres::{CoxPresentation, MonomialIdeal, WellFormingCertificate, WellFormingStep};
pub use error::{CoxError, Result};
pub use galefan::{Fan, WeightedBundleSpec};
pub use intlattice::{IntMatrix, RationalScalar, UnimodularWitness};
pub use singular::{ChartReport, QuotientSingularity};
pub use vgit::{EndBehavior, GameDiagram, Ray2, WallCrossing};
