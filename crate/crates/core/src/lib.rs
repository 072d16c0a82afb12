//! Kinetic master-equation simulation of nonadiabatic electron transfer
//! between molecules whose high-frequency vibrations are coupled to an
//! infrared cavity mode.
//!
//! The pipeline is: [`modes`] builds the normal modes of the cavity and
//! vibrations, [`states`] enumerates the composite electronic-vibrational
//! states, [`rates`] assembles the generator K of dp/dt = K p, [`propagate`]
//! integrates it, and [`scenario`] wires everything from a JSON config to
//! CSV or JSON output.
//!
//! Energies are in cm⁻¹, times in ps and rates in ps⁻¹ throughout.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod error;
pub mod modes;
pub mod network;
pub mod propagate;
pub mod rates;
pub mod scenario;
pub mod states;
pub mod units;

pub use error::{Error, Result};
