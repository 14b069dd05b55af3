//! Exact-arithmetic engine for bijective skew PBW extensions: canonical-form
//! arithmetic in the extension and its free modules, the right division
//! algorithm, and the right Buchberger algorithm for right submodules.

pub mod error;
pub mod scalar;
pub mod mpoly;
pub mod spoly;
pub mod coeffring;
pub mod algebra;
pub mod order;
pub mod oracle;
pub mod samples;
pub mod display;
pub mod parse;
pub mod division;
pub mod buchberger;
pub mod cli;

pub use error::{Error, Result};
