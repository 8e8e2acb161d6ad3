//! Finite group-groupoids, crossed modules over groups and over group-groupoids,
//! double group-groupoids and crossed squares, with the functors relating them
//! and executable checks that their round trips are isomorphisms.

pub mod catalog;
pub mod cli;
pub mod dgg;
pub mod enumerate;
pub mod equiv;
pub mod gpd;
pub mod grp;
pub mod report;
pub mod serial;
pub mod xmod;
pub mod xsq;

pub use report::{Invalid, Report, Violation};
