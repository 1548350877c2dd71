pub mod error;
pub mod grid;
pub mod io;
pub mod models;
pub mod random_space;
pub mod recon;
pub mod solver;
pub mod weno;

pub use error::{Error, Result};

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/intro.md")]
mod book_intro {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/grids.md")]
mod book_grids {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/random_space.md")]
mod book_random_space {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/reconstruction.md")]
mod book_reconstruction {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/weno.md")]
mod book_weno {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/fluxes.md")]
mod book_fluxes {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/well_balancing.md")]
mod book_well_balancing {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/time_stepping.md")]
mod book_time_stepping {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/presets_cli.md")]
mod book_presets_cli {}
