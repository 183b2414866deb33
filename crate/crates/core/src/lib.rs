//! Exact computations for elliptic surfaces with `p_g = q = 1`.

#![allow(clippy::needless_range_loop)]

pub mod basechange;
pub mod exactalg;
pub mod hurwitz;
pub mod kodaira;
pub mod nslattice;
pub mod qseries;
pub mod reduction;
pub mod report;
pub mod trisection;
pub mod weierstrass;
