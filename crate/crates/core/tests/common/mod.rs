#![allow(dead_code)]

pub mod reference;
pub mod sod_exact;
