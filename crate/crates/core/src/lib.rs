#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod counterexample;
pub mod geometry;
pub mod numeric;
pub mod oracle;
pub mod sylvester;
