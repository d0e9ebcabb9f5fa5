//! Independent reference computations used to derive and check fixtures.
//! None of this shares code with the library beyond its plain data types.
#![allow(dead_code)]

pub mod chromatic;
pub mod hull;
pub mod planar;
