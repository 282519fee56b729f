//! Independent reference models used by the integration tests.

#![allow(dead_code)]

pub mod bar;
pub mod skew;
