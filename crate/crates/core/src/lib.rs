//! Exposure orders and Gröbner bases for one-sided ideals of free group algebras.

pub mod algebra;
pub mod engine;
pub mod express;
pub mod oracle;
pub mod orders;
pub mod rsystem;
pub mod scalars;
pub mod words;
