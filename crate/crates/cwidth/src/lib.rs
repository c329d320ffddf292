//! File formats, seeded reports and the command-line front end for
//! [`cwidth_core`].

pub mod cli;
pub mod formats;
pub mod scan;
pub mod words;
