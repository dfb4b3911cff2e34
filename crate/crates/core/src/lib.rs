pub mod autgrp;
pub mod centralext;
pub mod error;
pub mod kernel;
pub mod laurent;
pub mod text;
pub mod virasoro;
pub mod witt;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/witt.md")]
    mod witt {}
    #[doc = include_str!("../../../book/src/grading.md")]
    mod grading {}
    #[doc = include_str!("../../../book/src/automorphisms.md")]
    mod automorphisms {}
    #[doc = include_str!("../../../book/src/virasoro.md")]
    mod virasoro {}
    #[doc = include_str!("../../../book/src/central-extensions.md")]
    mod central_extensions {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
