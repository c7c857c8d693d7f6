pub mod fd;
pub mod grid;
pub mod quad;
pub mod taylor;
pub mod testfn;
