pub mod arrays;
pub mod cli;
pub mod graphcore;
pub mod permgroup;
pub mod report;
pub mod symmetry;
