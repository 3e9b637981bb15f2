pub mod error;
pub mod explorer;
pub mod gf;
pub mod mat;
pub mod pipeline;
pub mod poly;
pub mod qcc;
pub mod quantum;
pub mod tables;
pub mod wdist;
