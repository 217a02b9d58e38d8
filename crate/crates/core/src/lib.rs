pub mod census;
pub mod classifier;
pub mod format;
pub mod gaussian;
pub mod graph;
pub mod spectra;
pub mod switching;
