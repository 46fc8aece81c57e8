//! Command-line front end for the pedal-geometry library: randomized
//! verification runs, scene export as JSON, and SVG figures.

pub mod cli;
pub mod document;
pub mod input;
pub mod svg;

pub use cli::run;
pub use document::{ReportDocument, SceneDocument};
pub use svg::{render_svg, Layer};
