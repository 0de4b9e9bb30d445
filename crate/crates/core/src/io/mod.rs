//! Serialization and rendering.

pub mod json;
pub mod render;

pub use render::{render, RenderFormat, RenderSpec};
