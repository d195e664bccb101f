//! Free resolutions, Ext, and the detection of components by dimension.

mod canon;
mod comp;
mod ext;
mod resolution;
#[cfg(test)]
mod tests;

pub use canon::{canon_map, equidim_hull, CanonMapResult};
pub use comp::{ass_prim_codim, inter_ass_prim, rem_comp};
pub use ext::{ext_all, ext_annihilators, ext_from_resolution, ext_module, ExtPresentation};
pub use resolution::{free_resolution, minimal_generators, prune_presentation, Resolution};
