//! Lie group types, the transitive sphere table and named embeddings.

mod containment;
mod embedding;
mod group;
mod spheres;

pub use containment::Containments;
pub(crate) use embedding::multiplicities;
pub use embedding::{NamedEmbedding, RankDeclaration};
pub use group::{canonicalize, Family, GroupType, SimpleGroupLabel};
pub use spheres::{
    match_sphere_row, sphere_quotient, sphere_rows, spheres_acted_on, transitive_sphere_pairs,
    SphereActionRow, SphereRowFamily,
};
