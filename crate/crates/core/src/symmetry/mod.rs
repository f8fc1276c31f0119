//! Automorphism groups, induced actions and orbits on tuples.

mod group;
mod orbits;
mod perm;
mod search;

pub use group::{automorphisms, AutGroup, ELEMENT_LIMIT};
pub use orbits::{
    induced_edge_action, induced_group, is_distance_transitive, is_s_arc_transitive, is_s_geodesic_transitive,
    orbit_of, transitive_on, transitive_on_arcs, transitive_on_geodesics, OrbitPartition,
};
pub use perm::Permutation;
pub use search::isomorphic;
