//! Matrix realizations of weight modules over unrolled quantum sl(2), with
//! the braiding, twist and duality data of the ribbon structure.

mod module;
mod morphism;
mod ribbon;

pub use module::{make_epsilon, make_invertible, make_simple, make_valpha, tensor, trivial, ColorLabel, ModuleLabel, WeightModule};
pub use morphism::{hom_dimension, MorphismMatrix};
pub use ribbon::{
    braiding, braiding_inverse_matrix, braiding_matrix, categorical_dimension, duality_maps, left_twist_matrix, pivotal_diagonal,
    r_matrix, twist, twist_matrix, twist_scalar, DualityMaps, DualityVectors,
};
