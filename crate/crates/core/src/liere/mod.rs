//! Root systems, Weyl characters and weight-multiplicity-free representations.

pub mod character;
pub mod classify;
pub mod root_system;

pub use character::{
    char_adams, char_alt, char_sum, char_sym, char_tensor, decompose, dominant_multiplicities, dominant_weights,
    freudenthal_character, fs_type, fs_type_by_peeling, multiplicity_of, racah_speiser, self_dual, Character, FsType,
    VirtualCharacter,
};
pub use classify::{
    classify_types, classify_wmf, dominant_weights_up_to_dim, exceptional_dims, group_label, is_minuscule,
    is_quasi_minuscule, is_wmf, is_wmf_by_multiplicities, kernel_order, orbit_rank_bound, quasi_minuscule_dim_search,
    root_multiple_condition, TableRow, WmfEntry,
};
pub use root_system::{DynkinType, Family, RootSystem, Weight};
