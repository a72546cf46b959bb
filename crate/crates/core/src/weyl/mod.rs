//! Elements, conjugacy classes and characters of `S_n`, `B_n` and `D_n`.

mod characters;
mod classes;
mod perm;
mod table;

pub use characters::{
    bn_character, character_value, irrep_dimension, sn_character, split_pair_sum_character,
};
pub use classes::{
    bn_centralizer, conjugacy_classes, is_split_type, signed_types, sn_centralizer, ClassLabel,
    ConjugacyClass, MAX_CLASS_RANK,
};
pub use perm::{SignedCycleType, SignedPermutation};
pub use table::{
    character_table, inner_product, rational_to_i64, CharacterTable, ClassFunction, RowKind,
    TableRow,
};

/// `ε(w)`: `−1` raised to the number of negated coordinates.
pub fn epsilon(w: &SignedPermutation) -> i64 {
    w.epsilon()
}

/// The signed cycle type of `w`.
pub fn signed_cycle_type(w: &SignedPermutation) -> SignedCycleType {
    w.signed_cycle_type()
}
