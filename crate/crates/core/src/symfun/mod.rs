//! Partitions, GL dimensions, symmetric-group characters, Kostka numbers,
//! and multiplicities of Schur modules in Sym^r(Sym^{d_1} ⊗ … ⊗ Sym^{d_n}).

mod cache;
mod characters;
mod kostka;
mod partition;
mod plethysm;

pub use cache::{TableCache, CACHE_ENV, CACHE_VERSION};
pub use characters::{character, class_size, factorial, z, CharacterTable};
pub use kostka::{kostka, KostkaMatrix};
pub use partition::{dim_gl, partitions, NPartition, Partition};
pub use plethysm::{
    combine, factor_table, m_tau, mult_in_sym, mult_in_sym_characters, veronese_k1q,
    weight_multiplicities_direct, FactorTable, Route,
};
