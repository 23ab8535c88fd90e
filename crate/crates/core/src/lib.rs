pub mod charpoly;
pub mod error;
pub mod height;
pub mod jantzen;
pub mod parabolic;
pub mod poly;
pub mod rootsys;
pub mod weyl;

/// Library version, part of every coset cache key.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/root-systems.md")]
    mod root_systems {}
    #[doc = include_str!("../../../book/src/weyl-groups.md")]
    mod weyl_groups {}
    #[doc = include_str!("../../../book/src/parabolics.md")]
    mod parabolics {}
    #[doc = include_str!("../../../book/src/characters.md")]
    mod characters {}
    #[doc = include_str!("../../../book/src/heights.md")]
    mod heights {}
    #[doc = include_str!("../../../book/src/jantzen.md")]
    mod jantzen {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
