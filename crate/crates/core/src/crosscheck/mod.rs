//! Specializations to classical Grothendieck variants, Matsumura's formulas, and
//! brute-force references used to cross-check the refined polynomials.

pub mod lemmas;
pub mod matsumura;
pub mod oracle;
pub mod sweep;

use crate::error::{Error, Result};
use crate::int::Int;
use crate::jt::GFamily;
use crate::poly::{Family, ParamMap, ParamPoly, Target};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    /// Buch's `G_{ν/λ}(x)`: `α -> 0`, `β -> 1`.
    BuchG,
    /// Lam–Pylyavskyy `g_{λ/μ}(x)`: `α -> 0`, `β -> 1`.
    LpG,
    /// Yeliussizov's `G^{(α,β)}`: `α_i -> α`, `β_i -> -β`.
    YeliussizovG,
    /// Yeliussizov's `g^{(α,β)}`: `α_i -> -α`, `β_i -> β`.
    YeliussizovSmallG,
    /// Chan–Pflueger `RG_λ(x; β)`: `α -> 0`.
    ChanPflueger,
    /// Galashin–Grinberg–Liu `g̃_{λ/μ}(x; β)`: `α -> 0`.
    Ggl,
    /// Matsumura's `G_{λ/μ, f/g}`: row flags `(g, f)`, `α -> 0`, `β_i -> -β`.
    Matsumura,
    /// Grinberg and Kim's flagged `g̃^{row(r,s)}`: `α -> 0`.
    GrinbergKim,
}

impl Preset {
    pub const ALL: [Preset; 8] = [
        Preset::BuchG,
        Preset::LpG,
        Preset::YeliussizovG,
        Preset::YeliussizovSmallG,
        Preset::ChanPflueger,
        Preset::Ggl,
        Preset::Matsumura,
        Preset::GrinbergKim,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::BuchG => "buch_G",
            Preset::LpG => "lp_g",
            Preset::YeliussizovG => "yeliussizov_G",
            Preset::YeliussizovSmallG => "yeliussizov_g",
            Preset::ChanPflueger => "chan_pflueger",
            Preset::Ggl => "ggl_dual",
            Preset::Matsumura => "matsumura",
            Preset::GrinbergKim => "grinberg_kim",
        }
    }

    pub fn parse(s: &str) -> Result<Preset> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown preset {s:?}")))
    }

    pub fn family(self) -> GFamily {
        match self {
            Preset::BuchG | Preset::YeliussizovG | Preset::ChanPflueger | Preset::Matsumura => GFamily::Big,
            _ => GFamily::Small,
        }
    }

    /// Whether the classical variant carries row flags.
    pub fn flagged(self) -> bool {
        matches!(self, Preset::Matsumura | Preset::GrinbergKim)
    }

    pub fn maps(self) -> (ParamMap, ParamMap) {
        let zero = || ParamMap::constant(Target::Int(Int::ZERO));
        let one = || ParamMap::constant(Target::Int(Int::ONE));
        let keep = || ParamMap::constant(Target::Keep);
        let sym = |k| ParamMap::constant(Target::Symbol(k));
        match self {
            Preset::BuchG | Preset::LpG => (zero(), one()),
            Preset::YeliussizovG => (sym(1), sym(-1)),
            Preset::YeliussizovSmallG => (sym(-1), sym(1)),
            Preset::ChanPflueger | Preset::Ggl | Preset::GrinbergKim => (zero(), keep()),
            Preset::Matsumura => (zero(), sym(-1)),
        }
    }

    pub fn apply(self, p: &ParamPoly) -> Result<ParamPoly> {
        let (a, b) = self.maps();
        p.substitute_params(&a, &b)
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// True when only `a1`/`b1` occur and every coefficient is nonnegative.
pub fn single_symbol_nonnegative(p: &ParamPoly) -> bool {
    p.max_index(Family::Alpha) <= 1 && p.max_index(Family::Beta) <= 1 && p.terms().all(|(_, c)| !c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jt::{jt_big, jt_small, FlagKind, JtSpec};
    use crate::shape::{FlagPair, SkewShape};

    #[test]
    fn preset_names_roundtrip() {
        for p in Preset::ALL {
            assert_eq!(Preset::parse(p.name()).unwrap(), p);
        }
        assert!(Preset::parse("nope").is_err());
    }

    #[test]
    fn yeliussizov_collapse() {
        let sh = SkewShape::straight(vec![2, 1]);
        let g = jt_big(&JtSpec::new(GFamily::Big, FlagKind::None, sh.clone(), FlagPair::full(2)).trunc(4)).unwrap();
        let y = Preset::YeliussizovG.apply(&g).unwrap();
        assert!(single_symbol_nonnegative(&y), "{y}");
        let small = jt_small(&JtSpec::new(GFamily::Small, FlagKind::None, sh, FlagPair::full(2))).unwrap();
        let y = Preset::YeliussizovSmallG.apply(&small).unwrap();
        assert!(single_symbol_nonnegative(&y), "{y}");
    }
}
