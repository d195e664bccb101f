use super::resolution::{free_resolution, prune_presentation, Resolution};
use crate::error::{Error, Result};
use crate::groebner::{annihilator, buchberger, modulo_kernel, syzygies};
use crate::polyring::Submodule;

/// `Ext^c(F/M, R)` as the cokernel of `presentation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtPresentation {
    pub codim_index: usize,
    pub presentation: Submodule,
}

impl ExtPresentation {
    /// The annihilator ideal of the Ext module.
    pub fn annihilator(&self) -> Result<Submodule> {
        annihilator(&self.presentation)
    }

    /// True when the presentation is onto, so the module vanishes.
    pub fn is_zero(&self) -> bool {
        self.presentation.rank() == 0 || buchberger(&self.presentation).is_whole()
    }
}

/// Generators of `ker(d_(c+1)^T)` inside `F_c^*`, reduced modulo the image
/// of `d_c^T`; zero columns dropped.
pub(crate) fn ext_cycles(res: &Resolution, c: usize) -> Result<Submodule> {
    let ring = res.maps[0].ring();
    let rank_c = if c == 0 {
        res.maps[0].rank()
    } else {
        res.maps[c - 1].ngens()
    };
    let k = match res.maps.get(c) {
        Some(next) => syzygies(&next.transpose()),
        None => {
            return Err(Error::InvalidArgument(format!(
                "resolution of length {} is too short for Ext^{c}",
                res.len()
            )))
        }
    };
    if c == 0 {
        return Ok(k.without_zero_gens());
    }
    let g = buchberger(&res.maps[c - 1].transpose());
    let gens = k
        .gens()
        .iter()
        .map(|v| g.normal_form(v))
        .collect::<Result<Vec<_>>>()?;
    Ok(Submodule::from_parts(ring, rank_c, gens).without_zero_gens())
}

/// Presentation of `Ext^c` from a resolution with at least `c + 1` maps.
pub fn ext_from_resolution(res: &Resolution, c: usize) -> Result<ExtPresentation> {
    let k = ext_cycles(res, c)?;
    let a = if c == 0 {
        syzygies(&k)
    } else {
        modulo_kernel(&k, &res.maps[c - 1].transpose())?
    };
    Ok(ExtPresentation {
        codim_index: c,
        presentation: prune_presentation(&a),
    })
}

pub fn ext_module(c: usize, m: &Submodule) -> Result<ExtPresentation> {
    let n = m.ring().nvars();
    if c > n {
        return Err(Error::InvalidArgument(format!("Ext index {c} exceeds {n}")));
    }
    let res = free_resolution(m, c + 1)?;
    ext_from_resolution(&res, c)
}

/// `Ext^0, ..., Ext^n` from a single resolution.
pub fn ext_all(m: &Submodule) -> Result<Vec<ExtPresentation>> {
    let n = m.ring().nvars();
    let res = free_resolution(m, n + 1)?;
    (0..=n).map(|c| ext_from_resolution(&res, c)).collect()
}

/// Annihilators of `Ext^0, ..., Ext^n`.
pub fn ext_annihilators(m: &Submodule) -> Result<Vec<Submodule>> {
    ext_all(m)?.iter().map(ExtPresentation::annihilator).collect()
}
