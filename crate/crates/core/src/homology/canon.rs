use super::ext::ext_cycles;
use super::resolution::{free_resolution, resolve};
use crate::error::{Error, Result};
use crate::groebner::{canonical, dimension, lift, modulo_kernel, syzygies};
use crate::polyring::Submodule;

/// The natural map `F/M -> Ext^c(Ext^c(F/M, R), R)` with `c` the
/// codimension of `F/M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonMapResult {
    /// Preimage in `F` of the kernel; contains `M`.
    pub kernel_preimage: Submodule,
    /// Presentation of the kernel (relations among the preimage generators
    /// modulo `M`).
    pub kernel_presentation: Submodule,
    pub cokernel_presentation: Submodule,
}

pub fn canon_map(m: &Submodule) -> Result<CanonMapResult> {
    let n = m.ring().nvars() as i64;
    let dim = dimension(m);
    if dim < 0 {
        return Err(Error::UnitModule);
    }
    let c = (n - dim) as usize;
    let (ke, co) = if c == 0 {
        let k = syzygies(&m.transpose());
        let ke = syzygies(&k.transpose());
        let co = modulo_kernel(&syzygies(&syzygies(&k).transpose()), &k.transpose())?;
        (ke, co)
    } else {
        let f = free_resolution(m, c + 1)?;
        let k0 = ext_cycles(&f, c)?;
        let a = modulo_kernel(&k0, &f.map(c).transpose())?;
        let g = resolve(a, c + 1)?;
        let mut k = k0;
        for i in 1..=c {
            k = lift(&f.map(c - i + 1).transpose(), &k.matmul(g.map(i))?)?;
        }
        let kt = k.transpose();
        let ke = modulo_kernel(&kt, &g.map(c).transpose())?;
        let co = modulo_kernel(
            &syzygies(&g.map(c + 1).transpose()),
            &kt.concat(&g.map(c).transpose())?,
        )?;
        (ke, co)
    };
    let kernel_preimage = canonical(&ke);
    let kernel_presentation = modulo_kernel(&kernel_preimage, m)?;
    Ok(CanonMapResult {
        kernel_preimage,
        kernel_presentation,
        cokernel_presentation: co,
    })
}

/// Intersection of the primary components of `M` of maximal dimension.
pub fn equidim_hull(m: &Submodule) -> Result<Submodule> {
    let dim = dimension(m);
    if dim < 0 {
        return Err(Error::UnitModule);
    }
    // With only maximal ideals associated, every component has dimension 0.
    if dim == 0 {
        return Ok(canonical(m));
    }
    Ok(canon_map(m)?.kernel_preimage)
}
