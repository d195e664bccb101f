use super::canon::equidim_hull;
use super::ext::ext_module;
use crate::error::{Error, Result};
use crate::groebner::{canonical, codim, saturate};
use crate::polyring::Submodule;
use crate::primdec::radical_equidim;

fn check_index(m: &Submodule, c: usize) -> Result<()> {
    let n = m.ring().nvars();
    if c > n {
        return Err(Error::InvalidArgument(format!("index {c} exceeds {n}")));
    }
    Ok(())
}

/// Intersection of the primary components of `M` whose dimension is at
/// least `dim`.
pub fn rem_comp(m: &Submodule, dim: usize) -> Result<Submodule> {
    check_index(m, dim)?;
    let n = m.ring().nvars();
    let mut acc = canonical(m);
    for b in (n - dim + 1..=n).rev() {
        let ann = ext_module(b, m)?.annihilator()?;
        if codim(&ann) == b as i64 {
            acc = saturate(&acc, &ann)?.module;
        }
    }
    Ok(acc)
}

/// An ideal whose associated primes are the codimension `c` associated
/// primes of `F/M`; the unit ideal when there are none.
pub fn ass_prim_codim(m: &Submodule, c: usize) -> Result<Submodule> {
    check_index(m, c)?;
    let ann = ext_module(c, m)?.annihilator()?;
    if codim(&ann) > c as i64 {
        return Ok(Submodule::unit_ideal(m.ring()));
    }
    equidim_hull(&ann)
}

/// Intersection of the codimension `c` associated primes of `F/M`.
pub fn inter_ass_prim(m: &Submodule, c: usize) -> Result<Submodule> {
    check_index(m, c)?;
    let ann = ext_module(c, m)?.annihilator()?;
    if codim(&ann) != c as i64 {
        return Ok(Submodule::unit_ideal(m.ring()));
    }
    radical_equidim(&equidim_hull(&ann)?)
}
