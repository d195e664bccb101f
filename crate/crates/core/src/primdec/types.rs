use std::fmt;

use crate::polyring::Submodule;

/// Prime ideal in canonical (reduced basis) form.
#[derive(Clone, PartialEq, Eq)]
pub struct PrimeIdeal {
    pub ideal: Submodule,
    pub codim: usize,
}

impl fmt::Debug for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.ideal)
    }
}

impl PrimeIdeal {
    /// Sort key: codimension, then the printed generators.
    pub fn sort_key(&self) -> (usize, String) {
        (self.codim, self.ideal.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub primary: Submodule,
    pub prime: PrimeIdeal,
    pub embedded: bool,
    /// Power `m` with `primary = hull(M + P^m F)`, when built that way.
    pub witness: Option<usize>,
}

/// One candidate tried while extracting a component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub prime: Submodule,
    pub power: usize,
    pub candidate: Submodule,
    pub accepted: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DecompositionResult {
    pub components: Vec<Component>,
    pub trace: Vec<TraceStep>,
}

impl DecompositionResult {
    pub fn primes(&self) -> Vec<&PrimeIdeal> {
        self.components.iter().map(|c| &c.prime).collect()
    }
}
