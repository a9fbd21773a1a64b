use alloc::vec::Vec;

use super::LeibnizAlgebra;
use crate::linalg::Subspace;

/// Derived and lower central series of an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    /// `L = L⁽⁰⁾ ⊋ L⁽¹⁾ ⊋ ...` up to the first repeated term.
    pub derived: Vec<Subspace>,
    /// `L = L¹ ⊋ L² ⊋ ...` with `L^{k+1} = L·L^k`.
    pub lower_central: Vec<Subspace>,
    pub solvable: bool,
    pub nilpotent: bool,
}

impl SeriesReport {
    pub fn derived_dims(&self) -> Vec<usize> {
        self.derived.iter().map(Subspace::dim).collect()
    }

    pub fn lower_central_dims(&self) -> Vec<usize> {
        self.lower_central.iter().map(Subspace::dim).collect()
    }

    /// Nilpotency class, the number of nonzero lower central terms.
    pub fn nilpotency_class(&self) -> Option<usize> {
        self.nilpotent
            .then(|| self.lower_central.iter().filter(|s| !s.is_zero()).count())
    }
}

impl LeibnizAlgebra {
    pub fn series(&self) -> SeriesReport {
        let whole = self.whole();
        let derived = self.derived_of(&whole).expect("same algebra");
        let lower_central = self.lower_central_of(&whole).expect("same algebra");
        for term in derived.iter().chain(&lower_central) {
            assert!(
                self.is_ideal(term).expect("same algebra"),
                "series term is not an ideal"
            );
        }
        let solvable = derived.last().is_some_and(Subspace::is_zero);
        let nilpotent = lower_central.last().is_some_and(Subspace::is_zero);
        SeriesReport {
            derived,
            lower_central,
            solvable,
            nilpotent,
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.is_solvable_subalgebra(&self.whole()).expect("same algebra")
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_nilpotent_subalgebra(&self.whole()).expect("same algebra")
    }

    /// `L² = L`.
    pub fn is_perfect(&self) -> bool {
        self.square().is_full()
    }
}
