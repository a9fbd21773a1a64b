use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::LeibnizAlgebra;
use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::lattice::prime_of;

/// Every structure-constant table of dimension `n` over `GF(p)` that
/// satisfies the Leibniz identity, in lexicographic order of the table.
///
/// There are `p^(n³)` candidate tables; `max_tables` caps that count.
pub fn all_leibniz_tables(field: FieldSpec, n: usize, max_tables: u64) -> Result<Vec<LeibnizAlgebra>, Error> {
    let p = prime_of(field, "table enumeration")?;
    let cells = n * n * n;
    let required = u128::from(p).checked_pow(cells as u32).unwrap_or(u128::MAX);
    if required > u128::from(max_tables) {
        return Err(Error::BudgetExceeded { required, allowed: max_tables });
    }
    let labels: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let elements: Vec<Scalar> = field.elements().collect();
    let mut digits = alloc::vec![0usize; cells];
    let mut out = Vec::new();
    loop {
        let table = digits.iter().map(|&d| elements[d].clone()).collect();
        if let Ok(alg) = LeibnizAlgebra::new(field, labels.clone(), table) {
            out.push(alg);
        }
        let mut i = cells;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < elements.len() {
                break;
            }
            digits[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let f = FieldSpec::prime(2).unwrap();
        assert_eq!(all_leibniz_tables(f, 0, 1).unwrap().len(), 1);
        // over GF(2) the one-dimensional tables e1·e1 = 0 and e1·e1 = e1;
        // the second fails: e1(e1e1) = e1 but (e1e1)e1 + e1(e1e1) = 0
        assert_eq!(all_leibniz_tables(f, 1, 2).unwrap().len(), 1);
        let two = all_leibniz_tables(f, 2, 256).unwrap();
        assert!(two.iter().all(|a| a.validate().is_ok()));
        assert!(matches!(all_leibniz_tables(f, 2, 255), Err(Error::BudgetExceeded { required: 256, .. })));
    }
}
