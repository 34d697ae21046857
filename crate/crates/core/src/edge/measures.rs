use crate::arith::FactoredForm;
use crate::error::Result;
use crate::partitions::Partition;

use super::character::f_edge;
use super::swap::swap2;

/// Jack-Plancherel weight `1 / ∏ h*(□)·h_*(□)`.
pub fn w_jack(lambda: &Partition) -> FactoredForm {
    lambda
        .cells()
        .map(|cell| {
            let upper = lambda.hook_upper(cell).expect("cell of λ");
            let lower = lambda.hook_lower(cell).expect("cell of λ");
            let upper = FactoredForm::scaled_power(&upper, -1).expect("hooks are nonzero");
            let lower = FactoredForm::scaled_power(&lower, -1).expect("hooks are nonzero");
            upper.mul(&lower)
        })
        .product()
}

/// Equivariant edge weight `swap(F(λ))`. The empty partition gives `1`.
pub fn w_mnop(lambda: &Partition) -> Result<FactoredForm> {
    swap2(&f_edge(lambda)?)
}
