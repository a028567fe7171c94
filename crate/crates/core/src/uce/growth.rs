use alloc::vec::Vec;

use super::{build_uce_with, UceOptions};
use crate::algebra::{sl_n, truncated_free};
use crate::error::{Error, Result};
use crate::linalg::wedge_square;

/// One truncation level of `k⟨x,y⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrowthRow {
    pub degree: usize,
    pub dim_algebra: usize,
    pub dim_sl2: usize,
    pub h2_dim: usize,
}

/// `dim H₂(sl₂(k⟨x,y⟩ truncated at degree d))` for `d = 1..=d_max`.
pub fn growth_report(d_max: usize, opts: &UceOptions) -> Result<Vec<GrowthRow>> {
    let mut rows = Vec::with_capacity(d_max);
    for d in 1..=d_max {
        let a = truncated_free(&["x", "y"], d, &[])?;
        let sl = sl_n(&a, 2)?;
        let g = sl.algebra();
        let wedge = wedge_square(g.space()).dim();
        if wedge > opts.max_wedge_dim {
            return Err(Error::ResourceLimit {
                what: "dim of exterior square",
                size: wedge,
                limit: opts.max_wedge_dim,
            });
        }
        let e = build_uce_with(g, opts)?;
        rows.push(GrowthRow {
            degree: d,
            dim_algebra: a.dim(),
            dim_sl2: g.dim(),
            h2_dim: e.h2_dim(),
        });
    }
    Ok(rows)
}
