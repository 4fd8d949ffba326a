use super::{check_part_count, ConstructError};
use crate::dissection::{Dissection, Rect};
use crate::exactnum::{rational, QuadExt};

/// Unit square cut into `m` rows and `n` columns; each cell is `1/n` wide
/// and `1/m` tall, so its width:height is `m:n`.
pub fn grid_tiling(m: u32, n: u32) -> Result<Dissection, ConstructError> {
    if m == 0 || n == 0 {
        return Err(ConstructError::ZeroParameter);
    }
    check_part_count(u64::from(m) * u64::from(n))?;
    let w: QuadExt = rational(1, n.into()).into();
    let h: QuadExt = rational(1, m.into()).into();
    let mut parts = Vec::with_capacity((m * n) as usize);
    for row in 0..m {
        for col in 0..n {
            parts.push(Rect::new(
                rational(col.into(), n.into()),
                rational(row.into(), m.into()),
                w.clone(),
                h.clone(),
            ));
        }
    }
    Ok(Dissection::unit_square(parts)?)
}
