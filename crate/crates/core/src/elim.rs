use crate::gf::{Fe, FieldSpec};

/// In-place reduction to reduced row echelon form over GF(q), pivoting on the
/// first nonzero entry of each column. Returns the pivot columns; their count
/// is the rank.
pub(crate) fn row_reduce(field: &FieldSpec, rows: &mut [Vec<Fe>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(src) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, src);
        let scale = field.inv(rows[r][col]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, scale);
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let f = rows[i][col];
            for j in col..ncols {
                let t = field.mul(f, rows[r][j]);
                rows[i][j] = field.sub(rows[i][j], t);
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}
