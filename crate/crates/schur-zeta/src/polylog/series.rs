use crate::arith::{int_pow_rat, Rat};
use crate::series::MultiSeries;
use crate::shapes::{for_each_ssyt, Partition, Tableau};

/// A weight tableau k ∈ T(λ, ℤ). Series contexts accept any integers;
/// numeric evaluation additionally requires entries ≥ 1 (and > 1 at the
/// corners for convergence at the boundary).
pub type WeightTableau = Tableau<i64>;

/// The truncated Schur polylogarithm series: one variable per corner of the
/// shape, in row order of the corners. The coefficient of ∏ z_c^{m_c} sums
/// 1/∏ m_{ij}^{k_{ij}} over the SSYT with those corner entries, exactly.
pub fn schur_polylog_series(
    shape: &Partition,
    k: &WeightTableau,
    orders: &[usize],
) -> MultiSeries {
    assert_eq!(k.shape(), shape, "weight tableau shape mismatch");
    let corners = shape.corners();
    assert_eq!(orders.len(), corners.len(), "one order per corner");
    let bounds: Vec<u32> = orders.iter().map(|&o| o as u32).collect();
    let mut out = MultiSeries::zero(orders);
    for_each_ssyt(shape, &bounds, |t| {
        let mut term = Rat::from_integer(1.into());
        for (cell, &m) in t.iter() {
            term *= int_pow_rat(m as u64, *k.get(cell));
        }
        let expo: Vec<usize> = corners.iter().map(|&c| *t.get(c) as usize).collect();
        out.add_to(&expo, term);
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::shapes::Cell;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn wt(shape: &Partition, rows: Vec<Vec<i64>>) -> WeightTableau {
        Tableau::new(shape.clone(), rows).unwrap()
    }

    #[test]
    fn classical_li2_truncation() {
        // shape (1), k = 2, order 3: z + z²/4 + z³/9
        let shape = p(&[1]);
        let k = wt(&shape, vec![vec![2]]);
        let s = schur_polylog_series(&shape, &k, &[3]);
        assert_eq!(s.coeff(&[0]), rat(0, 1));
        assert_eq!(s.coeff(&[1]), rat(1, 1));
        assert_eq!(s.coeff(&[2]), rat(1, 4));
        assert_eq!(s.coeff(&[3]), rat(1, 9));
    }

    #[test]
    fn column_shape_single_tableau() {
        // shape (1,1), k = (a; b), order 2: only tableau has entries 1, 2
        let shape = p(&[1, 1]);
        let k = wt(&shape, vec![vec![3], vec![2]]);
        let s = schur_polylog_series(&shape, &k, &[2]);
        assert_eq!(s.coeff(&[1]), rat(0, 1));
        assert_eq!(s.coeff(&[2]), rat(1, 4)); // 1/(1^3 · 2^2)
    }

    #[test]
    fn hook_leading_coefficient() {
        // coefficient of z_h^1 z_ℓ^ℓ equals 1/(2^{k21}·3^{k31}⋯ℓ^{kℓ1})
        for (parts, ell) in [(&[2usize, 1][..], 2usize), (&[3, 1], 2), (&[2, 1, 1], 3)] {
            let shape = p(parts);
            let h = shape.parts()[0];
            let rows: Vec<Vec<i64>> = shape
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &len)| (0..len).map(|j| (i + j + 2) as i64 % 3 + 1).collect())
                .collect();
            let k = wt(&shape, rows);
            let s = schur_polylog_series(&shape, &k, &[2, (ell + 1).min(4)]);
            let mut expect = rat(1, 1);
            for i in 2..=ell {
                expect = expect / int_pow_rat(i as u64, *k.get(Cell::new(i, 1)));
            }
            assert_eq!(s.coeff(&[1, ell]), expect, "shape {parts:?} h={h}");
        }
    }

    #[test]
    fn negative_weights_are_formal() {
        let shape = p(&[1]);
        let k = wt(&shape, vec![vec![-2]]);
        let s = schur_polylog_series(&shape, &k, &[3]);
        assert_eq!(s.coeff(&[2]), rat(4, 1));
        assert_eq!(s.coeff(&[3]), rat(9, 1));
    }
}
