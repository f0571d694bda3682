//! The C(a) filtration and Q(a) decomposition of the associated graded
//! ring, computed dually inside the inverse system.
//!
//! With `V` the closure, `S_k = m^k ∘ V` and `T_i = V ∩ P_{≤i−1}`:
//! `dim (0:m^k) = dim A − dim S_k`, `dim m^i A = dim A − dim T_i`, and the
//! sum of the two has dimension `dim A − dim(S_k ∩ T_i)`.

use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::invsys::{graded_hilbert_function, local_hilbert_function, InverseSystem, OSequence};
use crate::{Poly, QSubspace};

/// Dimensions of the pieces `Q(a)_i` and `C(a)_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QDecomposition {
    pub s: usize,
    /// `q_hf[a][i] = dim Q(a)_i` for `a = 0..s`.
    pub q_hf: Vec<OSequence>,
    /// `c_dims[a][i] = dim C(a)_i` for `a = 0..=s`.
    pub c_dims: Vec<Vec<usize>>,
}

impl QDecomposition {
    pub fn q(&self, a: usize, i: usize) -> usize {
        self.q_hf.get(a).map_or(0, |row| row.get(i))
    }

    /// Column sums `Σ_a Q(a)_i`.
    pub fn row_sums(&self) -> OSequence {
        OSequence::new(
            (0..=self.s)
                .map(|i| (0..self.q_hf.len()).map(|a| self.q(a, i)).sum())
                .collect(),
        )
    }

    /// Whether `Q(a)` is symmetric about `(s − a)/2`.
    pub fn is_symmetric_row(&self, a: usize) -> bool {
        let top = self.s - a;
        (0..=self.s).all(|i| {
            if i > top {
                self.q(a, i) == 0
            } else {
                self.q(a, i) == self.q(a, top - i)
            }
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.q_hf.len()).all(|a| self.is_symmetric_row(a))
    }
}

/// Cached spans `S_k` and `T_i` for one system.
struct Duals {
    dim: usize,
    s_k: Vec<QSubspace>,
    t_i: Vec<QSubspace>,
}

impl Duals {
    fn new(sys: &InverseSystem) -> Self {
        let s = sys.socle_degree();
        Duals {
            dim: sys.dim(),
            s_k: (0..=s + 1).map(|k| sys.contract_power_span(k)).collect(),
            t_i: (0..=s + 1).map(|i| sys.closure_up_to(i as isize - 1)).collect(),
        }
    }

    fn s(&self, k: usize) -> &QSubspace {
        &self.s_k[k.min(self.s_k.len() - 1)]
    }

    fn t(&self, i: usize) -> &QSubspace {
        &self.t_i[i.min(self.t_i.len() - 1)]
    }

    fn ann_cap_power(&self, k: usize, i: usize) -> Result<usize> {
        let (sk, ti) = (self.s(k), self.t(i));
        let u = self.dim - sk.dim();
        let w = self.dim - ti.dim();
        let sum = self.dim - sk.intersect(ti)?.dim();
        (u + w).checked_sub(sum).ok_or_else(|| {
            Error::Inconsistent(format!("dim U + dim W < dim(U + W) at k={k}, i={i}"))
        })
    }
}

/// `dim m^k A`, computed twice: as `dim V − dim(V ∩ P_{≤k−1})` and as the
/// rank of the closure projected onto the coordinates of degree `>= k`. For
/// a single generator the span of order-`k` derivatives must agree as well.
pub fn mpow_contract_dim(sys: &InverseSystem, k: usize) -> Result<usize> {
    let dual = sys.dim() - sys.closure_up_to(k as isize - 1).dim();
    let frame = sys.frame();
    let cols: Vec<usize> = (0..frame.len()).filter(|&j| frame.degree_of(j) >= k).collect();
    let projected = Matrix::from_fn(sys.dim(), cols.len(), |r, c| {
        sys.closure().rows()[r][cols[c]].clone()
    })
    .rank();
    if projected != dual {
        return Err(Error::Inconsistent(format!(
            "dim m^{k}A: projection rank {projected}, duality gives {dual}"
        )));
    }
    if sys.generators().len() == 1 {
        let direct = sys.contract_power_span(k).dim();
        if direct != dual {
            return Err(Error::Inconsistent(format!(
                "dim m^{k}A: derivative span gives {direct}, duality gives {dual}"
            )));
        }
    }
    Ok(dual)
}

/// `dim m^k ∘ V`, which equals `dim A − dim(0 :_A m^k)`.
pub fn contract_power_dim(sys: &InverseSystem, k: usize) -> usize {
    sys.contract_power_span(k).dim()
}

/// `dim_K[(0 :_A m^k) ∩ m^i A]`.
pub fn ann_power_cap_power(sys: &InverseSystem, k: usize, i: usize) -> Result<usize> {
    let s = sys.socle_degree();
    let sk = sys.contract_power_span(k.min(s + 1));
    let ti = sys.closure_up_to(i.min(s + 1) as isize - 1);
    let dim = sys.dim();
    let u = dim - sk.dim();
    let w = dim - ti.dim();
    let sum = dim - sk.intersect(&ti)?.dim();
    (u + w)
        .checked_sub(sum)
        .ok_or_else(|| Error::Inconsistent(format!("dim U + dim W < dim(U + W) at k={k}, i={i}")))
}

/// The Q-decomposition of `gr_m(A)` by Hilbert functions.
pub fn q_decomposition(sys: &InverseSystem) -> Result<QDecomposition> {
    let s = sys.socle_degree();
    let duals = Duals::new(sys);
    // app(k, i) with k ≤ 0 meaning (0:1) = 0
    let app = |k: isize, i: usize| -> Result<usize> {
        if k <= 0 {
            Ok(0)
        } else {
            duals.ann_cap_power(k as usize, i)
        }
    };
    let mut c_dims = Vec::with_capacity(s + 1);
    for a in 0..=s {
        let mut row = Vec::with_capacity(s + 1);
        for i in 0..=s {
            let k = s as isize + 1 - a as isize - i as isize;
            let hi = app(k, i)?;
            let lo = app(k, i + 1)?;
            row.push(hi.checked_sub(lo).ok_or_else(|| {
                Error::Inconsistent(format!("negative C({a})_{i}"))
            })?);
        }
        c_dims.push(row);
    }
    let mut q_hf = Vec::with_capacity(s);
    for a in 0..s {
        let row = (0..=s)
            .map(|i| {
                c_dims[a][i].checked_sub(c_dims[a + 1][i]).ok_or_else(|| {
                    Error::Inconsistent(format!("C({}) ⊄ C({a}) in degree {i}", a + 1))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        q_hf.push(OSequence::new(row));
    }
    if s == 0 {
        q_hf.push(OSequence::new(c_dims[0].clone()));
    }
    let q = QDecomposition { s, q_hf, c_dims };
    let h = local_hilbert_function(sys);
    if q.row_sums() != h {
        return Err(Error::Inconsistent(format!(
            "Q rows sum to {} but the Hilbert function is {h}",
            q.row_sums()
        )));
    }
    Ok(q)
}

/// Checks `HF(Q(0)) = HF(R / ann(f[s]))` for a single generator `f`.
pub fn q0_check(f: &Poly) -> Result<bool> {
    let s = f.degree().ok_or(Error::ZeroGenerator(0))?;
    let sys = InverseSystem::new(vec![f.clone()])?;
    let q = q_decomposition(&sys)?;
    let graded = graded_hilbert_function(&[f.top_form(s)?])?;
    Ok(q.q_hf[0] == graded)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apolar::text::parse_polys;

    fn sys(texts: &[&str]) -> InverseSystem {
        InverseSystem::new(parse_polys(texts).unwrap()).unwrap()
    }

    #[test]
    fn mpow_dims() {
        let a = sys(&["x1^4+x3^2", "x2^4"]);
        assert_eq!(mpow_contract_dim(&a, 1).unwrap(), 9);
        assert_eq!(mpow_contract_dim(&a, 0).unwrap(), a.dim());
        assert_eq!(mpow_contract_dim(&a, 5).unwrap(), 0);
        // the socle has dimension 2, so the derivative span is smaller
        assert_eq!(contract_power_dim(&a, 1), 8);
        let g = sys(&["x1^4+x2^4+x3^2"]);
        assert_eq!(mpow_contract_dim(&g, 1).unwrap(), g.dim() - 1);
    }

    #[test]
    fn ann_cap_power_examples() {
        let a = sys(&["x1^4+x2^4+x3^2"]);
        assert_eq!(ann_power_cap_power(&a, 5, 0).unwrap(), a.dim());
        for i in 0..5 {
            assert_eq!(ann_power_cap_power(&a, 0, i).unwrap(), 0);
        }
        assert_eq!(ann_power_cap_power(&a, 1, 4).unwrap(), 1);
    }

    #[test]
    fn decomposition_examples() {
        let q = q_decomposition(&sys(&["x1^4+x2^4+x3^2"])).unwrap();
        assert_eq!(q.q_hf[0].values(), [1, 2, 2, 2, 1]);
        assert_eq!(q.q(2, 1), 1);
        assert_eq!(q.q_hf[1].total() + q.q_hf[3].total(), 0);
        assert_eq!(q.q_hf[2].total(), 1);
        assert!(q.is_symmetric());

        let q = q_decomposition(&sys(&["x1^4+x2^4+x3^4+x1^3x2+x2^3x3+x3^3x1"])).unwrap();
        assert_eq!(q.q_hf[0].values(), [1, 3, 6, 3, 1]);
        assert!(q.q_hf[1..].iter().all(|r| r.total() == 0));

        let q = q_decomposition(&sys(&["x1^3+x2^2"])).unwrap();
        assert_eq!(q.q_hf[0].values(), [1, 1, 1, 1]);
        assert_eq!(q.row_sums().values(), [1, 2, 1, 1]);
        assert_eq!(q.q(1, 1), 1);
        assert!(q.is_symmetric());
    }

    #[test]
    fn q0_examples() {
        for f in ["x1^4+x2^3", "x1^2x2^2", "x1^4+x2^4+x3^2"] {
            assert!(q0_check(&parse_polys(&[f]).unwrap()[0]).unwrap(), "{f}");
        }
    }
}
