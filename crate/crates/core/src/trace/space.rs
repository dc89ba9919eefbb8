use crate::error::Result;
use crate::exactnum::Cyclo;
use crate::graded::{graded_hook_right, GradedHopf, GroupElem};
use crate::hopfcore::Functional;
use crate::linalg::Mat;

/// Linear conditions on the unknown forms `(λ_x)_{x ∈ grades}`, stacked in
/// grade order:
/// - `λ_x(ab − R(ν)(b)a) = 0` for all basis pairs of `H_x`;
/// - `λ_x(a₁) g_y a₂ = λ_{xy}(a) 1_y` for every pair with `xy` sampled.
fn system(h: &dyn GradedHopf, nu: &Functional, grades: &[GroupElem]) -> Result<(Mat, Vec<usize>)> {
    let pieces = grades.iter().map(|g| h.piece(g)).collect::<Result<Vec<_>>>()?;
    let mut offsets = Vec::with_capacity(grades.len());
    let mut total = 0;
    for p in &pieces {
        offsets.push(total);
        total += p.dim();
    }
    let mut rows: Vec<Vec<Cyclo>> = Vec::new();
    let mut push = |row: Vec<Cyclo>| {
        if row.iter().any(|c| !c.is_zero()) {
            rows.push(row);
        }
    };
    for (gi, g) in grades.iter().enumerate() {
        let alg = &pieces[gi].alg;
        let phi = graded_hook_right(h, nu, g)?;
        let d = alg.dim();
        for i in 0..d {
            for j in 0..d {
                let ab = alg.mul(&alg.basis(i), &alg.basis(j));
                let ba = alg.mul(&phi.col(j), &alg.basis(i));
                let mut row = vec![Cyclo::zero(); total];
                for k in 0..d {
                    row[offsets[gi] + k] = &ab[k] - &ba[k];
                }
                push(row);
            }
        }
    }
    for (xi, x) in grades.iter().enumerate() {
        for (yi, y) in grades.iter().enumerate() {
            let xy = h.grade_mul(x, y);
            let Some(xyi) = grades.iter().position(|g| *g == xy) else {
                continue;
            };
            let py = &pieces[yi];
            let gy = py.pivot()?;
            let delta = h.coproduct(x, y)?;
            let unit = py.alg.unit();
            let g_times: Vec<Vec<Cyclo>> = (0..py.dim()).map(|k| py.alg.mul(gy, &py.alg.basis(k))).collect();
            for a in 0..pieces[xyi].dim() {
                for m in 0..py.dim() {
                    let mut row = vec![Cyclo::zero(); total];
                    for (j, k, c) in &delta.terms[a] {
                        let v = &g_times[*k][m];
                        if !v.is_zero() {
                            row[offsets[xi] + j] += &(c * v);
                        }
                    }
                    row[offsets[xyi] + a] -= &unit[m];
                    push(row);
                }
            }
        }
    }
    let m = if rows.is_empty() { Mat::zeros(1, total) } else { Mat::from_rows(rows) };
    Ok((m, offsets))
}

/// Dimension of the space of families `(λ_x)` on the sampled grades that are
/// `R(ν)`-cyclic and satisfy the symmetrised-integral relation.
pub fn graded_trace_space_dimension(h: &dyn GradedHopf, nu: &Functional, grades: &[GroupElem]) -> Result<usize> {
    let (m, _) = system(h, nu, grades)?;
    Ok(m.cols() - m.rank())
}

/// Trivial-group case.
pub fn trace_space_dimension(h: &dyn GradedHopf, nu: &Functional) -> Result<usize> {
    graded_trace_space_dimension(h, nu, &[GroupElem::unit()])
}

/// Basis of the unit-grade solution space.
pub fn trace_space(h: &dyn GradedHopf, nu: &Functional) -> Result<Vec<Functional>> {
    let (m, _) = system(h, nu, &[GroupElem::unit()])?;
    Ok(m.nullspace().columns().into_iter().map(Functional::new).collect())
}
