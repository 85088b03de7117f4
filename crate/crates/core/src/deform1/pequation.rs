use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laguerre::OscParams;
use crate::ratcore::{int, Scalar, YPoly};
use crate::susy::Superpotential;

/// Solves `op(P) = R·weight·P` for a polynomial P of exact degree m and a
/// constant R.
///
/// `op` must be linear and raise degree by at most deg(weight); R is then
/// fixed by the top coefficient and the remaining coefficients of P (with
/// unit leading coefficient) by an exact linear solve.
pub fn polynomial_eigensolution(
    op: impl Fn(&YPoly) -> YPoly,
    weight: &YPoly,
    m: usize,
) -> Result<(YPoly, Scalar)> {
    let shift = weight.degree().ok_or(Error::ZeroPolynomial)?;
    let top = m + shift;
    let images: Vec<YPoly> = (0..=m)
        .map(|k| op(&YPoly::monomial(Scalar::one(), k)))
        .collect();
    for (k, img) in images.iter().enumerate() {
        if img.degree().is_some_and(|d| d > k + shift) {
            return Err(Error::Degenerate(format!(
                "operator raises degree of y^{k} beyond {}",
                k + shift
            )));
        }
    }
    let r = images[m].coeff(top) / weight.leading();
    let columns: Vec<YPoly> = images
        .iter()
        .enumerate()
        .map(|(k, img)| img - &(weight * &YPoly::monomial(r.clone(), k)))
        .collect();
    // Σ_{k<m} p_k·columns[k] = −columns[m], one equation per power below `top`.
    let rows: Vec<Vec<Scalar>> = (0..top)
        .map(|d| {
            let mut row: Vec<Scalar> = (0..m).map(|k| columns[k].coeff(d)).collect();
            row.push(-columns[m].coeff(d));
            row
        })
        .collect();
    let sol = solve_unique(rows, m).ok_or(Error::NoPolynomialSolution(m))??;
    let mut coeffs = sol;
    coeffs.push(Scalar::one());
    Ok((YPoly::new(coeffs), r))
}

/// Gauss–Jordan on an augmented system. `None` if inconsistent, an error if
/// the solution is not unique.
fn solve_unique(mut rows: Vec<Vec<Scalar>>, unknowns: usize) -> Option<Result<Vec<Scalar>>> {
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..unknowns {
        let Some(pr) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = Scalar::one() / &rows[rank][col];
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..=unknowns {
                    let delta = &f * &rows[rank][c];
                    rows[r][c] -= delta;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    if rows[rank..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    if rank < unknowns {
        return Some(Err(Error::Degenerate(format!(
            "polynomial solution not unique ({} free coefficients)",
            unknowns - rank
        ))));
    }
    let mut out = vec![Scalar::zero(); unknowns];
    for (r, &c) in pivot_cols.iter().enumerate() {
        out[c] = rows[r][unknowns].clone();
    }
    Some(Ok(out))
}

/// Degree-m polynomial solution of P″ + 2σW·P′ − R·P = 0 (σ = −1 when
/// `sign_flip`), written in y as 2ωyP″ + ω(1 + 2σ·invR + 4σyK)P′ = R·P.
pub fn solve_p_equation(
    w: &Superpotential,
    sign_flip: bool,
    m: usize,
    p: &OscParams,
) -> Result<(YPoly, Scalar)> {
    let omega = p.omega();
    let sigma = if sign_flip { int(-1) } else { int(1) };
    let k = w.k_part();
    let (kn, kd) = (k.num().clone(), k.den().clone());
    let first = YPoly::new(vec![
        omega * (Scalar::one() + int(2) * &sigma * w.inv_r()),
    ]);
    let two_omega_y = YPoly::monomial(int(2) * omega, 1);
    let drift = YPoly::monomial(int(4) * &sigma * omega, 1);
    let op = |q: &YPoly| -> YPoly {
        let d1 = q.derivative();
        let d2 = d1.derivative();
        let local = &(&two_omega_y * &d2) + &(&first * &d1);
        &(&kd * &local) + &(&(&drift * &kn) * &d1)
    };
    polynomial_eigensolution(op, &kd, m)
}
