//! Exact feasibility of `A·λ = b, λ ≥ 0` by phase-one simplex with Bland's rule.
//!
//! Tableaux are first solved over `Ratio<i128>` with checked arithmetic and
//! rerun over `BigRational` if any operation overflows.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, Signed, ToPrimitive, Zero};

struct Overflow;

trait Scalar: Clone + PartialOrd + Sized {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn sub(&self, o: &Self) -> Result<Self, Overflow>;
    fn mul(&self, o: &Self) -> Result<Self, Overflow>;
    fn div(&self, o: &Self) -> Result<Self, Overflow>;
    fn neg(&self) -> Result<Self, Overflow>;
}

impl Scalar for Ratio<i128> {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn sub(&self, o: &Self) -> Result<Self, Overflow> {
        self.checked_sub(o).ok_or(Overflow)
    }
    fn mul(&self, o: &Self) -> Result<Self, Overflow> {
        self.checked_mul(o).ok_or(Overflow)
    }
    fn div(&self, o: &Self) -> Result<Self, Overflow> {
        self.checked_div(o).ok_or(Overflow)
    }
    fn neg(&self) -> Result<Self, Overflow> {
        let n = self.numer().checked_neg().ok_or(Overflow)?;
        Ok(Ratio::new_raw(n, *self.denom()))
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn sub(&self, o: &Self) -> Result<Self, Overflow> {
        Ok(self - o)
    }
    fn mul(&self, o: &Self) -> Result<Self, Overflow> {
        Ok(self * o)
    }
    fn div(&self, o: &Self) -> Result<Self, Overflow> {
        Ok(self / o)
    }
    fn neg(&self) -> Result<Self, Overflow> {
        Ok(-self)
    }
}

fn to_small(r: &BigRational) -> Option<Ratio<i128>> {
    Some(Ratio::new_raw(r.numer().to_i128()?, r.denom().to_i128()?))
}

fn to_big(r: &Ratio<i128>) -> BigRational {
    BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

type SmallSystem = (Vec<Vec<Ratio<i128>>>, Vec<Ratio<i128>>);

/// Returns a non-negative solution of `a·λ = b` if one exists. Every row of
/// `a` must have `vars` entries.
pub fn feasible_point(a: &[Vec<BigRational>], b: &[BigRational], vars: usize) -> Option<Vec<BigRational>> {
    debug_assert_eq!(a.len(), b.len());
    let small: Option<SmallSystem> = (|| {
        let rows = a.iter().map(|r| r.iter().map(to_small).collect()).collect::<Option<_>>()?;
        let rhs = b.iter().map(to_small).collect::<Option<_>>()?;
        Some((rows, rhs))
    })();
    if let Some((rows, rhs)) = small {
        if let Ok(res) = phase_one(rows, rhs, vars) {
            return res.map(|sol| sol.iter().map(to_big).collect());
        }
    }
    match phase_one(a.to_vec(), b.to_vec(), vars) {
        Ok(res) => res,
        Err(Overflow) => unreachable!("arbitrary precision cannot overflow"),
    }
}

fn phase_one<T: Scalar>(a: Vec<Vec<T>>, b: Vec<T>, n: usize) -> Result<Option<Vec<T>>, Overflow> {
    let m = a.len();
    // each row holds n coefficients followed by the right-hand side
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(m);
    for (mut row, rhs) in a.into_iter().zip(b) {
        row.push(rhs);
        if row[n].is_negative() {
            for v in row.iter_mut() {
                *v = v.neg()?;
            }
        }
        rows.push(row);
    }
    // reduced costs of the auxiliary objective: minimise the sum of artificials
    let mut obj = vec![T::zero(); n + 1];
    for row in &rows {
        for (o, v) in obj.iter_mut().zip(row) {
            if !v.is_zero() {
                *o = o.sub(v)?;
            }
        }
    }
    // artificial variable of row i is numbered n + i
    let mut basis: Vec<usize> = (n..n + m).collect();

    while let Some(enter) = (0..n).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<(usize, T)> = None;
        for (i, row) in rows.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = row[n].div(&row[enter])?;
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let (r, _) = leave.expect("phase-one objective is bounded below");
        pivot(&mut rows, &mut obj, r, enter)?;
        basis[r] = enter;
    }

    if !obj[n].is_zero() {
        return Ok(None);
    }
    let mut solution = vec![T::zero(); n];
    for (i, &var) in basis.iter().enumerate() {
        if var < n {
            solution[var] = rows[i][n].clone();
        }
    }
    Ok(Some(solution))
}

fn pivot<T: Scalar>(rows: &mut [Vec<T>], obj: &mut [T], r: usize, col: usize) -> Result<(), Overflow> {
    let p = rows[r][col].clone();
    for v in rows[r].iter_mut() {
        if !v.is_zero() {
            *v = v.div(&p)?;
        }
    }
    let pivot_row = rows[r].clone();
    let support: Vec<usize> = (0..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();
    let eliminate = |row: &mut [T]| -> Result<(), Overflow> {
        let f = row[col].clone();
        if f.is_zero() {
            return Ok(());
        }
        for &j in &support {
            row[j] = row[j].sub(&f.mul(&pivot_row[j])?)?;
        }
        Ok(())
    };
    for (i, row) in rows.iter_mut().enumerate() {
        if i != r {
            eliminate(row)?;
        }
    }
    eliminate(obj)
}
