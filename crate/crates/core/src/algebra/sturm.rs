use num_traits::{Signed, Zero};

use super::{derivative, Poly, Rational};
use crate::error::{Error, Result};

/// Interval endpoint on the extended real line.
#[derive(Clone, Debug, PartialEq)]
pub enum ExtendedReal {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

/// Sturm sequence p, p', -rem(p, p'), … for a real polynomial.
pub fn sturm_sequence(p: &Poly) -> Result<Vec<Poly>> {
    p.real_coeffs()?;
    let mut seq = vec![p.clone(), derivative(p)];
    while !seq[seq.len() - 1].is_zero() {
        let n = seq.len();
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        seq.push(-r);
    }
    seq.pop();
    Ok(seq)
}

fn sign_at(p: &Poly, x: &ExtendedReal) -> i32 {
    let Some(lead) = p.leading() else { return 0 };
    let s = match x {
        ExtendedReal::Finite(r) => p.eval_rat(r).re,
        ExtendedReal::PosInfinity => lead.re.clone(),
        ExtendedReal::NegInfinity => {
            let odd = p.degree().finite().unwrap_or(0) % 2 == 1;
            if odd {
                -lead.re.clone()
            } else {
                lead.re.clone()
            }
        }
    };
    if s.is_zero() {
        0
    } else if s.is_positive() {
        1
    } else {
        -1
    }
}

fn variations(seq: &[Poly], x: &ExtendedReal) -> usize {
    let signs: Vec<i32> = seq.iter().map(|p| sign_at(p, x)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in the open interval (lo, hi).
pub fn real_root_count(p: &Poly, lo: &ExtendedReal, hi: &ExtendedReal) -> Result<usize> {
    p.real_coeffs()?;
    if p.is_zero() {
        return Err(Error::InvalidParams("root count of the zero polynomial".into()));
    }
    // Square-free part keeps the count distinct and the sequence well-formed.
    let g = p.gcd(&derivative(p));
    let sf = p.div_exact(&g).expect("gcd divides");
    let seq = sturm_sequence(&sf)?;
    // Sturm counts roots in (lo, hi]; drop a root sitting on hi.
    let at_hi = matches!(hi, ExtendedReal::Finite(_)) && sign_at(&sf, hi) == 0;
    let v_lo = variations(&seq, lo);
    let v_hi = variations(&seq, hi);
    // A root at lo is already excluded: dropping the zero sign at lo gives
    // the variation count just to its right.
    let mut n = v_lo.saturating_sub(v_hi);
    if at_hi {
        n = n.saturating_sub(1);
    }
    Ok(n)
}
