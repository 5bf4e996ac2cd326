//! Executable forms of the product inequalities used in the joint-number
//! analysis. Exact over rationals; floats use an absolute tolerance.

use crate::error::{domain, Result};
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, Zero};
use serde::Serialize;
use std::fmt::Display;

pub trait Scalar: Clone + PartialOrd + Signed + FromPrimitive + Display {
    /// Absolute slack allowed when comparing.
    fn tolerance() -> Self;
}

impl Scalar for f64 {
    fn tolerance() -> Self {
        1e-12
    }
}

impl Scalar for Ratio<BigInt> {
    fn tolerance() -> Self {
        Ratio::zero()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InequalityReport<T> {
    pub lhs: T,
    pub rhs: T,
    /// `lhs - rhs`.
    pub slack: T,
    pub holds: bool,
    /// `|slack| <= tolerance`.
    pub equality: bool,
}

impl<T: Scalar> InequalityReport<T> {
    fn compare(lhs: T, rhs: T) -> Self {
        let slack = lhs.clone() - rhs.clone();
        let tol = T::tolerance();
        let holds = slack >= -tol.clone();
        let equality = slack.abs() <= tol;
        InequalityReport { lhs, rhs, slack, holds, equality }
    }
}

fn ascending<T: Scalar>(xs: &[T], name: &str) -> Result<()> {
    if xs.windows(2).any(|w| w[0] > w[1]) {
        return domain(format!("{name} must be ascending"));
    }
    Ok(())
}

fn dominated<T: Scalar>(lower: &[T], upper: &[T], names: (&str, &str)) -> Result<()> {
    if lower.len() != upper.len() {
        return domain(format!("{} and {} differ in length", names.0, names.1));
    }
    for (i, (l, u)) in lower.iter().zip(upper).enumerate() {
        if l.is_negative() || l > u {
            return domain(format!("need 0 <= {}_{i} <= {}_{i}", names.0, names.1));
        }
    }
    Ok(())
}

fn deficit<T: Scalar>(upper: &[T], lower: &[T]) -> T {
    upper.iter().zip(lower).fold(T::zero(), |acc, (u, l)| acc + u.clone() - l.clone())
}

fn product<'a, T: Scalar + 'a>(xs: impl IntoIterator<Item = &'a T>) -> T {
    xs.into_iter().fold(T::one(), |acc, x| acc * x.clone())
}

/// `prod y_i >= (x_1 - alpha) prod_{i>=2} x_i` with `alpha = sum (x_i - y_i)`,
/// for ascending nonnegative `x` and `0 <= y_i <= x_i`.
pub fn check_product_decrease<T: Scalar>(x: &[T], y: &[T]) -> Result<InequalityReport<T>> {
    if x.is_empty() {
        return domain("x must be nonempty");
    }
    if x[0].is_negative() {
        return domain("x must be nonnegative");
    }
    ascending(x, "x")?;
    dominated(y, x, ("y", "x"))?;
    let alpha = deficit(x, y);
    let lhs = product(y);
    let rhs = (x[0].clone() - alpha) * product(&x[1..]);
    Ok(InequalityReport::compare(lhs, rhs))
}

fn ratio_power<T: Scalar>(r: usize) -> T {
    let base = T::from_usize(r - 1).unwrap() / T::from_usize(r).unwrap();
    (1..r).fold(T::one(), |acc, _| acc * base.clone())
}

fn check_a<T: Scalar>(a: &[T]) -> Result<()> {
    let r = a.len();
    if r < 2 {
        return domain("need at least two values (r >= 2)");
    }
    ascending(a, "a")?;
    if a.iter().any(|v| v.is_negative() || *v > T::one()) {
        return domain("every a_i must lie in [0, 1]");
    }
    let sum = a.iter().fold(T::zero(), |acc, v| acc + v.clone());
    if sum < T::from_usize(r - 1).unwrap() - T::tolerance() {
        return domain(format!("sum of a_i = {sum} is below r - 1 = {}", r - 1));
    }
    Ok(())
}

/// `prod_{i>=2} a_i >= ((r-1)/r)^(r-1)` for ascending `a_i` in `[0,1]` with
/// `sum a_i >= r - 1`. Equality exactly when every `a_i = (r-1)/r`.
pub fn check_min_product<T: Scalar>(a: &[T]) -> Result<InequalityReport<T>> {
    check_a(a)?;
    Ok(InequalityReport::compare(product(&a[1..]), ratio_power(a.len())))
}

/// `prod_{i>=2} b_i >= (1 - 2 alpha) ((r-1)/r)^(r-1)` where `a` is as in
/// [`check_min_product`], `0 <= b_i <= a_i` and `alpha = sum (a_i - b_i) <= 1/4`.
pub fn check_perturbed_product<T: Scalar>(a: &[T], b: &[T]) -> Result<InequalityReport<T>> {
    check_a(a)?;
    dominated(b, a, ("b", "a"))?;
    let alpha = deficit(a, b);
    let quarter = T::one() / T::from_usize(4).unwrap();
    if alpha > quarter.clone() + T::tolerance() {
        return domain(format!("alpha = {alpha} exceeds 1/4"));
    }
    let two = T::from_usize(2).unwrap();
    let rhs = (T::one() - two * alpha) * ratio_power(a.len());
    Ok(InequalityReport::compare(product(&b[1..]), rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use num_traits::One;
    use rand_chacha::ChaCha8Rng;

    type Q = Ratio<BigInt>;

    fn q(n: i64, d: i64) -> Q {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn product_decrease_examples() {
        let x = [q(1, 1), q(2, 1), q(3, 1)];
        let rep = check_product_decrease(&x, &x).unwrap();
        assert!(rep.holds && rep.equality);

        let rep = check_product_decrease(&[q(2, 1), q(3, 1)], &[q(1, 1), q(3, 1)]).unwrap();
        assert_eq!((rep.lhs.clone(), rep.rhs.clone()), (q(3, 1), q(3, 1)));
        assert!(rep.holds && rep.equality);

        assert!(check_product_decrease(&[q(3, 1), q(2, 1)], &[q(1, 1), q(1, 1)]).is_err());
        assert!(check_product_decrease(&[q(1, 1)], &[q(2, 1)]).is_err());
    }

    #[test]
    fn min_product_examples() {
        let a = vec![q(3, 4); 4];
        let rep = check_min_product(&a).unwrap();
        assert!(rep.holds && rep.equality);
        assert!(rep.slack.is_zero());

        let ones = vec![q(1, 1); 5];
        let rep = check_min_product(&ones).unwrap();
        assert!(rep.holds && !rep.equality);
        assert_eq!(rep.lhs, q(1, 1));

        assert!(check_min_product(&[q(1, 4), q(1, 4)]).is_err());
        assert!(check_min_product(&[q(1, 1)]).is_err());
        let float = check_min_product(&[0.75f64; 4]).unwrap();
        assert!(float.holds && float.equality);
    }

    #[test]
    fn perturbed_product_examples() {
        let a = vec![q(2, 3); 3];
        let rep = check_perturbed_product(&a, &a).unwrap();
        assert!(rep.holds && rep.equality);
        let b = [q(2, 3), q(2, 3), q(1, 3)];
        assert!(check_perturbed_product(&a, &b).is_err(), "alpha = 1/3 > 1/4");
    }

    fn rand_q(rng: &mut ChaCha8Rng, den: i64) -> Q {
        q(rng.gen_range(0..=den), den)
    }

    /// Ascending a in [0,1] with sum >= r - 1.
    fn random_a(rng: &mut ChaCha8Rng, r: usize) -> Vec<Q> {
        let den = rng.gen_range(1..=12);
        // Deficits 1 - a_i summing to at most 1.
        let weights: Vec<Q> = (0..r).map(|_| rand_q(rng, den)).collect();
        let total = weights.iter().fold(Q::zero(), |a, w| a + w) + rand_q(rng, den);
        let mut a: Vec<Q> = weights
            .iter()
            .map(|w| if total.is_zero() { Q::one() } else { Q::one() - w / &total })
            .collect();
        a.sort();
        a
    }

    #[test]
    fn product_decrease_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let s = rng.gen_range(1..=6);
            let den = rng.gen_range(1..=9);
            let mut x: Vec<Q> = (0..s).map(|_| rand_q(&mut rng, den) * q(5, 1)).collect();
            x.sort();
            let y: Vec<Q> = x.iter().map(|xi| xi * rand_q(&mut rng, den)).collect();
            assert!(check_product_decrease(&x, &y).unwrap().holds, "{x:?} {y:?}");
        }
    }

    #[test]
    fn min_product_randomized_with_equality_case() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..10_000 {
            let r = rng.gen_range(2..=7);
            let a = random_a(&mut rng, r);
            let rep = check_min_product(&a).unwrap();
            assert!(rep.holds, "{a:?}");
            let at_ratio = a.iter().all(|v| *v == q(r as i64 - 1, r as i64));
            assert_eq!(rep.equality, at_ratio, "{a:?}");
        }
    }

    #[test]
    fn perturbed_product_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..10_000 {
            let r = rng.gen_range(2..=7);
            let a = random_a(&mut rng, r);
            let budget = q(1, 4) * rand_q(&mut rng, 8);
            let mut left = budget;
            let b: Vec<Q> = a
                .iter()
                .map(|ai| {
                    let cut = std::cmp::min(ai.clone(), left.clone()) * rand_q(&mut rng, 5);
                    left -= &cut;
                    ai - cut
                })
                .collect();
            assert!(check_perturbed_product(&a, &b).unwrap().holds, "{a:?} {b:?}");
        }
    }
}
