use crate::ExactError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer polynomial, coefficients ascending by degree, canonical form
/// (no trailing zeros; the zero polynomial is the empty vector).
#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    c: Vec<BigInt>,
}

impl std::fmt::Debug for IntPoly {
    /// Renders like "x^3 - x^2 - 11*x - 7"; handy in assertion failures.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            if first {
                if a.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if a.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { c: Vec::new() }
    }

    pub fn from_coeffs(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        IntPoly { c }
    }

    pub fn from_descending(mut c: Vec<BigInt>) -> Self {
        c.reverse();
        IntPoly::from_coeffs(c)
    }

    /// Ascending i64 coefficients: `from_i64(&[-7, -11, -1, 1])` is
    /// x³ − x² − 11x − 7.
    pub fn from_i64(c: &[i64]) -> Self {
        IntPoly::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        IntPoly { c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.c.last()
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.c.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// Sign of p(num / 2^log2_den) without leaving the integers: Horner on
    /// the numerator with every term cleared to the common denominator.
    pub fn sign_at_dyadic(&self, num: &BigInt, log2_den: u32) -> i8 {
        let Some(d) = self.degree() else { return 0 };
        let mut acc = self.c[d].clone();
        for k in (0..d).rev() {
            acc = acc * num + (&self.c[k] << (log2_den as usize * (d - k)));
        }
        sign_of(&acc)
    }

    pub fn sign_at_pos_infinity(&self) -> i8 {
        self.leading().map_or(0, sign_of)
    }

    pub fn sign_at_neg_infinity(&self) -> i8 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = sign_of(&self.c[d]);
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    pub fn derivative(&self) -> IntPoly {
        if self.c.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(
            self.c[1..]
                .iter()
                .enumerate()
                .map(|(k, a)| a * BigInt::from(k + 1))
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.c.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a))
    }

    /// Divides out the content, keeping the leading sign.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let cont = self.content();
        IntPoly { c: self.c.iter().map(|a| a / &cont).collect() }
    }

    /// Primitive with positive leading coefficient (same roots).
    pub fn primitive_positive(&self) -> IntPoly {
        let p = self.primitive_part();
        if p.leading().is_some_and(Signed::is_negative) {
            -&p
        } else {
            p
        }
    }

    pub fn mul_scalar(&self, s: &BigInt) -> IntPoly {
        if s.is_zero() {
            return IntPoly::zero();
        }
        IntPoly { c: self.c.iter().map(|a| a * s).collect() }
    }

    /// Number of trailing zero coefficients = multiplicity of the root 0.
    pub fn trailing_zero_roots(&self) -> usize {
        self.c.iter().take_while(|a| a.is_zero()).count()
    }

    /// Quotient by x^k (the discarded coefficients must be checked by the
    /// caller if exactness matters).
    pub fn shift_down(&self, k: usize) -> IntPoly {
        IntPoly::from_coeffs(self.c[k.min(self.c.len())..].to_vec())
    }
}

fn sign_of(x: &BigInt) -> i8 {
    match x.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

impl std::ops::Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.c.len().max(rhs.c.len());
        IntPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl std::ops::Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.c.len().max(rhs.c.len());
        IntPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl std::ops::Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { c: self.c.iter().map(|a| -a).collect() }
    }
}

impl std::ops::Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in rhs.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(c)
    }
}

/// Exact quotient q/p for primitive p (integral by Gauss's lemma whenever p
/// divides q over the rationals); None when the division is not exact.
pub fn div_exact(q: &IntPoly, p: &IntPoly) -> Option<IntPoly> {
    assert!(!p.is_zero(), "division by zero polynomial");
    if q.is_zero() {
        return Some(IntPoly::zero());
    }
    let (dq, dp) = (q.degree().unwrap(), p.degree().unwrap());
    if dq < dp {
        return None;
    }
    let mut rem = q.c.clone();
    let mut quot = vec![BigInt::zero(); dq - dp + 1];
    let lead = p.leading().unwrap();
    for k in (0..quot.len()).rev() {
        let top = std::mem::take(&mut rem[k + dp]);
        if top.is_zero() {
            continue;
        }
        let (f, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for j in 0..dp {
            let delta = &f * &p.c[j];
            rem[k + j] -= delta;
        }
        quot[k] = f;
    }
    if rem.iter().any(|a| !a.is_zero()) {
        return None;
    }
    Some(IntPoly::from_coeffs(quot))
}

/// Does p divide q over the rationals? Both are reduced to primitive parts
/// first, so integer contents never get in the way.
pub fn poly_divides(p: &IntPoly, q: &IntPoly) -> Result<bool, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroDivisor);
    }
    if q.is_zero() {
        return Ok(true);
    }
    Ok(div_exact(&q.primitive_part(), &p.primitive_part()).is_some())
}

/// Pseudo-remainder of a by b, scaled by a positive factor so its sign at
/// every point matches sign(a mod b) — the property Sturm chains need.
pub(crate) fn pseudo_rem_pos(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("nonzero divisor");
    let lead = b.leading().unwrap().clone();
    let mut r = a.clone();
    let mut steps = 0usize;
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        // r ← lc(b)·r − lc(r)·x^(dr−db)·b clears the top coefficient and
        // multiplies the eventual remainder by lc(b) once.
        let top = r.leading().unwrap().clone();
        let mut next = r.mul_scalar(&lead).c;
        for j in 0..=db {
            let delta = &top * &b.c[j];
            next[dr - db + j] -= delta;
        }
        r = IntPoly::from_coeffs(next);
        steps += 1;
    }
    if lead.is_negative() && steps % 2 == 1 {
        -&r
    } else {
        r
    }
}

/// Positive-leading gcd over the integers: primitive pseudo-remainder
/// sequence on the primitive parts, times the gcd of the contents.
pub fn poly_gcd(p: &IntPoly, q: &IntPoly) -> IntPoly {
    if p.is_zero() && q.is_zero() {
        return IntPoly::zero();
    }
    if p.is_zero() {
        return q.primitive_positive().mul_scalar(&q.content());
    }
    if q.is_zero() {
        return p.primitive_positive().mul_scalar(&p.content());
    }
    let cont = p.content().gcd(&q.content());
    let (mut a, mut b) = (p.primitive_positive(), q.primitive_positive());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem_pos(&a, &b).primitive_positive();
        a = b;
        b = r;
    }
    a.primitive_positive().mul_scalar(&cont)
}
