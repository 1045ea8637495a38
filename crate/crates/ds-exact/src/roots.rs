use crate::poly::{div_exact, poly_gcd, pseudo_rem_pos, IntPoly};
use crate::ExactError;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Sturm sequence of p: p, p', then negated remainders, every element
/// reduced to its primitive part. Positive scaling keeps all the sign
/// information the variation counts depend on.
pub fn sturm_chain(p: &IntPoly) -> Vec<IntPoly> {
    assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
    let mut chain = vec![p.primitive_part()];
    let p1 = chain[0].derivative();
    if p1.is_zero() {
        return chain;
    }
    chain.push(p1.primitive_part());
    loop {
        let k = chain.len();
        let r = pseudo_rem_pos(&chain[k - 2], &chain[k - 1]);
        if r.is_zero() {
            break;
        }
        chain.push((-&r).primitive_part());
    }
    chain
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

fn variations_at(chain: &[IntPoly], num: &BigInt, log2_den: u32) -> usize {
    count_variations(chain.iter().map(|p| p.sign_at_dyadic(num, log2_den)))
}

/// Yun's algorithm: returns pairwise-coprime square-free factors with their
/// multiplicities, so p = c · Π fᵢ^(mᵢ) for some rational constant c.
/// Constant factors are dropped; the input must be nonzero.
pub fn square_free_decomposition(p: &IntPoly) -> Vec<(IntPoly, usize)> {
    assert!(!p.is_zero(), "square-free decomposition of the zero polynomial");
    let a = p.primitive_positive();
    if a.degree() == Some(0) {
        return Vec::new();
    }
    let g = poly_gcd(&a, &a.derivative());
    if g.degree() == Some(0) {
        return vec![(a, 1)];
    }
    // a primitive and g | a force every quotient below to stay primitive,
    // so all the exact divisions land in the integers.
    let mut b = div_exact(&a, &g).expect("gcd divides");
    let mut d = {
        let c = div_exact(&a.derivative(), &g).expect("gcd divides derivative");
        &c - &b.derivative()
    };
    let mut out = Vec::new();
    let mut mult = 1usize;
    while b.degree() > Some(0) {
        let f = poly_gcd(&b, &d);
        if f.degree() > Some(0) {
            out.push((f.clone(), mult));
        }
        b = div_exact(&b, &f).expect("factor divides b");
        let c = div_exact(&d, &f).expect("factor divides d");
        d = &c - &b.derivative();
        mult += 1;
    }
    out
}

/// Strict bound M with every real root of p inside (−M, M).
fn root_bound(p: &IntPoly) -> BigInt {
    let lead = p.leading().expect("nonzero").abs();
    let mut top = BigInt::zero();
    for a in p.coeffs() {
        let m = a.abs();
        if m > top {
            top = m;
        }
    }
    top / lead + 2
}

/// Exactly-one-root refinement state: a dyadic interval (lo, hi)/2^s whose
/// endpoints are non-roots with opposite signs.
struct Isolated {
    lo: BigInt,
    hi: BigInt,
    scale: u32,
}

/// All real roots of a square-free polynomial, each within eps. Exact
/// dyadic roots met during bisection are peeled off by deflation and the
/// search restarts on the quotient; bracketed roots are refined against the
/// fully deflated polynomial, whose endpoints are guaranteed off every root.
fn roots_of_square_free(f: &IntPoly, eps: f64) -> Vec<f64> {
    let mut out = Vec::new();
    let mut f = f.clone();
    'restart: loop {
        if f.degree().unwrap_or(0) == 0 {
            return out;
        }
        let chain = sturm_chain(&f);
        let bound = root_bound(&f);
        let neg = -&bound;
        let v_lo = variations_at(&chain, &neg, 0);
        let v_hi = variations_at(&chain, &bound, 0);
        let mut pending = Vec::new();
        let mut stack = vec![(neg, bound, 0u32, v_lo, v_hi)];
        while let Some((lo, hi, s, vl, vh)) = stack.pop() {
            let roots_here = vl - vh;
            if roots_here == 0 {
                continue;
            }
            if roots_here == 1 {
                pending.push(Isolated { lo, hi, scale: s });
                continue;
            }
            let mid = &lo + &hi;
            if f.sign_at_dyadic(&mid, s + 1) == 0 {
                // exact dyadic root: peel off (2^(s+1)·x − mid) and retry
                let lin = IntPoly::from_coeffs(vec![-&mid, BigInt::one() << (s as usize + 1)])
                    .primitive_part();
                out.push(dyadic_to_f64(&mid, s + 1));
                f = div_exact(&f, &lin).expect("dyadic root divides");
                continue 'restart;
            }
            let vm = variations_at(&chain, &mid, s + 1);
            stack.push((&lo << 1, mid.clone(), s + 1, vl, vm));
            stack.push((mid, &hi << 1, s + 1, vm, vh));
        }
        out.extend(pending.into_iter().map(|iso| refine(&f, iso, eps)));
        return out;
    }
}

fn dyadic_to_f64(num: &BigInt, scale: u32) -> f64 {
    num.to_f64().unwrap_or(f64::NAN) * (-(scale as f64)).exp2()
}

/// Shrinks a one-root bracket of f to width ≤ eps by sign bisection; exits
/// early with an exact value when a dyadic midpoint is a root.
fn refine(f: &IntPoly, iso: Isolated, eps: f64) -> f64 {
    let Isolated { mut lo, mut hi, mut scale } = iso;
    let mut sign_lo = f.sign_at_dyadic(&lo, scale);
    debug_assert!(sign_lo != 0 && f.sign_at_dyadic(&hi, scale) == -sign_lo);
    loop {
        let width = dyadic_to_f64(&(&hi - &lo), scale);
        if width <= eps {
            return dyadic_to_f64(&(&lo + &hi), scale + 1);
        }
        let mid = &lo + &hi;
        let sm = f.sign_at_dyadic(&mid, scale + 1);
        if sm == 0 {
            return dyadic_to_f64(&mid, scale + 1);
        }
        lo <<= 1;
        hi <<= 1;
        scale += 1;
        if sm == sign_lo {
            lo = mid;
            sign_lo = sm;
        } else {
            hi = mid;
        }
    }
}

/// All real roots of p with multiplicities, ascending, each approximated to
/// within eps (dyadic rational roots come out exact).
pub fn real_roots(p: &IntPoly, eps: f64) -> Result<Vec<(f64, usize)>, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let mut roots: Vec<(f64, usize)> = Vec::new();
    let zero_mult = p.trailing_zero_roots();
    if zero_mult > 0 {
        roots.push((0.0, zero_mult));
    }
    let q = p.shift_down(zero_mult);
    for (factor, mult) in square_free_decomposition(&q) {
        for value in roots_of_square_free(&factor, eps) {
            roots.push((value, mult));
        }
    }
    roots.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite roots"));
    Ok(roots)
}
