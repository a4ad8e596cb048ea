use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use realroot_core::gamma::{BinomialRow, ShiftedFactorial};
use realroot_core::minors::{
    exp_minor_product, hypergeom_coeff_pochhammer, hypergeom_poly, stanley_product, toeplitz_minor,
};
use realroot_core::num::{factorial, format_rational, inv_factorial, rat_int, Rational};
use realroot_core::poly::Poly;
use realroot_core::series::{gen_fd_exp, gen_j_exp, gen_sr_exp};
use realroot_core::transforms::j_op;
use realroot_core::Error;

use crate::report::{Outcome, Report};
use crate::{CommandResult, IdentityArgs};

/// One exact-equality cell of an identity sweep.
#[derive(Serialize)]
struct Cell {
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<usize>,
    k: usize,
    /// Determinant route, when the identity is about minors.
    #[serde(skip_serializing_if = "Option::is_none")]
    minor: Option<String>,
    /// Closed-form route, when the identity is about minors.
    #[serde(skip_serializing_if = "Option::is_none")]
    formula: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs: Option<String>,
    equal: bool,
}

impl Cell {
    fn minor_cell(
        n: Option<usize>,
        d: usize,
        k: usize,
        minor: Rational,
        formula: Rational,
    ) -> Self {
        Cell {
            n,
            d: Some(d),
            k,
            equal: minor == formula,
            minor: Some(format_rational(&minor)),
            formula: Some(format_rational(&formula)),
            lhs: None,
            rhs: None,
        }
    }

    fn value_cell(n: Option<usize>, k: usize, lhs: Rational, rhs: Rational) -> Self {
        Cell {
            n,
            d: None,
            k,
            equal: lhs == rhs,
            minor: None,
            formula: None,
            lhs: Some(format_rational(&lhs)),
            rhs: Some(format_rational(&rhs)),
        }
    }
}

fn cap(name: &str, value: usize, max: usize) -> Result<usize, Error> {
    if value > max {
        return Err(Error::InvalidInput(format!(
            "{name} is capped at {max} (got {value})"
        )));
    }
    Ok(value)
}

/// Defining coefficient of `s_r[exp]` straight from `a_k = 1/k!`,
/// independent of the generator's closed form.
fn sr_exp_defining(r: usize, k: usize) -> Rational {
    let square = inv_factorial(k) * inv_factorial(k);
    match k.checked_sub(r) {
        Some(lo) => square - inv_factorial(lo) * inv_factorial(k + r),
        None => square,
    }
}

/// Defining coefficient of `j[exp]` straight from `a_k = 1/k!`.
fn j_exp_defining(k: usize) -> Rational {
    let a = |i: i64| -> Rational {
        if i < 0 {
            Rational::zero()
        } else {
            inv_factorial(i as usize)
        }
    };
    let k = k as i64;
    let turan_k = a(k) * a(k) - a(k - 1) * a(k + 1);
    let turan_k1 = a(k + 1) * a(k + 1) - a(k) * a(k + 2);
    let cross = a(k) * a(k + 1) - a(k - 1) * a(k + 2);
    rat_int(4) * turan_k * turan_k1 - &cross * &cross
}

/// Closed form of `j_op[(1+x)^n]`:
/// `4 n!(n+1)!(n+2)! C(n,k) / [(k+1)!((k+2)!)^2 (n-k-1)!((n-k+1)!)^2]`,
/// zero where the `(n-k-1)!` pole sits.
fn j_binomial_closed_form(n: usize, k: usize) -> Rational {
    if n < k + 1 {
        return Rational::zero();
    }
    let lead =
        rat_int(4) * Rational::from_integer(factorial(n) * factorial(n + 1) * factorial(n + 2));
    let den = factorial(k + 1)
        * factorial(k + 2).pow(2)
        * factorial(n - k - 1)
        * factorial(n - k + 1).pow(2);
    Rational::from_integer(realroot_core::num::binomial(n, k)) * lead / Rational::from_integer(den)
}

pub fn run(args: &IdentityArgs) -> CommandResult {
    let (rows, ranges): (Vec<Cell>, Value) = match args.name.as_str() {
        "stanley" => {
            let n_max = cap("--n-max", args.n_max.unwrap_or(12), 30)?;
            let d_max = cap("--d-max", args.d_max.unwrap_or(6), 8)?;
            let cells: Vec<(usize, usize, usize)> = (0..=n_max)
                .flat_map(|n| (1..=d_max).flat_map(move |d| (0..=n).map(move |k| (n, d, k))))
                .collect();
            let rows = cells
                .into_par_iter()
                .map(|(n, d, k)| {
                    let seq = BinomialRow { n };
                    Cell::minor_cell(
                        Some(n),
                        d,
                        k,
                        toeplitz_minor(&seq, k, d),
                        stanley_product(n, d, k).expect("k <= n"),
                    )
                })
                .collect();
            (rows, json!({"nMax": n_max, "dMax": d_max}))
        }
        "mace" => {
            let d_max = cap("--d-max", args.d_max.unwrap_or(6), 8)?;
            let k_max = cap("--k-max", args.k_max.unwrap_or(20), 60)?;
            let cells: Vec<(usize, usize)> = (1..=d_max)
                .flat_map(|d| (0..=k_max).map(move |k| (d, k)))
                .collect();
            let rows = cells
                .into_par_iter()
                .map(|(d, k)| {
                    let seq = ShiftedFactorial { j: 0 };
                    Cell::minor_cell(
                        None,
                        d,
                        k,
                        toeplitz_minor(&seq, k, d),
                        exp_minor_product(d, k),
                    )
                })
                .collect();
            (rows, json!({"dMax": d_max, "kMax": k_max}))
        }
        "fd-exp" => {
            let d_max = cap("--d-max", args.d_max.unwrap_or(6), 8)?;
            let k_max = cap("--k-max", args.k_max.unwrap_or(20), 60)?;
            let mut rows = Vec::new();
            for d in 1..=d_max {
                let gen = gen_fd_exp(d)?;
                let seq = ShiftedFactorial { j: 0 };
                for k in 0..=k_max {
                    rows.push(Cell::minor_cell(
                        None,
                        d,
                        k,
                        toeplitz_minor(&seq, k, d),
                        gen.coeff(k),
                    ));
                }
            }
            (rows, json!({"dMax": d_max, "kMax": k_max}))
        }
        "s4-closed-form" => {
            let k_max = cap("--k-max", args.k_max.unwrap_or(40), 200)?;
            let gen = gen_sr_exp(4);
            let rows = (0..=k_max)
                .map(|k| Cell::value_cell(None, k, sr_exp_defining(4, k), gen.coeff(k)))
                .collect();
            (rows, json!({"kMax": k_max}))
        }
        "j-exp" => {
            let k_max = cap("--k-max", args.k_max.unwrap_or(40), 200)?;
            let gen = gen_j_exp();
            let rows = (0..=k_max)
                .map(|k| Cell::value_cell(None, k, j_exp_defining(k), gen.coeff(k)))
                .collect();
            (rows, json!({"kMax": k_max}))
        }
        "j-binomial" => {
            let n_max = cap("--n-max", args.n_max.unwrap_or(15), 40)?;
            let mut rows = Vec::new();
            for n in 0..=n_max {
                let image = j_op(&Poly::one_plus_x_pow(n));
                for k in 0..=n {
                    rows.push(Cell::value_cell(
                        Some(n),
                        k,
                        image.coeff(k),
                        j_binomial_closed_form(n, k),
                    ));
                }
            }
            (rows, json!({"nMax": n_max}))
        }
        "pochhammer" => {
            let n_max = cap("--n-max", args.n_max.unwrap_or(10), 20)?;
            let alpha_sets: [&[usize]; 8] =
                [&[], &[1], &[2], &[3], &[1, 2], &[1, 3], &[2, 4], &[1, 2, 3]];
            let mut rows = Vec::new();
            for alphas in alpha_sets {
                for n in 0..=n_max {
                    let direct = hypergeom_poly(alphas, n)?;
                    for k in 0..=n {
                        rows.push(Cell::value_cell(
                            Some(n),
                            k,
                            direct.coeff(k),
                            hypergeom_coeff_pochhammer(alphas, n, k),
                        ));
                    }
                }
            }
            (rows, json!({"nMax": n_max, "alphaSets": alpha_sets}))
        }
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown identity {other:?}; known: stanley, mace, j-binomial, \
                 s4-closed-form, fd-exp, j-exp, pochhammer"
            )))
        }
    };

    let all_equal = rows.iter().all(|c| c.equal);
    let inputs = json!({
        "name": args.name,
        "nMax": args.n_max,
        "dMax": args.d_max,
        "kMax": args.k_max,
    });
    let results = json!({
        "name": args.name,
        "ranges": ranges,
        "cellCount": rows.len(),
        "allEqual": all_equal,
        "rows": rows,
    });
    let outcome = if all_equal {
        Outcome::Verified
    } else {
        Outcome::Uncertified
    };
    Ok((
        Report::new("identity", inputs, results, Value::Null),
        outcome,
    ))
}
