//! Shared printing of F-linear combinations such as `x*t1 - t2` or
//! `(x + 1)*t^1∧t^3`.

use crate::coeffring::RatFunc;

/// Prints `Σ c * label`, skipping zero coefficients; `"0"` when empty.
pub(crate) fn linear_combination<'a>(
    terms: impl IntoIterator<Item = (&'a RatFunc, String)>,
    names: &[String],
) -> String {
    let mut out = String::new();
    for (c, label) in terms {
        if c.is_zero() {
            continue;
        }
        let (negative, body) = term(c, &label, names);
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn term(c: &RatFunc, label: &str, names: &[String]) -> (bool, String) {
    if c.is_one() {
        return (false, label.to_string());
    }
    let neg = -c;
    if neg.is_one() {
        return (true, label.to_string());
    }
    if c.is_atomic() {
        return (false, format!("{}*{label}", c.display_with(names)));
    }
    if neg.is_atomic() {
        return (true, format!("{}*{label}", neg.display_with(names)));
    }
    (false, format!("({})*{label}", c.display_with(names)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::parse_ratfunc;

    #[test]
    fn signs_and_parentheses() {
        let names = vec!["x".to_string()];
        let rf = |s: &str| parse_ratfunc(s, &names).unwrap();
        let cs = [rf("1"), rf("-1"), rf("2*x"), rf("-3"), rf("x+1"), rf("0")];
        let labels = ["a", "b", "c", "d", "e", "f"].map(String::from);
        let s = linear_combination(cs.iter().zip(labels), &names);
        assert_eq!(s, "a - b + 2*x*c - 3*d + (x + 1)*e");
        let s = linear_combination([(&cs[1], "t1".to_string())], &names);
        assert_eq!(s, "-t1");
        assert_eq!(linear_combination([(&cs[5], "t".to_string())], &names), "0");
    }
}
