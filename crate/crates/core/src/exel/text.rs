//! Text form of algebra elements.
//!
//! A basis element `(A, g)` is written `e{a}e{b}[g]`, listing the members of
//! `A` other than `1` and `g`; the unit is `1`. Elements are signed sums such
//! as `2*e{a}[b] - 1/3*[a] + 1`.

use crate::groups::{ElemSet, Group};
use crate::linalg::Scalar;

use super::algebra::PartialGroupAlgebra;
use super::element::{AlgElem, SElem};
use super::AlgebraError;

impl<G: Group> PartialGroupAlgebra<'_, G> {
    pub fn render_basis(&self, s: &SElem<G>) -> String {
        let g = self.group();
        let id = g.identity();
        let mut out = String::new();
        for a in s.set.elements() {
            if a != id && a != s.elem {
                out.push_str(&format!("e{{{}}}", g.elem_name(a)));
            }
        }
        if s.elem != id {
            out.push_str(&format!("[{}]", g.elem_name(s.elem)));
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }

    pub fn render(&self, x: &AlgElem<G>) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (s, c)) in x.terms().enumerate() {
            let (neg, mag) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&self.render_basis(s));
        }
        out
    }

    /// Parses the text form; monomials are multiplied out, so any product of
    /// `e{..}` and `[..]` factors is accepted.
    pub fn parse(&self, text: &str) -> Result<AlgElem<G>, AlgebraError> {
        let bad = |m: &str| AlgebraError::Parse(format!("{m} in `{text}`"));
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut depth = 0i32;
        let mut current = String::new();
        let mut negative = false;
        for ch in text.chars() {
            match ch {
                '{' | '[' => depth += 1,
                '}' | ']' => depth -= 1,
                _ => {}
            }
            if depth < 0 {
                return Err(bad("unbalanced brackets"));
            }
            if depth == 0 && (ch == '+' || ch == '-') && !current.trim().is_empty() {
                terms.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else if depth == 0 && (ch == '+' || ch == '-') {
                negative ^= ch == '-';
            } else {
                current.push(ch);
            }
        }
        if depth != 0 {
            return Err(bad("unbalanced brackets"));
        }
        if !current.trim().is_empty() {
            terms.push((negative, current));
        } else if !terms.is_empty() || negative {
            return Err(bad("dangling sign"));
        }
        let mut out = self.zero();
        for (neg, t) in terms {
            let mut x = self.parse_monomial(t.trim()).map_err(|e| match e {
                AlgebraError::Parse(m) => bad(&m),
                other => other,
            })?;
            if neg {
                x = x.neg();
            }
            out = out.add(&x);
        }
        Ok(out)
    }

    fn parse_monomial(&self, t: &str) -> Result<AlgElem<G>, AlgebraError> {
        let g = self.group();
        let (coeff, mono) = match t.split_once('*') {
            Some((c, m)) => (Scalar::parse(self.field(), c)?, m.trim()),
            None if t.starts_with(|c: char| c.is_ascii_digit()) && !t.contains(['{', '[']) => {
                (Scalar::parse(self.field(), t)?, "1")
            }
            None => (self.scalar(1), t),
        };
        if mono == "0" {
            return Ok(self.zero());
        }
        let mut acc = self.one();
        let mut rest = mono;
        while !rest.is_empty() {
            rest = rest.trim_start();
            let (factor, after) = if let Some(r) = rest.strip_prefix("e{") {
                let end = r.find('}').ok_or_else(|| AlgebraError::Parse("unclosed e{".into()))?;
                let x = g.parse_elem(&r[..end]).ok_or_else(|| AlgebraError::Parse(format!("unknown element `{}`", &r[..end])))?;
                (self.idempotent(x), &r[end + 1..])
            } else if let Some(r) = rest.strip_prefix('[') {
                let end = r.find(']').ok_or_else(|| AlgebraError::Parse("unclosed [".into()))?;
                let x = g.parse_elem(&r[..end]).ok_or_else(|| AlgebraError::Parse(format!("unknown element `{}`", &r[..end])))?;
                (self.generator(x), &r[end + 1..])
            } else if let Some(r) = rest.strip_prefix('1') {
                (self.one(), r)
            } else {
                return Err(AlgebraError::Parse(format!("unexpected `{rest}`")));
            };
            acc = self.mul(&acc, &factor);
            rest = after;
        }
        Ok(acc.scale(&coeff))
    }
}

#[cfg(test)]
mod tests {
    use crate::exel::PartialGroupAlgebra;
    use crate::groups::{build_named_group, Integers};
    use crate::linalg::Field;

    #[test]
    fn render_and_parse() {
        let g = build_named_group("C2xC2").unwrap();
        let k = PartialGroupAlgebra::new(&g, Field::Rational);
        let x = k.parse("2*e{b}[a] - 1/3*[ab] + 1").unwrap();
        assert_eq!(k.render(&x), "1 + 2*e{b}[a] - 1/3*[ab]");
        assert_eq!(k.parse(&k.render(&x)).unwrap(), x);
        assert_eq!(k.parse("0").unwrap(), k.zero());
        assert!(k.parse("e{z}").is_err());
        assert!(k.parse("[a").is_err());
    }

    #[test]
    fn integer_names() {
        let z = Integers;
        let k = PartialGroupAlgebra::new(&z, Field::Rational);
        let x = k.parse("e{-1}[2] - e{3}").unwrap();
        assert_eq!(k.render(&x), "e{-1}[2] - e{3}");
        assert_eq!(k.parse(&k.render(&x)).unwrap(), x);
    }
}
