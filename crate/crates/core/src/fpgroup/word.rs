use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::FpError;
use crate::finitegrp::Perm;

/// A freely reduced word: (generator index, nonzero exponent), adjacent
/// letters on distinct generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<(usize, i32)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn gen(g: usize) -> Self {
        Word { letters: vec![(g, 1)] }
    }

    pub fn from_letters(it: impl IntoIterator<Item = (usize, i32)>) -> Self {
        let mut w = Word::default();
        for (g, e) in it {
            w.push(g, e);
        }
        w
    }

    fn push(&mut self, g: usize, e: i32) {
        if e == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some((h, f)) if *h == g => {
                *f += e;
                if *f == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push((g, e)),
        }
    }

    pub fn letters(&self) -> &[(usize, i32)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Length counted with multiplicity.
    pub fn length(&self) -> usize {
        self.letters.iter().map(|(_, e)| e.unsigned_abs() as usize).sum()
    }

    /// Generator indices occurring in the word.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.letters.iter().map(|l| l.0).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn mul(&self, o: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &o.letters {
            w.push(g, e);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn pow(&self, n: i32) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..n.unsigned_abs() {
            w = w.mul(&base);
        }
        w
    }

    /// x⁻¹y⁻¹xy
    pub fn commutator(x: &Word, y: &Word) -> Word {
        x.inverse().mul(&y.inverse()).mul(x).mul(y)
    }

    pub fn cyclically_reduced(&self) -> Word {
        let mut l = self.letters.clone();
        loop {
            if l.len() < 2 {
                break;
            }
            let (g0, e0) = l[0];
            let (g1, e1) = l[l.len() - 1];
            if g0 != g1 {
                break;
            }
            l.pop();
            l[0] = (g0, e0 + e1);
            if l[0].1 == 0 {
                l.remove(0);
            }
        }
        Word { letters: l }
    }

    /// Exponent-sum vector.
    pub fn exponent_sums(&self, ngens: usize) -> Vec<i64> {
        let mut v = vec![0i64; ngens];
        for &(g, e) in &self.letters {
            v[g] += e as i64;
        }
        v
    }

    /// ±1 letters as table columns: 2g for g, 2g+1 for g⁻¹.
    pub fn columns(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length());
        for &(g, e) in &self.letters {
            let c = if e > 0 { 2 * g } else { 2 * g + 1 };
            out.extend(std::iter::repeat_n(c, e.unsigned_abs() as usize));
        }
        out
    }

    /// Image under generator images, composed left to right.
    pub fn evaluate(&self, images: &[Perm]) -> Perm {
        let n = images.first().map_or(0, |p| p.degree());
        let mut acc = Perm::identity(n);
        for &(g, e) in &self.letters {
            acc = acc.mul(&images[g].pow(e as i64));
        }
        acc
    }

    /// Like `evaluate`, but with precomputed inverses and partial images.
    pub fn evaluate_with(&self, images: &[Option<Perm>], inverses: &[Option<Perm>]) -> Option<Perm> {
        let mut acc: Option<Perm> = None;
        for &(g, e) in &self.letters {
            let p = if e > 0 { images[g].as_ref()? } else { inverses[g].as_ref()? };
            for _ in 0..e.unsigned_abs() {
                acc = Some(match acc {
                    None => p.clone(),
                    Some(a) => a.mul(p),
                });
            }
        }
        acc
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        let mut s = String::new();
        for (i, &(g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                s.push('*');
            }
            s.push_str(&names[g]);
            if e != 1 {
                let _ = write!(s, "^{e}");
            }
        }
        s
    }

    /// Parses products of generator names, powers `x^n`, `x^-n`,
    /// parenthesised subwords and commutators `(x,y)`; `*` and spaces are
    /// optional separators.
    pub fn parse(s: &str, names: &[String]) -> Result<Word, FpError> {
        let chars: Vec<char> = s.chars().collect();
        let mut p = Parser { s: &chars, i: 0, names };
        let w = p.product()?;
        p.ws();
        if p.i != chars.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(w)
    }
}

struct Parser<'a> {
    s: &'a [char],
    i: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> FpError {
        FpError::Parse(format!("{msg} at position {} in {:?}", self.i, self.s.iter().collect::<String>()))
    }

    fn ws(&mut self) {
        while self.i < self.s.len() && (self.s[self.i].is_whitespace() || self.s[self.i] == '*' || self.s[self.i] == '.') {
            self.i += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.s.get(self.i).copied()
    }

    fn product(&mut self) -> Result<Word, FpError> {
        let mut w = Word::identity();
        loop {
            self.ws();
            match self.peek() {
                None | Some(')') | Some(',') => return Ok(w),
                _ => {
                    let t = self.factor()?;
                    w = w.mul(&t);
                }
            }
        }
    }

    fn factor(&mut self) -> Result<Word, FpError> {
        let base = match self.peek() {
            Some('(') => {
                self.i += 1;
                let x = self.product()?;
                let out = if self.peek() == Some(',') {
                    self.i += 1;
                    let y = self.product()?;
                    Word::commutator(&x, &y)
                } else {
                    x
                };
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.i += 1;
                out
            }
            Some('1') => {
                self.i += 1;
                Word::identity()
            }
            Some(c) if c.is_alphabetic() || c == '_' => self.name()?,
            _ => return Err(self.err("expected a generator")),
        };
        self.ws_only();
        if self.peek() == Some('^') {
            self.i += 1;
            self.ws_only();
            let neg = if self.peek() == Some('-') {
                self.i += 1;
                true
            } else {
                false
            };
            let start = self.i;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.i += 1;
            }
            if start == self.i {
                return Err(self.err("expected an exponent"));
            }
            let n: i32 = self.s[start..self.i].iter().collect::<String>().parse().map_err(|_| self.err("bad exponent"))?;
            return Ok(base.pow(if neg { -n } else { n }));
        }
        Ok(base)
    }

    fn ws_only(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.i += 1;
        }
    }

    /// Longest generator name matching at the cursor.
    fn name(&mut self) -> Result<Word, FpError> {
        let rest: String = self.s[self.i..].iter().collect();
        let best = self
            .names
            .iter()
            .enumerate()
            .filter(|(_, n)| !n.is_empty() && rest.starts_with(n.as_str()))
            .max_by_key(|(_, n)| n.len());
        match best {
            Some((g, n)) => {
                self.i += n.chars().count();
                Ok(Word::gen(g))
            }
            None => Err(self.err("unknown generator")),
        }
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        self.letters.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let l: Vec<(usize, i32)> = Vec::deserialize(de)?;
        Ok(Word::from_letters(l))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        ["b", "j", "u", "v"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_and_format() {
        let n = names();
        let w = Word::parse("(bvu^3)^3", &n).unwrap();
        assert_eq!(w.length(), 15);
        let c = Word::parse("(u, j)", &n).unwrap();
        assert_eq!(c.format(&n), "u^-1*j^-1*u*j");
        let r = Word::parse("b^-1 u^-2 v^-1 b v u^2", &n).unwrap();
        assert_eq!(Word::parse(&r.format(&n), &n).unwrap(), r);
        assert_eq!(Word::parse("u u^-1", &n).unwrap(), Word::identity());
        assert!(Word::parse("x", &n).is_err());
        assert!(Word::parse("(u", &n).is_err());
        assert_eq!(Word::parse("v b u v^-1", &n).unwrap().mul(&Word::parse("v", &n).unwrap()).cyclically_reduced().length(), 3);
    }
}
