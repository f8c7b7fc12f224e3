//! Test-only reader for the reference tables in `tests/fixtures/tables.tex`.
//!
//! The tables are LaTeX `align*` blocks whose rows read
//! `E_{g,n}^{(p)}(u,v)&=...` or `P_{g,n}^{(p)}(y)&=...`, possibly continued on
//! lines starting with `&`. Right-hand sides are parsed by a small
//! recursive-descent parser into sparse polynomials in `u, v, y`.

#![allow(dead_code)]

use std::collections::BTreeMap;

use higgsmotive::algebra::{CoeffPoly, Monomial, UniPoly};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Sparse polynomial in `(u, v, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly(BTreeMap<[i64; 3], BigInt>);

impl Poly {
    fn constant(c: BigInt) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert([0, 0, 0], c);
        }
        Poly(m)
    }

    fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Poly(BTreeMap::from([(e, BigInt::one())]))
    }

    fn add(&self, o: &Self, sign: i64) -> Self {
        let mut m = self.0.clone();
        for (e, c) in &o.0 {
            *m.entry(*e).or_default() += c * sign;
        }
        m.retain(|_, c| !c.is_zero());
        Poly(m)
    }

    fn mul(&self, o: &Self) -> Self {
        let mut m: BTreeMap<[i64; 3], BigInt> = BTreeMap::new();
        for (a, x) in &self.0 {
            for (b, y) in &o.0 {
                *m.entry([a[0] + b[0], a[1] + b[1], a[2] + b[2]])
                    .or_default() += x * y;
            }
        }
        m.retain(|_, c| !c.is_zero());
        Poly(m)
    }

    fn pow(&self, k: u32) -> Self {
        (0..k).fold(Poly::constant(BigInt::one()), |acc, _| acc.mul(self))
    }

    pub fn to_uv(&self) -> CoeffPoly {
        CoeffPoly::from_terms(self.0.iter().map(|(e, c)| {
            assert_eq!(e[2], 0, "y in a (u, v) entry");
            (
                Monomial::doubled(2 * e[0] as i32, 2 * e[1] as i32),
                c.clone(),
            )
        }))
    }

    pub fn to_y(&self) -> UniPoly {
        UniPoly::from_pairs(self.0.iter().map(|(e, c)| {
            assert_eq!((e[0], e[1]), (0, 0), "u or v in a y entry");
            (e[2], c.clone())
        }))
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> BigInt {
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        std::str::from_utf8(&self.s[start..self.i])
            .unwrap()
            .parse()
            .unwrap()
    }

    fn expr(&mut self) -> Poly {
        let mut acc = Poly::default();
        let mut sign = if self.eat(b'-') { -1 } else { 1 };
        self.eat(b'+');
        loop {
            let t = self.term();
            acc = acc.add(&t, sign);
            if self.eat(b'+') {
                sign = 1;
            } else if self.eat(b'-') {
                sign = -1;
            } else {
                return acc;
            }
        }
    }

    fn term(&mut self) -> Poly {
        let mut acc = Poly::constant(BigInt::one());
        while let Some(c) = self.peek() {
            if !(c.is_ascii_digit() || c == b'(' || b"uvy".contains(&c)) {
                break;
            }
            let f = self.factor();
            acc = acc.mul(&f);
        }
        acc
    }

    fn factor(&mut self) -> Poly {
        let base = match self.peek().unwrap() {
            b'(' => {
                self.i += 1;
                let e = self.expr();
                assert!(self.eat(b')'), "unbalanced parenthesis at {}", self.i);
                e
            }
            b'u' | b'v' | b'y' => {
                let c = self.s[self.i];
                self.i += 1;
                Poly::var(b"uvy".iter().position(|&x| x == c).unwrap())
            }
            _ => Poly::constant(self.int()),
        };
        if self.eat(b'^') {
            let k: u32 = if self.eat(b'{') {
                let k = self.int();
                assert!(self.eat(b'}'));
                k.try_into().unwrap()
            } else {
                let d = self.s[self.i];
                self.i += 1;
                (d - b'0') as u32
            };
            base.pow(k)
        } else {
            base
        }
    }
}

/// Parses a right-hand side such as `(1+y)^2(y^{2}+1)`.
pub fn parse(src: &str) -> Poly {
    let cleaned: String = src
        .replace("\\\\", "")
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '&')
        .collect();
    let mut p = Parser {
        s: cleaned.as_bytes(),
        i: 0,
    };
    let out = p.expr();
    assert_eq!(p.i, p.s.len(), "trailing input in {cleaned:?}");
    out
}

#[derive(Clone, Debug)]
pub struct Entry {
    /// `'E'` or `'P'`.
    pub kind: char,
    pub g: u32,
    pub n: u32,
    pub p: u32,
    pub value: Poly,
}

impl Entry {
    pub fn label(&self) -> String {
        format!("{}_{{{},{}}}^{{({})}}", self.kind, self.g, self.n, self.p)
    }
}

fn header(h: &str) -> (char, u32, u32, u32) {
    let kind = h.chars().next().unwrap();
    let open = h.find('{').unwrap();
    let close = h.find('}').unwrap();
    let (g, n) = h[open + 1..close].split_once(',').unwrap();
    let p_start = h.find("^{(").unwrap() + 3;
    let p_end = h[p_start..].find(')').unwrap() + p_start;
    (
        kind,
        g.trim().parse().unwrap(),
        n.trim().parse().unwrap(),
        h[p_start..p_end].parse().unwrap(),
    )
}

pub fn load_tables() -> Vec<Entry> {
    let path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../core/tests/fixtures/tables.tex"
    );
    parse_tables(&std::fs::read_to_string(path).unwrap())
}

/// Every row of every `align*` block in `text`.
pub fn parse_tables(text: &str) -> Vec<Entry> {
    let mut rows: Vec<String> = Vec::new();
    for block in text.split("\\begin{align*}").skip(1) {
        let body = block.split("\\end{align*}").next().unwrap();
        for piece in body.split("\\\\") {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            if piece.starts_with('&') {
                rows.last_mut().unwrap().push_str(piece);
            } else {
                rows.push(piece.to_string());
            }
        }
    }
    rows.iter()
        .map(|row| {
            let (lhs, rhs) = row.split_once("&=").unwrap();
            let (kind, g, n, p) = header(lhs.trim());
            Entry {
                kind,
                g,
                n,
                p,
                value: parse(rhs),
            }
        })
        .collect()
}
