//! The explicit complex P_* for S_n in degrees 0..3: generators and boundaries.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::group_ring::GroupRingElem;

/// A free generator of P_*.
///
/// Variant order is the canonical basis order within each dimension.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PCell {
    Base,
    E(u8),
    C(u8),
    B(u8),
    D(u8, u8),
    C31(u8),
    C32(u8, u8),
    C33(u8, u8, u8),
    C34(u8, u8),
    C35(u8),
    C36(u8),
    C37(u8),
}

pub type PChain = Chain<PCell>;

impl PCell {
    pub fn dim(&self) -> usize {
        use PCell::*;
        match self {
            Base => 0,
            E(_) => 1,
            C(_) | B(_) | D(..) => 2,
            _ => 3,
        }
    }

    pub fn d(i: usize, j: usize) -> PCell {
        PCell::D(i as u8, j as u8)
    }

    /// Whether the generator exists in P_* for S_n.
    pub fn is_valid(&self, n: usize) -> bool {
        use PCell::*;
        let n = n as i64;
        let ok = |i: u8, hi: i64| (i as i64) >= 1 && (i as i64) <= hi;
        match *self {
            Base => true,
            E(i) | C(i) | C31(i) => ok(i, n - 1),
            B(i) | C35(i) | C36(i) => ok(i, n - 2),
            C37(i) => ok(i, n - 3),
            D(i, j) => ok(i, n - 1) && ok(j, n - 1) && j >= i + 2,
            C32(i, j) => ok(i, n - 1) && ok(j, n - 1) && (i as i64 - j as i64).abs() >= 2,
            C33(i, j, k) => ok(i, n - 1) && ok(j, n - 1) && ok(k, n - 1) && j > i + 1 && k > j + 1,
            C34(i, j) => {
                let (i, j) = (i as i64, j as i64);
                i >= 1 && i <= n - 2 && j >= 1 && j < n && (j < i - 1 || j > i + 2)
            }
        }
    }

    fn label(&self) -> (&'static str, Vec<u8>) {
        use PCell::*;
        match *self {
            Base => ("*", vec![]),
            E(i) => ("e", vec![i]),
            C(i) => ("c", vec![i]),
            B(i) => ("b", vec![i]),
            D(i, j) => ("d", vec![i, j]),
            C31(i) => ("c31", vec![i]),
            C32(i, j) => ("c32", vec![i, j]),
            C33(i, j, k) => ("c33", vec![i, j, k]),
            C34(i, j) => ("c34", vec![i, j]),
            C35(i) => ("c35", vec![i]),
            C36(i) => ("c36", vec![i]),
            C37(i) => ("c37", vec![i]),
        }
    }

    /// Subscripts of the cell label.
    pub fn indices(&self) -> Vec<u8> {
        self.label().1
    }

    /// Same class with new subscripts, if the class takes that many.
    pub fn with_indices(&self, idx: &[u8]) -> PCell {
        use PCell::*;
        match (*self, idx) {
            (Base, []) => Base,
            (E(_), [i]) => E(*i),
            (C(_), [i]) => C(*i),
            (B(_), [i]) => B(*i),
            (D(..), [i, j]) => D(*i, *j),
            (C31(_), [i]) => C31(*i),
            (C32(..), [i, j]) => C32(*i, *j),
            (C33(..), [i, j, k]) => C33(*i, *j, *k),
            (C34(..), [i, j]) => C34(*i, *j),
            (C35(_), [i]) => C35(*i),
            (C36(_), [i]) => C36(*i),
            (C37(_), [i]) => C37(*i),
            _ => panic!("wrong number of subscripts for {self}"),
        }
    }
}

impl fmt::Display for PCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, idx) = self.label();
        match idx.len() {
            0 => write!(f, "{name}"),
            1 if name.len() == 1 => write!(f, "{name}{}", idx[0]),
            _ => {
                let s: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
                write!(f, "{name}({})", s.join(","))
            }
        }
    }
}

impl fmt::Debug for PCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PCell {
    type Err = Error;

    /// Accepts `*`, `e1`, `c2`, `b1`, `d(1,3)`, `c32(3,1)`, `c33(1,3,5)`, ...
    fn from_str(s: &str) -> Result<PCell> {
        let t = s.trim();
        if t == "*" {
            return Ok(PCell::Base);
        }
        let bad = || Error::Parse(format!("bad cell {s:?}"));
        let (name, args) = match t.find('(') {
            Some(p) => {
                let inner = t[p + 1..].strip_suffix(')').ok_or_else(bad)?;
                (&t[..p], inner.split(',').map(|x| x.trim().parse::<u8>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?)
            }
            None => {
                let p = t.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
                let (name, digits) = if t.starts_with("c3") && t.len() > 3 { (&t[..3], &t[3..]) } else { (&t[..p], &t[p..]) };
                (name, vec![digits.parse::<u8>().map_err(|_| bad())?])
            }
        };
        let tmpl = match name {
            "e" => PCell::E(0),
            "c" => PCell::C(0),
            "b" => PCell::B(0),
            "d" => PCell::D(0, 0),
            "c31" => PCell::C31(0),
            "c32" => PCell::C32(0, 0),
            "c33" => PCell::C33(0, 0, 0),
            "c34" => PCell::C34(0, 0),
            "c35" => PCell::C35(0),
            "c36" => PCell::C36(0),
            "c37" => PCell::C37(0),
            _ => return Err(bad()),
        };
        if tmpl.indices().len() != args.len() {
            return Err(bad());
        }
        Ok(tmpl.with_indices(&args))
    }
}

/// All generators of P_dim for S_n in canonical order.
pub fn enumerate_p_cells(n: usize, dim: usize) -> Vec<PCell> {
    use PCell::*;
    let m = n.saturating_sub(1) as u8;
    let mut out = Vec::new();
    let r = |lo: u8, hi: i64| (lo as i64..=hi).map(|x| x as u8);
    match dim {
        0 => out.push(Base),
        1 => out.extend(r(1, m as i64).map(E)),
        2 => {
            out.extend(r(1, m as i64).map(C));
            out.extend(r(1, m as i64 - 1).map(B));
            for i in 1..=m {
                for j in i + 2..=m {
                    out.push(D(i, j));
                }
            }
        }
        3 => {
            out.extend(r(1, m as i64).map(C31));
            for i in 1..=m {
                for j in 1..=m {
                    if (i as i64 - j as i64).abs() >= 2 {
                        out.push(C32(i, j));
                    }
                }
            }
            for i in 1..=m {
                for j in i + 2..=m {
                    for k in j + 2..=m {
                        out.push(C33(i, j, k));
                    }
                }
            }
            for i in 1..m {
                for j in 1..=m {
                    let c = C34(i, j);
                    if c.is_valid(n) {
                        out.push(c);
                    }
                }
            }
            out.extend(r(1, m as i64 - 1).map(C35));
            out.extend(r(1, m as i64 - 1).map(C36));
            out.extend(r(1, m as i64 - 2).map(C37));
        }
        _ => {}
    }
    out
}

struct Builder {
    n: usize,
    chain: PChain,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder { n, chain: Chain::zero(n) }
    }

    fn g(&self, expr: &[(i64, &[usize])]) -> GroupRingElem {
        let mut a = GroupRingElem::zero(self.n);
        for (c, w) in expr {
            a = &a + &GroupRingElem::word(self.n, w).scale(*c);
        }
        a
    }

    fn add(&mut self, expr: &[(i64, &[usize])], cell: PCell) -> &mut Self {
        let a = self.g(expr);
        self.chain.add_term(cell, &a);
        self
    }

    fn done(&mut self) -> PChain {
        std::mem::replace(&mut self.chain, Chain::zero(self.n))
    }
}

/// The boundary of a generator of P_*.
pub fn boundary_p(cell: PCell, n: usize) -> Result<PChain> {
    use PCell::*;
    if !cell.is_valid(n) {
        return Err(Error::InvalidCell(format!("{cell} for n = {n}")));
    }
    let mut b = Builder::new(n);
    let out = match cell {
        Base => b.done(),
        E(i) => {
            let i = i as usize;
            b.add(&[(1, &[i]), (-1, &[])], Base).done()
        }
        C(i) => {
            let i = i as usize;
            b.add(&[(1, &[i]), (1, &[])], E(i as u8)).done()
        }
        B(i) => {
            let i = i as usize;
            let (x, y) = (i as u8, i as u8 + 1);
            b.add(&[(1, &[]), (-1, &[i]), (1, &[i + 1, i])], E(y))
                .add(&[(-1, &[]), (1, &[i + 1]), (-1, &[i, i + 1])], E(x))
                .done()
        }
        D(i, j) => {
            let (iu, ju) = (i as usize, j as usize);
            b.add(&[(1, &[ju]), (-1, &[])], E(i)).add(&[(-1, &[iu]), (1, &[])], E(j)).done()
        }
        C31(i) => b.add(&[(1, &[i as usize]), (-1, &[])], C(i)).done(),
        C32(i, j) => {
            let (iu, ju) = (i as usize, j as usize);
            b.add(&[(1, &[ju]), (-1, &[])], C(i));
            if i < j {
                b.add(&[(-1, &[iu]), (-1, &[])], D(i, j)).done()
            } else {
                b.add(&[(1, &[iu]), (1, &[])], D(j, i)).done()
            }
        }
        C33(i, j, k) => {
            let (iu, ju, ku) = (i as usize, j as usize, k as usize);
            b.add(&[(1, &[iu]), (-1, &[])], D(j, k))
                .add(&[(-1, &[ju]), (1, &[])], D(i, k))
                .add(&[(1, &[ku]), (-1, &[])], D(i, j))
                .done()
        }
        C34(i, j) => {
            let (iu, ju) = (i as usize, j as usize);
            // (1 - s_i + s_{i+1} s_i) and (1 - s_{i+1} + s_i s_{i+1})
            let p: &[(i64, &[usize])] = &[(1, &[]), (-1, &[iu]), (1, &[iu + 1, iu])];
            let q: &[(i64, &[usize])] = &[(1, &[]), (-1, &[iu + 1]), (1, &[iu, iu + 1])];
            b.add(&[(1, &[ju]), (-1, &[])], B(i));
            let pe = b.g(p);
            let qe = b.g(q);
            if i + 1 < j {
                b.chain.add_term(D(i + 1, j), &(-&pe));
                b.chain.add_term(D(i, j), &qe);
            } else {
                b.chain.add_term(D(j, i + 1), &pe);
                b.chain.add_term(D(j, i), &(-&qe));
            }
            b.done()
        }
        C35(i) => {
            let iu = i as usize;
            b.add(&[(1, &[iu + 1]), (1, &[])], B(i))
                .add(&[(-1, &[])], C(i + 1))
                .add(&[(1, &[iu, iu + 1])], C(i))
                .done()
        }
        C36(i) => {
            let iu = i as usize;
            // (s_{i+1} - 1)(s_i c_{i+1} + c_i)
            b.add(&[(1, &[iu, iu + 1]), (-1, &[])], B(i))
                .add(&[(1, &[iu + 1, iu]), (-1, &[iu])], C(i + 1))
                .add(&[(1, &[iu + 1]), (-1, &[])], C(i))
                .done()
        }
        C37(i) => {
            let iu = i as usize;
            let (a, bb, c) = (iu, iu + 1, iu + 2);
            b.add(
                &[(1, &[]), (-1, &[bb]), (1, &[a, bb]), (-1, &[c, a, bb]), (1, &[c, bb]), (1, &[bb, c, a, bb])],
                D(i, i + 2),
            )
            .add(&[(1, &[c]), (-1, &[]), (1, &[a, bb, c]), (-1, &[bb, c])], B(i))
            .add(&[(1, &[a]), (-1, &[]), (1, &[c, bb, a]), (-1, &[bb, a])], B(i + 1))
            .done()
        }
    };
    Ok(out)
}

/// Boundary of a chain in P_*.
pub fn boundary_chain(x: &PChain, n: usize) -> PChain {
    x.map(n, |c| boundary_p(*c, n).expect("chain holds only valid cells"))
}

fn balanced(chars: &[char], start: usize) -> Option<usize> {
    let mut depth = 0;
    for (k, &ch) in chars.iter().enumerate().skip(start) {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(k);
                }
            }
            _ => {}
        }
    }
    None
}

fn parse_term(n: usize, t: &str, src: &str) -> Result<(GroupRingElem, PCell)> {
    let bad = |m: String| Error::Parse(format!("{m} in {src:?}"));
    let chars: Vec<char> = t.chars().collect();
    let mut coef = GroupRingElem::one(n);
    let mut cell = None;
    let mut k = 0;
    while k < chars.len() {
        let ch = chars[k];
        if ch.is_whitespace() {
            k += 1;
            continue;
        }
        if cell.is_some() {
            return Err(bad(format!("text after the cell in term {t:?}")));
        }
        if ch == '(' {
            let end = balanced(&chars, k).ok_or_else(|| bad("unbalanced parenthesis".into()))?;
            let inner: String = chars[k + 1..end].iter().collect();
            coef = &coef * &GroupRingElem::parse(n, &inner)?;
            k = end + 1;
            continue;
        }
        let start = k;
        while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '*') {
            k += 1;
        }
        if k == start {
            return Err(bad(format!("unexpected {ch:?}")));
        }
        if k < chars.len() && chars[k] == '(' {
            k = balanced(&chars, k).ok_or_else(|| bad("unbalanced parenthesis".into()))? + 1;
        }
        let tok: String = chars[start..k].iter().collect();
        if tok.chars().all(|c| c.is_ascii_digit()) {
            coef = coef.scale(tok.parse().map_err(|_| bad(format!("bad integer {tok:?}")))?);
        } else if tok.len() > 1 && tok.starts_with('s') && tok[1..].chars().all(|c| c.is_ascii_digit()) {
            let i: usize = tok[1..].parse().map_err(|_| bad(format!("bad generator {tok:?}")))?;
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            coef = &coef * &GroupRingElem::s(n, i);
        } else {
            let c: PCell = tok.parse()?;
            if !c.is_valid(n) {
                return Err(Error::InvalidCell(format!("{c} for n = {n}")));
            }
            cell = Some(c);
        }
    }
    let cell = cell.ok_or_else(|| bad(format!("term {t:?} has no cell")))?;
    Ok((coef, cell))
}

/// Parses Z[S_n]-combinations such as `(1 + s3) c37(1) - c32(3,1) + s2 s1 c32(1,3) + 2 c34(1,4)`.
pub fn parse_pchain(n: usize, s: &str) -> Result<PChain> {
    let mut out = Chain::zero(n);
    if s.trim() == "0" {
        return Ok(out);
    }
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut sign = 1i64;
    let mut terms = Vec::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if (ch == '+' || ch == '-') && depth == 0 {
            if !cur.trim().is_empty() {
                terms.push((sign, std::mem::take(&mut cur)));
                sign = 1;
            }
            if ch == '-' {
                sign = -sign;
            }
        } else {
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() {
        terms.push((sign, cur));
    } else if terms.is_empty() || s.trim_end().ends_with(['+', '-']) {
        return Err(Error::Parse(format!("empty chain expression {s:?}")));
    }
    for (sign, t) in terms {
        let (a, c) = parse_term(n, &t, s)?;
        out.add_term(c, &a.scale(sign));
    }
    Ok(out)
}
