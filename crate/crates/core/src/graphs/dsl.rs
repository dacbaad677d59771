//! Edge-list text format: `r=3; 1-2:c1; 2-3:c2;`. Whitespace is ignored.

use super::graph::{ColoredGraph, Edge};
use crate::error::{Error, Result};

struct Tokens {
    chars: Vec<(char, usize, usize)>,
    pos: usize,
    end: (usize, usize),
}

impl Tokens {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (line, col) = self.chars.get(self.pos).map_or(self.end, |&(_, l, c)| (l, c));
        Err(Error::Syntax { line, col, msg: msg.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|t| t.0)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            match self.peek() {
                Some(x) => self.err(format!("expected '{c}', found '{x}'")),
                None => self.err(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let s: String = self.chars[start..self.pos].iter().map(|t| t.0).collect();
        s.parse().or_else(|_| {
            self.pos = start;
            self.err("number too large")
        })
    }
}

/// Parses and admissibility-checks a graph for format `d`.
pub fn parse_graph(text: &str, d: &[usize]) -> Result<ColoredGraph> {
    let mut chars = Vec::new();
    let (mut line, mut col) = (1, 1);
    for c in text.chars() {
        if !c.is_whitespace() {
            chars.push((c, line, col));
        }
        if c == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    let mut t = Tokens { chars, pos: 0, end: (line, col) };
    t.expect('r')?;
    t.expect('=')?;
    let r = t.number()?;
    if r == 0 || r > u8::MAX as usize {
        t.pos -= 1;
        return t.err(format!("vertex count {r} out of range"));
    }
    t.expect(';')?;
    let mut edges = Vec::new();
    while t.peek().is_some() {
        if t.peek() == Some(';') {
            t.pos += 1;
            continue;
        }
        let at = t.pos;
        let u = t.number()?;
        t.expect('-')?;
        let v = t.number()?;
        t.expect(':')?;
        t.expect('c')?;
        let cpos = t.pos;
        let j = t.number()?;
        for (x, p) in [(u, at), (v, at)] {
            if x == 0 || x > r {
                t.pos = p;
                return t.err(format!("vertex {x} outside 1..={r}"));
            }
        }
        if j == 0 || j > d.len() {
            t.pos = cpos;
            return t.err(format!("color c{j} but the format has {} factors", d.len()));
        }
        edges.push(Edge { u: u as u8, v: v as u8, color: j - 1 });
        t.expect(';')?;
    }
    ColoredGraph::new(r, d.to_vec(), edges)
}

pub fn to_dsl(g: &ColoredGraph) -> String {
    let mut s = format!("r={};", g.r);
    for e in &g.edges {
        s.push_str(&format!(" {}-{}:c{};", e.u, e.v, e.color + 1));
    }
    s
}
