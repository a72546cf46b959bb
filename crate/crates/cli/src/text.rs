//! The text grammar shared by arguments and files.
//!
//! ```text
//! partition        [3,1]   []
//! double partition ([3,1],[2])
//! padded label     A:n=4:[1]   BC:n=5:([1],[2,1])   D:n=4:{[1],[3]}   D:n=4:{[2],+}
//! class            A: [2,1]   BC: ([2],[1])   D: ([2],[1])  or split ([2,2],[])+
//! window           2..5
//! ```
//!
//! Whitespace is ignored. Rendering is the `Display` of the parsed value,
//! which is the canonical form: D pairs are sorted and trailing zero parts
//! dropped.

use weylrep::weyl::{ClassLabel, SignedCycleType};
use weylrep::{DLabel, DoublePartition, Family, Label, PaddedLabel, Partition, Sign};

pub type ParseResult<T> = Result<T, String>;

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(s: &str) -> Self {
        Cursor {
            chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> ParseResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(match self.peek() {
                Some(got) => format!("expected '{c}' at position {}, found '{got}'", self.pos),
                None => format!("expected '{c}' at end of input"),
            })
        }
    }

    fn number(&mut self) -> ParseResult<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(format!("expected a number at position {start}"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|e| format!("{digits}: {e}"))
    }

    fn partition(&mut self) -> ParseResult<Partition> {
        self.expect('[')?;
        let mut parts = Vec::new();
        if !self.eat(']') {
            loop {
                parts.push(self.number()?);
                if self.eat(']') {
                    break;
                }
                self.expect(',')?;
            }
        }
        Partition::new(parts).map_err(|e| e.to_string())
    }

    fn double(&mut self) -> ParseResult<DoublePartition> {
        self.expect('(')?;
        let pos = self.partition()?;
        self.expect(',')?;
        let neg = self.partition()?;
        self.expect(')')?;
        Ok(DoublePartition::new(pos, neg))
    }

    fn sign(&mut self) -> Option<Sign> {
        if self.eat('+') {
            Some(Sign::Plus)
        } else if self.eat('-') {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    fn d_label(&mut self) -> ParseResult<DLabel> {
        self.expect('{')?;
        let a = self.partition()?;
        self.expect(',')?;
        let label = match self.sign() {
            Some(s) => DLabel::Split(a, s),
            None => {
                let b = self.partition()?;
                DLabel::pair(a, b).map_err(|e| e.to_string())?
            }
        };
        self.expect('}')?;
        Ok(label)
    }

    fn finish<T>(&self, value: T) -> ParseResult<T> {
        match self.peek() {
            None => Ok(value),
            Some(c) => Err(format!("unexpected '{c}' at position {}", self.pos)),
        }
    }
}

pub fn parse_family(s: &str) -> ParseResult<Family> {
    match s.trim().to_ascii_uppercase().as_str() {
        "A" | "S" => Ok(Family::A),
        "B" | "C" | "BC" => Ok(Family::BC),
        "D" => Ok(Family::D),
        other => Err(format!("unknown family '{other}' (expected A, BC or D)")),
    }
}

pub fn parse_partition(s: &str) -> ParseResult<Partition> {
    let mut c = Cursor::new(s);
    let p = c.partition()?;
    c.finish(p)
}

pub fn parse_double(s: &str) -> ParseResult<DoublePartition> {
    let mut c = Cursor::new(s);
    let d = c.double()?;
    c.finish(d)
}

/// A label body in a family's own notation: a partition for A, a double
/// partition for BC, `{α,β}` or `{α,±}` for D.
pub fn parse_body(family: Family, s: &str) -> ParseResult<Label> {
    let mut c = Cursor::new(s);
    let label = match family {
        Family::A => Label::A(c.partition()?),
        Family::BC => Label::BC(c.double()?),
        Family::D => Label::D(c.d_label()?),
    };
    c.finish(label)
}

/// `FAMILY:n=N:BODY`, validated at rank `N`.
pub fn parse_padded(s: &str) -> ParseResult<PaddedLabel> {
    let mut fields = s.splitn(3, ':');
    let (Some(family), Some(rank), Some(body)) = (fields.next(), fields.next(), fields.next())
    else {
        return Err(format!("expected FAMILY:n=N:BODY, got '{s}'"));
    };
    let family = parse_family(family)?;
    let n = rank
        .trim()
        .strip_prefix("n=")
        .ok_or_else(|| format!("expected n=N, got '{rank}'"))?
        .trim()
        .parse()
        .map_err(|e| format!("rank '{rank}': {e}"))?;
    PaddedLabel::new(parse_body(family, body)?, n).map_err(|e| e.to_string())
}

/// A conjugacy class of `W_n` written as its cycle type; split `D_n` classes
/// carry a trailing `+` or `-`.
pub fn parse_class(family: Family, s: &str) -> ParseResult<ClassLabel> {
    let mut c = Cursor::new(s);
    let label = match family {
        Family::A => ClassLabel::A(c.partition()?),
        Family::BC => ClassLabel::BC(SignedCycleType::from(c.double()?)),
        Family::D => {
            let t = SignedCycleType::from(c.double()?);
            let split = c.sign();
            if split.is_some() != weylrep::weyl::is_split_type(&t) {
                return Err(format!(
                    "'{s}': the sign marker is required exactly on split D_n classes"
                ));
            }
            ClassLabel::D(t, split)
        }
    };
    c.finish(label)
}

/// An inclusive window `lo..hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub lo: usize,
    pub hi: usize,
}

impl std::fmt::Display for Window {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

pub fn parse_window(s: &str) -> ParseResult<Window> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected lo..hi, got '{s}'"))?;
    let parse = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|e| format!("window bound '{x}': {e}"))
    };
    let w = Window {
        lo: parse(lo)?,
        hi: parse(hi)?,
    };
    if w.lo > w.hi {
        return Err(format!("empty window {w}"));
    }
    Ok(w)
}
