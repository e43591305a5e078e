//! Free-group words, group presentations, the presentation DSL, and
//! conservative Tietze simplification.
//!
//! Words are stored as syllable lists `(generator, exponent)` and kept
//! freely reduced: adjacent syllables have distinct generators and no
//! exponent is zero.  Generators are referenced by index; names exist only
//! for I/O.
//!
//! DSL: `<g1,g2,... | w1, w2, ...>`.  Words are juxtaposed letters with
//! optional `^k` exponents; an uppercase letter is the inverse of the
//! corresponding lowercase single-letter generator; `a^-1` is also
//! accepted; whitespace is insignificant; `#` starts a line comment.

use std::fmt;
use thiserror::Error;

/// A freely reduced word in a free group.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word {
    syllables: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(i: usize) -> Self {
        Word { syllables: vec![(i, 1)] }
    }

    pub fn power(i: usize, e: i64) -> Self {
        if e == 0 {
            Word::identity()
        } else {
            Word { syllables: vec![(i, e)] }
        }
    }

    /// Build from raw syllables, freely reducing.
    pub fn from_syllables(syls: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut w = Word::identity();
        for (g, e) in syls {
            w.push_syllable(g, e);
        }
        w
    }

    fn push_syllable(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some((lg, le)) if *lg == g => {
                *le += e;
                if *le == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((g, e)),
        }
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, counting exponent multiplicities.
    pub fn letter_len(&self) -> usize {
        self.syllables.iter().map(|(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &other.syllables {
            w.push_syllable(g, e);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word { syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn conjugate(&self, by: &Word) -> Word {
        by.multiply(self).multiply(&by.inverse())
    }

    /// Cyclically reduced representative (conjugate of `self`).
    pub fn cyclically_reduced(&self) -> Word {
        let mut s = self.syllables.clone();
        loop {
            if s.len() < 2 {
                break;
            }
            let (fg, fe) = s[0];
            let (lg, le) = *s.last().unwrap();
            if fg != lg {
                break;
            }
            let sum = fe + le;
            s.pop();
            if sum == 0 {
                s.remove(0);
            } else {
                s[0].1 = sum;
                break;
            }
        }
        Word { syllables: s }
    }

    /// Exponent-sum vector over `ngens` generators.
    pub fn exponent_sums(&self, ngens: usize) -> Vec<i64> {
        let mut v = vec![0; ngens];
        for &(g, e) in &self.syllables {
            v[g] += e;
        }
        v
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.syllables.iter().map(|&(g, _)| g).max()
    }

    /// Occurrences of generator `g`: list of (syllable index, exponent).
    fn occurrences(&self, g: usize) -> Vec<(usize, i64)> {
        self.syllables
            .iter()
            .enumerate()
            .filter(|(_, &(gg, _))| gg == g)
            .map(|(i, &(_, e))| (i, e))
            .collect()
    }

    /// Substitute generator `g` by the word `w`.
    pub fn substitute(&self, g: usize, w: &Word) -> Word {
        let mut out = Word::identity();
        for &(gg, e) in &self.syllables {
            if gg == g {
                let piece = if e >= 0 { w.clone() } else { w.inverse() };
                for _ in 0..e.unsigned_abs() {
                    out = out.multiply(&piece);
                }
            } else {
                out.push_syllable(gg, e);
            }
        }
        out
    }

    /// Apply a generator renumbering; entries must cover all used indices.
    pub fn renumber(&self, map: &[Option<usize>]) -> Word {
        Word {
            syllables: self
                .syllables
                .iter()
                .map(|&(g, e)| (map[g].expect("renumbering must cover all generators"), e))
                .collect(),
        }
    }
}

/// A finite group presentation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupPresentation {
    generator_names: Vec<String>,
    relators: Vec<Word>,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("undeclared generator '{0}'")]
    UndeclaredGenerator(String),
    #[error("empty generator list")]
    EmptyGeneratorList,
}

impl GroupPresentation {
    /// Relators are cyclically reduced on construction; trivial relators
    /// are dropped.
    pub fn new(generator_names: Vec<String>, relators: Vec<Word>) -> Self {
        let n = generator_names.len();
        let relators: Vec<Word> = relators
            .into_iter()
            .map(|r| r.cyclically_reduced())
            .filter(|r| !r.is_identity())
            .collect();
        for r in &relators {
            if let Some(g) = r.max_generator() {
                assert!(g < n, "relator references generator {} out of {}", g, n);
            }
        }
        GroupPresentation { generator_names, relators }
    }

    pub fn num_generators(&self) -> usize {
        self.generator_names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Free group of rank `n` with generators `a, b, c, ...`.
    pub fn free(n: usize) -> Self {
        let names = (0..n).map(|i| default_gen_name(i, n)).collect();
        GroupPresentation { generator_names: names, relators: Vec::new() }
    }

    /// Disjoint union of generators and relators (free product).
    pub fn free_product(&self, other: &Self) -> Self {
        let mut names = self.generator_names.clone();
        let shift = names.len();
        for (i, n) in other.generator_names.iter().enumerate() {
            let mut name = n.clone();
            if names.contains(&name) {
                name = format!("{}_{}", n, i + shift);
            }
            names.push(name);
        }
        let map: Vec<Option<usize>> = (0..other.num_generators()).map(|i| Some(i + shift)).collect();
        let mut relators = self.relators.clone();
        relators.extend(other.relators.iter().map(|r| r.renumber(&map)));
        GroupPresentation::new(names, relators)
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse_presentation(text)
    }

    /// Render in the DSL; `parse(render(p)) == p`.
    pub fn render(&self) -> String {
        let words: Vec<String> = self.relators.iter().map(|w| self.render_word(w)).collect();
        format!("<{} | {}>", self.generator_names.join(","), words.join(", "))
    }

    pub fn render_word(&self, w: &Word) -> String {
        let mut out = String::new();
        for (i, &(g, e)) in w.syllables().iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let name = &self.generator_names[g];
            let single_lower = name.len() == 1 && name.chars().next().unwrap().is_ascii_lowercase();
            if e == 1 {
                out.push_str(name);
            } else if e == -1 && single_lower {
                out.push_str(&name.to_ascii_uppercase());
            } else if e > 0 {
                out.push_str(&format!("{}^{}", name, e));
            } else if single_lower {
                out.push_str(&format!("{}^{}", name.to_ascii_uppercase(), -e));
            } else {
                out.push_str(&format!("{}^{}", name, e));
            }
        }
        out
    }
}

fn default_gen_name(i: usize, n: usize) -> String {
    if n <= 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("g{}", i + 1)
    }
}

/// Result of Tietze simplification: the simplified presentation together
/// with the image of each original generator as a word in the surviving
/// generators (indices refer to the new presentation).
#[derive(Clone, Debug)]
pub struct TietzeResult {
    pub presentation: GroupPresentation,
    pub generator_images: Vec<Word>,
}

/// Conservative Tietze simplification: removes trivial relators, performs
/// cyclic reduction, and eliminates a generator when some relator contains
/// it in exactly one syllable with exponent ±1 and the substitution does
/// not enlarge any other relator.  Deterministic fixpoint iteration; the
/// result presents an isomorphic group.
pub fn tietze_simplify(p: &GroupPresentation) -> TietzeResult {
    let orig_n = p.num_generators();
    let mut images: Vec<Word> = (0..orig_n).map(Word::generator).collect();
    let mut names = p.generator_names().to_vec();
    let mut relators: Vec<Word> = p.relators().to_vec();

    'outer: loop {
        relators = relators
            .iter()
            .map(|r| r.cyclically_reduced())
            .filter(|r| !r.is_identity())
            .collect();
        for (ri, r) in relators.iter().enumerate() {
            for g in 0..names.len() {
                let occ = r.occurrences(g);
                if occ.len() != 1 || occ[0].1.abs() != 1 {
                    continue;
                }
                // r = u g^±1 v = 1  =>  g^±1 = u^-1 v^-1 = (v u)^-1.
                let (pos, e) = occ[0];
                let u = Word::from_syllables(r.syllables()[..pos].iter().cloned());
                let v = Word::from_syllables(r.syllables()[pos + 1..].iter().cloned());
                let vu = v.multiply(&u);
                let replacement = if e == 1 { vu.inverse() } else { vu };
                debug_assert!(replacement.occurrences(g).is_empty());
                // The substitution must not enlarge any other relator.
                let mut grown = false;
                let mut new_relators = Vec::with_capacity(relators.len() - 1);
                for (rj, rr) in relators.iter().enumerate() {
                    if rj == ri {
                        continue;
                    }
                    let sub = rr.substitute(g, &replacement).cyclically_reduced();
                    if sub.letter_len() > rr.letter_len() {
                        grown = true;
                        break;
                    }
                    new_relators.push(sub);
                }
                if grown {
                    continue;
                }
                let map: Vec<Option<usize>> = (0..names.len())
                    .map(|i| {
                        if i == g {
                            None
                        } else if i < g {
                            Some(i)
                        } else {
                            Some(i - 1)
                        }
                    })
                    .collect();
                names.remove(g);
                relators = new_relators.into_iter().map(|r| r.renumber(&map)).collect();
                for im in images.iter_mut() {
                    // After substitution the image no longer mentions g, so
                    // the partial renumbering is total on it.
                    *im = im.substitute(g, &replacement).renumber(&map);
                }
                continue 'outer;
            }
        }
        break;
    }

    TietzeResult { presentation: GroupPresentation::new(names, relators), generator_images: images }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax { line: self.line, col: self.col, msg: msg.into() }
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.src.get(self.pos).copied();
        if let Some(c) = c {
            self.pos += 1;
            if c == b'\n' {
                self.line += 1;
                self.col = 1;
            } else {
                self.col += 1;
            }
        }
        c
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_whitespace() => {
                    self.bump();
                }
                Some(b'#') => {
                    while let Some(c) = self.bump() {
                        if c == b'\n' {
                            break;
                        }
                    }
                }
                _ => break,
            }
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        self.skip_ws();
        match self.bump() {
            Some(x) if x == c => Ok(()),
            Some(x) => Err(self.err(format!("expected '{}', found '{}'", c as char, x as char))),
            None => Err(self.err(format!("expected '{}', found end of input", c as char))),
        }
    }

    fn read_ident(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == b'_' {
                s.push(c as char);
                self.bump();
            } else {
                break;
            }
        }
        s
    }

    fn read_int(&mut self) -> Result<i64, ParseError> {
        let mut s = String::new();
        if self.peek() == Some(b'-') || self.peek() == Some(b'+') {
            s.push(self.bump().unwrap() as char);
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            s.push(self.bump().unwrap() as char);
        }
        s.parse().map_err(|_| self.err("expected integer"))
    }
}

fn parse_presentation(text: &str) -> Result<GroupPresentation, ParseError> {
    let mut lx = Lexer::new(text);
    lx.expect(b'<')?;
    let mut names: Vec<String> = Vec::new();
    loop {
        lx.skip_ws();
        match lx.peek() {
            Some(b'|') => break,
            Some(b',') => {
                lx.bump();
            }
            Some(c) if (c as char).is_ascii_alphabetic() => {
                let name = lx.read_ident();
                if names.contains(&name) {
                    return Err(lx.err(format!("duplicate generator '{}'", name)));
                }
                names.push(name);
            }
            Some(c) => return Err(lx.err(format!("unexpected '{}' in generator list", c as char))),
            None => return Err(lx.err("unterminated presentation")),
        }
    }
    if names.is_empty() {
        return Err(ParseError::EmptyGeneratorList);
    }
    lx.expect(b'|')?;
    let mut relators = Vec::new();
    let mut current: Vec<(usize, i64)> = Vec::new();
    loop {
        lx.skip_ws();
        match lx.peek() {
            Some(b'>') => {
                lx.bump();
                if !current.is_empty() {
                    relators.push(Word::from_syllables(current.drain(..)));
                }
                break;
            }
            Some(b',') => {
                lx.bump();
                if current.is_empty() {
                    return Err(lx.err("empty relator"));
                }
                relators.push(Word::from_syllables(current.drain(..)));
            }
            Some(c) if (c as char).is_ascii_alphabetic() => {
                let (g, mut e) = read_letter(&mut lx, &names)?;
                lx.skip_ws();
                if lx.peek() == Some(b'^') {
                    lx.bump();
                    lx.skip_ws();
                    e *= lx.read_int()?;
                }
                if e != 0 {
                    current.push((g, e));
                }
            }
            Some(c) => return Err(lx.err(format!("unexpected '{}' in relator", c as char))),
            None => return Err(lx.err("unterminated presentation")),
        }
    }
    lx.skip_ws();
    if lx.peek().is_some() {
        return Err(lx.err("trailing input after '>'"));
    }
    Ok(GroupPresentation::new(names, relators))
}

/// Read one letter of a word: the longest declared name match, or an
/// uppercase letter standing for the inverse of a single-letter lowercase
/// generator.
fn read_letter(lx: &mut Lexer, names: &[String]) -> Result<(usize, i64), ParseError> {
    let rest = &lx.src[lx.pos..];
    let mut best: Option<(usize, usize)> = None; // (name index, byte length)
    for (i, n) in names.iter().enumerate() {
        if rest.starts_with(n.as_bytes()) && best.map_or(true, |(_, l)| n.len() > l) {
            best = Some((i, n.len()));
        }
    }
    if let Some((i, l)) = best {
        for _ in 0..l {
            lx.bump();
        }
        return Ok((i, 1));
    }
    let c = lx.peek().unwrap() as char;
    if c.is_ascii_uppercase() {
        let lower = c.to_ascii_lowercase().to_string();
        if let Some(i) = names.iter().position(|n| *n == lower) {
            lx.bump();
            return Ok((i, -1));
        }
    }
    let name = {
        let mut probe = Lexer { src: lx.src, pos: lx.pos, line: lx.line, col: lx.col };
        probe.read_ident()
    };
    Err(ParseError::UndeclaredGenerator(if name.is_empty() { c.to_string() } else { name }))
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p: &GroupPresentation, s: &str) -> Word {
        let text = format!("<{} | {}>", p.generator_names().join(","), s);
        GroupPresentation::parse(&text).unwrap().relators()[0].clone()
    }

    #[test]
    fn parse_commutator() {
        let p = GroupPresentation::parse("<a,b | a b A B>").unwrap();
        assert_eq!(p.num_generators(), 2);
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0].syllables(), &[(0, 1), (1, 1), (0, -1), (1, -1)]);
    }

    #[test]
    fn parse_free_rank_one() {
        let p = GroupPresentation::parse("<x | >").unwrap();
        assert_eq!(p.num_generators(), 1);
        assert!(p.relators().is_empty());
    }

    #[test]
    fn parse_exponents_and_comments() {
        let p = GroupPresentation::parse("<a,b | a^2 b^-3, # comment\n A^2>").unwrap();
        assert_eq!(p.relators()[0].syllables(), &[(0, 2), (1, -3)]);
        assert_eq!(p.relators()[1].syllables(), &[(0, -2)]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(GroupPresentation::parse("< | a>"), Err(ParseError::EmptyGeneratorList)));
        assert!(matches!(GroupPresentation::parse("<a | b>"), Err(ParseError::UndeclaredGenerator(_))));
        assert!(matches!(GroupPresentation::parse("<a | a"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn multiply_cancellation() {
        let x = Word::generator(0);
        assert!(x.multiply(&x.inverse()).is_identity());
        let p = GroupPresentation::free(3);
        let u = w(&p, "a b");
        let v = w(&p, "B c");
        assert_eq!(u.multiply(&v), w(&p, "a c"));
        assert_eq!(w(&p, "a^2").multiply(&w(&p, "a^3")), w(&p, "a^5"));
    }

    #[test]
    fn roundtrip_render_parse() {
        let texts = ["<a,b | a b A B>", "<x | >", "<a,b,c | a^2 b^-3 c, b c B C>"];
        for t in texts {
            let p = GroupPresentation::parse(t).unwrap();
            let q = GroupPresentation::parse(&p.render()).unwrap();
            assert_eq!(p, q);
        }
    }

    #[test]
    fn tietze_kills_trivializing_relator() {
        let p = GroupPresentation::parse("<a,b | b>").unwrap();
        let r = tietze_simplify(&p);
        assert_eq!(r.presentation.num_generators(), 1);
        assert!(r.presentation.relators().is_empty());
        assert!(r.generator_images[1].is_identity());
    }

    #[test]
    fn tietze_substitutes_equal_generator() {
        let p = GroupPresentation::parse("<a,b | a B>").unwrap();
        let r = tietze_simplify(&p);
        assert_eq!(r.presentation.num_generators(), 1);
        assert!(r.presentation.relators().is_empty());
        assert_eq!(r.generator_images[1], Word::generator(0));
    }

    #[test]
    fn tietze_fixpoint_unchanged() {
        let p = GroupPresentation::parse("<a,b | a b a B A B>").unwrap();
        let r = tietze_simplify(&p);
        assert_eq!(r.presentation, p);
    }

    #[test]
    fn cyclic_reduction() {
        let p = GroupPresentation::free(2);
        assert_eq!(w(&p, "a b A").cyclically_reduced(), w(&p, "b"));
        assert_eq!(w(&p, "a b a").cyclically_reduced(), w(&p, "a^2 b"));
    }
}
