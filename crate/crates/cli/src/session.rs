//! Definition files.
//!
//! ```text
//! # comment
//! ring R = QQ[x,y,z]
//! ring S = GF(32003)[a,b,c,d] grading (1,0),(1,0),(0,1),(0,1)
//! ideal I = x*y, y*z            # in the most recent ring
//! point X = [1:0:0] mult 2      # repeated records accumulate
//! line L = x0, x1
//! p1p1 G = [1:0]x[0:1] mult 1
//! assert I = lci, unmixed       # caller-asserted tags on an `ideal`
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use symbpow::ideals::{Certainty, Ideal};
use symbpow::polyring::{parse_generators, parse_polynomial, CoefficientField, DegreeVector, FieldScalar, GradedRing, Polynomial};
use symbpow::schemes::{fat_points_ideal, lines_p3_ideal, PointConfigP1P1, PointP1P1};
use symbpow::{Error, Result};

#[derive(Clone, Debug)]
pub enum Entry {
    Ideal(Ideal),
    Points(Ideal),
    Lines(Ideal),
    P1P1(PointConfigP1P1),
}

impl Entry {
    pub fn ideal(&self) -> &Ideal {
        match self {
            Entry::Ideal(i) | Entry::Points(i) | Entry::Lines(i) => i,
            Entry::P1P1(c) => c.ideal(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Entry::Ideal(_) => "ideal",
            Entry::Points(_) => "point",
            Entry::Lines(_) => "line",
            Entry::P1P1(_) => "p1p1",
        }
    }
}

enum Pending {
    Points(GradedRing, Vec<(Vec<FieldScalar>, u32)>),
    Lines(GradedRing, Vec<(Polynomial, Polynomial)>),
    P1P1(CoefficientField, Vec<PointP1P1>),
}

/// Named rings and ideal-like objects, in definition order.
#[derive(Clone, Debug, Default)]
pub struct Session {
    rings: BTreeMap<String, GradedRing>,
    entries: Vec<(String, Entry)>,
}

impl Session {
    pub fn load(path: &Path) -> Result<Session> {
        Session::parse(&std::fs::read_to_string(path)?)
    }

    pub fn parse(text: &str) -> Result<Session> {
        let mut rings: BTreeMap<String, GradedRing> = BTreeMap::new();
        let mut current: Option<GradedRing> = None;
        let mut ideals: Vec<(String, Ideal)> = Vec::new();
        let mut pending: Vec<(String, Pending)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |e: Error| Error::InvalidArgument(format!("line {}: {e}", lineno + 1));
            let (head, body) = line
                .split_once('=')
                .ok_or_else(|| at(Error::InvalidArgument("expected `<kind> <name> = ...`".into())))?;
            let mut words = head.split_whitespace();
            let (Some(kind), Some(name), None) = (words.next(), words.next(), words.next()) else {
                return Err(at(Error::InvalidArgument("expected `<kind> <name> = ...`".into())));
            };
            let name = name.to_string();
            let body = body.trim();
            match kind {
                "ring" => {
                    if rings.contains_key(&name) {
                        return Err(at(Error::InvalidArgument(format!("ring {name} defined twice"))));
                    }
                    let r = parse_ring(body).map_err(at)?;
                    rings.insert(name, r.clone());
                    current = Some(r);
                }
                "ideal" => {
                    let ring = current.as_ref().ok_or_else(|| at(no_ring()))?;
                    if ideals.iter().any(|(n, _)| *n == name) {
                        return Err(at(Error::InvalidArgument(format!("ideal {name} defined twice"))));
                    }
                    let mut i = Ideal::new(ring, parse_generators(body, ring).map_err(at)?).map_err(at)?;
                    i.tags_mut().provenance = format!("ideal {name}");
                    ideals.push((name, i));
                }
                "point" => {
                    let ring = current.as_ref().ok_or_else(|| at(no_ring()))?;
                    let (coords, rest) = bracket(body).map_err(at)?;
                    let coords = coordinates(ring, coords).map_err(at)?;
                    let mult = multiplicity(rest).map_err(at)?;
                    match slot(&mut pending, &name, || Pending::Points(ring.clone(), Vec::new())) {
                        Pending::Points(r, pts) if r == ring => pts.push((coords, mult)),
                        _ => return Err(at(mixed(&name))),
                    }
                }
                "line" => {
                    let ring = current.as_ref().ok_or_else(|| at(no_ring()))?;
                    let forms = parse_generators(body, ring).map_err(at)?;
                    let [a, b]: [Polynomial; 2] = forms
                        .try_into()
                        .map_err(|_| at(Error::InvalidArgument("a line needs exactly two forms".into())))?;
                    match slot(&mut pending, &name, || Pending::Lines(ring.clone(), Vec::new())) {
                        Pending::Lines(r, ls) if r == ring => ls.push((a, b)),
                        _ => return Err(at(mixed(&name))),
                    }
                }
                "p1p1" => {
                    let field = current.as_ref().map_or(CoefficientField::Rational, |r| r.field());
                    let helper = GradedRing::standard(&["t"], field)?;
                    let (a, rest) = bracket(body).map_err(at)?;
                    let rest = rest.trim_start().strip_prefix('x').ok_or_else(|| {
                        at(Error::InvalidArgument("expected `[a0:a1]x[b0:b1]`".into()))
                    })?;
                    let (b, rest) = bracket(rest).map_err(at)?;
                    let a = pair(coordinates(&helper, a).map_err(at)?).map_err(at)?;
                    let b = pair(coordinates(&helper, b).map_err(at)?).map_err(at)?;
                    let p = PointP1P1::new(a, b, multiplicity(rest).map_err(at)?).map_err(at)?;
                    match slot(&mut pending, &name, || Pending::P1P1(field, Vec::new())) {
                        Pending::P1P1(f, ps) if *f == field => ps.push(p),
                        _ => return Err(at(mixed(&name))),
                    }
                }
                "assert" => {
                    let (_, ideal) = ideals
                        .iter_mut()
                        .find(|(n, _)| *n == name)
                        .ok_or_else(|| at(Error::InvalidArgument(format!("assert before `ideal {name}`"))))?;
                    let tags = ideal.tags_mut();
                    for word in body.split(',').map(str::trim) {
                        match word {
                            "lci" => tags.lci = Certainty::Asserted,
                            "unmixed" => tags.unmixed = Certainty::Asserted,
                            "radical" => tags.radical = Certainty::Asserted,
                            w => return Err(at(Error::InvalidArgument(format!("unknown tag `{w}`")))),
                        }
                    }
                }
                other => return Err(at(Error::InvalidArgument(format!("unknown record `{other}`")))),
            }
        }
        let mut entries: Vec<(String, Entry)> = ideals.into_iter().map(|(n, i)| (n, Entry::Ideal(i))).collect();
        for (name, p) in pending {
            if entries.iter().any(|(n, _)| *n == name) {
                return Err(Error::InvalidArgument(format!("name {name} is used by two objects")));
            }
            let entry = match p {
                Pending::Points(ring, pts) => Entry::Points(fat_points_ideal(&ring, &pts)?),
                Pending::Lines(ring, ls) => Entry::Lines(lines_p3_ideal(&ring, &ls)?),
                Pending::P1P1(field, ps) => Entry::P1P1(PointConfigP1P1::new(field, ps)?),
            };
            entries.push((name, entry));
        }
        Ok(Session { rings, entries })
    }

    pub fn ring(&self, name: &str) -> Option<&GradedRing> {
        self.rings.get(name)
    }

    pub fn entries(&self) -> &[(String, Entry)] {
        &self.entries
    }

    /// The entry called `name`, or the only entry when `name` is `None`.
    pub fn get(&self, name: Option<&str>) -> Result<&Entry> {
        match name {
            Some(n) => self
                .entries
                .iter()
                .find(|(k, _)| k == n)
                .map(|(_, e)| e)
                .ok_or_else(|| Error::InvalidArgument(format!("no object named {n}"))),
            None => match self.entries.as_slice() {
                [(_, e)] => Ok(e),
                [] => Err(Error::InvalidArgument("the definition file defines no ideal".into())),
                _ => Err(Error::InvalidArgument(format!(
                    "several objects defined ({}); pick one with --name",
                    self.entries.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>().join(", ")
                ))),
            },
        }
    }

    pub fn ideal(&self, name: Option<&str>) -> Result<&Ideal> {
        Ok(self.get(name)?.ideal())
    }
}

fn no_ring() -> Error {
    Error::InvalidArgument("no ring declared yet".into())
}

fn mixed(name: &str) -> Error {
    Error::InvalidArgument(format!("{name} mixes record kinds or rings"))
}

fn slot<'a>(pending: &'a mut Vec<(String, Pending)>, name: &str, make: impl FnOnce() -> Pending) -> &'a mut Pending {
    let k = match pending.iter().position(|(n, _)| n == name) {
        Some(k) => k,
        None => {
            pending.push((name.to_string(), make()));
            pending.len() - 1
        }
    };
    &mut pending[k].1
}

/// `QQ[x,y]`, `GF(p)[x,y]`, optionally followed by `grading d,d,...` where
/// each `d` is an integer or a pair `(a,b)`.
pub fn parse_ring(text: &str) -> Result<GradedRing> {
    let bad = |m: &str| Error::InvalidArgument(format!("ring: {m}"));
    let open = text.find('[').ok_or_else(|| bad("expected `FIELD[vars]`"))?;
    let close = text.find(']').ok_or_else(|| bad("missing `]`"))?;
    let field = match text[..open].trim() {
        "QQ" | "Q" => CoefficientField::Rational,
        f => {
            let p = f
                .strip_prefix("GF(")
                .and_then(|s| s.strip_suffix(')'))
                .and_then(|s| s.trim().parse::<u32>().ok())
                .ok_or_else(|| bad("field must be QQ or GF(p)"))?;
            CoefficientField::prime(p)?
        }
    };
    let names: Vec<String> = text[open + 1..close].split(',').map(|s| s.trim().to_string()).collect();
    let rest = text[close + 1..].trim();
    if rest.is_empty() {
        return GradedRing::standard(&names, field);
    }
    let spec = rest.strip_prefix("grading").ok_or_else(|| bad("expected `grading`"))?;
    let degrees = parse_degrees(spec)?;
    if degrees.len() != names.len() {
        return Err(bad("one degree per variable"));
    }
    GradedRing::new(names, degrees, field)
}

fn parse_degrees(text: &str) -> Result<Vec<DegreeVector>> {
    let bad = || Error::InvalidArgument(format!("malformed grading `{}`", text.trim()));
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        if let Some(r) = rest.strip_prefix('(') {
            let end = r.find(')').ok_or_else(bad)?;
            let parts: Vec<i64> = r[..end]
                .split(',')
                .map(|s| s.trim().parse::<i64>().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            out.push(DegreeVector::from_slice(&parts)?);
            rest = r[end + 1..].trim_start();
        } else {
            let end = rest.find(',').unwrap_or(rest.len());
            out.push(DegreeVector::single(rest[..end].trim().parse().map_err(|_| bad())?));
            rest = &rest[end..];
        }
        rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
    }
    Ok(out)
}

/// Split `[ ... ] rest`.
fn bracket(text: &str) -> Result<(&str, &str)> {
    let t = text.trim_start();
    let inner = t.strip_prefix('[').ok_or_else(|| Error::InvalidArgument("expected `[`".into()))?;
    let end = inner.find(']').ok_or_else(|| Error::InvalidArgument("missing `]`".into()))?;
    Ok((&inner[..end], &inner[end + 1..]))
}

/// Colon-separated constants, each in the polynomial grammar.
fn coordinates(ring: &GradedRing, text: &str) -> Result<Vec<FieldScalar>> {
    text.split(':')
        .map(|c| {
            let p = parse_polynomial(c, ring)?;
            if p.is_zero() {
                return Ok(ring.field().zero());
            }
            if p.total_degree() != Some(0) {
                return Err(Error::InvalidArgument(format!("coordinate `{}` is not a constant", c.trim())));
            }
            Ok(p.leading_coefficient().expect("nonzero").clone())
        })
        .collect()
}

fn pair(v: Vec<FieldScalar>) -> Result<[FieldScalar; 2]> {
    v.try_into().map_err(|_| Error::InvalidArgument("a point of P^1 has two coordinates".into()))
}

fn multiplicity(rest: &str) -> Result<u32> {
    let rest = rest.trim();
    if rest.is_empty() {
        return Ok(1);
    }
    rest.strip_prefix("mult")
        .and_then(|s| s.trim().parse::<u32>().ok())
        .ok_or_else(|| Error::InvalidArgument(format!("expected `mult k`, got `{rest}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records() {
        let s = Session::parse(
            "# demo\nring R = QQ[x,y,z]\nideal I = x*y, y*z\npoint X = [1:0:0]\npoint X = [0:1:0] mult 2\n\
             ring P = QQ[x0,x1,x2,x3]\nline L = x0, x1\nline L = x2, x3\np1p1 G = [1:0]x[1:0]\np1p1 G = [0:1]x[1/2:1]\n",
        )
        .unwrap();
        assert_eq!(s.entries().len(), 4);
        assert_eq!(s.get(Some("X")).unwrap().kind(), "point");
        assert_eq!(s.ideal(Some("L")).unwrap().generators().len(), 4);
        assert!(s.get(None).is_err());
        assert_eq!(s.ring("R").unwrap().nvars(), 3);
    }

    #[test]
    fn bigraded_ring() {
        let r = parse_ring("GF(101)[a,b,c,d] grading (1,0),(1,0),(0,1),(0,1)").unwrap();
        assert_eq!(r.arity(), 2);
        assert_eq!(r.field(), CoefficientField::Prime(101));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = Session::parse("ring R = QQ[x]\nideal I = y").unwrap_err();
        assert!(e.to_string().contains("line 2"));
        assert!(Session::parse("ideal I = x").is_err());
        assert!(Session::parse("ring R = QQ[x]\nideal I = x\nideal I = x^2").is_err());
        assert!(Session::parse("ring R = QQ[x]\nassert I = lci").is_err());
    }

    #[test]
    fn asserted_tags() {
        let s = Session::parse("ring R = QQ[x,y]\nideal I = x, y\nassert I = lci, unmixed").unwrap();
        let t = s.ideal(None).unwrap().tags();
        assert_eq!((t.lci, t.unmixed, t.radical), (Certainty::Asserted, Certainty::Asserted, Certainty::Unknown));
    }
}
