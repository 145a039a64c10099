//! Self-delimiting adjacency labels.
//!
//! Every label starts with a scheme bit (0 interval, 1 degeneracy) and the
//! Elias-gamma code of the field width `w = max(1, ceil(log2 n))`, so two
//! labels alone are enough to answer an adjacency query. Bits are MSB-first.
//!
//! Interval: `[0][gamma(w)][pos: w][m: w][m x (start: w, end: w)]`.
//! Degeneracy: `[1][gamma(w)][id: w][c: w][c x back-neighbour id: w]`.

use std::fmt::Write as _;

use bitvec::prelude::*;
use serde::{Deserialize, Serialize};

use crate::contiguity::{low_contiguity_ordering, ContiguityResult, Pipeline, PipelineOptions};
use crate::error::{Error, Result};
use crate::graph::{degeneracy_ordering, Graph, VertexOrdering};

type Bits = BitVec<u8, Msb0>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    Interval,
    Degeneracy,
}

impl Scheme {
    fn tag(self) -> bool {
        self == Scheme::Degeneracy
    }

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Interval => "interval",
            Scheme::Degeneracy => "degeneracy",
        }
    }
}

/// Field width for an `n`-vertex graph.
pub fn field_width(n: usize) -> usize {
    if n <= 2 {
        1
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

/// Bits in the Elias-gamma code of `w >= 1`.
pub fn gamma_len(w: usize) -> usize {
    2 * w.ilog2() as usize + 1
}

fn push_gamma(bits: &mut Bits, w: usize) {
    let len = w.ilog2() as usize + 1;
    bits.extend(std::iter::repeat_n(false, len - 1));
    push_uint(bits, w, len);
}

fn push_uint(bits: &mut Bits, value: usize, width: usize) {
    debug_assert!(
        width >= usize::BITS as usize || value >> width == 0,
        "{value} needs more than {width} bits"
    );
    for i in (0..width).rev() {
        bits.push(value >> i & 1 == 1);
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Label {
    bits: Bits,
}

impl std::fmt::Debug for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Label({})", self.to_bit_string())
    }
}

impl Label {
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn scheme(&self) -> Result<Scheme> {
        match self.bits.first().map(|b| *b) {
            Some(false) => Ok(Scheme::Interval),
            Some(true) => Ok(Scheme::Degeneracy),
            None => Err(Error::Decode("empty label".into())),
        }
    }

    pub fn to_bit_string(&self) -> String {
        self.bits
            .iter()
            .map(|b| if *b { '1' } else { '0' })
            .collect()
    }

    pub fn from_bit_string(s: &str) -> Result<Label> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Decode(format!(
                    "unexpected character {c:?} in bit string"
                ))),
            })
            .collect::<Result<Bits>>()?;
        Ok(Label { bits })
    }

    /// Packed bytes as lowercase hex, MSB-first with a zero-padded tail.
    pub fn to_hex(&self) -> String {
        let mut packed = self.bits.clone();
        packed.set_uninitialized(false);
        packed
            .as_raw_slice()
            .iter()
            .fold(String::new(), |mut s, b| {
                let _ = write!(s, "{b:02x}");
                s
            })
    }

    pub fn from_hex(hex: &str, len: usize) -> Result<Label> {
        if !hex.len().is_multiple_of(2) || !hex.is_ascii() {
            return Err(Error::Decode(format!("malformed hex string {hex:?}")));
        }
        let bytes = (0..hex.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&hex[i..i + 2], 16))
            .collect::<std::result::Result<Vec<u8>, _>>()
            .map_err(|e| Error::Decode(format!("malformed hex string {hex:?}: {e}")))?;
        if len > bytes.len() * 8 || bytes.len() != len.div_ceil(8) {
            return Err(Error::Decode(format!(
                "{} hex bytes cannot hold exactly {len} bits",
                bytes.len()
            )));
        }
        let mut bits = Bits::from_vec(bytes);
        if bits[len..].any() {
            return Err(Error::Decode(
                "nonzero padding after the last label bit".into(),
            ));
        }
        bits.truncate(len);
        Ok(Label { bits })
    }

    pub fn bits(&self) -> &BitSlice<u8, Msb0> {
        &self.bits
    }
}

struct Reader<'a> {
    bits: &'a BitSlice<u8, Msb0>,
    at: usize,
}

impl Reader<'_> {
    fn bit(&mut self) -> Result<bool> {
        let b = *self
            .bits
            .get(self.at)
            .ok_or_else(|| Error::Decode("label ends early".into()))?;
        self.at += 1;
        Ok(b)
    }

    fn uint(&mut self, width: usize) -> Result<usize> {
        if width > 63 {
            return Err(Error::Decode(format!("field width {width} is too large")));
        }
        (0..width).try_fold(0usize, |v, _| Ok(v << 1 | self.bit()? as usize))
    }

    fn gamma(&mut self) -> Result<usize> {
        let mut zeros = 0;
        while !self.bit()? {
            zeros += 1;
            if zeros > 6 {
                return Err(Error::Decode("field width code is too long".into()));
            }
        }
        Ok(1 << zeros | self.uint(zeros)?)
    }

    fn finish(&self) -> Result<()> {
        if self.at == self.bits.len() {
            Ok(())
        } else {
            Err(Error::Decode(format!(
                "{} trailing bits",
                self.bits.len() - self.at
            )))
        }
    }
}

/// Fields of an interval label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalFields {
    pub w: usize,
    pub pos: usize,
    pub intervals: Vec<(usize, usize)>,
}

/// Fields of a degeneracy label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyFields {
    pub w: usize,
    pub id: usize,
    pub back: Vec<usize>,
}

fn header(label: &Label, expect: Scheme) -> Result<(Reader<'_>, usize)> {
    let mut r = Reader {
        bits: &label.bits,
        at: 0,
    };
    let tag = r.bit()?;
    if tag != expect.tag() {
        return Err(Error::Decode(format!("expected a {} label", expect.name())));
    }
    let w = r.gamma()?;
    Ok((r, w))
}

pub fn parse_interval(label: &Label) -> Result<IntervalFields> {
    let (mut r, w) = header(label, Scheme::Interval)?;
    let pos = r.uint(w)?;
    let m = r.uint(w)?;
    let intervals = (0..m)
        .map(|_| Ok((r.uint(w)?, r.uint(w)?)))
        .collect::<Result<Vec<_>>>()?;
    r.finish()?;
    Ok(IntervalFields { w, pos, intervals })
}

pub fn parse_degeneracy(label: &Label) -> Result<DegeneracyFields> {
    let (mut r, w) = header(label, Scheme::Degeneracy)?;
    let id = r.uint(w)?;
    let c = r.uint(w)?;
    let back = (0..c).map(|_| r.uint(w)).collect::<Result<Vec<_>>>()?;
    r.finish()?;
    Ok(DegeneracyFields { w, id, back })
}

fn same_width(wa: usize, wb: usize) -> Result<()> {
    if wa == wb {
        Ok(())
    } else {
        Err(Error::Decode(format!(
            "labels have field widths {wa} and {wb}"
        )))
    }
}

/// Whether the position in `a` lies in one of the intervals of `b`.
pub fn decode_interval(a: &Label, b: &Label) -> Result<bool> {
    let (fa, fb) = (parse_interval(a)?, parse_interval(b)?);
    same_width(fa.w, fb.w)?;
    Ok(fb
        .intervals
        .iter()
        .any(|&(s, e)| s <= fa.pos && fa.pos <= e))
}

/// Whether either id appears among the other's back-neighbours.
pub fn decode_degeneracy(a: &Label, b: &Label) -> Result<bool> {
    let (fa, fb) = (parse_degeneracy(a)?, parse_degeneracy(b)?);
    same_width(fa.w, fb.w)?;
    Ok(fb.back.contains(&fa.id) || fa.back.contains(&fb.id))
}

/// Adjacency from two labels of the same scheme.
pub fn decode(a: &Label, b: &Label) -> Result<bool> {
    match (a.scheme()?, b.scheme()?) {
        (Scheme::Interval, Scheme::Interval) => decode_interval(a, b),
        (Scheme::Degeneracy, Scheme::Degeneracy) => decode_degeneracy(a, b),
        _ => Err(Error::Decode("labels come from different schemes".into())),
    }
}

#[derive(Clone, Debug)]
pub struct LabelSet {
    pub n: usize,
    pub scheme: Scheme,
    pub labels: Vec<Label>,
    /// The vertex ordering the positions or ids refer to.
    pub ordering: VertexOrdering,
    /// Interval scheme: achieved contiguity. Degeneracy scheme: degeneracy.
    pub parameter: usize,
    /// Interval scheme produced by the pipeline: the path crossing number.
    pub path_crossing: Option<usize>,
}

impl LabelSet {
    pub fn label(&self, v: usize) -> &Label {
        &self.labels[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> Result<bool> {
        decode(self.label(u), self.label(v))
    }
}

/// Interval labels for a given ordering.
pub fn encode_interval_with_ordering(g: &Graph, sigma: VertexOrdering) -> Result<LabelSet> {
    let c = ContiguityResult::of(g, sigma)?;
    Ok(interval_labels(g, c, None))
}

fn interval_labels(g: &Graph, c: ContiguityResult, path_crossing: Option<usize>) -> LabelSet {
    let n = g.n();
    let w = field_width(n);
    let labels = (0..n)
        .map(|v| {
            let mut bits = Bits::new();
            bits.push(false);
            push_gamma(&mut bits, w);
            push_uint(&mut bits, c.ordering.pos(v), w);
            let runs = c.per_vertex[v].intervals();
            push_uint(&mut bits, runs.len(), w);
            for &(s, e) in runs {
                push_uint(&mut bits, s, w);
                push_uint(&mut bits, e, w);
            }
            Label { bits }
        })
        .collect();
    LabelSet {
        n,
        scheme: Scheme::Interval,
        labels,
        parameter: c.k,
        ordering: c.ordering,
        path_crossing,
    }
}

/// Interval labels along the low-crossing-path ordering.
pub fn encode_interval(g: &Graph) -> Result<LabelSet> {
    Ok(encode_interval_with(g, &PipelineOptions::default())?.0)
}

pub fn encode_interval_with(g: &Graph, opts: &PipelineOptions) -> Result<(LabelSet, Pipeline)> {
    let p = low_contiguity_ordering(g, opts)?;
    let ls = interval_labels(g, p.contiguity.clone(), Some(p.path.path_crossing));
    Ok((ls, p))
}

/// Back-neighbour labels along a degeneracy ordering; ids are positions in
/// that ordering.
pub fn encode_degeneracy(g: &Graph) -> LabelSet {
    let n = g.n();
    let w = field_width(n);
    let dg = degeneracy_ordering(g);
    let sigma = dg.ordering.clone();
    let labels = (0..n)
        .map(|v| {
            let mut back: Vec<usize> = dg.back_neighbors(g, v).map(|u| sigma.pos(u)).collect();
            back.sort_unstable();
            let mut bits = Bits::new();
            bits.push(true);
            push_gamma(&mut bits, w);
            push_uint(&mut bits, sigma.pos(v), w);
            push_uint(&mut bits, back.len(), w);
            for id in back {
                push_uint(&mut bits, id, w);
            }
            Label { bits }
        })
        .collect();
    LabelSet {
        n,
        scheme: Scheme::Degeneracy,
        labels,
        ordering: sigma,
        parameter: dg.d,
        path_crossing: None,
    }
}

/// Degeneracy labels when the degeneracy is at most `threshold`, interval
/// labels otherwise.
pub fn choose_scheme(g: &Graph, threshold: usize) -> Result<LabelSet> {
    if degeneracy_ordering(g).d <= threshold {
        Ok(encode_degeneracy(g))
    } else {
        encode_interval(g)
    }
}

/// Largest label the format allows: `1 + |gamma(w)| + (2k + 2) w` for the
/// interval scheme and `1 + |gamma(w)| + (d + 2) w` for the degeneracy one.
pub fn format_bound(scheme: Scheme, n: usize, parameter: usize) -> usize {
    let w = field_width(n);
    let fields = match scheme {
        Scheme::Interval => 2 * parameter + 2,
        Scheme::Degeneracy => parameter + 2,
    };
    1 + gamma_len(w) + fields * w
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LabelStats {
    pub max_bits: usize,
    pub mean_bits: f64,
    pub bound_bits: usize,
    pub bound_check: bool,
}

pub fn label_stats(ls: &LabelSet) -> LabelStats {
    let max_bits = ls.labels.iter().map(Label::len).max().unwrap_or(0);
    let total: usize = ls.labels.iter().map(Label::len).sum();
    let mean_bits = if ls.labels.is_empty() {
        0.0
    } else {
        total as f64 / ls.labels.len() as f64
    };
    let bound_bits = format_bound(ls.scheme, ls.n, ls.parameter);
    LabelStats {
        max_bits,
        mean_bits,
        bound_bits,
        bound_check: max_bits <= bound_bits,
    }
}

#[derive(Serialize, Deserialize)]
struct FileHeader {
    n: usize,
    scheme: Scheme,
}

#[derive(Serialize, Deserialize)]
struct FileRecord {
    v: usize,
    bits: String,
    len: usize,
}

/// Labels as read back from a label file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelFile {
    pub n: usize,
    pub scheme: Scheme,
    pub labels: Vec<Label>,
}

impl LabelFile {
    pub fn adjacent(&self, u: usize, v: usize) -> Result<bool> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::input(format!(
                    "vertex {x} has no label (n = {})",
                    self.n
                )));
            }
        }
        decode(&self.labels[u], &self.labels[v])
    }
}

/// JSON-lines: a header `{"n", "scheme"}`, then `{"v", "bits", "len"}` per vertex.
pub fn write_label_file(ls: &LabelSet) -> String {
    let mut out = serde_json::to_string(&FileHeader {
        n: ls.n,
        scheme: ls.scheme,
    })
    .unwrap();
    out.push('\n');
    for (v, label) in ls.labels.iter().enumerate() {
        let rec = FileRecord {
            v,
            bits: label.to_hex(),
            len: label.len(),
        };
        out.push_str(&serde_json::to_string(&rec).unwrap());
        out.push('\n');
    }
    out
}

pub fn read_label_file(text: &str) -> Result<LabelFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, first) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header".into(),
    })?;
    let h: FileHeader = serde_json::from_str(first).map_err(|e| Error::Parse {
        line: 1,
        msg: format!("bad header: {e}"),
    })?;
    let mut labels: Vec<Option<Label>> = vec![None; h.n];
    for (i, line) in lines {
        let parse = |msg: String| Error::Parse { line: i + 1, msg };
        let r: FileRecord =
            serde_json::from_str(line).map_err(|e| parse(format!("bad record: {e}")))?;
        if r.v >= h.n {
            return Err(parse(format!(
                "vertex {} out of range for n = {}",
                r.v, h.n
            )));
        }
        if labels[r.v].is_some() {
            return Err(parse(format!("vertex {} labelled twice", r.v)));
        }
        let label = Label::from_hex(&r.bits, r.len).map_err(|e| parse(e.to_string()))?;
        if label.scheme().map_err(|e| parse(e.to_string()))? != h.scheme {
            return Err(parse(format!(
                "label of vertex {} does not match the header scheme",
                r.v
            )));
        }
        labels[r.v] = Some(label);
    }
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(v, l)| {
            l.ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("vertex {v} has no label"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LabelFile {
        n: h.n,
        scheme: h.scheme,
        labels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::nonisomorphic_graphs;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn roundtrip(g: &Graph, ls: &LabelSet) {
        let distinct: HashSet<&Label> = ls.labels.iter().collect();
        assert_eq!(distinct.len(), g.n());
        for u in 0..g.n() {
            for v in 0..g.n() {
                if u != v {
                    assert_eq!(
                        ls.adjacent(u, v).unwrap(),
                        g.has_edge(u, v),
                        "{g:?} {u} {v}"
                    );
                }
            }
        }
    }

    #[test]
    fn widths_and_gamma() {
        assert_eq!(
            (1..=9).map(field_width).collect::<Vec<_>>(),
            vec![1, 1, 2, 2, 3, 3, 3, 3, 4]
        );
        assert_eq!(field_width(128), 7);
        assert_eq!(field_width(129), 8);
        assert_eq!(gamma_len(1), 1);
        assert_eq!(gamma_len(3), 3);
        assert_eq!(gamma_len(7), 5);
        let mut b = Bits::new();
        push_gamma(&mut b, 5);
        assert_eq!(Label { bits: b }.to_bit_string(), "00101");
    }

    #[test]
    fn k2_layout() {
        let ls = encode_interval(&path(2)).unwrap();
        // tag, gamma(1), pos, m = 1, interval [other, other]
        let expected: Vec<String> = (0..2)
            .map(|v| {
                let p = ls.ordering.pos(v);
                format!("01{p}1{q}{q}", q = 1 - p)
            })
            .collect();
        assert_eq!(
            ls.labels
                .iter()
                .map(Label::to_bit_string)
                .collect::<Vec<_>>(),
            expected
        );
        assert_eq!(label_stats(&ls).max_bits, 6);
        assert!(ls.adjacent(0, 1).unwrap());
    }

    #[test]
    fn edgeless_layout() {
        let g = Graph::empty(8);
        let ls = encode_interval(&g).unwrap();
        let st = label_stats(&ls);
        // tag + gamma(3) + pos + m = 1 + 3 + 3 + 3
        assert_eq!(st.max_bits, 10);
        assert!(ls
            .labels
            .iter()
            .all(|l| parse_interval(l).unwrap().intervals.is_empty()));
        roundtrip(&g, &ls);
    }

    #[test]
    fn p4_golden() {
        let ls =
            encode_interval_with_ordering(&path(4), VertexOrdering::new(vec![0, 2, 1, 3]).unwrap())
                .unwrap();
        let f = parse_interval(ls.label(1)).unwrap();
        assert_eq!(f.intervals, vec![(0, 1)]);
        assert_eq!(ls.label(1).to_bit_string(), "001010010001");
        assert!(ls.adjacent(1, 2).unwrap());
        assert!(!ls.adjacent(0, 3).unwrap());
        assert!(!decode(ls.label(1), ls.label(1)).unwrap());
        roundtrip(&path(4), &ls);
    }

    #[test]
    fn degeneracy_examples() {
        let tree = Graph::from_edge_list(6, &[(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        let ls = encode_degeneracy(&tree);
        assert!(ls
            .labels
            .iter()
            .all(|l| parse_degeneracy(l).unwrap().back.len() <= 1));
        roundtrip(&tree, &ls);

        let k4 = encode_degeneracy(&complete(4));
        let mut counts: Vec<usize> = k4
            .labels
            .iter()
            .map(|l| parse_degeneracy(l).unwrap().back.len())
            .collect();
        counts.sort_unstable();
        assert_eq!(counts, vec![0, 1, 2, 3]);
        assert!(label_stats(&k4).max_bits <= 1 + gamma_len(2) + 5 * 2);

        let c6 = encode_degeneracy(&cycle(6));
        assert!(c6
            .labels
            .iter()
            .all(|l| parse_degeneracy(l).unwrap().back.len() <= 2));
        roundtrip(&cycle(6), &c6);

        let st = encode_degeneracy(&star(4));
        assert!(!st.adjacent(1, 2).unwrap());
    }

    #[test]
    fn decode_errors() {
        let a = encode_interval(&path(4)).unwrap();
        let b = encode_degeneracy(&path(4));
        assert!(matches!(
            decode(a.label(0), b.label(1)),
            Err(Error::Decode(_))
        ));
        assert!(decode_interval(b.label(0), b.label(1)).is_err());
        let wide = encode_interval(&path(9)).unwrap();
        assert!(decode(a.label(0), wide.label(0))
            .unwrap_err()
            .to_string()
            .contains("widths"));
        let truncated = Label::from_bit_string(&a.label(1).to_bit_string()[..5]).unwrap();
        assert!(parse_interval(&truncated).is_err());
        let padded = Label::from_bit_string(&(a.label(1).to_bit_string() + "0")).unwrap();
        assert!(parse_interval(&padded).is_err());
    }

    #[test]
    fn scheme_choice() {
        let tree = path(7);
        assert_eq!(choose_scheme(&tree, 4).unwrap().scheme, Scheme::Degeneracy);
        assert_eq!(
            choose_scheme(&complete(32), 4).unwrap().scheme,
            Scheme::Interval
        );
        assert_eq!(
            choose_scheme(&Graph::empty(3), 0).unwrap().scheme,
            Scheme::Degeneracy
        );
        assert_eq!(choose_scheme(&tree, 0).unwrap().scheme, Scheme::Interval);
    }

    #[test]
    fn hex_and_files() {
        let l = Label::from_bit_string("1011001110").unwrap();
        assert_eq!(l.to_hex(), "b380");
        assert_eq!(Label::from_hex("b380", 10).unwrap(), l);
        assert!(Label::from_hex("b3a0", 10).is_err());
        assert!(Label::from_hex("b380", 17).is_err());
        assert!(Label::from_hex("b38", 10).is_err());

        let g = cycle(5);
        for ls in [encode_interval(&g).unwrap(), encode_degeneracy(&g)] {
            let text = write_label_file(&ls);
            assert!(text.starts_with(&format!("{{\"n\":5,\"scheme\":\"{}\"}}", ls.scheme.name())));
            let back = read_label_file(&text).unwrap();
            assert_eq!(back.labels, ls.labels);
            assert!(back.adjacent(0, 1).unwrap());
            assert!(back.adjacent(0, 9).is_err());
        }
        assert!(read_label_file("").is_err());
        assert!(read_label_file("{\"n\":1,\"scheme\":\"interval\"}\n").is_err());
        let dup = "{\"n\":1,\"scheme\":\"interval\"}\n{\"v\":0,\"bits\":\"40\",\"len\":4}\n{\"v\":0,\"bits\":\"40\",\"len\":4}\n";
        assert!(matches!(
            read_label_file(dup),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn all_small_graphs_roundtrip() {
        for n in 1..=6 {
            for g in nonisomorphic_graphs(n) {
                let iv = encode_interval(&g).unwrap();
                let dg = encode_degeneracy(&g);
                roundtrip(&g, &iv);
                roundtrip(&g, &dg);
                assert!(label_stats(&iv).bound_check && label_stats(&dg).bound_check);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn random_graphs_roundtrip(n in 1usize..24, p in 0.0f64..1.0, seed in any::<u64>()) {
            use rand::Rng;
            let mut rng = crate::rng::seeded(seed);
            let mut e = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        e.push((u, v));
                    }
                }
            }
            let g = Graph::from_edge_list(n, &e).unwrap();
            for ls in [encode_interval(&g).unwrap(), encode_degeneracy(&g)] {
                for u in 0..n {
                    for v in 0..n {
                        if u != v {
                            prop_assert_eq!(ls.adjacent(u, v).unwrap(), g.has_edge(u, v));
                            prop_assert_eq!(ls.adjacent(u, v).unwrap(), ls.adjacent(v, u).unwrap());
                        }
                    }
                }
                prop_assert!(label_stats(&ls).bound_check);
                let back = read_label_file(&write_label_file(&ls)).unwrap();
                prop_assert_eq!(back.labels, ls.labels.clone());
            }
        }
    }
}
