use super::{MorseEvent, MorseWord};
use crate::error::{Error, Result};

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn add(&mut self) -> usize {
        self.0.push(self.0.len());
        self.0.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

#[derive(Clone, Copy, Debug)]
struct RawCrossing {
    event: usize,
    left_over: bool,
    // strand a enters at the left below and leaves at the right above
    a_below: usize,
    a_above: usize,
    a_up: bool,
    b_below: usize,
    b_above: usize,
    b_up: bool,
}

impl RawCrossing {
    fn a_in_out(&self) -> (usize, usize) {
        if self.a_up {
            (self.a_below, self.a_above)
        } else {
            (self.a_above, self.a_below)
        }
    }

    fn b_in_out(&self) -> (usize, usize) {
        if self.b_up {
            (self.b_below, self.b_above)
        } else {
            (self.b_above, self.b_below)
        }
    }

    /// Sign of the crossing: +1 when turning the under strand
    /// counterclockwise onto the over strand takes less than a half turn.
    fn sign(&self) -> i8 {
        let prod: i8 = if self.a_up == self.b_up { 1 } else { -1 };
        if self.left_over {
            prod
        } else {
            -prod
        }
    }
}

/// A passage of a strand through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Passage {
    pub crossing: usize,
    pub over: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum End {
    Unset,
    Passage(usize, bool),
    Top(usize),
}

/// Result of following every strand of a word.
pub(crate) struct RawTrace {
    crossings: Vec<RawCrossing>,
    /// For each strand (by bottom position): edge classes and the passages
    /// between them, in order of travel.
    strands: Vec<(Vec<usize>, Vec<Passage>)>,
    top_of_strand: Vec<usize>,
    class_count: usize,
}

impl RawTrace {
    pub(crate) fn run(word: &MorseWord) -> Result<Self> {
        let n = word.n();
        let mut uf = UnionFind(Vec::new());
        let mut slots: Vec<(usize, bool)> = (0..n).map(|_| (uf.add(), true)).collect();
        let bottom: Vec<usize> = slots.iter().map(|s| s.0).collect();
        let mut raw = Vec::new();
        for (k, ev) in word.events().iter().enumerate() {
            match *ev {
                MorseEvent::CrossPos(i) | MorseEvent::CrossNeg(i) => {
                    let (a, a_up) = slots[i - 1];
                    let (b, b_up) = slots[i];
                    let a_above = uf.add();
                    let b_above = uf.add();
                    raw.push(RawCrossing {
                        event: k + 1,
                        left_over: matches!(ev, MorseEvent::CrossPos(_)),
                        a_below: a,
                        a_above,
                        a_up,
                        b_below: b,
                        b_above,
                        b_up,
                    });
                    slots[i - 1] = (b_above, b_up);
                    slots[i] = (a_above, a_up);
                }
                MorseEvent::Cap(i) => {
                    uf.union(slots[i - 1].0, slots[i].0);
                    slots.drain(i - 1..=i);
                }
                MorseEvent::CupL(i) | MorseEvent::CupR(i) => {
                    let e = uf.add();
                    let left_up = matches!(ev, MorseEvent::CupL(_));
                    slots.insert(i - 1, (e, !left_up));
                    slots.insert(i - 1, (e, left_up));
                }
            }
        }

        let total = uf.0.len();
        let mut class_of = vec![0; total];
        let mut class_ids = vec![usize::MAX; total];
        let mut class_count = 0;
        for (e, slot) in class_of.iter_mut().enumerate() {
            let r = uf.find(e);
            if class_ids[r] == usize::MAX {
                class_ids[r] = class_count;
                class_count += 1;
            }
            *slot = class_ids[r];
        }

        for x in raw.iter_mut() {
            x.a_below = class_of[x.a_below];
            x.a_above = class_of[x.a_above];
            x.b_below = class_of[x.b_below];
            x.b_above = class_of[x.b_above];
        }
        let bottom: Vec<usize> = bottom.iter().map(|&e| class_of[e]).collect();
        let slots: Vec<usize> = slots.iter().map(|s| class_of[s.0]).collect();

        let mut end = vec![End::Unset; class_count];
        let mut set_end = |c: usize, v: End| -> Result<()> {
            if end[c] != End::Unset {
                return Err(Error::Diagram("inconsistent strand orientation".into()));
            }
            end[c] = v;
            Ok(())
        };
        let mut out_edge = vec![[0usize; 2]; raw.len()];
        for (k, x) in raw.iter().enumerate() {
            let (ai, ao) = x.a_in_out();
            let (bi, bo) = x.b_in_out();
            set_end(ai, End::Passage(k, true))?;
            set_end(bi, End::Passage(k, false))?;
            out_edge[k] = [bo, ao];
        }
        for (p, &e) in slots.iter().enumerate() {
            set_end(e, End::Top(p))?;
        }

        let mut visited = vec![false; class_count];
        let mut strands = Vec::with_capacity(n);
        let mut top_of_strand = vec![0; n];
        for (i, &b) in bottom.iter().enumerate() {
            let mut cls = b;
            let mut edges = Vec::new();
            let mut passages = Vec::new();
            loop {
                if visited[cls] {
                    return Err(Error::Diagram("strand revisits an edge".into()));
                }
                visited[cls] = true;
                edges.push(cls);
                match end[cls] {
                    End::Top(p) => {
                        top_of_strand[i] = p;
                        break;
                    }
                    End::Passage(k, is_a) => {
                        let x = &raw[k];
                        let over = if is_a { x.left_over } else { !x.left_over };
                        passages.push(Passage { crossing: k, over });
                        cls = out_edge[k][usize::from(is_a)];
                    }
                    End::Unset => return Err(Error::Diagram("strand ends in the middle of the diagram".into())),
                }
            }
            strands.push((edges, passages));
        }
        if visited.iter().any(|v| !v) {
            return Err(Error::Diagram("diagram contains a closed component".into()));
        }
        Ok(RawTrace { crossings: raw, strands, top_of_strand, class_count })
    }

    pub(crate) fn bottom_to_top(&self) -> Vec<usize> {
        self.top_of_strand.clone()
    }

    /// Bottom positions (0-based) of strands that never pass under.
    fn never_under(&self) -> Vec<usize> {
        (0..self.strands.len()).filter(|&i| self.strands[i].1.iter().all(|p| p.over)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    /// Strand index (bottom position, 0-based).
    pub strand: usize,
    /// Color as a 0-based variable index.
    pub color: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub strand: usize,
    pub color: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    /// 1-based index of the event in the normalized word.
    pub event: usize,
    pub sign: i8,
    pub over_arc: usize,
    pub under_in_arc: usize,
    pub under_out_arc: usize,
    pub over_in: usize,
    pub over_out: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub over_color: usize,
    pub under_color: usize,
}

/// A traced diagram. Arcs are numbered in generator order: bottom arcs of
/// positions `1..n`, then intermediate arcs strand by strand in order of
/// travel, then top arcs of positions `1..n`. Edges are the pieces between
/// consecutive crossing passages, numbered strand by strand.
#[derive(Clone, Debug)]
pub struct Diagram {
    pub n: usize,
    pub ncolors: usize,
    /// The word after kink normalization.
    pub word: MorseWord,
    pub kinks_added: usize,
    pub arcs: Vec<Arc>,
    pub edges: Vec<Edge>,
    pub crossings: Vec<Crossing>,
    pub bottom_arcs: Vec<usize>,
    pub top_arcs: Vec<usize>,
    pub bottom_edges: Vec<usize>,
    pub top_edges: Vec<usize>,
    /// 0-based colors of bottom and top positions.
    pub bottom_colors: Vec<usize>,
    pub top_colors: Vec<usize>,
    /// Edge sequence of each strand, bottom to top.
    pub strand_edges: Vec<Vec<usize>>,
}

impl Diagram {
    pub fn from_word(word: &MorseWord) -> Result<Diagram> {
        let mut w = word.clone();
        let mut kinks = 0;
        let raw = loop {
            let raw = w.trace_raw()?;
            let lonely = raw.never_under();
            if lonely.is_empty() {
                break raw;
            }
            for s in lonely {
                w = w.add_kink(raw.top_of_strand[s] + 1)?;
                kinks += 1;
            }
        };
        Ok(Self::build(w, kinks, raw))
    }

    fn build(word: MorseWord, kinks_added: usize, raw: RawTrace) -> Diagram {
        let n = word.n();
        let colors: Vec<usize> = word.colors().iter().map(|c| c - 1).collect();
        let c = raw.crossings.len();

        // renumber edges in order of travel
        let mut edge_id = vec![usize::MAX; raw.class_count];
        let mut edges = Vec::with_capacity(raw.class_count);
        let mut strand_edges = Vec::with_capacity(n);
        for (s, (cls, _)) in raw.strands.iter().enumerate() {
            let mut seq = Vec::with_capacity(cls.len());
            for &k in cls {
                edge_id[k] = edges.len();
                seq.push(edges.len());
                edges.push(Edge { strand: s, color: colors[s] });
            }
            strand_edges.push(seq);
        }

        // arcs: per strand, a new arc after every under passage
        let mut local_arc = vec![(0usize, 0usize); edges.len()];
        let mut arc_counts = Vec::with_capacity(n);
        for (s, (cls, passages)) in raw.strands.iter().enumerate() {
            let mut a = 0;
            local_arc[edge_id[cls[0]]] = (s, 0);
            for (k, p) in passages.iter().enumerate() {
                if !p.over {
                    a += 1;
                }
                local_arc[edge_id[cls[k + 1]]] = (s, a);
            }
            arc_counts.push(a + 1);
        }
        let top_of: Vec<usize> = raw.top_of_strand.clone();
        let mut strand_at_top = vec![0; n];
        for (s, &p) in top_of.iter().enumerate() {
            strand_at_top[p] = s;
        }
        let mut first_middle = Vec::with_capacity(n);
        let mut next = n;
        for &cnt in &arc_counts {
            first_middle.push(next);
            next += cnt - 2;
        }
        debug_assert_eq!(next, c);
        let arc_index = |(s, a): (usize, usize)| -> usize {
            if a == 0 {
                s
            } else if a == arc_counts[s] - 1 {
                c + top_of[s]
            } else {
                first_middle[s] + a - 1
            }
        };
        let mut arcs = vec![Arc { strand: 0, color: 0 }; n + c];
        for &(s, a) in &local_arc {
            arcs[arc_index((s, a))] = Arc { strand: s, color: colors[s] };
        }

        let mut crossings = Vec::with_capacity(c);
        for x in raw.crossings.iter() {
            let (ai, ao) = x.a_in_out();
            let (bi, bo) = x.b_in_out();
            let ((oi, oo), (ui, uo)) = if x.left_over { ((ai, ao), (bi, bo)) } else { ((bi, bo), (ai, ao)) };
            let (oi, oo, ui, uo) = (edge_id[oi], edge_id[oo], edge_id[ui], edge_id[uo]);
            debug_assert_eq!(local_arc[oi], local_arc[oo]);
            crossings.push(Crossing {
                event: x.event,
                sign: x.sign(),
                over_arc: arc_index(local_arc[oi]),
                under_in_arc: arc_index(local_arc[ui]),
                under_out_arc: arc_index(local_arc[uo]),
                over_in: oi,
                over_out: oo,
                under_in: ui,
                under_out: uo,
                over_color: edges[oi].color,
                under_color: edges[ui].color,
            });
        }
        let bottom_arcs = (0..n).collect();
        let top_arcs = (0..n).map(|p| c + p).collect();
        let bottom_edges = strand_edges.iter().map(|e| e[0]).collect();
        let top_edges = (0..n).map(|p| *strand_edges[strand_at_top[p]].last().unwrap()).collect();
        let top_colors = (0..n).map(|p| colors[strand_at_top[p]]).collect();
        Diagram {
            n,
            ncolors: word.ncolors(),
            word,
            kinks_added,
            arcs,
            edges,
            crossings,
            bottom_arcs,
            top_arcs,
            bottom_edges,
            top_edges,
            bottom_colors: colors,
            top_colors,
            strand_edges,
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_pure(&self) -> bool {
        (0..self.n).all(|p| self.arcs[self.top_arcs[p]].strand == p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use MorseEvent::*;

    fn hopf() -> MorseWord {
        MorseWord::new(2, vec![1, 2], vec![CrossPos(1), CrossPos(1)]).unwrap()
    }

    #[test]
    fn hopf_trace() {
        let d = hopf().trace().unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.arc_count(), 4);
        assert_eq!(d.edges.len(), 2 + 2 * 2);
        assert!(d.crossings.iter().all(|x| x.sign == 1));
        assert_eq!(d.kinks_added, 0);
        assert!(d.is_pure());
    }

    #[test]
    fn auto_kink() {
        let d = MorseWord::trivial(2).trace().unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.kinks_added, 2);
        for x in &d.crossings {
            assert_eq!(d.arcs[x.over_arc].strand, d.arcs[x.under_in_arc].strand);
        }
        let single = MorseWord::new(2, vec![1, 1], vec![CrossPos(1)]).unwrap();
        let d = single.trace().unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.arc_count(), 4);
        assert_ne!(d.bottom_arcs[0], d.top_arcs[0]);
    }

    #[test]
    fn negative_sign() {
        let d = MorseWord::new(2, vec![1, 2], vec![CrossNeg(1), CrossNeg(1)]).unwrap().trace().unwrap();
        assert!(d.crossings.iter().all(|x| x.sign == -1));
        let k = MorseWord::trivial(1).add_kink(1).unwrap().trace().unwrap();
        assert_eq!(k.crossing_count(), 1);
        assert_eq!(k.arc_count(), 2);
    }

    #[test]
    fn closed_component_rejected() {
        let w = MorseWord::new(1, vec![1], vec![CupL(2), Cap(2)]).unwrap();
        assert!(w.trace().is_err());
    }
}
