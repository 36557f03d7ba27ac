//! String-link diagrams as words of Morse events.

mod dsl;
mod trace;

pub use dsl::{parse_braid, parse_input, parse_morse};
pub use trace::{Arc, Crossing, Diagram, Edge, Passage};

use std::fmt;

use crate::error::{Error, Result};

/// One event of a Morse word, read bottom to top. Positions are 1-based
/// among the strands live at that height.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MorseEvent {
    /// Strand at position `i` crosses over the strand at `i + 1`.
    CrossPos(usize),
    /// Strand at position `i` crosses under the strand at `i + 1`.
    CrossNeg(usize),
    /// Strands at `i`, `i + 1` join in a local maximum.
    Cap(usize),
    /// Local minimum creating strands at `i` (upward) and `i + 1` (downward).
    CupL(usize),
    /// Local minimum creating strands at `i` (downward) and `i + 1` (upward).
    CupR(usize),
}

impl MorseEvent {
    pub fn position(&self) -> usize {
        match *self {
            MorseEvent::CrossPos(i)
            | MorseEvent::CrossNeg(i)
            | MorseEvent::Cap(i)
            | MorseEvent::CupL(i)
            | MorseEvent::CupR(i) => i,
        }
    }

    pub fn is_crossing(&self) -> bool {
        matches!(self, MorseEvent::CrossPos(_) | MorseEvent::CrossNeg(_))
    }

    pub fn shifted(&self, by: usize) -> MorseEvent {
        match *self {
            MorseEvent::CrossPos(i) => MorseEvent::CrossPos(i + by),
            MorseEvent::CrossNeg(i) => MorseEvent::CrossNeg(i + by),
            MorseEvent::Cap(i) => MorseEvent::Cap(i + by),
            MorseEvent::CupL(i) => MorseEvent::CupL(i + by),
            MorseEvent::CupR(i) => MorseEvent::CupR(i + by),
        }
    }
}

impl fmt::Display for MorseEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MorseEvent::CrossPos(i) => write!(f, "x {i} +"),
            MorseEvent::CrossNeg(i) => write!(f, "x {i} -"),
            MorseEvent::Cap(i) => write!(f, "cap {i}"),
            MorseEvent::CupL(i) => write!(f, "cup {i} <"),
            MorseEvent::CupR(i) => write!(f, "cup {i} >"),
        }
    }
}

/// A validated Morse word: `n` strands at bottom and top, colors of the
/// bottom strands (1-based, forming `1..=m`), and the events.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MorseWord {
    n: usize,
    colors: Vec<usize>,
    events: Vec<MorseEvent>,
}

/// Orientation of each live strand after every event; `true` is upward.
type Levels = Vec<Vec<bool>>;

impl MorseWord {
    pub fn new(n: usize, colors: Vec<usize>, events: Vec<MorseEvent>) -> Result<Self> {
        let w = MorseWord { n, colors, events };
        w.validate()?;
        Ok(w)
    }

    pub fn trivial(n: usize) -> Self {
        MorseWord { n, colors: (1..=n).collect(), events: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn events(&self) -> &[MorseEvent] {
        &self.events
    }

    /// Number of distinct colors.
    pub fn ncolors(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| e.is_crossing()).count()
    }

    /// Same word with every strand given one color.
    pub fn monochrome(&self) -> MorseWord {
        MorseWord { n: self.n, colors: vec![1; self.n], events: self.events.clone() }
    }

    pub fn with_colors(&self, colors: Vec<usize>) -> Result<MorseWord> {
        MorseWord::new(self.n, colors, self.events.clone())
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Diagram("strand count must be positive".into()));
        }
        validate_colors(self.n, &self.colors)?;
        self.levels().map(|_| ())
    }

    /// Simulates the word, checking positions and orientations.
    fn levels(&self) -> Result<Levels> {
        let mut state = vec![true; self.n];
        let mut out = Vec::with_capacity(self.events.len() + 1);
        out.push(state.clone());
        for (k, ev) in self.events.iter().enumerate() {
            step(&mut state, ev).map_err(|what| Error::Diagram(format!("event {} ({ev}): {what}", k + 1)))?;
            out.push(state.clone());
        }
        check_end(self.n, &state).map_err(Error::Diagram)?;
        Ok(out)
    }

    /// Permutation of the underlying strands: entry `i` is the top position
    /// (0-based) reached by the strand starting at bottom position `i`.
    pub fn permutation(&self) -> Result<Vec<usize>> {
        Ok(self.trace_raw()?.bottom_to_top())
    }

    pub fn top_colors(&self) -> Result<Vec<usize>> {
        let perm = self.permutation()?;
        let mut top = vec![0; self.n];
        for (i, &p) in perm.iter().enumerate() {
            top[p] = self.colors[i];
        }
        Ok(top)
    }

    pub fn is_pure(&self) -> Result<bool> {
        Ok(self.permutation()?.iter().enumerate().all(|(i, &p)| i == p))
    }

    /// Stacks `other` on top of `self`.
    pub fn stack(&self, other: &MorseWord) -> Result<MorseWord> {
        if self.n != other.n {
            return Err(Error::Shape(format!("stacking {} strands on {}", other.n, self.n)));
        }
        let top = self.top_colors()?;
        if top != other.colors {
            return Err(Error::ColorMismatch(format!("top colors {:?} vs bottom colors {:?}", top, other.colors)));
        }
        let mut events = self.events.clone();
        events.extend_from_slice(&other.events);
        MorseWord::new(self.n, self.colors.clone(), events)
    }

    /// Reflection through the middle level with reversed orientation.
    pub fn invert(&self) -> Result<MorseWord> {
        let levels = self.levels()?;
        let mut events = Vec::with_capacity(self.events.len());
        for (k, ev) in self.events.iter().enumerate().rev() {
            let below = &levels[k];
            events.push(match *ev {
                MorseEvent::CrossPos(i) => MorseEvent::CrossNeg(i),
                MorseEvent::CrossNeg(i) => MorseEvent::CrossPos(i),
                MorseEvent::Cap(i) => {
                    if below[i - 1] {
                        MorseEvent::CupL(i)
                    } else {
                        MorseEvent::CupR(i)
                    }
                }
                MorseEvent::CupL(i) | MorseEvent::CupR(i) => MorseEvent::Cap(i),
            });
        }
        MorseWord::new(self.n, self.top_colors()?, events)
    }

    /// Appends a Reidemeister I curl at top position `pos` (1-based) in
    /// which that strand passes under itself.
    pub fn add_kink(&self, pos: usize) -> Result<MorseWord> {
        if pos == 0 || pos > self.n {
            return Err(Error::Diagram(format!("kink position {pos} out of range")));
        }
        let mut events = self.events.clone();
        events.extend([MorseEvent::CupR(pos + 1), MorseEvent::CrossNeg(pos), MorseEvent::Cap(pos)]);
        MorseWord::new(self.n, self.colors.clone(), events)
    }

    /// Negative horizontal twist on strand `k` (1-based). The strand is
    /// returned from its top endpoint down to the bottom, twisted twice
    /// around its own start, and brought back up. For `k > 1` the returning
    /// band is routed over the strands to its left.
    pub fn add_twist(&self, k: usize) -> Result<MorseWord> {
        if k == 0 || k > self.n {
            return Err(Error::Diagram(format!("twist strand {k} out of range")));
        }
        if !self.is_pure()? {
            return Err(Error::Diagram("twists are defined on pure words".into()));
        }
        use MorseEvent::*;
        let mut ev = vec![CupL(k), CrossPos(k + 1), CrossPos(k + 1)];
        // band pieces p (position k) and q (k + 1) move to the far left
        for j in (1..k).rev() {
            ev.push(CrossNeg(j));
        }
        for j in (2..=k).rev() {
            ev.push(CrossNeg(j));
        }
        ev.extend(self.events.iter().map(|e| e.shifted(2)));
        for j in 2..=k {
            ev.push(CrossPos(j));
        }
        for j in 1..k {
            ev.push(CrossPos(j));
        }
        ev.push(Cap(k + 1));
        MorseWord::new(self.n, self.colors.clone(), ev)
    }

    /// Changes the crossing at 1-based event index `idx`.
    pub fn flip_crossing(&self, idx: usize) -> Result<MorseWord> {
        let mut events = self.events.clone();
        let ev = idx.checked_sub(1).and_then(|i| events.get_mut(i));
        match ev {
            Some(e @ MorseEvent::CrossPos(_)) => *e = MorseEvent::CrossNeg(e.position()),
            Some(e @ MorseEvent::CrossNeg(_)) => *e = MorseEvent::CrossPos(e.position()),
            _ => return Err(Error::Diagram(format!("event {idx} is not a crossing"))),
        }
        MorseWord::new(self.n, self.colors.clone(), events)
    }

    /// 1-based event indices of all crossings.
    pub fn crossing_events(&self) -> Vec<usize> {
        self.events.iter().enumerate().filter(|(_, e)| e.is_crossing()).map(|(i, _)| i + 1).collect()
    }

    /// Braid word with generators `(i, positive)`, `1 <= i < n`. Strands
    /// are colored by the cycles of the braid permutation.
    pub fn from_braid(n: usize, word: &[(usize, bool)]) -> Result<MorseWord> {
        let mut events = Vec::with_capacity(word.len());
        for &(i, pos) in word {
            if i == 0 || i >= n {
                return Err(Error::Diagram(format!("generator s{i} out of range for {n} strands")));
            }
            events.push(if pos { MorseEvent::CrossPos(i) } else { MorseEvent::CrossNeg(i) });
        }
        let mut perm: Vec<usize> = (0..n).collect();
        // perm[pos] = starting strand at this position
        for &(i, _) in word {
            perm.swap(i - 1, i);
        }
        let mut to_top = vec![0; n];
        for (p, &s) in perm.iter().enumerate() {
            to_top[s] = p;
        }
        let colors = cycle_colors(&to_top);
        MorseWord::new(n, colors, events)
    }

    pub(crate) fn trace_raw(&self) -> Result<trace::RawTrace> {
        trace::RawTrace::run(self)
    }

    /// Traces the word into arcs and crossings, first adding a kink to
    /// every strand that never passes under a crossing.
    pub fn trace(&self) -> Result<Diagram> {
        Diagram::from_word(self)
    }

    /// Canonical DSL text.
    pub fn to_dsl(&self) -> String {
        let mut s = format!("sl {}\ncolors", self.n);
        for c in &self.colors {
            s.push_str(&format!(" {c}"));
        }
        s.push('\n');
        for e in &self.events {
            s.push_str(&format!("{e}\n"));
        }
        s.push_str("end\n");
        s
    }
}

/// Applies one event to the orientations of the live strands.
pub(crate) fn step(state: &mut Vec<bool>, ev: &MorseEvent) -> std::result::Result<(), String> {
    let i = ev.position();
    let len = state.len();
    let out_of_range = || format!("position {i} out of range for {len} strands");
    match ev {
        MorseEvent::CrossPos(_) | MorseEvent::CrossNeg(_) => {
            if i == 0 || i + 1 > len {
                return Err(out_of_range());
            }
            state.swap(i - 1, i);
        }
        MorseEvent::Cap(_) => {
            if i == 0 || i + 1 > len {
                return Err(out_of_range());
            }
            if state[i - 1] == state[i] {
                return Err("cap joins strands with the same orientation".into());
            }
            state.drain(i - 1..=i);
        }
        MorseEvent::CupL(_) | MorseEvent::CupR(_) => {
            if i == 0 || i > len + 1 {
                return Err(out_of_range());
            }
            let left_up = matches!(ev, MorseEvent::CupL(_));
            state.insert(i - 1, !left_up);
            state.insert(i - 1, left_up);
        }
    }
    Ok(())
}

pub(crate) fn check_end(n: usize, state: &[bool]) -> std::result::Result<(), String> {
    if state.len() != n {
        return Err(format!("word ends with {} strands, expected {n}", state.len()));
    }
    if state.iter().any(|up| !up) {
        return Err("a top endpoint is oriented downward".into());
    }
    Ok(())
}

pub(crate) fn validate_colors(n: usize, colors: &[usize]) -> Result<()> {
    if colors.len() != n {
        return Err(Error::Diagram(format!("{} colors given for {n} strands", colors.len())));
    }
    let m = colors.iter().copied().max().unwrap_or(0);
    if colors.contains(&0) {
        return Err(Error::Diagram("colors are numbered from 1".into()));
    }
    for c in 1..=m {
        if !colors.contains(&c) {
            return Err(Error::Diagram(format!("colors must be 1..{m}; {c} is missing")));
        }
    }
    Ok(())
}

/// Colors 1..m by cycles of `to_top`, numbered by smallest element.
fn cycle_colors(to_top: &[usize]) -> Vec<usize> {
    let n = to_top.len();
    let mut colors = vec![0; n];
    let mut next = 0;
    for s in 0..n {
        if colors[s] != 0 {
            continue;
        }
        next += 1;
        let mut i = s;
        while colors[i] == 0 {
            colors[i] = next;
            i = to_top[i];
        }
    }
    colors
}

/// Full positive twist `(s1 s2 ... s_{n-1})^n`.
pub fn full_twist_word(n: usize) -> MorseWord {
    let gens: Vec<(usize, bool)> = (0..n).flat_map(|_| (1..n).map(|i| (i, true))).collect();
    MorseWord::from_braid(n, &gens).expect("valid generators")
}

impl fmt::Display for MorseWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_dsl())
    }
}
