//! Wirtinger presentations of traced diagrams and their Fox derivatives.

use std::fmt::Write;

use num::{BigRational, Signed, Zero};

use crate::algebra::text::{default_var_names, format_poly};
use crate::algebra::{LaurentPoly, Monomial, RatFunc, RatMatrix};
use crate::diagram::Diagram;
use crate::error::{Error, Result};

/// Letter of a group word: generator index and exponent `±1`.
pub type Letter = (usize, i8);

#[derive(Clone, Debug)]
pub struct WirtingerPresentation {
    pub n: usize,
    pub c: usize,
    pub nvars: usize,
    /// 0-based color of each generator, in the order
    /// `mu_1..mu_n, z_1..z_{c-n}, mu'_1..mu'_n`.
    pub colors: Vec<usize>,
    pub relators: Vec<Vec<Letter>>,
}

impl WirtingerPresentation {
    pub fn generator_count(&self) -> usize {
        self.colors.len()
    }

    pub fn generator_name(&self, g: usize) -> String {
        let (n, c) = (self.n, self.c);
        if g < n {
            format!("mu{}", g + 1)
        } else if g < c {
            format!("z{}", g - n + 1)
        } else {
            format!("mu'{}", g - c + 1)
        }
    }
}

/// One relator per crossing: `u_out = o^{-s} u_in o^{s}` with `s` the
/// crossing sign, written as `o^{-s} u_in o^{s} u_out^{-1}`.
pub fn presentation(d: &Diagram) -> WirtingerPresentation {
    let relators = d
        .crossings
        .iter()
        .map(|x| {
            let s = x.sign;
            vec![(x.over_arc, -s), (x.under_in_arc, 1), (x.over_arc, s), (x.under_out_arc, -1)]
        })
        .collect();
    WirtingerPresentation {
        n: d.n,
        c: d.crossing_count(),
        nvars: d.ncolors,
        colors: d.arcs.iter().map(|a| a.color).collect(),
        relators,
    }
}

/// Fox derivatives of `word` with respect to every generator, pushed
/// through the abelianization `g -> t_{color(g)}`.
pub fn fox_row(word: &[Letter], colors: &[usize], nvars: usize) -> Vec<LaurentPoly> {
    let mut row = vec![LaurentPoly::zero(nvars); colors.len()];
    let mut prefix = Monomial::one(nvars);
    for &(g, e) in word {
        let t = Monomial::var(nvars, colors[g], 1);
        if e > 0 {
            row[g] += &LaurentPoly::monomial(prefix.clone());
            prefix = prefix.mul(&t);
        } else {
            prefix = prefix.div(&t);
            row[g] -= &LaurentPoly::monomial(prefix.clone());
        }
    }
    row
}

/// The Wirtinger-Fox matrix `(A B C)`, stored as full rows over all
/// generators.
#[derive(Clone, Debug)]
pub struct FoxMatrix {
    pub n: usize,
    pub c: usize,
    pub nvars: usize,
    pub colors: Vec<usize>,
    pub rows: Vec<Vec<LaurentPoly>>,
}

pub fn fox_matrix(p: &WirtingerPresentation) -> FoxMatrix {
    FoxMatrix {
        n: p.n,
        c: p.c,
        nvars: p.nvars,
        colors: p.colors.clone(),
        rows: p.relators.iter().map(|r| fox_row(r, &p.colors, p.nvars)).collect(),
    }
}

impl FoxMatrix {
    pub fn from_diagram(d: &Diagram) -> FoxMatrix {
        fox_matrix(&presentation(d))
    }

    fn block(&self, from: usize, to: usize) -> RatMatrix {
        RatMatrix::from_fn(self.c, to - from, self.nvars, |i, j| RatFunc::from_poly(self.rows[i][from + j].clone()))
    }

    pub fn a(&self) -> RatMatrix {
        self.block(0, self.n)
    }

    pub fn b(&self) -> RatMatrix {
        self.block(self.n, self.c)
    }

    pub fn c_block(&self) -> RatMatrix {
        self.block(self.c, self.c + self.n)
    }

    /// The square block `(A B)`.
    pub fn ab(&self) -> RatMatrix {
        self.block(0, self.c)
    }

    pub fn full(&self) -> RatMatrix {
        self.block(0, self.c + self.n)
    }

    /// Variable `t_{color(g)}` of generator `g`.
    pub fn epsilon(&self, g: usize) -> LaurentPoly {
        LaurentPoly::var(self.nvars, self.colors[g])
    }

    /// Labeled text dump of `(A B C)`.
    pub fn dump(&self, p: &WirtingerPresentation) -> String {
        let names = default_var_names(self.nvars);
        let mut out = String::new();
        let _ = write!(out, "relator");
        for g in 0..self.colors.len() {
            let _ = write!(out, "\t{}", p.generator_name(g));
        }
        out.push('\n');
        for (i, row) in self.rows.iter().enumerate() {
            let _ = write!(out, "r{}", i + 1);
            for x in row {
                let _ = write!(out, "\t{}", format_poly(x, &names));
            }
            out.push('\n');
        }
        out
    }
}

/// Value at `t = 1` of `det(A B)`. It must be `±1`.
pub fn check_augmentation(f: &FoxMatrix) -> Result<i8> {
    let m = RatMatrix::from_fn(f.c, f.c, 0, |i, j| {
        RatFunc::from_poly(LaurentPoly::constant(0, f.rows[i][j].augment()))
    });
    let d = m.det()?;
    let v: BigRational = d.to_poly().and_then(|p| p.constant_value()).unwrap_or_else(BigRational::zero);
    if v.abs() == BigRational::from_integer(1.into()) {
        Ok(if v.is_positive() { 1 } else { -1 })
    } else {
        Err(Error::Invariant(format!("augmented det(A B) = {v}, expected ±1")))
    }
}

/// `(A B C) f` for the coboundary labels `f(g) = 1 - t_{color(g)}`; zero
/// on every valid diagram.
pub fn coboundary_residual(f: &FoxMatrix) -> Vec<LaurentPoly> {
    let one = LaurentPoly::one(f.nvars);
    f.rows
        .iter()
        .map(|row| {
            row.iter().enumerate().fold(LaurentPoly::zero(f.nvars), |acc, (g, x)| {
                &acc + &(x * &(&one - &f.epsilon(g)))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::text::parse_poly;
    use crate::diagram::{MorseEvent::*, MorseWord};

    fn hopf() -> Diagram {
        MorseWord::new(2, vec![1, 2], vec![CrossPos(1), CrossPos(1)]).unwrap().trace().unwrap()
    }

    #[test]
    fn crossing_relator_shape() {
        // mu2 z3 mu2^-1 z2^-1 with mu2 colored 2 and z3 colored 1
        let colors = [0, 1, 0, 0, 0];
        let row = fox_row(&[(1, 1), (4, 1), (1, -1), (3, -1)], &colors, 2);
        let n = default_var_names(2);
        assert_eq!(row[1], parse_poly("1 - t1", &n).unwrap());
        assert_eq!(row[4], parse_poly("t2", &n).unwrap());
        assert_eq!(row[3], parse_poly("-1", &n).unwrap());
        assert!(row[0].is_zero() && row[2].is_zero());
    }

    #[test]
    fn two_letter_relator() {
        let row = fox_row(&[(1, 1), (0, -1)], &[0, 0], 1);
        assert_eq!(row[1].augment(), BigRational::from_integer(1.into()));
        assert_eq!(row[0].augment(), BigRational::from_integer((-1).into()));
    }

    #[test]
    fn hopf_presentation() {
        let d = hopf();
        let p = presentation(&d);
        assert_eq!(p.generator_count(), 4);
        assert_eq!(p.relators.len(), 2);
        let f = fox_matrix(&p);
        assert_eq!(check_augmentation(&f).unwrap().abs(), 1);
        assert!(coboundary_residual(&f).iter().all(|x| x.is_zero()));
        assert!(f.dump(&p).starts_with("relator\tmu1\tmu2\tmu'1\tmu'2"));
    }

    #[test]
    fn kinked_strand() {
        let d = MorseWord::trivial(1).trace().unwrap();
        let p = presentation(&d);
        assert_eq!((p.generator_count(), p.relators.len()), (2, 1));
        let f = fox_matrix(&p);
        assert_eq!(check_augmentation(&f).unwrap().abs(), 1);
    }

    #[test]
    fn corrupted_row_fails() {
        let mut f = FoxMatrix::from_diagram(&hopf());
        f.rows[0] = f.rows[1].clone();
        assert!(check_augmentation(&f).is_err());
    }
}
