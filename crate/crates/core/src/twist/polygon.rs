//! Cut-open polygon model of a torus with `q` holes, and the chord engine
//! that turns a curve into its Dehn twist automorphism.
//!
//! The surface is cut along a vertical arc `v` and horizontal arcs
//! `h_1..h_q` (each running between consecutive holes at mid height), which
//! leaves a disk. Its boundary, read counterclockwise, alternates between
//! arc copies and pieces of the boundary circles. Each arc has an `out`
//! copy (parameter increasing counterclockwise) and an `in` copy
//! (decreasing). Leaving through `out` and re-entering through `in` is the
//! positive letter of that arc.
//!
//! Generator numbering: `h_i` is letter `i`, `v` is letter `q+1`, and the
//! arc from the basepoint on `c_1` to a point on `c_i` (`i >= 2`) is letter
//! `q+i`. Positions on the disk boundary are integers `side * UNIT + t`.

use crate::free_group::FreeWord;

pub(crate) const UNIT: i64 = 1000;
const MID: i64 = UNIT / 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Corner {
    TopRight,
    TopLeft,
    BottomLeft,
    BottomRight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    /// Corner piece of the first boundary circle.
    Outer(Corner),
    /// Upper half of boundary circle `i >= 2`.
    Top(usize),
    /// Lower half of boundary circle `i >= 2`.
    Bottom(usize),
    Arc { arc: usize, out: bool },
}

/// A crossing of a closed curve with a cut arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Crossing {
    pub arc: usize,
    /// `+1` when leaving through the `out` copy.
    pub sign: i8,
    /// Position along the arc, in `(0, UNIT)`.
    pub param: i64,
}

impl Crossing {
    pub const fn new(arc: usize, sign: i8, param: i64) -> Self {
        Self { arc, sign, param }
    }
}

type Chord = (i64, i64);

#[derive(Debug, Clone)]
pub(crate) struct Polygon {
    q: usize,
    sides: Vec<Side>,
}

impl Polygon {
    pub fn torus_with_holes(q: usize) -> Self {
        assert!(q >= 1);
        let mut sides = vec![Side::Outer(Corner::TopRight)];
        for i in 0..q {
            sides.push(Side::Arc { arc: i, out: true });
            if i + 1 < q {
                sides.push(Side::Top(i + 2));
            }
        }
        sides.push(Side::Outer(Corner::TopLeft));
        sides.push(Side::Arc { arc: q, out: true });
        sides.push(Side::Outer(Corner::BottomLeft));
        for i in (0..q).rev() {
            sides.push(Side::Arc { arc: i, out: false });
            if i > 0 {
                sides.push(Side::Bottom(i + 1));
            }
        }
        sides.push(Side::Outer(Corner::BottomRight));
        sides.push(Side::Arc { arc: q, out: false });
        Self { q, sides }
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Index of the horizontal arc `h_i`.
    pub fn h(&self, i: usize) -> usize {
        assert!((1..=self.q).contains(&i));
        i - 1
    }

    /// Index of the vertical arc.
    pub fn v(&self) -> usize {
        self.q
    }

    pub fn loop_rank(&self) -> usize {
        self.q + 1
    }

    pub fn rank(&self) -> usize {
        2 * self.q
    }

    fn len(&self) -> i64 {
        self.sides.len() as i64 * UNIT
    }

    fn side_index(&self, s: Side) -> i64 {
        self.sides.iter().position(|&x| x == s).expect("side present") as i64
    }

    fn arc_pos(&self, arc: usize, out: bool, t: i64) -> i64 {
        let k = self.side_index(Side::Arc { arc, out });
        k * UNIT + if out { t } else { UNIT - t }
    }

    pub fn basepoint(&self) -> i64 {
        self.side_index(Side::Outer(Corner::BottomRight)) * UNIT + MID
    }

    /// Endpoint on boundary circle `i >= 2` of the arc generator `q+i`.
    pub fn hole_point(&self, i: usize) -> i64 {
        self.side_index(Side::Bottom(i)) * UNIT + MID
    }

    fn between(&self, a: i64, x: i64, b: i64) -> bool {
        let l = self.len();
        let (a, x, b) = (a.rem_euclid(l), x.rem_euclid(l), b.rem_euclid(l));
        if a < b {
            a < x && x < b
        } else {
            x > a || x < b
        }
    }

    fn crosses(&self, c1: Chord, c2: Chord) -> bool {
        let (u, w) = c1;
        let (s, t) = c2;
        self.between(u, s, w) != self.between(u, t, w)
    }

    /// Sign of the crossing of segment `seg` with chord `ch`.
    fn local_sign(&self, seg: Chord, ch: Chord) -> i32 {
        if self.between(seg.0, ch.0, seg.1) {
            -1
        } else {
            1
        }
    }

    pub fn letter(&self, c: &Crossing) -> i32 {
        (c.arc as i32 + 1) * i32::from(c.sign)
    }

    pub fn letters(&self, curve: &[Crossing]) -> Vec<i32> {
        curve.iter().map(|c| self.letter(c)).collect()
    }

    /// Chord `k` runs from the entry of crossing `k` to the exit of crossing `k+1`.
    fn chords(&self, curve: &[Crossing]) -> Vec<Chord> {
        let n = curve.len();
        let exit = |c: &Crossing| self.arc_pos(c.arc, c.sign > 0, c.param);
        let entry = |c: &Crossing| self.arc_pos(c.arc, c.sign < 0, c.param);
        (0..n).map(|k| (entry(&curve[k]), exit(&curve[(k + 1) % n]))).collect()
    }

    /// Size of the side of `ch` containing `x`; nested chords around `x` sort
    /// innermost first.
    fn depth(&self, ch: Chord, x: i64) -> i64 {
        let l = self.len();
        if self.between(ch.0, x, ch.1) {
            (ch.1 - ch.0).rem_euclid(l)
        } else {
            (ch.0 - ch.1).rem_euclid(l)
        }
    }

    /// The loop around `curve` read from a point just inside chord `k`.
    fn loop_from(letters: &[i32], k: usize, sign: i32) -> impl Iterator<Item = i32> + '_ {
        let n = letters.len();
        (0..n).map(move |i| {
            if sign > 0 {
                letters[(k + 1 + i) % n]
            } else {
                -letters[(k + n - i % n) % n]
            }
        })
    }

    /// Letters picked up by the segment `seg` when pushed across the twist.
    fn insertions(&self, curve: &[Crossing], seg: Chord, power: i32) -> Vec<i32> {
        let chords = self.chords(curve);
        let letters = self.letters(curve);
        let mut hits: Vec<(i64, usize, i32)> = chords
            .iter()
            .enumerate()
            .filter(|(_, &ch)| self.crosses(seg, ch))
            .map(|(k, &ch)| (self.depth(ch, seg.0), k, self.local_sign(seg, ch)))
            .collect();
        hits.sort();
        let mut out = Vec::new();
        for (_, k, e) in hits {
            out.extend(Self::loop_from(&letters, k, e * power));
        }
        out
    }

    /// Images of all generators under the twist along `curve` (`power = ±1`).
    pub fn twist_images(&self, curve: &[Crossing], power: i32) -> Vec<FreeWord> {
        let p = self.basepoint();
        let mut images = Vec::with_capacity(self.rank());
        for arc in 0..=self.q {
            let exit = self.arc_pos(arc, true, MID);
            let entry = self.arc_pos(arc, false, MID);
            let mut w = self.insertions(curve, (p, exit), power);
            w.push(arc as i32 + 1);
            w.extend(self.insertions(curve, (entry, p), power));
            images.push(FreeWord::reduce_unchecked(w));
        }
        for i in 2..=self.q {
            let mut w = self.insertions(curve, (p, self.hole_point(i)), power);
            w.push((self.q + i) as i32);
            images.push(FreeWord::reduce_unchecked(w));
        }
        images
    }

    /// Loop around `curve` read from the innermost chord enclosing `x`.
    pub fn enclosing_loop(&self, curve: &[Crossing], x: i64) -> Vec<i32> {
        let chords = self.chords(curve);
        let letters = self.letters(curve);
        let k = (0..chords.len())
            .min_by_key(|&k| (self.depth(chords[k], x), k))
            .expect("curve has crossings");
        Self::loop_from(&letters, k, 1).collect()
    }

    /// Boundary loops: the first circle read from the basepoint, and circle
    /// `i >= 2` as `g_i^{-1} u_i g_i`.
    pub fn boundary_words(&self, boundary_curves: &[Vec<Crossing>]) -> Vec<FreeWord> {
        boundary_curves
            .iter()
            .enumerate()
            .map(|(idx, curve)| {
                if idx == 0 {
                    FreeWord::reduce_unchecked(self.enclosing_loop(curve, self.basepoint()))
                } else {
                    let i = idx + 1;
                    let g = (self.q + i) as i32;
                    let u = self.enclosing_loop(curve, self.hole_point(i));
                    FreeWord::reduce_unchecked(std::iter::once(-g).chain(u).chain([g]))
                }
            })
            .collect()
    }

    /// Number of transverse intersections between two curves.
    pub fn intersection_count(&self, c1: &[Crossing], c2: &[Crossing]) -> u32 {
        let a = self.chords(c1);
        let b = self.chords(c2);
        a.iter().map(|&x| b.iter().filter(|&&y| self.crosses(x, y)).count() as u32).sum()
    }

    /// Algebraic intersection of `curve` with each loop generator: the signed
    /// count of crossings between the curve and the generator's two segments.
    pub fn pairing_with_generators(&self, curve: &[Crossing]) -> Vec<i64> {
        let chords = self.chords(curve);
        let p = self.basepoint();
        (0..=self.q)
            .map(|arc| {
                let segs = [(p, self.arc_pos(arc, true, MID)), (self.arc_pos(arc, false, MID), p)];
                segs.iter()
                    .map(|&s| {
                        chords
                            .iter()
                            .filter(|&&c| self.crosses(s, c))
                            .map(|&c| i64::from(self.local_sign(s, c)))
                            .sum::<i64>()
                    })
                    .sum()
            })
            .collect()
    }

    /// Intersection form on the loop generators, computed from a pushed-off
    /// copy: generator `i` is the curve, generator `j` the segments from a
    /// shifted basepoint through shifted arc points.
    pub fn intersection_form(&self) -> Vec<Vec<i64>> {
        let n = self.q + 1;
        let p = self.basepoint();
        let shift = UNIT / 20;
        let generator_chords = |arc: usize, base: i64, t: i64| {
            [(base, self.arc_pos(arc, true, t)), (self.arc_pos(arc, false, t), base)]
        };
        let mut form = vec![vec![0; n]; n];
        for (i, row) in form.iter_mut().enumerate() {
            let ci = generator_chords(i, p, MID);
            for (j, entry) in row.iter_mut().enumerate() {
                if i == j {
                    continue;
                }
                let cj = generator_chords(j, p + shift, MID + shift);
                let mut total = 0;
                for &s in &cj {
                    for &c in &ci {
                        if self.crosses(s, c) {
                            total += i64::from(self.local_sign(s, c));
                        }
                    }
                }
                *entry = total;
            }
        }
        form
    }
}
