//! 1-based cycle notation, e.g. `(1, 2, 4)(3, 6, 11)`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::{Permutation, Point};
use crate::error::{Error, ParseErrorKind, Result};

/// Disjoint cycles over 1-based labels in canonical order: each cycle starts
/// at its smallest label, cycles sorted by first label, no 1-cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleForm {
    pub degree: usize,
    pub cycles: Vec<Vec<usize>>,
}

impl CycleForm {
    pub fn of(p: &Permutation) -> CycleForm {
        let n = p.degree();
        let mut seen = alloc::vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || p.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j + 1);
                j = p.images[j] as usize;
            }
            cycles.push(cycle);
        }
        CycleForm { degree: n, cycles }
    }

    pub fn to_permutation(&self) -> Result<Permutation> {
        let zero_based: Vec<Vec<Point>> = self
            .cycles
            .iter()
            .map(|c| c.iter().map(|&l| l.wrapping_sub(1) as Point).collect())
            .collect();
        let refs: Vec<&[Point]> = zero_based.iter().map(|c| c.as_slice()).collect();
        Permutation::from_cycles(self.degree, &refs)
    }
}

pub fn format_cycles(p: &Permutation) -> String {
    let form = CycleForm::of(p);
    if form.cycles.is_empty() {
        return String::from("()");
    }
    let mut out = String::new();
    for cycle in &form.cycles {
        out.push('(');
        for (k, label) in cycle.iter().enumerate() {
            if k > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "{label}");
        }
        out.push(')');
    }
    out
}

/// Raw cycles with the byte offset of each label.
type RawCycles = Vec<Vec<(usize, usize)>>;

fn tokenize(text: &str, degree: usize) -> Result<RawCycles> {
    let err = |position, kind| Err(Error::Parse { position, kind });
    let bytes = text.as_bytes();
    let mut cycles: RawCycles = Vec::new();
    let mut current: Option<Vec<(usize, usize)>> = None;
    let mut open_at = 0;
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b'(' => {
                if current.is_some() {
                    return err(i, ParseErrorKind::Unbalanced);
                }
                current = Some(Vec::new());
                open_at = i;
                i += 1;
            }
            b')' => match current.take() {
                Some(cycle) => {
                    cycles.push(cycle);
                    i += 1;
                }
                None => return err(i, ParseErrorKind::Unbalanced),
            },
            b',' => {
                if current.is_none() {
                    return err(i, ParseErrorKind::UnexpectedChar(','));
                }
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let Some(cycle) = current.as_mut() else {
                    return err(start, ParseErrorKind::UnexpectedChar(c as char));
                };
                let label: usize = text[start..i].parse().map_err(|_| Error::Parse {
                    position: start,
                    kind: ParseErrorKind::BadNumber,
                })?;
                if label == 0 || label > degree {
                    return err(start, ParseErrorKind::LabelOutOfRange { label, degree });
                }
                cycle.push((label, start));
            }
            c if c.is_ascii_whitespace() => i += 1,
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return err(i, ParseErrorKind::UnexpectedChar(ch));
            }
        }
    }
    if current.is_some() {
        return err(open_at, ParseErrorKind::Unbalanced);
    }
    Ok(cycles)
}

/// Parses disjoint cycles. Empty text and `()` denote the identity.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    if degree == 0 {
        return Err(Error::EmptyDegree);
    }
    let cycles = tokenize(text, degree)?;
    let mut images: Vec<Point> = (0..degree as Point).collect();
    let mut used = alloc::vec![false; degree];
    for cycle in &cycles {
        for (k, &(label, pos)) in cycle.iter().enumerate() {
            if used[label - 1] {
                return Err(Error::Parse {
                    position: pos,
                    kind: ParseErrorKind::RepeatedLabel(label),
                });
            }
            used[label - 1] = true;
            let next = cycle[(k + 1) % cycle.len()].0;
            images[label - 1] = (next - 1) as Point;
        }
    }
    Ok(Permutation::from_images_unchecked(images))
}

/// Parses a product of possibly overlapping cycles, applied left to right.
/// A label may not repeat inside a single cycle.
pub fn parse_cycle_product(text: &str, degree: usize) -> Result<Permutation> {
    if degree == 0 {
        return Err(Error::EmptyDegree);
    }
    let cycles = tokenize(text, degree)?;
    let mut acc = Permutation::identity(degree);
    let mut used = alloc::vec![usize::MAX; degree];
    for (ci, cycle) in cycles.iter().enumerate() {
        let mut step: Vec<Point> = (0..degree as Point).collect();
        for (k, &(label, pos)) in cycle.iter().enumerate() {
            if used[label - 1] == ci {
                return Err(Error::Parse {
                    position: pos,
                    kind: ParseErrorKind::RepeatedLabel(label),
                });
            }
            used[label - 1] = ci;
            step[label - 1] = (cycle[(k + 1) % cycle.len()].0 - 1) as Point;
        }
        acc = acc.compose_unchecked(&Permutation::from_images_unchecked(step));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_unit_parse_to_identity() {
        assert!(parse_cycles("", 5).unwrap().is_identity());
        assert!(parse_cycles("()", 5).unwrap().is_identity());
        assert!(parse_cycles("  ( 3 ) ", 5).unwrap().is_identity());
        assert_eq!(format_cycles(&Permutation::identity(4)), "()");
    }

    #[test]
    fn canonical_format() {
        let p = parse_cycles("(15, 26, 21)(3,2)", 30).unwrap();
        assert_eq!(format_cycles(&p), "(2, 3)(15, 26, 21)");
        let q = parse_cycles("(26 21 15)", 30).unwrap();
        assert_eq!(format_cycles(&q), "(15, 26, 21)");
    }

    #[test]
    fn repeated_label_reports_position() {
        let e = parse_cycles("(1,2)(2,3)", 3).unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                position: 6,
                kind: ParseErrorKind::RepeatedLabel(2)
            }
        );
    }

    #[test]
    fn out_of_range_and_unbalanced() {
        assert!(matches!(
            parse_cycles("(1,6)", 5),
            Err(Error::Parse {
                position: 3,
                kind: ParseErrorKind::LabelOutOfRange { label: 6, degree: 5 }
            })
        ));
        assert!(matches!(
            parse_cycles("(0,1)", 5),
            Err(Error::Parse {
                kind: ParseErrorKind::LabelOutOfRange { .. },
                ..
            })
        ));
        assert!(matches!(
            parse_cycles("(1,2", 5),
            Err(Error::Parse {
                position: 0,
                kind: ParseErrorKind::Unbalanced
            })
        ));
        assert!(matches!(parse_cycles("1,2)", 5), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(
            parse_cycles("((1,2))", 5),
            Err(Error::Parse {
                position: 1,
                kind: ParseErrorKind::Unbalanced
            })
        ));
        assert!(matches!(
            parse_cycles("(1;2)", 5),
            Err(Error::Parse {
                position: 2,
                kind: ParseErrorKind::UnexpectedChar(';')
            })
        ));
    }

    #[test]
    fn product_of_overlapping_cycles() {
        // (1,2) then (2,3): 1 -> 2 -> 3, 2 -> 1, 3 -> 2
        let p = parse_cycle_product("(1,2)(2,3)", 3).unwrap();
        assert_eq!(p, parse_cycles("(1,3,2)", 3).unwrap());
        assert!(parse_cycle_product("(1,2,1)", 3).is_err());
        // disjoint input agrees with the strict parser
        let s = "(1,4)(2,5,3)";
        assert_eq!(parse_cycle_product(s, 6).unwrap(), parse_cycles(s, 6).unwrap());
    }

    #[test]
    fn cycle_form_round_trip() {
        let p = parse_cycles("(1,5,2)(3,4)", 7).unwrap();
        let form = CycleForm::of(&p);
        assert_eq!(form.cycles, alloc::vec![alloc::vec![1, 5, 2], alloc::vec![3, 4]]);
        assert_eq!(form.to_permutation().unwrap(), p);
    }
}
