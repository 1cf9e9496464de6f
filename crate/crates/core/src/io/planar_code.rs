//! The planar_code binary stream: optional `>>planar_code<<` header, then per
//! graph one byte `n` followed by each vertex's 1-based neighbours in
//! rotation order, each list closed by a zero byte. Only the one-byte
//! variant (n <= 255) is supported.

use crate::embedding::RotationSystem;
use crate::error::{Error, Result};

const HEADERS: [&[u8]; 3] = [b">>planar_code<<", b">>planar_code le<<", b">>planar_code be<<"];

fn malformed(record: usize, reason: impl Into<String>) -> Error {
    Error::MalformedPlanarCode { record, reason: reason.into() }
}

/// Iterator over the records of a planar_code stream.
pub struct PlanarCodeRecords<'a> {
    data: &'a [u8],
    pos: usize,
    record: usize,
    failed: bool,
}

impl<'a> PlanarCodeRecords<'a> {
    pub fn new(data: &'a [u8]) -> Self {
        let pos = HEADERS.iter().find(|h| data.starts_with(h)).map_or(0, |h| h.len());
        PlanarCodeRecords { data, pos, record: 0, failed: false }
    }

    fn read_record(&mut self) -> Result<RotationSystem> {
        let record = self.record;
        let n = self.data[self.pos] as usize;
        self.pos += 1;
        if n == 0 {
            return Err(malformed(record, "two-byte (n > 255) records are not supported"));
        }
        let mut rotation = Vec::with_capacity(n);
        for v in 0..n {
            let mut nbrs = Vec::new();
            loop {
                let Some(&b) = self.data.get(self.pos) else {
                    return Err(malformed(record, format!("truncated in the list of vertex {}", v + 1)));
                };
                self.pos += 1;
                if b == 0 {
                    break;
                }
                if b as usize > n {
                    return Err(malformed(record, format!("vertex {} lists neighbour {b} > n={n}", v + 1)));
                }
                nbrs.push(b as usize - 1);
            }
            rotation.push(nbrs);
        }
        RotationSystem::new(rotation).map_err(|e| malformed(record, e.to_string()))
    }
}

impl Iterator for PlanarCodeRecords<'_> {
    type Item = Result<RotationSystem>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed || self.pos >= self.data.len() {
            return None;
        }
        let out = self.read_record();
        self.failed = out.is_err();
        self.record += 1;
        Some(out)
    }
}

pub fn parse_planar_code(data: &[u8]) -> Result<Vec<RotationSystem>> {
    PlanarCodeRecords::new(data).collect()
}

/// Encodes rotation systems with a header; fails for `n = 0` or `n > 255`.
pub fn write_planar_code(rotations: &[RotationSystem]) -> Result<Vec<u8>> {
    let mut out = HEADERS[0].to_vec();
    for (i, r) in rotations.iter().enumerate() {
        let n = r.n();
        if n == 0 || n > 255 {
            return Err(malformed(i, format!("cannot encode n={n} in one-byte planar_code")));
        }
        out.push(n as u8);
        for v in 0..n {
            out.extend(r.rotation(v).iter().map(|&u| (u + 1) as u8));
            out.push(0);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_bytes() -> Vec<u8> {
        let mut b = b">>planar_code<<".to_vec();
        b.extend_from_slice(&[3, 2, 3, 0, 3, 1, 0, 1, 2, 0]);
        b
    }

    #[test]
    fn hand_encoded_triangle() {
        let rs = parse_planar_code(&triangle_bytes()).unwrap();
        assert_eq!(rs.len(), 1);
        assert_eq!(rs[0].rotations(), &[vec![1, 2], vec![2, 0], vec![0, 1]]);
        // header is optional
        let rs = parse_planar_code(&triangle_bytes()[15..]).unwrap();
        assert_eq!(rs.len(), 1);
        assert_eq!(write_planar_code(&rs).unwrap(), triangle_bytes());
    }

    #[test]
    fn empty_stream() {
        assert!(parse_planar_code(b">>planar_code<<").unwrap().is_empty());
        assert!(parse_planar_code(b"").unwrap().is_empty());
    }

    #[test]
    fn truncated_and_bad_records() {
        let b = triangle_bytes();
        let mut two = b.clone();
        two.extend_from_slice(&b[15..b.len() - 2]);
        assert!(matches!(parse_planar_code(&two), Err(Error::MalformedPlanarCode { record: 1, .. })));
        assert!(matches!(parse_planar_code(&[0, 0, 3]), Err(Error::MalformedPlanarCode { record: 0, .. })));
        assert!(matches!(parse_planar_code(&[2, 3, 0, 1, 0]), Err(Error::MalformedPlanarCode { .. })));
        // dangling dart: 1 lists 2 but 2 lists nothing
        assert!(matches!(parse_planar_code(&[2, 2, 0, 0]), Err(Error::MalformedPlanarCode { .. })));
    }

    #[test]
    fn iterator_stops_after_error() {
        let mut it = PlanarCodeRecords::new(&[2, 3, 0, 1, 0, 3, 2, 3, 0, 3, 1, 0, 1, 2, 0]);
        assert!(it.next().unwrap().is_err());
        assert!(it.next().is_none());
    }
}
