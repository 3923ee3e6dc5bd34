use crate::coloring::md_check;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ORACLE_MAX_EDGES: usize = 10;

/// md(G) by brute force: every set partition of the edge set (as a
/// restricted growth string) is tested with the MD predicate.
pub fn md_oracle(g: &Graph) -> Result<usize> {
    let m = g.m();
    if m > ORACLE_MAX_EDGES {
        return Err(Error::SizeCap {
            what: "edge count for the brute-force oracle",
            value: m,
            cap: ORACLE_MAX_EDGES,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if m == 0 {
        return Ok(0);
    }
    // rgs[i] is the part of edge i (1-based); max[i] is the largest part
    // among rgs[..=i].
    let mut rgs = vec![1usize; m];
    let mut max = vec![1usize; m];
    let mut best = 0;
    loop {
        if max[m - 1] > best && md_check(g, &rgs) {
            best = max[m - 1];
        }
        // Advance to the next restricted growth string.
        let mut i = m - 1;
        loop {
            if i == 0 {
                return Ok(best);
            }
            if rgs[i] <= max[i - 1] {
                rgs[i] += 1;
                max[i] = max[i - 1].max(rgs[i]);
                for j in i + 1..m {
                    rgs[j] = 1;
                    max[j] = max[i];
                }
                break;
            }
            i -= 1;
        }
    }
}
