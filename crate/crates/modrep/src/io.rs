use std::io::{self, Read, Write};

use combinat::Partition;
use gf2core::BitMatrix;

use crate::module::{GModule, ModuleKind};

const MAGIC: &[u8; 4] = b"YGM1";

impl GModule {
    /// Serializes the module: a small header followed by the two generator
    /// matrices in their on-disk matrix format.
    ///
    /// # Errors
    /// Propagates writer failures.
    pub fn write_ygm(&self, w: &mut impl Write) -> io::Result<()> {
        w.write_all(MAGIC)?;
        w.write_all(&[self.n as u8])?;
        match &self.label {
            None => w.write_all(&[0, 0])?,
            Some((kind, lam)) => {
                let tag = match kind {
                    ModuleKind::Perm => 1u8,
                    ModuleKind::Polytabloid => 2,
                    ModuleKind::Simple => 3,
                    ModuleKind::Young => 4,
                };
                w.write_all(&[tag, lam.len() as u8])?;
                for &part in lam.parts() {
                    w.write_all(&[part as u8])?;
                }
            }
        }
        self.gen_s.write_ymf2(w)?;
        self.gen_c.write_ymf2(w)
    }

    /// Reads a module serialized by [`GModule::write_ygm`] and re-validates
    /// the generator relations.
    ///
    /// # Errors
    /// Fails on reader errors or malformed content.
    pub fn read_ygm(r: &mut impl Read) -> io::Result<GModule> {
        let bad = |msg: &str| io::Error::new(io::ErrorKind::InvalidData, msg.to_string());
        let mut head = [0u8; 7];
        r.read_exact(&mut head)?;
        if &head[..4] != MAGIC {
            return Err(bad("bad module magic"));
        }
        let n = head[4] as usize;
        if !(1..=30).contains(&n) {
            return Err(bad("implausible point count"));
        }
        let (tag, part_count) = (head[5], head[6] as usize);
        let label = if tag == 0 {
            if part_count != 0 {
                return Err(bad("unlabeled module cannot carry parts"));
            }
            None
        } else {
            let kind = match tag {
                1 => ModuleKind::Perm,
                2 => ModuleKind::Polytabloid,
                3 => ModuleKind::Simple,
                4 => ModuleKind::Young,
                _ => return Err(bad("unknown module kind")),
            };
            let mut parts = vec![0u8; part_count];
            r.read_exact(&mut parts)?;
            let parts: Vec<usize> = parts.into_iter().map(usize::from).collect();
            if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
                return Err(bad("malformed partition label"));
            }
            Some((kind, Partition::new(parts)))
        };
        let gen_s = BitMatrix::read_ymf2(r)?;
        let gen_c = BitMatrix::read_ymf2(r)?;
        if gen_s.rows() != gen_s.cols()
            || gen_c.rows() != gen_c.cols()
            || gen_s.rows() != gen_c.rows()
        {
            return Err(bad("generator shapes disagree"));
        }
        if !gen_s.mul(&gen_s).is_identity() {
            return Err(bad("stored s is not an involution"));
        }
        let mut power = BitMatrix::identity(gen_c.rows());
        for _ in 0..n {
            power = power.mul(&gen_c);
        }
        if !power.is_identity() {
            return Err(bad("stored c order does not divide n"));
        }
        Ok(GModule::new(n, gen_s, gen_c, label))
    }
}
