use std::io::{self, Read, Write};

use crate::matrix::{tail_mask, words_for, BitMatrix};

const MAGIC: &[u8; 4] = b"YMF2";

impl BitMatrix {
    /// Writes the matrix in the fixed on-disk layout: magic `YMF2`, row and
    /// column counts as little-endian u32, then the packed words row-major as
    /// little-endian u64 with tail bits zero.
    pub fn write_ymf2<W: Write>(&self, w: &mut W) -> io::Result<()> {
        w.write_all(MAGIC)?;
        w.write_all(&u32::try_from(self.rows()).unwrap().to_le_bytes())?;
        w.write_all(&u32::try_from(self.cols()).unwrap().to_le_bytes())?;
        for r in 0..self.rows() {
            for &word in self.row(r) {
                w.write_all(&word.to_le_bytes())?;
            }
        }
        Ok(())
    }

    /// Reads a matrix written by [`BitMatrix::write_ymf2`], validating the
    /// magic and that tail bits are zero.
    pub fn read_ymf2<R: Read>(r: &mut R) -> io::Result<BitMatrix> {
        let mut magic = [0u8; 4];
        r.read_exact(&mut magic)?;
        if &magic != MAGIC {
            return Err(io::Error::new(
                io::ErrorKind::InvalidData,
                "bad matrix magic",
            ));
        }
        let mut n = [0u8; 4];
        r.read_exact(&mut n)?;
        let rows = u32::from_le_bytes(n) as usize;
        r.read_exact(&mut n)?;
        let cols = u32::from_le_bytes(n) as usize;
        let stride = words_for(cols);
        let mut out = BitMatrix::zeros(rows, cols);
        let mut buf = [0u8; 8];
        for i in 0..rows {
            let row = out.row_mut(i);
            for w in 0..stride {
                r.read_exact(&mut buf)?;
                row[w] = u64::from_le_bytes(buf);
            }
            if let Some(&last) = row.last() {
                if last & !tail_mask(cols) != 0 {
                    return Err(io::Error::new(
                        io::ErrorKind::InvalidData,
                        "nonzero tail bits in matrix row",
                    ));
                }
            }
        }
        Ok(out)
    }
}
