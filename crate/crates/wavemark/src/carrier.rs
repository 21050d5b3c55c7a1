//! Secret key, message bits, and the keyed spread-spectrum carriers.
//!
//! Each embedding sub-band gets one carrier per message bit: a ±1 pattern
//! on a dedicated set of coefficient cells. The cell sets partition the
//! sub-band (left-over cells stay unused), so carriers for distinct bits
//! are orthogonal by construction, and everything regenerates bit-exactly
//! from (key, message length, sub-band shape, sub-band id).

use crate::error::{Error, Result};
use crate::plane::{ComplexPlane, Plane};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use sha2::{Digest, Sha256};

/// Minimum number of real coefficients (re + im counted separately) each
/// bit must receive; below this the correlation estimate is too noisy.
pub const MIN_COEFFS_PER_BIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Key(pub u64);

impl Key {
    /// Parse exactly 16 hex digits.
    pub fn from_hex(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.len() != 16 || !t.bytes().all(|b| b.is_ascii_hexdigit()) {
            return Err(Error::BadKey(t.to_string()));
        }
        Ok(Key(u64::from_str_radix(t, 16).expect("validated hex")))
    }

    pub fn to_hex(self) -> String {
        format!("{:016x}", self.0)
    }

    /// Per-image key: fold an image identifier into the base secret so a
    /// batch run embeds a different carrier layout in every image.
    pub fn for_image(self, image_id: &str) -> Key {
        let digest = Sha256::digest(image_id.as_bytes());
        let mut eight = [0u8; 8];
        eight.copy_from_slice(&digest[..8]);
        Key(self.0 ^ u64::from_be_bytes(eight))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Message {
    bits: Vec<u8>,
}

impl Message {
    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::BadMessage("empty message".into()));
        }
        if let Some(b) = bits.iter().find(|b| **b > 1) {
            return Err(Error::BadMessage(format!("bit value {b} not in {{0,1}}")));
        }
        Ok(Message { bits })
    }

    /// Parse either a bit string ("0101…") or, with the `0x` prefix, a hex
    /// string expanded MSB-first to 4 bits per digit.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(hex) = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
            if hex.is_empty() || !hex.bytes().all(|b| b.is_ascii_hexdigit()) {
                return Err(Error::BadMessage(format!("bad hex message {t:?}")));
            }
            let mut bits = Vec::with_capacity(hex.len() * 4);
            for d in hex.bytes() {
                let v = (d as char).to_digit(16).expect("validated hex") as u8;
                for k in (0..4).rev() {
                    bits.push((v >> k) & 1);
                }
            }
            Message::from_bits(bits)
        } else {
            if t.is_empty() || !t.bytes().all(|b| b == b'0' || b == b'1') {
                return Err(Error::BadMessage(format!(
                    "message must be bits or 0x-prefixed hex, got {t:?}"
                )));
            }
            Message::from_bits(t.bytes().map(|b| b - b'0').collect())
        }
    }

    pub fn random(rng: &mut impl Rng, len: usize) -> Self {
        Message {
            bits: (0..len).map(|_| rng.gen_range(0..=1u8)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn bit_string(&self) -> String {
        self.bits.iter().map(|b| char::from(b'0' + b)).collect()
    }

    /// Sign of bit i: +1 for 1, −1 for 0.
    pub fn sign(&self, i: usize) -> f64 {
        if self.bits[i] == 1 {
            1.0
        } else {
            -1.0
        }
    }
}

/// One bit's carrier: ±1 entries on its support cells, zero elsewhere.
/// Cells index row-major into the sub-band.
#[derive(Debug, Clone)]
pub struct Carrier {
    pub support: Vec<(u32, i8)>,
}

/// All carriers for one sub-band.
#[derive(Debug, Clone)]
pub struct CarrierSet {
    pub rows: usize,
    pub cols: usize,
    pub per_bit: Vec<Carrier>,
}

impl CarrierSet {
    /// Dense view of one bit's carrier (mostly for tests and diagnostics).
    pub fn dense(&self, bit: usize) -> Plane {
        let mut p = Plane::zeros(self.rows, self.cols);
        for &(cell, sign) in &self.per_bit[bit].support {
            p.data_mut()[cell as usize] = sign as f64;
        }
        p
    }

    /// All bits with a fixed +1 sign in one dense plane (the pattern whose
    /// cross-band propagation the tracer measures).
    pub fn dense_all_positive(&self) -> Plane {
        let mut p = Plane::zeros(self.rows, self.cols);
        for c in &self.per_bit {
            for &(cell, sign) in &c.support {
                p.data_mut()[cell as usize] = sign as f64;
            }
        }
        p
    }

    /// The message-modulated pattern Σ_i σ_i·C_i as a complex plane with
    /// identical real and imaginary parts.
    pub fn modulated(&self, msg: &Message) -> ComplexPlane {
        let mut z = ComplexPlane::zeros(self.rows, self.cols);
        for (i, c) in self.per_bit.iter().enumerate() {
            let s = msg.sign(i);
            for &(cell, sign) in &c.support {
                let v = s * sign as f64;
                z.re.data_mut()[cell as usize] = v;
                z.im.data_mut()[cell as usize] = v;
            }
        }
        z
    }
}

fn seed_for(key: Key, l: usize, rows: usize, cols: usize, subband_id: usize) -> [u8; 32] {
    let mut h = Sha256::new();
    h.update(b"carrier-v1");
    h.update(key.0.to_be_bytes());
    h.update((l as u64).to_be_bytes());
    h.update((rows as u64).to_be_bytes());
    h.update((cols as u64).to_be_bytes());
    h.update((subband_id as u64).to_be_bytes());
    h.finalize().into()
}

/// Deterministic carriers for one sub-band: a keyed permutation deals the
/// cells out to bits (cells_per_bit = ⌊cells/l⌋ each), and each dealt cell
/// draws a ±1 sign. Both the real and imaginary coefficient parts carry
/// the pattern, so a cell contributes two real coefficients.
pub fn derive_carriers(
    key: Key,
    l: usize,
    shape: (usize, usize),
    subband_id: usize,
) -> Result<CarrierSet> {
    let (rows, cols) = shape;
    let cells = rows * cols;
    if l == 0 {
        return Err(Error::BadMessage("zero-length message".into()));
    }
    let cells_per_bit = cells / l;
    if 2 * cells_per_bit < MIN_COEFFS_PER_BIT {
        return Err(Error::Capacity {
            bits: l,
            coeffs_per_bit: 2 * cells_per_bit,
        });
    }
    let mut rng = ChaCha20Rng::from_seed(seed_for(key, l, rows, cols, subband_id));
    let mut order: Vec<u32> = (0..cells as u32).collect();
    order.shuffle(&mut rng);
    let per_bit = (0..l)
        .map(|i| Carrier {
            support: order[i * cells_per_bit..(i + 1) * cells_per_bit]
                .iter()
                .map(|&cell| (cell, if rng.gen::<bool>() { 1i8 } else { -1 }))
                .collect(),
        })
        .collect();
    Ok(CarrierSet {
        rows,
        cols,
        per_bit,
    })
}
