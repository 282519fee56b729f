use std::collections::HashMap;
use std::rc::Rc;

/// Coordinates admitted by one support mask: `list` in increasing order and
/// `pos[k]` the position of `k` in `list` (`u32::MAX` when absent).
struct Allowed {
    list: Vec<u32>,
    pos: Vec<u32>,
}

/// The direct sum `⊕_{x ∈ G^n} V_x` where `V_x` is spanned by the coordinates
/// whose block mask contains the support mask of `x`.
pub(crate) struct Space {
    h: usize,
    degree: usize,
    offsets: Vec<usize>,
    allowed: Vec<Rc<Allowed>>,
}

impl Space {
    /// `mask_of` maps a tuple (as local element indices) to its support mask.
    pub fn new(h: usize, degree: usize, blocks: &[u64], mask_of: impl Fn(&[usize]) -> u64) -> Space {
        let count = h.pow(degree as u32);
        let mut cache: HashMap<u64, Rc<Allowed>> = HashMap::new();
        let mut offsets = Vec::with_capacity(count + 1);
        let mut allowed = Vec::with_capacity(count);
        let mut total = 0;
        let mut digits = vec![0usize; degree];
        for t in 0..count {
            if t > 0 {
                increment(&mut digits, h);
            }
            let mask = mask_of(&digits);
            let a = cache
                .entry(mask)
                .or_insert_with(|| {
                    let list: Vec<u32> = (0..blocks.len() as u32).filter(|&k| blocks[k as usize] & mask == mask).collect();
                    let mut pos = vec![u32::MAX; blocks.len()];
                    for (i, &k) in list.iter().enumerate() {
                        pos[k as usize] = i as u32;
                    }
                    Rc::new(Allowed { list, pos })
                })
                .clone();
            offsets.push(total);
            total += a.list.len();
            allowed.push(a);
        }
        offsets.push(total);
        Space { h, degree, offsets, allowed }
    }

    pub fn len(&self) -> usize {
        *self.offsets.last().expect("nonempty")
    }

    pub fn tuples(&self) -> usize {
        self.allowed.len()
    }

    pub fn coords(&self, t: usize) -> &[u32] {
        &self.allowed[t].list
    }

    pub fn offset(&self, t: usize) -> usize {
        self.offsets[t]
    }

    /// Position of coordinate `k` of tuple `t`, if admitted.
    pub fn index(&self, t: usize, k: usize) -> Option<usize> {
        let p = self.allowed[t].pos[k];
        (p != u32::MAX).then(|| self.offsets[t] + p as usize)
    }

    pub fn decode(&self, t: usize) -> Vec<usize> {
        decode(t, self.degree, self.h)
    }
}

pub(crate) fn decode(mut t: usize, degree: usize, h: usize) -> Vec<usize> {
    let mut out = vec![0; degree];
    for d in out.iter_mut().rev() {
        *d = t % h;
        t /= h;
    }
    out
}

pub(crate) fn encode(digits: &[usize], h: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * h + d)
}

fn increment(digits: &mut [usize], h: usize) {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < h {
            return;
        }
        *d = 0;
    }
}
