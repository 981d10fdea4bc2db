use paldefect::{Alphabet, Morphism, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` primitive morphisms over 2 or 3 letters whose first letter
/// generates a growing fixed point.
pub fn random_primitive(count: usize, seed: u64) -> Vec<Morphism> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let k = rng.gen_range(2..=3);
        let alphabet = Alphabet::new("abc".chars().take(k)).unwrap();
        let images = (0..k)
            .map(|i| {
                let len = rng.gen_range(1..=4);
                let mut s: String = (0..len)
                    .map(|_| (b'a' + rng.gen_range(0..k) as u8) as char)
                    .collect();
                if i == 0 {
                    s.replace_range(0..1, "a");
                    if s.len() < 2 {
                        s.push((b'a' + rng.gen_range(0..k) as u8) as char);
                    }
                }
                Word::parse(&alphabet, &s).unwrap()
            })
            .collect();
        let m = Morphism::new(&alphabet, images).unwrap();
        if m.is_primitive() {
            out.push(m);
        }
    }
    out
}
