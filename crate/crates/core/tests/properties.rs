use lcdmds::{Elem, Field, GrsSpec, LinearCode, Matrix, Polynomial};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ORDERS: [u32; 8] = [5, 7, 9, 11, 13, 25, 27, 49];

fn random_spec(q: u32, seed: u64, extended: bool) -> GrsSpec {
    let field = Field::from_order(q).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<Elem> = field.elements().collect();
    pool.shuffle(&mut rng);
    let n = if extended { q as usize } else { rng.gen_range(2..=q as usize) };
    let locators = pool[..n].to_vec();
    let multipliers = (0..n).map(|_| Elem::from_index(rng.gen_range(1..q))).collect();
    let k = rng.gen_range(1..n);
    GrsSpec::new(&field, locators, multipliers, k, extended).unwrap()
}

fn random_code(q: u32, seed: u64) -> LinearCode {
    let field = Field::from_order(q).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=9);
    let k = rng.gen_range(1..=n);
    loop {
        let data = (0..n * k).map(|_| Elem::from_index(rng.gen_range(0..q))).collect();
        let m = Matrix::new(&field, k, n, data).unwrap();
        if let Ok(code) = LinearCode::new(m) {
            return code;
        }
    }
}

fn order() -> impl Strategy<Value = u32> {
    prop::sample::select(ORDERS.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn generator_has_full_rank(q in order(), seed in any::<u64>(), extended in any::<bool>()) {
        let spec = random_spec(q, seed, extended);
        prop_assert_eq!(spec.generator().generator().rank(), spec.k());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn grs_dual_matches_null_space(q in order(), seed in any::<u64>()) {
        let spec = random_spec(q, seed, false);
        let explicit = spec.dual().unwrap().generator();
        prop_assert!(explicit.same_code(&spec.generator().dual()));
    }

    #[test]
    fn grs_dual_is_an_involution(q in order(), seed in any::<u64>()) {
        let spec = random_spec(q, seed, false);
        let back = spec.dual().unwrap().dual().unwrap();
        prop_assert!(back.generator().same_code(&spec.generator()));
    }

    #[test]
    fn hull_routes_agree(q in order(), seed in any::<u64>()) {
        let code = random_code(q, seed);
        prop_assert_eq!(code.hull_dimension(), code.intersection_dim(&code.dual()).unwrap());
    }

    #[test]
    fn dual_of_dual_is_identity(q in order(), seed in any::<u64>()) {
        let code = random_code(q, seed);
        let dd = code.dual().dual();
        prop_assert!(dd.same_code(&code));
        prop_assert_eq!(code.k() + code.dual().k(), code.n());
    }

    #[test]
    fn in_dual_matches_direct_check(
        q in order(),
        seed in any::<u64>(),
        extended in any::<bool>(),
        coeffs in prop::collection::vec(0u32..49, 0..8),
    ) {
        let spec = random_spec(q, seed, extended);
        let field = spec.field().clone();
        let c: Vec<u32> = coeffs.iter().take(spec.k()).map(|c| c % q).collect();
        let f = Polynomial::from_indices(&field, &c).unwrap();
        let word = spec.codeword(&f).unwrap();
        let direct = spec.generator().is_in_dual(&word).unwrap();
        prop_assert_eq!(spec.in_dual(&f).unwrap(), direct);
    }
}

#[test]
fn dual_codeword_is_detected() {
    // every codeword of the explicit dual code lies in the dual
    let spec = random_spec(11, 7, false);
    let dual = spec.dual().unwrap();
    let code = spec.generator();
    let field = spec.field();
    for i in 0..dual.k() {
        let f = Polynomial::monomial(field, Elem::ONE, i).unwrap();
        assert!(code.is_in_dual(&dual.codeword(&f).unwrap()).unwrap());
    }
}
