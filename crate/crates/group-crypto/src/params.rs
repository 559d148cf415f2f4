use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{CryptoError, Result};
use crate::rng::sample_biguint_below;

/// RFC 3526 2048-bit MODP group prime (group id 14). Safe prime; the
/// generator 2 generates the quadratic-residue subgroup of prime order
/// q = (p - 1) / 2.
const MODP_2048_P_HEX: &str = "\
FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD129024E088A67CC74\
020BBEA63B139B22514A08798E3404DDEF9519B3CD3A431B302B0A6DF25F1437\
4FE1356D6D51C245E485B576625E7EC6F44C42E9A637ED6B0BFF5CB6F406B7ED\
EE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3DC2007CB8A163BF05\
98DA48361C55D39A69163FA8FD24CF5F83655D23DCA3AD961C62F356208552BB\
9ED529077096966D670C354E4ABC9804F1746C08CA18217C32905E462E36CE3B\
E39E772C180E86039B2783A2EC07A28FB5C55DF06F4C52C9DE2BCBF695581718\
3995497CEA956AE515D2261898FA051015728E5A8AACAA68FFFFFFFFFFFFFFFF";

const MILLER_RABIN_ROUNDS: usize = 64;

/// Identifier for a compiled-in group configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupId {
    /// RFC 3526 2048-bit MODP group, the production default.
    Modp2048,
    /// p=23, q=11, g=4. Exists so oracle tests can enumerate the whole
    /// subgroup; config layers refuse it in release builds.
    Test23,
}

impl GroupId {
    pub fn name(&self) -> &'static str {
        match self {
            GroupId::Modp2048 => "modp2048",
            GroupId::Test23 => "test23",
        }
    }

    /// Whether this group is acceptable outside of debug/test builds.
    pub fn release_safe(&self) -> bool {
        matches!(self, GroupId::Modp2048)
    }
}

impl FromStr for GroupId {
    type Err = CryptoError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "modp2048" => Ok(GroupId::Modp2048),
            "test23" => Ok(GroupId::Test23),
            _ => Err(CryptoError::InvalidGroupParams("unknown group id")),
        }
    }
}

/// Validated discrete-log group parameters: prime modulus `p`, prime
/// subgroup order `q` with `q | p - 1`, and a generator `g` of the
/// order-q subgroup.
///
/// Validation (primality, subgroup checks) happens once here, at
/// construction, so the arithmetic paths stay check-free.
#[derive(Debug, Clone)]
pub struct GroupParams {
    p: BigUint,
    q: BigUint,
    g: BigUint,
    scalar_width: usize,
    element_width: usize,
}

impl GroupParams {
    /// Validates and constructs group parameters.
    pub fn new(p: BigUint, q: BigUint, g: BigUint) -> Result<Self> {
        if !is_probable_prime(&p) {
            return Err(CryptoError::InvalidGroupParams("p is not prime"));
        }
        if !is_probable_prime(&q) {
            return Err(CryptoError::InvalidGroupParams("q is not prime"));
        }
        if (&p - BigUint::one()) % &q != BigUint::zero() {
            return Err(CryptoError::InvalidGroupParams("q does not divide p - 1"));
        }
        if g <= BigUint::one() || g >= p {
            return Err(CryptoError::InvalidGroupParams("generator out of range"));
        }
        if g.modpow(&q, &p) != BigUint::one() {
            return Err(CryptoError::InvalidGroupParams("generator order is not q"));
        }
        let scalar_width = ((q.bits() + 7) / 8) as usize;
        let element_width = ((p.bits() + 7) / 8) as usize;
        Ok(GroupParams {
            p,
            q,
            g,
            scalar_width,
            element_width,
        })
    }

    pub fn modulus(&self) -> &BigUint {
        &self.p
    }

    pub fn order(&self) -> &BigUint {
        &self.q
    }

    pub fn generator_value(&self) -> &BigUint {
        &self.g
    }

    /// Fixed byte width of a serialized scalar (the byte length of q).
    pub fn scalar_width(&self) -> usize {
        self.scalar_width
    }

    /// Maximum byte width of a serialized element (the byte length of p).
    pub fn element_width(&self) -> usize {
        self.element_width
    }

    pub fn bit_length(&self) -> u64 {
        self.p.bits()
    }

    /// Range and subgroup-membership check: v in [1, p-1] and v^q = 1.
    pub fn is_member(&self, v: &BigUint) -> bool {
        !v.is_zero() && v < &self.p && v.modpow(&self.q, &self.p) == BigUint::one()
    }
}

fn standard_params(id: GroupId) -> &'static Arc<GroupParams> {
    static MODP_2048: OnceLock<Arc<GroupParams>> = OnceLock::new();
    static TEST_23: OnceLock<Arc<GroupParams>> = OnceLock::new();
    match id {
        GroupId::Modp2048 => MODP_2048.get_or_init(|| {
            let p = BigUint::parse_bytes(MODP_2048_P_HEX.as_bytes(), 16).unwrap();
            let q = (&p - BigUint::one()) >> 1;
            let g = BigUint::from(2u32);
            Arc::new(GroupParams::new(p, q, g).expect("compiled-in modp2048 params"))
        }),
        GroupId::Test23 => TEST_23.get_or_init(|| {
            let params = GroupParams::new(
                BigUint::from(23u32),
                BigUint::from(11u32),
                BigUint::from(4u32),
            );
            Arc::new(params.expect("compiled-in test23 params"))
        }),
    }
}

pub(crate) fn lookup_standard(id: GroupId) -> Arc<GroupParams> {
    standard_params(id).clone()
}

/// Miller-Rabin with random bases; 64 rounds per the parameter contract.
fn is_probable_prime(n: &BigUint) -> bool {
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    if n == &two || n == &BigUint::from(3u32) {
        return true;
    }
    if (n % &two).is_zero() {
        return false;
    }

    // n - 1 = d * 2^r with d odd
    let n_minus_1 = n - &one;
    let mut d = n_minus_1.clone();
    let mut r = 0u64;
    while (&d % &two).is_zero() {
        d >>= 1;
        r += 1;
    }

    let mut rng = rand::rngs::OsRng;
    let range = n - BigUint::from(3u32); // witnesses in [2, n-2]
    'witness: for _ in 0..MILLER_RABIN_ROUNDS {
        let a = sample_biguint_below(&mut rng, &range) + &two;
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 0..r.saturating_sub(1) {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
