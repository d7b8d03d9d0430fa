//! Layer-specific behaviors: what each lift adds beyond bare correctness.

use bb84::rng::stream;
use lifts::{
    bytes_to_bits, CtmacBase, FullCtmac, LiftError, Ot, Otl, TmacScheme, Tms, Tom, TomJ,
};
use rand::Rng;

// ---- fixed-length lift -------------------------------------------------

/// Verification is a conjunction: corrupting a single sub-signature at a
/// basis-consistent coordinate must sink the whole document at zero
/// tolerance.
#[test]
fn one_bad_instance_sinks_the_conjunction() {
    let scheme = Otl::new(CtmacBase::new(16, 0.0), 3);
    let mut rng = stream(0x200, 0);
    let mut key = scheme.key_gen(&mut rng);
    let token = scheme.token_gen(&mut key, &mut rng).unwrap();
    let doc = [true, false, true];
    let sig = scheme.sign(token, &doc, &mut rng).unwrap();
    assert!(scheme.verify(&key, &doc, &sig));

    for i in 0..3 {
        let cons = key[i].consistent_set(doc[i]);
        let coord = *cons.first().expect("a 16-qubit key has consistent coordinates");
        let mut bad = sig.clone();
        bad[i].bits[coord] = !bad[i].bits[coord];
        assert!(!scheme.verify(&key, &doc, &bad), "flipped instance {i} was not caught");
    }
}

#[test]
fn token_size_is_instances_times_key_length() {
    let scheme = Otl::new(CtmacBase::new(16, 0.0), 5);
    let mut rng = stream(0x201, 0);
    let mut key = scheme.key_gen(&mut rng);
    let token = scheme.token_gen(&mut key, &mut rng).unwrap();
    let qubits: usize = scheme.quantum_parts(&token).iter().map(|p| p.lambda()).sum();
    assert_eq!(qubits, 5 * 16);
}

// ---- hash-and-sign lift ------------------------------------------------

fn cheap_unrestricted(index_bits: usize, hash_bits: usize) -> Ot<Otl<CtmacBase>> {
    let ell = index_bits + hash_bits;
    Ot::new(Otl::new(CtmacBase::new(1, 0.0), ell), index_bits, hash_bits)
}

#[test]
fn any_document_length_round_trips() {
    let scheme = cheap_unrestricted(8, 16);
    for len in [0usize, 17, 10_000] {
        let mut rng = stream(0x202, len as u64);
        let mut key = scheme.key_gen(&mut rng);
        let token = scheme.token_gen(&mut key, &mut rng).unwrap();
        let doc: Vec<u8> = (0..len).map(|i| (i % 256) as u8).collect();
        let doc = bytes_to_bits(&doc);
        let sig = scheme.sign(token, &doc, &mut rng).unwrap();
        assert!(scheme.verify(&key, &doc, &sig), "length {len} failed");
    }
}

#[test]
fn inner_string_has_the_committed_width() {
    let scheme = cheap_unrestricted(8, 16);
    let mut rng = stream(0x203, 0);
    let index = classical::uowhf_index(8, &mut rng);
    for doc_len in [0usize, 1, 31, 997] {
        let doc: Vec<bool> = (0..doc_len).map(|_| rng.gen()).collect();
        assert_eq!(scheme.inner_document(&index, &doc).len(), 8 + 16);
    }
}

/// Every signature commits to a freshly drawn 128-bit index; across ten
/// thousand signings of one document the indices, and with them the inner
/// strings, never repeat.
#[test]
fn fresh_indices_never_collide() {
    let scheme = cheap_unrestricted(128, 16);
    let doc = bytes_to_bits(b"always the same document");
    let mut rng = stream(0x204, 0);
    let mut key = scheme.key_gen(&mut rng);
    let mut seen = std::collections::HashSet::new();
    for trial in 0..10_000 {
        let token = scheme.token_gen(&mut key, &mut rng).unwrap();
        let sig = scheme.sign(token, &doc, &mut rng).unwrap();
        assert!(
            seen.insert(sig.index.bits().to_vec()),
            "index collision at trial {trial}"
        );
    }
}

// ---- unbounded issuance lift --------------------------------------------

#[test]
fn signatures_bind_to_their_own_encrypted_key() {
    let scheme = Tom::new(CtmacBase::new(32, 0.0));
    let mut rng = stream(0x205, 0);
    let mut key = scheme.key_gen(&mut rng);
    let t1 = scheme.token_gen(&mut key, &mut rng).unwrap();
    let t2 = scheme.token_gen(&mut key, &mut rng).unwrap();
    let doc = [true];
    let s1 = scheme.sign(t1, &doc, &mut rng).unwrap();
    let s2 = scheme.sign(t2, &doc, &mut rng).unwrap();
    assert!(scheme.verify(&key, &doc, &s1));
    assert!(scheme.verify(&key, &doc, &s2));

    let mut crossed = s1.clone();
    crossed.e = s2.e.clone();
    assert!(!scheme.verify(&key, &doc, &crossed), "signature verified under a foreign key bundle");
}

#[test]
fn a_different_master_key_rejects() {
    let scheme = Tom::new(CtmacBase::new(32, 0.0));
    let mut rng = stream(0x206, 0);
    let mut key = scheme.key_gen(&mut rng);
    let other = scheme.key_gen(&mut rng);
    let token = scheme.token_gen(&mut key, &mut rng).unwrap();
    let sig = scheme.sign(token, &[false], &mut rng).unwrap();
    assert!(scheme.verify(&key, &[false], &sig));
    assert!(!scheme.verify(&other, &[false], &sig));
}

#[test]
fn tampering_the_key_ciphertext_rejects() {
    let scheme = Tom::new(CtmacBase::new(32, 0.0));
    let mut rng = stream(0x207, 0);
    let mut key = scheme.key_gen(&mut rng);
    let token = scheme.token_gen(&mut key, &mut rng).unwrap();
    let sig = scheme.sign(token, &[true], &mut rng).unwrap();
    for byte in 0..sig.e.body.len() {
        let mut bad = sig.clone();
        bad.e.body[byte] ^= 0x01;
        assert!(!scheme.verify(&key, &[true], &bad), "tampered e byte {byte} got through");
    }
}

// ---- salting lift --------------------------------------------------------

#[test]
fn salt_is_published_at_the_declared_width() {
    let scheme = Tms::new(cheap_unrestricted(8, 16), 24);
    let mut rng = stream(0x208, 0);
    let mut key = scheme.key_gen(&mut rng);
    let token = scheme.token_gen(&mut key, &mut rng).unwrap();
    let sig = scheme.sign(token, &bytes_to_bits(b"salted"), &mut rng).unwrap();
    assert_eq!(sig.rnd.len(), 24);
}

#[test]
fn repeated_signings_draw_distinct_salt() {
    let scheme = Tms::new(cheap_unrestricted(8, 16), 128);
    let doc = bytes_to_bits(b"same document, many signatures");
    let mut rng = stream(0x209, 0);
    let mut key = scheme.key_gen(&mut rng);
    let mut seen = std::collections::HashSet::new();
    for trial in 0..10_000 {
        let token = scheme.token_gen(&mut key, &mut rng).unwrap();
        let sig = scheme.sign(token, &doc, &mut rng).unwrap();
        assert!(seen.insert(sig.rnd.clone()), "salt collision at trial {trial}");
    }
}

// ---- bounded issuance lift ------------------------------------------------

#[test]
fn exactly_j_tokens_then_the_budget_errors() {
    let scheme = TomJ::new(Otl::new(CtmacBase::new(16, 0.0), 2), 2);
    let mut rng = stream(0x20a, 0);
    let mut key = scheme.key_gen(&mut rng);

    let t1 = scheme.token_gen(&mut key, &mut rng).unwrap();
    let t2 = scheme.token_gen(&mut key, &mut rng).unwrap();
    let s1 = scheme.sign(t1, &[false, false], &mut rng).unwrap();
    let s2 = scheme.sign(t2, &[true, true], &mut rng).unwrap();
    assert!(scheme.verify(&key, &[false, false], &s1));
    assert!(scheme.verify(&key, &[true, true], &s2));

    assert_eq!(
        scheme.token_gen(&mut key, &mut rng).unwrap_err(),
        LiftError::TokenBudgetExhausted(2)
    );
}

/// Both tokens are spent, so a third document needs a forged sub-signature.
/// The best replay keeps every agreeing instance and guesses the one
/// instance whose bit differs; a uniform guess lands inside the tolerance
/// ball with probability about 1e-5 at a 64-qubit sub-key, so a hundred
/// thousand attempts are expected to all fail.
#[test]
fn guessed_signatures_never_complete_a_third_document() {
    let scheme = TomJ::new(Otl::new(CtmacBase::new(64, 0.07), 2), 2);
    let mut rng = stream(0x20b, 0);
    let mut key = scheme.key_gen(&mut rng);
    let t1 = scheme.token_gen(&mut key, &mut rng).unwrap();
    let t2 = scheme.token_gen(&mut key, &mut rng).unwrap();
    let s1 = scheme.sign(t1, &[false, false], &mut rng).unwrap();
    let _s2 = scheme.sign(t2, &[true, true], &mut rng).unwrap();

    // Forge [false, true]: instance 0 agrees with s1 and is replayed;
    // instance 1 is guessed uniformly.
    let target = [false, true];
    let mut hits = 0u32;
    for _ in 0..100_000 {
        let mut forged = s1.clone();
        forged.inner[1] = ctmac::Signature1 { bits: (0..64).map(|_| rng.gen()).collect() };
        if scheme.verify(&key, &target, &forged) {
            hits += 1;
        }
    }
    assert_eq!(hits, 0, "a guessed sub-signature was accepted {hits} times");

    // Positive control: with the decrypted sub-key in hand the same replay
    // slot does accept, so the loop above was measuring a live path.
    let kappa_bytes = key.cenc.dec(&s1.c);
    let kappa = scheme.base().key_from_bytes(&kappa_bytes).unwrap();
    let mut crafted = s1.clone();
    crafted.inner[1] = ctmac::Signature1 { bits: kappa[1].a().to_vec() };
    assert!(scheme.verify(&key, &target, &crafted));
}

// ---- flat flagship ---------------------------------------------------------

#[test]
fn a_kibibyte_document_round_trips() {
    let scheme = FullCtmac::new(16, 8);
    let mut rng = stream(0x20c, 0);
    let mut key = scheme.key_gen(&mut rng);
    let token = scheme.token_gen(&mut key, &mut rng).unwrap();
    let doc: Vec<u8> = (0..1024).map(|i| (i * 31 % 256) as u8).collect();
    let doc = bytes_to_bits(&doc);
    let sig = scheme.sign(token, &doc, &mut rng).unwrap();
    assert!(scheme.verify(&key, &doc, &sig));
}
