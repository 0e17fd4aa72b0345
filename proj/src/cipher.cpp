#include "pld/cipher.hpp"

#include <bit>
#include <stdexcept>

namespace pld {
namespace {

constexpr std::uint64_t kLitterBudget = 10000;

void require_valid(const CipherSpace& space) {
  if (!space.valid()) throw std::invalid_argument("cipher: invalid space dimensions");
}

}  // namespace

int hamming_distance(Word a, Word b) noexcept { return std::popcount(a ^ b); }

Word expand_key(const CipherSpace& space, Word key) {
  require_valid(space);
  if (key & ~space.key_mask()) throw std::invalid_argument("cipher: key out of range");
  // Two multiply-xorshift rounds, bijective on d_p-bit words (odd multiplier
  // modulo 2^d_p; xorshift-right), hence injective on the key subset. No
  // additive constant, so the all-zero key is the identity key.
  const Word mask = space.plaintext_mask();
  Word x = key;
  x = (x * 0x9E3779B97F4A7C15ull) & mask;
  x ^= x >> (space.d_p / 2 + 1);
  x = (x * 0xBF58476D1CE4E5B9ull) & mask;
  x ^= x >> (space.d_p / 2 + 1);
  return x & mask;
}

Word encrypt(const CipherSpace& space, Word plaintext, Word key) {
  require_valid(space);
  if (plaintext & ~space.plaintext_mask()) {
    throw std::invalid_argument("cipher: plaintext out of range");
  }
  return plaintext ^ expand_key(space, key);
}

Word decrypt(const CipherSpace& space, Word ciphertext, Word key) {
  require_valid(space);
  if (ciphertext & ~space.plaintext_mask()) {
    throw std::invalid_argument("cipher: ciphertext out of range");
  }
  return ciphertext ^ expand_key(space, key);
}

DecodeResult bounded_distance_decode(Word word, const Codebook& codebook, int d_max) {
  int best = codebook.n_bits + 1;
  std::uint32_t payload = 0;
  bool tie = false;
  for (std::uint32_t i = 0; i < codebook.codewords.size(); ++i) {
    const int d = hamming_distance(word, codebook.codewords[i]);
    if (d < best) {
      best = d;
      payload = i;
      tie = false;
    } else if (d == best) {
      tie = true;
    }
  }
  if (best <= d_max && !tie) return DecodeResult::success(payload);
  return DecodeResult::erasure();
}

LitterResult gen_litter(const Codebook& codebook, int d_max, std::uint64_t seed) {
  if (codebook.n_bits < 1 || codebook.n_bits > 63) {
    throw std::invalid_argument("gen_litter: n_bits out of range");
  }
  const Word mask = (Word{1} << codebook.n_bits) - 1;
  auto is_litter = [&](Word w) {
    for (Word c : codebook.codewords) {
      if (hamming_distance(w, c) <= d_max) return false;
    }
    return true;
  };
  CounterRng rng(seed);
  for (std::uint64_t attempt = 1; attempt <= kLitterBudget; ++attempt) {
    const Word w = rng.next_u64() & mask;
    if (is_litter(w)) return {w, attempt};
  }
  if (codebook.n_bits <= 20) {
    for (Word w = 0; w <= mask; ++w) {
      if (is_litter(w)) return {w, kLitterBudget + w + 1};
    }
  }
  throw std::runtime_error("no litter exists");
}

ReceptionOutcome classify_outcome(const DecodeResult& ciphertext, const DecodeResult& key,
                                  OutcomeMode mode) {
  const bool has_error =
      ciphertext.kind == DecodeKind::kError || key.kind == DecodeKind::kError;
  if (mode != OutcomeMode::kGeneric && has_error) {
    throw std::invalid_argument("classify_outcome: kError input outside generic mode");
  }
  const bool ct_erased = ciphertext.kind == DecodeKind::kErasure;
  const bool key_erased = key.kind == DecodeKind::kErasure;
  const bool both_success =
      ciphertext.kind == DecodeKind::kSuccess && key.kind == DecodeKind::kSuccess;

  switch (mode) {
    case OutcomeMode::kGeneric:
      // Any erasure terminates recovery; otherwise an undetected error in
      // either component yields a wrong plaintext.
      if (ct_erased || key_erased) return ReceptionOutcome::kLoss;
      if (both_success) return ReceptionOutcome::kPerception;
      return ReceptionOutcome::kDeception;
    case OutcomeMode::kSufficientRedundancy:
      return both_success ? ReceptionOutcome::kPerception : ReceptionOutcome::kLoss;
    case OutcomeMode::kRandomActivation:
      // A lost key is indistinguishable from a deactivated cipherer, so the
      // receiver takes the ciphertext as an unciphered plaintext.
      if (ct_erased) return ReceptionOutcome::kLoss;
      if (both_success) return ReceptionOutcome::kPerception;
      return ReceptionOutcome::kDeception;
  }
  throw std::logic_error("classify_outcome: unknown mode");
}

}  // namespace pld
