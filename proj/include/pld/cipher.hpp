#pragma once

#include <cstdint>
#include <vector>

#include "pld/rng.hpp"

namespace pld {

// Bit strings up to 64 bits, width tracked by the containing structure.
using Word = std::uint64_t;

int hamming_distance(Word a, Word b) noexcept;

// Toy deceptive cipher: XOR with an injective key-expansion mask. Any two
// distinct keys decrypt the same ciphertext to distinct plaintexts, and the
// ciphertext space equals the plaintext space, so an eavesdropper cannot
// tell ciphered and unciphered messages apart.
struct CipherSpace {
  int d_p;       // plaintext/ciphertext bits, <= 20 for exhaustive checks
  int d_k_bits;  // key bits, must not exceed d_p

  bool valid() const noexcept {
    return d_p >= 1 && d_p <= 20 && d_k_bits >= 1 && d_k_bits <= d_p;
  }
  Word plaintext_mask() const noexcept { return (Word{1} << d_p) - 1; }
  Word key_mask() const noexcept { return (Word{1} << d_k_bits) - 1; }
};

/// Injective key expansion g; g(0) = 0 (identity key).
Word expand_key(const CipherSpace& space, Word key);

Word encrypt(const CipherSpace& space, Word plaintext, Word key);
Word decrypt(const CipherSpace& space, Word ciphertext, Word key);

// Channel codebook: codewords[payload] is the n_bits-wide codeword.
struct Codebook {
  int n_bits;
  std::vector<Word> codewords;
};

enum class DecodeKind { kSuccess, kErasure, kError };

struct DecodeResult {
  DecodeKind kind;
  std::uint32_t payload;  // valid for kSuccess and kError

  static DecodeResult success(std::uint32_t p) { return {DecodeKind::kSuccess, p}; }
  static DecodeResult erasure() { return {DecodeKind::kErasure, 0}; }
  static DecodeResult error(std::uint32_t p) { return {DecodeKind::kError, p}; }
};

/// Bounded-distance decoding: Success on a unique nearest codeword within
/// d_max, Erasure otherwise (distance ties included). Never returns kError;
/// undetected errors exist only in the generic reception model.
DecodeResult bounded_distance_decode(Word word, const Codebook& codebook, int d_max);

struct LitterResult {
  Word word;
  std::uint64_t attempts;
};

/// Draws a word at Hamming distance > d_max from every codeword, masking a
/// deactivated cipherer. Deterministic for a given seed; after the rejection
/// budget an exhaustive fallback runs for n_bits <= 20. Throws
/// std::runtime_error("no litter exists") when the search is exhausted.
LitterResult gen_litter(const Codebook& codebook, int d_max, std::uint64_t seed);

enum class OutcomeMode { kGeneric, kSufficientRedundancy, kRandomActivation };
enum class ReceptionOutcome { kPerception, kDeception, kLoss };

/// Combines the ciphertext and key decode results into the plaintext-level
/// outcome. kError inputs are valid only in generic mode.
ReceptionOutcome classify_outcome(const DecodeResult& ciphertext, const DecodeResult& key,
                                  OutcomeMode mode);

}  // namespace pld
