#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qkle/permutation.hpp"
#include "qkle/types.hpp"

namespace qkle {

// A family of n-bit permutations indexed by kappa-bit keys. kappa may be 0 for
// unkeyed components (the family then has a single member at key 0).
class CipherFamily {
 public:
  virtual ~CipherFamily() = default;

  virtual int block_bits() const = 0;
  virtual int key_bits() const = 0;
  virtual const Permutation& at(Key k) const = 0;

  Word encrypt(Key k, Word x) const { return at(k)(x); }
  Word decrypt(Key k, Word y) const { return at(k).inverse(y); }
  std::uint64_t key_count() const { return std::uint64_t{1} << key_bits(); }
};

using CipherPtr = std::shared_ptr<const CipherFamily>;

// Members are materialized on first use and cached. Safe to share across threads.
class LazyFamily : public CipherFamily {
 public:
  using Builder = std::function<Permutation(Key)>;

  LazyFamily(int n, int kappa, Builder builder);

  int block_bits() const override { return n_; }
  int key_bits() const override { return kappa_; }
  const Permutation& at(Key k) const override;

  std::size_t materialized() const;

 private:
  int n_;
  int kappa_;
  Builder builder_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Key, std::unique_ptr<Permutation>> cache_;
};

// Ideal cipher: member k is make_permutation(n, derive_seed(seed, k)).
class IdealCipher : public LazyFamily {
 public:
  IdealCipher(int n, int kappa, std::uint64_t seed);
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
};

std::shared_ptr<const IdealCipher> make_ideal_cipher(int n, int kappa, std::uint64_t seed);

// Fixpoint-free permutation on kappa-bit keys.
class KeyDerivation {
 public:
  // k -> k ^ 1
  static KeyDerivation xor_one(int kappa) { return xor_constant(kappa, 1); }
  static KeyDerivation xor_constant(int kappa, Key constant);
  // Throws unless `table` is a fixpoint-free bijection on kappa-bit keys.
  static KeyDerivation from_table(int kappa, std::vector<Key> table);

  int key_bits() const noexcept { return kappa_; }
  Key operator()(Key k) const { return table_.at(k); }

 private:
  KeyDerivation(int kappa, std::vector<Key> table) : kappa_(kappa), table_(std::move(table)) {}

  int kappa_;
  std::vector<Key> table_;
};

Key derive_related_key(const KeyDerivation& kd, Key k);

// Every member is `p`.
CipherPtr fixed_family(Permutation p, int kappa = 0);
CipherPtr identity_family(int n, int kappa = 0);
// Member k is base(pi(k)).
CipherPtr related_key_family(CipherPtr base, KeyDerivation pi);
// Member k is second_k after first_k.
CipherPtr cascade_family(CipherPtr first, CipherPtr second);

enum class ConstructionKind { EM, FX, EFX, TWO_XOR, DEFX, ITERATED_EM, ECBC3 };

std::string to_string(ConstructionKind kind);
ConstructionKind parse_construction_kind(const std::string& name);

struct Components {
  std::vector<CipherPtr> ciphers;
  std::vector<Permutation> permutations;
  // TWO_XOR and ECBC3 fall back to xor_one when unset.
  std::optional<KeyDerivation> derivation;
};

struct KeyMaterial {
  Key k = 0;
  Word k1 = 0;
  Word k2 = 0;
  // ITERATED_EM: whitening before, between and after the permutations,
  // given as indices into round_keys.
  std::vector<Word> round_keys;
  std::vector<std::size_t> schedule;
  // ECBC3: the fixed unknown message blocks.
  Word m1 = 0;
  Word m2 = 0;
};

// The unknowns an attack recovers, in layered form (see LayeredView).
struct FullKey {
  Key k = 0;
  Word k1 = 0;
  Word k2 = 0;
  friend bool operator==(const FullKey&, const FullKey&) = default;
};

class ConstructionInstance {
 public:
  ConstructionInstance(ConstructionKind kind, Components components, KeyMaterial keys);

  ConstructionKind kind() const noexcept { return kind_; }
  const Components& components() const noexcept { return components_; }
  const KeyMaterial& key_material() const noexcept { return keys_; }
  int block_bits() const noexcept { return n_; }
  // Bits of the key searched by the attacks (0 for EM, n for ITERATED_EM).
  int key_bits() const noexcept { return kappa_; }

  // Counted oracle queries. Counters are not atomic; one instance per worker.
  Word encrypt(Word x);
  Word decrypt(Word y);

  // Uncounted evaluation, for checks outside the attacker's view.
  Word evaluate(Word x) const;
  Word evaluate_inverse(Word y) const;

  std::uint64_t online_forward() const noexcept { return forward_; }
  std::uint64_t online_backward() const noexcept { return backward_; }
  void reset_counters() noexcept { forward_ = backward_ = 0; }

  // Planted key in layered form.
  FullKey full_key() const;

 private:
  ConstructionKind kind_;
  Components components_;
  KeyMaterial keys_;
  int n_ = 0;
  int kappa_ = 0;
  CipherPtr related_;
  std::uint64_t forward_ = 0;
  std::uint64_t backward_ = 0;
};

ConstructionInstance make_construction(ConstructionKind kind, Components components, KeyMaterial keys);

// Every supported construction written as
//   x -> outer_k(k2 ^ middle_k(k1 ^ inner_k(x)))
// with inner optional. Built from public components only; the key is supplied per call.
class LayeredView {
 public:
  LayeredView(ConstructionKind kind, const Components& components, int n);
  explicit LayeredView(const ConstructionInstance& instance);

  int block_bits() const noexcept { return n_; }
  int key_bits() const noexcept { return kappa_; }
  bool has_inner() const noexcept { return static_cast<bool>(inner_); }

  const Permutation& inner(Key k) const;
  const Permutation& middle(Key k) const { return middle_->at(k); }
  const Permutation& outer(Key k) const { return outer_->at(k); }

  Word encrypt(const FullKey& key, Word x) const;
  // Evaluations of E-type components per encrypt (for cost accounting).
  int layers() const noexcept { return has_inner() ? 3 : 2; }

 private:
  int n_;
  int kappa_;
  CipherPtr inner_;
  CipherPtr middle_;
  CipherPtr outer_;
};

}  // namespace qkle
