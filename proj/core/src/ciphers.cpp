#include "qkle/ciphers.hpp"

#include <algorithm>
#include <stdexcept>

namespace qkle {

namespace {

void check_key_bits(int kappa, bool allow_zero) {
  if (kappa < (allow_zero ? 0 : 1) || kappa > kMaxKeyBits) {
    throw std::invalid_argument("key size out of range: " + std::to_string(kappa));
  }
}

void check_block_bits(int n) {
  if (n < 1 || n > kMaxBlockBits) {
    throw std::invalid_argument("block size out of range [1, 16]: " + std::to_string(n));
  }
}

class FixedFamily : public CipherFamily {
 public:
  FixedFamily(Permutation p, int kappa) : p_(std::move(p)), kappa_(kappa) {}
  int block_bits() const override { return p_.bits(); }
  int key_bits() const override { return kappa_; }
  const Permutation& at(Key) const override { return p_; }

 private:
  Permutation p_;
  int kappa_;
};

}  // namespace

LazyFamily::LazyFamily(int n, int kappa, Builder builder) : n_(n), kappa_(kappa), builder_(std::move(builder)) {
  check_block_bits(n);
  check_key_bits(kappa, true);
}

const Permutation& LazyFamily::at(Key k) const {
  if (k >> kappa_) throw std::out_of_range("key out of range: " + std::to_string(k));
  std::lock_guard lock(mutex_);
  auto it = cache_.find(k);
  if (it == cache_.end()) it = cache_.emplace(k, std::make_unique<Permutation>(builder_(k))).first;
  return *it->second;
}

std::size_t LazyFamily::materialized() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

IdealCipher::IdealCipher(int n, int kappa, std::uint64_t seed)
    : LazyFamily(n, kappa, [n, seed](Key k) { return make_permutation(n, derive_seed(seed, k)); }), seed_(seed) {
  check_key_bits(kappa, false);
}

std::shared_ptr<const IdealCipher> make_ideal_cipher(int n, int kappa, std::uint64_t seed) {
  return std::make_shared<const IdealCipher>(n, kappa, seed);
}

KeyDerivation KeyDerivation::xor_constant(int kappa, Key constant) {
  check_key_bits(kappa, false);
  if (constant == 0 || (constant >> kappa)) throw std::invalid_argument("xor derivation constant must be a nonzero key");
  std::vector<Key> table(std::size_t{1} << kappa);
  for (Key k = 0; k < table.size(); ++k) table[k] = k ^ constant;
  return KeyDerivation(kappa, std::move(table));
}

KeyDerivation KeyDerivation::from_table(int kappa, std::vector<Key> table) {
  check_key_bits(kappa, false);
  const std::size_t size = std::size_t{1} << kappa;
  if (table.size() != size) throw std::invalid_argument("derivation table has wrong length");
  std::vector<bool> seen(size, false);
  for (Key k = 0; k < size; ++k) {
    const Key v = table[k];
    if (v >= size || seen[v]) throw std::invalid_argument("derivation table is not a bijection");
    if (v == k) throw std::invalid_argument("derivation table has a fixpoint at " + std::to_string(k));
    seen[v] = true;
  }
  return KeyDerivation(kappa, std::move(table));
}

Key derive_related_key(const KeyDerivation& kd, Key k) { return kd(k); }

CipherPtr fixed_family(Permutation p, int kappa) {
  check_key_bits(kappa, true);
  return std::make_shared<const FixedFamily>(std::move(p), kappa);
}

CipherPtr identity_family(int n, int kappa) { return fixed_family(Permutation::identity(n), kappa); }

CipherPtr related_key_family(CipherPtr base, KeyDerivation pi) {
  if (base->key_bits() != pi.key_bits()) throw std::invalid_argument("derivation width differs from cipher key width");
  const int n = base->block_bits();
  const int kappa = base->key_bits();
  return std::make_shared<const LazyFamily>(n, kappa, [base, pi](Key k) { return base->at(pi(k)); });
}

CipherPtr cascade_family(CipherPtr first, CipherPtr second) {
  if (first->block_bits() != second->block_bits() || first->key_bits() != second->key_bits()) {
    throw std::invalid_argument("cascade of mismatched families");
  }
  return std::make_shared<const LazyFamily>(first->block_bits(), first->key_bits(),
                                            [first, second](Key k) { return second->at(k).after(first->at(k)); });
}

std::string to_string(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::EM: return "EM";
    case ConstructionKind::FX: return "FX";
    case ConstructionKind::EFX: return "EFX";
    case ConstructionKind::TWO_XOR: return "TWO_XOR";
    case ConstructionKind::DEFX: return "DEFX";
    case ConstructionKind::ITERATED_EM: return "ITERATED_EM";
    case ConstructionKind::ECBC3: return "ECBC3";
  }
  return "?";
}

ConstructionKind parse_construction_kind(const std::string& name) {
  for (auto kind : {ConstructionKind::EM, ConstructionKind::FX, ConstructionKind::EFX, ConstructionKind::TWO_XOR,
                    ConstructionKind::DEFX, ConstructionKind::ITERATED_EM, ConstructionKind::ECBC3}) {
    if (to_string(kind) == name) return kind;
  }
  if (name == "2XOR") return ConstructionKind::TWO_XOR;
  throw std::invalid_argument("unknown construction kind: " + name);
}

namespace {

std::size_t expected_ciphers(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::EM:
    case ConstructionKind::ITERATED_EM: return 0;
    case ConstructionKind::FX:
    case ConstructionKind::TWO_XOR:
    case ConstructionKind::ECBC3: return 1;
    case ConstructionKind::EFX: return 2;
    case ConstructionKind::DEFX: return 3;
  }
  return 0;
}

// Schedule a,a,b,a,b,a: returns (a, b) as round-key indices.
std::pair<std::size_t, std::size_t> efx_shaped_schedule(const std::vector<std::size_t>& s) {
  if (s.size() != 6 || s[0] != s[1] || s[0] != s[3] || s[0] != s[5] || s[2] != s[4] || s[0] == s[2]) {
    throw std::invalid_argument("iterated Even-Mansour schedule has no layered form (expected a,a,b,a,b,a)");
  }
  return {s[0], s[2]};
}

}  // namespace

ConstructionInstance::ConstructionInstance(ConstructionKind kind, Components components, KeyMaterial keys)
    : kind_(kind), components_(std::move(components)), keys_(std::move(keys)) {
  const std::size_t want = expected_ciphers(kind);
  if (components_.ciphers.size() != want) {
    throw std::invalid_argument(to_string(kind) + " needs " + std::to_string(want) + " cipher(s), got " +
                                std::to_string(components_.ciphers.size()));
  }
  for (const auto& c : components_.ciphers) {
    if (!c) throw std::invalid_argument("null cipher component");
  }

  if (kind == ConstructionKind::EM) {
    if (components_.permutations.size() != 1) throw std::invalid_argument("EM needs exactly one permutation");
    n_ = components_.permutations[0].bits();
    kappa_ = 0;
  } else if (kind == ConstructionKind::ITERATED_EM) {
    const auto& perms = components_.permutations;
    if (perms.empty()) throw std::invalid_argument("ITERATED_EM needs at least one permutation");
    n_ = perms[0].bits();
    for (const auto& p : perms) {
      if (p.bits() != n_) throw std::invalid_argument("ITERATED_EM permutations differ in width");
    }
    if (keys_.schedule.size() != perms.size() + 1) {
      throw std::invalid_argument("ITERATED_EM schedule needs one entry per whitening step (rounds + 1)");
    }
    for (auto idx : keys_.schedule) {
      if (idx >= keys_.round_keys.size()) throw std::invalid_argument("schedule index out of bounds");
    }
    for (auto rk : keys_.round_keys) {
      if (rk >> n_) throw std::invalid_argument("round key wider than the block");
    }
    kappa_ = n_;
  } else {
    if (!components_.permutations.empty()) throw std::invalid_argument(to_string(kind) + " takes no permutations");
    n_ = components_.ciphers[0]->block_bits();
    kappa_ = components_.ciphers[0]->key_bits();
    for (const auto& c : components_.ciphers) {
      if (c->block_bits() != n_ || c->key_bits() != kappa_) throw std::invalid_argument("cipher components differ in shape");
    }
    if (keys_.k >> kappa_) throw std::invalid_argument("key k wider than kappa");
  }

  if ((keys_.k1 >> n_) || (keys_.k2 >> n_) || (keys_.m1 >> n_) || (keys_.m2 >> n_)) {
    throw std::invalid_argument("whitening key wider than the block");
  }

  if (kind == ConstructionKind::TWO_XOR || kind == ConstructionKind::ECBC3) {
    if (!components_.derivation) components_.derivation = KeyDerivation::xor_one(kappa_);
    if (components_.derivation->key_bits() != kappa_) throw std::invalid_argument("derivation width differs from kappa");
    related_ = related_key_family(components_.ciphers[0], *components_.derivation);
  }
  if (kind == ConstructionKind::TWO_XOR) keys_.k2 = keys_.k1;
}

Word ConstructionInstance::encrypt(Word x) {
  ++forward_;
  return evaluate(x);
}

Word ConstructionInstance::decrypt(Word y) {
  if (kind_ == ConstructionKind::ECBC3) throw std::logic_error("ECBC3 is forward-only");
  ++backward_;
  return evaluate_inverse(y);
}

Word ConstructionInstance::evaluate(Word x) const {
  if (x >> n_) throw std::out_of_range("plaintext wider than the block");
  const auto& c = components_.ciphers;
  const Key k = keys_.k;
  switch (kind_) {
    case ConstructionKind::EM:
      return components_.permutations[0](x ^ keys_.k1) ^ keys_.k2;
    case ConstructionKind::FX:
      return c[0]->encrypt(k, x ^ keys_.k1) ^ keys_.k2;
    case ConstructionKind::EFX:
      return c[1]->encrypt(k, keys_.k2 ^ c[0]->encrypt(k, keys_.k1 ^ x));
    case ConstructionKind::TWO_XOR:
      return related_->encrypt(k, c[0]->encrypt(k, x ^ keys_.k1) ^ keys_.k1);
    case ConstructionKind::DEFX:
      return c[2]->encrypt(k, keys_.k2 ^ c[1]->encrypt(k, keys_.k1 ^ c[0]->encrypt(k, x)));
    case ConstructionKind::ITERATED_EM: {
      Word v = x ^ keys_.round_keys[keys_.schedule[0]];
      for (std::size_t i = 0; i < components_.permutations.size(); ++i) {
        v = components_.permutations[i](v) ^ keys_.round_keys[keys_.schedule[i + 1]];
      }
      return v;
    }
    case ConstructionKind::ECBC3: {
      const Word inner = c[0]->encrypt(k, keys_.m2 ^ c[0]->encrypt(k, keys_.m1 ^ c[0]->encrypt(k, x)));
      return related_->encrypt(k, inner);
    }
  }
  return 0;
}

Word ConstructionInstance::evaluate_inverse(Word y) const {
  if (y >> n_) throw std::out_of_range("ciphertext wider than the block");
  const auto& c = components_.ciphers;
  const Key k = keys_.k;
  switch (kind_) {
    case ConstructionKind::EM:
      return components_.permutations[0].inverse(y ^ keys_.k2) ^ keys_.k1;
    case ConstructionKind::FX:
      return c[0]->decrypt(k, y ^ keys_.k2) ^ keys_.k1;
    case ConstructionKind::EFX:
      return c[0]->decrypt(k, c[1]->decrypt(k, y) ^ keys_.k2) ^ keys_.k1;
    case ConstructionKind::TWO_XOR:
      return c[0]->decrypt(k, related_->decrypt(k, y) ^ keys_.k1) ^ keys_.k1;
    case ConstructionKind::DEFX:
      return c[0]->decrypt(k, c[1]->decrypt(k, c[2]->decrypt(k, y) ^ keys_.k2) ^ keys_.k1);
    case ConstructionKind::ITERATED_EM: {
      const auto& perms = components_.permutations;
      Word v = y;
      for (std::size_t i = perms.size(); i-- > 0;) {
        v = perms[i].inverse(v ^ keys_.round_keys[keys_.schedule[i + 1]]);
      }
      return v ^ keys_.round_keys[keys_.schedule[0]];
    }
    case ConstructionKind::ECBC3:
      throw std::logic_error("ECBC3 is forward-only");
  }
  return 0;
}

FullKey ConstructionInstance::full_key() const {
  switch (kind_) {
    case ConstructionKind::ITERATED_EM: {
      const auto [a, b] = efx_shaped_schedule(keys_.schedule);
      return {keys_.round_keys[a], keys_.round_keys[b], keys_.round_keys[b]};
    }
    case ConstructionKind::ECBC3:
      return {keys_.k, keys_.m1, keys_.m2};
    default:
      return {keys_.k, keys_.k1, keys_.k2};
  }
}

ConstructionInstance make_construction(ConstructionKind kind, Components components, KeyMaterial keys) {
  return ConstructionInstance(kind, std::move(components), std::move(keys));
}

LayeredView::LayeredView(const ConstructionInstance& instance)
    : LayeredView(instance.kind(), instance.components(), instance.block_bits()) {}

LayeredView::LayeredView(ConstructionKind kind, const Components& components, int n) : n_(n), kappa_(0) {
  const auto& c = components.ciphers;
  if (c.size() != expected_ciphers(kind)) throw std::invalid_argument("component count does not match kind");
  if (!c.empty()) kappa_ = c[0]->key_bits();
  switch (kind) {
    case ConstructionKind::EM:
      middle_ = fixed_family(components.permutations.at(0));
      outer_ = identity_family(n);
      break;
    case ConstructionKind::FX:
      middle_ = c[0];
      outer_ = identity_family(n, kappa_);
      break;
    case ConstructionKind::EFX:
      middle_ = c[0];
      outer_ = c[1];
      break;
    case ConstructionKind::TWO_XOR:
      middle_ = c[0];
      outer_ = related_key_family(c[0], components.derivation.value_or(KeyDerivation::xor_one(kappa_)));
      break;
    case ConstructionKind::DEFX:
      inner_ = c[0];
      middle_ = c[1];
      outer_ = c[2];
      break;
    case ConstructionKind::ECBC3:
      inner_ = c[0];
      middle_ = c[0];
      outer_ = cascade_family(c[0], related_key_family(c[0], components.derivation.value_or(KeyDerivation::xor_one(kappa_))));
      break;
    case ConstructionKind::ITERATED_EM: {
      const auto& p = components.permutations;
      if (p.size() != 5) throw std::invalid_argument("layered iterated Even-Mansour needs 5 permutations");
      kappa_ = n;
      auto perms = std::make_shared<const std::vector<Permutation>>(p);
      auto table = [n](auto&& fn) {
        return [n, fn](Key k0) {
          std::vector<std::uint16_t> t(std::size_t{1} << n);
          for (Word x = 0; x < t.size(); ++x) t[x] = static_cast<std::uint16_t>(fn(k0, x));
          return Permutation::from_table(n, std::move(t));
        };
      };
      inner_ = std::make_shared<const LazyFamily>(
          n, n, table([perms](Key k0, Word x) { return (*perms)[1]((*perms)[0](x ^ k0) ^ k0); }));
      middle_ = std::make_shared<const LazyFamily>(
          n, n, table([perms](Key k0, Word x) { return (*perms)[3]((*perms)[2](x) ^ k0); }));
      outer_ = std::make_shared<const LazyFamily>(n, n, table([perms](Key k0, Word x) { return (*perms)[4](x) ^ k0; }));
      break;
    }
  }
}

const Permutation& LayeredView::inner(Key k) const {
  if (!inner_) throw std::logic_error("construction has no inner layer");
  return inner_->at(k);
}

Word LayeredView::encrypt(const FullKey& key, Word x) const {
  const Word a = inner_ ? inner_->encrypt(key.k, x) : x;
  return outer_->encrypt(key.k, key.k2 ^ middle_->encrypt(key.k, key.k1 ^ a));
}

}  // namespace qkle
