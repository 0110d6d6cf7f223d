#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "satforge/parallel.hpp"

namespace satforge {

// Subset of Z_n stored as a bitmask over the least residues 0..n-1.
// All reductions mod n happen at insertion; the words past bit n-1 stay zero.
class ResidueSet {
 public:
  explicit ResidueSet(uint32_t modulus);
  static ResidueSet full(uint32_t modulus);
  static ResidueSet of(uint32_t modulus, std::span<const uint32_t> xs);

  uint32_t modulus() const { return n_; }
  bool test(uint32_t x) const { return words_[x >> 6] >> (x & 63) & 1; }
  void set(uint32_t x) { words_[x >> 6] |= uint64_t{1} << (x & 63); }
  void reset(uint32_t x) { words_[x >> 6] &= ~(uint64_t{1} << (x & 63)); }

  size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<uint32_t> elements() const;

  ResidueSet& operator|=(const ResidueSet& o);
  ResidueSet& operator&=(const ResidueSet& o);
  ResidueSet complement() const;
  bool intersects(const ResidueSet& o) const;
  bool operator==(const ResidueSet& o) const = default;

  // this |= { (x + shift) mod n : x in src }
  void or_rotated(const ResidueSet& src, uint32_t shift);

  // Least residue on which the two sets disagree, if any.
  std::optional<uint32_t> first_difference(const ResidueSet& o) const;

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  uint32_t n_;
  std::vector<uint64_t> words_;
};

// Connection set S ⊂ Z_n \ {0} with S = -S. Immutable once constructed;
// the constructor rejects 0, out-of-range residues, duplicates and
// non-symmetric inputs instead of repairing them.
class SymmetricSet {
 public:
  SymmetricSet(uint32_t modulus, std::vector<uint32_t> elements);

  uint32_t modulus() const { return n_; }
  const std::vector<uint32_t>& elements() const { return elements_; }
  size_t size() const { return elements_.size(); }
  bool contains(uint32_t x) const;
  ResidueSet to_residues() const;
  bool operator==(const SymmetricSet& o) const = default;

  // "17: 1,3,14,16"
  std::string to_text() const;
  static SymmetricSet from_text(const std::string& text);

  // {"n": 17, "set": [1,3,14,16]}
  nlohmann::json to_json() const;
  static SymmetricSet from_json(const nlohmann::json& j);

 private:
  uint32_t n_;
  std::vector<uint32_t> elements_;
};

// k-fold sumset kS = S+S+...+S, computed by k-1 pairwise folds.
ResidueSet sumset(const ResidueSet& base, uint32_t k);
ResidueSet sumset(const SymmetricSet& base, uint32_t k);
ResidueSet pairwise_sumset(const ResidueSet& acc, const ResidueSet& base);

// R_k(S): values s_1+...+s_k whose consecutive sub-sums are all nonzero
// mod n. Equivalently the endpoints of self-avoiding walks of length k
// from 0 in the circulant graph with connection set S (valid since 0 ∉ S).
ResidueSet restricted_sumset(const SymmetricSet& s, uint32_t k,
                             Exec exec = Exec::parallel);

bool is_sum_free(const ResidueSet& s);
bool is_sum_free(const SymmetricSet& s);
bool is_complete_sum_free(const ResidueSet& s);
bool is_complete_sum_free(const SymmetricSet& s);
bool is_kl_sum_free(const ResidueSet& s, uint32_t k, uint32_t l);
bool is_kl_sum_free(const SymmetricSet& s, uint32_t k, uint32_t l);
// kS and lS disjoint and covering Z_n.
bool is_complete_kl(const ResidueSet& s, uint32_t k, uint32_t l);
bool is_complete_kl(const SymmetricSet& s, uint32_t k, uint32_t l);

// The two hypotheses R_k(S) = Z_n \ (S ∪ {0}) and 0 ∉ (k+1)S, plus a
// re-validation of symmetry. Certificates make search failures debuggable:
// a residue where the R_k equality breaks, or a vanishing (k+1)-term sum.
struct HypothesisReport {
  bool symmetric = false;
  bool restricted_matches = false;
  bool no_zero_sum = false;
  std::optional<uint32_t> offending_residue;
  std::vector<uint32_t> zero_sum;

  bool passes() const { return symmetric && restricted_matches && no_zero_sum; }
  nlohmann::json to_json() const;
};

// k must be even (and >= 2); odd k throws std::invalid_argument.
HypothesisReport check_construction_hypotheses(const SymmetricSet& s, uint32_t k,
                                               Exec exec = Exec::parallel);

// S = {±(2αl+1) : 0 <= l <= k} in Z_n with n = 2α(α+4)k + 2α + 5.
SymmetricSet super_sum_set(uint32_t alpha, uint32_t k);

}  // namespace satforge
