#include "satforge/residues.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace satforge {

namespace {

constexpr uint32_t words_for(uint32_t n) { return (n + 63) / 64; }

template <typename Fn>
void for_each_bit(const std::vector<uint64_t>& words, Fn&& fn) {
  for (size_t w = 0; w < words.size(); ++w) {
    uint64_t x = words[w];
    while (x) {
      fn(static_cast<uint32_t>(w * 64 + std::countr_zero(x)));
      x &= x - 1;
    }
  }
}

}  // namespace

ResidueSet::ResidueSet(uint32_t modulus) : n_(modulus), words_(words_for(modulus), 0) {
  if (modulus == 0) throw std::invalid_argument("ResidueSet: modulus must be positive");
}

ResidueSet ResidueSet::full(uint32_t modulus) {
  ResidueSet r(modulus);
  for (uint32_t w = 0; w < r.words_.size(); ++w) r.words_[w] = ~uint64_t{0};
  uint32_t tail = modulus & 63;
  if (tail) r.words_.back() &= (uint64_t{1} << tail) - 1;
  return r;
}

ResidueSet ResidueSet::of(uint32_t modulus, std::span<const uint32_t> xs) {
  ResidueSet r(modulus);
  for (uint32_t x : xs) r.set(x % modulus);
  return r;
}

size_t ResidueSet::count() const {
  size_t c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::vector<uint32_t> ResidueSet::elements() const {
  std::vector<uint32_t> out;
  out.reserve(count());
  for_each_bit(words_, [&](uint32_t x) { out.push_back(x); });
  return out;
}

ResidueSet& ResidueSet::operator|=(const ResidueSet& o) {
  for (size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  return *this;
}

ResidueSet& ResidueSet::operator&=(const ResidueSet& o) {
  for (size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
  return *this;
}

ResidueSet ResidueSet::complement() const {
  ResidueSet r = full(n_);
  for (size_t w = 0; w < words_.size(); ++w) r.words_[w] &= ~words_[w];
  return r;
}

bool ResidueSet::intersects(const ResidueSet& o) const {
  for (size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & o.words_[w]) return true;
  return false;
}

void ResidueSet::or_rotated(const ResidueSet& src, uint32_t shift) {
  shift %= n_;
  for_each_bit(src.words_, [&](uint32_t x) {
    uint32_t y = x + shift;
    if (y >= n_) y -= n_;
    set(y);
  });
}

std::optional<uint32_t> ResidueSet::first_difference(const ResidueSet& o) const {
  for (size_t w = 0; w < words_.size(); ++w) {
    uint64_t d = words_[w] ^ o.words_[w];
    if (d) return static_cast<uint32_t>(w * 64 + std::countr_zero(d));
  }
  return std::nullopt;
}

SymmetricSet::SymmetricSet(uint32_t modulus, std::vector<uint32_t> elements)
    : n_(modulus), elements_(std::move(elements)) {
  if (modulus < 3) throw std::invalid_argument("SymmetricSet: modulus must be >= 3");
  std::sort(elements_.begin(), elements_.end());
  for (size_t i = 0; i < elements_.size(); ++i) {
    uint32_t x = elements_[i];
    if (x == 0) throw std::invalid_argument("SymmetricSet: 0 is not allowed");
    if (x >= n_) throw std::invalid_argument("SymmetricSet: residue out of range");
    if (i > 0 && elements_[i - 1] == x)
      throw std::invalid_argument("SymmetricSet: duplicate residue");
  }
  for (uint32_t x : elements_)
    if (!contains(n_ - x))
      throw std::invalid_argument("SymmetricSet: not closed under negation");
}

bool SymmetricSet::contains(uint32_t x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

ResidueSet SymmetricSet::to_residues() const { return ResidueSet::of(n_, elements_); }

std::string SymmetricSet::to_text() const {
  std::ostringstream os;
  os << n_ << ":";
  for (size_t i = 0; i < elements_.size(); ++i) os << (i ? "," : " ") << elements_[i];
  return os.str();
}

SymmetricSet SymmetricSet::from_text(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("SymmetricSet: expected \"n: a,b,c\"");
  uint32_t n = static_cast<uint32_t>(std::stoul(text.substr(0, colon)));
  std::vector<uint32_t> xs;
  std::string rest = text.substr(colon + 1);
  std::replace(rest.begin(), rest.end(), ',', ' ');
  std::istringstream is(rest);
  uint32_t x;
  while (is >> x) xs.push_back(x);
  return SymmetricSet(n, std::move(xs));
}

nlohmann::json SymmetricSet::to_json() const {
  return nlohmann::json{{"n", n_}, {"set", elements_}};
}

SymmetricSet SymmetricSet::from_json(const nlohmann::json& j) {
  return SymmetricSet(j.at("n").get<uint32_t>(),
                      j.at("set").get<std::vector<uint32_t>>());
}

ResidueSet pairwise_sumset(const ResidueSet& acc, const ResidueSet& base) {
  ResidueSet out(acc.modulus());
  for (uint32_t s : base.elements()) out.or_rotated(acc, s);
  return out;
}

ResidueSet sumset(const ResidueSet& base, uint32_t k) {
  if (k == 0) throw std::invalid_argument("sumset: k must be >= 1");
  if (base.empty()) throw std::invalid_argument("sumset: empty set");
  ResidueSet acc = base;
  for (uint32_t i = 1; i < k; ++i) acc = pairwise_sumset(acc, base);
  return acc;
}

ResidueSet sumset(const SymmetricSet& base, uint32_t k) {
  return sumset(base.to_residues(), k);
}

namespace {

// Self-avoiding walk enumeration from 0 in Cay(Z_n, S). Endpoints of all
// depth-k walks are OR-ed into out.
struct WalkEnum {
  uint32_t n;
  uint32_t target_depth;
  std::span<const uint32_t> steps;
  std::vector<uint64_t> visited;
  ResidueSet* out;

  WalkEnum(uint32_t n, uint32_t k, std::span<const uint32_t> steps, ResidueSet* out)
      : n(n), target_depth(k), steps(steps), visited(words_for(n), 0), out(out) {
    visited[0] |= 1;
  }

  bool seen(uint32_t x) const { return visited[x >> 6] >> (x & 63) & 1; }
  void mark(uint32_t x) { visited[x >> 6] |= uint64_t{1} << (x & 63); }
  void unmark(uint32_t x) { visited[x >> 6] &= ~(uint64_t{1} << (x & 63)); }

  void run(uint32_t pos, uint32_t depth) {
    if (depth == target_depth) {
      out->set(pos);
      return;
    }
    for (uint32_t s : steps) {
      uint32_t nxt = pos + s;
      if (nxt >= n) nxt -= n;
      if (!seen(nxt)) {
        mark(nxt);
        run(nxt, depth + 1);
        unmark(nxt);
      }
    }
  }
};

}  // namespace

ResidueSet restricted_sumset(const SymmetricSet& s, uint32_t k, Exec exec) {
  if (k == 0) throw std::invalid_argument("restricted_sumset: k must be >= 1");
  const uint32_t n = s.modulus();
  if (k == 1) return s.to_residues();

  std::span<const uint32_t> steps(s.elements());

  if (exec == Exec::serial || k == 2 || max_threads() == 1) {
    ResidueSet acc(n);
    WalkEnum walk(n, k, steps, &acc);
    walk.run(0, 0);
    return acc;
  }

  // Split the DFS over the first two steps; subtrees are independent.
  struct Prefix {
    uint32_t a, b;
  };
  std::vector<Prefix> prefixes;
  for (uint32_t a : steps)
    for (uint32_t b : steps) {
      uint32_t p1 = a % n;
      uint32_t p2 = p1 + b;
      if (p2 >= n) p2 -= n;
      if (p2 == 0 || p2 == p1) continue;
      prefixes.push_back({p1, p2});
    }

  ResidueSet merged(n);
#pragma omp parallel
  {
    ResidueSet local(n);
#pragma omp for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(prefixes.size()); ++i) {
      WalkEnum walk(n, k, steps, &local);
      walk.mark(prefixes[i].a);
      walk.mark(prefixes[i].b);
      walk.run(prefixes[i].b, 2);
    }
#pragma omp critical
    merged |= local;
  }
  return merged;
}

bool is_sum_free(const ResidueSet& s) { return !sumset(s, 2).intersects(s); }
bool is_sum_free(const SymmetricSet& s) { return is_sum_free(s.to_residues()); }

bool is_complete_sum_free(const ResidueSet& s) { return sumset(s, 2) == s.complement(); }
bool is_complete_sum_free(const SymmetricSet& s) {
  return is_complete_sum_free(s.to_residues());
}

bool is_kl_sum_free(const ResidueSet& s, uint32_t k, uint32_t l) {
  if (k == l) throw std::invalid_argument("is_kl_sum_free: k and l must differ");
  return !sumset(s, k).intersects(sumset(s, l));
}
bool is_kl_sum_free(const SymmetricSet& s, uint32_t k, uint32_t l) {
  return is_kl_sum_free(s.to_residues(), k, l);
}

bool is_complete_kl(const ResidueSet& s, uint32_t k, uint32_t l) {
  if (k == l) throw std::invalid_argument("is_complete_kl: k and l must differ");
  ResidueSet ks = sumset(s, k);
  ResidueSet ls = sumset(s, l);
  if (ks.intersects(ls)) return false;
  ResidueSet both = ks;
  both |= ls;
  return both == ResidueSet::full(s.modulus());
}
bool is_complete_kl(const SymmetricSet& s, uint32_t k, uint32_t l) {
  return is_complete_kl(s.to_residues(), k, l);
}

namespace {

// One vanishing (k+1)-term sum over S, reconstructed by walking the sumset
// layers backwards from 0. Layers are 1S..kS; at each step pick the least
// element s with (target - s) in the previous layer.
std::vector<uint32_t> zero_sum_witness(const SymmetricSet& s, uint32_t terms) {
  const uint32_t n = s.modulus();
  std::vector<ResidueSet> layers;
  layers.push_back(s.to_residues());
  for (uint32_t i = 1; i < terms; ++i)
    layers.push_back(pairwise_sumset(layers.back(), layers.front()));
  if (!layers.back().test(0)) return {};

  std::vector<uint32_t> tuple;
  uint32_t target = 0;
  for (uint32_t i = terms; i >= 2; --i) {
    for (uint32_t x : s.elements()) {
      uint32_t prev = (target + n - x % n) % n;
      if (layers[i - 2].test(prev)) {
        tuple.push_back(x);
        target = prev;
        break;
      }
    }
  }
  tuple.push_back(target);  // the final term is an element of S itself
  return tuple;
}

}  // namespace

HypothesisReport check_construction_hypotheses(const SymmetricSet& s, uint32_t k,
                                               Exec exec) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("check_construction_hypotheses: k must be even, >= 2");
  HypothesisReport rep;

  // SymmetricSet enforces symmetry at construction; re-validate anyway.
  rep.symmetric = true;
  for (uint32_t x : s.elements())
    if (!s.contains(s.modulus() - x)) rep.symmetric = false;

  ResidueSet expected = s.to_residues();
  expected.set(0);
  expected = expected.complement();  // Z_n \ (S ∪ {0})
  ResidueSet rk = restricted_sumset(s, k, exec);
  rep.restricted_matches = rk == expected;
  if (!rep.restricted_matches) rep.offending_residue = rk.first_difference(expected);

  rep.no_zero_sum = !sumset(s, k + 1).test(0);
  if (!rep.no_zero_sum) rep.zero_sum = zero_sum_witness(s, k + 1);
  return rep;
}

nlohmann::json HypothesisReport::to_json() const {
  nlohmann::json j{{"symmetric", symmetric},
                   {"restricted_matches", restricted_matches},
                   {"no_zero_sum", no_zero_sum},
                   {"passes", passes()}};
  if (offending_residue) j["offending_residue"] = *offending_residue;
  if (!zero_sum.empty()) j["zero_sum"] = zero_sum;
  return j;
}

SymmetricSet super_sum_set(uint32_t alpha, uint32_t k) {
  if (alpha < 1 || k < 1)
    throw std::invalid_argument("super_sum_set: alpha and k must be >= 1");
  uint32_t n = 2 * alpha * (alpha + 4) * k + 2 * alpha + 5;
  std::vector<uint32_t> xs;
  for (uint32_t l = 0; l <= k; ++l) {
    uint32_t x = 2 * alpha * l + 1;
    xs.push_back(x);
    xs.push_back(n - x);
  }
  return SymmetricSet(n, std::move(xs));
}

}  // namespace satforge
