#pragma once

// Genus-0 Gromov-Witten invariants with point insertions, N_beta, by the
// WDVV associativity relation with insertions (D1, D2, pt, pt):
//
//   (D1.D2) N_beta = sum_{b1 + b2 = beta} N_b1 N_b2 (b1.b2)
//                    * [ (D2.b1)(D1.b2) C(n-3, n1-1) - (D1.b1)(D2.b1) C(n-3, n1) ]
//
// where n and n1 are the point counts of beta and b1. Classes with at most
// two point constraints come from the model's seed table.

#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "enumgeo/big_integer.hpp"
#include "enumgeo/memo_table.hpp"
#include "enumgeo/surface_model.hpp"

namespace enumgeo {

inline constexpr const char* kKindGw = "gw";

template <class Model>
class GromovWitten {
 public:
  using Class = typename Model::Class;

  explicit GromovWitten(std::shared_ptr<MemoTable> memo = std::make_shared<MemoTable>(),
                        DivisorPair<Class> pair = Model::divisor_pairs()[0])
      : memo_(std::move(memo)), pair_(pair), seeds_(Model::base_cases()) {
    if (Model::intersect(pair_.first, pair_.second) == 0)
      throw DomainError("divisor pair must have nonzero intersection");
  }

  BigInt operator()(const Class& c) const {
    if (Model::is_zero(c) || !Model::is_effective(c)) return 0;
    const Class key_class = Model::canonical(c);
    if (Model::point_count(key_class) <= 2) {
      const auto it = seeds_.find(key_class);
      return it == seeds_.end() ? BigInt(0) : BigInt(it->second);
    }
    const MemoKey key{std::string(surface_name(Model::id)), Model::coords(key_class), kKindGw};
    if (auto hit = memo_->find(key)) return *hit;
    BigInt value = recurse(key_class);
    memo_->store(key, value);
    return value;
  }

  const DivisorPair<Class>& divisor_pair() const { return pair_; }
  const std::shared_ptr<MemoTable>& memo() const { return memo_; }

 private:
  BigInt recurse(const Class& c) const {
    const Class& d1 = pair_.first;
    const Class& d2 = pair_.second;
    const int n = Model::point_count(c);
    BigInt total = 0;
    for (const auto& [first, second] : Model::splittings(c)) {
      const int pairing = Model::intersect(first, second);
      if (pairing == 0) continue;
      const int n1 = Model::point_count(first);
      const BigInt bracket =
          BigInt(Model::intersect(d2, first) * Model::intersect(d1, second)) * binomial(n - 3, n1 - 1) -
          BigInt(Model::intersect(d1, first) * Model::intersect(d2, first)) * binomial(n - 3, n1);
      if (bracket == 0) continue;
      const BigInt left = (*this)(first);
      if (left == 0) continue;
      const BigInt right = (*this)(second);
      if (right == 0) continue;
      total += left * right * pairing * bracket;
    }
    const int d1d2 = Model::intersect(d1, d2);
    if (total % d1d2 != 0) {
      std::ostringstream msg;
      msg << "WDVV sum for " << c << " not divisible by D1.D2 = " << d1d2;
      throw std::logic_error(msg.str());
    }
    return total / d1d2;
  }

  std::shared_ptr<MemoTable> memo_;
  DivisorPair<Class> pair_;
  std::map<Class, int> seeds_;
};

/// Seeds of the recursion: every effective class with point count <= 2.
template <class Model>
std::map<typename Model::Class, BigInt> base_cases() {
  std::map<typename Model::Class, BigInt> out;
  for (const auto& [c, v] : Model::base_cases()) out.emplace(c, BigInt(v));
  return out;
}

/// Runtime-dispatched N_beta; `coords` is [d], [a,b] or [a,b,k] by surface.
inline BigInt gw_surface(SurfaceId surface, const std::vector<int>& coords,
                         std::shared_ptr<MemoTable> memo = std::make_shared<MemoTable>()) {
  switch (surface) {
    case SurfaceId::projective_plane:
      return GromovWitten<ProjectivePlane>(std::move(memo))(ProjectivePlane::from_coords(coords));
    case SurfaceId::quadric: return GromovWitten<Quadric>(std::move(memo))(Quadric::from_coords(coords));
    case SurfaceId::blown_quadric:
      return GromovWitten<BlownQuadric>(std::move(memo))(BlownQuadric::from_coords(coords));
  }
  throw DomainError("unknown surface identifier");
}

inline BigInt gw_surface(const SurfaceClass& c, std::shared_ptr<MemoTable> memo = std::make_shared<MemoTable>()) {
  return GromovWitten<BlownQuadric>(std::move(memo))(c);
}

struct PairDisagreement {
  std::string cls;
  std::vector<std::string> values;  // one per divisor pair, decimal
};

/// Recomputes every effective class up to `degree_bound` with each of the
/// model's divisor pairs (fresh memo per pair) and lists disagreements.
/// The degree is a + b for the quadric models and d for the plane.
template <class Model>
std::vector<PairDisagreement> verify_pair_independence(int degree_bound) {
  using Class = typename Model::Class;
  std::vector<GromovWitten<Model>> engines;
  for (const auto& pair : Model::divisor_pairs()) engines.emplace_back(std::make_shared<MemoTable>(), pair);

  std::vector<Class> classes;
  if constexpr (std::is_same_v<Class, PlaneClass>) {
    for (int d = 1; d <= degree_bound; ++d) classes.push_back({d});
  } else {
    for (int s = 0; s <= degree_bound; ++s) {
      for (int a = 0; a <= s; ++a) {
        const int lo = Model::id == SurfaceId::blown_quadric ? -2 : 0;
        const int hi = Model::id == SurfaceId::blown_quadric ? s : 0;
        for (int k = lo; k <= hi; ++k) {
          const Class c{a, s - a, k};
          if (!Model::is_zero(c) && Model::is_effective(c)) classes.push_back(c);
        }
      }
    }
  }

  std::vector<PairDisagreement> report;
  for (const auto& c : classes) {
    std::vector<BigInt> values;
    for (const auto& e : engines) values.push_back(e(c));
    bool same = true;
    for (const auto& v : values) same = same && (v == values.front());
    if (!same) {
      std::ostringstream name;
      name << c;
      PairDisagreement d{name.str(), {}};
      for (const auto& v : values) d.values.push_back(to_decimal(v));
      report.push_back(std::move(d));
    }
  }
  return report;
}

}  // namespace enumgeo
