#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "semicurve/monomial.hpp"

namespace semicurve {

/// A monomial ideal held by its minimal generators.
///
/// Generators are pairwise non-dividing and kept in canonical order
/// (descending under standard grevlex, which is total), so two ideals are
/// equal iff their generator vectors are equal. The zero ideal has no
/// generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  /// The zero ideal of the given arity.
  explicit MonomialIdeal(std::size_t arity = 1);
  /// Minimalizes `gens`. Throws UserError if a generator has the wrong arity.
  MonomialIdeal(std::size_t arity, std::vector<Monomial> gens);

  static MonomialIdeal zero(std::size_t arity) { return MonomialIdeal(arity); }
  static MonomialIdeal unit(std::size_t arity);
  /// The ideal (x_i : i in indices).
  static MonomialIdeal variables(std::size_t arity, const std::vector<std::size_t>& indices);

  std::size_t arity() const { return arity_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }

  /// True iff some generator divides `m`.
  bool contains(const Monomial& m) const;
  /// True iff every generator of `other` lies in this ideal.
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend MonomialIdeal minimalize(std::size_t arity, std::vector<Monomial> gens);

 private:
  std::size_t arity_;
  std::vector<Monomial> gens_;
};

/// Drops every monomial divisible by another one in the set (including
/// duplicates) and returns the canonical ideal.
MonomialIdeal minimalize(std::size_t arity, std::vector<Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// I^k by repeated multiplication; I^0 is the unit ideal.
MonomialIdeal power(const MonomialIdeal& ideal, std::size_t k);
/// Successive powers I^1..I^k, sharing the multiplication work.
std::vector<MonomialIdeal> powers(const MonomialIdeal& ideal, std::size_t k);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// I : (m).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
/// I : J. Throws UserError when J is the zero ideal.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);
MonomialIdeal radical(const MonomialIdeal& ideal);

/// Whether m * J is contained in I, checked generator by generator.
bool multiplies_into(const Monomial& m, const MonomialIdeal& by, const MonomialIdeal& into);

std::string to_string(const MonomialIdeal& ideal);

void to_json(nlohmann::json& j, const MonomialIdeal& ideal);
void from_json(const nlohmann::json& j, MonomialIdeal& ideal);
void to_json(nlohmann::json& j, const Monomial& m);
void from_json(const nlohmann::json& j, Monomial& m);

}  // namespace semicurve
