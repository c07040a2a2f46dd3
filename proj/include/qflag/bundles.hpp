#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "qflag/session.hpp"

namespace qflag {

enum class HopfTag { Alpha, Beta, Gamma };

struct HopfMapId {
  HopfTag tag = HopfTag::Alpha;
  AlgebraSpec source;
  AlgebraSpec target;
  static HopfMapId make(HopfTag tag, int n);
  std::string name() const;
  friend bool operator==(const HopfMapId&, const HopfMapId&) = default;
};

HopfTag parse_hopf_tag(const std::string& s);

enum class DolbeaultPart { Hol, AntiHol };
enum class Space { Sphere, ProjectiveSpace, LineBundle };

struct NotHomogeneous : Error {
  explicit NotHomogeneous(const std::string& w) : Error("not-homogeneous", w) {}
};
struct CoinvarianceViolation : Error {
  explicit CoinvarianceViolation(const std::string& w) : Error("coinvariance-violation", w) {}
};

// Algebra map between two contexts, given by its values on generators.
class AlgebraMap {
 public:
  AlgebraMap(const Algebra& source, const Algebra& target, std::vector<NCPoly> images);
  const Algebra& source() const { return *source_; }
  const Algebra& target() const { return *target_; }
  NCPoly operator()(const NCPoly& f) const;
  const NCPoly& image(const Word& w) const;

 private:
  const Algebra* source_;
  const Algebra* target_;
  std::vector<NCPoly> images_;  // by generator code
  mutable std::unordered_map<Word, NCPoly> memo_;
};

class Bundles {
 public:
  explicit Bundles(const Session& s);
  Bundles(const Bundles&) = delete;
  Bundles& operator=(const Bundles&) = delete;

  const Session& session() const { return s_; }
  HopfMapId map_id(HopfTag tag) const { return HopfMapId::make(tag, s_.n()); }
  const Algebra& target(HopfTag tag) const;

  NCPoly hopf_map(HopfTag tag, const NCPoly& f) const;
  // U_{N-1} -> SU_{N-1} (detinv -> 1) and U_{N-1} -> U_1 with zeta∘alpha = gamma.
  NCPoly delta(const NCPoly& f) const { return delta_(f); }
  NCPoly zeta(const NCPoly& f) const { return zeta_(f); }
  // Linear section of the map; multiplicative on normal words.
  NCPoly section(HopfTag tag, const NCPoly& h) const;

  TensorPoly coaction(HopfTag tag, const NCPoly& f) const;
  bool is_coinvariant(HopfTag tag, const NCPoly& f) const;
  // p with coaction(Gamma, f) = f ⊗ t^p, so deg z_i = -1.
  int line_bundle_degree(const NCPoly& f) const;

  TensorPoly galois_ver(const NCPoly& f, const NCPoly& g, HopfTag tag) const;
  TensorPoly galois_ver(const TensorPoly& x, HopfTag tag) const;
  // v(f ⊗ p) = f S(p_1) ⊗ p_2
  TensorPoly v_map(const NCPoly& f, const NCPoly& p) const;
  TensorPoly galois_ver_inv(const NCPoly& f, const NCPoly& h, HopfTag tag) const;
  TensorPoly galois_ver_inv(const TensorPoly& x, HopfTag tag) const;

  Omega1 theta(const NCPoly& x) const;
  Omega1 dolbeault(const NCPoly& f, DolbeaultPart part) const;
  Omega1 connection_project(const Omega1& w) const;
  Omega1 covariant_derivative(const NCPoly& f) const;

  // v̄ ↦ coset(v_2) ⊗ S(π(v_1)), collected by target word.
  std::map<Word, OneFormCoords, WordLess> framing_coaction(HopfTag tag, const NCPoly& v) const;
  // e0 coordinate of the upstairs coset of section(Alpha, y) - ε(y).
  QScalar fiber_class(const NCPoly& y) const;
  // (id ⊗ α)Ad_R(x) resolved by target word; every left leg should lie in the ideal.
  std::map<Word, NCPoly, WordLess> adr_alpha(const NCPoly& x) const;
  // Images of the ideal window under the map, nonzero and normal-formed.
  std::vector<NCPoly> fiber_ideal_span(HopfTag tag, int degree_bound) const;

 private:
  const AlgebraMap& map(HopfTag tag) const;

  const Session& s_;
  AlgebraMap alpha_, beta_, gamma_, delta_, zeta_;
};

// Element of a coinvariant subalgebra or line bundle, checked on construction.
class SubalgebraElement {
 public:
  SubalgebraElement(const Bundles& b, NCPoly f, Space space, int degree = 0);
  const NCPoly& ambient() const { return f_; }
  Space space() const { return space_; }
  int degree() const { return degree_; }

 private:
  NCPoly f_;
  Space space_;
  int degree_;
};

}  // namespace qflag
