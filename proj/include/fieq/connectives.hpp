#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fieq/report.hpp"
#include "fieq/unit.hpp"

namespace fieq {

// Registry identity of a connective. `custom` for anything built by hand;
// the constructors only substitute closed forms for registry members.
enum class TNormId { custom, min, product, lukasiewicz, drastic };
enum class TConormId { custom, max, prob_sum, lukasiewicz, drastic };
enum class NegationId { custom, standard, nd2, nd1 };

struct TNormFlags {
  bool closed_form = false;
  bool left_continuous = false;
  bool positive = false;  // T(x,y)=0 forces x=0 or y=0
};

struct TConormFlags {
  bool closed_form = false;
  bool positive = false;  // certified symbolically: S(x,y)=1 forces x=1 or y=1
};

struct NegationFlags {
  bool strong = false;
  bool non_vanishing = false;  // N(x)>0 for every x<1
};

using BinaryMap = std::function<double(double, double)>;
using UnaryMap = std::function<double(double)>;

class TNorm {
 public:
  TNorm(std::string name, BinaryMap fn, TNormFlags flags = {}, TNormId id = TNormId::custom)
      : name_(std::move(name)), fn_(std::move(fn)), flags_(flags), id_(id) {}

  double operator()(double x, double y) const { return fn_(x, y); }
  UnitValue eval(UnitValue x, UnitValue y) const { return UnitValue(fn_(x.value(), y.value())); }

  const std::string& name() const noexcept { return name_; }
  const TNormFlags& flags() const noexcept { return flags_; }
  TNormId id() const noexcept { return id_; }

 private:
  std::string name_;
  BinaryMap fn_;
  TNormFlags flags_;
  TNormId id_;
};

class TConorm {
 public:
  TConorm(std::string name, BinaryMap fn, TConormFlags flags = {}, TConormId id = TConormId::custom)
      : name_(std::move(name)), fn_(std::move(fn)), flags_(flags), id_(id) {}

  double operator()(double x, double y) const { return fn_(x, y); }
  UnitValue eval(UnitValue x, UnitValue y) const { return UnitValue(fn_(x.value(), y.value())); }

  const std::string& name() const noexcept { return name_; }
  const TConormFlags& flags() const noexcept { return flags_; }
  TConormId id() const noexcept { return id_; }

 private:
  std::string name_;
  BinaryMap fn_;
  TConormFlags flags_;
  TConormId id_;
};

class Negation {
 public:
  Negation(std::string name, UnaryMap fn, NegationFlags flags = {}, NegationId id = NegationId::custom)
      : name_(std::move(name)), fn_(std::move(fn)), flags_(flags), id_(id) {}

  double operator()(double x) const { return fn_(x); }
  UnitValue eval(UnitValue x) const { return UnitValue(fn_(x.value())); }

  const std::string& name() const noexcept { return name_; }
  const NegationFlags& flags() const noexcept { return flags_; }
  NegationId id() const noexcept { return id_; }

 private:
  std::string name_;
  UnaryMap fn_;
  NegationFlags flags_;
  NegationId id_;
};

// Registry lookups by identifier ("tnorm:min", "tconorm:SD", "neg:standard").
// Throw UnknownNameError.
TNorm tnorm(std::string_view id);
TConorm tconorm(std::string_view id);
Negation negation(std::string_view id);

std::vector<TNorm> registered_tnorms();
std::vector<TConorm> registered_tconorms();
std::vector<Negation> registered_negations();

/// Commutativity, monotonicity and neutral element on G_n; associativity on
/// G_m with m = min(grid_n, kDefaultGrid3).
CheckReport verify_tnorm(const TNorm& t, int grid_n = kDefaultGrid, double tol = kClosedFormTol);
CheckReport verify_tconorm(const TConorm& s, int grid_n = kDefaultGrid, double tol = kClosedFormTol);
CheckReport verify_negation(const Negation& n, int grid_n = kDefaultGrid, double tol = kClosedFormTol);

/// Grid search for S(x,y) >= 1-tol with x,y < 1. A grid can only falsify, so
/// a passing check is `consistent` unless the positive flag certifies it.
CheckReport is_positive_tconorm(const TConorm& s, int grid_n = kDefaultGrid, double tol = kClosedFormTol);

/// Positivity of a t-norm: T(x,y) <= tol with x,y > 0 falsifies. Same verdict
/// rules as is_positive_tconorm, certified by TNormFlags::positive.
CheckReport is_positive_tnorm(const TNorm& t, int grid_n = kDefaultGrid, double tol = kClosedFormTol);

/// Non-vanishing negation: N(x) <= tol for some grid x < 1 falsifies.
CheckReport is_non_vanishing(const Negation& n, int grid_n = kDefaultGrid, double tol = kClosedFormTol);

/// Law of excluded middle: |S(N(x),x) - 1| <= tol on G_n.
CheckReport satisfies_lem(const TConorm& s, const Negation& n, int grid_n = kDefaultGrid,
                          double tol = kClosedFormTol);

}  // namespace fieq
