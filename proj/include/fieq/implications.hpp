#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fieq/connectives.hpp"
#include "fieq/generators.hpp"
#include "fieq/report.hpp"
#include "fieq/unit.hpp"

namespace fieq {

enum class Family { named, r, sn, ql, f, g, nabla };

std::string_view to_string(Family f) noexcept;

class Implication;

/// How an implication was obtained. Only the fields of its family are set.
struct Provenance {
  Family family = Family::named;
  std::optional<TNorm> tnorm;
  std::optional<TConorm> tconorm;
  std::optional<Negation> negation;
  std::optional<FGenerator> f;
  std::optional<GGenerator> g;
  std::vector<Implication> operands;  // nabla_of(I, J)
};

struct ImplicationTraits {
  // Values come from a numeric sup or inverse; checks use kBisectionTol.
  bool bisection_backed = false;
  // (I1)-(I3) are known to hold (registry member or a constructor that
  // guarantees them). Uncertified candidates are swept before composition.
  bool axioms_certified = false;
};

/// An evaluable map [0,1]^2 -> [0,1]. Immutable; copies share state.
class Implication {
 public:
  using Fn = std::function<double(double, double)>;

  Implication(std::string name, Fn fn, Provenance provenance = {}, ImplicationTraits traits = {});

  double operator()(double x, double y) const;

  const std::string& name() const noexcept;
  const Provenance& provenance() const noexcept;
  const ImplicationTraits& traits() const noexcept;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct Implication::Node {
  std::string name;
  Fn fn;
  Provenance provenance;
  ImplicationTraits traits;
};

inline double Implication::operator()(double x, double y) const { return node_->fn(x, y); }

/// Checked evaluation: throws DomainError when x, y or the value leave [0,1].
UnitValue evaluate(const Implication& imp, double x, double y);

/// Registry: LK, GD, RC, KD, GG, RS, WB, YG, FD, DP. Accepts "LK" or "named:LK".
Implication named(std::string_view id);
std::vector<Implication> registered_named();
std::vector<std::string> named_ids();

/// (I1) and (I2) on adjacent grid pairs, (I3) at the corners.
CheckReport check_axioms(const Implication& imp, int grid_n = kDefaultGrid, double tol = kClosedFormTol);

CheckReport has_np(const Implication& imp, int grid_n = kDefaultGrid, double tol = kClosedFormTol);
/// x<=y must give I >= 1-tol, x>y must give I < 1-tol. A misclassified point
/// scores residual 1 when x>y, 1-I when x<=y.
CheckReport has_op(const Implication& imp, int grid_n = kDefaultGrid, double tol = kClosedFormTol);
CheckReport has_ip(const Implication& imp, int grid_n = kDefaultGrid, double tol = kClosedFormTol);
CheckReport has_ep(const Implication& imp, int grid_n = kDefaultGrid3, double tol = kClosedFormTol);
/// |I(1,a) - a| for every a = I(x,y) with (x,y) in G_n^2. The range is
/// sampled as the image of the grid.
CheckReport has_np_on_range(const Implication& imp, int grid_n = kDefaultGrid, double tol = kClosedFormTol);

enum class Tri { holds, fails, unknown };
std::string_view to_string(Tri t) noexcept;

/// holds/consistent map to holds, except `consistent` maps to unknown when the
/// report's universal claim is not certified (continuous sweeps of IE).
Tri to_tri(const CheckReport& r) noexcept;

struct PropertyFlags {
  CheckReport axioms;
  Tri np = Tri::unknown;
  Tri op = Tri::unknown;
  Tri ip = Tri::unknown;
  Tri ep = Tri::unknown;
  Tri np_on_range = Tri::unknown;
  Tri ie = Tri::unknown;
  std::vector<std::pair<std::string, Witness>> witnesses;  // one per failing property
};

}  // namespace fieq
