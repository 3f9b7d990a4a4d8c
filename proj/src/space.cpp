#include "space.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "numeric.hpp"

namespace ccvms::space {

namespace {

const char* rule_kind_name(RuleKind kind) {
  switch (kind) {
    case RuleKind::Identity: return "identity";
    case RuleKind::Constant: return "constant";
    case RuleKind::ReciprocalOrZero: return "reciprocal-or-zero";
    case RuleKind::Affine: return "affine";
    case RuleKind::Table: return "table";
  }
  return "unknown";
}

}  // namespace

std::string space_kind_name(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::RealLineDiag: return "real-line-diag";
    case SpaceKind::RealLineExpDiag: return "real-line-exp-diag";
    case SpaceKind::RealLineDiscrete: return "real-line-discrete";
    case SpaceKind::SquareTuple: return "square-tuple";
    case SpaceKind::StepFn: return "stepfn";
  }
  return "unknown";
}

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw ContractError("point: needs at least one coordinate");
  for (double c : coords_)
    if (!std::isfinite(c)) throw ContractError("point: coordinates must be finite");
}

Point Point::scalar(double x) { return Point(std::vector<double>{x}); }

Point Point::pair(double x, double y) { return Point(std::vector<double>{x, y}); }

double Point::value() const {
  if (coords_.size() != 1)
    throw ContractError("point: value() requires a scalar point");
  return coords_[0];
}

std::string Point::describe() const {
  if (coords_.size() == 1) return numeric::num_to_string(coords_[0]);
  std::string out = coords_.size() == 2 ? "(" : "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    out += numeric::num_to_string(coords_[i]);
    if (i + 1 < coords_.size()) out += ", ";
  }
  out += coords_.size() == 2 ? ")" : "]";
  return out;
}

bool approx_equal(const Point& a, const Point& b, double tol) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i)
    if (std::abs(a.coords()[i] - b.coords()[i]) > tol) return false;
  return true;
}

Instance Instance::real_line_diag(double alpha) {
  if (alpha < 0.0) throw ContractError("real-line-diag: alpha must be nonnegative");
  Instance s;
  s.kind = SpaceKind::RealLineDiag;
  s.alpha = alpha;
  s.algebra_desc = algebra::Descriptor::mat_entrywise(2);
  s.lo = -10.0;
  s.hi = 10.0;
  return s;
}

Instance Instance::real_line_exp_diag(double alpha) {
  if (alpha < 0.0)
    throw ContractError("real-line-exp-diag: alpha must be nonnegative");
  Instance s;
  s.kind = SpaceKind::RealLineExpDiag;
  s.alpha = alpha;
  s.algebra_desc = algebra::Descriptor::mat_entrywise(2);
  s.lo = -3.0;
  s.hi = 4.0;
  return s;
}

Instance Instance::real_line_discrete() {
  Instance s;
  s.kind = SpaceKind::RealLineDiscrete;
  s.algebra_desc = algebra::Descriptor::mat_entrywise(2);
  s.lo = -10.0;
  s.hi = 10.0;
  return s;
}

Instance Instance::square_tuple(bool ambient) {
  Instance s;
  s.kind = SpaceKind::SquareTuple;
  s.ambient = ambient;
  s.algebra_desc = algebra::Descriptor::tuple(2);
  s.lo = ambient ? -2.0 : -1.0;
  s.hi = ambient ? 2.0 : 1.0;
  return s;
}

Instance Instance::step_fn(int pieces) {
  if (pieces < 1) throw ContractError("stepfn: piece count must be positive");
  Instance s;
  s.kind = SpaceKind::StepFn;
  s.pieces = pieces;
  s.algebra_desc = algebra::Descriptor::step_fn(pieces);
  s.lo = -3.0;
  s.hi = 3.0;
  return s;
}

std::string Instance::label() const {
  switch (kind) {
    case SpaceKind::RealLineDiag:
    case SpaceKind::RealLineExpDiag:
      return space_kind_name(kind) + "(alpha=" + numeric::num_to_string(alpha) +
             ")";
    case SpaceKind::RealLineDiscrete:
      return space_kind_name(kind);
    case SpaceKind::SquareTuple:
      return space_kind_name(kind) + (ambient ? "(ambient)" : "([-1,1]^2)");
    case SpaceKind::StepFn:
      return space_kind_name(kind) + "(" + std::to_string(pieces) + ")";
  }
  return "unknown";
}

int Instance::point_dim() const {
  switch (kind) {
    case SpaceKind::RealLineDiag:
    case SpaceKind::RealLineExpDiag:
    case SpaceKind::RealLineDiscrete:
      return 1;
    case SpaceKind::SquareTuple:
      return 2;
    case SpaceKind::StepFn:
      return pieces;
  }
  return 0;
}

bool Instance::contains(const Point& x) const {
  if (x.dim() != point_dim()) return false;
  if (kind == SpaceKind::SquareTuple && !ambient) {
    for (double c : x.coords())
      if (std::abs(c) > 1.0 + 1e-12) return false;
  }
  return true;
}

algebra::Element Instance::distance(const Point& x, const Point& y) const {
  if (!contains(x))
    throw DomainError("distance: point " + x.describe() + " is outside " +
                      label());
  if (!contains(y))
    throw DomainError("distance: point " + y.describe() + " is outside " +
                      label());
  switch (kind) {
    case SpaceKind::RealLineDiag: {
      const double c = std::abs(x.value() - y.value());
      const double d[] = {c, alpha * c};
      return algebra::diagonal(algebra_desc, d);
    }
    case SpaceKind::RealLineExpDiag: {
      const double c = std::abs(std::exp(x.value()) - std::exp(y.value()));
      const double d[] = {c, alpha * c};
      return algebra::diagonal(algebra_desc, d);
    }
    case SpaceKind::RealLineDiscrete:
      return std::abs(x.value() - y.value()) > 0.0 ? algebra::unit(algebra_desc)
                                                   : algebra::zero(algebra_desc);
    case SpaceKind::SquareTuple: {
      const double d[] = {std::abs(x.coords()[0] - y.coords()[0]),
                          std::abs(x.coords()[1] - y.coords()[1])};
      return algebra::diagonal(algebra_desc, d);
    }
    case SpaceKind::StepFn: {
      std::vector<double> d(static_cast<std::size_t>(pieces));
      for (int i = 0; i < pieces; ++i)
        d[static_cast<std::size_t>(i)] =
            std::abs(x.coords()[i] - y.coords()[i]);
      return algebra::Element(algebra_desc, std::move(d));
    }
  }
  throw ContractError("distance: unknown space kind");
}

std::string Rule::describe() const {
  switch (kind) {
    case RuleKind::Identity:
      return "identity";
    case RuleKind::Constant:
      return std::string("constant ") + constant->describe();
    case RuleKind::ReciprocalOrZero:
      return "reciprocal-or-zero";
    case RuleKind::Affine:
      return "affine " + numeric::num_to_string(a) + ", " +
             numeric::num_to_string(b);
    case RuleKind::Table: {
      std::string out = "table {";
      for (std::size_t i = 0; i < table.size(); ++i) {
        out += table[i].first.describe() + " -> " + table[i].second.describe();
        if (i + 1 < table.size()) out += ", ";
      }
      if (table_default)
        out += (table.empty() ? "" : ", ") + std::string("else -> ") +
               table_default->describe();
      out += "}";
      return out;
    }
  }
  return rule_kind_name(kind);
}

std::string SelfMapping::describe() const {
  std::string out;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    out += clauses[i].region_text + " -> " + clauses[i].rule.describe();
    if (i + 1 < clauses.size()) out += "; ";
  }
  return out;
}

Point apply_rule(const Rule& rule, const Point& x) {
  switch (rule.kind) {
    case RuleKind::Identity:
      return x;
    case RuleKind::Constant:
      if (!rule.constant) throw ContractError("constant rule without a point");
      return *rule.constant;
    case RuleKind::ReciprocalOrZero: {
      std::vector<double> c(x.coords());
      for (double& v : c) v = (v == 0.0) ? 0.0 : 1.0 / v;
      return Point(std::move(c));
    }
    case RuleKind::Affine: {
      std::vector<double> c(x.coords());
      for (double& v : c) v = rule.a * v + rule.b;
      return Point(std::move(c));
    }
    case RuleKind::Table: {
      for (const auto& [from, to] : rule.table)
        if (approx_equal(from, x, 1e-9)) return to;
      if (rule.table_default) return *rule.table_default;
      return x;
    }
  }
  throw ContractError("apply_rule: unknown rule kind");
}

Point apply_mapping(const Instance& s, const SelfMapping& t, const Point& x) {
  if (!s.contains(x))
    throw DomainError("apply_mapping: point " + x.describe() +
                      " is outside " + s.label());
  for (const auto& clause : t.clauses) {
    if (!clause.matches || clause.matches(x)) {
      Point out = apply_rule(clause.rule, x);
      if (!s.contains(out))
        throw DomainError("apply_mapping: rule '" + clause.rule.describe() +
                          "' sends " + x.describe() + " to " + out.describe() +
                          ", outside " + s.label());
      return out;
    }
  }
  throw ContractError("apply_mapping: no clause matched " + x.describe() +
                      " (missing default)");
}

std::vector<Point> sample_points(const Instance& s, std::uint64_t seed,
                                 int budget,
                                 const std::vector<Point>& must_include) {
  std::vector<Point> out;
  for (const auto& p : must_include) {
    if (!s.contains(p))
      throw ContractError("sample_points: must-include point " + p.describe() +
                          " is outside " + s.label());
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  if (budget < static_cast<int>(out.size()))
    throw ContractError("sample_points: budget " + std::to_string(budget) +
                        " is below the " + std::to_string(out.size()) +
                        " required points");

  numeric::Rng rng(seed);
  const int want = budget - static_cast<int>(out.size());
  const int dim = s.point_dim();
  const double span = s.hi - s.lo;

  auto clamp = [&](double v) { return std::min(s.hi, std::max(s.lo, v)); };

  if (dim == 1) {
    for (int i = 0; i < want; ++i) {
      const double cell = span / std::max(1, want);
      const double base = s.lo + cell * (i + 0.5);
      out.push_back(Point::scalar(clamp(base + cell * rng.uniform(-0.3, 0.3))));
    }
  } else if (dim == 2) {
    const int side =
        static_cast<int>(std::ceil(std::sqrt(static_cast<double>(want))));
    int made = 0;
    for (int i = 0; i < side && made < want; ++i)
      for (int j = 0; j < side && made < want; ++j) {
        const double cell = span / side;
        const double px = s.lo + cell * (i + 0.5) + cell * rng.uniform(-0.3, 0.3);
        const double py = s.lo + cell * (j + 0.5) + cell * rng.uniform(-0.3, 0.3);
        out.push_back(Point::pair(clamp(px), clamp(py)));
        ++made;
      }
  } else {
    // grids blow up in k dimensions; fill with seeded uniform draws
    for (int i = 0; i < want; ++i) {
      std::vector<double> c(static_cast<std::size_t>(dim));
      for (double& v : c) v = rng.uniform(s.lo, s.hi);
      out.push_back(Point(std::move(c)));
    }
  }
  return out;
}

AxiomReport verify_axioms(const Instance& s, const std::vector<Point>& sample,
                          double tol, const MetricFn* metric_override) {
  AxiomReport report;
  report.identity.axiom = "identity";
  report.symmetry.axiom = "symmetry";
  report.triangle.axiom = "triangle";
  report.points_checked = static_cast<int>(sample.size());

  auto metric = [&](const Point& x, const Point& y) {
    return metric_override ? (*metric_override)(x, y) : s.distance(x, y);
  };

  const std::size_t n = sample.size();
  for (std::size_t i = 0; i < n && report.identity.passed; ++i) {
    const auto self = metric(sample[i], sample[i]);
    if (algebra::norm(self) > 0.0) {
      report.identity.passed = false;
      report.identity.witness = "d(x,x) != 0 at x = " + sample[i].describe();
      break;
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto d = metric(sample[i], sample[j]);
      if (!algebra::is_positive(d, tol)) {
        report.identity.passed = false;
        report.identity.witness = "d not positive at (" +
                                  sample[i].describe() + ", " +
                                  sample[j].describe() + ")";
        break;
      }
      if (i != j && !approx_equal(sample[i], sample[j], tol) &&
          algebra::norm(d) <= tol) {
        report.identity.passed = false;
        report.identity.witness = "d = 0 for distinct points (" +
                                  sample[i].describe() + ", " +
                                  sample[j].describe() + ")";
        break;
      }
    }
  }

  for (std::size_t i = 0; i < n && report.symmetry.passed; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!algebra::approx_equal(metric(sample[i], sample[j]),
                                 metric(sample[j], sample[i]), tol)) {
        report.symmetry.passed = false;
        report.symmetry.witness = "d(x,y) != d(y,x) at (" +
                                  sample[i].describe() + ", " +
                                  sample[j].describe() + ")";
        break;
      }
    }

  // full triple scan when feasible, deterministic draws otherwise
  const std::size_t budget = 200000;
  if (n > 0 && report.triangle.passed) {
    auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
      const auto direct = metric(sample[i], sample[j]);
      const auto via =
          algebra::add(metric(sample[i], sample[k]), metric(sample[k], sample[j]));
      if (!algebra::compare(direct, via, tol).leq()) {
        report.triangle.passed = false;
        report.triangle.witness =
            "d(x,y) > d(x,z) + d(z,y) at (" + sample[i].describe() + ", " +
            sample[j].describe() + ", " + sample[k].describe() + ")";
        return false;
      }
      return true;
    };
    if (n * n * n <= budget) {
      for (std::size_t i = 0; i < n && report.triangle.passed; ++i)
        for (std::size_t j = 0; j < n && report.triangle.passed; ++j)
          for (std::size_t k = 0; k < n; ++k)
            if (!check_triple(i, j, k)) break;
    } else {
      numeric::Rng rng(98765);
      for (std::size_t t = 0; t < budget && report.triangle.passed; ++t)
        check_triple(rng.index(n), rng.index(n), rng.index(n));
    }
  }
  return report;
}

}  // namespace ccvms::space
