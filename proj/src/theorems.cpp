#include "theorems.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "numeric.hpp"

namespace ccvms::theorems {

namespace {

using algebra::Element;
using algebra::OrderVerdict;
using circle::Circle;
using space::Instance;
using space::Point;
using space::SelfMapping;

void push_record(ConditionReport& rep, PointRecord record) {
  if (!record.verdict.leq()) rep.holds = false;
  const int idx = static_cast<int>(rep.records.size());
  if (rep.worst < 0 ||
      record.verdict.slack <
          rep.records[static_cast<std::size_t>(rep.worst)].verdict.slack)
    rep.worst = idx;
  rep.records.push_back(std::move(record));
}

ConditionReport vacuous(const char* id, const char* why) {
  ConditionReport rep;
  rep.id = id;
  rep.holds = true;
  rep.note = why;
  return rep;
}

// d(x,Tx) <= phi(x) - phi(Tx), the caristi-type inequality shared by
// conditions 2.2, 2.6 and 1.3
ConditionReport eval_caristi(const char* id, const Instance& s,
                             const SelfMapping& t, const Phi& ph,
                             const std::vector<Point>& pts, double tol) {
  ConditionReport rep;
  rep.id = id;
  for (const auto& x : pts) {
    const Point tx = space::apply_mapping(s, t, x);
    Element lhs = s.distance(x, tx);
    Element rhs = algebra::sub(ph(x), ph(tx));
    OrderVerdict v = algebra::compare(lhs, rhs, tol);
    push_record(rep, PointRecord{x, std::nullopt, std::move(lhs),
                                 std::move(rhs), v, {}});
  }
  return rep;
}

// r <= d(Tx, x0)
ConditionReport eval_radius_lower(const char* id, const Instance& s,
                                  const SelfMapping& t, const Circle& c,
                                  const std::vector<Point>& pts, double tol) {
  ConditionReport rep;
  rep.id = id;
  for (const auto& x : pts) {
    const Point tx = space::apply_mapping(s, t, x);
    Element rhs = s.distance(tx, c.center);
    OrderVerdict v = algebra::compare(c.radius, rhs, tol);
    push_record(rep,
                PointRecord{x, std::nullopt, c.radius, std::move(rhs), v, {}});
  }
  return rep;
}

// d(x,Tx) <= phi(x) + phi(Tx) - 2r
ConditionReport eval_two_phi(const char* id, const Instance& s,
                             const SelfMapping& t, const Circle& c,
                             const Phi& ph, const std::vector<Point>& pts,
                             double tol) {
  ConditionReport rep;
  rep.id = id;
  for (const auto& x : pts) {
    const Point tx = space::apply_mapping(s, t, x);
    Element lhs = s.distance(x, tx);
    Element rhs = algebra::sub(algebra::add(ph(x), ph(tx)),
                               algebra::scale(2.0, c.radius));
    OrderVerdict v = algebra::compare(lhs, rhs, tol);
    push_record(rep, PointRecord{x, std::nullopt, std::move(lhs),
                                 std::move(rhs), v, {}});
  }
  return rep;
}

// d(Tx, x0) <= r
ConditionReport eval_radius_upper(const char* id, const Instance& s,
                                  const SelfMapping& t, const Circle& c,
                                  const std::vector<Point>& pts, double tol) {
  ConditionReport rep;
  rep.id = id;
  for (const auto& x : pts) {
    const Point tx = space::apply_mapping(s, t, x);
    Element lhs = s.distance(tx, c.center);
    OrderVerdict v = algebra::compare(lhs, c.radius, tol);
    push_record(rep,
                PointRecord{x, std::nullopt, std::move(lhs), c.radius, v, {}});
  }
  return rep;
}

// r <= A* d(x,Tx) A + d(Tx, x0)
ConditionReport eval_conj_radius_lower(const char* id, const Instance& s,
                                       const SelfMapping& t, const Circle& c,
                                       const Element& a,
                                       const std::vector<Point>& pts,
                                       double tol) {
  ConditionReport rep;
  rep.id = id;
  for (const auto& x : pts) {
    const Point tx = space::apply_mapping(s, t, x);
    Element rhs = algebra::add(algebra::conjugate(a, s.distance(x, tx)),
                               s.distance(tx, c.center));
    OrderVerdict v = algebra::compare(c.radius, rhs, tol);
    push_record(rep,
                PointRecord{x, std::nullopt, c.radius, std::move(rhs), v, {}});
  }
  return rep;
}

// A* d(x,Tx) A <= phi(x) - phi(Tx)
ConditionReport eval_conj_caristi(const char* id, const Instance& s,
                                  const SelfMapping& t, const Element& a,
                                  const Phi& ph, const std::vector<Point>& pts,
                                  double tol) {
  ConditionReport rep;
  rep.id = id;
  for (const auto& x : pts) {
    const Point tx = space::apply_mapping(s, t, x);
    Element lhs = algebra::conjugate(a, s.distance(x, tx));
    Element rhs = algebra::sub(ph(x), ph(tx));
    OrderVerdict v = algebra::compare(lhs, rhs, tol);
    push_record(rep, PointRecord{x, std::nullopt, std::move(lhs),
                                 std::move(rhs), v, {}});
  }
  return rep;
}

std::string dump_report(const TheoremReport& rep, const Instance& s,
                        const SelfMapping& t) {
  std::string out = "theorem " + rep.theorem + " consistency violation on " +
                    s.label() + "\n  mapping: " + t.describe() + "\n";
  for (const auto& cond : rep.conditions) {
    out += "  condition " + cond.id + ": " +
           (cond.holds ? "holds" : "fails");
    if (const auto* w = cond.worst_record()) {
      out += " (witness x = " + w->x.describe();
      if (w->y) out += ", y = " + w->y->describe();
      out += ": " + w->lhs.describe() + " vs " + w->rhs.describe() + ", " +
             algebra::relation_name(w->verdict.relation) + ")";
    }
    out += "\n";
  }
  out += "  conclusion fixed: ";
  out += rep.conclusion_fixed ? "true" : "false";
  return out;
}

// hypotheses all holding must force the conclusion
void enforce_consistency(TheoremReport& rep, const Instance& s,
                         const SelfMapping& t) {
  bool all_hold = true;
  for (const auto& cond : rep.conditions) all_hold = all_hold && cond.holds;
  if (all_hold && !rep.conclusion_fixed) {
    rep.consistency = false;
    throw ConsistencyError(dump_report(rep, s, t));
  }
  rep.consistency = true;
}

TheoremReport vacuous_theorem(const char* theorem,
                              std::initializer_list<const char*> cond_ids) {
  TheoremReport rep;
  rep.theorem = theorem;
  rep.circle_empty = true;
  rep.conclusion_fixed = true;
  rep.consistency = true;
  rep.note = "empty circle: conditions hold vacuously";
  for (const char* id : cond_ids)
    rep.conditions.push_back(vacuous(id, "vacuous: empty circle"));
  return rep;
}

const char* uniqueness_id(UniquenessKind kind) {
  switch (kind) {
    case UniquenessKind::Banach: return "2.9";
    case UniquenessKind::Kannan: return "2.10";
    case UniquenessKind::Ciric: return "2.11";
  }
  return "?";
}

const char* contraction_id(ContractionKind kind) {
  switch (kind) {
    case ContractionKind::Banach: return "1.1";
    case ContractionKind::Kannan: return "1.2";
    case ContractionKind::Caristi: return "1.3";
    case ContractionKind::Ciric: return "1.4";
  }
  return "?";
}

void require_banach_a(const Element& a, const char* who) {
  const double n = algebra::norm(a);
  if (n >= 1.0)
    throw ContractError(std::string(who) + ": ||A|| = " +
                        numeric::num_to_string(n) + " must be below 1");
}

void require_kannan_a(const Element& a, double tol, const char* who) {
  if (!algebra::is_positive(a, tol))
    throw ContractError(std::string(who) + ": A = " + a.describe() +
                        " must be positive");
  const double n = algebra::norm(a);
  if (n >= 0.5)
    throw ContractError(std::string(who) + ": ||A|| = " +
                        numeric::num_to_string(n) + " must be below 1/2");
}

void require_commutes(const Element& a, const Element& value, double tol,
                      const char* who) {
  if (!algebra::commutes(a, value, tol))
    throw ContractError(std::string(who) + ": A = " + a.describe() +
                        " does not commute with the metric value " +
                        value.describe() + " (center-membership proxy)");
}

// one contraction-style pair record; shared by uniqueness and the
// whole-space contraction checks
PointRecord eval_pair(const Instance& s, const SelfMapping& t,
                      UniquenessKind kind, const Element& a, const Point& x,
                      const Point& y, double tol) {
  const Point tx = space::apply_mapping(s, t, x);
  const Point ty = space::apply_mapping(s, t, y);
  Element lhs = s.distance(tx, ty);
  switch (kind) {
    case UniquenessKind::Banach: {
      Element rhs = algebra::conjugate(a, s.distance(x, y));
      OrderVerdict v = algebra::compare(lhs, rhs, tol);
      return PointRecord{x, y, std::move(lhs), std::move(rhs), v, {}};
    }
    case UniquenessKind::Kannan: {
      Element dtxy = s.distance(tx, y);
      Element dtyx = s.distance(ty, x);
      require_commutes(a, dtxy, tol, "kannan");
      require_commutes(a, dtyx, tol, "kannan");
      require_commutes(a, lhs, tol, "kannan");
      Element rhs = algebra::mul(a, algebra::add(dtxy, dtyx));
      OrderVerdict v = algebra::compare(lhs, rhs, tol);
      return PointRecord{x, y, std::move(lhs), std::move(rhs), v, {}};
    }
    case UniquenessKind::Ciric: {
      const std::pair<const char*, Element> choices[] = {
          {"d(x,y)", s.distance(x, y)},   {"d(x,Tx)", s.distance(x, tx)},
          {"d(y,Ty)", s.distance(y, ty)}, {"d(x,Ty)", s.distance(x, ty)},
          {"d(y,Tx)", s.distance(y, tx)}};
      PointRecord best{x, y, lhs, lhs, OrderVerdict{}, "none"};
      bool first = true;
      for (const auto& [name, u] : choices) {
        Element rhs = algebra::conjugate(a, u);
        OrderVerdict v = algebra::compare(lhs, rhs, tol);
        if (v.leq())
          return PointRecord{x, y, std::move(lhs), std::move(rhs), v, name};
        if (first || v.slack > best.verdict.slack) {
          best.rhs = std::move(rhs);
          best.verdict = v;
          first = false;
        }
      }
      best.lhs = std::move(lhs);
      return best;
    }
  }
  throw ContractError("eval_pair: unknown kind");
}

}  // namespace

Phi phi(const space::Instance& s, const space::Point& center) {
  return [&s, center](const Point& x) { return s.distance(x, center); };
}

ConditionReport eval_condition(const std::string& id, const Instance& s,
                               const SelfMapping& t, const Circle& c,
                               const Element* a, const std::vector<Point>& pts,
                               const CheckContext& ctx) {
  const double tol = ctx.tolerance;
  if (pts.empty()) return vacuous(id.c_str(), "vacuous: no points to check");
  if (id == "2.2" || id == "2.6")
    return eval_caristi(id.c_str(), s, t, phi(s, c.center), pts, tol);
  if (id == "2.3") return eval_radius_lower(id.c_str(), s, t, c, pts, tol);
  if (id == "2.4")
    return eval_two_phi(id.c_str(), s, t, c, phi(s, c.center), pts, tol);
  if (id == "2.5") return eval_radius_upper(id.c_str(), s, t, c, pts, tol);
  if (id == "2.7") {
    if (!a) throw ContractError("condition 2.7 needs A");
    require_banach_a(*a, "condition 2.7");
    return eval_conj_radius_lower(id.c_str(), s, t, c, *a, pts, tol);
  }
  throw ContractError("unknown condition id '" + id + "'");
}

bool is_fixed_circle(const Instance& s, const SelfMapping& t, const Circle& c,
                     const std::vector<Point>& sample, double tol,
                     bool* empty) {
  const auto members = circle::members_for_check(s, c, sample, tol);
  if (empty) *empty = members.empty();
  for (const auto& x : members)
    if (!space::approx_equal(space::apply_mapping(s, t, x), x, tol))
      return false;
  return true;
}

TheoremReport check_theorem5(const Instance& s, const SelfMapping& t,
                             const Circle& c, const std::vector<Point>& sample,
                             const CheckContext& ctx) {
  const auto members = circle::members_for_check(s, c, sample, ctx.tolerance);
  if (members.empty()) return vacuous_theorem("5", {"2.2", "2.3"});
  TheoremReport rep;
  rep.theorem = "5";
  const Phi ph = phi(s, c.center);
  rep.conditions.push_back(
      eval_caristi("2.2", s, t, ph, members, ctx.tolerance));
  rep.conditions.push_back(
      eval_radius_lower("2.3", s, t, c, members, ctx.tolerance));
  rep.conclusion_fixed = is_fixed_circle(s, t, c, sample, ctx.tolerance);
  enforce_consistency(rep, s, t);
  return rep;
}

TheoremReport check_theorem6(const Instance& s, const SelfMapping& t,
                             const Circle& c, const std::vector<Point>& sample,
                             const CheckContext& ctx) {
  const auto members = circle::members_for_check(s, c, sample, ctx.tolerance);
  if (members.empty()) return vacuous_theorem("6", {"2.4", "2.5"});
  TheoremReport rep;
  rep.theorem = "6";
  const Phi ph = phi(s, c.center);
  rep.conditions.push_back(
      eval_two_phi("2.4", s, t, c, ph, members, ctx.tolerance));
  rep.conditions.push_back(
      eval_radius_upper("2.5", s, t, c, members, ctx.tolerance));
  rep.conclusion_fixed = is_fixed_circle(s, t, c, sample, ctx.tolerance);
  enforce_consistency(rep, s, t);
  return rep;
}

TheoremReport check_theorem7(const Instance& s, const SelfMapping& t,
                             const Circle& c, const Element& a,
                             const std::vector<Point>& sample,
                             const CheckContext& ctx) {
  require_banach_a(a, "theorem 7");
  const auto members = circle::members_for_check(s, c, sample, ctx.tolerance);
  if (members.empty()) return vacuous_theorem("7", {"2.6", "2.7"});
  TheoremReport rep;
  rep.theorem = "7";
  const Phi ph = phi(s, c.center);
  rep.conditions.push_back(
      eval_caristi("2.6", s, t, ph, members, ctx.tolerance));
  rep.conditions.push_back(
      eval_conj_radius_lower("2.7", s, t, c, a, members, ctx.tolerance));
  rep.conclusion_fixed = is_fixed_circle(s, t, c, sample, ctx.tolerance);
  enforce_consistency(rep, s, t);
  return rep;
}

TheoremReport check_theorem8(const Instance& s, const SelfMapping& t,
                             const Element& a,
                             const std::vector<Point>& sample,
                             const CheckContext& ctx) {
  const Element inv = algebra::invert(a);
  const double inv_norm = algebra::norm(inv);
  if (inv_norm >= 1.0)
    throw ContractError("theorem 8: ||A^-1|| = " +
                        numeric::num_to_string(inv_norm) +
                        " must be below 1");
  TheoremReport rep;
  rep.theorem = "8";

  // phi is centered anywhere; the statement fixes x0 as an arbitrary
  // point, so the first sample point serves
  if (sample.empty())
    throw ContractError("theorem 8: sample must not be empty");
  const Phi ph = phi(s, sample.front());
  rep.conditions.push_back(
      eval_conj_caristi("2.8", s, t, a, ph, sample, ctx.tolerance));

  rep.identity_on_sample = true;
  for (const auto& x : sample)
    if (!space::approx_equal(space::apply_mapping(s, t, x), x,
                             ctx.tolerance)) {
      rep.identity_on_sample = false;
      break;
    }
  rep.conclusion_fixed = rep.identity_on_sample;

  const bool holds = rep.conditions.front().holds;
  if (holds != rep.identity_on_sample) {
    rep.consistency = false;
    rep.note = holds ? "condition 2.8 holds for a non-identity mapping"
                     : "condition 2.8 fails for the identity mapping";
    throw ConsistencyError(dump_report(rep, s, t) + "\n  " + rep.note);
  }
  rep.consistency = true;
  return rep;
}

ConditionReport check_uniqueness(const Instance& s, const SelfMapping& t,
                                 const Circle& c, UniquenessKind kind,
                                 const Element& a,
                                 const std::vector<Point>& sample,
                                 const CheckContext& ctx) {
  switch (kind) {
    case UniquenessKind::Banach:
      require_banach_a(a, "theorem 9");
      break;
    case UniquenessKind::Kannan:
      require_kannan_a(a, ctx.tolerance, "theorem 10");
      break;
    case UniquenessKind::Ciric:
      require_banach_a(a, "theorem 11");
      break;
  }
  const auto members = circle::members_for_check(s, c, sample, ctx.tolerance);
  ConditionReport rep;
  rep.id = uniqueness_id(kind);
  if (members.empty()) {
    rep.note = "vacuous: empty circle";
    return rep;
  }
  bool any_pair = false;
  for (const auto& x : members)
    for (const auto& y : sample) {
      if (circle::on_circle(s, c, y, ctx.tolerance)) continue;
      any_pair = true;
      push_record(rep, eval_pair(s, t, kind, a, x, y, ctx.tolerance));
    }
  if (!any_pair) rep.note = "vacuous: no off-circle sample points";
  return rep;
}

std::vector<Circle> enumerate_fixed_circles(const Instance& s,
                                            const SelfMapping& t,
                                            const std::vector<Point>& centers,
                                            const std::vector<Point>& sample,
                                            const CheckContext& ctx) {
  std::vector<Circle> out;
  for (const auto& center : centers) {
    std::vector<Element> radii;
    for (const auto& p : sample) {
      Element r = s.distance(p, center);
      bool seen = false;
      for (const auto& known : radii)
        if (algebra::approx_equal(known, r, ctx.tolerance)) {
          seen = true;
          break;
        }
      if (!seen) radii.push_back(std::move(r));
    }
    std::sort(radii.begin(), radii.end(),
              [](const Element& a, const Element& b) {
                const double na = algebra::norm(a), nb = algebra::norm(b);
                if (na != nb) return na < nb;
                return a.describe() < b.describe();
              });
    for (const auto& r : radii) {
      Circle c = circle::solve_circle(s, center, r, ctx.tolerance);
      bool empty = false;
      if (is_fixed_circle(s, t, c, sample, ctx.tolerance, &empty) && !empty)
        out.push_back(std::move(c));
    }
  }
  return out;
}

SelfMapping build_multi_circle_fixer(const Instance& s,
                                     const std::vector<Circle>& circles,
                                     const Point& alpha,
                                     const CheckContext& ctx) {
  if (circles.empty())
    throw ContractError("multi-circle fixer: needs at least one circle");
  if (!s.contains(alpha))
    throw ContractError("multi-circle fixer: alpha " + alpha.describe() +
                        " is outside " + s.label());
  for (std::size_t i = 0; i < circles.size(); ++i) {
    const auto v = algebra::compare(s.distance(alpha, circles[i].center),
                                    circles[i].radius, ctx.tolerance);
    if (v.relation == algebra::Relation::Equal)
      throw ContractError("multi-circle fixer: alpha " + alpha.describe() +
                          " lies on circle " + std::to_string(i + 1) + " " +
                          circles[i].describe());
  }
  SelfMapping t;
  const double tol = ctx.tolerance;
  auto on_union = [&s, circles, tol](const Point& p) {
    for (const auto& c : circles)
      if (circle::on_circle(s, c, p, tol)) return true;
    return false;
  };
  space::Rule identity;
  t.clauses.push_back(space::Clause{on_union, "on_any_circle", identity});
  space::Rule to_alpha;
  to_alpha.kind = space::RuleKind::Constant;
  to_alpha.constant = alpha;
  t.clauses.push_back(space::Clause{nullptr, "default", to_alpha});
  return t;
}

ConditionReport verify_contraction(const Instance& s, const SelfMapping& t,
                                   ContractionKind kind, const Element* a,
                                   const Phi* potential,
                                   const std::vector<Point>& sample,
                                   const CheckContext& ctx) {
  ConditionReport rep;
  rep.id = contraction_id(kind);
  if (kind == ContractionKind::Caristi) {
    if (!potential)
      throw ContractError("caristi: needs a potential function");
    for (const auto& x : sample) {
      const Point tx = space::apply_mapping(s, t, x);
      Element lhs = s.distance(x, tx);
      Element rhs = algebra::sub((*potential)(x), (*potential)(tx));
      OrderVerdict v = algebra::compare(lhs, rhs, ctx.tolerance);
      push_record(rep, PointRecord{x, std::nullopt, std::move(lhs),
                                   std::move(rhs), v, {}});
    }
    return rep;
  }

  if (!a) throw ContractError("contraction: needs the element A");
  UniquenessKind pair_kind = UniquenessKind::Banach;
  switch (kind) {
    case ContractionKind::Banach:
      require_banach_a(*a, "theorem 1");
      pair_kind = UniquenessKind::Banach;
      break;
    case ContractionKind::Kannan:
      require_kannan_a(*a, ctx.tolerance, "theorem 2");
      pair_kind = UniquenessKind::Kannan;
      break;
    case ContractionKind::Ciric:
      require_banach_a(*a, "theorem 4");
      pair_kind = UniquenessKind::Ciric;
      break;
    case ContractionKind::Caristi:
      break;
  }
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i + 1; j < sample.size(); ++j)
      push_record(rep, eval_pair(s, t, pair_kind, *a, sample[i], sample[j],
                                 ctx.tolerance));
  return rep;
}

PicardResult picard_fixed_point(const Instance& s, const SelfMapping& t,
                                const Point& start, double tol, int max_iter) {
  if (max_iter < 1)
    throw ContractError("picard: max_iter must be at least 1");
  if (tol <= 0.0) throw ContractError("picard: tolerance must be positive");
  PicardResult result{start, 0, {}};
  Point x = start;
  for (int iter = 1; iter <= max_iter; ++iter) {
    const Point tx = space::apply_mapping(s, t, x);
    const double residual = algebra::norm(s.distance(x, tx));
    result.residuals.push_back(residual);
    if (residual <= tol) {
      result.fixed = tx;
      result.iterations = iter;
      return result;
    }
    x = tx;
  }
  throw ConvergenceError("picard: no fixed point within " +
                             std::to_string(max_iter) + " iterations",
                         result.residuals.back());
}

GridScanResult scan_theorem7_grid(const Instance& s, const SelfMapping& t,
                                  const Circle& c,
                                  const std::vector<Point>& sample,
                                  const CheckContext& ctx) {
  if (ctx.grid_step <= 0.0 || ctx.grid_step >= 1.0)
    throw ContractError("grid scan: step must lie in (0,1)");
  if (!s.algebra_desc.is_matrix())
    throw ContractError("grid scan: needs a matrix algebra");
  const auto members = circle::members_for_check(s, c, sample, ctx.tolerance);
  GridScanResult result;
  if (members.empty()) return result;

  // distances do not depend on A; precompute per member
  struct MemberData {
    Element d_x_tx;
    Element d_tx_center;
    Element phi_gap;  // phi(x) - phi(Tx)
  };
  std::vector<MemberData> data;
  const Phi ph = phi(s, c.center);
  for (const auto& x : members) {
    const Point tx = space::apply_mapping(s, t, x);
    data.push_back(MemberData{s.distance(x, tx), s.distance(tx, c.center),
                              algebra::sub(ph(x), ph(tx))});
  }

  std::vector<double> grid;
  for (int i = 1;; ++i) {
    const double v = -1.0 + ctx.grid_step * i;
    if (v >= 1.0 - ctx.grid_step / 2) break;
    grid.push_back(v);
  }

  const int n = s.algebra_desc.dim;
  if (n != 2)
    throw ContractError("grid scan: implemented for 2x2 matrix algebras");
  for (double a1 : grid)
    for (double a2 : grid) {
      ++result.candidates;
      const double entries[] = {a1, a2};
      const Element a = algebra::diagonal(s.algebra_desc, entries);
      bool ok = true;
      for (const auto& m : data) {
        // 2.7 first: it is the one that fails in practice
        const Element rhs27 =
            algebra::add(algebra::conjugate(a, m.d_x_tx), m.d_tx_center);
        if (!algebra::compare(c.radius, rhs27, ctx.tolerance).leq()) {
          ok = false;
          break;
        }
        if (!algebra::compare(m.d_x_tx, m.phi_gap, ctx.tolerance).leq()) {
          ok = false;
          break;
        }
      }
      if (ok && result.hits.size() < 10) result.hits.push_back(a);
    }
  return result;
}

}  // namespace ccvms::theorems
