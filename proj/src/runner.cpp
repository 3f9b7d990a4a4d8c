#include "runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

#include "errors.hpp"
#include "json.hpp"
#include "numeric.hpp"

namespace ccvms::runner {

namespace {

using algebra::Element;
using circle::Circle;
using nlohmann::ordered_json;
using scenario::RegionKind;
using scenario::Scenario;
using space::Instance;
using space::Point;
using space::SelfMapping;
using theorems::CheckContext;
using theorems::ConditionReport;
using theorems::TheoremReport;

Point origin_of(const Instance& s) {
  return Point(std::vector<double>(static_cast<std::size_t>(s.point_dim()),
                                   0.0));
}

// members plus their images, the clause anchor points, and whichever check
// points the scenario names; everything the checks must hit exactly
std::vector<Point> gather_must_include(const Scenario& sc, const Instance& s,
                                       const SelfMapping& t, const Circle* c1,
                                       const Circle* c2,
                                       const Point* phi_front) {
  std::vector<Point> out;
  auto push = [&out](const Point& p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  if (phi_front) push(*phi_front);
  for (const Circle* c : {c1, c2}) {
    if (!c) continue;
    push(c->center);
    for (const auto& p : c->points) {
      push(p);
      if (c->membership != circle::Membership::ComplementOfFinite)
        push(space::apply_mapping(s, t, p));
    }
  }
  for (const auto& clause : sc.mapping) {
    if (clause.region.point) push(*clause.region.point);
    if (clause.rule.constant) push(*clause.rule.constant);
  }
  for (const auto& p : {sc.check.start, sc.check.start2, sc.check.alpha_point,
                        sc.check.phi_center})
    if (p) push(*p);
  return out;
}

theorems::UniquenessKind uniqueness_kind(const std::string& theorem) {
  if (theorem == "9") return theorems::UniquenessKind::Banach;
  if (theorem == "10") return theorems::UniquenessKind::Kannan;
  return theorems::UniquenessKind::Ciric;
}

theorems::ContractionKind contraction_kind(const std::string& kind) {
  if (kind == "banach") return theorems::ContractionKind::Banach;
  if (kind == "kannan") return theorems::ContractionKind::Kannan;
  if (kind == "ciric") return theorems::ContractionKind::Ciric;
  if (kind == "caristi") return theorems::ContractionKind::Caristi;
  throw ContractError("unknown contraction kind '" + kind + "'");
}

void absorb(Outcome& out, TheoremReport rep) {
  out.theorem = rep.theorem;
  for (auto& cond : rep.conditions) out.conditions.push_back(std::move(cond));
  out.conclusion_fixed = rep.conclusion_fixed;
  out.circle_empty = rep.circle_empty;
  out.identity_on_sample = rep.identity_on_sample;
  out.consistency = out.consistency && rep.consistency;
  if (!rep.note.empty()) out.note = rep.note;
}

void run_theorem(Outcome& out, const Scenario& sc, const CheckContext& ctx) {
  const Instance& s = sc.instance;
  const std::string& th = sc.check.theorem;

  if (th == "8") {
    const SelfMapping t = compile_mapping(
        s, sc.mapping,
        nullptr, ctx.tolerance);
    out.mapping_text = t.describe();
    const Point front = sc.check.phi_center
                            ? *sc.check.phi_center
                            : (sc.circle1 ? sc.circle1->center : origin_of(s));
    const auto must = gather_must_include(sc, s, t, nullptr, nullptr, &front);
    const auto sample = space::sample_points(s, ctx.seed, ctx.sample_size, must);
    absorb(out, theorems::check_theorem8(s, t, *sc.check.a, sample, ctx));
    return;
  }

  const Circle c = circle::solve_circle(s, sc.circle1->center,
                                        sc.circle1->radius, ctx.tolerance);
  const SelfMapping t = compile_mapping(s, sc.mapping, &c, ctx.tolerance);
  out.mapping_text = t.describe();
  const auto must = gather_must_include(sc, s, t, &c, nullptr, nullptr);
  const auto sample = space::sample_points(s, ctx.seed, ctx.sample_size, must);
  out.circle = c;

  if (th == "5") {
    absorb(out, theorems::check_theorem5(s, t, c, sample, ctx));
  } else if (th == "6") {
    absorb(out, theorems::check_theorem6(s, t, c, sample, ctx));
  } else if (th == "7") {
    if (sc.check.scan) {
      out.theorem = "7";
      out.scan = theorems::scan_theorem7_grid(s, t, c, sample, ctx);
      out.conclusion_fixed =
          theorems::is_fixed_circle(s, t, c, sample, ctx.tolerance);
      out.note = "scan: " + std::to_string(out.scan->candidates) +
                 " candidates, " + std::to_string(out.scan->hits.size()) +
                 " admissible";
    } else {
      absorb(out, theorems::check_theorem7(s, t, c, *sc.check.a, sample, ctx));
    }
  } else if (th == "9" || th == "10" || th == "11") {
    TheoremReport base =
        th == "9"    ? theorems::check_theorem5(s, t, c, sample, ctx)
        : th == "10" ? theorems::check_theorem6(s, t, c, sample, ctx)
                     : theorems::check_theorem7(s, t, c, *sc.check.a, sample,
                                                ctx);
    base.theorem = th;
    absorb(out, std::move(base));
    out.conditions.push_back(theorems::check_uniqueness(
        s, t, c, uniqueness_kind(th), *sc.check.a, sample, ctx));
  } else {
    throw ContractError("unknown theorem '" + th + "'");
  }
}

void run_prop1(Outcome& out, const Scenario& sc, const CheckContext& ctx) {
  const Instance& s = sc.instance;
  const Circle c1 = circle::solve_circle(s, sc.circle1->center,
                                         sc.circle1->radius, ctx.tolerance);
  const Circle c2 = circle::solve_circle(s, sc.circle2->center,
                                         sc.circle2->radius, ctx.tolerance);
  const SelfMapping fixer =
      theorems::build_multi_circle_fixer(s, {c1, c2}, *sc.check.alpha_point,
                                         ctx);
  out.mapping_text = fixer.describe();
  out.circle = c1;
  out.circle2 = c2;

  std::vector<Point> must =
      gather_must_include(sc, s, fixer, &c1, &c2, nullptr);
  const auto sample = space::sample_points(s, ctx.seed, ctx.sample_size, must);

  out.theorem = "prop1";
  const Circle* circles[] = {&c1, &c2};
  bool fixed = true;
  for (int i = 0; i < 2; ++i) {
    TheoremReport rep =
        theorems::check_theorem5(s, fixer, *circles[i], sample, ctx);
    fixed = fixed && rep.conclusion_fixed;
    out.consistency = out.consistency && rep.consistency;
    for (auto& cond : rep.conditions) {
      cond.id += i == 0 ? "[C1]" : "[C2]";
      out.conditions.push_back(std::move(cond));
    }
  }
  out.conclusion_fixed = fixed;

  std::vector<Point> centers{c1.center};
  if (!(c2.center == c1.center)) centers.push_back(c2.center);
  out.enumerated =
      theorems::enumerate_fixed_circles(s, fixer, centers, sample, ctx);
}

void run_contraction(Outcome& out, const Scenario& sc,
                     const CheckContext& ctx) {
  const Instance& s = sc.instance;
  std::optional<Circle> c;
  if (sc.circle1)
    c = circle::solve_circle(s, sc.circle1->center, sc.circle1->radius,
                             ctx.tolerance);
  const SelfMapping t =
      compile_mapping(s, sc.mapping, c ? &*c : nullptr, ctx.tolerance);
  out.mapping_text = t.describe();
  out.circle = c;

  const auto must =
      gather_must_include(sc, s, t, c ? &*c : nullptr, nullptr, nullptr);
  const auto sample = space::sample_points(s, ctx.seed, ctx.sample_size, must);

  const theorems::ContractionKind kind = contraction_kind(sc.check.kind);
  theorems::Phi potential;
  const theorems::Phi* potential_ptr = nullptr;
  if (kind == theorems::ContractionKind::Caristi) {
    const Point center =
        sc.check.phi_center ? *sc.check.phi_center : sc.circle1->center;
    potential = theorems::phi(s, center);
    potential_ptr = &potential;
  }
  const Element* a = sc.check.a ? &*sc.check.a : nullptr;
  ConditionReport rep =
      theorems::verify_contraction(s, t, kind, a, potential_ptr, sample, ctx);
  out.theorem = "contraction " + rep.id;
  out.conclusion_fixed = rep.holds;
  out.conditions.push_back(std::move(rep));
}

void run_picard(Outcome& out, const Scenario& sc, const CheckContext& ctx) {
  const Instance& s = sc.instance;
  std::optional<Circle> c;
  if (sc.circle1)
    c = circle::solve_circle(s, sc.circle1->center, sc.circle1->radius,
                             ctx.tolerance);
  const SelfMapping t =
      compile_mapping(s, sc.mapping, c ? &*c : nullptr, ctx.tolerance);
  out.mapping_text = t.describe();
  out.theorem = "picard";

  const auto must =
      gather_must_include(sc, s, t, c ? &*c : nullptr, nullptr, nullptr);
  const auto sample = space::sample_points(s, ctx.seed, ctx.sample_size, must);

  if (sc.check.a)
    out.conditions.push_back(theorems::verify_contraction(
        s, t, theorems::ContractionKind::Banach, &*sc.check.a, nullptr, sample,
        ctx));

  PicardRun first{*sc.check.start,
                  theorems::picard_fixed_point(s, t, *sc.check.start,
                                               ctx.tolerance,
                                               sc.check.max_iter)};
  out.picard.push_back(std::move(first));
  if (sc.check.start2) {
    PicardRun second{*sc.check.start2,
                     theorems::picard_fixed_point(s, t, *sc.check.start2,
                                                  ctx.tolerance,
                                                  sc.check.max_iter)};
    out.picard_agreement = algebra::norm(
        s.distance(out.picard.front().result.fixed, second.result.fixed));
    out.picard.push_back(std::move(second));
  }
  out.conclusion_fixed = true;
  out.note = "fixed point " + out.picard.front().result.fixed.describe() +
             " after " + std::to_string(out.picard.front().result.iterations) +
             " iterations";
}

std::string describe_record(const theorems::PointRecord& rec) {
  std::string s = "x = " + rec.x.describe();
  if (rec.y) s += ", y = " + rec.y->describe();
  s += ": " + rec.lhs.describe() + " vs " + rec.rhs.describe() + " (" +
       algebra::relation_name(rec.verdict.relation) +
       ", slack " + numeric::num_to_string(rec.verdict.slack) + ")";
  if (!rec.u_choice.empty()) s += " via u = " + rec.u_choice;
  return s;
}

ordered_json record_json(const theorems::PointRecord& rec) {
  ordered_json j;
  j["x"] = rec.x.describe();
  if (rec.y) j["y"] = rec.y->describe();
  j["lhs"] = rec.lhs.describe();
  j["rhs"] = rec.rhs.describe();
  j["relation"] = algebra::relation_name(rec.verdict.relation);
  j["slack"] = rec.verdict.slack;
  if (!rec.u_choice.empty()) j["u"] = rec.u_choice;
  return j;
}

ordered_json circle_json(const Circle& c) {
  ordered_json j;
  j["center"] = c.center.describe();
  j["radius"] = c.radius.describe();
  j["membership"] = circle::membership_name(c.membership);
  j["members"] = c.describe();
  return j;
}

std::string summarize_table(const SearchHit& hit) {
  std::string s = "{";
  for (const auto& [from, to] : hit.table)
    s += from.describe() + " -> " + to.describe() + ", ";
  s += "else " + hit.fallback.describe() + "}";
  return s;
}

}  // namespace

CheckContext make_context(const scenario::CheckSpec& check,
                          const Overrides& overrides) {
  CheckContext ctx;
  ctx.tolerance = overrides.tolerance.value_or(check.tolerance);
  ctx.seed = overrides.seed.value_or(check.seed);
  ctx.sample_size = overrides.sample_size.value_or(check.sample_size);
  ctx.grid_step = overrides.grid_step.value_or(check.grid_step);
  if (ctx.tolerance <= 0.0)
    throw ContractError("tolerance must be positive");
  if (ctx.sample_size < 1)
    throw ContractError("sample size must be at least 1");
  return ctx;
}

SelfMapping compile_mapping(const Instance& s,
                            const std::vector<scenario::ClauseSpec>& clauses,
                            const Circle* c, double tol) {
  SelfMapping t;
  for (const auto& spec : clauses) {
    space::Clause clause;
    clause.region_text = spec.region.describe();
    switch (spec.region.kind) {
      case RegionKind::OnCircle: {
        if (!c)
          throw ContractError("mapping region on_circle needs a circle");
        const Circle cc = *c;
        const Instance* sp = &s;
        clause.matches = [sp, cc, tol](const Point& p) {
          return circle::on_circle(*sp, cc, p, tol);
        };
        break;
      }
      case RegionKind::NotOnCircle: {
        if (!c)
          throw ContractError("mapping region not_on_circle needs a circle");
        const Circle cc = *c;
        const Instance* sp = &s;
        clause.matches = [sp, cc, tol](const Point& p) {
          return !circle::on_circle(*sp, cc, p, tol);
        };
        break;
      }
      case RegionKind::Eq: {
        const Point target = *spec.region.point;
        clause.matches = [target, tol](const Point& p) {
          return space::approx_equal(p, target, tol);
        };
        break;
      }
      case RegionKind::Default:
        clause.matches = nullptr;
        break;
    }
    clause.rule.kind = spec.rule.kind;
    clause.rule.constant = spec.rule.constant;
    clause.rule.a = spec.rule.a;
    clause.rule.b = spec.rule.b;
    t.clauses.push_back(std::move(clause));
  }
  return t;
}

bool Outcome::passed() const {
  for (const auto& cond : conditions)
    if (!cond.holds) return false;
  if (!consistency) return false;
  if (axioms && !axioms->all_passed()) return false;
  return true;
}

Outcome run_check(const Scenario& sc, const Overrides& overrides) {
  Outcome out;
  out.mode = "check";
  out.scenario_id = sc.id;
  out.space_label = sc.instance.label();
  const CheckContext ctx = make_context(sc.check, overrides);

  const auto t0 = std::chrono::steady_clock::now();
  const std::string& th = sc.check.theorem;
  if (th == "prop1")
    run_prop1(out, sc, ctx);
  else if (th == "contraction")
    run_contraction(out, sc, ctx);
  else if (th == "picard")
    run_picard(out, sc, ctx);
  else
    run_theorem(out, sc, ctx);
  out.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return out;
}

Outcome run_solve_circle(const Scenario& sc, const Overrides& overrides) {
  if (!sc.circle1)
    throw ContractError("solve-circle needs a [circle] section");
  Outcome out;
  out.mode = "solve-circle";
  out.scenario_id = sc.id;
  out.space_label = sc.instance.label();
  const CheckContext ctx = make_context(sc.check, overrides);
  const auto t0 = std::chrono::steady_clock::now();
  out.circle = circle::solve_circle(sc.instance, sc.circle1->center,
                                    sc.circle1->radius, ctx.tolerance);
  out.circle_empty = out.circle->empty();
  if (sc.circle2) {
    out.circle2 = circle::solve_circle(sc.instance, sc.circle2->center,
                                       sc.circle2->radius, ctx.tolerance);
  }
  out.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return out;
}

Outcome run_axioms(const Scenario& sc, const Overrides& overrides) {
  Outcome out;
  out.mode = "axioms";
  out.scenario_id = sc.id;
  out.space_label = sc.instance.label();
  const CheckContext ctx = make_context(sc.check, overrides);
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Point> must;
  if (sc.circle1) must.push_back(sc.circle1->center);
  const auto sample =
      space::sample_points(sc.instance, ctx.seed, ctx.sample_size, must);
  out.axioms = space::verify_axioms(sc.instance, sample, ctx.tolerance);
  out.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return out;
}

Outcome run_search(const Scenario& sc, const std::string& hold_id,
                   const std::string& fail_id, int budget,
                   const Overrides& overrides) {
  static const std::vector<std::string> allowed = {"2.2", "2.3", "2.4",
                                                   "2.5", "2.6", "2.7"};
  for (const auto& id : {hold_id, fail_id})
    if (std::find(allowed.begin(), allowed.end(), id) == allowed.end())
      throw ContractError("search: unknown condition id '" + id + "'");
  if (budget < 1) throw ContractError("search: budget must be at least 1");
  if (!sc.circle1) throw ContractError("search needs a [circle] section");

  Outcome out;
  out.mode = "search";
  out.scenario_id = sc.id;
  out.space_label = sc.instance.label();
  out.search_hold = hold_id;
  out.search_fail = fail_id;
  const CheckContext ctx = make_context(sc.check, overrides);
  const Instance& s = sc.instance;

  const auto t0 = std::chrono::steady_clock::now();
  const Circle c = circle::solve_circle(s, sc.circle1->center,
                                        sc.circle1->radius, ctx.tolerance);
  out.circle = c;
  if (c.membership != circle::Membership::ExplicitFinite || c.empty())
    throw ContractError("search needs a nonempty finite circle, got " +
                        c.describe());

  std::vector<Point> must{c.center};
  for (const auto& p : c.points) must.push_back(p);
  const auto sample = space::sample_points(s, ctx.seed, ctx.sample_size, must);
  const Element* a = sc.check.a ? &*sc.check.a : nullptr;

  numeric::Rng rng(ctx.seed);
  std::set<std::string> seen;
  std::vector<SearchHit> hits;
  for (int trial = 0; trial < budget; ++trial) {
    space::Rule rule;
    rule.kind = space::RuleKind::Table;
    for (const auto& member : c.points)
      rule.table.emplace_back(member, sample[rng.index(sample.size())]);
    rule.table_default = sample[rng.index(sample.size())];
    SelfMapping t;
    t.clauses.push_back(space::Clause{nullptr, "default", rule});
    ++out.search_tried;

    const ConditionReport hold =
        theorems::eval_condition(hold_id, s, t, c, a, c.points, ctx);
    if (!hold.holds) continue;
    const ConditionReport fail =
        theorems::eval_condition(fail_id, s, t, c, a, c.points, ctx);
    if (fail.holds) continue;
    if (theorems::is_fixed_circle(s, t, c, sample, ctx.tolerance)) continue;

    SearchHit hit{rule.table, *rule.table_default, 0.0, {}};
    for (const auto& [from, to] : hit.table) {
      (void)from;
      for (double v : to.coords()) hit.size += std::abs(v);
    }
    for (double v : hit.fallback.coords()) hit.size += std::abs(v);
    hit.summary = summarize_table(hit);
    if (seen.insert(hit.summary).second) hits.push_back(std::move(hit));
  }

  std::sort(hits.begin(), hits.end(),
            [](const SearchHit& x, const SearchHit& y) {
              if (x.size != y.size) return x.size < y.size;
              return x.summary < y.summary;
            });
  if (hits.size() > 10)
    hits.erase(hits.begin() + 10, hits.end());
  out.search_hits = std::move(hits);
  out.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return out;
}

std::string render_text(const Outcome& out) {
  std::string s;
  s += "scenario " + out.scenario_id + " on " + out.space_label + "\n";
  if (!out.mapping_text.empty()) s += "mapping " + out.mapping_text + "\n";
  if (out.circle)
    s += "circle: center " + out.circle->center.describe() + ", radius " +
         out.circle->radius.describe() + " -> " + out.circle->describe() +
         "\n";
  if (out.circle2)
    s += "circle2: center " + out.circle2->center.describe() + ", radius " +
         out.circle2->radius.describe() + " -> " + out.circle2->describe() +
         "\n";

  for (const auto& cond : out.conditions) {
    s += cond.id + (cond.holds ? " HOLDS" : " FAILS");
    if (const auto* w = cond.worst_record())
      s += " (worst " + describe_record(*w) + ")";
    if (!cond.note.empty()) s += " [" + cond.note + "]";
    s += " over " + std::to_string(cond.records.size()) + " points\n";
  }

  if (out.axioms) {
    const auto& ax = *out.axioms;
    for (const auto* check : {&ax.identity, &ax.symmetry, &ax.triangle}) {
      s += check->axiom + (check->passed ? " HOLDS" : " FAILS");
      if (!check->witness.empty()) s += " (" + check->witness + ")";
      s += "\n";
    }
    s += "points checked: " + std::to_string(ax.points_checked) + "\n";
  }

  for (const auto& run : out.picard)
    s += "picard: start " + run.start.describe() + " -> " +
         run.result.fixed.describe() + " in " +
         std::to_string(run.result.iterations) + " iterations\n";
  if (out.picard_agreement >= 0.0)
    s += "picard agreement: " + numeric::num_to_string(out.picard_agreement) +
         "\n";

  if (out.scan) {
    s += "scan: " + std::to_string(out.scan->candidates) + " candidates, " +
         std::to_string(out.scan->hits.size()) + " admissible\n";
    for (const auto& hit : out.scan->hits) s += "  A = " + hit.describe() + "\n";
  }

  if (out.mode == "search") {
    s += "search " + out.search_hold + " holds / " + out.search_fail +
         " fails: tried " + std::to_string(out.search_tried) + ", kept " +
         std::to_string(out.search_hits.size()) + "\n";
    for (const auto& hit : out.search_hits)
      s += "  T = " + hit.summary + " (size " +
           numeric::num_to_string(hit.size) + ")\n";
  }

  for (const auto& c : out.enumerated)
    s += "fixed circle: radius " + c.radius.describe() + " -> " +
         c.describe() + "\n";

  if (out.mode == "check") {
    s += "conclusion: ";
    if (out.circle_empty)
      s += "empty circle (vacuous)";
    else if (out.theorem == "picard")
      s += out.note;
    else
      s += out.conclusion_fixed ? "fixed" : "not fixed";
    s += "\n";
    if (out.theorem == "8")
      s += std::string("identity on sample: ") +
           (out.identity_on_sample ? "yes" : "no") + "\n";
  }
  s += std::string("consistency: ") + (out.consistency ? "ok" : "violated") +
       "\n";
  s += std::string("verdict: ") + (out.passed() ? "PASS" : "FAIL") + "\n";
  s += "wall: " + std::to_string(out.wall_ms) + " ms\n";
  return s;
}

std::string render_json(const Outcome& out) {
  ordered_json j;
  j["scenario"] = out.scenario_id;

  ordered_json conds = ordered_json::array();
  for (const auto& cond : out.conditions) {
    ordered_json cj;
    cj["id"] = cond.id;
    cj["holds"] = cond.holds;
    cj["points"] = cond.records.size();
    if (const auto* w = cond.worst_record()) cj["worst"] = record_json(*w);
    if (!cond.note.empty()) cj["note"] = cond.note;
    conds.push_back(std::move(cj));
  }
  j["conditions"] = std::move(conds);

  ordered_json concl;
  concl["mode"] = out.mode;
  if (!out.theorem.empty()) concl["theorem"] = out.theorem;
  concl["space"] = out.space_label;
  if (!out.mapping_text.empty()) concl["mapping"] = out.mapping_text;
  if (out.circle) concl["circle"] = circle_json(*out.circle);
  if (out.circle2) concl["circle2"] = circle_json(*out.circle2);
  if (out.mode == "check") {
    concl["fixed"] = out.conclusion_fixed;
    concl["empty"] = out.circle_empty;
    if (out.theorem == "8")
      concl["identity_on_sample"] = out.identity_on_sample;
  }
  if (!out.note.empty()) concl["note"] = out.note;
  if (out.axioms) {
    ordered_json ax;
    for (const auto* check :
         {&out.axioms->identity, &out.axioms->symmetry, &out.axioms->triangle}) {
      ordered_json cj;
      cj["passed"] = check->passed;
      if (!check->witness.empty()) cj["witness"] = check->witness;
      ax[check->axiom] = std::move(cj);
    }
    ax["points_checked"] = out.axioms->points_checked;
    concl["axioms"] = std::move(ax);
  }
  if (!out.picard.empty()) {
    ordered_json runs = ordered_json::array();
    for (const auto& run : out.picard) {
      ordered_json rj;
      rj["start"] = run.start.describe();
      rj["fixed"] = run.result.fixed.describe();
      rj["iterations"] = run.result.iterations;
      runs.push_back(std::move(rj));
    }
    concl["picard"] = std::move(runs);
    if (out.picard_agreement >= 0.0)
      concl["agreement"] = out.picard_agreement;
  }
  if (out.scan) {
    ordered_json sj;
    sj["candidates"] = out.scan->candidates;
    ordered_json hits = ordered_json::array();
    for (const auto& hit : out.scan->hits) hits.push_back(hit.describe());
    sj["hits"] = std::move(hits);
    concl["scan"] = std::move(sj);
  }
  if (out.mode == "search") {
    ordered_json sj;
    sj["hold"] = out.search_hold;
    sj["fail"] = out.search_fail;
    sj["tried"] = out.search_tried;
    ordered_json hits = ordered_json::array();
    for (const auto& hit : out.search_hits) {
      ordered_json hj;
      hj["mapping"] = hit.summary;
      hj["size"] = hit.size;
      hits.push_back(std::move(hj));
    }
    sj["hits"] = std::move(hits);
    concl["search"] = std::move(sj);
  }
  if (!out.enumerated.empty()) {
    ordered_json circles = ordered_json::array();
    for (const auto& c : out.enumerated) circles.push_back(circle_json(c));
    concl["fixed_circles"] = std::move(circles);
  }
  concl["verdict"] = out.passed() ? "PASS" : "FAIL";
  j["conclusion"] = std::move(concl);

  j["consistency"] = out.consistency;
  j["wall_ms"] = 0;
  j["version"] = kVersion;
  return j.dump(2) + "\n";
}

}  // namespace ccvms::runner
