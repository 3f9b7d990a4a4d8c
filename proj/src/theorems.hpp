#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "circle.hpp"
#include "space.hpp"

namespace ccvms::theorems {

struct CheckContext {
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
  int sample_size = 200;
  double grid_step = 0.01;
};

using Phi = std::function<algebra::Element(const space::Point&)>;

Phi phi(const space::Instance& s, const space::Point& center);

struct PointRecord {
  space::Point x;
  std::optional<space::Point> y;  // pair conditions only
  algebra::Element lhs;
  algebra::Element rhs;
  algebra::OrderVerdict verdict;
  std::string u_choice;  // which u satisfied a ciric pair, if any
};

struct ConditionReport {
  std::string id;
  bool holds = true;
  std::vector<PointRecord> records;
  int worst = -1;  // record with the least slack
  std::string note;

  const PointRecord* worst_record() const {
    return worst >= 0 ? &records[static_cast<std::size_t>(worst)] : nullptr;
  }
};

struct TheoremReport {
  std::string theorem;
  std::vector<ConditionReport> conditions;
  bool conclusion_fixed = false;
  bool circle_empty = false;
  bool identity_on_sample = false;  // theorem 8 only
  bool consistency = true;
  std::string note;
};

// One named circle condition (2.2 .. 2.7) evaluated over the given points;
// a is required by 2.7 and ignored elsewhere.
ConditionReport eval_condition(const std::string& id, const space::Instance& s,
                               const space::SelfMapping& t,
                               const circle::Circle& c,
                               const algebra::Element* a,
                               const std::vector<space::Point>& pts,
                               const CheckContext& ctx);

// Tx = x for every enumerable member; vacuously true on an empty circle,
// reported through *empty when given.
bool is_fixed_circle(const space::Instance& s, const space::SelfMapping& t,
                     const circle::Circle& c,
                     const std::vector<space::Point>& sample, double tol,
                     bool* empty = nullptr);

TheoremReport check_theorem5(const space::Instance& s,
                             const space::SelfMapping& t,
                             const circle::Circle& c,
                             const std::vector<space::Point>& sample,
                             const CheckContext& ctx);

TheoremReport check_theorem6(const space::Instance& s,
                             const space::SelfMapping& t,
                             const circle::Circle& c,
                             const std::vector<space::Point>& sample,
                             const CheckContext& ctx);

TheoremReport check_theorem7(const space::Instance& s,
                             const space::SelfMapping& t,
                             const circle::Circle& c,
                             const algebra::Element& a,
                             const std::vector<space::Point>& sample,
                             const CheckContext& ctx);

TheoremReport check_theorem8(const space::Instance& s,
                             const space::SelfMapping& t,
                             const algebra::Element& a,
                             const std::vector<space::Point>& sample,
                             const CheckContext& ctx);

enum class UniquenessKind { Banach, Kannan, Ciric };

// The contraction inequality over pairs (x on the circle, y off it).
ConditionReport check_uniqueness(const space::Instance& s,
                                 const space::SelfMapping& t,
                                 const circle::Circle& c, UniquenessKind kind,
                                 const algebra::Element& a,
                                 const std::vector<space::Point>& sample,
                                 const CheckContext& ctx);

std::vector<circle::Circle> enumerate_fixed_circles(
    const space::Instance& s, const space::SelfMapping& t,
    const std::vector<space::Point>& centers,
    const std::vector<space::Point>& sample, const CheckContext& ctx);

space::SelfMapping build_multi_circle_fixer(const space::Instance& s,
                                            const std::vector<circle::Circle>& circles,
                                            const space::Point& alpha,
                                            const CheckContext& ctx);

enum class ContractionKind { Banach, Kannan, Ciric, Caristi };

// Whole-space contraction check over sample pairs (caristi: single points).
ConditionReport verify_contraction(const space::Instance& s,
                                   const space::SelfMapping& t,
                                   ContractionKind kind,
                                   const algebra::Element* a, const Phi* potential,
                                   const std::vector<space::Point>& sample,
                                   const CheckContext& ctx);

struct PicardResult {
  space::Point fixed;
  int iterations = 0;
  std::vector<double> residuals;
};

PicardResult picard_fixed_point(const space::Instance& s,
                                const space::SelfMapping& t,
                                const space::Point& start, double tol,
                                int max_iter);

struct GridScanResult {
  int candidates = 0;
  std::vector<algebra::Element> hits;  // at most 10 kept
};

// Scans diagonal A with entries on a (-1,1) grid for one satisfying both
// theorem 7 conditions; an empty hit list is nonexistence evidence.
GridScanResult scan_theorem7_grid(const space::Instance& s,
                                  const space::SelfMapping& t,
                                  const circle::Circle& c,
                                  const std::vector<space::Point>& sample,
                                  const CheckContext& ctx);

}  // namespace ccvms::theorems
