#pragma once

#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ccvms::algebra {

enum class Kind { MatEntrywise, MatLoewner, Tuple, StepFn };

std::string kind_name(Kind kind);

// Which concrete algebra an element lives in. Elements carry their
// descriptor so mixed-instance arithmetic is rejected at run time.
struct Descriptor {
  Kind kind = Kind::MatLoewner;
  int dim = 2;
  double tolerance = 1e-9;

  static Descriptor mat_entrywise(int n, double tol = 1e-9);
  static Descriptor mat_loewner(int n, double tol = 1e-9);
  static Descriptor tuple(int n, double tol = 1e-9);
  static Descriptor step_fn(int pieces, double tol = 1e-9);

  bool is_matrix() const {
    return kind == Kind::MatEntrywise || kind == Kind::MatLoewner;
  }
  std::size_t value_count() const;
  // mat-entrywise pairs the max-entry norm with matrix multiplication,
  // so the C* identity breaks; the other instances satisfy it
  bool cstar_identity_expected() const { return kind != Kind::MatEntrywise; }
  std::string label() const;

  bool operator==(const Descriptor& other) const {
    return kind == other.kind && dim == other.dim;
  }
};

class Element {
 public:
  Element(Descriptor desc, std::vector<double> values);

  const Descriptor& descriptor() const { return desc_; }
  const std::vector<double>& values() const { return values_; }
  int dim() const { return desc_.dim; }

  double entry(int row, int col) const;  // matrix kinds only
  double component(int index) const;     // flat access, any kind

  std::string describe() const;

 private:
  Descriptor desc_;
  std::vector<double> values_;
};

Element zero(const Descriptor& desc);
Element unit(const Descriptor& desc);
Element scalar(const Descriptor& desc, double value);
Element diagonal(const Descriptor& desc, std::span<const double> entries);

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element mul(const Element& a, const Element& b);
Element scale(double factor, const Element& a);
Element involution(const Element& a);
Element conjugate(const Element& a, const Element& x);  // a* x a
Element invert(const Element& a);

double norm(const Element& a);
bool is_positive(const Element& a, double tol);
bool approx_equal(const Element& a, const Element& b, double tol);
bool commutes(const Element& a, const Element& b, double tol);

enum class Relation { Less, Equal, Greater, Incomparable };

std::string relation_name(Relation rel);

// Outcome of comparing a against b in the instance order. slack is the
// positivity margin of b - a: the least eigenvalue or entry, negative
// when a <= b fails by that amount.
struct OrderVerdict {
  Relation relation = Relation::Incomparable;
  double slack = 0.0;

  bool leq() const {
    return relation == Relation::Less || relation == Relation::Equal;
  }
};

OrderVerdict compare(const Element& a, const Element& b, double tol);

}  // namespace ccvms::algebra
